#!/usr/bin/env python3
"""
HTTP API tests

Usage: pytest test_api.py
"""


def get_json(client, path, status=200):
    response = client.get(path)
    assert response.status_code == status, response.get_data(as_text=True)
    return response.get_json()


def test_check(client):
    data = get_json(client, '/api/v1/check/12113123')
    assert data['success'] is True
    assert data['schema'] == '1'
    assert data['verdict'] == 'RICHARDSON'
    assert get_json(client, '/api/v1/check/11213213')['verdict'] == 'NOT_RICHARDSON'


def test_domain_errors(client):
    data = get_json(client, '/api/v1/check/211', status=400)
    assert data['success'] is False
    assert data['error'] == 'NotLatticeWord'
    assert get_json(client, '/api/v1/check/abc', status=400)['error'] == 'ParseError'
    assert get_json(client, '/api/v1/psi/11', status=400)['error'] == 'NotPrime'
    assert get_json(client, '/api/v1/count/2,3', status=400)['error'] == 'InvalidPartition'


def test_payload_keys_keep_their_order(client):
    data = get_json(client, '/api/v1/check/12113123')
    assert list(data)[:2] == ['success', 'schema']
    assert list(data['characterizations']) == [
        'definition', 'strong', 'word', 'crop', 'lslides', 'evacuation', 'gap', 'bruhat'
    ]


def test_evacuate(client):
    data = get_json(client, '/api/v1/evacuate/12113123?paths=true')
    assert data['evacuation']['word'] == '12312113'
    assert len(data['paths']) == 8
    assert 'paths' not in get_json(client, '/api/v1/evacuate/12113123')


def test_primes(client):
    assert get_json(client, '/api/v1/decompose/123123411213')['factors'] == ['123', '1234', '1', '1213']
    assert get_json(client, '/api/v1/psi/1213124')['psi'] == '11212'
    assert get_json(client, '/api/v1/psi-inv/4/11212')['psi_inverse'] == '1213124'
    assert get_json(client, '/api/v1/psi-inv/2')['psi_inverse'] == '12'


def test_counts(client):
    assert get_json(client, '/api/v1/count/4,2,2')['count'] == 15
    data = get_json(client, '/api/v1/count/3,2,1?q=true')
    assert data['q_count_text'] == 'q^7 + 2*q^8 + 2*q^9 + 2*q^10 + q^11'
    assert get_json(client, '/api/v1/motzkin/4')['motzkin'] == 9
    assert get_json(client, '/api/v1/refine/4')['total'] == 9
    assert get_json(client, '/api/v1/proportion/4')['proportion'] == '9/10'


def test_envelope(client):
    data = get_json(client, '/api/v1/envelope/1122')
    assert (data['v'], data['w'], data['gap'], data['n_lambda']) == ('1234', '3412', 4, 2)


def test_cells(client):
    data = get_json(client, '/api/v1/cells/2,2?top=true')
    assert data['cells'] == [{'v': '1324', 'w': '3142', 'dim': 2, 'top': True}]
    assert len(get_json(client, '/api/v1/cells/3,1')['cells']) == 7


def test_cell_limit_from_config(app, client):
    app.config['CELLS_MAX_SIZE'] = 3
    assert get_json(client, '/api/v1/cells/2,2', status=400)['error'] == 'SizeLimitExceeded'


def test_smooth(client):
    data = get_json(client, '/api/v1/smooth/15726348/75182364')
    assert data['richardson_smooth'] is True
    assert data['schubert_reflections'] == [[1, 2], [1, 3], [2, 3], [4, 5], [5, 8], [7, 8]]
    assert data['schubert_smooth'] and data['opposite_smooth']


def test_guemes(client):
    data = get_json(client, '/api/v1/guemes/1231114')
    assert data['first_row'] == [1, 5, 6]
    assert data['expansion'] == ['4765123', '5763124', '6735124', '6752134']
    assert len(data['tableaux']) == 4
    assert get_json(client, '/api/v1/guemes/1122', status=400)['error'] == 'NotHookShape'


def test_kcomp(client):
    data = get_json(client, '/api/v1/kcomp/7?subset=3,4,6,7')
    assert data['components'][0]['tableau']['rows'] == [[1, 3, 4, 6], [2, 7], [5]]
    assert len(get_json(client, '/api/v1/kcomp/4')['components']) == 8
