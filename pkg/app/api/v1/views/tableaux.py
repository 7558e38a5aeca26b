"""Tableau endpoints: recognition, evacuation, factorization, Ψ, Güemes"""
from flask import request

from app.api.v1.views import api_bp
from app.api.v1.views.common import respond
from app.services import report_service
from app.utils import parse_word


@api_bp.route('/check/<word>', methods=['GET'])
def check_word(word):
    """Verdicts of every Richardson characterization"""
    return respond(lambda: report_service.check_report(parse_word(word)))


@api_bp.route('/evacuate/<word>', methods=['GET'])
def evacuate_word(word):
    paths = request.args.get('paths', 'false').lower() == 'true'
    return respond(lambda: report_service.evacuate_report(parse_word(word), paths=paths))


@api_bp.route('/decompose/<word>', methods=['GET'])
def decompose_word(word):
    return respond(lambda: report_service.decompose_report(parse_word(word)))


@api_bp.route('/psi/<word>', methods=['GET'])
def psi_word(word):
    return respond(lambda: report_service.psi_report(parse_word(word)))


@api_bp.route('/psi-inv/<int:ell>', methods=['GET'])
@api_bp.route('/psi-inv/<int:ell>/<word>', methods=['GET'])
def psi_inverse_word(ell, word=''):
    """Inverse of Ψ; the empty word is addressed without a word segment"""
    return respond(lambda: report_service.psi_inverse_report(parse_word(word), ell))


@api_bp.route('/envelope/<word>', methods=['GET'])
def envelope_word(word):
    return respond(lambda: report_service.envelope_report(parse_word(word)))


@api_bp.route('/guemes/<word>', methods=['GET'])
def guemes_word(word):
    return respond(lambda: report_service.guemes_report(parse_word(word)))
