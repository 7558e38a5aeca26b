import pytest

from app import create_app


@pytest.fixture
def app():
    app = create_app({'TESTING': True, 'LOG_LEVEL': 'WARNING'})
    yield app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


def word_of(text):
    return tuple(int(ch) for ch in text)
