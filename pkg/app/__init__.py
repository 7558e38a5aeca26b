import logging
import os

from flask import Flask

from app.config import Config


def configure_logging(level):
    """Send diagnostics to stderr at the configured level"""
    logging.basicConfig(
        level=level,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    logging.getLogger().setLevel(level)


def create_app(config_overrides=None):
    from app.api.v1.views import api_bp
    from app.cli import cli

    app = Flask(__name__)
    app.config.from_object(Config)
    if config_overrides:
        app.config.update(config_overrides)

    # keep report keys in insertion order
    app.json.sort_keys = False

    configure_logging(app.config['LOG_LEVEL'])

    # Debug mode should be set via environment variable in production
    app.debug = os.environ.get('FLASK_DEBUG', 'False').lower() == 'true'

    app.register_blueprint(api_bp)
    app.cli.add_command(cli)

    return app
