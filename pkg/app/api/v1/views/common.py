"""Shared response handling for the JSON API"""
import logging

from flask import current_app, jsonify

from app.errors import RichardsonError

logger = logging.getLogger(__name__)


def respond(build, *args, **kwargs):
    """Run a report builder and wrap the outcome in the API envelope"""
    try:
        report = build(*args, **kwargs)
        payload = {'success': True, 'schema': current_app.config['JSON_SCHEMA_VERSION']}
        payload.update(report)
        return jsonify(payload)

    except RichardsonError as e:
        return jsonify({
            'success': False,
            'error': e.name,
            'message': str(e)
        }), 400

    except Exception as e:
        logger.exception("Unhandled error in %s", getattr(build, '__name__', build))
        return jsonify({
            'success': False,
            'error': type(e).__name__,
            'message': f'Internal error: {str(e)}'
        }), 500
