"""Counting endpoints"""
from flask import request

from app.api.v1.views import api_bp
from app.api.v1.views.common import respond
from app.services import report_service
from app.utils import parse_partition


@api_bp.route('/count/<partition>', methods=['GET'])
def count_partition(partition):
    with_q = request.args.get('q', 'false').lower() == 'true'
    return respond(lambda: report_service.count_report(parse_partition(partition), q=with_q))


@api_bp.route('/motzkin/<int:n>', methods=['GET'])
def motzkin_number(n):
    return respond(report_service.motzkin_report, n)


@api_bp.route('/refine/<int:n>', methods=['GET'])
def refine_motzkin(n):
    return respond(report_service.refine_report, n)


@api_bp.route('/proportion/<int:n>', methods=['GET'])
def richardson_proportion(n):
    return respond(report_service.proportion_report, n)
