"""Cells, smoothness and K-component endpoints"""
from flask import request

from app.api.v1.views import api_bp
from app.api.v1.views.common import respond
from app.services import report_service
from app.utils import parse_partition, parse_permutation, parse_subset


@api_bp.route('/cells/<partition>', methods=['GET'])
def cells_partition(partition):
    top = request.args.get('top', 'false').lower() == 'true'
    return respond(lambda: report_service.cells_report(parse_partition(partition), top=top))


@api_bp.route('/smooth/<v>/<w>', methods=['GET'])
def smooth_pair(v, w):
    return respond(lambda: report_service.smooth_report(parse_permutation(v), parse_permutation(w)))


@api_bp.route('/kcomp/<int:n>', methods=['GET'])
def k_components(n):
    """σ(I) for ?subset=3,4,6,7, or every class when no subset is given"""
    subset = request.args.get('subset')
    return respond(lambda: report_service.kcomp_report(
        n, None if subset is None else parse_subset(subset)
    ))
