from flask import Blueprint

api_bp = Blueprint('api_bp', __name__, url_prefix='/api/v1')

from app.api.v1.views import tableaux
from app.api.v1.views import counts
from app.api.v1.views import springer
