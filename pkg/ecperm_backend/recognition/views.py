import json
import logging

from django.conf import settings
from django.http import JsonResponse
from django.views.decorators.csrf import csrf_exempt
from django.views.decorators.http import require_POST

from .core.exceptions import ECPermError
from .core.modular import decompose
from .core.permutations import verify
from .core.recognizer import recognize
from .utils.classification import classification
from .serializers import (
    CertificateSerializer,
    ClassificationSerializer,
    ColoredGraphSerializer,
    MDTreeSerializer,
    QuotientLabelsSerializer,
    outcome_payload,
)

logger = logging.getLogger(__name__)


class BadRequest(Exception):
    def __init__(self, errors):
        self.errors = errors
        super().__init__(str(errors))


def _body(request):
    try:
        return json.loads(request.body or b'{}')
    except json.JSONDecodeError as e:
        raise BadRequest(f"invalid JSON: {e.msg}")
    except UnicodeDecodeError:
        raise BadRequest("request body is not valid UTF-8")


def _validated(serializer_class, data, key):
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        raise BadRequest(serializer.errors)
    return serializer.validated_data[key]


def json_endpoint(view):
    """Run ``view(body)`` and turn input problems into HTTP 400."""
    @csrf_exempt
    @require_POST
    def wrapper(request):
        try:
            return JsonResponse(view(_body(request)), safe=False)
        except BadRequest as e:
            return JsonResponse({'error': e.errors}, status=400)
        except ECPermError as e:
            logger.warning(f"{view.__name__} rejected input: {str(e)}")
            return JsonResponse({'error': str(e)}, status=400)
    wrapper.__name__ = view.__name__
    return wrapper


@json_endpoint
def recognize_view(body):
    graph = _validated(ColoredGraphSerializer, body.get('graph', body), 'graph')
    pins = None
    if body.get('quotient_labels'):
        pins = _validated(QuotientLabelsSerializer, body['quotient_labels'], 'pins')
    outcome = recognize(
        graph,
        quotient_labels=pins,
        check_orders=settings.DEBUG,
        order_check_max_n=settings.ECPERM_ORDER_CHECK_MAX_N,
    )
    return outcome_payload(graph, outcome)


@json_endpoint
def verify_view(body):
    if 'graph' not in body or 'certificate' not in body:
        raise BadRequest("expected 'graph' and 'certificate'")
    graph = _validated(ColoredGraphSerializer, body['graph'], 'graph')
    certificate = _validated(CertificateSerializer, body['certificate'], 'certificate')
    return {'valid': verify(graph, certificate.labeling, certificate.perms)}


@json_endpoint
def mdtree_view(body):
    graph = _validated(ColoredGraphSerializer, body.get('graph', body), 'graph')
    return MDTreeSerializer(decompose(graph)).data


@json_endpoint
def classify_view(body):
    graph = _validated(ColoredGraphSerializer, body.get('graph', body), 'graph')
    return ClassificationSerializer(classification(graph)).data
