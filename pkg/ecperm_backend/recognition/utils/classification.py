from django.conf import settings

from recognition.core.classes import SymbolicMap, check_ultrametric_axioms, is_gallai, is_symbolic_ultrametric_graph
from recognition.core.permutations import Certificate
from recognition.core.recognizer import recognize


def classification(graph):
    """Class flags for ``graph``; the quartic axiom scan is skipped on large inputs."""
    axioms = None
    if graph.n <= settings.ECPERM_AXIOMS_MAX_N:
        axioms = check_ultrametric_axioms(SymbolicMap(graph))
    return {
        'n': graph.n,
        'k': graph.k,
        'gallai': is_gallai(graph),
        'symbolic_ultrametric': is_symbolic_ultrametric_graph(graph),
        'ultrametric_axioms': axioms,
        'colored_permutation': isinstance(recognize(graph), Certificate),
    }
