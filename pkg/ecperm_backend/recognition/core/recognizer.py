"""Recognition of complete edge-colored permutation graphs.

The pipeline:

1. decompose ``G``; a prime quotient with three or more colors rules ``G``
   out and always contains a rainbow triangle, which is lifted to ``G``;
2. realize every two-colored prime quotient as a permutation graph (only one
   color class needs checking since the other one is its complement);
3. series quotients keep their children in order of smallest vertex;
4. walk the tree depth-first, children ordered by their quotient labels, to
   get the labeling;
5. sort the vertices once per color by the induced order and read off the
   permutations.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Callable, Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from joblib import Parallel, delayed

from .colored import (
    ColoredGraph,
    Triangle,
    find_rainbow_triangle,
    induced_subgraph,
    monochromatic_subgraph,
)
from .exceptions import (
    ArityMismatch,
    EmptySet,
    IncompleteLabelings,
    InvalidQuotientLabeling,
    NotTotalOrder,
    RecognitionError,
    TooLarge,
)
from .modular import LCATable, MDTree, NodeKind, decompose, is_module, lca_table
from .orientation import realize_prime
from .permutations import Certificate, Labeling, Permutation, recognize_simple, verify

logger = logging.getLogger(__name__)

QuotientLabelings = Dict[frozenset, Labeling]

THEOREM_ITEMS = ("i", "ii", "iii", "iv", "v")


class ObstructionKind(str, Enum):
    RAINBOW_TRIANGLE = "rainbow_triangle"
    WIDE_QUOTIENT = "wide_quotient"
    NON_PERMUTATION_QUOTIENT = "non_permutation_quotient"


@dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    triangle: Optional[Triangle] = None
    module: Optional[tuple] = None
    quotient_colors: tuple = ()
    color: Optional[int] = None


class Restriction(NamedTuple):
    graph: ColoredGraph
    certificate: Certificate
    vertex_map: dict
    color_map: dict


def labelings_from_pins(tree: MDTree, pins: Mapping[Iterable[int], Sequence[int]]) -> QuotientLabelings:
    """Turn ``{module: [one vertex per child, in label order]}`` into quotient labelings."""
    labelings = {}
    for module, order in pins.items():
        node = tree.node_of(module)
        if node is None or node.is_leaf:
            raise InvalidQuotientLabeling(f"{sorted(module)} is not a non-trivial strong module")
        owner = {}
        for j, child_id in enumerate(node.children):
            for v in tree.node(child_id).vertices:
                owner[v] = j
        try:
            children = [owner[v] for v in order]
        except KeyError as e:
            raise InvalidQuotientLabeling(f"vertex {e.args[0]} is not in module {sorted(module)}") from e
        if sorted(children) != list(range(len(node.children))):
            raise InvalidQuotientLabeling(f"order {list(order)} does not name each child of {sorted(module)} once")
        labels = [0] * len(children)
        for position, j in enumerate(children):
            labels[j] = position + 1
        labelings[node.module] = Labeling(tuple(labels))
    return labelings


def _realize_all(quotients: list, jobs: int) -> list:
    if jobs > 1 and len(quotients) > 1:
        return Parallel(n_jobs=jobs, prefer="threads")(delayed(realize_prime)(q) for q in quotients)
    return [realize_prime(q) for q in quotients]


def _lift_triangle(G: ColoredGraph, node, triangle: Triangle) -> Triangle:
    u, v, w = sorted(node.representatives[x] for x in triangle.vertices)
    return Triangle(u, v, w, (G.color(u, v), G.color(u, w), G.color(v, w)))


def recognize(
    G: ColoredGraph,
    quotient_labels: Optional[Mapping[Iterable[int], Sequence[int]]] = None,
    jobs: int = 1,
    check_orders: bool = False,
    order_check_max_n: int = 64,
) -> Union[Certificate, Obstruction]:
    if G.n == 1:
        return Certificate(Labeling((1,)), ())
    tree = decompose(G)
    primes = [node for node in tree if node.kind == NodeKind.PRIME]
    logger.debug(f"recognizing n={G.n} k={G.k}: {len(tree)} tree nodes, {len(primes)} prime")

    for node in primes:
        if node.quotient.k >= 3:
            triangle = find_rainbow_triangle(node.quotient)
            if triangle is None:
                raise RecognitionError(f"prime quotient of {list(node.vertices)} has no rainbow triangle")
            witness = _lift_triangle(G, node, triangle)
            logger.info(f"rainbow triangle {witness.vertices} in a {node.quotient.k}-colored prime quotient")
            return Obstruction(ObstructionKind.RAINBOW_TRIANGLE, witness, node.vertices, node.colors)

    labelings = {}
    for node, result in zip(primes, _realize_all([node.quotient for node in primes], jobs)):
        if result is None:
            logger.info(f"prime quotient of {list(node.vertices)} is not a permutation graph")
            return Obstruction(
                ObstructionKind.NON_PERMUTATION_QUOTIENT,
                module=node.vertices,
                quotient_colors=node.colors,
                color=node.colors[0],
            )
        labelings[node.module] = result[0]

    pinned = labelings_from_pins(tree, quotient_labels) if quotient_labels else {}
    labelings.update(pinned)
    for node in tree.internal_nodes():
        labelings.setdefault(node.module, Labeling.identity(len(node.children)))

    labeling = build_prec(tree, labelings)
    lca = lca_table(tree)
    check_pairs = check_orders and G.n <= order_check_max_n
    try:
        perms = tuple(build_color_order(G, lca, labeling, i, check_pairs) for i in range(1, G.k + 1))
    except NotTotalOrder as e:
        if pinned:
            raise InvalidQuotientLabeling(f"pinned quotient labelings do not give a certificate: {str(e)}") from e
        raise
    if not verify(G, labeling, perms):
        if pinned:
            raise InvalidQuotientLabeling("pinned quotient labelings do not give a certificate")
        raise RecognitionError("assembled certificate failed verification")
    return Certificate(labeling, perms)


def build_prec(tree: MDTree, labelings: Mapping[frozenset, Labeling]) -> Labeling:
    labels = [0] * tree.n
    next_label = 1
    stack = [tree.root]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            labels[node.vertices[0]] = next_label
            next_label += 1
            continue
        local = labelings.get(node.module)
        if local is None:
            raise IncompleteLabelings(f"no quotient labeling for module {list(node.vertices)}")
        if local.n != len(node.children):
            raise IncompleteLabelings(
                f"quotient labeling of {list(node.vertices)} has {local.n} labels for {len(node.children)} children"
            )
        ordered = local.order()
        stack.extend(tree.node(node.children[j]) for j in reversed(ordered))
    return Labeling(tuple(labels))


def color_precedes(G: ColoredGraph, lca: LCATable, labeling: Labeling, i: int) -> Callable[[int, int], bool]:
    """Comparator for the order of color ``i``: ``u`` comes first unless the
    pair's children at their smallest common module see each other in color
    ``i`` with ``u`` labeled first, or in another color with ``u`` labeled last."""
    labels = labeling.label_of
    nodes = lca.tree.nodes
    table = G.table

    def precedes(u, v):
        node = nodes[lca.node[u, v]]
        a, b = lca.child[u, v], lca.child[v, u]
        same = table[node.representatives[a], node.representatives[b]] == i
        return same if labels[u] > labels[v] else not same

    return precedes


def build_color_order(
    G: ColoredGraph, lca: LCATable, labeling: Labeling, i: int, check_pairs: bool = False
) -> Permutation:
    labels = labeling.label_of
    precedes = color_precedes(G, lca, labeling, i)
    order = sorted(range(G.n), key=cmp_to_key(lambda u, v: -1 if precedes(u, v) else 1))
    for u, v in zip(order, order[1:]):
        if not precedes(u, v):
            raise NotTotalOrder(f"color {i}: order is not transitive around vertices {u} and {v}")
    if check_pairs:
        for a, b in itertools.combinations(range(G.n), 2):
            if not precedes(order[a], order[b]):
                raise NotTotalOrder(f"color {i}: {order[a]} sorted before {order[b]} against the comparator")
    return Permutation(tuple(labels[v] for v in order))


def restrict(G: ColoredGraph, certificate: Certificate, M: Iterable[int]) -> Restriction:
    vertices = sorted(set(M))
    if not vertices:
        raise EmptySet("restriction needs a non-empty vertex set")
    if certificate.k != G.k or certificate.labeling.n != G.n:
        raise ArityMismatch(f"certificate does not match a graph with n={G.n} k={G.k}")
    graph, vertex_map = induced_subgraph(G, vertices)
    labeling = certificate.labeling

    kept = sorted(labeling[v] for v in vertices)
    compress = {label: rank + 1 for rank, label in enumerate(kept)}
    restricted_labeling = Labeling(tuple(compress[labeling[v]] for v in vertices))

    surviving = [c for c in range(1, G.k + 1) if G.color_labels[c - 1] in graph.color_labels]
    color_map = {c: new for new, c in enumerate(surviving, start=1)}
    perms = []
    for c in surviving:
        pi = certificate.perms[c - 1]
        positions = pi.positions()
        slots = sorted(int(positions[label]) for label in kept)
        perms.append(Permutation(tuple(compress[pi.seq[p]] for p in slots)))
    return Restriction(graph, Certificate(restricted_labeling, tuple(perms)), vertex_map, color_map)


def _accepted(G: ColoredGraph) -> bool:
    return isinstance(recognize(G), Certificate)


def theorem1_check(G: ColoredGraph, item: str, max_n: int = 8) -> bool:
    if item not in THEOREM_ITEMS:
        raise ValueError(f"unknown item {item!r}; expected one of {', '.join(THEOREM_ITEMS)}")
    if item == "i":
        return _accepted(G)
    if item == "ii":
        if G.n > max_n:
            raise TooLarge(G.n, max_n, "induced-subgraph enumeration")
        for size in range(3, G.n + 1):
            for subset in itertools.combinations(range(G.n), size):
                if not _accepted(induced_subgraph(G, subset)[0]):
                    return False
        return True
    if item == "v":
        if find_rainbow_triangle(G) is not None:
            return False
        return all(recognize_simple(monochromatic_subgraph(G, i)) is not None for i in range(1, G.k + 1))

    tree = decompose(G)
    if item == "iii":
        return all(_accepted(node.quotient) for node in tree.internal_nodes())
    for node in tree.internal_nodes():
        if node.kind != NodeKind.PRIME:
            continue
        if node.quotient.k != 2 or not _accepted(node.quotient):
            return False
    return True


def _wide_prime(G: ColoredGraph, module: Sequence[int]):
    sub, _ = induced_subgraph(G, module)
    root = decompose(sub).root
    return root if root.kind == NodeKind.PRIME else None


def validate_obstruction(G: ColoredGraph, obstruction: Obstruction) -> bool:
    """Re-check an obstruction's witness directly against ``G``."""
    if obstruction.kind == ObstructionKind.RAINBOW_TRIANGLE:
        triangle = obstruction.triangle
        if triangle is None or len(set(triangle.vertices)) != 3:
            return False
        u, v, w = triangle.vertices
        colors = (int(G.table[u, v]), int(G.table[u, w]), int(G.table[v, w]))
        if colors != tuple(triangle.colors) or len(set(colors)) != 3:
            return False
        if obstruction.module is None:
            return True

    module = obstruction.module
    if module is None or len(module) < 3 or not is_module(G, module):
        return False
    root = _wide_prime(G, module)
    if root is None:
        return False
    if obstruction.kind in (ObstructionKind.RAINBOW_TRIANGLE, ObstructionKind.WIDE_QUOTIENT):
        return root.quotient.k >= 3

    if root.quotient.k != 2 or obstruction.color is None:
        return False
    label = G.color_labels[obstruction.color - 1]
    if label not in root.quotient.color_labels:
        return False
    side = root.quotient.color_labels.index(label) + 1
    return recognize_simple(monochromatic_subgraph(root.quotient, side)) is None
