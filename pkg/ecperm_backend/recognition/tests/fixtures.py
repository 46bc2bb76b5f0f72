"""Graphs shared by the test modules.

Vertices named by letters map to ids in alphabetical order
(``a = 0``, ``b = 1``, ...); numbered vertices are shifted down by one.
"""
import itertools

import numpy as np
from hypothesis import strategies as st

from recognition.core.colored import ColoredGraph, SimpleGraph, build_colored_graph
from recognition.core.permutations import Labeling, Permutation, generate_colored


def graph_from_classes(n, classes, default):
    """Colored graph from ``{color: [pairs]}``; every other pair gets ``default``.

    Assignments are listed by increasing color, so canonical colors follow the
    labels' order.
    """
    colored = {}
    for color, pairs in classes.items():
        for u, v in pairs:
            colored[frozenset((u, v))] = color
    assignments = [(u, v, colored.get(frozenset((u, v)), default)) for u, v in itertools.combinations(range(n), 2)]
    return build_colored_graph(n, sorted(assignments, key=lambda row: row[2]))


def nested_modules_graph():
    """Seven vertices, four colors: modules {0,1}, {2,3,4} and {3,4} below a prime root."""
    return graph_from_classes(
        7,
        {
            1: [(0, 5), (1, 5), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)],
            2: [(2, 3), (2, 4)],
            4: [(0, 1)],
        },
        default=3,
    )


def rainbow_prime_graph():
    """a, b, c form a module seen in colors 1, 3, 4 by d, e, f; d, e, f is rainbow."""
    a, b, c, d, e, f = range(6)
    return graph_from_classes(
        6,
        {
            1: [(a, d), (b, d), (c, d)],
            3: [(a, e), (b, e), (c, e), (d, f)],
            4: [(a, f), (b, f), (c, f), (e, f)],
        },
        default=2,
    )


# e=1, d=2, b=3, c=4, a=5, h=6, g=7, f=8
EIGHT_LABELS = (5, 3, 4, 2, 1, 8, 7, 6)
EIGHT_PERMS = (
    (1, 3, 5, 2, 4, 7, 6, 8),
    (6, 7, 1, 8, 4, 2, 5, 3),
    (2, 3, 4, 5, 8, 1, 6, 7),
)
# one vertex per child of each module, in the order of their quotient labels
EIGHT_PINS = {
    frozenset(range(8)): [4, 0, 6, 5],
    frozenset({0, 1, 2, 3}): [3, 1, 2, 0],
    frozenset({6, 7}): [7, 6],
}


def eight_vertex_graph():
    return generate_colored(Labeling(EIGHT_LABELS), [Permutation(p) for p in EIGHT_PERMS])


SEVEN_PI = (1, 5, 2, 4, 7, 3, 6)
SEVEN_PI_BAR = (6, 3, 7, 4, 2, 5, 1)
FOUR_PERMS = (
    (2, 1, 3, 4, 7, 5, 6),
    (4, 1, 2, 3, 5, 6, 7),
    (1, 2, 3, 4, 6, 5, 7),
    (5, 6, 7, 3, 1, 2, 4),
)


def four_perm_graph():
    return generate_colored(Labeling.identity(7), [Permutation(p) for p in FOUR_PERMS])


def rainbow_k3():
    return build_colored_graph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])


def one_colored(n, color=1):
    return build_colored_graph(n, [(u, v, color) for u, v in itertools.combinations(range(n), 2)])


def path_graph(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def lifted_p4_with_partner():
    """Two colors, color 1 an induced P4 plus an isolated vertex: rainbow free,
    recognized, but not a symbolic ultrametric."""
    return graph_from_classes(5, {1: [(0, 1), (1, 2), (2, 3)]}, default=2)


def alternating_chain(n):
    """Pair ``{i, j}`` colored by the parity of ``min(i, j)``: every suffix
    ``{i, ..., n - 1}`` is a strong module, one series node per level."""
    index = np.arange(n)
    return ColoredGraph.from_table(np.minimum.outer(index, index) % 2 + 1)


def restricted_growth_strings(length):
    """Color assignments of ``length`` pairs, one per coloring up to renaming."""
    if length == 0:
        yield ()
        return
    stack = [(1,)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == length:
            yield prefix
            continue
        for c in range(max(prefix) + 1, 0, -1):
            stack.append(prefix + (c,))


def all_colorings(n):
    pairs = list(itertools.combinations(range(n), 2))
    for colors in restricted_growth_strings(len(pairs)):
        yield build_colored_graph(n, [(u, v, c) for (u, v), c in zip(pairs, colors)])


@st.composite
def colored_graphs(draw, min_n=1, max_n=6, max_k=4):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    m = n * (n - 1) // 2
    colors = draw(st.lists(st.integers(min_value=1, max_value=max_k), min_size=m, max_size=m))
    pairs = itertools.combinations(range(n), 2)
    return build_colored_graph(n, [(u, v, c) for (u, v), c in zip(pairs, colors)])


@st.composite
def simple_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    m = n * (n - 1) // 2
    bits = draw(st.lists(st.booleans(), min_size=m, max_size=m))
    pairs = itertools.combinations(range(n), 2)
    return SimpleGraph.from_edges(n, [pair for pair, bit in zip(pairs, bits) if bit])


@st.composite
def permutations(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))
