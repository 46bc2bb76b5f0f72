"""Companion graph classes: Gallai colorings, cographs, symbolic ultrametrics
and separable permutations."""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import networkx as nx
import numpy as np

from .colored import ColoredGraph, SimpleGraph, find_rainbow_triangle, monochromatic_subgraph
from .exceptions import GraphError
from .permutations import Permutation, permutation_graph

logger = logging.getLogger(__name__)

SEPARABLE_OBSTRUCTIONS = ((2, 4, 1, 3), (3, 1, 4, 2))


class AsymmetricMap(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class SymbolicMap:
    """Symmetric map from pairs of distinct elements to ``1..k``."""

    graph: ColoredGraph

    @classmethod
    def from_matrix(cls, delta) -> "SymbolicMap":
        delta = np.asarray(delta)
        off = ~np.eye(delta.shape[0], dtype=bool)
        if not np.array_equal(np.where(off, delta, 0), np.where(off, delta.T, 0)):
            raise AsymmetricMap("delta(x, y) must equal delta(y, x)")
        return cls(ColoredGraph.from_table(np.where(off, delta, 0)))

    @classmethod
    def from_function(cls, n: int, delta: Callable[[int, int], int]) -> "SymbolicMap":
        return cls.from_matrix([[delta(x, y) if x != y else 0 for y in range(n)] for x in range(n)])

    @property
    def n(self) -> int:
        return self.graph.n

    def __call__(self, x: int, y: int) -> int:
        return self.graph.color(x, y)


def is_gallai(G: ColoredGraph) -> bool:
    return find_rainbow_triangle(G) is None


def is_cograph(H: SimpleGraph) -> bool:
    """Cotree construction: split into components, alternating with the complement."""
    stack = [H.to_networkx()]
    while stack:
        graph = stack.pop()
        if graph.number_of_nodes() <= 1:
            continue
        components = list(nx.connected_components(graph))
        if len(components) == 1:
            complement = nx.complement(graph)
            components = list(nx.connected_components(complement))
            if len(components) == 1:
                return False
            graph = complement
        stack.extend(graph.subgraph(component).copy() for component in components)
    return True


def find_induced_p4(H: SimpleGraph) -> Optional[tuple]:
    """First induced path ``a - b - c - d`` found by a quartic scan."""
    adj = H.adjacency()
    for quad in itertools.combinations(range(H.n), 4):
        edges = sum(adj[x, y] for x, y in itertools.combinations(quad, 2))
        if edges != 3:
            continue
        for a, b, c, d in itertools.permutations(quad):
            if a < d and adj[a, b] and adj[b, c] and adj[c, d]:
                return (a, b, c, d)
    return None


def check_ultrametric_axioms(d: SymbolicMap) -> bool:
    table = d.graph.table
    n = d.n
    for x, y, z in itertools.combinations(range(n), 3):
        if len({table[x, y], table[x, z], table[y, z]}) > 2:
            return False
    if n < 4:
        return True
    distinct = ~np.eye(n, dtype=bool)
    for x in range(n):
        # axes: y, u, v
        xy = table[x][:, None, None]
        yu = table[:, :, None]
        uv = table[None, :, :]
        vy = table.T[:, None, :]
        xv = table[x][None, None, :]
        xu = table[x][None, :, None]
        pattern = (xy == yu) & (yu == uv) & (uv != vy) & (vy == xv) & (xv == xu)
        valid = (
            distinct[:, :, None]
            & distinct[None, :, :]
            & distinct[:, None, :]
            & distinct[x][:, None, None]
            & distinct[x][None, :, None]
            & distinct[x][None, None, :]
        )
        if (pattern & valid).any():
            return False
    return True


def is_symbolic_ultrametric_graph(G: ColoredGraph) -> bool:
    if not is_gallai(G):
        return False
    return all(is_cograph(monochromatic_subgraph(G, i)) for i in range(1, G.k + 1))


def is_separable(pi: Permutation) -> bool:
    return is_cograph(permutation_graph(pi))


def contains_pattern(pi: Permutation, pattern) -> bool:
    m = len(pattern)
    for positions in itertools.combinations(range(len(pi)), m):
        values = [pi.seq[p] for p in positions]
        ranks = tuple(sorted(values).index(x) + 1 for x in values)
        if ranks == tuple(pattern):
            return True
    return False


def avoids_separable_patterns(pi: Permutation) -> bool:
    return not any(contains_pattern(pi, pattern) for pattern in SEPARABLE_OBSTRUCTIONS)
