"""Complete edge-colored graphs and the simple graphs derived from them.

A ``ColoredGraph`` stores its coloring as a dense, read-only ``n x n`` table of
canonical colors ``1..k`` (diagonal ``0``). The original color labels found in
the input are kept in ``color_labels`` so graphs can be written back out
unchanged; canonical color ``c`` corresponds to ``color_labels[c - 1]``.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import connected_components

from .exceptions import (
    DuplicatePair,
    EmptyGraph,
    EmptySet,
    GraphError,
    InvalidColor,
    MissingPair,
    SelfLoop,
    UnknownColor,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoop((u, v))
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange((u, v))
            pairs.add((min(u, v), max(u, v)))
        return cls(n, frozenset(pairs))

    @classmethod
    def from_adjacency(cls, adjacency: np.ndarray) -> "SimpleGraph":
        iu, ju = np.nonzero(np.triu(adjacency, 1))
        return cls(adjacency.shape[0], frozenset(zip(iu.tolist(), ju.tolist())))

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            pairs = np.array(sorted(self.edges))
            adj[pairs[:, 0], pairs[:, 1]] = True
            adj[pairs[:, 1], pairs[:, 0]] = True
        return adj

    def complement(self) -> "SimpleGraph":
        adj = ~self.adjacency()
        np.fill_diagonal(adj, False)
        return SimpleGraph.from_adjacency(adj)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        vertices = list(vertices)
        adj = self.adjacency()[np.ix_(vertices, vertices)]
        return SimpleGraph.from_adjacency(adj)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def is_edgeless(self) -> bool:
        return not self.edges

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class Triangle:
    u: int
    v: int
    w: int
    colors: tuple

    @property
    def vertices(self) -> tuple:
        return (self.u, self.v, self.w)

    def is_rainbow(self) -> bool:
        return len(set(self.colors)) == 3


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """Complete k-edge-colored graph on vertices ``0..n-1``."""

    table: np.ndarray
    color_labels: tuple

    @classmethod
    def from_table(cls, labels: np.ndarray, palette: Optional[Sequence[int]] = None) -> "ColoredGraph":
        """Build from a symmetric table of color labels (diagonal ignored).

        Labels are numbered ``1..k`` in the order they take in ``palette``
        (labels missing from the table are skipped), or in increasing order
        when no palette is given.
        """
        labels = np.asarray(labels)
        if labels.ndim != 2 or labels.shape[0] != labels.shape[1]:
            raise GraphError(f"color table must be square, got shape {labels.shape}")
        n = labels.shape[0]
        if n == 0:
            raise EmptyGraph("a colored graph needs at least one vertex")
        if not np.array_equal(labels, labels.T):
            raise GraphError("color table is not symmetric")
        off = ~np.eye(n, dtype=bool)
        values = labels[off]
        if values.size and values.min() < 1:
            raise InvalidColor("colors must be positive integers")
        present = np.unique(values)
        if palette is None:
            order = present
        else:
            used = set(present.tolist())
            order = np.array([int(c) for c in dict.fromkeys(palette) if int(c) in used], dtype=np.int64)
            if len(order) != len(present):
                raise GraphError("color table uses labels outside the palette")
        sorter = np.argsort(order)
        canonical = sorter[np.searchsorted(order, values, sorter=sorter)]
        table = np.zeros((n, n), dtype=np.int32)
        table[off] = canonical + 1
        table.setflags(write=False)
        return cls(table, tuple(int(c) for c in order))

    @property
    def n(self) -> int:
        return self.table.shape[0]

    @property
    def k(self) -> int:
        return len(self.color_labels)

    def color(self, u: int, v: int) -> int:
        return int(self.table[u, v])

    def label_table(self) -> np.ndarray:
        """The coloring expressed in original labels (diagonal ``0``)."""
        lookup = np.array((0,) + self.color_labels, dtype=np.int64)
        return lookup[self.table]

    def edges(self) -> Iterator[tuple]:
        iu, ju = np.triu_indices(self.n, 1)
        for u, v, c in zip(iu.tolist(), ju.tolist(), self.table[iu, ju].tolist()):
            yield u, v, c

    def labeled_edges(self) -> list:
        return [[u, v, self.color_labels[c - 1]] for u, v, c in self.edges()]

    def written_edges(self) -> list:
        """Labeled edges grouped by canonical color, pairs sorted within a color.

        Read back in this order, the colors get the same numbering again.
        """
        iu, ju = np.triu_indices(self.n, 1)
        colors = self.table[iu, ju]
        order = np.lexsort((ju, iu, colors))
        return [[int(iu[x]), int(ju[x]), self.color_labels[colors[x] - 1]] for x in order]

    def color_class_sizes(self) -> np.ndarray:
        iu, ju = np.triu_indices(self.n, 1)
        return np.bincount(self.table[iu, ju], minlength=self.k + 1)[1:]

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        return f"ColoredGraph(n={self.n}, k={self.k})"


def build_colored_graph(n: int, assignments: Iterable[Sequence[int]]) -> ColoredGraph:
    if n < 1:
        raise EmptyGraph("a colored graph needs at least one vertex")
    rows = np.asarray(list(assignments), dtype=np.int64).reshape(-1, 3)
    u, v, c = rows[:, 0], rows[:, 1], rows[:, 2]

    bad = np.flatnonzero((u < 0) | (u >= n) | (v < 0) | (v >= n))
    if bad.size:
        raise VertexOutOfRange((int(u[bad[0]]), int(v[bad[0]])))
    bad = np.flatnonzero(u == v)
    if bad.size:
        raise SelfLoop((int(u[bad[0]]), int(v[bad[0]])))
    bad = np.flatnonzero(c < 1)
    if bad.size:
        raise InvalidColor(f"color {int(c[bad[0]])} of pair ({int(u[bad[0]])}, {int(v[bad[0]])}) is not positive")

    lo, hi = np.minimum(u, v), np.maximum(u, v)
    keys = lo * n + hi
    order = np.argsort(keys, kind="stable")
    repeated = order[1:][keys[order][1:] == keys[order][:-1]]
    if repeated.size:
        # earliest assignment that repeats a pair seen before it
        i = int(repeated.min())
        raise DuplicatePair((int(lo[i]), int(hi[i])))

    labels = np.zeros((n, n), dtype=np.int64)
    labels[lo, hi] = c
    labels[hi, lo] = c
    iu, ju = np.triu_indices(n, 1)
    missing = np.flatnonzero(labels[iu, ju] == 0)
    if missing.size:
        raise MissingPair((int(iu[missing[0]]), int(ju[missing[0]])))
    # colors are numbered in the order the assignments first use them
    _, first = np.unique(c, return_index=True)
    return ColoredGraph.from_table(labels, palette=c[np.sort(first)].tolist())


def monochromatic_subgraph(G: ColoredGraph, i: int) -> SimpleGraph:
    if not 1 <= i <= G.k:
        raise UnknownColor(f"color {i} is not in 1..{G.k}")
    return SimpleGraph.from_adjacency(G.table == i)


def find_rainbow_triangle(G: ColoredGraph) -> Optional[Triangle]:
    """Lexicographically smallest ``(u, v, w)`` with three distinct colors."""
    if G.k < 3:
        return None
    T = G.table
    n = G.n
    for u in range(n - 2):
        row = T[u, u + 1:]
        sub = T[u + 1:, u + 1:]
        mask = (row[:, None] != row[None, :]) & (sub != row[:, None]) & (sub != row[None, :])
        mask = np.triu(mask, 1)
        hits = np.argwhere(mask)
        if hits.size:
            v, w = (int(x) + u + 1 for x in hits[0])
            return Triangle(u, v, w, (G.color(u, v), G.color(u, w), G.color(v, w)))
    return None


def induced_subgraph(G: ColoredGraph, W: Iterable[int]) -> tuple:
    """``G[W]`` with colors renumbered, plus the old -> new vertex map."""
    vertices = sorted(set(int(w) for w in W))
    if not vertices:
        raise EmptySet("induced subgraph needs a non-empty vertex set")
    if vertices[0] < 0 or vertices[-1] >= G.n:
        raise VertexOutOfRange((vertices[0], vertices[-1]))
    labels = G.label_table()[np.ix_(vertices, vertices)]
    return ColoredGraph.from_table(labels, palette=G.color_labels), {v: i for i, v in enumerate(vertices)}


def disconnected_color(G: ColoredGraph) -> Optional[int]:
    for i in range(1, G.k + 1):
        count, _ = connected_components(G.table == i, directed=False)
        if count > 1:
            return i
    return None


def lift_simple_graph(H: SimpleGraph) -> ColoredGraph:
    """Complete graph with color 1 on the edges of ``H`` and 2 elsewhere."""
    labels = np.where(H.adjacency(), 1, 2)
    return ColoredGraph.from_table(labels)


def substitute(skeleton: ColoredGraph, parts: Sequence[ColoredGraph]) -> ColoredGraph:
    """Replace vertex ``j`` of ``skeleton`` by ``parts[j]``.

    Vertices of part ``j`` become a consecutive block; colors are matched
    through their original labels.
    """
    if len(parts) != skeleton.n:
        raise GraphError(f"skeleton has {skeleton.n} vertices but {len(parts)} parts were given")
    sizes = np.array([p.n for p in parts])
    block = np.repeat(np.arange(len(parts)), sizes)
    labels = skeleton.label_table()[np.ix_(block, block)]
    start = 0
    for part in parts:
        stop = start + part.n
        labels[start:stop, start:stop] = part.label_table()
        start = stop
    return ColoredGraph.from_table(labels)
