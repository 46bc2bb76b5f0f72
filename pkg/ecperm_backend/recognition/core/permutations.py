"""Permutations, labelings, and (colored) permutation graphs.

Permutations are 1-indexed sequences as usual in the literature; vertex ids are
0-indexed and a ``Labeling`` maps them onto ``1..n``. A pair ``{u, v}`` with
``l(u) > l(v)`` is *inverted* by ``pi`` when ``l(u)`` occurs before ``l(v)``
in ``pi``.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .colored import ColoredGraph, SimpleGraph, lift_simple_graph
from .exceptions import (
    ArityMismatch,
    DegenerateGraph,
    EmptyColorClass,
    InvalidLabeling,
    InvalidPermutation,
    NotARealization,
    OverlapPair,
    UncoveredPair,
)

logger = logging.getLogger(__name__)


def _is_bijection(values) -> bool:
    n = len(values)
    seen = np.zeros(n + 1, dtype=bool)
    for x in values:
        if not isinstance(x, (int, np.integer)) or not 1 <= x <= n or seen[x]:
            return False
        seen[x] = True
    return True


@dataclass(frozen=True)
class Permutation:
    seq: tuple

    def __post_init__(self):
        seq = tuple(int(x) for x in self.seq)
        if not seq or not _is_bijection(seq):
            raise InvalidPermutation(f"{self.seq!r} is not a permutation of 1..{len(self.seq)}")
        object.__setattr__(self, "seq", seq)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.seq) + ")"

    def positions(self) -> np.ndarray:
        """``positions()[x]`` is the 0-based index of value ``x`` (index 0 unused)."""
        pos = np.zeros(len(self.seq) + 1, dtype=np.int64)
        pos[list(self.seq)] = np.arange(len(self.seq))
        return pos

    def inverse(self) -> "Permutation":
        return Permutation(tuple((self.positions()[1:] + 1).tolist()))

    def reverse(self) -> "Permutation":
        return Permutation(self.seq[::-1])

    def inversions(self) -> int:
        # Fenwick tree over values
        n = len(self.seq)
        tree = [0] * (n + 1)
        count = 0
        for seen, x in enumerate(self.seq):
            smaller = 0
            i = x
            while i > 0:
                smaller += tree[i]
                i -= i & -i
            count += seen - smaller
            i = x
            while i <= n:
                tree[i] += 1
                i += i & -i
        return count


@dataclass(frozen=True)
class Labeling:
    label_of: tuple

    def __post_init__(self):
        labels = tuple(int(x) for x in self.label_of)
        if not labels or not _is_bijection(labels):
            raise InvalidLabeling(f"{self.label_of!r} is not a bijection onto 1..{len(self.label_of)}")
        object.__setattr__(self, "label_of", labels)

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_order(cls, vertices: Sequence[int]) -> "Labeling":
        """Label the listed vertices ``1, 2, ...`` in that order."""
        labels = [0] * len(vertices)
        for position, v in enumerate(vertices):
            if not 0 <= v < len(vertices) or labels[v]:
                raise InvalidLabeling(f"{list(vertices)!r} is not an ordering of 0..{len(vertices) - 1}")
            labels[v] = position + 1
        return cls(tuple(labels))

    @property
    def n(self) -> int:
        return len(self.label_of)

    def __getitem__(self, v: int) -> int:
        return self.label_of[v]

    def order(self) -> list:
        """Vertices sorted by increasing label."""
        order = [0] * self.n
        for v, label in enumerate(self.label_of):
            order[label - 1] = v
        return order


@dataclass(frozen=True)
class Certificate:
    labeling: Labeling
    perms: tuple

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(self.perms))

    @property
    def k(self) -> int:
        return len(self.perms)


def inverse(pi: Permutation) -> Permutation:
    return pi.inverse()


def reverse(pi: Permutation) -> Permutation:
    return pi.reverse()


def _inverted(labels: np.ndarray, pi: Permutation) -> np.ndarray:
    """Symmetric boolean matrix of the vertex pairs inverted by ``pi``."""
    p = pi.positions()[labels]
    inv = (labels[:, None] > labels[None, :]) & (p[:, None] < p[None, :])
    return inv | inv.T


def inversion_graph(labeling: Labeling, pi: Permutation) -> SimpleGraph:
    if len(pi) != labeling.n:
        raise ArityMismatch(f"permutation of length {len(pi)} for {labeling.n} vertices")
    return SimpleGraph.from_adjacency(_inverted(np.asarray(labeling.label_of), pi))


def permutation_graph(pi: Permutation) -> SimpleGraph:
    """The permutation graph of ``pi`` under the identity labeling."""
    return inversion_graph(Labeling.identity(len(pi)), pi)


def generate_colored(labeling: Labeling, perms: Sequence[Permutation]) -> ColoredGraph:
    n = labeling.n
    for pi in perms:
        if len(pi) != n:
            raise ArityMismatch(f"permutation {pi} has length {len(pi)}, expected {n}")
    labels = np.asarray(labeling.label_of)
    table = np.zeros((n, n), dtype=np.int64)
    empty = []
    for i, pi in enumerate(perms, start=1):
        inv = _inverted(labels, pi)
        if not inv.any():
            empty.append(i)
            continue
        clash = np.argwhere(np.triu(inv & (table != 0), 1))
        if clash.size:
            u, v = (int(x) for x in clash[0])
            raise OverlapPair((u, v), (int(table[u, v]), i))
        table[inv] = i
    iu, ju = np.triu_indices(n, 1)
    missing = np.flatnonzero(table[iu, ju] == 0)
    if missing.size:
        raise UncoveredPair((int(iu[missing[0]]), int(ju[missing[0]])))
    if empty:
        raise EmptyColorClass(f"permutation {empty[0]} {perms[empty[0] - 1]} inverts no pair")
    return ColoredGraph.from_table(table)


def verify(G: ColoredGraph, labeling: Labeling, perms: Sequence[Permutation]) -> bool:
    """Check that ``labeling`` and ``perms`` certify ``G``."""
    if len(perms) != G.k:
        raise ArityMismatch(f"{len(perms)} permutations for a {G.k}-colored graph")
    if labeling.n != G.n or any(len(pi) != G.n for pi in perms):
        raise ArityMismatch(f"certificate lengths do not match n={G.n}")
    if G.n == 1:
        return True

    labels = np.asarray(labeling.label_of)
    pos = np.stack([pi.positions() for pi in perms])
    iu, ju = np.triu_indices(G.n, 1)
    color = G.table[iu, ju] - 1
    hi = np.where(labels[iu] > labels[ju], iu, ju)
    lo = iu + ju - hi
    # every pair is inverted by its own color ...
    if not (pos[color, labels[hi]] < pos[color, labels[lo]]).all():
        return False
    # ... and by nothing else: inversion counts must match class sizes
    sizes = G.color_class_sizes()
    return all(pi.inversions() == int(size) for pi, size in zip(perms, sizes))


def recognize_simple(H: SimpleGraph) -> Optional[tuple]:
    """Return ``(labeling, pi)`` realizing ``H`` as a permutation graph, or ``None``."""
    if H.n == 1 or H.is_edgeless():
        return Labeling.identity(H.n), Permutation.identity(H.n)
    from .recognizer import recognize

    outcome = recognize(lift_simple_graph(H))
    if not isinstance(outcome, Certificate):
        return None
    return outcome.labeling, outcome.perms[0]


def two_color_lift(H: SimpleGraph, labeling: Labeling, pi: Permutation) -> Certificate:
    if H.is_edgeless() or H.is_complete():
        raise DegenerateGraph("the lift of an edgeless or complete graph has one color")
    if inversion_graph(labeling, pi) != H:
        raise NotARealization(f"{pi} under the given labeling does not realize the graph")
    return Certificate(labeling, (pi, pi.reverse()))
