"""Realizing primitive two-colored quotients as permutation graphs.

A graph is a permutation graph exactly when it and its complement are both
comparability graphs, and any transitive orientations of the two combine into
a labeling and a permutation. Each color class is oriented by ordered
vertex-partition refinement started from the last vertex of a LexBFS of its
complement: in a cocomparability graph that vertex ends some cocomparability
ordering, so it is a sink of a transitive orientation of the complement's
complement. On a prime graph the refinement always reaches singletons. If the
combined result does not verify, each color class is oriented again by
forcing along implication classes (a primitive graph has a single one, so the
forced orientation is unique up to reversal).
"""
import logging
from typing import Optional

import numpy as np

from .colored import ColoredGraph
from .permutations import Labeling, Permutation, verify

logger = logging.getLogger(__name__)


def _compress(keys: np.ndarray) -> np.ndarray:
    present = np.zeros(int(keys.max()) + 1, dtype=bool)
    present[keys] = True
    return (np.cumsum(present) - 1)[keys]


def lexbfs_last(adjacency: np.ndarray) -> int:
    """Last vertex visited by a lexicographic breadth-first search from vertex 0."""
    n = adjacency.shape[0]
    key = np.zeros(n, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    last = 0
    for _ in range(n):
        candidates = np.where(visited, np.iinfo(np.int64).max, key)
        last = int(np.argmin(candidates))
        visited[last] = True
        key = _compress(2 * key + (~adjacency[last]).astype(np.int64))
    return last


def refine_from_source(adjacency: np.ndarray, source: int) -> Optional[np.ndarray]:
    """Order vertices so that, if ``source`` is a source of some transitive
    orientation, every edge points forward. Returns ``None`` when refinement
    stops before reaching singletons.

    Work items are ``(pivots, targets)``: every pivot splits the parts holding
    the targets, neighbours placed away from the pivot's side. A part that
    splits only has to be re-pivoted against its own pieces.
    """
    n = adjacency.shape[0]
    key = np.ones(n, dtype=np.int64)
    key[source] = 0
    if n <= 2:
        return np.argsort(key, kind="stable")
    work = [(np.array([source]), np.flatnonzero(key))]
    while work:
        pivots, targets = work.pop()
        before = key[targets]
        right = before > key[pivots[0]]
        # right of the pivots: non-neighbours first; left of them: neighbours first
        later = adjacency[np.ix_(targets, pivots)] == right[:, None]
        _, rank = np.unique(np.column_stack([before, later]), axis=0, return_inverse=True)
        rank = rank.reshape(-1)
        sub = np.zeros(n, dtype=np.int64)
        sub[targets] = rank + 1
        _, key = np.unique(key * (n + 1) + sub, return_inverse=True)
        key = key.reshape(-1)

        parts, group = np.unique(before, return_inverse=True)
        group = group.reshape(-1)
        low = np.full(len(parts), len(targets))
        high = np.full(len(parts), -1)
        np.minimum.at(low, group, rank)
        np.maximum.at(high, group, rank)
        for g in np.flatnonzero(low != high):
            members = targets[group == g]
            piece_of = rank[group == g]
            for piece in np.unique(piece_of):
                inside = piece_of == piece
                work.append((members[inside], members[~inside]))
    if key.max() != n - 1:
        return None
    return np.argsort(key)


def forced_orientation(adjacency: np.ndarray) -> Optional[np.ndarray]:
    """Transitive orientation by implication-class forcing, or ``None``."""
    n = adjacency.shape[0]
    oriented = np.zeros((n, n), dtype=bool)
    pending = np.argwhere(np.triu(adjacency, 1))
    for a, b in pending:
        if oriented[a, b] or oriented[b, a]:
            continue
        oriented[a, b] = True
        queue = [(int(a), int(b))]
        while queue:
            a, b = queue.pop()
            # a -> b forces a -> c for c adjacent to a only, and c -> b for c adjacent to b only
            only_a = adjacency[a] & ~adjacency[b]
            only_a[b] = False
            if (only_a & oriented[:, a]).any():
                return None
            for c in np.flatnonzero(only_a & ~oriented[a]):
                oriented[a, c] = True
                queue.append((a, int(c)))
            only_b = adjacency[b] & ~adjacency[a]
            only_b[a] = False
            if (only_b & oriented[b]).any():
                return None
            for c in np.flatnonzero(only_b & ~oriented[:, b]):
                oriented[c, b] = True
    return oriented



def _orientation_from_order(adjacency: np.ndarray, order: np.ndarray) -> np.ndarray:
    position = np.empty(len(order), dtype=np.int64)
    position[order] = np.arange(len(order))
    return adjacency & (position[:, None] < position[None, :])


def _combine(first: np.ndarray, second: np.ndarray) -> Optional[tuple]:
    """Labeling and permutation from orientations of color 1 and color 2.

    Color 1 and color 2 arcs together give the labeling order; color 2 arcs
    together with reversed color 1 arcs give the order of the permutation.
    """
    n = first.shape[0]
    label_rank = first.sum(axis=0) + second.sum(axis=0)
    perm_rank = first.sum(axis=1) + second.sum(axis=0)
    expected = np.arange(n)
    if not (np.array_equal(np.sort(label_rank), expected) and np.array_equal(np.sort(perm_rank), expected)):
        return None
    labels = label_rank + 1
    seq = np.empty(n, dtype=np.int64)
    seq[perm_rank] = labels
    return Labeling(tuple(labels.tolist())), Permutation(tuple(seq.tolist()))


def _check(Q: ColoredGraph, result: Optional[tuple]) -> Optional[tuple]:


def orient_by_refinement(Q: ColoredGraph) -> Optional[tuple]:
    """Both color classes of the two-colored ``Q`` oriented by refinement,
    or ``None`` if either refinement stops early.

    The source for one color is the LexBFS end vertex of the other color,
    which is that color's complement.
    """
    first = Q.table == 1
    second = Q.table == 2
    orientations = []
    for adjacency, source in ((first, lexbfs_last(second)), (second, lexbfs_last(first))):
        order = refine_from_source(adjacency, source)
        if order is None:
            return None
        orientations.append(_orientation_from_order(adjacency, order))
    return tuple(orientations)


def realize_prime(Q: ColoredGraph) -> Optional[tuple]:
    """``(labeling, pi)`` with ``pi`` realizing color 1 of the two-colored ``Q``
    (and ``reverse(pi)`` color 2), or ``None`` if ``Q`` is not one."""
    if Q.k != 2:
        raise ValueError(f"expected a two-colored quotient, got k={Q.k}")
    orientations = orient_by_refinement(Q)
    if orientations is not None:
        result = _check(Q, _combine(*orientations))
        if result is not None:
            return result

    logger.debug(f"falling back to forced orientation on a {Q.n}-vertex quotient")
    first_forced = forced_orientation(Q.table == 1)
    if first_forced is None:
        return None
    second_forced = forced_orientation(Q.table == 2)
    if second_forced is None:
        return None
    return _check(Q, _combine(first_forced, second_forced))
