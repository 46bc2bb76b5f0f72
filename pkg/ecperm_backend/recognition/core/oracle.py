"""Brute-force references and random instance generators for testing.

``brute_force_recognize`` tries every labeling and accepts the first one under
which, for every color ``i``, the relation "``u`` before ``v``" (``u`` before
``v`` iff the pair has color ``i`` exactly when ``u`` carries the larger label)
is a transitive tournament. It deliberately uses none of the decomposition
machinery.
"""
import itertools
import logging
import math
from typing import Iterator, Optional

import numpy as np
from joblib import Parallel, delayed

from .colored import ColoredGraph, substitute
from .exceptions import TooLarge
from .permutations import Certificate, Labeling, Permutation, generate_colored, verify

logger = logging.getLogger(__name__)

PROFILES = ("uniform", "gallai-substitution", "from-permutations")

_CHUNK = 5040


def _first_accepted(table: np.ndarray, k: int, labelings: np.ndarray) -> int:
    """Index of the first row of ``labelings`` accepted, or -1."""
    n = table.shape[1]
    larger = labelings[:, :, None] > labelings[:, None, :]
    off = ~np.eye(n, dtype=bool)
    expected = np.arange(n)
    ok = np.ones(len(labelings), dtype=bool)
    for i in range(1, k + 1):
        same = (table == i)[None, :, :]
        before = np.where(larger, same, ~same) & off
        # a tournament is transitive iff its out-degrees are 0..n-1
        degrees = np.sort(before.sum(axis=2), axis=1)
        ok &= (degrees == expected).all(axis=1)
        if not ok.any():
            return -1
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else -1


def _labeling_chunks(n: int) -> Iterator[np.ndarray]:
    labelings = itertools.permutations(range(1, n + 1))
    while True:
        block = list(itertools.islice(labelings, _CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def brute_force_recognize(G: ColoredGraph, max_n: int = 9, jobs: int = 1) -> Optional[Certificate]:
    if G.n > max_n:
        raise TooLarge(G.n, max_n, "brute-force recognition")
    if G.n == 1:
        return Certificate(Labeling((1,)), ())
    table = np.asarray(G.table)
    labels = None
    if jobs > 1 and math.factorial(G.n) > _CHUNK:
        chunks = list(_labeling_chunks(G.n))
        found = Parallel(n_jobs=jobs, prefer="threads")(delayed(_first_accepted)(table, G.k, c) for c in chunks)
        for chunk, index in zip(chunks, found):
            if index >= 0:
                labels = tuple(chunk[index].tolist())
                break
    else:
        for chunk in _labeling_chunks(G.n):
            index = _first_accepted(table, G.k, chunk)
            if index >= 0:
                labels = tuple(chunk[index].tolist())
                break
    if labels is None:
        return None

    labeling = Labeling(labels)
    larger = np.array(labels)[:, None] > np.array(labels)[None, :]
    perms = []
    for i in range(1, G.k + 1):
        same = table == i
        before = np.where(larger, same, ~same) & ~np.eye(G.n, dtype=bool)
        position = before.sum(axis=0)
        seq = [0] * G.n
        for v in range(G.n):
            seq[int(position[v])] = labels[v]
        perms.append(Permutation(tuple(seq)))
    certificate = Certificate(labeling, tuple(perms))
    if not verify(G, labeling, certificate.perms):
        raise AssertionError("brute-force certificate failed verification")
    return certificate


def enumerate_modules_naive(G: ColoredGraph, max_n: int = 10) -> tuple:
    """All non-empty modules and the strong ones, by exhaustion."""
    if G.n > max_n:
        raise TooLarge(G.n, max_n, "module enumeration")
    n = G.n
    table = G.table
    masks = []
    for mask in range(1, 1 << n):
        inside = np.array([(mask >> v) & 1 for v in range(n)], dtype=bool)
        outside = ~inside
        if outside.any() and inside.sum() > 1:
            sub = table[np.ix_(outside, inside)]
            if not (sub == sub[:, :1]).all():
                continue
        masks.append(mask)
    strong = [
        a for a in masks
        if not any((a & b) and (a & ~b) and (b & ~a) for b in masks)
    ]

    def members(mask):
        return frozenset(v for v in range(n) if (mask >> v) & 1)

    return {members(m) for m in masks}, {members(m) for m in strong}


def _uniform(rng: np.random.Generator, n: int, k: int) -> ColoredGraph:
    upper = np.triu(rng.integers(1, k + 1, size=(n, n)), 1)
    return ColoredGraph.from_table(upper + upper.T)


def _skeleton_sizes(rng: np.random.Generator, n: int, max_parts: int) -> list:
    m = int(rng.integers(2, min(n, max_parts) + 1))
    cuts = np.sort(rng.choice(np.arange(1, n), size=m - 1, replace=False))
    return np.diff(np.concatenate(([0], cuts, [n]))).tolist()


def _gallai(rng: np.random.Generator, n: int, k: int) -> ColoredGraph:
    if n == 1:
        return ColoredGraph.from_table(np.zeros((1, 1), dtype=np.int64))
    sizes = _skeleton_sizes(rng, n, 5)
    m = len(sizes)
    a, b = rng.choice(np.arange(1, k + 1), size=2, replace=k < 2)
    upper = np.triu(np.where(rng.random((m, m)) < 0.5, a, b), 1)
    skeleton = ColoredGraph.from_table(upper + upper.T)
    return substitute(skeleton, [_gallai(rng, size, k) for size in sizes])


def _inflate(skeleton: list, blocks: list) -> list:
    """Permutation ``skeleton[blocks]``: value ``j`` of the skeleton is
    replaced by the (shifted) sequence ``blocks[j - 1]``."""
    offsets = np.concatenate(([0], np.cumsum([len(b) for b in blocks])))
    seq = []
    for j in skeleton:
        seq.extend(int(x) + int(offsets[j - 1]) for x in blocks[j - 1])
    return seq


def _permutation_tuple(rng: np.random.Generator, n: int, k: int, max_parts: int) -> dict:
    """Color -> permutation sequence, inversion sets partitioning the pairs
    (colors with no inversion are absent)."""
    if n == 1:
        return {}
    sizes = _skeleton_sizes(rng, n, max_parts)
    m = len(sizes)
    a, b = (int(c) for c in rng.choice(np.arange(1, k + 1), size=2, replace=k < 2))
    outer = (rng.permutation(m) + 1).tolist()
    skeleton = {a: outer, b: outer[::-1]}
    if a == b:
        skeleton = {a: list(range(m, 0, -1))}
    inner = [_permutation_tuple(rng, size, k, max_parts) for size in sizes]
    colors = set(skeleton) | {c for perms in inner for c in perms}
    result = {}
    for c in sorted(colors):
        top = skeleton.get(c, list(range(1, m + 1)))
        blocks = [perms.get(c, list(range(1, size + 1))) for perms, size in zip(inner, sizes)]
        seq = _inflate(top, blocks)
        if any(x > y for x, y in zip(seq, seq[1:])):
            result[c] = seq
    return result


def _from_permutations(rng: np.random.Generator, n: int, k: int, max_parts: int) -> ColoredGraph:
    if n == 1:
        return ColoredGraph.from_table(np.zeros((1, 1), dtype=np.int64))
    if n <= 4:
        # small cases: sample tuples until their inversion sets partition the pairs
        while True:
            perms = [Permutation(tuple((rng.permutation(n) + 1).tolist())) for _ in range(int(rng.integers(1, k + 1)))]
            try:
                G = generate_colored(Labeling.identity(n), perms)
            except ValueError:
                continue
            break
    else:
        by_color = _permutation_tuple(rng, n, k, max_parts)
        G = generate_colored(Labeling.identity(n), [Permutation(tuple(seq)) for seq in by_color.values()])
        palette = np.array(list(by_color))
        G = ColoredGraph.from_table(np.where(G.table > 0, palette[G.table - 1], 0))
    shuffle = rng.permutation(n)
    return ColoredGraph.from_table(G.label_table()[np.ix_(shuffle, shuffle)])


def random_instances(seed: int, n: int, k: int, profile: str = "uniform", max_parts: Optional[int] = None) -> Iterator[ColoredGraph]:
    """Endless deterministic stream of random colored graphs."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {', '.join(PROFILES)}")
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    rng = np.random.default_rng(seed)
    while True:
        if profile == "uniform":
            yield _uniform(rng, n, k)
        elif profile == "gallai-substitution":
            yield _gallai(rng, n, k)
        else:
            yield _from_permutations(rng, n, k, max_parts or n)
