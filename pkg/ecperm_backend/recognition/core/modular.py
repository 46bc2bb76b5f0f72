"""Modular decomposition of complete edge-colored graphs.

``decompose`` builds the tree of strong modules top-down. For a vertex set
``S`` and its smallest vertex ``v`` it computes the coarsest partition of
``S - v`` into modules of ``G[S]`` (partition refinement), decomposes every
part on its own, and then recovers the chain of strong modules containing
``v``: between two parts ``X`` and ``Y`` there is a forcing arc ``X -> Y``
when ``X`` sees ``Y`` in a color different from the one ``v`` sees ``Y`` in.
The strongly connected components of this digraph, peeled from the sinks,
are exactly the layers added to ``{v}`` by each successive strong module of
the chain; a one-part layer gives a series node, a wider one a prime node.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .colored import ColoredGraph
from .exceptions import DecompositionError, NotAPartition, TooSmall

logger = logging.getLogger(__name__)


class NodeKind(str, Enum):
    SERIES = "series"
    PRIME = "prime"
    LEAF = "leaf"


@dataclass(frozen=True, eq=False)
class MDNode:
    id: int
    vertices: tuple
    kind: NodeKind
    parent: Optional[int]
    children: tuple
    representatives: tuple
    quotient: Optional[ColoredGraph]
    colors: tuple

    @cached_property
    def module(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def is_leaf(self) -> bool:
        return self.kind == NodeKind.LEAF

    def __repr__(self):
        return f"MDNode(id={self.id}, {self.kind.value}, {list(self.vertices)})"


class MDTree:
    """Inclusion tree of the strong modules; node ids follow a preorder walk."""

    def __init__(self, nodes, leaf_of):
        self.nodes = tuple(nodes)
        self.leaf_of = tuple(leaf_of)
        self._by_module = None

    @property
    def root(self) -> MDNode:
        return self.nodes[0]

    @property
    def n(self) -> int:
        return len(self.leaf_of)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self) -> Iterator[MDNode]:
        return iter(self.nodes)

    def node(self, node_id: int) -> MDNode:
        return self.nodes[node_id]

    def children(self, node: MDNode) -> list:
        return [self.nodes[c] for c in node.children]

    def internal_nodes(self) -> list:
        return [node for node in self.nodes if not node.is_leaf]

    def strong_modules(self) -> set:
        return {node.module for node in self.nodes}

    def node_of(self, module: Iterable[int]) -> Optional[MDNode]:
        if self._by_module is None:
            self._by_module = {node.module: node for node in self.nodes}
        return self._by_module.get(frozenset(module))

    def depth(self, node: MDNode) -> int:
        depth = 0
        while node.parent is not None:
            node = self.nodes[node.parent]
            depth += 1
        return depth

    def to_text(self) -> str:
        lines = []
        stack = [(self.root.id, 0)]
        while stack:
            node_id, depth = stack.pop()
            node = self.nodes[node_id]
            members = ",".join(str(v) for v in node.vertices)
            lines.append(f"{'  ' * depth}{{{members}}} {node.kind.value}")
            stack.extend((c, depth + 1) for c in reversed(node.children))
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph mdtree {", "  node [shape=box];"]
        for node in self.nodes:
            members = ",".join(str(v) for v in node.vertices)
            attrs = f'label="{{{members}}} {node.kind.value}"'
            if node.quotient is not None:
                pairs = " ".join(
                    f"{node.representatives[u]}-{node.representatives[v]}:{node.quotient.color_labels[c - 1]}"
                    for u, v, c in node.quotient.edges()
                )
                attrs += f', tooltip="{pairs}"'
            lines.append(f"  n{node.id} [{attrs}];")
        for node in self.nodes:
            for child in node.children:
                lines.append(f"  n{node.id} -> n{child};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class _Part:
    __slots__ = ("vertices", "kind", "color", "children")

    def __init__(self, vertices, kind, color=None, children=()):
        self.vertices = vertices
        self.kind = kind
        self.color = color
        self.children = list(children)


class _Frame:
    __slots__ = ("vertices", "parts", "child_frames", "result")

    def __init__(self, vertices):
        self.vertices = vertices
        self.parts = []
        self.child_frames = []
        self.result = None


def is_module(G: ColoredGraph, M: Iterable[int]) -> bool:
    inside = np.zeros(G.n, dtype=bool)
    inside[list(M)] = True
    if inside.sum() <= 1 or inside.all():
        return True
    sub = G.table[np.ix_(~inside, inside)]
    return bool((sub == sub[:, :1]).all())


def _modules_avoiding_first(table: np.ndarray, S: np.ndarray) -> list:
    """Coarsest partition of ``S[1:]`` into modules of ``G[S]``.

    Parts start as the color classes seen from ``S[0]``. A work item
    ``(pivots, targets)`` holds positions in ``S[1:]``; targets in one part are
    split by how the pivots see them. Only pairs that end up in different parts
    are ever compared.
    """
    rest = S[1:]
    if len(rest) == 1:
        return [rest]
    _, part = np.unique(table[S[0], rest], return_inverse=True)
    part = part.reshape(-1)
    count = int(part.max()) + 1
    positions = np.arange(len(rest))
    work = [(positions[part == p], positions[part != p]) for p in range(count)] if count > 1 else []
    while work:
        pivots, targets = work.pop()
        before = part[targets]
        seen = table[np.ix_(rest[targets], rest[pivots])]
        _, fresh = np.unique(np.column_stack([before, seen]), axis=0, return_inverse=True)
        fresh = fresh.reshape(-1)
        groups, group = np.unique(before, return_inverse=True)
        group = group.reshape(-1)
        low = np.full(len(groups), len(targets))
        high = np.full(len(groups), -1)
        np.minimum.at(low, group, fresh)
        np.maximum.at(high, group, fresh)
        for g in np.flatnonzero(low != high):
            members = targets[group == g]
            piece_of = fresh[group == g]
            pieces = np.unique(piece_of)
            for piece in pieces[1:]:
                part[members[piece_of == piece]] = count
                count += 1
            for piece in pieces:
                inside = piece_of == piece
                work.append((members[inside], members[~inside]))
    order = np.argsort(part, kind="stable")
    parts = np.split(rest[order], np.cumsum(np.bincount(part))[:-1])
    parts.sort(key=lambda p: p[0])
    return parts


def _layers(forcing: np.ndarray) -> list:
    """Strong components of the forcing digraph, innermost layer first."""
    r = forcing.shape[0]
    if r == 1:
        return [np.array([0])]
    count, label = connected_components(csr_matrix(forcing), directed=True, connection="strong")
    condensed = np.zeros((count, count), dtype=bool)
    src, dst = np.nonzero(forcing)
    condensed[label[src], label[dst]] = True
    np.fill_diagonal(condensed, False)
    out_degree = condensed.sum(axis=1)
    alive = np.ones(count, dtype=bool)
    layers = []
    for _ in range(count):
        sinks = np.flatnonzero(alive & (out_degree == 0))
        if len(sinks) != 1:
            raise DecompositionError(f"forcing digraph has {len(sinks)} sink components")
        sink = sinks[0]
        layers.append(np.flatnonzero(label == sink))
        alive[sink] = False
        out_degree -= condensed[:, sink]
    return layers


class _Decomposer:
    def __init__(self, G: ColoredGraph):
        self.G = G

    def run(self) -> _Part:
        frames = [_Frame(np.arange(self.G.n))]
        i = 0
        while i < len(frames):
            frame = frames[i]
            if len(frame.vertices) > 1:
                S = frame.vertices
                frame.parts = _modules_avoiding_first(self.G.table, S)
                for part in frame.parts:
                    frame.child_frames.append(len(frames))
                    frames.append(_Frame(part))
            i += 1
        for frame in reversed(frames):
            frame.result = self._assemble(frame, [frames[c].result for c in frame.child_frames])
        logger.debug(f"decomposition of n={self.G.n} used {len(frames)} frames")
        return frames[0].result

    def _assemble(self, frame: _Frame, subtrees: list) -> _Part:
        S = frame.vertices
        if len(S) == 1:
            return _Part(S, NodeKind.LEAF)
        v = int(S[0])
        reps = [v] + [int(part[0]) for part in frame.parts]
        Q = self.G.table[np.ix_(reps, reps)]
        seen_from_v = Q[0, 1:]
        forcing = Q[1:, 1:] != seen_from_v[None, :]
        np.fill_diagonal(forcing, False)

        current = _Part(np.array([v]), NodeKind.LEAF)
        for layer in _layers(forcing):
            if len(layer) == 1:
                x = int(layer[0])
                color = int(seen_from_v[x])
                sub = subtrees[x]
                if sub.kind == NodeKind.SERIES and sub.color == color:
                    children = [current] + sub.children
                else:
                    children = [current, sub]
                kind = NodeKind.SERIES
            else:
                color = None
                children = [current] + [subtrees[int(x)] for x in layer]
                kind = NodeKind.PRIME
            vertices = np.sort(np.concatenate([child.vertices for child in children]))
            current = _Part(vertices, kind, color, children)
        return current


def _finalize(G: ColoredGraph, top: _Part) -> MDTree:
    labels = G.label_table()
    nodes = []
    leaf_of = [0] * G.n
    stack = [(top, None)]
    while stack:
        part, parent = stack.pop()
        node_id = len(nodes)
        nodes.append((part, parent, []))
        if parent is not None:
            nodes[parent][2].append(node_id)
        children = sorted(part.children, key=lambda child: child.vertices[0])
        stack.extend((child, node_id) for child in reversed(children))
        part.children = children

    built = []
    for node_id, (part, parent, child_ids) in enumerate(nodes):
        vertices = tuple(int(x) for x in part.vertices)
        if part.kind == NodeKind.LEAF:
            leaf_of[vertices[0]] = node_id
            built.append(MDNode(node_id, vertices, NodeKind.LEAF, parent, (), (), None, ()))
            continue
        reps = tuple(int(child.vertices[0]) for child in part.children)
        quotient = ColoredGraph.from_table(labels[np.ix_(reps, reps)], palette=G.color_labels)
        colors = tuple(int(c) for c in np.unique(G.table[np.ix_(reps, reps)][~np.eye(len(reps), dtype=bool)]))
        kind = NodeKind.SERIES if quotient.k == 1 else NodeKind.PRIME
        if kind != part.kind:
            raise DecompositionError(f"node {list(vertices)} assembled as {part.kind.value} but its quotient is {kind.value}")
        built.append(MDNode(node_id, vertices, kind, parent, tuple(child_ids), reps, quotient, colors))
    return MDTree(built, leaf_of)


def decompose(G: ColoredGraph) -> MDTree:
    tree = _finalize(G, _Decomposer(G).run())
    logger.debug(f"modular decomposition: {len(tree)} nodes, {len(tree.internal_nodes())} internal")
    return tree


def quotient(G: ColoredGraph, M: Iterable[int], children: Iterable[Iterable[int]]) -> ColoredGraph:
    module = sorted(set(M))
    parts = [sorted(set(child)) for child in children]
    covered = [v for part in parts for v in part]
    if not parts or any(not part for part in parts) or sorted(covered) != module:
        raise NotAPartition(f"children do not partition {module}")
    parts.sort(key=lambda part: part[0])
    reps = [part[0] for part in parts]
    return ColoredGraph.from_table(G.label_table()[np.ix_(reps, reps)], palette=G.color_labels)


def classify(quotient_graph: ColoredGraph) -> NodeKind:
    if quotient_graph.n < 2:
        raise TooSmall("a single-vertex quotient belongs to a leaf")
    return NodeKind.SERIES if quotient_graph.k == 1 else NodeKind.PRIME


def is_primitive(G: ColoredGraph) -> bool:
    if G.n <= 2:
        return True
    root = decompose(G).root
    return root.kind == NodeKind.PRIME and len(root.children) == G.n


class LCATable:
    """Dense answer table for the smallest strong module holding two vertices."""

    def __init__(self, tree: MDTree):
        n = tree.n
        self.tree = tree
        # in preorder the leaves below any node are a contiguous run
        order = np.array([node.vertices[0] for node in tree if node.is_leaf], dtype=np.int64)
        pos = np.empty(n, dtype=np.int64)
        pos[order] = np.arange(n)
        start = np.zeros(len(tree), dtype=np.int64)
        end = np.zeros(len(tree), dtype=np.int64)
        for node in reversed(tree.nodes):
            if node.is_leaf:
                start[node.id] = pos[node.vertices[0]]
                end[node.id] = start[node.id] + 1
            else:
                start[node.id] = start[node.children[0]]
                end[node.id] = end[node.children[-1]]

        node_table = np.full((n, n), -1, dtype=np.int32)
        child_table = np.full((n, n), -1, dtype=np.int32)
        for node in tree.internal_nodes():
            s, e = start[node.id], end[node.id]
            for j, child_id in enumerate(node.children):
                cs, ce = start[child_id], end[child_id]
                for block in (np.s_[cs:ce, s:cs], np.s_[cs:ce, ce:e]):
                    node_table[block] = node.id
                    child_table[block] = j
        self.node = node_table[np.ix_(pos, pos)]
        self.child = child_table[np.ix_(pos, pos)]
        diagonal = np.arange(n)
        self.node[diagonal, diagonal] = tree.leaf_of
        self.child[diagonal, diagonal] = -1

    def module(self, u: int, v: int) -> MDNode:
        return self.tree.node(int(self.node[u, v]))

    def child_indices(self, u: int, v: int) -> tuple:
        return int(self.child[u, v]), int(self.child[v, u])

    def children(self, u: int, v: int) -> Optional[tuple]:
        if u == v:
            return None
        node = self.module(u, v)
        i, j = self.child_indices(u, v)
        return self.tree.node(node.children[i]), self.tree.node(node.children[j])


def lca_table(tree: MDTree) -> LCATable:
    return LCATable(tree)
