"""Core tree types, the Sombor index, and leaf-layer bookkeeping.

Trees are undirected, labeled with dense 0-based vertex ids, and immutable
after construction.  A degree sequence here lists only the degrees of
internal (non-leaf) vertices, non-increasing; the leaf count follows from
the handshake lemma.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

#: Relative tolerance under which two Sombor values are considered equal.
REL_TOL = 1e-9


class InvalidTreeError(ValueError):
    """Adjacency data does not describe a tree."""


class DegreeSequenceError(ValueError):
    """Raw degree data cannot be a valid internal degree sequence."""


class EntryBelowTwoError(DegreeSequenceError):
    """An internal vertex was declared with degree < 2."""


class InfeasibleError(DegreeSequenceError):
    """The implied leaf count violates the handshake lemma (L < 2)."""


class NoLeavesError(ValueError):
    """Operation requires a tree with at least one leaf."""


@dataclass(frozen=True)
class Tree:
    """Undirected labeled tree with array-backed adjacency.

    ``adj[v]`` is the sorted tuple of neighbors of vertex ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Tree":
        if n < 1:
            raise InvalidTreeError(f"need at least one vertex, got n={n}")
        edges = [tuple(e) for e in edges]
        if len(edges) != n - 1:
            raise InvalidTreeError(f"tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
        seen = set()
        nbrs = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidTreeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidTreeError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidTreeError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        tree = cls(n, tuple(tuple(sorted(ns)) for ns in nbrs))
        if n > 1 and len(_bfs_order(tree.adj, 0)) != n:
            raise InvalidTreeError("graph is not connected")
        return tree

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def leaves(self) -> list[int]:
        if self.n == 1:
            return []
        return [v for v in range(self.n) if len(self.adj[v]) == 1]

    def internal_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) >= 2]

    def internal_degrees(self) -> tuple[int, ...]:
        """Degrees of non-leaf vertices, non-increasing."""
        return tuple(sorted((len(ns) for ns in self.adj if len(ns) >= 2), reverse=True))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [[u, v] for u, v in self.edges()]})

    @classmethod
    def from_json(cls, text: str) -> "Tree":
        data = json.loads(text)
        return cls.from_edges(data["n"], data["edges"])

    def to_dot(self) -> str:
        lines = ["graph tree {"]
        for v in range(self.n):
            lines.append(f'  {v} [label="v{v} (d={self.degree(v)})"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_edge_list(self) -> str:
        return "\n".join(f"{u} {v}" for u, v in self.edges()) + "\n"


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing internal-vertex degrees; the problem instance.

    The empty sequence denotes the 2-vertex tree (single edge).
    """

    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def leaf_count(self) -> int:
        if self.m == 0:
            return 2
        return sum(self.degrees) - 2 * self.m + 2

    @property
    def vertex_count(self) -> int:
        return self.m + self.leaf_count

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)


def validate(degrees) -> DegreeSequence:
    """Normalize raw integers into a feasible DegreeSequence.

    Sorts non-increasing; rejects entries below 2 and sequences whose
    implied leaf count violates the handshake lemma.
    """
    ds = tuple(sorted((int(d) for d in degrees), reverse=True))
    for d in ds:
        if d < 2:
            raise EntryBelowTwoError(f"internal degree {d} < 2")
    seq = DegreeSequence(ds)
    if seq.m >= 1 and seq.leaf_count < 2:
        raise InfeasibleError(f"degree sequence {ds} implies {seq.leaf_count} leaves")
    return seq


@dataclass(frozen=True)
class LeafLayerProfile:
    """L1 vertices with degrees, their minimum degree, and the L1^m leaves."""

    l1_vertices: tuple[tuple[int, int], ...]  # (vertex, degree), sorted by id
    d_min: int
    l1m_leaves: tuple[int, ...]  # sorted by id


@dataclass(frozen=True)
class DegreePath:
    """A leaf-to-leaf path with the degrees along it."""

    vertices: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def interior_count(self) -> int:
        return len(self.vertices) - 2


def edge_weight(x: int, y: int) -> float:
    """Sombor edge contribution sqrt(x^2 + y^2) for endpoint degrees x, y."""
    if x < 1 or y < 1:
        raise ValueError(f"degrees must be >= 1, got ({x}, {y})")
    return math.sqrt(x * x + y * y)


def sombor_index(t: Tree) -> float:
    """Sum of edge weights over all edges.

    Edges are accumulated in lexicographic (min id, max id) order with
    compensated summation, so the result is deterministic to ~1e-12.
    """
    deg = [len(ns) for ns in t.adj]
    return math.fsum(
        math.sqrt(deg[u] * deg[u] + deg[v] * deg[v]) for u, v in t.edges()
    )


def leaf_layer_profile(t: Tree) -> LeafLayerProfile:
    """Compute L1 (vertices adjacent to a leaf), d^m, and L1^m."""
    if t.n == 1:
        raise NoLeavesError("single-vertex tree has no leaves")
    deg = t.degrees()
    l1 = sorted({nb for v in range(t.n) if deg[v] == 1 for nb in t.adj[v]})
    d_min = min(deg[v] for v in l1)
    l1m = sorted(
        v for v in range(t.n) if deg[v] == 1 and deg[t.adj[v][0]] == d_min
    )
    return LeafLayerProfile(
        l1_vertices=tuple((v, deg[v]) for v in l1),
        d_min=d_min,
        l1m_leaves=tuple(l1m),
    )


def leaf_to_leaf_paths(t: Tree) -> list[DegreePath]:
    """One DegreePath per unordered leaf pair; C(l, 2) paths for l leaves."""
    deg = t.degrees()
    leaves = t.leaves()
    paths = []
    for idx, a in enumerate(leaves):
        parent = _bfs_parents(t.adj, a)
        for b in leaves[idx + 1 :]:
            verts = [b]
            while verts[-1] != a:
                verts.append(parent[verts[-1]])
            verts.reverse()
            paths.append(
                DegreePath(tuple(verts), tuple(deg[v] for v in verts))
            )
    return paths


def canonical_form(t: Tree) -> str:
    """AHU code rooted at the tree center; equal codes iff isomorphic.

    For bicentric trees the lexicographically smaller of the two rooted
    codes is used.
    """
    return ahu_code(t.adj)


def ahu_code(adj) -> str:
    """Center-rooted AHU code for a tree given as adjacency lists."""
    n = len(adj)
    if n == 1:
        return "()"
    centers = tree_centers(adj)
    return min(_rooted_code(adj, c) for c in centers)


def tree_centers(adj) -> list[int]:
    """The one or two center vertices, by iterative leaf stripping."""
    n = len(adj)
    deg = [len(ns) for ns in adj]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed[v] = True
            for u in adj[v]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj, root: int) -> str:
    def code(v: int, parent: int) -> str:
        kids = sorted(code(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(kids) + ")"

    return code(root, -1)


def _bfs_order(adj, start: int) -> list[int]:
    seen = [False] * len(adj)
    seen[start] = True
    order = [start]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
    return order


def _bfs_parents(adj, start: int) -> list[int]:
    parent = [-1] * len(adj)
    parent[start] = start
    queue = [start]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for u in adj[v]:
            if parent[u] == -1:
                parent[u] = v
                queue.append(u)
    parent[start] = -1
    return parent
