"""Greedy construction of the candidate maximum-Sombor tree.

The degree sequence is decomposed into rooted subtrees (a run of chain
subtrees followed by one base subtree), which are then merged back to
front by identifying each chain root with a leaf whose neighbor has the
minimum leaf-adjacent degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from sombortree.graph import (
    DegreeSequence,
    NoLeavesError,
    Tree,
    leaf_layer_profile,
)

CHAIN = "chain"
BASE = "base"


class NoAttachmentSiteError(NoLeavesError):
    """Host tree offers no leaf to identify a subtree root with."""


@dataclass(frozen=True)
class SubtreeSpec:
    """Blueprint for one rooted subtree awaiting materialization.

    ``root_degree`` is the degree the root will have in the final tree; a
    chain root keeps one slot open for the merge.
    """

    kind: str
    root_degree: int
    child_degrees: tuple[int, ...]
    filler_leaves: int = 0

    def __post_init__(self):
        if self.kind == CHAIN:
            assert len(self.child_degrees) == self.root_degree - 1
            assert self.filler_leaves == 0
        elif self.kind == BASE:
            assert len(self.child_degrees) + self.filler_leaves == self.root_degree
        else:
            raise ValueError(f"unknown subtree kind {self.kind!r}")
        assert all(c >= 2 for c in self.child_degrees)


@dataclass(frozen=True)
class RootedSubtree:
    tree: Tree
    root: int
    assigned_root_degree: int


def decompose(d: DegreeSequence) -> list[SubtreeSpec]:
    """Split a degree sequence into chain specs plus one final base spec.

    Worklist semantics: while the smallest remaining degree ds fits
    ds <= count - 2, emit a chain rooted at degree ds whose children take
    the ds - 1 largest remaining degrees; otherwise emit the base using
    everything left (padded with filler leaves) and stop.
    """
    if d.m < 1:
        raise ValueError("decompose needs at least one internal degree")
    work = list(d.degrees)  # non-increasing
    specs = []
    while work[-1] <= len(work) - 2:
        ds = work.pop()
        children = tuple(work[: ds - 1])
        del work[: ds - 1]
        specs.append(SubtreeSpec(CHAIN, ds, children))
    ds = work.pop()
    specs.append(
        SubtreeSpec(BASE, ds, tuple(work), filler_leaves=ds - len(work))
    )
    return specs


def materialize(spec: SubtreeSpec) -> RootedSubtree:
    """Build the rooted subtree for a spec.

    Vertex ids go in BFS order from the root, children ordered by
    non-increasing degree (filler leaves last); each internal child of
    degree c carries c - 1 leaf children.
    """
    edges = []
    next_id = 1
    child_ids = []
    for _ in spec.child_degrees:
        edges.append((0, next_id))
        child_ids.append(next_id)
        next_id += 1
    for _ in range(spec.filler_leaves):
        edges.append((0, next_id))
        next_id += 1
    for cid, cdeg in zip(child_ids, spec.child_degrees):
        for _ in range(cdeg - 1):
            edges.append((cid, next_id))
            next_id += 1
    tree = Tree.from_edges(next_id, edges)
    return RootedSubtree(tree=tree, root=0, assigned_root_degree=spec.root_degree)


def attachment_site(t: Tree) -> int:
    """Lowest-id leaf whose neighbor has the minimum leaf-adjacent degree."""
    if not t.leaves():
        raise NoAttachmentSiteError("tree has no leaves")
    return leaf_layer_profile(t).l1m_leaves[0]


def merge_once(t: Tree, s: RootedSubtree) -> Tree:
    """Identify s's root with the attachment site of t.

    Realized as leaf replacement: the chosen leaf's id is taken over by
    the subtree root, so the attachment neighbor's degree is unchanged and
    the merged root gains exactly one incident edge.
    """
    return merge_at(t, s, attachment_site(t))


def merge_at(t: Tree, s: RootedSubtree, leaf: int) -> Tree:
    """Merge s into t at an explicit leaf of t."""
    if t.degree(leaf) != 1:
        raise ValueError(f"vertex {leaf} is not a leaf")
    remap = {s.root: leaf}
    next_id = t.n
    for v in range(s.tree.n):
        if v != s.root:
            remap[v] = next_id
            next_id += 1
    edges = t.edges()
    edges.extend((remap[u], remap[v]) for u, v in s.tree.edges())
    return Tree.from_edges(next_id, edges)


def construct_max_tree(d: DegreeSequence) -> Tree:
    """Materialize the base, merge chains back to front, relabel by BFS.

    The empty sequence gives the single edge; m = 1 gives the star.
    """
    if d.m == 0:
        return Tree.from_edges(2, [(0, 1)])
    specs = decompose(d)
    t = materialize(specs[-1]).tree
    for spec in reversed(specs[:-1]):
        t = merge_once(t, materialize(spec))
    return _relabel_bfs(t, root=0)


def _relabel_bfs(t: Tree, root: int) -> Tree:
    """Relabel by BFS from root, visiting children by non-increasing degree."""
    deg = t.degrees()
    remap = {root: 0}
    order = [root]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u in sorted(t.adj[v], key=lambda u: (-deg[u], u)):
            if u not in remap:
                remap[u] = len(order)
                order.append(u)
    return Tree.from_edges(t.n, [(remap[u], remap[v]) for u, v in t.edges()])
