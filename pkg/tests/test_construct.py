import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sombortree.graph import (
    Tree,
    canonical_form,
    sombor_index,
    validate,
)
from sombortree.construct import (
    BASE,
    CHAIN,
    SubtreeSpec,
    attachment_site,
    construct_max_tree,
    decompose,
    materialize,
    merge_at,
    merge_once,
)
from sombortree.verify import prufer_to_tree


def path_tree(n):
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n):
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


@st.composite
def degree_sequences(draw, max_n=11):
    # induced from a random tree, so always feasible
    n = draw(st.integers(3, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return validate(prufer_to_tree(seq, n).internal_degrees())


# -- decompose ---------------------------------------------------------------


def test_decompose_worked_example():
    specs = decompose(validate([5, 5, 5, 4, 3, 3, 2, 2]))
    assert specs == [
        SubtreeSpec(CHAIN, 2, (5,)),
        SubtreeSpec(CHAIN, 2, (5,)),
        SubtreeSpec(BASE, 3, (5, 4, 3), filler_leaves=0),
    ]


def test_decompose_small_base_only():
    assert decompose(validate([3, 2, 2])) == [
        SubtreeSpec(BASE, 2, (3, 2), filler_leaves=0)
    ]


def test_decompose_all_twos():
    assert decompose(validate([2, 2, 2, 2])) == [
        SubtreeSpec(CHAIN, 2, (2,)),
        SubtreeSpec(BASE, 2, (2,), filler_leaves=1),
    ]


def test_decompose_star():
    assert decompose(validate([7])) == [SubtreeSpec(BASE, 7, (), filler_leaves=7)]


@given(degree_sequences())
@settings(max_examples=150)
def test_decompose_partitions_degrees(d):
    specs = decompose(d)
    used = []
    for s in specs:
        used.append(s.root_degree)
        used.extend(s.child_degrees)
    assert sorted(used, reverse=True) == list(d.degrees)
    assert specs[-1].kind == BASE
    assert all(s.kind == CHAIN for s in specs[:-1])


# -- materialize -------------------------------------------------------------


def test_materialize_chain():
    sub = materialize(SubtreeSpec(CHAIN, 2, (5,)))
    assert sub.tree.n == 6
    assert sub.tree.degree(sub.root) == 1  # one slot reserved for the merge
    assert sub.assigned_root_degree == 2
    assert sub.tree.degree(1) == 5


def test_materialize_paper_base():
    sub = materialize(SubtreeSpec(BASE, 3, (5, 4, 3)))
    assert sub.tree.n == 13
    assert sub.tree.degree(sub.root) == 3
    assert sorted(sub.tree.degree(c) for c in sub.tree.adj[0]) == [3, 4, 5]


def test_materialize_base_with_filler_is_p4():
    sub = materialize(SubtreeSpec(BASE, 2, (2,), filler_leaves=1))
    assert canonical_form(sub.tree) == canonical_form(path_tree(4))
    assert sub.tree.degree(sub.root) == 2


@given(degree_sequences())
@settings(max_examples=100)
def test_leaf_bookkeeping(d):
    # each merge consumes one host leaf; chain roots are open slots, not leaves
    specs = decompose(d)
    total_leaves = 0
    for s in specs:
        sub = materialize(s)
        total_leaves += sum(
            1 for v in sub.tree.leaves() if v != sub.root
        )
    assert total_leaves == d.leaf_count + (len(specs) - 1)


# -- attachment site ---------------------------------------------------------


def test_attachment_site_star():
    assert attachment_site(star_tree(4)) == 1


def test_attachment_site_paper_base():
    base = materialize(SubtreeSpec(BASE, 3, (5, 4, 3))).tree
    leaf = attachment_site(base)
    assert base.degree(base.adj[leaf][0]) == 3


def test_attachment_site_p4():
    assert attachment_site(path_tree(4)) == 0


# -- merge -------------------------------------------------------------------


def test_merge_paper_first_step():
    base = materialize(SubtreeSpec(BASE, 3, (5, 4, 3))).tree
    leaf = attachment_site(base)
    anchor = base.adj[leaf][0]
    merged = merge_once(base, materialize(SubtreeSpec(CHAIN, 2, (5,))))
    assert merged.n == base.n + 6 - 1
    # the degree-3 child now touches the base root, one leaf, and the
    # degree-2 merged root
    nbr_degs = sorted(merged.degree(u) for u in merged.adj[anchor])
    assert nbr_degs == [1, 2, 3]
    assert merged.degree(anchor) == base.degree(anchor)


def test_merge_all_twos_gives_p6():
    base = materialize(SubtreeSpec(BASE, 2, (2,), filler_leaves=1)).tree
    merged = merge_once(base, materialize(SubtreeSpec(CHAIN, 2, (2,))))
    assert canonical_form(merged) == canonical_form(path_tree(6))


def test_merge_into_star_is_leaf_symmetric():
    star = star_tree(5)
    sub = materialize(SubtreeSpec(CHAIN, 2, (3,)))
    codes = {canonical_form(merge_at(star, sub, leaf)) for leaf in star.leaves()}
    assert len(codes) == 1


@given(degree_sequences(max_n=10))
@settings(max_examples=100)
def test_merge_keeps_host_neighbor_degree(d):
    specs = decompose(d)
    t = materialize(specs[-1]).tree
    for spec in reversed(specs[:-1]):
        leaf = attachment_site(t)
        anchor = t.adj[leaf][0]
        before = t.degree(anchor)
        t = merge_once(t, materialize(spec))
        assert t.degree(anchor) == before


# -- construct_max_tree ------------------------------------------------------


def test_construct_322_is_caterpillar():
    t = construct_max_tree(validate([3, 2, 2]))
    caterpillar = Tree.from_edges(6, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5)])
    assert canonical_form(t) == canonical_form(caterpillar)
    assert sombor_index(t) == pytest.approx(
        math.sqrt(13) + math.sqrt(8) + 2 * math.sqrt(10) + math.sqrt(5), rel=1e-12
    )


def test_construct_all_twos_is_path():
    for m in range(1, 8):
        t = construct_max_tree(validate([2] * m))
        assert canonical_form(t) == canonical_form(path_tree(m + 2))


def test_construct_degenerate_cases():
    assert construct_max_tree(validate([])).n == 2
    star = construct_max_tree(validate([6]))
    assert canonical_form(star) == canonical_form(star_tree(7))


def test_construct_paper_example():
    d = validate([5, 5, 5, 4, 3, 3, 2, 2])
    t = construct_max_tree(d)
    assert t.n == 23
    assert len(t.leaves()) == 15
    assert t.internal_degrees() == d.degrees
    assert sombor_index(t) == pytest.approx(106.61257578712797, rel=1e-9)


def test_construct_deterministic():
    d = validate([5, 5, 5, 4, 3, 3, 2, 2])
    assert construct_max_tree(d).edges() == construct_max_tree(d).edges()


@given(degree_sequences())
@settings(max_examples=150)
def test_construct_realizes_sequence(d):
    t = construct_max_tree(d)
    assert t.internal_degrees() == d.degrees
    assert len(t.leaves()) == d.leaf_count
    assert t.n == d.vertex_count


def test_last_merge_site_beats_alternatives():
    # attaching the final chain anywhere other than L1^m never wins
    from sombortree.sweep import generate_degree_sequences

    for d in generate_degree_sequences(10):
        specs = decompose(d)
        if len(specs) < 2:
            continue
        host = materialize(specs[-1]).tree
        for spec in reversed(specs[1:-1]):
            host = merge_once(host, materialize(spec))
        final = materialize(specs[0])
        chosen_so = sombor_index(merge_once(host, final))
        for leaf in host.leaves():
            alt_so = sombor_index(merge_at(host, final, leaf))
            assert chosen_so >= alt_so - 1e-9 * chosen_so
