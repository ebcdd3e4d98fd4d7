import pytest
from hypothesis import given, settings

from strategies import triples
from vexkit.core import SignedPermutation, sp_identity, sp_inverse, sp_length, sp_longest, sp_multiply_simple
from vexkit.errors import InvalidDiagramError, NotInsertableError, NotRemovableError
from vexkit.lyd import (
    LabelledYoungDiagram,
    _insertions,
    all_lyds,
    chain_to_longest,
    corner_rows,
    insert_label,
    insertable_labels,
    longest_lyd,
    lyd_dual,
    lyd_from_triple,
    lyd_n,
    lyd_of_perm,
    lyd_to_perm,
    lyd_to_triple,
    removable_labels,
    remove_label,
    render_lyd,
    verify_removal_theorem,
)
from vexkit.triples import StrictPartition, Triple, essential_triples, triple_dual, triple_reduce, triple_to_perm
from vexkit.vexillary import is_vexillary

SP = SignedPermutation
Y = LabelledYoungDiagram
FIG_Y = Y((5, 4, 2), (1, 1))
FIG_W = SP((2, -4, -3, -1))

SMALL_LYDS = list(all_lyds(10))


def is_vex(w):
    return is_vexillary(w).vexillary


# structure


def test_corner_rows_are_drops_of_two_or_last():
    assert corner_rows(StrictPartition((5, 4, 2))) == (2, 3)
    assert corner_rows(StrictPartition((5, 3, 1))) == (1, 2, 3)
    assert corner_rows(StrictPartition((3, 2, 1))) == (3,)
    assert corner_rows(StrictPartition(())) == ()


@pytest.mark.parametrize(
    "shape,labels",
    [((5, 4, 2), (1,)), ((5, 4, 2), (1, 2)), ((3,), (3,)), ((5, 3, 1), (4, 0, 0)), ((2, 1), (-1,))],
)
def test_invalid_diagrams_rejected(shape, labels):
    with pytest.raises(InvalidDiagramError):
        Y(shape, labels)


def test_from_triple_examples():
    assert lyd_from_triple(Triple((2, 3), (2, 2), (3, 1))) == FIG_Y
    assert FIG_Y.rows == (2, 3) and FIG_Y.corners == [(2, 1), (3, 1)]
    assert lyd_from_triple(Triple((2, 3), (3, 1), (2, 2))) == Y((5, 4, 2), (2, 0))
    assert lyd_of_perm(FIG_W) == FIG_Y


@settings(max_examples=200)
@given(triples(max_s=4, max_entry=7, essential=True))
def test_triple_round_trip(t):
    y = lyd_from_triple(t)
    assert lyd_to_triple(y) == t
    assert lyd_to_perm(y) == triple_to_perm(t)


def test_bijection_on_small_shapes():
    assert len(SMALL_LYDS) == len(set(SMALL_LYDS))
    for y in SMALL_LYDS:
        t = lyd_to_triple(y)
        assert t.is_essential and triple_reduce(t) == t
        assert lyd_from_triple(t) == y
        assert sp_length(lyd_to_perm(y)) == y.size
    for t in essential_triples(6, 2):
        assert lyd_to_triple(lyd_from_triple(t)) == t


def test_dual():
    assert lyd_dual(FIG_Y) == Y((5, 4, 2), (2, 0))
    for y in SMALL_LYDS:
        assert lyd_dual(lyd_dual(y)) == y
        assert lyd_to_triple(lyd_dual(y)) == triple_dual(lyd_to_triple(y))
        assert lyd_to_perm(lyd_dual(y)) == sp_inverse(lyd_to_perm(y))


def test_n_of_diagram():
    assert lyd_n(FIG_Y) == 4
    assert lyd_n(Y((1,), (0,))) == 1
    assert lyd_n(Y()) == 0
    for n in range(1, 6):
        y = longest_lyd(n)
        assert y.shape.parts == tuple(range(2 * n - 1, 0, -2))
        assert lyd_n(y) == n and lyd_to_perm(y) == sp_longest(n)


def test_n_is_minimal_rank():
    for y in SMALL_LYDS:
        assert lyd_n(y) == len(lyd_to_perm(y).canonical)


# removal and insertion


REMOVALS = [
    (Y((5, 3, 1), (3, 2, 0)), 2, Y((5, 2, 1), (3, 0))),
    (Y((5, 2, 1), (3, 0)), 3, Y((4, 2, 1), (2, 0))),
    (Y((5, 2, 1), (3, 0)), 0, Y((5, 2), (3, 1))),
    (Y((3, 2), (1,)), 1, Y((3, 1), (2, 0))),
]


@pytest.mark.parametrize("before,m,after", REMOVALS)
def test_removal_examples(before, m, after):
    assert m in removable_labels(before)
    assert remove_label(before, m) == after
    assert m in insertable_labels(after)
    assert insert_label(after, m) == before


def test_no_removable_label_in_paired_example():
    assert removable_labels(FIG_Y) == set()
    assert insertable_labels(FIG_Y) == {0, 2, 3}
    with pytest.raises(NotRemovableError):
        remove_label(FIG_Y, 1)
    with pytest.raises(NotInsertableError):
        insert_label(FIG_Y, 1)


def test_descent_without_vexillary_removal():
    u = sp_multiply_simple(FIG_W, 1)
    assert sp_length(u) == sp_length(FIG_W) - 1
    assert not is_vex(u)


def test_insert_into_empty():
    assert insert_label(Y(), 0) == Y((1,), (0,))
    assert lyd_to_perm(Y((1,), (0,))) == SP((-1,))


def test_insertion_cases_are_exclusive():
    for y in SMALL_LYDS:
        hits = [(ins.m, ins.j) for ins in _insertions(y)]
        assert len(hits) == len(set(hits)), y
        labels = [m for m, _ in hits]
        assert len(labels) == len(set(labels)), y


def test_removal_and_insertion_are_inverse():
    for y in SMALL_LYDS:
        for m in removable_labels(y):
            smaller = remove_label(y, m)
            assert smaller.size == y.size - 1
            assert insert_label(smaller, m) == y
        if y.size <= 8:
            for m in insertable_labels(y):
                bigger = insert_label(y, m)
                assert bigger.size == y.size + 1
                assert remove_label(bigger, m) == y


def test_some_side_always_removable():
    for y in SMALL_LYDS:
        if y.size:
            assert removable_labels(y) or removable_labels(lyd_dual(y)), y


def test_removal_matches_multiplication_on_right():
    for y in SMALL_LYDS:
        w = lyd_to_perm(y)
        for m in removable_labels(y):
            u = sp_multiply_simple(w, m)
            assert is_vex(u) and lyd_of_perm(u) == remove_label(y, m)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_removal_theorem_small_ranks(n):
    report = verify_removal_theorem(n)
    assert report.ok, report.counterexamples[:3]
    assert report.checked > 0


# chains


def test_chain_from_empty():
    assert chain_to_longest(Y(), 1) == [sp_identity(), SP((-1,))]
    assert chain_to_longest(longest_lyd(3), 3) == [sp_longest(3)]


@pytest.mark.parametrize("side", ["right", "left"])
def test_chain_from_paired_example(side):
    chain = chain_to_longest(FIG_Y, 4, side)
    assert len(chain) == 16 - 11 + 1
    assert chain[0] == FIG_W and chain[-1] == sp_longest(4)
    for a, b in zip(chain, chain[1:]):
        assert sp_length(b) == sp_length(a) + 1
        assert is_vex(b)
        quotient = sp_inverse(a) * b if side == "right" else b * sp_inverse(a)
        assert sp_length(quotient) == 1


def test_chain_rejects_small_rank():
    with pytest.raises(ValueError):
        chain_to_longest(FIG_Y, 3)


def test_chains_exist_for_small_shapes():
    for y in SMALL_LYDS:
        n = lyd_n(y)
        for side in ("right", "left"):
            chain = chain_to_longest(y, n, side)
            assert [sp_length(w) for w in chain] == list(range(y.size, n * n + 1))


# rendering


def test_render_paired_example():
    assert render_lyd(FIG_Y) == (
        "LYD (5,4,2) labels [1, 1]\n"
        "[ ][ ][ ][ ][ ]\n"
        "   [ ][ ][ ][1]\n"
        "      [ ][1]\n"
    )
    assert render_lyd(Y()) == "LYD () labels []\n(empty diagram)\n"
