from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from vexkit.core import (
    Reflection,
    SignedPermutation,
    enumerate_group,
    sp_apply_reflection,
    sp_descents,
    sp_identity,
    sp_length,
    sp_multiply_simple,
)
from vexkit.errors import BudgetExceededError, TransitionCountError
from vexkit.lyd import LabelledYoungDiagram, lyd_of_perm, strict_partitions
from vexkit.transitions import (
    SchurPExpansion,
    StanleyMemo,
    is_max_grassmannian,
    lemma_transition_lyd,
    max_grassmannian,
    mg_shape,
    stanley_h,
    transitions,
    unique_transition,
    vexillary_transition_ok,
)
from vexkit.triples import StrictPartition, perm_to_triple, triple_lambda

SP = SignedPermutation
BIG = SP((1, 2, -7, -11, -6, -8, -5, 3, -12, -10, -9, 4))
FIG_W = SP((2, -4, -3, -1))


def candidate_scan(w: SignedPermutation, bound: int) -> set[SignedPermutation]:
    """Every length-preserving w t_mj r with r a reflection touching position m, indices <= bound."""
    m = max(sp_descents(w))
    n = len(w.canonical)
    j = max(x for x in range(m + 1, n + 1) if w(m) > w(x))
    v = sp_apply_reflection(w, Reflection.t(m, j))
    found = set()
    for i in range(1, bound + 1):
        rs = [Reflection.s(i, m)] + ([Reflection.t(i, m)] if i < m else [])
        for r in rs:
            u = sp_apply_reflection(v, r)
            if sp_length(u) == sp_length(w):
                found.add(u)
    return found


@lru_cache(maxsize=None)
def reduced_word_count(window: tuple[int, ...]) -> int:
    w = SP(window)
    if w.is_identity:
        return 1
    lw = sp_length(w)
    downs = (sp_multiply_simple(w, m) for m in range(len(window)))
    return sum(reduced_word_count(u.canonical) for u in downs if sp_length(u) < lw)


@lru_cache(maxsize=None)
def shifted_tableaux(lam: tuple[int, ...]) -> int:
    """Standard shifted tableaux of shape ``lam``: remove a corner cell in every possible way."""
    if not lam:
        return 1
    total = 0
    for i, part in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if part - 1 > nxt or (part == 1 and nxt == 0):
            smaller = tuple(x for x in lam[:i] + (part - 1,) + lam[i + 1 :] if x)
            total += shifted_tableaux(smaller)
    return total


# expansions

partitions = st.lists(st.integers(1, 6), unique=True, max_size=4).map(lambda xs: tuple(sorted(xs, reverse=True)))
expansions = st.dictionaries(partitions, st.integers(-3, 3), max_size=5).map(SchurPExpansion)


@given(expansions, expansions, expansions)
def test_expansion_algebra(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert 0 not in (a + b).values()
    assert (a + a.scale(-1)) == {}
    assert 2 * a == a + a


def test_expansion_ordering_and_equality():
    h = SchurPExpansion({(1,): 2, (3, 1): 1, (2,): 0})
    assert len(h) == 2
    assert h.sorted_terms() == [((3, 1), 1), ((1,), 2)]
    assert h == {(1,): 2, (3, 1): 1}
    with pytest.raises(ValueError):
        SchurPExpansion({(1, 1): 1})


# maximal grassmannian elements


def test_max_grassmannian_examples():
    assert max_grassmannian((4, 2, 1)) == SP((-4, -2, -1, 3))
    assert max_grassmannian(()) == sp_identity()
    assert mg_shape(SP((-4, -2, -1, 3))) == StrictPartition((4, 2, 1))
    with pytest.raises(ValueError):
        mg_shape(SP((2, 1)))


def test_max_grassmannian_round_trip():
    for lam in strict_partitions(21):
        if lam.parts and lam.parts[0] > 6:
            continue
        w = max_grassmannian(lam)
        assert is_max_grassmannian(w) or w.is_identity
        assert mg_shape(w) == lam
        assert sp_length(w) == lam.size


# transitions


def test_transition_examples():
    tr = transitions(FIG_W)
    assert (tr.m, tr.j) == (1, 4)
    assert set(tr.targets) == {SP((-2, -4, -3, 1))} and tr.doubled is None
    tr = transitions(SP((2, 1)))
    assert tr.targets == () and tr.doubled == SP((-1, 2))
    assert transitions(SP((-4, -2, -1, 3))) is None
    assert transitions(sp_identity(3)) is None


def test_unique_transition_examples():
    u = unique_transition(FIG_W)
    assert u == SP((-2, -4, -3, 1))
    assert lyd_of_perm(u) == LabelledYoungDiagram((5, 4, 2), (1, 0))
    with pytest.raises(TransitionCountError):
        unique_transition(sp_identity(2))


def test_unique_transition_of_large_example():
    expected = SP((1, 2, -7, -9, -6, -8, -5, -11, -12, -10, 3, 4))
    assert candidate_scan(BIG, len(BIG.canonical) + 3) == {expected}
    assert unique_transition(BIG) == expected
    assert lyd_of_perm(expected) == lemma_transition_lyd(lyd_of_perm(BIG))


def test_transitions_match_brute_scan_on_w4():
    for w in enumerate_group(4):
        tr = transitions(w)
        if tr is None:
            continue
        found = set(tr.targets) | ({tr.doubled} if tr.doubled is not None else set())
        assert found == candidate_scan(w, 7)
        assert all(sp_length(u) == sp_length(w) for u in found)


def test_unique_transition_lemma_on_w4():
    for w in enumerate_group(4):
        try:
            perm_to_triple(w)
        except ValueError:
            continue
        if w.is_identity or is_max_grassmannian(w):
            continue
        assert vexillary_transition_ok(w), w
        y, u = lyd_of_perm(w), lyd_of_perm(unique_transition(w))
        assert u.shape == y.shape


# Stanley functions


def test_stanley_examples():
    assert stanley_h(SP((-4, -2, -1, 3))) == {(4, 2, 1): 1}
    assert stanley_h(SP((2, 1))) == {(1,): 2}
    assert stanley_h(FIG_W) == {(5, 4, 2): 1}
    assert stanley_h(sp_identity(2)) == {(): 1}
    assert stanley_h(BIG) == {(20, 18, 17, 13, 11, 9, 8, 7): 1}


def test_stanley_positive_of_right_degree_on_w3():
    memo = StanleyMemo()
    for w in enumerate_group(3):
        h = stanley_h(w, memo=memo)
        assert h and all(isinstance(c, int) and c > 0 for c in h.values())
        assert all(sum(lam) == sp_length(w) for lam in h)


def test_squarefree_coefficient_counts_reduced_words():
    """[x_1...x_l] of P_lam is 2^(l - len lam) g_lam, and of H_w is 2^(l - neg w) |R(w)|."""
    assert shifted_tableaux((4, 2, 1)) == reduced_word_count((-4, -2, -1, 3)) == 7
    memo = StanleyMemo()
    for n in range(5):
        for w in enumerate_group(n):
            lw = sp_length(w)
            neg = sum(1 for x in w.window if x < 0)
            h = stanley_h(w, memo=memo)
            lhs = sum(c * 2 ** (lw - len(lam)) * shifted_tableaux(lam) for lam, c in h.items())
            assert lhs == 2 ** (lw - neg) * reduced_word_count(w.canonical), w


def test_vexillary_collapse_on_w4():
    memo = StanleyMemo()
    for w in enumerate_group(4):
        try:
            t = perm_to_triple(w)
        except ValueError:
            continue
        assert stanley_h(w, memo=memo) == {triple_lambda(t).parts: 1}


def test_memo_is_shared_and_budget_guards():
    memo = StanleyMemo()
    stanley_h(SP((3, 2, 1)), memo=memo)
    seen = memo.expanded
    stanley_h(SP((3, 2, 1)), memo=memo)
    assert memo.expanded == seen
    with pytest.raises(BudgetExceededError):
        stanley_h(SP((2, 1)), budget=1)


def test_window_bound_is_sufficient():
    for w in enumerate_group(4):
        assert transitions(w) == transitions(w, extra=3)
