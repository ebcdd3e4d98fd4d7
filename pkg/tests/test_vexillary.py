from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from strategies import signed_perms
from vexkit.core import SignedPermutation, WindowPermutation, embed, enumerate_group, sp_identity, sp_inverse
from vexkit.errors import CapExceededError, InconsistentVerdictError
from vexkit.vexillary import (
    MODES,
    NINE_PATTERNS,
    VexillaryReport,
    catalan,
    count_vexillary,
    egge_count,
    essential_chain_ok,
    is_vexillary,
    nine_patterns,
    pattern_contains,
    rank_cap,
    signed_pattern_contains,
    vn_formula,
)

SP = SignedPermutation
BIG = SP((1, 2, -7, -11, -6, -8, -5, 3, -12, -10, -9, 4))
V = [1, 2, 7, 33, 183, 1118, 7281, 49626]


def order_type(xs):
    ranked = sorted(xs)
    return tuple(ranked.index(x) for x in xs)


def naive_contains(values, pattern) -> bool:
    target = order_type(pattern)
    return any(order_type([values[i] for i in idx]) == target for idx in combinations(range(len(values)), len(pattern)))


def naive_signed_contains(window, pattern) -> bool:
    target = order_type([abs(x) for x in pattern])
    for idx in combinations(range(len(window)), len(pattern)):
        sub = [window[i] for i in idx]
        if all((a < 0) == (b < 0) for a, b in zip(sub, pattern)) and order_type([abs(x) for x in sub]) == target:
            return True
    return False


perm_words = st.integers(0, 7).flatmap(lambda n: st.permutations(range(1, n + 1)))
pattern_words = st.integers(1, 4).flatmap(lambda n: st.permutations(range(1, n + 1)))


# ordinary patterns


def test_pattern_examples():
    v = WindowPermutation.odd((-4, -5, 4, -1, 0, 1, -3, 3, 5, -2, 2))
    hit = pattern_contains(v, (2, 1, 4, 3))
    assert hit is not None and order_type([v(i) for i in hit]) == order_type((-4, -5, 4, -1))
    assert pattern_contains(embed(sp_identity(3), "odd"), (2, 1, 4, 3)) is None
    hit = pattern_contains(embed(SP((2, 1)), "odd"), (2, 1, 4, 3))
    assert hit == (-2, -1, 1, 2)
    assert [embed(SP((2, 1)), "odd")(i) for i in hit] == [-1, -2, 2, 1]


@given(perm_words, pattern_words)
def test_pattern_search_matches_naive_scan(word, pattern):
    n = len(word)
    v = WindowPermutation(tuple(range(1, n + 1)), tuple(word))
    hit = pattern_contains(v, pattern)
    assert (hit is not None) == naive_contains(word, pattern)
    if hit is not None:
        assert list(hit) == sorted(hit) and len(set(hit)) == len(pattern)
        assert order_type([v(i) for i in hit]) == order_type(pattern)


# signed patterns


def test_signed_pattern_examples():
    assert signed_pattern_contains(SP((-5, 1, 3, -2, 4)), (-3, 2, -1)) == (1, 3, 4)
    assert signed_pattern_contains(SP((-5, 1, 2, -3, -4)), (-3, 2, -1)) is None
    assert signed_pattern_contains(SP((2, 1)), (2, 1)) == (1, 2)


@given(signed_perms(max_n=6), st.sampled_from(NINE_PATTERNS))
def test_signed_search_matches_naive_scan(w, pattern):
    hit = signed_pattern_contains(w, pattern)
    assert (hit is not None) == naive_signed_contains(w.window, pattern)


def test_nine_patterns():
    pats = nine_patterns()
    assert len(pats) == 9 and pats[0] == SP((2, 1))
    assert [p.window for p in pats] == [
        (2, 1), (-3, 2, -1), (-4, -1, -2, 3), (-4, 1, -2, 3), (-3, -4, -1, -2),
        (-3, -4, 1, -2), (-2, -3, 4, -1), (2, -3, 4, -1), (3, -4, -1, -2),
    ]
    for p in pats:
        assert pattern_contains(embed(p, "odd"), (2, 1, 4, 3)) is not None
        assert not is_vexillary(p).vexillary


# the five characterizations


def test_verdict_examples():
    for w in (SP((2, -4, -3, -1)), BIG, sp_identity(3)):
        report = is_vexillary(w, "all")
        assert report.vexillary and set(report.verdicts) == set(MODES)
    report = is_vexillary(SP((2, 1)), "all")
    assert not report.vexillary
    assert report.witness == ((2, 1), (1, 2))


@pytest.mark.parametrize("mode", MODES)
def test_single_modes(mode):
    assert is_vexillary(SP((2, -4, -3, -1)), mode).vexillary
    assert not is_vexillary(SP((2, 1)), mode).vexillary


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        is_vexillary(SP((1,)), "bogus")


def test_disagreement_is_an_error():
    report = VexillaryReport(SP((2, 1)), {"triple": True, "patterns": False})
    with pytest.raises(InconsistentVerdictError):
        report.vexillary


def test_five_way_agreement_small_ranks():
    for n in range(4):
        for w in enumerate_group(n):
            is_vexillary(w, "all")


def test_essential_chain_needs_positive_positions():
    w = SP((4, 3, 2, 1))
    assert not essential_chain_ok(w)
    assert not is_vexillary(w, "triple").vexillary


def test_closed_under_inverse_on_w4():
    for w in enumerate_group(4):
        assert is_vexillary(w).vexillary == is_vexillary(sp_inverse(w)).vexillary


# counting


def test_catalan_and_formula():
    assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [vn_formula(n) for n in range(8)] == V


@pytest.mark.parametrize("n", range(7))
def test_count_matches_formula(n):
    assert count_vexillary(n) == vn_formula(n) == V[n]


def test_count_of_rank_two_by_hand():
    vex = [w for w in enumerate_group(2) if is_vexillary(w).vexillary]
    assert len(vex) == 7 and SP((2, 1)) not in vex


@pytest.mark.parametrize("n", range(5))
def test_egge_count(n):
    assert egge_count(n) == V[n]


def test_parallel_count_matches_serial():
    assert count_vexillary(5, jobs=3) == count_vexillary(5) == 1118
    assert egge_count(4, jobs=2) == 183


def test_rank_cap(monkeypatch):
    monkeypatch.delenv("VEXKIT_RANK_CAP", raising=False)
    assert rank_cap() == 7
    with pytest.raises(CapExceededError):
        count_vexillary(8)
    monkeypatch.setenv("VEXKIT_RANK_CAP", "2")
    assert rank_cap() == 2
    with pytest.raises(CapExceededError):
        egge_count(3)
    assert count_vexillary(3, cap=3) == 33


@pytest.mark.slow
def test_count_rank_seven():
    assert count_vexillary(7, jobs=4) == V[7]
