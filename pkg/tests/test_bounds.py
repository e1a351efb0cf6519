import pytest
from hypothesis import given, settings, strategies as st

from equidistant.bounds import (
    barg_musin_bound, best_bound, delsarte_bound, deza_binary_bound, deza_qary_bound,
    main_theorem_bound, trivial_equidistant_bound,
)
from equidistant.errors import InvalidParameters


def test_delsarte_examples():
    assert delsarte_bound(9, 2, 0) == 1
    assert delsarte_bound(7, 2, 1) == 8
    assert delsarte_bound(4, 3, 1) == 9
    assert delsarte_bound(5, 2, 5) == 32
    with pytest.raises(InvalidParameters):
        delsarte_bound(3, 2, 4)


def test_trivial_examples():
    assert trivial_equidistant_bound(7, 2) == 8
    assert trivial_equidistant_bound(4, 3) == 9
    assert trivial_equidistant_bound(1, 2) == 2


def test_main_theorem_examples():
    r = main_theorem_bound(7, 2, 4)
    assert not r.applicable and r.value == 8 and "exceptional" in r.condition
    r = main_theorem_bound(7, 2, 2)
    assert r.applicable and r.value == 7
    r = main_theorem_bound(6, 2, 3)
    assert r.applicable and r.value == 6
    # d = (q-1)(n+1)/q is covered, with a note
    r = main_theorem_bound(5, 3, 4)
    assert r.applicable and r.value == 10 and "note" in r.condition
    with pytest.raises(InvalidParameters):
        main_theorem_bound(5, 2, 6)


def test_barg_musin_examples():
    assert barg_musin_bound(10, 2, 5).applicable and barg_musin_bound(10, 2, 5).value == 10
    assert not barg_musin_bound(10, 2, 6).applicable
    r = barg_musin_bound(9, 3, 6)
    assert r.applicable and r.value == 18


def test_deza_binary_examples():
    r = deza_binary_bound(16, 4)
    assert r.value == 8 and r.large_n
    assert deza_binary_bound(15, 4).large_n is False
    r = deza_binary_bound(100, 4)
    assert r.value == 50 and r.large_n
    assert deza_binary_bound(7, 4).value == 8
    assert deza_binary_bound(7, 3).value == 2


def test_deza_qary_examples():
    r = deza_qary_bound(100, 3, 4)
    assert r.value == 50 and r.large_n
    assert deza_qary_bound(10, 3, 4).value == 22
    assert deza_qary_bound(10, 30, 4).value == 30
    assert not deza_qary_bound(43, 3, 4).large_n and deza_qary_bound(44, 3, 4).large_n


def test_best_bound_examples():
    assert best_bound(7, 2, 4).minimum == 8
    assert best_bound(100, 2, 4).minimum == 50
    assert best_bound(7, 2, 2).minimum == 7
    assert best_bound(100, 3, 4).minimum == 50
    assert best_bound(10, 2, 4).minimum == 8


def test_reports_are_integers_and_positive():
    for n in range(1, 25):
        for q in (2, 3, 4, 7):
            for d in range(1, n + 1):
                bb = best_bound(n, q, d)
                for r in bb.reports:
                    assert isinstance(r.value, int) and r.value >= 1
                assert bb.minimum == min(r.value for r in bb.reports if r.applicable)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 200), st.integers(2, 40), st.integers(1, 60))
def test_monotone_in_n(n, q, d):
    if d > n:
        return
    a, b = best_bound(n, q, d), best_bound(n + 1, q, d)
    for ra, rb in zip(a.reports, b.reports):
        assert ra.name == rb.name
        assert ra.value <= rb.value


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10 ** 6), st.integers(1, 2000))
def test_deza_binary_exact_for_huge_inputs(n, half):
    d = 2 * half
    r = deza_binary_bound(n, d)
    assert 4 * ((d * d + 2 * d + 8) // 4) == d * d + 2 * d + 8
    assert r.value == max((d * d + 2 * d + 8) // 4, (2 * n) // d)
