import itertools

import pytest

from equidistant.errors import DivisionByZero, FieldMismatch, NotPrimePower
from equidistant.fields import (
    add, inv, is_irreducible, make_field, mul, one_dim_subspace_reps, prime_power,
)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9]


def brute_irreducible_quadratics_gf2():
    # x^2 + a x + b is reducible iff it has a root in {0, 1}
    out = []
    for a, b in itertools.product(range(2), repeat=2):
        if all((r * r + a * r + b) % 2 for r in range(2)):
            out.append((b, a, 1))
    return out


def test_make_field_prime():
    F = make_field(7)
    assert (F.p, F.e, F.q) == (7, 1, 7)


def test_make_field_gf4_modulus():
    F = make_field(4)
    assert (F.p, F.e) == (2, 2)
    assert brute_irreducible_quadratics_gf2() == [(1, 1, 1)]
    assert F.modulus == (1, 1, 1)


def test_make_field_rejects_composite():
    with pytest.raises(NotPrimePower):
        make_field(6)
    with pytest.raises(NotPrimePower):
        prime_power(12)


def test_modulus_is_smallest_irreducible():
    for q in [4, 8, 9, 16, 25, 27]:
        F = make_field(q)
        assert is_irreducible(F.modulus, F.p)
        enc = sum(c * F.p ** i for i, c in enumerate(F.modulus[:-1]))
        for smaller in range(enc):
            tail = tuple((smaller // F.p ** i) % F.p for i in range(F.e))
            assert not is_irreducible(tail + (1,), F.p)


def test_spec_arithmetic_examples():
    F3, F4, F5 = make_field(3), make_field(4), make_field(5)
    assert int(add(F3.element(2), F3.element(2))) == 1
    # x * x = x + 1 under x^2 + x + 1; x encodes as 2, x + 1 as 3
    assert int(mul(F4.element(2), F4.element(2))) == 3
    assert int(inv(F5.element(2))) == 3


def test_polynomial_reduction_oracle_gf4():
    F = make_field(4)
    for a, b in itertools.product(range(4), repeat=2):
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        # (a0 + a1 x)(b0 + b1 x) with x^2 = x + 1
        c0 = (a0 * b0 + a1 * b1) % 2
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        assert F.mul(a, b) == c0 + 2 * c1


def test_errors():
    F, G = make_field(5), make_field(7)
    with pytest.raises(DivisionByZero):
        inv(F.element(0))
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(FieldMismatch):
        add(F.element(1), G.element(1))


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = make_field(q)
    els = range(q)
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a and F.mul(a, 0) == 0
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            if a and b:
                assert F.mul(a, b) != 0  # closure of the multiplicative group
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_subspace_reps_examples():
    assert one_dim_subspace_reps(make_field(2), 3) == sorted(
        v for v in itertools.product(range(2), repeat=3) if any(v))
    assert one_dim_subspace_reps(make_field(3), 2) == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert one_dim_subspace_reps(make_field(2), 1) == [(1,)]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_subspace_reps_count_and_independence(q, k):
    F = make_field(q)
    reps = one_dim_subspace_reps(F, k)
    assert len(reps) == (q ** k - 1) // (q - 1)
    assert reps == sorted(reps)
    for u, v in itertools.combinations(reps, 2):
        for c in range(1, q):
            assert tuple(F.mul(c, x) for x in u) != v
