import random

import pytest
from hypothesis import given, settings, strategies as st

from equidistant.bounds import best_bound
from equidistant.codes import Code, Word, hamming_distance, is_equidistant, translate_to_zero
from equidistant.errors import CapExceeded, InvalidParameters
from equidistant.search import max_equidistant, stabiliser_orbits, tightness_report, weight_d_words

from oracles import naive_max_equidistant


def check_witness(res, d):
    w = res.witness
    assert len(w) == res.optimum
    ws = w.words
    for i in range(len(ws)):
        for j in range(i):
            assert hamming_distance(ws[i], ws[j]) == d


@pytest.mark.parametrize("n,q,d,opt", [(7, 2, 4, 8), (6, 2, 4, 4), (5, 2, 2, 5), (4, 3, 3, 9)])
def test_examples(n, q, d, opt):
    res = max_equidistant(n, q, d)
    assert res.optimum == opt and res.proven_optimal and not res.budget_exhausted
    check_witness(res, d)


def test_tightness_examples():
    r = tightness_report(7, 2, 4)
    assert r.gap == 0 and "simplex" in r.matches
    r = tightness_report(6, 2, 4)
    assert (r.bound, r.optimum, r.gap) == (6, 4, 2)
    r = tightness_report(10, 2, 4)
    # padded simplex code of length 7 gives 8 words; Deza's binary bound is 8
    assert (r.optimum, r.bound, r.gap) == (8, 8, 0)


def small_triples():
    for q, nmax in ((2, 9), (3, 6), (4, 4), (5, 3)):
        for n in range(1, nmax + 1):
            for d in range(1, n + 1):
                yield n, q, d


@pytest.mark.parametrize("n,q,d", list(small_triples()))
def test_agrees_with_naive_oracle(n, q, d):
    opt, done = naive_max_equidistant(n, q, d)
    assert done
    for kwargs in ({}, {"use_bounds": False, "seed": False}, {"canonical": True}):
        res = max_equidistant(n, q, d, **kwargs)
        assert res.proven_optimal
        assert res.optimum == opt, kwargs
        assert res.optimum <= best_bound(n, q, d).minimum
        check_witness(res, d)


@pytest.mark.parametrize("n,q,d", [(8, 2, 4), (9, 2, 6), (6, 3, 4), (5, 4, 3)])
def test_optimum_independent_of_vertex_order(n, q, d):
    base = max_equidistant(n, q, d, use_bounds=False, seed=False).optimum
    for s in range(4):
        res = max_equidistant(n, q, d, use_bounds=False, seed=False, order_seed=s)
        assert res.optimum == base and res.proven_optimal


def test_canonical_witness_is_reproducible():
    a = max_equidistant(7, 2, 4, canonical=True)
    b = max_equidistant(7, 2, 4, canonical=True)
    assert a.witness == b.witness and a.explored_nodes == b.explored_nodes


def test_budget_exhaustion_returns_incumbent():
    res = max_equidistant(12, 2, 6, budget=5, use_bounds=False, seed=False)
    assert res.budget_exhausted and not res.proven_optimal
    assert is_equidistant(res.witness) == 6


def test_errors():
    with pytest.raises(InvalidParameters):
        max_equidistant(4, 2, 5)
    with pytest.raises(CapExceeded):
        max_equidistant(30, 2, 15)


def test_weight_d_words_are_sorted_and_complete():
    arr = weight_d_words(5, 3, 2)
    assert len(arr) == 10 * 4
    rows = [tuple(r) for r in arr.tolist()]
    assert rows == sorted(rows) and len(set(rows)) == len(rows)


def test_stabiliser_orbits_partition_candidates():
    import numpy as np
    base = np.array([[0] * 6, [0, 0, 1, 1, 1, 1]], dtype=np.uint8)
    cands = weight_d_words(6, 3, 4)
    orbits = stabiliser_orbits(base, cands, 3)
    idx = np.concatenate(orbits)
    assert sorted(idx.tolist()) == list(range(len(cands)))
    # members of one orbit keep the same distance profile to the chosen words
    for orb in orbits:
        prof = {tuple(int((cands[i] != b).sum()) for b in base) for i in orb}
        assert len(prof) == 1


def random_equidistant_code(rng):
    """Random code from a random seed word, random d, grown greedily."""
    q = rng.randint(2, 5)
    n = rng.randint(2, 8)
    d = rng.randint(1, n)
    first = [rng.randrange(q) for _ in range(n)]
    words = [Word(q, first)]
    for _ in range(200):
        w = Word(q, [rng.randrange(q) for _ in range(n)])
        if w not in words and all(hamming_distance(w, x) == d for x in words):
            words.append(w)
    return Code(words, q, n)


def test_translate_to_zero_justifies_reduction():
    rng = random.Random(2024)
    for _ in range(500):
        c = random_equidistant_code(rng)
        pick = rng.choice(c.words)
        t = translate_to_zero(c, pick)
        assert Word.zero(c.q, c.n) in t.words
        assert t.distance_multiset == c.distance_multiset
        if len(c) >= 2:
            d = is_equidistant(c)
            assert all(sum(1 for s in w.symbols if s) == d for w in t.words if any(w.symbols))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(n, q) for q, m in ((2, 10), (3, 6), (4, 5), (5, 4)) for n in range(2, m + 1)]),
       st.data())
def test_never_exceeds_bounds(nq, data):
    n, q = nq
    d = data.draw(st.integers(1, n))
    res = max_equidistant(n, q, d)
    assert res.proven_optimal
    assert res.optimum <= best_bound(n, q, d).minimum
    check_witness(res, d)


def test_large_alphabets_and_deep_cliques():
    # symbols above 255 and cliques deeper than the default recursion limit
    res = max_equidistant(1, 1200, 1)
    assert res.optimum == 1200 and res.proven_optimal
    res = max_equidistant(2, 40, 2, use_bounds=False, seed=False, time_limit=0.0)
    assert res.budget_exhausted and is_equidistant(res.witness) == 2


def test_time_limit_is_a_budget():
    res = max_equidistant(13, 2, 6, use_bounds=False, seed=False, time_limit=0.0)
    assert res.budget_exhausted and not res.proven_optimal
