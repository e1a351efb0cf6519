"""Extremal and near-extremal code constructions."""

from __future__ import annotations

import itertools

from .codes import Code, Word
from .delta import SetFamily
from .errors import CapExceeded, InvalidParameters, OddDistance
from .fields import make_field, one_dim_subspace_reps

DESK_CAP = 4096


def simplex_linear_code(q: int, k: int, cap: int = DESK_CAP) -> Code:
    """The [(q^k-1)/(q-1), k, q^(k-1)] code whose generator columns are one
    representative per 1-dimensional subspace of GF(q)^k."""
    F = make_field(q)
    if k < 1:
        raise InvalidParameters(f"k must be >= 1, got {k}")
    if q ** k > cap:
        raise CapExceeded(f"q^k = {q ** k} exceeds the cap {cap}")
    columns = one_dim_subspace_reps(F, k)
    words = []
    for x in itertools.product(range(q), repeat=k):
        row = []
        for col in columns:
            acc = 0
            for a, g in zip(x, col):
                acc = F.add(acc, F.mul(a, g))
            row.append(acc)
        words.append(Word(q, row))
    return Code(words, q, len(columns))


def sunflower_code(n: int, d: int, q: int) -> Code:
    """floor(2n/d) words with pairwise-disjoint supports of size d/2 (symbol 1),
    laid out in consecutive blocks from coordinate 1."""
    if d % 2:
        raise OddDistance(f"sunflower codes need even d, got {d}")
    if not (2 <= d <= 2 * n) or q < 2:
        raise InvalidParameters(f"need 2 <= d <= 2n and q >= 2, got n={n}, d={d}, q={q}")
    h = d // 2
    words = []
    for j in range(2 * n // d):
        s = [0] * n
        s[j * h:(j + 1) * h] = [1] * h
        words.append(Word(q, s))
    return Code(words, q, n)


def kernel_sunflower_code(n: int, d: int, q: int) -> Code:
    """The zero word plus weight-d words sharing the kernel {1..d/2}, with
    disjoint tails of size d/2 after it."""
    if d % 2:
        raise OddDistance(f"kernel sunflower codes need even d, got {d}")
    if d < 2 or n < d or q < 2:
        raise InvalidParameters(f"need 2 <= d <= n and q >= 2, got n={n}, d={d}, q={q}")
    h = d // 2
    words = [Word.zero(q, n)]
    for j in range((n - h) // h):
        s = [0] * n
        s[:h] = [1] * h
        s[h * (j + 1):h * (j + 2)] = [1] * h
        words.append(Word(q, s))
    return Code(words, q, n)


def projective_plane_family(q: int, cap: int = 16) -> SetFamily:
    """Lines of PG(2, q) as subsets of the q^2+q+1 points (numbered from 1).

    Points and lines are both indexed by normalised representatives of
    1-dimensional subspaces of GF(q)^3; a line u holds the points p with
    u . p = 0.
    """
    F = make_field(q)
    if q > cap:
        raise CapExceeded(f"q = {q} exceeds the cap {cap}")
    points = one_dim_subspace_reps(F, 3)
    index = {p: i for i, p in enumerate(points, start=1)}
    lines = []
    for u in points:
        line = set()
        for p in points:
            acc = 0
            for a, b in zip(u, p):
                acc = F.add(acc, F.mul(a, b))
            if acc == 0:
                line.add(index[p])
        lines.append(frozenset(line))
    return SetFamily(len(points), tuple(lines))


def family_as_code(F: SetFamily) -> Code:
    """Incidence vectors of the sets, as a binary code."""
    rows = [[1 if i in s else 0 for i in range(1, F.ground_size + 1)] for s in F.sets]
    return Code.from_lists(2, rows, F.ground_size)


def pad_code(code: Code, n: int) -> Code:
    """Append zero coordinates up to length n (distances unchanged)."""
    if n < code.n:
        raise InvalidParameters(f"cannot pad length {code.n} down to {n}")
    extra = (0,) * (n - code.n)
    return Code([Word(code.q, w.symbols + extra) for w in code], code.q, n)
