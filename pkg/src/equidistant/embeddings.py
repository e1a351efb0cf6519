"""Simplex geometry, the sphere embedding of a code, and the Gram-rank test.

Floats are only used for the geometric points.  Everything that decides a
verdict (Gram entries, determinants, the exceptional distance) is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from .codes import DEGENERATE, Code, hamming_distance, is_equidistant
from .errors import InvalidSize, NonSquare, NotEquidistant, SizeMismatch

TOL = 1e-9


# -- exact matrices --------------------------------------------------------------

@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(x if type(x) is Fraction else Fraction(x) for x in r) for r in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise SizeMismatch("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def gamma_identity_plus_theta_ones(cls, gamma, theta, m: int) -> "RationalMatrix":
        gamma, theta = Fraction(gamma), Fraction(theta)
        diag = gamma + theta
        rows = []
        for i in range(m):
            r = [theta] * m
            r[i] = diag
            rows.append(tuple(r))
        return cls(tuple(rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(i))

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]


def det_bareiss(M: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The rational matrix is first scaled to an integer one by the lcm of all
    denominators; the elimination itself never divides inexactly.
    """
    m = M.rows
    if m != M.cols:
        raise NonSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    if m == 0:
        return Fraction(1)
    scale = reduce(math.lcm, (x.denominator for r in M.entries for x in r), 1)
    a = np.array([[x.numerator * (scale // x.denominator) for x in r] for r in M.entries], dtype=object)
    if m >= 32 and M.is_symmetric():
        det = _bareiss_symmetric(a, m)
        if det is not None:
            return Fraction(det, scale ** m)
        a = np.array([[x.numerator * (scale // x.denominator) for x in r] for r in M.entries], dtype=object)
    sign, prev = 1, 1
    for k in range(m - 1):
        if a[k, k] == 0:
            swap = next((i for i in range(k + 1, m) if a[i, k]), None)
            if swap is None:
                return Fraction(0)
            a[[k, swap]] = a[[swap, k]]
            sign = -sign
        pivot = a[k, k]
        # every entry of the update is divisible by prev (Sylvester's identity)
        sub = a[k + 1:, k + 1:]
        sub *= pivot
        sub -= np.outer(a[k + 1:, k], a[k, k + 1:])
        if prev != 1:
            sub //= prev
        prev = pivot
    return Fraction(sign * int(a[m - 1, m - 1]), scale ** m)


def _bareiss_symmetric(a: np.ndarray, m: int) -> int | None:
    """Bareiss on the upper triangle only.

    Without row swaps every trailing block stays symmetric, so column k can
    be read from row k.  Returns None on a zero pivot (caller falls back).
    """
    prev = 1
    for k in range(m - 1):
        pivot = a[k, k]
        if pivot == 0:
            return None
        r = a[k, k + 1:]
        sub = a[k + 1:, k + 1:]
        iu = np.triu_indices(m - k - 1)
        vals = sub[iu] * pivot - r[iu[0]] * r[iu[1]]
        if prev != 1:
            vals //= prev
        sub[iu] = vals
        prev = pivot
    return int(a[m - 1, m - 1])


def det_closed_form(gamma, theta, m: int) -> Fraction:
    """det(gamma*I_m + theta*J_m) = (gamma + m*theta) * gamma**(m-1)."""
    gamma, theta = Fraction(gamma), Fraction(theta)
    return (gamma + m * theta) * gamma ** (m - 1)


# -- simplices -------------------------------------------------------------------

@dataclass(frozen=True)
class SimplexPoints:
    dim: int
    points: np.ndarray  # shape (size, dim)

    def __len__(self):
        return len(self.points)

    def inner_products(self) -> np.ndarray:
        return self.points @ self.points.T


def build_max_simplex(m: int) -> SimplexPoints:
    """m unit vectors in R^(m-1), pairwise inner product -1/(m-1).

    Start from e_1..e_{m-1} plus v = lam * sum(e_i), where lam solves
    (m-1)*lam**2 - 2*lam + 1 = 2 (the '+' root), then move the centroid to
    the origin and rescale to the unit sphere.
    """
    if m < 2:
        raise InvalidSize(f"a simplex needs at least 2 points, got {m}")
    dim = m - 1
    lam = (1 + math.sqrt(m)) / dim
    pts = np.vstack([np.eye(dim), np.full((1, dim), lam)])
    pts = pts - pts.mean(axis=0)
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return SimplexPoints(dim, pts)


def verify_centroid_origin(S: SimplexPoints) -> bool:
    if len(S) != S.dim + 1:
        raise SizeMismatch(f"expected {S.dim + 1} points in R^{S.dim}, got {len(S)}")
    return bool(np.linalg.norm(S.points.sum(axis=0)) < 1e-8)


# -- sphere embedding ------------------------------------------------------------

@dataclass(frozen=True)
class SphereEmbedding:
    source: Code
    points: np.ndarray  # one row per codeword, in source.words order

    @property
    def dim(self) -> int:
        return self.points.shape[1]


def theta_vector(symbols: Sequence[int], gadget: SimplexPoints) -> np.ndarray:
    """Concatenate the simplex vertex of each symbol, scaled by 1/sqrt(n)."""
    return gadget.points[list(symbols)].reshape(-1) / math.sqrt(len(symbols))


def theta_embed(code: Code) -> SphereEmbedding:
    gadget = build_max_simplex(code.q)
    pts = np.array([theta_vector(w.symbols, gadget) for w in code.words]).reshape(len(code), -1)
    return SphereEmbedding(code, pts)


def theta_inner_product(d: int, n: int, q: int) -> Fraction:
    """Inner product of the embeddings of two words at distance d."""
    return 1 - Fraction(d * q, n * (q - 1))


def gram_exact(code: Code) -> RationalMatrix:
    ws = code.words
    n, q = code.n, code.q
    return RationalMatrix(tuple(
        tuple(Fraction(1) if i == j else theta_inner_product(hamming_distance(x, y), n, q)
              for j, y in enumerate(ws))
        for i, x in enumerate(ws)))


# -- the rank argument -------------------------------------------------------------

def exceptional_distance(n: int, q: int) -> int | None:
    """((q-1)n + 1)/q when that is an integer, else None."""
    num = (q - 1) * n + 1
    return num // q if num % q == 0 else None


def solve_vanishing_distance(n: int, q: int, m: int) -> Fraction:
    """The d making gamma + m*theta vanish, with gamma = dq/(n(q-1)), theta = 1 - gamma.

    gamma + m(1 - gamma) = 0 is linear in gamma: gamma = m/(m-1).
    """
    gamma = Fraction(m, m - 1)
    return gamma * Fraction(n * (q - 1), q)


@dataclass(frozen=True)
class RankReport:
    m: int
    n: int
    q: int
    d: int | None
    exceptional_distance: int | None
    at_trivial_bound: bool
    det_closed_form: Fraction
    det_bareiss: Fraction
    consistent: bool

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n, "q": self.q, "d": self.d,
            "exceptional_distance": self.exceptional_distance,
            "at_trivial_bound": self.at_trivial_bound,
            "det_closed_form": str(self.det_closed_form),
            "det_bareiss": str(self.det_bareiss),
            "consistent": self.consistent,
        }


def rank_argument_report(code: Code) -> RankReport:
    d = is_equidistant(code)
    if d is None:
        raise NotEquidistant(f"{code!r} has {len(code.distance_multiset)} distinct distances")
    n, q, m = code.n, code.q, len(code)
    d_star = exceptional_distance(n, q)
    N = gram_exact(code)
    bareiss = det_bareiss(N)
    if d == DEGENERATE:
        return RankReport(m, n, q, None, d_star, m == (q - 1) * n + 1, Fraction(1), bareiss,
                          bareiss == 1)
    gamma = Fraction(d * q, n * (q - 1))
    closed = det_closed_form(gamma, 1 - gamma, m)
    consistent = closed == bareiss and m <= (q - 1) * n + 1
    at_bound = m == (q - 1) * n + 1
    if at_bound:
        consistent = consistent and closed == 0 and d == d_star
    return RankReport(m, n, q, d, d_star, at_bound, closed, bareiss, consistent)
