"""Upper bounds on the size of equidistant codes, in exact integer arithmetic.

Each bound reports whether its hypothesis holds; ``best_bound`` only takes
the minimum over bounds whose hypothesis holds.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .errors import InvalidParameters


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: int
    applicable: bool
    condition: str
    large_n: bool | None = None

    def to_json(self) -> dict:
        return asdict(self)


def _check(n, q, d=None):
    if n < 1 or q < 2:
        raise InvalidParameters(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    if d is not None and not 1 <= d <= n:
        raise InvalidParameters(f"need 1 <= d <= n, got d={d}, n={n}")


def delsarte_bound(n: int, q: int, s: int) -> int:
    if not 0 <= s <= n or q < 2:
        raise InvalidParameters(f"need 0 <= s <= n and q >= 2, got n={n}, q={q}, s={s}")
    return sum(comb(n, i) * (q - 1) ** i for i in range(s + 1))


def trivial_equidistant_bound(n: int, q: int) -> int:
    return n * (q - 1) + 1


def trivial_report(n: int, q: int) -> BoundReport:
    _check(n, q)
    return BoundReport("trivial", trivial_equidistant_bound(n, q), True,
                       "every equidistant code (Delsarte with s = 1)")


def main_theorem_bound(n: int, q: int, d: int) -> BoundReport:
    _check(n, q, d)
    exceptional = q * d == (q - 1) * n + 1
    if exceptional:
        return BoundReport("main_theorem", n * (q - 1) + 1, False,
                           f"d = {d} is the exceptional distance ((q-1)n+1)/q; only n(q-1)+1 holds")
    cond = "d != ((q-1)n+1)/q"
    # the conjectured form of the hypothesis used (q-1)(n+1)/q instead
    if q * d == (q - 1) * (n + 1):
        cond += "; note: d equals (q-1)(n+1)/q, excluded by the original conjecture but covered here"
    return BoundReport("main_theorem", n * (q - 1), True, cond)


def barg_musin_bound(n: int, q: int, d: int) -> BoundReport:
    _check(n, q, d)
    return BoundReport("barg_musin", n * (q - 1), q * d <= (q - 1) * n, "d <= (q-1)n/q")


def deza_binary_bound(n: int, d: int) -> BoundReport:
    if n < 1 or not 1 <= d:
        raise InvalidParameters(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if d % 2:
        return BoundReport("deza_binary", 2, True,
                           "binary equidistant codes with odd d have at most two words", None)
    small = (d * d + 2 * d + 8) // 4  # exact: d(d+2) is divisible by 8 for even d
    large_n = 8 * n >= d * (d * d + 2 * d + 8)
    return BoundReport("deza_binary", max(small, 2 * n // d), True,
                       "q = 2, d even: max{(d^2+2d+8)/4, floor(2n/d)}", large_n)


def deza_qary_bound(n: int, q: int, d: int) -> BoundReport:
    if n < 1 or q < 2 or d < 1:
        raise InvalidParameters(f"need n >= 1, q >= 2, d >= 1, got n={n}, q={q}, d={d}")
    value = max(d * d + d + 2, q, 2 * n // d)
    large_n = 2 * n >= d * (d * d + d + 2) and 2 * n >= d * q
    return BoundReport("deza_qary", value, True, "max{d^2+d+2, q, floor(2n/d)}", large_n)


@dataclass(frozen=True)
class BestBound:
    reports: tuple[BoundReport, ...]
    minimum: int

    def to_json(self) -> dict:
        return {"reports": [r.to_json() for r in self.reports], "minimum": self.minimum}


def best_bound(n: int, q: int, d: int) -> BestBound:
    _check(n, q, d)
    reports = [trivial_report(n, q), main_theorem_bound(n, q, d), barg_musin_bound(n, q, d)]
    if q == 2:
        reports.append(deza_binary_bound(n, d))
    reports.append(deza_qary_bound(n, q, d))
    return BestBound(tuple(reports), min(r.value for r in reports if r.applicable))
