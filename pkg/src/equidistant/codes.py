"""Words and codes in the q-ary Hamming space.

Coordinates are 1-based wherever they are exposed as mathematical objects
(supports, kernels, coordinate arguments, coordinate permutations), matching
the ground set [n] = {1, ..., n}.  Symbols are 0..q-1.
"""

from __future__ import annotations

import functools
import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateWord,
    InvalidParameters,
    InvalidPermutation,
    ShapeMismatch,
    WeightMismatch,
    WordNotInCode,
)

DEGENERATE = "degenerate"


@dataclass(frozen=True, order=True)
class Word:
    q: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.q < 2:
            raise InvalidParameters(f"alphabet size must be >= 2, got {self.q}")
        if not self.symbols:
            raise InvalidParameters("words must have length >= 1")
        if any(not 0 <= s < self.q for s in self.symbols):
            raise InvalidParameters(f"symbol out of range [0, {self.q - 1}] in {self.symbols}")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        sep = "" if self.q <= 10 else ","
        return sep.join(map(str, self.symbols))

    @functools.cached_property
    def bits(self) -> int:
        """Packed bitset of the support (bit i set iff coordinate i+1 is nonzero).

        For binary words this is the whole word.
        """
        return sum(1 << i for i, s in enumerate(self.symbols) if s)

    @classmethod
    def zero(cls, q: int, n: int) -> "Word":
        return cls(q, (0,) * n)


def _check_shape(x: Word, y: Word):
    if x.q != y.q or x.n != y.n:
        raise ShapeMismatch(f"words live in different spaces: (q={x.q}, n={x.n}) vs (q={y.q}, n={y.n})")


def hamming_distance(x: Word, y: Word) -> int:
    _check_shape(x, y)
    if x.q == 2:
        return (x.bits ^ y.bits).bit_count()
    return sum(a != b for a, b in zip(x.symbols, y.symbols))


def weight(x: Word) -> int:
    return x.bits.bit_count()


def support(x: Word) -> frozenset[int]:
    return frozenset(i + 1 for i, s in enumerate(x.symbols) if s)


def q_intersection_doubled(x: Word, y: Word) -> int:
    """Twice the q-ary intersection size of two equal-weight words.

    Kept doubled because the intersection size is a half-integer whenever
    the distance is odd.
    """
    k = weight(x)
    if weight(y) != k:
        raise WeightMismatch(f"weights differ: {k} vs {weight(y)}")
    return 2 * k - hamming_distance(x, y)


@dataclass(frozen=True)
class DistanceProfile:
    distinct_distances: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.distinct_distances)


class Code:
    """An immutable set of distinct words sharing (q, n).

    Words are kept in sorted order so iteration is deterministic; the order
    carries no meaning.
    """

    def __init__(self, words: Iterable[Word], q: int | None = None, n: int | None = None):
        words = tuple(words)
        if q is None or n is None:
            if not words:
                raise InvalidParameters("an empty code needs explicit q and n")
            q, n = words[0].q, words[0].n
        for w in words:
            if w.q != q or w.n != n:
                raise ShapeMismatch(f"word {w} is not in H_{q}^{n}")
        members = frozenset(words)
        if len(members) != len(words):
            dup = next(w for w, c in Counter(words).items() if c > 1)
            raise DuplicateWord(f"duplicate word {dup}")
        self.q = q
        self.n = n
        self.words = tuple(sorted(words))
        self._members = members

    @classmethod
    def from_lists(cls, q: int, rows: Iterable[Sequence[int]], n: int | None = None) -> "Code":
        words = [Word(q, r) for r in rows]
        return cls(words, q, n if n is not None else (words[0].n if words else None))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return w in self._members

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return (self.q, self.n, self._members) == (other.q, other.n, other._members)

    def __hash__(self):
        return hash((self.q, self.n, self._members))

    def __repr__(self):
        return f"Code(q={self.q}, n={self.n}, size={len(self)})"

    def with_word(self, w: Word) -> "Code":
        return Code(self.words + (w,), self.q, self.n)

    def without_word(self, w: Word) -> "Code":
        if w not in self:
            raise WordNotInCode(f"{w} is not a codeword")
        return Code([x for x in self.words if x != w], self.q, self.n)

    @functools.cached_property
    def distance_multiset(self) -> Counter:
        return Counter(hamming_distance(x, y) for x, y in itertools.combinations(self.words, 2))

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "words": [list(w.symbols) for w in self.words]}

    @classmethod
    def from_json(cls, data: dict) -> "Code":
        try:
            q, n, rows = int(data["q"]), int(data["n"]), data["words"]
        except (KeyError, TypeError) as exc:
            raise InvalidParameters(f"malformed code JSON: {exc}") from None
        for r in rows:
            if len(r) != n:
                raise ShapeMismatch(f"word {r} does not have length {n}")
        return cls([Word(q, r) for r in rows], q, n)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "Code":
        return cls.from_json(json.loads(text))


def distance_profile(code: Code) -> DistanceProfile:
    return DistanceProfile(tuple(sorted(code.distance_multiset)))


def is_equidistant(code: Code):
    """The common distance d, ``DEGENERATE`` for |C| <= 1, else None."""
    if len(code) <= 1:
        return DEGENERATE
    prof = distance_profile(code)
    return prof.distinct_distances[0] if prof.s == 1 else None


# -- equivalence operations -----------------------------------------------------

def permute_coordinates(code: Code, sigma: Sequence[int]) -> Code:
    """Move coordinate i to position sigma[i-1] (both 1-based)."""
    n = code.n
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{list(sigma)} is not a permutation of 1..{n}")
    out = []
    for w in code:
        new = [0] * n
        for i, s in enumerate(w.symbols):
            new[sigma[i] - 1] = s
        out.append(Word(code.q, new))
    return Code(out, code.q, n)


def permute_symbols(code: Code, i: int, tau: Sequence[int]) -> Code:
    """Apply the symbol permutation tau (tau[a] is the image of a) at coordinate i."""
    if not 1 <= i <= code.n:
        raise InvalidParameters(f"coordinate {i} outside 1..{code.n}")
    if sorted(tau) != list(range(code.q)):
        raise InvalidPermutation(f"{list(tau)} is not a permutation of 0..{code.q - 1}")
    out = []
    for w in code:
        s = list(w.symbols)
        s[i - 1] = tau[s[i - 1]]
        out.append(Word(code.q, s))
    return Code(out, code.q, code.n)


def translate_to_zero(code: Code, c: Word) -> Code:
    """Equivalent code in which c becomes the all-zero word.

    At each coordinate where c is nonzero the symbols 0 and c(i) are swapped.
    """
    if c not in code:
        raise WordNotInCode(f"{c} is not a codeword")
    for i, a in enumerate(c.symbols, start=1):
        if a:
            tau = list(range(code.q))
            tau[0], tau[a] = a, 0
            code = permute_symbols(code, i, tau)
    return code
