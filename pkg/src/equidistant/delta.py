"""Set families, sunflower (Delta-system) detection and its q-ary analogue.

A q-ary constant-weight code is turned into a binary one with ``psi_embed``
(each symbol becomes a length-q gadget block); a binary kernel found there
is pulled back block by block to a q-ary kernel.  Intersection sizes may be
half-integers in the q-ary setting, so they travel doubled (``l2 = 2*l``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .codes import Code, Word, q_intersection_doubled, support, weight
from .errors import InvalidParameters, NotConstantWeight, NotSingleIntersection


@dataclass(frozen=True)
class SetFamily:
    ground_size: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        if len(set(sets)) != len(sets):
            raise InvalidParameters("family contains a repeated set")
        for s in sets:
            if any(not 1 <= e <= self.ground_size for e in s):
                raise InvalidParameters(f"{sorted(s)} is not a subset of [1, {self.ground_size}]")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(n, tuple(frozenset(s) for s in sets))

    @classmethod
    def from_code(cls, code: Code) -> "SetFamily":
        return cls(code.n, tuple(support(w) for w in code))

    def __len__(self):
        return len(self.sets)


@dataclass(frozen=True)
class DeltaCertificate:
    kernel: frozenset[int]
    petal_supports: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class DeltaQCertificate:
    kernel: frozenset[int]
    shared_symbols: dict
    code: Code
    binary_kernel: frozenset[int] | None = None


# -- psi -----------------------------------------------------------------------

def psi_block(symbol: int, q: int) -> tuple[int, ...]:
    """Gadget for one symbol: zeros for 0, ones at positions symbol and q otherwise."""
    block = [0] * q
    if symbol:
        block[symbol - 1] = 1
        block[q - 1] = 1
    return tuple(block)


def psi_embed(x: Word) -> Word:
    return Word(2, tuple(b for s in x.symbols for b in psi_block(s, x.q)))


def psi_code(code: Code) -> Code:
    return Code([psi_embed(w) for w in code], 2, code.q * code.n)


def block_of(i: int, q: int) -> range:
    """Coordinates (1-based) of block I_i = [q(i-1)+1, qi] in the psi image."""
    return range(q * (i - 1) + 1, q * i + 1)


# -- binary families ---------------------------------------------------------------

def find_kernel(F: SetFamily) -> DeltaCertificate | None:
    sets = F.sets
    if not sets:
        return DeltaCertificate(frozenset(), ())
    if len(sets) == 1:
        return DeltaCertificate(sets[0], (frozenset(),))
    # any Delta-system kernel equals every pairwise intersection
    D = sets[0] & sets[1]
    for a, b in itertools.combinations(sets, 2):
        if a & b != D:
            return None
    return DeltaCertificate(D, tuple(s - D for s in sets))


def family_parameters(F: SetFamily) -> tuple[int, int] | None:
    """(k, l) if every set has size k and every pair meets in exactly l points.

    Needs at least two sets, otherwise l is undetermined.
    """
    sizes = {len(s) for s in F.sets}
    if len(F) < 2 or len(sizes) != 1:
        return None
    inter = {len(a & b) for a, b in itertools.combinations(F.sets, 2)}
    if len(inter) != 1:
        return None
    return sizes.pop(), inter.pop()


def max_delta_size(n: int, k: int, l: int) -> int:
    if not 0 <= l < k <= n:
        raise InvalidParameters(f"need 0 <= l < k <= n, got n={n}, k={k}, l={l}")
    return (n - l) // (k - l)


def deza_threshold(k: int, l: int) -> int:
    """Families of size above this are Delta-systems."""
    if not 0 <= l < k:
        raise InvalidParameters(f"need 0 <= l < k, got k={k}, l={l}")
    return max(l + 2, (k - l) ** 2 + (k - l) + 1)


def deza_q_threshold(k: int, l_doubled: int, q: int) -> int:
    """q-ary analogue of ``deza_threshold``; l is passed doubled.

    max{2l + 2, 4(k-l)^2 + 2(k-l) + 1, q - 1}.  With t = 2(k-l) = 2k - l2 the
    middle term is t^2 + t + 1, so everything stays integral.
    """
    if not 0 <= l_doubled < 2 * k:
        raise InvalidParameters(f"need 0 <= 2l < 2k, got k={k}, 2l={l_doubled}")
    t = 2 * k - l_doubled
    return max(l_doubled + 2, t * t + t + 1, q - 1)


# -- q-ary families ----------------------------------------------------------------

def qary_family_parameters(code: Code) -> tuple[int, int]:
    """(k, 2l) for a constant-weight code with a single q-ary intersection size."""
    weights = {weight(w) for w in code}
    if len(weights) > 1:
        raise NotConstantWeight(f"weights {sorted(weights)} are not all equal")
    k = weights.pop() if weights else 0
    l2s = {q_intersection_doubled(x, y) for x, y in itertools.combinations(code.words, 2)}
    if len(l2s) > 1:
        raise NotSingleIntersection(f"doubled intersections {sorted(l2s)} are not all equal")
    return k, (l2s.pop() if l2s else 2 * k)


def is_delta_q_system(code: Code, kernel: Iterable[int]) -> bool:
    """Direct check of both conditions for a candidate kernel (1-based coordinates)."""
    K = frozenset(kernel)
    words = code.words
    for x, y in itertools.combinations(words, 2):
        if any(x[i - 1] != y[i - 1] or x[i - 1] == 0 for i in K):
            return False
    petals = [support(x) - K for x in words]
    for a, b in itertools.combinations(petals, 2):
        if a & b:
            return False
    return all(K <= support(x) for x in words)


def detect_delta_q(code: Code) -> DeltaQCertificate | None:
    k, l2 = qary_family_parameters(code)
    if len(code) <= 1:
        K = support(code.words[0]) if len(code) else frozenset()
        shared = {i: code.words[0][i - 1] for i in K} if len(code) else {}
        return DeltaQCertificate(K, shared, code)
    if l2 % 2:
        return None
    q = code.q
    image = psi_code(code)
    fam = SetFamily.from_code(image)
    if family_parameters(fam) != (2 * k, l2):
        raise AssertionError("psi did not double the family parameters")
    cert = find_kernel(fam)
    if cert is None:
        return None
    D = cert.kernel
    K = set()
    for i in range(1, code.n + 1):
        hit = len(D & set(block_of(i, q)))
        if hit == 1:
            return None
        if hit == 2:
            K.add(i)
    K = frozenset(K)
    if len(D) != 2 * len(K) or 2 * len(K) != l2:
        return None
    if not is_delta_q_system(code, K):
        return None
    first = code.words[0]
    return DeltaQCertificate(K, {i: first[i - 1] for i in sorted(K)}, code, D)
