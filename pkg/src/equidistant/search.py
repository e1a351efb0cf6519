"""Exhaustive search for maximum equidistant codes.

Symmetry reduction: any equidistant code with at least two words is
equivalent to one containing the zero word and v0 = 0^(n-d) 1^d (translate
one word to zero, then permute coordinates and nonzero symbols to bring a
second word to v0).  v0 is also the lexicographically least weight-d word,
so lowest-index-first branching over the remaining weight-d words puts every
lexicographically least optimal clique inside the v0 branch.  What remains
is a maximum-clique problem on the weight-d words at distance d from v0,
solved by branch and bound with a greedy-colouring bound.
"""

from __future__ import annotations

import itertools
import random
import sys
import threading
import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .bounds import BestBound, best_bound
from .codes import Code, Word, is_equidistant
from .constructions import kernel_sunflower_code, pad_code, simplex_linear_code, sunflower_code
from .errors import CapExceeded, EquidistantError, InvalidParameters
from .fields import prime_power

CANDIDATE_CAP = 2 ** 24


@dataclass
class SearchResult:
    n: int
    q: int
    d: int
    optimum: int
    witness: Code
    explored_nodes: int
    proven_optimal: bool
    budget_exhausted: bool
    upper_bound: int | None = None
    graph_size: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.n, "q": self.q, "d": self.d,
            "optimum": self.optimum,
            "proven_optimal": self.proven_optimal,
            "budget_exhausted": self.budget_exhausted,
            "explored_nodes": self.explored_nodes,
            "upper_bound": self.upper_bound,
            "graph_size": self.graph_size,
            "witness": self.witness.to_json(),
        }


class _BudgetExhausted(Exception):
    pass


class _TargetReached(Exception):
    pass


# -- candidate generation ----------------------------------------------------------

def symbol_dtype(q: int):
    """Smallest unsigned dtype holding symbols 0..q-1."""
    for dt in (np.uint8, np.uint16, np.uint32):
        if q - 1 <= np.iinfo(dt).max:
            return dt
    return np.uint64


def weight_d_words(n: int, q: int, d: int) -> np.ndarray:
    """All words of weight exactly d, as rows of an unsigned array in lexicographic order."""
    rows = []
    for supp in itertools.combinations(range(n), d):
        for syms in itertools.product(range(1, q), repeat=d):
            w = [0] * n
            for i, s in zip(supp, syms):
                w[i] = s
            rows.append(w)
    arr = np.array(rows, dtype=symbol_dtype(q)).reshape(-1, n)
    order = np.lexsort(arr.T[::-1])
    return arr[order]


def _distances_to(arr: np.ndarray, w: np.ndarray) -> np.ndarray:
    return (arr != w).sum(axis=1)


def adjacency_bitsets(words: np.ndarray, d: int, chunk: int = 256) -> list[int]:
    """adj[i] has bit j set iff words i and j are at distance exactly d."""
    V, n = words.shape
    out = []
    if V == 0:
        return out
    if words.max() <= 1 and n <= 64:
        packed = (words.astype(np.uint64) << np.arange(n, dtype=np.uint64)).sum(axis=1, dtype=np.uint64)
        for start in range(0, V, chunk):
            block = packed[start:start + chunk, None] ^ packed[None, :]
            dist = np.bitwise_count(block)
            out.extend(_pack_rows(dist == d))
        return out
    for start in range(0, V, chunk):
        block = words[start:start + chunk, None, :] != words[None, :, :]
        out.extend(_pack_rows(block.sum(axis=2) == d))
    return out


def _pack_rows(mask: np.ndarray) -> list[int]:
    packed = np.packbits(mask, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


# -- clique search -----------------------------------------------------------------

class _CliqueSearch:
    def __init__(self, adj: list[int], lower: int, target: int | None, budget: int | None,
                 deadline: float | None = None):
        self.adj = adj
        self.deadline = deadline   # time.monotonic() value, checked every 16 nodes
        self.best = lower          # size of the incumbent clique
        self.best_clique: list[int] | None = None
        self.target = target       # stop once a clique of this size is found
        self.budget = budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 16 == 1 and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def _record(self, R):
        if len(R) > self.best:
            self.best = len(R)
            self.best_clique = list(R)
            if self.target is not None and self.best >= self.target:
                raise _TargetReached

    def _colour(self, P: int) -> list[tuple[int, int]]:
        """Greedy sequential colouring of P; (vertex, colour) in colour order."""
        adj = self.adj
        order = []
        colour = 0
        U = P
        while U:
            colour += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~(adj[v] | low)
                U &= ~low
                order.append((v, colour))
        return order

    def expand(self, R: list[int], P: int):
        """Colour-ordered branching (MCQ style); fastest, any optimal clique."""
        self._tick()
        adj = self.adj
        for v, c in reversed(self._colour(P)):
            if len(R) + c <= self.best:
                return
            R.append(v)
            NP = P & adj[v]
            if NP:
                self.expand(R, NP)
            else:
                self._record(R)
            R.pop()
            P &= ~(1 << v)

    def expand_lex(self, R: list[int], P: int):
        """Lowest-index-first branching; the first clique of each size found is
        the lexicographically least one."""
        self._tick()
        adj = self.adj
        while P:
            if len(R) + self._colour_count(P) <= self.best:
                return
            low = P & -P
            v = low.bit_length() - 1
            R.append(v)
            NP = P & adj[v]
            if NP:
                self.expand_lex(R, NP)
            else:
                self._record(R)
            R.pop()
            P &= ~low

    def _colour_count(self, P: int) -> int:
        adj = self.adj
        colour = 0
        U = P
        while U:
            colour += 1
            Q = U
            while Q:
                low = Q & -Q
                Q &= ~(adj[low.bit_length() - 1] | low)
                U &= ~low
        return colour


def _bits_to_indices(P: int) -> np.ndarray:
    raw = np.frombuffer(P.to_bytes((P.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little"))


def stabiliser_orbits(chosen: np.ndarray, cands: np.ndarray, q: int) -> list[np.ndarray]:
    """Group candidate rows into orbits of the pointwise stabiliser of ``chosen``.

    The stabiliser permutes coordinates that carry the same column of chosen
    symbols, and at each coordinate permutes the symbols not used by any
    chosen word there.  A candidate's orbit is therefore fixed by, per column
    class, the multiset of its symbols with unused symbols collapsed to one
    marker.  (This is a subgroup of the full stabiliser, which is all the
    pruning argument needs.)
    """
    cols, cls = np.unique(chosen.T, axis=0, return_inverse=True)
    cls = cls.reshape(-1)
    used = np.zeros((len(cols), q), dtype=bool)
    for j in range(chosen.shape[0]):
        used[np.arange(len(cols)), cols[:, j]] = True
    # symbol -> itself if used at that coordinate, else the marker q
    per_coord_used = used[cls]                                   # (n, q)
    sym = cands.astype(np.int64)
    is_used = per_coord_used[np.arange(sym.shape[1])[None, :], sym]
    mapped = np.where(is_used, sym, q)
    key = cls[None, :] * (q + 1) + mapped                         # (m, n)
    # a sorted key row is the multiset (column class, mapped symbol)
    _, inverse = np.unique(np.sort(key, axis=1), axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    splits = np.flatnonzero(np.diff(inverse[order])) + 1
    return np.split(order, splits)


class _SymmetricSearch:
    """Orbit branching near the root, colour-ordered branching below."""

    def __init__(self, search: _CliqueSearch, nbrs: np.ndarray, base: np.ndarray, q: int,
                 depth: int = 3, min_size: int = 48):
        self.search = search
        self.nbrs = nbrs
        self.base = base
        self.q = q
        self.depth = depth
        self.min_size = min_size

    def run(self, P: int):
        self.expand([], P)

    def expand(self, R: list[int], P: int):
        s = self.search
        if len(R) >= self.depth or P.bit_count() < self.min_size:
            s.expand(R, P)
            return
        s._tick()
        if len(R) + s._colour_count(P) <= s.best:
            return
        idx = _bits_to_indices(P)
        chosen = np.vstack([self.base, self.nbrs[R]]) if R else self.base
        orbits = stabiliser_orbits(chosen, self.nbrs[idx], self.q)
        # big orbits first: excluding them shrinks later branches the most
        orbits.sort(key=len, reverse=True)
        for orbit in orbits:
            if len(R) + s._colour_count(P) <= s.best:
                return
            members = idx[orbit]
            r = int(members[0])
            sub = P & s.adj[r]
            R.append(r)
            if sub:
                self.expand(R, sub)
            else:
                s._record(R)
            R.pop()
            for v in members.tolist():
                P &= ~(1 << v)


# -- public API --------------------------------------------------------------------

def seed_codes(n: int, q: int, d: int) -> list[tuple[str, Code]]:
    """Known equidistant constructions with parameters (n, q, d)."""
    out = []
    if d % 2 == 0:
        out.append(("sunflower", sunflower_code(n, d, q)))
        if n >= d:
            out.append(("kernel-sunflower", kernel_sunflower_code(n, d, q)))
    try:
        prime_power(q)
    except EquidistantError:
        return out
    k = 1
    while q ** (k - 1) <= d:
        length = (q ** k - 1) // (q - 1)
        if q ** (k - 1) == d and length <= n and q ** k <= 4096:
            out.append(("simplex", pad_code(simplex_linear_code(q, k), n)))
        k += 1
    return out


def candidate_count(n: int, q: int, d: int) -> int:
    return comb(n, d) * (q - 1) ** d


def _with_depth(fn, depth: int):
    """Run fn with room for ``depth`` nested expand calls (one per clique vertex).

    Deep searches go to a helper thread with a large stack; exceptions are
    re-raised in the caller.
    """
    need = depth + 200
    if need < sys.getrecursionlimit():
        return fn()
    box = {}

    def target():
        try:
            box["value"] = fn()
        except BaseException as exc:  # handed back to the caller
            box["error"] = exc

    old_limit, old_stack = sys.getrecursionlimit(), threading.stack_size()
    sys.setrecursionlimit(need)
    threading.stack_size(min(64 * 2 ** 20 + need * 16 * 1024, 2 ** 31 - 1))
    try:
        t = threading.Thread(target=target)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    if "error" in box:
        raise box["error"]
    return box.get("value")


def max_equidistant(n: int, q: int, d: int, budget: int | None = None, *,
                    canonical: bool = False, use_bounds: bool = True,
                    seed: bool = True, cap: int = CANDIDATE_CAP,
                    order_seed: int | None = None,
                    time_limit: float | None = None) -> SearchResult:
    """Largest equidistant code in H_q^n with distance exactly d.

    ``use_bounds`` stops the search as soon as an incumbent meets
    ``best_bound``; ``seed`` starts from the best known construction.
    ``order_seed`` shuffles the vertex order (testing only; the optimum must
    not depend on it, but canonical witnesses do).  ``time_limit`` (seconds)
    is a second budget, treated exactly like the node budget.
    """
    if q < 2 or not 1 <= d <= n:
        raise InvalidParameters(f"need q >= 2 and 1 <= d <= n, got n={n}, q={q}, d={d}")
    if candidate_count(n, q, d) > cap:
        raise CapExceeded(f"{candidate_count(n, q, d)} weight-{d} candidates exceed the cap {cap}")

    zero = np.zeros(n, dtype=symbol_dtype(q))
    v0 = np.array([0] * (n - d) + [1] * d, dtype=symbol_dtype(q))
    deadline = time.monotonic() + time_limit if time_limit is not None else None
    cands = weight_d_words(n, q, d)
    nbrs = cands[_distances_to(cands, v0) == d]
    if order_seed is not None:
        perm = list(range(len(nbrs)))
        random.Random(order_seed).shuffle(perm)
        nbrs = nbrs[perm]
    adj = adjacency_bitsets(nbrs, d)

    upper = best_bound(n, q, d).minimum if use_bounds else None
    target = upper - 2 if upper is not None else None

    seed_code = None
    lower = 0
    if seed:
        seeds = sorted(seed_codes(n, q, d), key=lambda kv: len(kv[1]))
        if seeds:
            seed_code = seeds[-1][1]
            # canonical mode must still find an equal-size lexicographically least clique
            lower = max(0, len(seed_code) - 2 - (1 if canonical else 0))

    search = _CliqueSearch(adj, lower, target, budget, deadline)
    exhausted = False
    if target is not None and lower >= target and not canonical:
        pass  # the seed already meets the global bound
    else:
        P = (1 << len(adj)) - 1

        def run():
            if P == 0:
                search._record([])
            elif canonical:
                search.expand_lex([], P)
            else:
                _SymmetricSearch(search, nbrs, np.vstack([zero, v0]), q).run(P)

        try:
            _with_depth(run, len(adj))
        except _TargetReached:
            pass
        except _BudgetExhausted:
            exhausted = True

    q_ = q
    if search.best_clique is not None:
        words = [Word(q_, zero.tolist()), Word(q_, v0.tolist())]
        words += [Word(q_, nbrs[i].tolist()) for i in search.best_clique]
        witness = Code(words, q_, n)
    elif seed_code is not None and len(seed_code) >= 2:
        witness = seed_code
    else:
        witness = Code([Word(q_, zero.tolist()), Word(q_, v0.tolist())], q_, n)

    optimum = len(witness)
    assert is_equidistant(witness) == d, "search produced an invalid witness"
    proven = not exhausted
    return SearchResult(n, q, d, optimum, witness, search.nodes, proven, exhausted,
                        upper, len(adj))


@dataclass
class TightnessReport:
    n: int
    q: int
    d: int
    optimum: int
    bound: int
    gap: int
    proven_optimal: bool
    matches: list[str] = field(default_factory=list)
    bounds: BestBound | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n, "q": self.q, "d": self.d, "optimum": self.optimum,
            "bound": self.bound, "gap": self.gap, "proven_optimal": self.proven_optimal,
            "matches": self.matches,
            "bounds": self.bounds.to_json() if self.bounds else None,
        }


def tightness_report(n: int, q: int, d: int, budget: int | None = None) -> TightnessReport:
    result = max_equidistant(n, q, d, budget)
    bb = best_bound(n, q, d)
    wm = result.witness.distance_multiset
    matches = [name for name, c in seed_codes(n, q, d)
               if len(c) == result.optimum and c.distance_multiset == wm]
    return TightnessReport(n, q, d, result.optimum, bb.minimum, bb.minimum - result.optimum,
                           result.proven_optimal, matches, bb)
