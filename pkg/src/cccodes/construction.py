"""Pigeonhole construction of constant-composition codes from residue polynomials.

A word (c_1, ..., c_r) of length r = |F_r| is sent to the class of

    prod_{i=1}^{r-1} (x - alpha_i)^{c_i}

in (F_r[x]/(x^d0))^* / F_r^*.  The last coordinate stands for alpha_0 = 0 and
contributes no factor.  The largest fiber of this map is the code.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .composition import Composition, Word, multinomial, walk
from .field import FieldParams, is_prime, operation_tables
from .residue_ring import CosetRep, ResiduePoly, canonical_rep, quotient_size, ring_mul, ring_pow


class InvalidParams(ValueError):
    pass


class InvalidLength(ValueError):
    pass


def mu(p: int, e: int) -> int:
    """e when p divides e, otherwise e - 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    return e if e % p == 0 else e - 1


@dataclass(frozen=True)
class ConstructionParams:
    field: FieldParams
    q: int
    d0: int
    comp: Composition

    @property
    def r(self) -> int:
        return self.field.r

    def validate(self) -> None:
        """Raise InvalidParams naming the first violated precondition."""
        r = self.r
        if self.comp.q != self.q:
            raise InvalidParams(f"composition has {self.comp.q} weights but q={self.q}")
        if self.q > r:
            raise InvalidParams(f"q must satisfy q <= r (q={self.q}, r={r})")
        if self.comp.n != r:
            raise InvalidParams(f"composition must sum to r={r} (sum is {self.comp.n})")
        if not 1 <= self.d0 <= r - 2:
            raise InvalidParams(f"d0 must satisfy 1 <= d0 <= r-2 (d0={self.d0}, r={r})")


@dataclass(frozen=True)
class ConstructedCode:
    params: ConstructionParams
    words: tuple[Word, ...]
    coset: CosetRep
    guaranteed_d: int | None
    verified_d: int | None = None
    fiber_sizes: dict[tuple[int, ...], int] = dc_field(default_factory=dict, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def pigeonhole_bound(self) -> int:
        p = self.params
        return -(-multinomial(p.comp) // quotient_size(p.field, p.d0))


def guaranteed_distance(params: ConstructionParams) -> int | None:
    """Proven lower bound on the minimum distance, or None without a proof.

    The general guarantee needs char(F_r) >= q.  In characteristic 2 with
    q = 3 and d0 = 2 the bound 3 holds only while symbol 2 is unused: once
    exponents 0 and 2 can trade places, (x - a)^2 = x^2 + a^2 is a scalar
    mod x^2 and such swaps stay inside a fiber at distance 2.
    """
    p = params.field.p
    if p >= params.q:
        return mu(p, params.d0) + 2
    if p == 2 and params.q == 3 and params.d0 == 2 and params.comp.weights[2] == 0:
        return 3
    return None


def pi_image(word: Sequence[int], params: ConstructionParams) -> CosetRep:
    r, m = params.r, params.d0
    if len(word) != r:
        raise InvalidLength(f"word has length {len(word)}, expected r={r}")
    if m < 1:
        raise InvalidParams(f"d0 must be >= 1, got {m}")
    alphas = params.field.elements()
    prod = ResiduePoly.one(params.field, m)
    for i in range(1, r):
        c = word[i - 1]
        if c:
            prod = ring_mul(prod, ring_pow(ResiduePoly.linear(alphas[i], m), c))
    return canonical_rep(prod)


class _Kernel:
    """Label-level evaluation of pi_image over a stream of words.

    Consecutive words in lexicographic order share a prefix, so partial
    products are kept per coordinate and only the changed suffix is redone.
    """

    def __init__(self, params: ConstructionParams):
        self.r, self.m = params.r, params.d0
        self.add, self.mul, _, self.inv = operation_tables(params.field)
        alphas = params.field.elements()
        top = max(params.q, 1)
        self.powers = [
            [ring_pow(ResiduePoly.linear(alphas[i], self.m), c).key for c in range(top)]
            for i in range(1, self.r)
        ]
        self.one = (1,) + (0,) * (self.m - 1)

    def _ring_mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        m, add, mul = self.m, self.add, self.mul
        out = [0] * m
        for i in range(m):
            ai = a[i]
            if ai:
                row = mul[ai]
                for j in range(m - i):
                    bj = b[j]
                    if bj:
                        out[i + j] = add[out[i + j]][row[bj]]
        return tuple(out)

    def _normalize(self, a: tuple[int, ...]) -> tuple[int, ...]:
        if a[0] == 1:
            return a
        row = self.mul[self.inv[a[0]]]
        return tuple(row[c] for c in a)

    def image(self, word: Sequence[int]) -> tuple[int, ...]:
        acc = self.one
        for i in range(self.r - 1):
            if word[i]:
                acc = self._ring_mul(acc, self.powers[i][word[i]])
        return self._normalize(acc)

    def images(self, comp: Composition, start: int = 0, stop: int | None = None):
        """Yield ``(word, coset key)`` for ranks in [start, stop)."""
        n_factors = self.r - 1
        prefix = [self.one] * (n_factors + 1)
        for word, pivot in walk(comp, start, stop):
            for i in range(pivot, n_factors):
                c = word[i]
                prefix[i + 1] = self._ring_mul(prefix[i], self.powers[i][c]) if c else prefix[i]
            yield word, self._normalize(prefix[n_factors])


def _count_range(params: ConstructionParams, start: int, stop: int) -> Counter:
    kernel = _Kernel(params)
    return Counter(key for _, key in kernel.images(params.comp, start, stop))


def fiber_counts(params: ConstructionParams, workers: int = 1) -> Counter:
    """Number of words landing in each coset, keyed by coset labels.

    With ``workers > 1`` the rank range is split into contiguous chunks
    counted in separate processes; merging is a plain Counter sum.
    """
    total = multinomial(params.comp)
    if workers <= 1 or total < 2 * workers:
        return _count_range(params, 0, total)
    bounds = [total * w // workers for w in range(workers + 1)]
    counts: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_count_range, params, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        for fut in futures:
            counts.update(fut.result())
    return counts


def select_coset(counts: Counter) -> tuple[int, ...]:
    """Largest fiber; ties go to the lexicographically smallest key."""
    return min(counts, key=lambda key: (-counts[key], key))


def build_code(params: ConstructionParams, workers: int = 1) -> ConstructedCode:
    params.validate()
    counts = fiber_counts(params, workers)
    winner = select_coset(counts)
    kernel = _Kernel(params)
    words = tuple(w for w, key in kernel.images(params.comp) if key == winner)
    assert len(words) == counts[winner]
    coset = CosetRep(ResiduePoly.from_labels(params.field, winner))
    return ConstructedCode(
        params=params,
        words=words,
        coset=coset,
        guaranteed_d=guaranteed_distance(params),
        fiber_sizes=dict(sorted(counts.items())),
    )


def pigeonhole_size(params: ConstructionParams) -> int:
    """ceil(multinomial / r^(d0-1)): the size every largest fiber reaches."""
    return -(-multinomial(params.comp) // quotient_size(params.field, params.d0))


__all__ = [
    "ConstructedCode", "ConstructionParams", "InvalidLength", "InvalidParams",
    "build_code", "fiber_counts", "guaranteed_distance", "mu", "pi_image",
    "pigeonhole_size", "select_coset",
]

