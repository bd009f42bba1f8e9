"""Constant-composition word spaces: counting, streaming enumeration, distance."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

Word = tuple[int, ...]


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Composition:
    """Symbol multiplicities ``weights[j]`` for the alphabet {0, ..., q-1}."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) < 2:
            raise ValueError(f"alphabet size q must be >= 2, got {len(self.weights)}")
        if any(w < 0 for w in self.weights):
            raise ValueError(f"weights must be nonnegative: {self.weights}")

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(tuple(int(t) for t in text.split(",")))

    @property
    def q(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return sum(self.weights)

    def __str__(self) -> str:
        return ",".join(map(str, self.weights))

    def matches(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            return False
        counts = Counter(word)
        if any(not (isinstance(s, int) and 0 <= s < self.q) for s in counts):
            return False
        return all(counts.get(j, 0) == w for j, w in enumerate(self.weights))


def multinomial(comp: Composition | Sequence[int]) -> int:
    """n! / (w_0! ... w_{q-1}!) exactly."""
    weights = comp.weights if isinstance(comp, Composition) else tuple(comp)
    result, total = 1, 0
    for w in weights:
        total += w
        # running product of binomials stays integral at every step
        result = result * factorial(total) // (factorial(w) * factorial(total - w))
    return result


def compositions(n: int, q: int) -> Iterator[Composition]:
    """All weight vectors of length q summing to n, lexicographically."""
    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for w in range(remaining + 1):
            for tail in rec(remaining - w, slots - 1):
                yield (w,) + tail
    for ws in rec(n, q):
        yield Composition(ws)


def first_word(comp: Composition) -> Word:
    return tuple(s for s, w in enumerate(comp.weights) for _ in range(w))


def _next_pivot(a: list[int]) -> int:
    """Advance ``a`` to the next multiset permutation in place.

    Returns the first position that changed, or -1 when ``a`` was the last.
    """
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return -1
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return i


def walk(comp: Composition, start: int = 0, stop: int | None = None) -> Iterator[tuple[Word, int]]:
    """Yield ``(word, pivot)`` for ranks in [start, stop).

    ``pivot`` is the first coordinate that differs from the previously
    yielded word (0 for the first one), which lets callers reuse prefix work.
    """
    total = multinomial(comp)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    a = list(unrank(comp, start))
    yield tuple(a), 0
    for _ in range(stop - start - 1):
        pivot = _next_pivot(a)
        yield tuple(a), pivot


def enumerate_words(comp: Composition, start: int = 0, stop: int | None = None) -> Iterator[Word]:
    """Stream every word of the composition in lexicographic order."""
    for word, _ in walk(comp, start, stop):
        yield word


def unrank(comp: Composition, rank: int) -> Word:
    """The word at position ``rank`` of the lexicographic enumeration."""
    total = multinomial(comp)
    if not 0 <= rank < total:
        raise IndexError(f"rank {rank} out of range [0, {total})")
    counts = list(comp.weights)
    remaining = comp.n
    word = []
    for _ in range(comp.n):
        for s, c in enumerate(counts):
            if not c:
                continue
            # words starting with s: multinomial of the rest
            block = total * c // remaining
            if rank < block:
                word.append(s)
                counts[s] -= 1
                total = block
                break
            rank -= block
        remaining -= 1
    return tuple(word)


def rank(comp: Composition, word: Sequence[int]) -> int:
    counts = list(comp.weights)
    total = multinomial(comp)
    remaining = comp.n
    out = 0
    for sym in word:
        for s in range(sym):
            if counts[s]:
                out += total * counts[s] // remaining
        total = total * counts[sym] // remaining
        counts[sym] -= 1
        remaining -= 1
    return out


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    return sum(a != b for a, b in zip(u, v))
