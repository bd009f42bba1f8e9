"""Ground truth for small codes: exact minimum distance and exact maximum codes."""
from __future__ import annotations

import dataclasses
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .composition import Composition, LengthMismatch, Word, enumerate_words, multinomial
from .construction import ConstructedCode

DEFAULT_CAP = 5000


class TooFewWords(ValueError):
    pass


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class VerifiedCode:
    words: tuple[Word, ...]
    comp: Composition
    min_distance: int | None

    @property
    def n(self) -> int:
        return self.comp.n

    @property
    def q(self) -> int:
        return self.comp.q

    @property
    def size(self) -> int:
        return len(self.words)


def _as_array(words: Sequence[Sequence[int]]) -> np.ndarray:
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise LengthMismatch(f"words have differing lengths {sorted(lengths)}")
    return np.asarray(words, dtype=np.int16)


def exact_min_distance(words: Sequence[Sequence[int]]) -> int:
    """Minimum Hamming distance over all unordered pairs (full scan)."""
    if len(words) < 2:
        raise TooFewWords("minimum distance needs at least two words")
    arr = _as_array(words)
    best = arr.shape[1]
    for i in range(len(arr) - 1):
        d = int((arr[i + 1:] != arr[i]).sum(axis=1).min())
        if d < best:
            best = d
            if best == 0:
                break
    return best


def check_composition(words: Sequence[Sequence[int]], comp: Composition) -> bool:
    return all(comp.matches(tuple(w)) for w in words)


def verify_words(words: Sequence[Sequence[int]], comp: Composition) -> VerifiedCode:
    words = tuple(tuple(w) for w in words)
    if len(set(words)) != len(words):
        raise ValueError("code contains duplicate words")
    if not check_composition(words, comp):
        raise ValueError(f"some word does not have composition {comp}")
    d = exact_min_distance(words) if len(words) >= 2 else None
    return VerifiedCode(words, comp, d)


def verify_code(code: ConstructedCode) -> ConstructedCode:
    """Return ``code`` with ``verified_d`` filled in by a full pairwise scan."""
    v = verify_words(code.words, code.params.comp)
    return dataclasses.replace(code, verified_d=v.min_distance)


def _compatibility_graph(words: list[Word], d: int) -> list[int]:
    arr = _as_array(words)
    adj = []
    for i in range(len(arr)):
        far = np.flatnonzero((arr != arr[i]).sum(axis=1) >= d)
        mask = 0
        for j in far.tolist():
            mask |= 1 << j
        adj.append(mask)
    return adj


def _max_clique(adj: list[int], n: int) -> list[int]:
    """Branch and bound with greedy colouring bounds (MCQ style).

    Candidates are coloured in ascending vertex order and branched on from
    the highest colour down; the first clique found at each size wins, which
    keeps the witness deterministic.
    """
    best: list[int] = []

    def colour(p: int) -> list[tuple[int, int]]:
        order = []
        uncoloured = p
        c = 0
        while uncoloured:
            c += 1
            q = uncoloured
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~(1 << v)
                q &= ~adj[v]
                uncoloured &= ~(1 << v)
                order.append((v, c))
        return order

    def expand(clique: list[int], p: int) -> None:
        nonlocal best
        order = colour(p)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            newp = p & adj[v]
            if newp:
                expand(clique, newp)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            p &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(best)


def exact_max_code(comp: Composition, d: int, cap: int = DEFAULT_CAP) -> tuple[int, list[Word]]:
    """Exact A_q(n, d, comp) with a witness code attaining it.

    Raises InstanceTooLarge before enumerating anything when the word space
    exceeds ``cap`` vertices.
    """
    total = multinomial(comp)
    if total > cap:
        raise InstanceTooLarge(f"{total} words exceed the cap of {cap}")
    words = list(enumerate_words(comp))
    if d <= 1 or total == 1:
        return total, words
    adj = _compatibility_graph(words, d)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, total + 100))
    try:
        chosen = _max_clique(adj, total)
    finally:
        sys.setrecursionlimit(limit)
    return len(chosen), [words[i] for i in chosen]
