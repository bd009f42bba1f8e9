"""Truncated polynomial rings F_r[x]/(x^m) and their unit group modulo scalars."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import FieldElement, FieldParams


class MixedRings(ValueError):
    pass


class NotAUnit(ValueError):
    pass


@dataclass(frozen=True)
class ResiduePoly:
    """An element of F_r[x]/(x^m); ``coeffs[j]`` is the coefficient of x^j."""

    coeffs: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("truncation order m must be >= 1")

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @property
    def field(self) -> FieldParams:
        return self.coeffs[0].params

    @property
    def is_unit(self) -> bool:
        return bool(self.coeffs[0])

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.coeffs)

    @classmethod
    def from_labels(cls, field: FieldParams, labels: Sequence[int]) -> ResiduePoly:
        return cls(tuple(field.element(int(v)) for v in labels))

    @classmethod
    def one(cls, field: FieldParams, m: int) -> ResiduePoly:
        return cls.from_labels(field, [1] + [0] * (m - 1))

    @classmethod
    def linear(cls, alpha: FieldElement, m: int) -> ResiduePoly:
        """The class of x - alpha."""
        labels = [(-alpha).index, 1] + [0] * (m - 2)
        return cls.from_labels(alpha.params, labels[:m])

    def scale(self, c: FieldElement) -> ResiduePoly:
        return ResiduePoly(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: ResiduePoly) -> ResiduePoly:
        return ring_mul(self, other)

    def __pow__(self, e: int) -> ResiduePoly:
        return ring_pow(self, e)

    def __repr__(self) -> str:
        return f"ResiduePoly({list(self.coeffs)}, m={self.m})"


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class CosetRep:
    """Normalized member (constant coefficient 1) of a unit class modulo F_r^*.

    Representatives compare lexicographically on coefficient labels, lowest
    degree first.
    """

    poly: ResiduePoly

    def __post_init__(self) -> None:
        if self.poly.coeffs[0].index != 1:
            raise ValueError("coset representative must have constant coefficient 1")

    @property
    def key(self) -> tuple[int, ...]:
        return self.poly.key

    def __lt__(self, other: CosetRep) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"CosetRep({list(self.poly.coeffs)})"


def _check_same(a: ResiduePoly, b: ResiduePoly) -> None:
    if a.m != b.m or a.field != b.field:
        raise MixedRings(f"m={a.m} over {a.field!r} vs m={b.m} over {b.field!r}")


def ring_mul(a: ResiduePoly, b: ResiduePoly) -> ResiduePoly:
    _check_same(a, b)
    m = a.m
    zero = a.field.zero
    out = [zero] * m
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(m - i):
            out[i + j] = out[i + j] + ai * b.coeffs[j]
    return ResiduePoly(tuple(out))


def ring_pow(a: ResiduePoly, e: int) -> ResiduePoly:
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    result = ResiduePoly.one(a.field, a.m)
    base = a
    while e:
        if e & 1:
            result = ring_mul(result, base)
        e >>= 1
        if e:
            base = ring_mul(base, base)
    return result


def ring_inv(a: ResiduePoly) -> ResiduePoly:
    """Inverse of a unit by solving a*b = 1 one degree at a time."""
    if not a.is_unit:
        raise NotAUnit(f"{a!r} has zero constant term")
    c0_inv = a.coeffs[0].inv()
    b = [c0_inv]
    for j in range(1, a.m):
        acc = a.field.zero
        for i in range(1, j + 1):
            acc = acc + a.coeffs[i] * b[j - i]
        b.append(-(acc * c0_inv))
    return ResiduePoly(tuple(b))


def canonical_rep(a: ResiduePoly) -> CosetRep:
    if not a.is_unit:
        raise NotAUnit(f"{a!r} has zero constant term")
    return CosetRep(a.scale(a.coeffs[0].inv()))


def units(field: FieldParams, m: int) -> Iterator[ResiduePoly]:
    """Every unit of F_r[x]/(x^m), in label order."""
    r = field.r
    for c0 in range(1, r):
        for code in range(r ** (m - 1)):
            rest = [(code // r ** j) % r for j in range(m - 1)]
            yield ResiduePoly.from_labels(field, [c0] + rest)


def quotient_size(field: FieldParams, m: int) -> int:
    """Order of (F_r[x]/(x^m))^* / F_r^*."""
    return field.r ** (m - 1)
