"""Arithmetic in GF(p^k).

Elements are stored as coefficient vectors of residue polynomials modulo a
monic irreducible of degree k, constant term first.  The integer label of an
element is its base-p encoding, so ``0`` is the zero element and the full
field is listed in label order by :func:`enumerate_elements`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence


class NotPrime(ValueError):
    pass


class ReducibleModulus(ValueError):
    pass


class MixedFields(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# --- polynomials over GF(p), coefficient lists constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over GF(p)."""
    a = _trim([c % p for c in a])
    db = len(b) - 1
    while len(a) - 1 >= db:
        lead = a[-1]
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - lead * bj) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    """All monic polynomials of the given degree, ascending by base-p code."""
    for code in range(p ** degree):
        coeffs = [(code // p ** j) % p for j in range(degree)]
        yield coeffs + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = [c % p for c in poly]
    deg = len(poly) - 1
    if deg < 1 or poly[-1] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for candidate in _monic_polys(p, k):
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class FieldParams:
    """The field GF(p^k) together with its defining modulus.

    ``modulus`` holds k+1 coefficients, constant term first; it is monic.
    For k = 1 the modulus is the placeholder ``(0, 1)`` and arithmetic is
    plain integer arithmetic mod p.
    """

    p: int
    k: int
    modulus: tuple[int, ...] = dc_field(compare=True)

    @property
    def r(self) -> int:
        return self.p ** self.k

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Element from its integer label or from its coefficient vector."""
        if isinstance(value, int):
            if not 0 <= value < self.r:
                raise ValueError(f"label {value} out of range for {self!r}")
            return FieldElement(self, value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            coeffs = _poly_mod(coeffs, self.modulus, self.p) if self.k > 1 else [coeffs[0]]
        return FieldElement(self, _encode(coeffs, self.p))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.r)]


def field_new(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldParams:
    """Build GF(p^k).

    Without an explicit ``modulus`` the lexicographically smallest monic
    irreducible of degree k is used, where candidates are ordered by their
    base-p code with the constant term as the least significant digit.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        mod = (0, 1) if k == 1 else smallest_irreducible(p, k)
        return FieldParams(p, k, mod)
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != k + 1 or mod[-1] != 1:
        raise ValueError(f"modulus must be monic of degree {k}: {tuple(modulus)}")
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")
    return FieldParams(p, k, mod)


def _encode(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p ** j for j, c in enumerate(coeffs))


@dataclass(frozen=True)
class FieldElement:
    params: FieldParams
    index: int

    @cached_property
    def coeffs(self) -> tuple[int, ...]:
        p, i = self.params.p, self.index
        out = []
        for _ in range(self.params.k):
            i, c = divmod(i, p)
            out.append(c)
        return tuple(out)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.params != self.params:
            raise MixedFields(f"{self.params!r} vs {other.params!r}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.params.p
        return self.params.element([(a + b) % p for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.params.p
        return self.params.element([(a - b) % p for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> FieldElement:
        p = self.params.p
        return self.params.element([(-a) % p for a in self.coeffs])

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p, k = self.params.p, self.params.k
        if k == 1:
            return FieldElement(self.params, self.index * other.index % p)
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return self.params.element(_poly_mod(prod, self.params.modulus, p))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.params.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inv()

    def __bool__(self) -> bool:
        return self.index != 0

    def inv(self) -> FieldElement:
        if self.index == 0:
            raise DivisionByZero(f"zero has no inverse in {self.params!r}")
        # a^(r-2) = a^(-1) in the multiplicative group of order r-1
        return self ** (self.params.r - 2)

    def __repr__(self) -> str:
        if self.params.k == 1:
            return str(self.index)
        terms = []
        for j, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            coef = "" if c == 1 and mono else str(c)
            terms.append(coef + mono)
        return "+".join(terms) or "0"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def enumerate_elements(params: FieldParams) -> list[FieldElement]:
    """alpha_0 = 0, alpha_1, ..., alpha_{r-1} in label order."""
    return params.elements()


def operation_tables(params: FieldParams) -> tuple[list[list[int]], list[list[int]], list[int], list[int]]:
    """Addition, multiplication, negation and inversion tables on labels.

    Every entry is produced by the polynomial arithmetic above; the tables
    only memoize it for the enumeration kernels.  ``inv[0]`` is ``0``.
    """
    return _tables(params)


_TABLE_CACHE: dict[FieldParams, tuple] = {}


def _tables(params: FieldParams):
    cached = _TABLE_CACHE.get(params)
    if cached is None:
        elems = params.elements()
        add_t = [[(a + b).index for b in elems] for a in elems]
        mul_t = [[(a * b).index for b in elems] for a in elems]
        neg_t = [(-a).index for a in elems]
        inv_t = [0] + [a.inv().index for a in elems[1:]]
        cached = _TABLE_CACHE[params] = (add_t, mul_t, neg_t, inv_t)
    return cached


__all__ = [
    "DivisionByZero", "FieldElement", "FieldParams", "MixedFields", "NotPrime",
    "ReducibleModulus", "add", "enumerate_elements", "field_new", "inv",
    "is_irreducible", "is_prime", "mul", "neg", "operation_tables", "sub",
]
