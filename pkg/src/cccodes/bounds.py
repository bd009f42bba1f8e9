"""Exact lower and upper bounds on A_q(n, d, [w_0, ..., w_{q-1}]).

All values are computed from exact rationals.  Lower bounds quoted from the
d = 3 lemmas are floors of their quotients; the pigeonhole construction bound
is a ceiling because it counts words in an actual fiber.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, prod
from typing import Iterator

from .composition import Composition, multinomial
from .construction import ConstructionParams, InvalidParams, guaranteed_distance
from .field import FieldParams, field_new, is_prime


class QTooSmall(ValueError):
    pass


class SOutOfRange(ValueError):
    pass


class WrongQ(ValueError):
    pass


class NoAdmissibleDelta(ValueError):
    pass


def _check(n: int, q: int, comp: Composition) -> None:
    if comp.n != n or comp.q != q:
        raise ValueError(f"composition {comp} does not have n={n}, q={q}")
    if n < 1:
        raise ValueError("length n must be positive")


def primorial_Q(q: int) -> int:
    """Product of all primes <= q - 1."""
    if q < 3:
        raise QTooSmall(f"Q is defined for q >= 3, got {q}")
    return prod(p for p in range(2, q) if is_prime(p))


def L(s: int, q: int) -> int:
    """Smallest l >= s with gcd(l, Q) = 1."""
    Q = primorial_Q(q)
    if not 0 <= s <= Q - 1:
        raise SOutOfRange(f"s={s} outside [0, {Q - 1}]")
    l = s
    while gcd(l, Q) != 1:
        l += 1
    return l


def gamma(n: int, q: int) -> int:
    """L(t_n, q) - t_n where t_n is n reduced mod Q."""
    t = n % primorial_Q(q)
    return L(t, q) - t


def lemma1_rational(n: int, q: int, comp: Composition) -> Fraction:
    _check(n, q, comp)
    return Fraction(multinomial(comp), n + gamma(n, q))


def lemma1_lower(n: int, q: int, comp: Composition) -> int:
    return int(lemma1_rational(n, q, comp))


def lemma2_lower(n: int, q: int, comp: Composition) -> int | None:
    """floor(multinomial / n) when gcd(n, Q) = 1, else None."""
    _check(n, q, comp)
    if gcd(n, primorial_Q(q)) != 1:
        return None
    return multinomial(comp) // n


def lemma3_lower(n: int, comp: Composition) -> int:
    if comp.q != 3:
        raise WrongQ(f"only defined for q = 3, got q = {comp.q}")
    _check(n, 3, comp)
    return multinomial(comp) // (n if n % 2 else n + 1)


def delta_vectors(comp: Composition, i: int, delta: int) -> Iterator[tuple[int, ...]]:
    """Vectors (delta_0..delta_{q-1}) with delta_i = 0, sum delta, delta_l <= w_l."""
    w = comp.weights
    q = comp.q

    def rec(pos: int, left: int) -> Iterator[tuple[int, ...]]:
        if pos == q:
            if left == 0:
                yield ()
            return
        top = 0 if pos == i else min(left, w[pos])
        for v in range(top + 1):
            for tail in rec(pos + 1, left - v):
                yield (v,) + tail

    yield from rec(0, delta)


def lemma4_choice(n: int, q: int, d: int, comp: Composition) -> tuple[int, tuple[int, ...], int]:
    """The (i, delta-vector, denominator) giving the smallest upper bound.

    Every admissible choice yields a valid bound, so the denominator
    multinomial(w_i + delta; w_i, delta_0, ..., delta_{q-1}) is maximised
    over all of them.  Ties keep the first choice in (i, vector) order.
    """
    _check(n, q, comp)
    delta = (d - 1) // 2
    best = None
    for i in range(q):
        for vec in delta_vectors(comp, i, delta):
            denom = multinomial((comp.weights[i],) + vec)
            if best is None or denom > best[2]:
                best = (i, vec, denom)
    if best is None:
        raise NoAdmissibleDelta(f"no delta-vector of total {delta} fits {comp}")
    return best


def lemma4_upper(n: int, q: int, d: int, comp: Composition) -> int:
    return multinomial(comp) // lemma4_choice(n, q, d, comp)[2]


def theorem1_rational(r: int, p: int, q: int, d0: int, comp: Composition) -> Fraction:
    return Fraction(multinomial(comp), r ** (d0 - 1))


def theorem1_lower(r: int, p: int, q: int, d0: int, comp: Composition,
                   field: FieldParams | None = None) -> tuple[int | None, int]:
    """(guaranteed distance, ceil(multinomial / r^(d0-1))) for the construction."""
    if field is None:
        k = _log(r, p)
        field = field_new(p, k)
    elif field.r != r or field.p != p:
        raise InvalidParams(f"field {field!r} does not have r={r}, p={p}")
    params = ConstructionParams(field, q, d0, comp)
    params.validate()
    rat = theorem1_rational(r, p, q, d0, comp)
    return guaranteed_distance(params), -(-rat.numerator // rat.denominator)


def _log(r: int, p: int) -> int:
    if not is_prime(p):
        raise InvalidParams(f"{p} is not prime")
    k, v = 0, 1
    while v < r:
        v *= p
        k += 1
    if v != r or k < 1:
        raise InvalidParams(f"r={r} is not a power of p={p}")
    return k


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    value: int | None = None
    rational: Fraction | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "rational": None if self.rational is None else str(self.rational),
            "value": self.value,
            "note": self.note,
        }

    def line(self, kind: str) -> str:
        rat = "-" if self.rational is None else str(self.rational)
        val = "-" if self.value is None else str(self.value)
        app = "yes" if self.applicable else "no"
        text = f"{kind} {self.name} applicable={app} rational={rat} value={val}"
        return f"{text} note={self.note}" if self.note else text


@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    d: int
    comp: Composition
    lower_bounds: list[BoundEntry] = dc_field(default_factory=list)
    upper_bounds: list[BoundEntry] = dc_field(default_factory=list)

    @property
    def best_lower(self) -> int | None:
        vals = [b.value for b in self.lower_bounds if b.applicable]
        return max(vals) if vals else None

    @property
    def best_upper(self) -> int | None:
        vals = [b.value for b in self.upper_bounds if b.applicable]
        return min(vals) if vals else None

    def to_dict(self) -> dict:
        return {
            "q": self.q, "n": self.n, "d": self.d,
            "composition": list(self.comp.weights),
            "lower_bounds": [b.to_dict() for b in self.lower_bounds],
            "upper_bounds": [b.to_dict() for b in self.upper_bounds],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"q={self.q}", f"n={self.n}", f"d={self.d}", f"composition={self.comp}"]
        lines += [b.line("lower") for b in self.lower_bounds]
        lines += [b.line("upper") for b in self.upper_bounds]
        lines.append(f"best_lower={'-' if self.best_lower is None else self.best_lower}")
        lines.append(f"best_upper={'-' if self.best_upper is None else self.best_upper}")
        return "\n".join(lines) + "\n"


def _theorem1_entry(comp: Composition, d: int, field: FieldParams, d0: int | None) -> BoundEntry:
    r, p, q = field.r, field.p, comp.q
    if comp.n != r:
        return BoundEntry("theorem1", False, note=f"length n={comp.n} differs from r={r}")
    candidates = [d0] if d0 is not None else list(range(1, r - 1))
    best = None
    reason = "no d0 in [1, r-2]"
    for cand in candidates:
        try:
            dist, size = theorem1_lower(r, p, q, cand, comp, field=field)
        except InvalidParams as exc:
            reason = str(exc)
            continue
        if dist is None:
            reason = f"no distance guarantee for p={p}, q={q}, d0={cand}"
            continue
        if dist < d:
            reason = f"d0={cand} only guarantees distance {dist} < {d}"
            continue
        if best is None or size > best[1]:
            best = (cand, size, dist)
    if best is None:
        return BoundEntry("theorem1", False, note=reason)
    cand, size, dist = best
    return BoundEntry("theorem1", True, size, theorem1_rational(r, p, q, cand, comp),
                      note=f"field={p}^{field.k} d0={cand} guaranteed_d={dist} ceiling")


def bound_report(comp: Composition, d: int, field: FieldParams | None = None,
                 d0: int | None = None) -> BoundReport:
    """Every bound that applies to (q, n, d, comp).

    The d = 3 lemmas are reported as not applicable for other distances.
    When ``field`` is given without ``d0``, the construction bound uses the
    d0 giving the largest size among those whose guarantee reaches d.
    """
    n, q = comp.n, comp.q
    lower: list[BoundEntry] = []
    if q < 3:
        lower.append(BoundEntry("lemma1", False, note="requires q >= 3"))
    elif d != 3:
        for name in ("lemma1", "lemma2", "lemma3"):
            lower.append(BoundEntry(name, False, note="stated only for d = 3"))
    else:
        lower.append(BoundEntry("lemma1", True, lemma1_lower(n, q, comp), lemma1_rational(n, q, comp),
                                note=f"gamma={gamma(n, q)}"))
        l2 = lemma2_lower(n, q, comp)
        if l2 is None:
            lower.append(BoundEntry("lemma2", False, note=f"gcd(n, Q)={gcd(n, primorial_Q(q))} != 1"))
        else:
            lower.append(BoundEntry("lemma2", True, l2, Fraction(multinomial(comp), n)))
        if q == 3:
            denom = n if n % 2 else n + 1
            lower.append(BoundEntry("lemma3", True, lemma3_lower(n, comp), Fraction(multinomial(comp), denom)))
        else:
            lower.append(BoundEntry("lemma3", False, note="requires q = 3"))
    if field is not None:
        lower.append(_theorem1_entry(comp, d, field, d0))

    upper: list[BoundEntry] = []
    try:
        i, vec, denom = lemma4_choice(n, q, d, comp)
    except NoAdmissibleDelta as exc:
        upper.append(BoundEntry("lemma4", False, note=str(exc)))
    else:
        upper.append(BoundEntry("lemma4", True, multinomial(comp) // denom, Fraction(multinomial(comp), denom),
                                note=f"i={i} delta={','.join(map(str, vec))} denominator={denom}"))
    return BoundReport(q, n, d, comp, lower, upper)
