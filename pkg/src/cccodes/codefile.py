"""Plain-text code files.

Layout::

    # q=3
    # n=9
    # composition=3,3,3
    # field=3^2
    # d0=3
    # guaranteed_d=5
    000111222
    ...

The first three header lines are required; the rest are optional.  Each body
line is one codeword written with the digits 0..q-1 (so q <= 10).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .composition import Composition, Word

_KEYS = ("q", "n", "composition", "field", "d0", "guaranteed_d")


class MalformedCodeFile(ValueError):
    pass


@dataclass(frozen=True)
class CodeFile:
    comp: Composition
    words: tuple[Word, ...]
    field: tuple[int, int] | None = None
    d0: int | None = None
    guaranteed_d: int | None = None
    has_guarantee_line: bool = False

    @property
    def q(self) -> int:
        return self.comp.q

    @property
    def n(self) -> int:
        return self.comp.n

    def dumps(self) -> str:
        if self.q > 10:
            raise ValueError("digit body format supports q <= 10 only")
        lines = [f"# q={self.q}", f"# n={self.n}", f"# composition={self.comp}"]
        if self.field is not None:
            lines.append(f"# field={self.field[0]}^{self.field[1]}")
        if self.d0 is not None:
            lines.append(f"# d0={self.d0}")
        if self.has_guarantee_line or self.guaranteed_d is not None:
            lines.append(f"# guaranteed_d={'none' if self.guaranteed_d is None else self.guaranteed_d}")
        lines += ["".join(map(str, w)) for w in self.words]
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_bytes(self.dumps().encode("ascii"))


def _int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise MalformedCodeFile(f"header {key!r} is not an integer: {value!r}") from None


def loads(text: str) -> CodeFile:
    if text and not text.endswith("\n"):
        raise MalformedCodeFile("file must end with a newline")
    header: dict[str, str] = {}
    body: list[str] = []
    for lineno, line in enumerate(text.split("\n")[:-1], 1):
        if not line:
            raise MalformedCodeFile(f"line {lineno}: blank line")
        if line.startswith("#"):
            if body:
                raise MalformedCodeFile(f"line {lineno}: header after codewords")
            key, sep, value = line[1:].strip().partition("=")
            key = key.strip()
            if not sep or key not in _KEYS:
                raise MalformedCodeFile(f"line {lineno}: unrecognised header {line!r}")
            if key in header:
                raise MalformedCodeFile(f"line {lineno}: repeated header {key!r}")
            header[key] = value.strip()
        else:
            body.append(line)
    for key in ("q", "n", "composition"):
        if key not in header:
            raise MalformedCodeFile(f"missing header '# {key}='")
    q, n = _int("q", header["q"]), _int("n", header["n"])
    try:
        comp = Composition.parse(header["composition"])
    except ValueError as exc:
        raise MalformedCodeFile(f"bad composition: {exc}") from None
    if comp.q != q:
        raise MalformedCodeFile(f"composition has {comp.q} entries but q={q}")
    if comp.n != n:
        raise MalformedCodeFile(f"composition sums to {comp.n} but n={n}")
    if q > 10:
        raise MalformedCodeFile("digit body format supports q <= 10 only")
    field = None
    if "field" in header:
        p, sep, k = header["field"].partition("^")
        field = (_int("field", p), _int("field", k) if sep else 1)
    d0 = _int("d0", header["d0"]) if "d0" in header else None
    guaranteed = None
    if "guaranteed_d" in header and header["guaranteed_d"] != "none":
        guaranteed = _int("guaranteed_d", header["guaranteed_d"])

    alphabet = set("0123456789"[:q])
    words = []
    seen = set()
    for line in body:
        if len(line) != n or not set(line) <= alphabet:
            raise MalformedCodeFile(f"codeword {line!r} is not {n} digits below {q}")
        if line in seen:
            raise MalformedCodeFile(f"duplicate codeword {line!r}")
        seen.add(line)
        words.append(tuple(int(ch) for ch in line))
    return CodeFile(comp, tuple(words), field, d0, guaranteed, "guaranteed_d" in header)


def read(path: str | Path) -> CodeFile:
    try:
        text = Path(path).read_bytes().decode("ascii")
    except UnicodeDecodeError:
        raise MalformedCodeFile(f"{path}: not ASCII") from None
    return loads(text)


def write(path: str | Path, comp: Composition, words: Sequence[Word], **meta) -> CodeFile:
    cf = CodeFile(comp, tuple(tuple(w) for w in words), **meta)
    cf.write(path)
    return cf
