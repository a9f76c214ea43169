"""Parser and printer for ideal expressions such as ``(x^5, y^4, z^2)``.

Grammar::

    ideal  := '(' mon (',' mon)* ')'
    mon    := '1' | factor ('*'? factor)*
    factor := var ('^' nat)?
    var    := x | y | z | w | x1 .. x6

Letters and indexed names cannot be mixed in one expression.  The
dimension is the largest variable index used unless given explicitly.
"""
from __future__ import annotations

import warnings

from .errors import IdealSyntaxError
from .lattice import DEFAULT_LIMITS, MAX_EXPONENT, Limits, MonomialIdeal

LETTERS = "xyzw"
MAX_INDEXED = 6


class ReductionWarning(UserWarning):
    """Some input generators were redundant and have been dropped."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.alphabet: str | None = None

    def error(self, msg, pos=None):
        raise IdealSyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        value = int(self.text[start:self.pos])
        if value > MAX_EXPONENT:
            self.error(f"exponent {value} overflows", start)
        return value

    def var(self) -> int:
        self.skip()
        start = self.pos
        ch = self.peek()
        if ch not in LETTERS:
            self.error(f"expected a variable, found {ch!r}" if ch else "unexpected end of input")
        self.pos += 1
        if ch == "x" and self.pos < len(self.text) and self.text[self.pos].isdigit():
            idx = int(self.text[self.pos])
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.error("variable index out of range", start)
            if not 1 <= idx <= MAX_INDEXED:
                self.error(f"variable x{idx} out of range x1..x{MAX_INDEXED}", start)
            kind = "indexed"
        else:
            idx = LETTERS.index(ch) + 1
            kind = "letters"
        if self.alphabet is None:
            self.alphabet = kind
        elif self.alphabet != kind:
            self.error("mixed variable alphabets (x, y, ... and x1, x2, ...)", start)
        return idx

    def monomial(self) -> dict[int, int]:
        if self.peek() == "1":
            self.pos += 1
            return {}
        exps: dict[int, int] = {}
        while True:
            idx = self.var()
            e = 1
            if self.peek() == "^":
                self.pos += 1
                e = self.nat()
            exps[idx] = exps.get(idx, 0) + e
            if exps[idx] > MAX_EXPONENT:
                self.error("exponent overflows")
            nxt = self.peek()
            if nxt == "*":
                self.pos += 1
            elif not nxt or nxt not in LETTERS:
                return exps

    def ideal(self) -> list[dict[int, int]]:
        self.expect("(")
        mons = [self.monomial()]
        while self.peek() == ",":
            self.pos += 1
            mons.append(self.monomial())
        self.expect(")")
        if self.peek():
            self.error(f"trailing input {self.peek()!r}")
        return mons


def parse_ideal(text: str, dim: int | None = None, limits: Limits = DEFAULT_LIMITS) -> MonomialIdeal:
    """Parse an ideal expression; warns with :class:`ReductionWarning` if generators were redundant."""
    p = _Parser(text)
    mons = p.ideal()
    used = max((i for m in mons for i in m), default=1)
    if dim is None:
        dim = used
    elif dim < used:
        raise IdealSyntaxError(f"dimension {dim} is smaller than the variables used ({used})", text, 0)
    vecs = [tuple(m.get(i + 1, 0) for i in range(dim)) for m in mons]
    ideal = MonomialIdeal(dim, vecs, limits=limits)
    if len(ideal.gens) < len(vecs):
        dropped = sorted(set(vecs) - set(ideal.gens))
        warnings.warn(
            f"input reduced to {len(ideal.gens)} minimal generators (dropped {dropped})",
            ReductionWarning,
            stacklevel=2,
        )
    return ideal


def format_monomial(u, names) -> str:
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def variable_names(n: int) -> list[str]:
    return list(LETTERS[:n]) if n <= len(LETTERS) else [f"x{i + 1}" for i in range(n)]


def format_ideal(a: MonomialIdeal) -> str:
    """Canonical text form; parse_ideal(format_ideal(a), a.n) == a."""
    names = variable_names(a.n)
    return "(" + ", ".join(format_monomial(g, names) for g in a.gens) + ")"


def parse_ideal_list(text: str, dim: int | None = None) -> list[MonomialIdeal]:
    """One ideal per non-blank line; ``#`` starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_ideal(line, dim))
    return out

