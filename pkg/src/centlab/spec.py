"""Group-spec expressions and Cayley-table files.

Grammar (ASCII, whitespace between tokens ignored)::

    expr  := term ('x' term)*            direct product, left-associative
    term  := atom (':' atom)?            Z<p>:Z<q>, left factor normal
    atom  := 'Z' INT | 'D' INT | 'S' INT | 'A' INT | 'Q8'
           | 'PGL(2,' INT ')' | 'file:' PATH | '(' expr ')'

``D<n>`` is the dihedral group of ORDER n. A file path runs up to the next
whitespace or closing parenthesis.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import group as G
from .config import DEFAULT_TABLE_CAP
from .errors import ParseError

__all__ = [
    "Cyclic",
    "Dihedral",
    "Symmetric",
    "Alternating",
    "Quaternion8",
    "DirectProduct",
    "SemidirectCyclic",
    "PGL2",
    "FromFile",
    "parse_spec",
    "realize",
    "read_table_file",
    "write_table_file",
]


@dataclass(frozen=True)
class Cyclic:
    n: int

    def render(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Dihedral:
    order: int

    def render(self):
        return f"D{self.order}"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def render(self):
        return f"S{self.n}"


@dataclass(frozen=True)
class Alternating:
    n: int

    def render(self):
        return f"A{self.n}"


@dataclass(frozen=True)
class Quaternion8:
    def render(self):
        return "Q8"


@dataclass(frozen=True)
class DirectProduct:
    left: object
    right: object

    def render(self):
        right = self.right.render()
        if isinstance(self.right, DirectProduct):
            right = f"({right})"
        return f"{self.left.render()}x{right}"


@dataclass(frozen=True)
class SemidirectCyclic:
    p: int
    q: int

    def render(self):
        return f"Z{self.p}:Z{self.q}"


@dataclass(frozen=True)
class PGL2:
    q: int

    def render(self):
        return f"PGL(2,{self.q})"


@dataclass(frozen=True)
class FromFile:
    path: str

    def render(self):
        return f"file:{self.path}"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, s):
        self.skip()
        if not self.text.startswith(s, self.pos):
            raise ParseError(f"expected {s!r}", self.pos)
        self.pos += len(s)

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def expr(self):
        node = self.term()
        while self.peek() == "x":
            self.pos += 1
            node = DirectProduct(node, self.term())
        return node

    def term(self):
        left = self.atom()
        if self.peek() == ":":
            colon = self.pos
            self.pos += 1
            right = self.atom()
            if not (isinstance(left, Cyclic) and isinstance(right, Cyclic)):
                raise ParseError("both factors of ':' must be cyclic groups Z<p>", colon)
            if self.peek() == ":":
                raise ParseError("':' cannot be chained", self.pos)
            return SemidirectCyclic(left.n, right.n)
        return left

    def atom(self):
        self.skip()
        t, i = self.text, self.pos
        if t.startswith("(", i):
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if t.startswith("PGL(", i):
            self.pos += 4
            two = self.integer()
            if two != 2:
                raise ParseError("only PGL(2,q) is supported", i)
            self.expect(",")
            q = self.integer()
            self.expect(")")
            return PGL2(q)
        if t.startswith("Q8", i):
            self.pos += 2
            return Quaternion8()
        if t.startswith("file:", i):
            self.pos += 5
            start = self.pos
            while self.pos < len(t) and not t[self.pos].isspace() and t[self.pos] != ")":
                self.pos += 1
            if start == self.pos:
                raise ParseError("empty file path", start)
            return FromFile(t[start:self.pos])
        kinds = {"Z": Cyclic, "D": Dihedral, "S": Symmetric, "A": Alternating}
        if i < len(t) and t[i] in kinds:
            self.pos += 1
            return kinds[t[i]](self.integer())
        raise ParseError("expected a group expression", i)


def parse_spec(text):
    parser = _Parser(text)
    node = parser.expr()
    parser.skip()
    if parser.pos != len(text):
        raise ParseError(f"unexpected {text[parser.pos]!r}", parser.pos)
    return node


def realize(spec, *, table_cap=DEFAULT_TABLE_CAP, seed=0, exhaustive_assoc=False):
    """Build the group described by ``spec`` (a node or a spec string)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    kw = dict(table_cap=table_cap, seed=seed, exhaustive_assoc=exhaustive_assoc)
    if isinstance(spec, Cyclic):
        return G.cyclic(spec.n, **kw)
    if isinstance(spec, Dihedral):
        return G.dihedral(spec.order, **kw)
    if isinstance(spec, Symmetric):
        return G.symmetric(spec.n, **kw)
    if isinstance(spec, Alternating):
        return G.alternating(spec.n, **kw)
    if isinstance(spec, Quaternion8):
        return G.quaternion8(**kw)
    if isinstance(spec, SemidirectCyclic):
        return G.semidirect_cyclic(spec.p, spec.q, **kw)
    if isinstance(spec, PGL2):
        return G.pgl2(spec.q, **kw)
    if isinstance(spec, DirectProduct):
        return G.direct_product(realize(spec.left, **kw), realize(spec.right, **kw), **kw)
    if isinstance(spec, FromFile):
        table = read_table_file(spec.path)
        return G.from_cayley_table(table, spec.render(), **kw)
    raise TypeError(f"not a group spec: {spec!r}")


def read_table_file(path):
    """Read a Cayley table: ``n`` on the first line, then ``n`` rows of ``n`` indices."""
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty Cayley-table file", 1)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError("first line must be the group order", 1) from None
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", len(lines))
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            row = [int(v) for v in ln.split()]
        except ValueError:
            raise ParseError("non-integer table entry", lineno) from None
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(n, n)


def write_table_file(g, path):
    with open(path, "w") as fh:
        fh.write(f"{g.order}\n")
        for row in g.table.tolist():
            fh.write(" ".join(map(str, row)) + "\n")
