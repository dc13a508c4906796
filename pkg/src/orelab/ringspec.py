"""Parser for ring-spec expressions.

::

    spec    := zmod(INT) | matrix(spec, INT) | triangular(spec, INT)
             | product(spec {, spec}) | group_algebra(spec, GROUP)
             | quotient(spec, [INT {, INT}])
             | table{ elements=[..]; add=[[..],..]; mul=[[..],..]; one=ID }
    GROUP   := C<INT> | S3

Whitespace is ignored.  Table entries may be element ids or names from
``elements``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import finring
from .finring import FiniteRing, RingError

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()\[\]{},;=]))")


class RingSpecError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise RingSpecError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def expect(self, kind: str, text: str | None = None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            got = t.text or "end of input"
            raise RingSpecError(f"expected {want!r}, got {got!r}", t.pos)
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.kind == "punct" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        return int(self.expect("int").text)

    def parse(self) -> FiniteRing:
        ring = self.spec()
        self.expect("eof")
        return ring

    def spec(self) -> FiniteRing:
        head = self.expect("name")
        pos = head.pos
        try:
            if head.text == "table":
                return self.table(pos)
            self.expect("punct", "(")
            if head.text == "zmod":
                n = self.integer()
                self.expect("punct", ")")
                if n < 2:
                    raise RingSpecError(f"zmod needs n >= 2, got {n}", pos)
                return finring.zmod(n)
            if head.text in ("matrix", "triangular"):
                base = self.spec()
                self.expect("punct", ",")
                k = self.integer()
                self.expect("punct", ")")
                build = finring.matrix_ring if head.text == "matrix" else finring.triangular_ring
                return build(base, k)
            if head.text == "product":
                parts = [self.spec()]
                while self.accept(","):
                    parts.append(self.spec())
                self.expect("punct", ")")
                return finring.product_ring(*parts)
            if head.text == "group_algebra":
                base = self.spec()
                self.expect("punct", ",")
                g = self.expect("name")
                self.expect("punct", ")")
                return finring.group_algebra(base, g.text)
            if head.text == "quotient":
                base = self.spec()
                self.expect("punct", ",")
                gens = self.int_list()
                self.expect("punct", ")")
                if any(not 0 <= g < base.size for g in gens):
                    raise RingSpecError("quotient generator out of range", pos)
                ideal = finring.ideal_generated_by(base, gens, "two-sided")
                return finring.quotient_ring(base, ideal)[0]
        except RingError:
            raise
        except RingSpecError:
            raise
        except ValueError as exc:
            raise RingSpecError(str(exc), pos) from exc
        raise RingSpecError(f"unknown ring constructor {head.text!r}", pos)

    def int_list(self) -> list[int]:
        self.expect("punct", "[")
        out = []
        if not self.accept("]"):
            out.append(self.integer())
            while self.accept(","):
                out.append(self.integer())
            self.expect("punct", "]")
        return out

    def atom_list(self) -> list[str]:
        self.expect("punct", "[")
        out = []
        if not self.accept("]"):
            out.append(self.atom())
            while self.accept(","):
                out.append(self.atom())
            self.expect("punct", "]")
        return out

    def atom(self) -> str:
        t = self.tok
        if t.kind not in ("int", "name"):
            raise RingSpecError(f"expected element, got {t.text or 'end of input'!r}", t.pos)
        self.i += 1
        return t.text

    def matrix(self) -> list[list[str]]:
        self.expect("punct", "[")
        rows = [self.atom_list()]
        while self.accept(","):
            rows.append(self.atom_list())
        self.expect("punct", "]")
        return rows

    def table(self, pos: int) -> FiniteRing:
        self.expect("punct", "{")
        fields: dict[str, object] = {}
        while True:
            key = self.expect("name")
            self.expect("punct", "=")
            if key.text == "elements":
                fields["elements"] = self.atom_list()
            elif key.text in ("add", "mul"):
                fields[key.text] = self.matrix()
            elif key.text == "one":
                fields["one"] = self.atom()
            else:
                raise RingSpecError(f"unknown table field {key.text!r}", key.pos)
            if not self.accept(";"):
                break
        self.expect("punct", "}")
        missing = [k for k in ("elements", "add", "mul", "one") if k not in fields]
        if missing:
            raise RingSpecError(f"table missing field(s) {', '.join(missing)}", pos)
        names = fields["elements"]
        index = {name: i for i, name in enumerate(names)}

        def resolve(a: str) -> int:
            if a in index:
                return index[a]
            if a.lstrip("-").isdigit() and 0 <= int(a) < len(names):
                return int(a)
            raise RingSpecError(f"unknown table element {a!r}", pos)

        add = [[resolve(a) for a in row] for row in fields["add"]]
        mul = [[resolve(a) for a in row] for row in fields["mul"]]
        n = len(names)
        if len(add) != n or len(mul) != n or any(len(r) != n for r in add + mul):
            raise RingError(f"tables must be {n}x{n}")
        default_names = all(a == str(i) for i, a in enumerate(names))
        return finring.table_ring(add, mul, resolve(fields["one"]),
                                  names=None if default_names else names)


def parse_ring(text: str) -> FiniteRing:
    """Build the ring described by ``text``.

    Raises :class:`RingSpecError` on syntax errors and
    :class:`~orelab.finring.RingError` when a table breaks an axiom.
    """
    ring = _Parser(text).parse()
    canonical = re.sub(r"\s+", "", text)
    if not canonical.startswith("table"):
        object.__setattr__(ring, "label", canonical)
    return ring
