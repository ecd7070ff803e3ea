"""Recursive-descent parser for group specifications.

    spec := atom { "x" atom }
    atom := "D(" int ")" | "Q(" int ")" | "QD(" int ")" | "M(" int "," int ")"
          | "U6(" int ")" | "Sz2" | "GL2(" int ")" | "PSL2(" int ")"
          | "ATheta(" int ")" | "AP(" int "," int ")" | "PQ(" int "," int ")"
          | "G16(" name ")" | "Z(" int ")" | "S(" int ")"

D, Q and QD take the total group order; "x" is a left-associative direct
product.  Blanks between tokens are ignored.
"""

from __future__ import annotations

from . import zoo
from .zoo import FamilySpec, SpecError

# longest first so that "Sz2" wins over "S" and "QD" over "Q"
_KEYWORDS = ("ATheta", "PSL2", "GL2", "G16", "Sz2", "QD", "PQ", "AP", "U6", "D", "Q", "M", "Z", "S")
_ARITY = {"M": 2, "AP": 2, "PQ": 2, "Sz2": 0}


class ParseError(SpecError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        # offsets are reported in UTF-8 bytes
        pos = self.pos if pos is None else pos
        raise ParseError(msg, len(self.text[:pos].encode("utf-8")))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isascii() and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            self.error("expected a group name")
        return self.text[start : self.pos]

    def spec(self) -> FamilySpec:
        left = self.atom()
        while self.peek("x"):
            self.pos += 1
            left = FamilySpec("Product", (left, self.atom()))
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")
        return left

    def atom(self) -> FamilySpec:
        self.skip()
        start = self.pos
        for kw in _KEYWORDS:
            if self.text.startswith(kw, self.pos):
                self.pos += len(kw)
                break
        else:
            self.error("expected a group atom (D, Q, QD, M, U6, Sz2, GL2, PSL2, ATheta, AP, PQ, G16, Z, S)")
        arity = _ARITY.get(kw, 1)
        args: list = []
        if arity:
            self.expect("(")
            args.append(self.name() if kw == "G16" else self.integer())
            for _ in range(arity - 1):
                self.expect(",")
                args.append(self.integer())
            self.expect(")")
        try:
            spec = _build(kw, args)
            zoo.validate(spec)
        except ParseError:
            raise
        except SpecError as exc:
            self.error(str(exc), start)
        return spec


def _build(kw: str, args: list) -> FamilySpec:
    if kw == "D":
        if args[0] % 2:
            raise SpecError(f"D takes the group order, which must be even (got {args[0]})")
        return zoo.Dihedral(args[0] // 2)
    if kw == "Q":
        if args[0] % 4:
            raise SpecError(f"Q takes the group order, which must be a multiple of 4 (got {args[0]})")
        return zoo.Dicyclic(args[0] // 4)
    if kw == "QD":
        n = args[0].bit_length() - 1
        if args[0] < 1 or args[0] != 1 << n:
            raise SpecError(f"QD takes the group order, which must be a power of 2 (got {args[0]})")
        return zoo.Quasidihedral(n)
    table = {
        "M": zoo.Metacyclic,
        "U6": zoo.U6n,
        "Sz2": zoo.Sz2,
        "GL2": zoo.GL2,
        "PSL2": zoo.PSL2,
        "ATheta": zoo.HanakiTheta,
        "AP": zoo.HanakiP,
        "PQ": zoo.PQ,
        "G16": zoo.Order16,
        "Z": zoo.Cyclic,
        "S": zoo.Sym,
    }
    return table[kw](*args)


def parse_spec(text: str) -> FamilySpec:
    """Parse a group specification such as ``"Q(8)xZ(2)"``."""
    return _Parser(text).spec()
