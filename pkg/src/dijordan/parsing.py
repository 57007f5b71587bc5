"""Text syntax for dipolynomials, associative polynomials and terms.

Shared lexical rules: identifiers (``x``, ``x1``, ``x#2``), rationals
``p/q`` optionally followed by ``*``, ``+``, ``-`` and parentheses.

Dipolynomials (``parse_dipoly``)
    ``1/2 x y^ + 1/2 y^ x``: juxtaposition concatenates words and ``^``
    marks the central letter, exactly one per dimonomial (a lone letter is
    its own central letter).  ``|>`` and ``<|`` are the two products,
    ``*>`` and ``<*`` the Jordan diproducts, ``{...}`` adds the involution
    image.

Associative polynomials (``parse_assoc``)
    Words without marks: ``x y x - 2 y x x``.

Terms (``parse_term_poly``)
    ``x . (y . z)``, ``(x |> y) <| z``; juxtaposing two factors is the
    algebra product.  A product of products needs parentheses.  Here
    ``*>``/``<*`` are synonyms of ``|>``/``<|`` because terms are expanded
    with Jordan diproducts anyway.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import diassoc as da
from .diassoc import AssocPoly, Dipoly
from .diterm import LEFT, RIGHT, TermPoly
from .errors import ParseError

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<id>[A-Za-z_][A-Za-z0-9_#']*)
  | (?P<op>\|>|<\||\*>|<\*)
  | (?P<sym>[\^+\-*/().{}])
""", re.VERBOSE)

DI_OPS = {"|>": RIGHT, "<|": LEFT, "*>": RIGHT, "<*": LEFT}


def tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind if kind != "sym" else m.group(), m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def kind(self):
        return self.toks[self.i][0]

    @property
    def pos(self):
        return self.toks[self.i][2]

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = {"id": "identifier", "num": "number", "end": "end of input"}.get(kind, repr(kind))
            got = tok[1] or "end of input"
            self.error(f"expected {want}, got {got!r}")
        self.i += 1
        return tok

    def at(self, *kinds):
        return self.kind in kinds

    def coefficient(self):
        """Optional leading rational; returns (value, present)."""
        if not self.at("num"):
            return Fraction(1), False
        num = int(self.take()[1])
        den = 1
        if self.at("/"):
            self.take()
            p = self.pos
            den = int(self.take("num")[1])
            if den == 0:
                self.error("zero denominator", p)
        if self.at("*"):
            self.take()
        return Fraction(num, den), True

    def signed_sum(self, item, zero):
        total = zero
        sign = 1
        if self.at("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            total = total + item() * sign
            if not self.at("+", "-"):
                return total
            sign = -1 if self.take()[0] == "-" else 1

    def finish(self, value):
        if not self.at("end"):
            self.error(f"unexpected {self.toks[self.i][1]!r}")
        return value


# -- dipolynomials ----------------------------------------------------------------------

class _Marked:
    """Intermediate value: a Dipoly (marked) or an AssocPoly (no mark yet)."""

    __slots__ = ("poly", "marked")

    def __init__(self, poly, marked):
        self.poly, self.marked = poly, marked

    def __add__(self, other):
        if self.marked != other.marked:
            a, b = self.as_dipoly(None), other.as_dipoly(None)
            return _Marked(a + b, True)
        return _Marked(self.poly + other.poly, self.marked)

    def __mul__(self, c):
        return _Marked(self.poly * c, self.marked)

    def as_dipoly(self, parser, pos=None):
        if self.marked:
            return self.poly
        if all(len(w) == 1 for w in self.poly.keys()):
            return da.lift_left(self.poly)
        if parser is None:
            raise ParseError("every dimonomial needs exactly one '^'", 0)
        parser.error("operand has no central letter; mark one with '^'", pos)


class _DipolyParser(_Parser):
    def parse(self) -> Dipoly:
        if self.at("end"):
            self.error("empty expression")
        value = self.signed_sum(self.term, _Marked(AssocPoly.zero(), False))
        self.finish(None)
        if not value.poly:
            return Dipoly.zero()
        return value.as_dipoly(self, 0)

    def term(self):
        p = self.pos
        c, present = self.coefficient()
        if present and self.at("+", "-", "end", ")", "}"):
            if c:
                self.error("constant terms are not allowed", p)
            return _Marked(AssocPoly.zero(), False)
        return self.chain() * c

    def chain(self):
        left = self.juxt()
        while self.at("op"):
            _, op, p = self.take()
            right = self.juxt()
            a = left.as_dipoly(self, p)
            b = right.as_dipoly(self, self.pos)
            if op == "|>":
                r = da.mul_right(a, b)
            elif op == "<|":
                r = da.mul_left(a, b)
            elif op == "*>":
                r = da.jordan_right(a, b)
            else:
                r = da.jordan_left(a, b)
            left = _Marked(r, True)
        return left

    def juxt(self):
        value = self.atom()
        while self.at("id", "(", "{"):
            p = self.pos
            nxt = self.atom()
            value = self.concat(value, nxt, p)
        return value

    def concat(self, a, b, pos):
        if a.marked and b.marked:
            self.error("a dimonomial has exactly one central letter", pos)
        if a.marked:
            return _Marked(da.mul_left(a.poly, da.lift_left(b.poly)), True)
        if b.marked:
            return _Marked(da.mul_right(da.lift_left(a.poly), b.poly), True)
        return _Marked(da.assoc_mul(a.poly, b.poly), False)

    def atom(self):
        if self.at("id"):
            name = self.take()[1]
            if self.at("^"):
                self.take()
                return _Marked(da.gen(name), True)
            return _Marked(da.word(name), False)
        if self.at("("):
            self.take()
            value = self.signed_sum(self.term, _Marked(AssocPoly.zero(), False))
            self.take(")")
            return value
        if self.at("{"):
            p = self.pos
            self.take()
            value = self.signed_sum(self.term, _Marked(AssocPoly.zero(), False))
            self.take("}")
            return _Marked(da.symmetrize(value.as_dipoly(self, p)), True)
        self.error(f"expected a letter or '(', got {self.toks[self.i][1] or 'end of input'!r}")


def parse_dipoly(text: str) -> Dipoly:
    return _DipolyParser(text).parse()


# -- associative polynomials -----------------------------------------------------------------

class _AssocParser(_Parser):
    def parse(self) -> AssocPoly:
        if self.at("end"):
            self.error("empty expression")
        return self.finish(self.signed_sum(self.term, AssocPoly.zero()))

    def term(self):
        p = self.pos
        c, present = self.coefficient()
        if present and self.at("+", "-", "end", ")"):
            if c:
                self.error("constant terms are not allowed", p)
            return AssocPoly.zero()
        value = self.atom()
        while self.at("id", "("):
            value = da.assoc_mul(value, self.atom())
        return value * c

    def atom(self):
        if self.at("id"):
            name = self.take()[1]
            if self.at("^"):
                self.error("associative polynomials have no central letter")
            return da.word(name)
        if self.at("("):
            self.take()
            value = self.signed_sum(self.term, AssocPoly.zero())
            self.take(")")
            return value
        self.error(f"expected a letter or '(', got {self.toks[self.i][1] or 'end of input'!r}")


def parse_assoc(text: str) -> AssocPoly:
    return _AssocParser(text).parse()


# -- terms ----------------------------------------------------------------------------------

def _is_alg_node(t):
    return not isinstance(t, str) and len(t) == 2


def _is_di_node(t):
    return not isinstance(t, str) and len(t) == 3


class _TermParser(_Parser):
    def parse(self) -> TermPoly:
        if self.at("end"):
            self.error("empty expression")
        return self.finish(self.signed_sum(self.term, TermPoly.zero()))

    def term(self):
        p = self.pos
        c, present = self.coefficient()
        if present and self.at("+", "-", "end", ")"):
            if c:
                self.error("constant terms are not allowed", p)
            return TermPoly.zero()
        return self.chain() * c

    def chain(self):
        left = self.atom()
        if self.at("op", ".") or self.at("id", "(", "{"):
            p = self.pos
            if self.at("op", "."):
                op = self.take()[1]
            else:
                op = "."
            right = self.atom()
            left = self.product(op, left, right, p)
            if self.at("op", ".", "id", "(", "{"):
                self.error("nested products need parentheses")
        return left

    def product(self, op, f, g, pos):
        out: dict = {}
        for s, a in f.items():
            for t, b in g.items():
                if op == ".":
                    if _is_di_node(s) or _is_di_node(t):
                        self.error("cannot mix '.' with dialgebra operations", pos)
                    key = (s, t)
                else:
                    if _is_alg_node(s) or _is_alg_node(t):
                        self.error("cannot mix dialgebra operations with '.'", pos)
                    key = (DI_OPS[op], s, t)
                out[key] = out.get(key, 0) + a * b
        return TermPoly({k: v for k, v in out.items() if v})

    def atom(self):
        if self.at("id"):
            name = self.take()[1]
            if self.at("^"):
                self.error("'^' marks belong to dipolynomials, not terms")
            return TermPoly.basis(name)
        if self.at("("):
            self.take()
            value = self.signed_sum(self.term, TermPoly.zero())
            self.take(")")
            return value
        if self.at("{"):
            # a named dipolynomial leaf such as a dotted tetrad
            start = self.pos
            depth = 0
            while True:
                k = self.kind
                if k == "end":
                    self.error("unbalanced '{'", start)
                self.take()
                if k == "{":
                    depth += 1
                elif k == "}":
                    depth -= 1
                    if depth == 0:
                        break
            inner = self.text[start + 1:self.toks[self.i - 1][2]]
            label = "{" + parse_dipoly(inner).to_string() + "}"
            return TermPoly.basis(label)
        self.error(f"expected a letter or '(', got {self.toks[self.i][1] or 'end of input'!r}")


def parse_term_poly(text: str) -> TermPoly:
    return _TermParser(text).parse()


def parse_algterm_poly(text: str) -> TermPoly:
    f = parse_term_poly(text)
    if f.is_dialgebraic():
        raise ParseError("expected algebra terms (use '.')", 0, text)
    return f


def parse(text: str):
    """Pick the grammar from the text.

    A ``^`` mark means a dipolynomial, an operation symbol (``.``, ``|>``,
    ``<|``, ``*>``, ``<*``) a term polynomial, anything else an
    associative polynomial.
    """
    if "^" in text:
        return parse_dipoly(text)
    kinds = {k for k, _, _ in tokenize(text)}
    if "op" in kinds or "." in kinds:
        return parse_term_poly(text)
    return parse_assoc(text)


def label_value(label: str) -> Dipoly:
    """Dipolynomial named by a ``{...}`` leaf label."""
    return da.symmetrize(parse_dipoly(label[1:-1]))
