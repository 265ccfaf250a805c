"""Parser for the ring / ideal / expansion / element text syntax.

Grammar (whitespace-insensitive, integers decimal)::

    ring    = "Z(" INT ")" | "bool(" INT ")" | "trunc(" "Z(" INT ")" "," INT ")"
            | "prod(" ring { "," ring }+ ")" | "quot(" ring "," ideal ")"
            | "loc(" ring "," "{" elem { "," elem } "}" ")"
    ideal   = "gen(" [ elem { "," elem } ] ")"
    delta   = "id" | "rad" | "maxim" | "intclo" | "plus(" ideal ")"
            | ("sum" | "cap" | "comp") "(" delta "," delta ")"
            | "prodx(" delta { "," delta }+ ")"
            | "table{" ideal "->" ideal { "," ideal "->" ideal } "}"
            | "induced(" delta "," ideal ")"

Element syntax depends on the ring: an integer for ``Z(n)``, a tuple
``(e1, e2, ...)`` for products, a coefficient list ``[c0, c1, ...]`` or a
polynomial such as ``2+X^2`` for ``trunc``, a base-ring element for ``quot``
and ``a`` or ``a/s`` for ``loc``. Inside ``prodx`` each component is read
against its own factor ring.
"""

from __future__ import annotations

import re

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>->|[()\[\]{},+\-*^/]))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                                     text, len(text) - len(text[pos:].lstrip()))
                break
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    # -- token helpers ------------------------------------------------------

    def peek(self, offset=0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else (None, None, len(self.text))

    def error(self, message):
        raise ParseError(message, self.text, self.peek()[2])

    def take(self, value=None, kind=None):
        tok = self.peek()
        if tok[0] is None:
            self.error(f"unexpected end of input, expected {value or kind}")
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            self.error(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok[1]

    def accept(self, value):
        if self.peek()[1] == value:
            self.i += 1
            return True
        return False

    def integer(self):
        return int(self.take(kind="int"))

    def done(self):
        if self.peek()[0] is not None:
            self.error(f"trailing input {self.peek()[1]!r}")

    # -- rings --------------------------------------------------------------

    def ring(self):
        from . import construct, rings
        head = self.take(kind="ident")
        self.take("(")
        if head == "Z":
            pos = self.peek()[2]
            n = self.integer()
            self.take(")")
            try:
                return rings.make_zn(n)
            except ValueError as exc:
                raise ParseError(str(exc), self.text, pos) from None
        if head == "bool":
            k = self.integer()
            self.take(")")
            return rings.make_boolean(k)
        if head == "trunc":
            pos = self.peek()[2]
            base = self.ring()
            if base.kind != "zn":
                raise ParseError("trunc needs a Z(n) base", self.text, pos)
            self.take(",")
            k = self.integer()
            self.take(")")
            return rings.make_trunc_poly(base.params["n"], k)
        if head == "prod":
            factors = [self.ring()]
            while self.accept(","):
                factors.append(self.ring())
            self.take(")")
            if len(factors) < 2:
                self.error("prod needs at least two factors")
            return rings.make_product(factors)
        if head == "quot":
            base = self.ring()
            self.take(",")
            I = self.ideal(base)
            self.take(")")
            return construct.quotient(base, I)[0]
        if head == "loc":
            base = self.ring()
            self.take(",")
            self.take("{")
            elems = [self.element(base)]
            while self.accept(","):
                elems.append(self.element(base))
            self.take("}")
            self.take(")")
            S = construct.MultiplicativeSet.generated_by(base, elems)
            return construct.localize(base, S)[0]
        self.i -= 2
        self.error(f"unknown ring constructor {head!r}")

    # -- ideals -------------------------------------------------------------

    def ideal(self, R):
        from .ideals import generate
        self.take("gen")
        self.take("(")
        elems = []
        if not self.accept(")"):
            elems.append(self.element(R))
            while self.accept(","):
                elems.append(self.element(R))
            self.take(")")
        return generate(R, elems)

    # -- elements -----------------------------------------------------------

    def element(self, R):
        if R.kind == "product":
            self.take("(")
            parts = [self.element(R.factors[0])]
            for F in R.factors[1:]:
                self.take(",")
                parts.append(self.element(F))
            self.take(")")
            return sum(p * s for p, s in zip(parts, R._strides))
        if R.kind == "trunc":
            return self.trunc_element(R)
        if R.kind == "quotient":
            base = R.params["base"]
            return int(R.params["classes"][self.element(base)])
        if R.kind == "localization":
            from .construct import fraction
            base = R.params["base"]
            a = self.element(base)
            s = self.element(base) if self.accept("/") else base.one
            try:
                return fraction(R, a, s)
            except ValueError as exc:
                self.error(str(exc))
        pos = self.peek()[2]
        sign = -1 if self.accept("-") else 1
        v = sign * self.integer()
        if R.kind == "zn":
            return v % R.order
        if not 0 <= v < R.order:
            raise ParseError(f"element code {v} out of range", self.text, pos)
        return v

    def trunc_element(self, R):
        n, k, var = R.params["n"], R.params["k"], R.params["var"]
        coeffs = [0] * k
        if self.accept("["):
            vals = [self.signed()]
            while self.accept(","):
                vals.append(self.signed())
            self.take("]")
            if len(vals) > k:
                self.error(f"at most {k} coefficients allowed")
            for i, v in enumerate(vals):
                coeffs[i] = v
        else:
            sign = -1 if self.accept("-") else 1
            while True:
                c, e = self.term(var)
                if e < k:
                    coeffs[e] += sign * c
                if self.accept("+"):
                    sign = 1
                elif self.accept("-"):
                    sign = -1
                else:
                    break
        return R.element(tuple(c % n for c in coeffs))

    def signed(self):
        sign = -1 if self.accept("-") else 1
        return sign * self.integer()

    def term(self, var):
        c, e = 1, 0
        if self.peek()[0] == "int":
            c = self.integer()
            if not self.accept("*"):
                return c, 0
        name = self.take(kind="ident")
        if name != var:
            self.i -= 1
            self.error(f"unknown variable {name!r}, expected {var!r}")
        e = 1
        if self.accept("^"):
            e = self.integer()
        return c, e

    # -- expansion functions ------------------------------------------------

    def delta(self, R):
        from . import expansion as ex
        head = self.take(kind="ident")
        if head == "id":
            return ex.Identity(R)
        if head == "rad":
            return ex.Radical(R)
        if head == "intclo":
            return ex.IntegralClosure(R)
        if head == "maxim":
            return ex.ConstMaximal(R)
        if head == "plus":
            self.take("(")
            J = self.ideal(R)
            self.take(")")
            return ex.PlusIdeal(R, J)
        if head in ("sum", "cap", "comp"):
            self.take("(")
            d1 = self.delta(R)
            self.take(",")
            d2 = self.delta(R)
            self.take(")")
            cls = {"sum": ex.SumOf, "cap": ex.IntersectionOf, "comp": ex.Composition}[head]
            return cls(d1, d2)
        if head == "prodx":
            if R.kind != "product":
                self.i -= 1
                self.error("prodx needs a product ring")
            self.take("(")
            comps = [self.delta(R.factors[0])]
            for F in R.factors[1:]:
                self.take(",")
                comps.append(self.delta(F))
            self.take(")")
            return ex.ProductExpansion(R, tuple(comps))
        if head == "table":
            self.take("{")
            entries = []
            while True:
                a = self.ideal(R)
                self.take("->")
                b = self.ideal(R)
                entries.append((a, b))
                if not self.accept(","):
                    break
            self.take("}")
            return ex.TableExpansion(R, tuple(entries))
        if head == "induced":
            if R.kind != "quotient":
                self.i -= 1
                self.error("induced needs a quotient ring")
            base = R.params["base"]
            self.take("(")
            gamma = self.delta(base)
            self.take(",")
            I = self.ideal(base)
            self.take(")")
            if I != R.params["ideal"]:
                self.error("induced ideal must be the ideal the ring was divided by")
            from .construct import RingHom
            pi = RingHom(base, R, R.params["classes"], verify=False)
            return ex.QuotientInduced(gamma, R.params["ideal"], R, pi)
        self.i -= 1
        self.error(f"unknown expansion {head!r}")


def parse_ring(text):
    p = _Parser(text)
    R = p.ring()
    p.done()
    return R


def parse_ideal(R, text):
    p = _Parser(text)
    I = p.ideal(R)
    p.done()
    return I


def parse_delta(R, text):
    p = _Parser(text)
    d = p.delta(R)
    p.done()
    return d


def parse_element(R, text):
    p = _Parser(text)
    x = p.element(R)
    p.done()
    return x
