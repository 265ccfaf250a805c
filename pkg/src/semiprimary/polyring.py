"""Multivariate polynomials over F_p, Buchberger's algorithm and ideal membership.

Used to certify element-level facts about quotients of polynomial rings,
where exhaustive enumeration is impossible.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import ParseError, NotPrime, RingMismatch

ORDERS = ("grevlex", "lex")


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class PolyRing:
    """``F_p[x_1, ..., x_n]`` with a fixed monomial order."""

    def __init__(self, variables, p=2, order="grevlex"):
        if not _is_prime(p) or p > 251:
            raise NotPrime(f"characteristic must be a prime <= 251, got {p}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        if isinstance(variables, str):
            variables = [v for v in re.split(r"[\s,]+", variables) if v]
        if not variables:
            raise ValueError("need at least one variable")
        self.variables = tuple(variables)
        self.p = p
        self.order = order
        self.nvars = len(self.variables)
        if order == "lex":
            self.key = lambda m: m
        else:
            self.key = lambda m: (sum(m), tuple(-e for e in reversed(m)))

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.p == other.p and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.p, self.order))

    def __repr__(self):
        return f"PolyRing(F_{self.p}[{','.join(self.variables)}], {self.order})"

    def with_order(self, order):
        return PolyRing(self.variables, self.p, order)

    def extended(self, var):
        """The same ring with one more variable appended."""
        if var in self.variables:
            raise ValueError(f"variable {var!r} already present")
        return PolyRing(self.variables + (var,), self.p, self.order)

    # -- construction -------------------------------------------------------

    def poly(self, terms):
        return Polynomial(self, {m: c % self.p for m, c in terms.items() if c % self.p})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return self.poly({(0,) * self.nvars: c})

    def var(self, name):
        exps = [0] * self.nvars
        exps[self.variables.index(name)] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def parse(self, text):
        return _parse_poly(self, text)

    def convert(self, f):
        """Re-express ``f`` (from a ring whose variables are a subset) here."""
        idx = [self.variables.index(v) for v in f.ring.variables]
        terms = {}
        for m, c in f.terms.items():
            new = [0] * self.nvars
            for i, e in zip(idx, m):
                new[i] = e
            terms[tuple(new)] = c
        return self.poly(terms)


class Polynomial:
    """An element of a :class:`PolyRing`; ``terms`` maps exponent tuples to
    nonzero coefficients."""

    __slots__ = ("ring", "terms", "__dict__")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise RingMismatch("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        p = self.ring.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    @cached_property
    def leading_monomial(self):
        return max(self.terms, key=self.ring.key)

    @property
    def leading_coefficient(self):
        return self.terms[self.leading_monomial]

    def monic(self):
        if not self.terms:
            return self
        inv = pow(self.leading_coefficient, -1, self.ring.p)
        return Polynomial(self.ring, {m: c * inv % self.ring.p for m, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


_PTOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


def _parse_poly(ring, text):
    """Recursive descent over ``+ - * ^`` and parentheses."""
    tokens, pos = [], 0
    while pos < len(text):
        m = _PTOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                bad = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
            break
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text))

    def fail(msg):
        raise ParseError(msg, text, peek()[2])

    def expr():
        nonlocal i
        sign = 1
        if peek()[1] in "+-" and peek()[0] == "op":
            sign = -1 if peek()[1] == "-" else 1
            i += 1
        acc = term() if sign == 1 else -term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = peek()[1]
            i += 1
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        nonlocal i
        acc = factor()
        while peek()[1] == "*":
            i += 1
            acc = acc * factor()
        return acc

    def factor():
        nonlocal i
        base = atom()
        if peek()[1] == "^":
            i += 1
            if peek()[0] != "int":
                fail("exponent must be a non-negative integer")
            e = int(peek()[1])
            i += 1
            base = base ** e
        return base

    def atom():
        nonlocal i
        kind, val, _ = peek()
        if kind == "int":
            i += 1
            return ring.constant(int(val))
        if kind == "ident":
            if val not in ring.variables:
                fail(f"unknown variable {val!r}")
            i += 1
            return ring.var(val)
        if val == "(":
            i += 1
            inner = expr()
            if peek()[1] != ")":
                fail("expected ')'")
            i += 1
            return inner
        fail("expected a number, variable or '('")

    if not tokens:
        fail("empty polynomial")
    result = expr()
    if i != len(tokens):
        fail(f"trailing input {peek()[1]!r}")
    return result


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, basis):
    """Fully reduced remainder of ``f`` modulo ``basis`` (any generating list)."""
    ring = f.ring
    p, key = ring.p, ring.key
    basis = [g for g in basis if g.terms]
    leads = [(g.leading_monomial, pow(g.leading_coefficient, -1, p), g) for g in basis]
    rem = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, inv, g in leads:
            if _divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                factor = c * inv % p
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = (work.get(t, 0) - factor * gc) % p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial(ring, rem)


def s_polynomial(f, g):
    lm_f, lm_g = f.leading_monomial, g.leading_monomial
    L = _lcm(lm_f, lm_g)
    ring = f.ring
    mf = Polynomial(ring, {tuple(a - b for a, b in zip(L, lm_f)): pow(f.leading_coefficient, -1, ring.p)})
    mg = Polynomial(ring, {tuple(a - b for a, b in zip(L, lm_g)): pow(g.leading_coefficient, -1, ring.p)})
    return mf * f - mg * g


def groebner(gens, order=None):
    """Reduced Groebner basis of ``gens`` (monic, inter-reduced, sorted by
    descending leading monomial).

    Buchberger's algorithm with the normal selection strategy and the
    coprime-leading-monomial criterion.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        return []
    ring = gens[0].ring
    if order is not None and order != ring.order:
        target = ring.with_order(order)
        gens = [target.convert(g) for g in gens]
        ring = target
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
    key = ring.key
    G = []
    for g in gens:
        h = normal_form(g, G)
        if h.terms:
            G.append(h.monic())
    if any(g.is_constant() for g in G):
        return [ring.one()]
    pairs = set(combinations(range(len(G)), 2))
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(G[ij[0]].leading_monomial,
                                                   G[ij[1]].leading_monomial)), ij))
        pairs.discard((i, j))
        a, b = G[i].leading_monomial, G[j].leading_monomial
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if h.terms:
            if h.is_constant():
                return [ring.one()]
            G.append(h.monic())
            k = len(G) - 1
            pairs |= {(m, k) for m in range(k)}
    return _reduce_basis(G)


def _reduce_basis(G):
    key = G[0].ring.key
    G = sorted(G, key=lambda g: key(g.leading_monomial))
    minimal = []
    for g in G:
        if not any(_divides(h.leading_monomial, g.leading_monomial) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic())
    return sorted(reduced, key=lambda g: key(g.leading_monomial), reverse=True)


def is_groebner(G):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g.terms]
    return all(not normal_form(s_polynomial(f, g), G).terms for f, g in combinations(G, 2))


class PolyIdeal:
    """A finitely generated ideal with a lazily computed reduced basis."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(ring.parse(g) if isinstance(g, str) else g for g in gens)
        for g in self.gens:
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")

    def __repr__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    @cached_property
    def basis(self):
        return groebner(self.gens)

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def _coerce(self, f):
        if isinstance(f, str):
            return self.ring.parse(f)
        if f.ring != self.ring:
            raise RingMismatch("polynomial from a different ring")
        return f

    def reduce(self, f):
        return normal_form(self._coerce(f), self.basis)

    def __add__(self, other):
        if other.ring != self.ring:
            raise RingMismatch("ideals live in different rings")
        return PolyIdeal(self.ring, self.gens + other.gens)


def member(f, I):
    return not I.reduce(f).terms


def radical_member(f, I, var="_t"):
    """``f in sqrt(I)`` iff ``1 in I + (1 - t f)`` with ``t`` a fresh variable."""
    f = I._coerce(f)
    ext = I.ring.extended(var)
    t = ext.var(var)
    gens = [ext.convert(g) for g in I.gens] + [ext.one() - t * ext.convert(f)]
    return PolyIdeal(ext, gens).is_unit()


def radical_contained(I, J):
    """``sqrt(I) <= sqrt(J)``, checked generator by generator."""
    return all(radical_member(g, J) for g in I.gens)


def radical_equal(I, J):
    return radical_contained(I, J) and radical_contained(J, I)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass
class Fact:
    description: str
    kind: str            # member | radical-member | radical-equal
    poly: str | None
    ideal: list
    other: list | None = None
    expected: bool = True
    verdict: bool | None = None

    @property
    def passed(self):
        return self.verdict == self.expected

    def to_dict(self):
        return {"description": self.description, "kind": self.kind, "poly": self.poly,
                "ideal": list(self.ideal), "other": self.other, "expected": self.expected,
                "verdict": self.verdict, "passed": self.passed}


@dataclass
class CertificateReport:
    example: str
    variables: tuple
    characteristic: int
    order: str
    facts: list
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(f.passed for f in self.facts)

    def to_dict(self):
        return {"example": self.example, "variables": list(self.variables),
                "characteristic": self.characteristic, "order": self.order,
                "passed": self.passed, "facts": [f.to_dict() for f in self.facts],
                "notes": list(self.notes)}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def evaluate_fact(ring, fact):
    I = PolyIdeal(ring, fact.ideal)
    if fact.kind == "member":
        fact.verdict = member(fact.poly, I)
    elif fact.kind == "radical-member":
        fact.verdict = radical_member(fact.poly, I)
    elif fact.kind == "radical-equal":
        fact.verdict = radical_equal(I, PolyIdeal(ring, fact.other))
    elif fact.kind == "ideal-equal":
        J = PolyIdeal(ring, fact.other)
        fact.verdict = I.basis == J.basis
    else:
        raise ValueError(f"unknown fact kind {fact.kind!r}")
    return fact


def certify_facts(example, variables, facts, p=2, order="grevlex", notes=()):
    ring = PolyRing(variables, p, order)
    for f in facts:
        evaluate_fact(ring, f)
    return CertificateReport(example, ring.variables, p, order, list(facts), list(notes))


def facts_from_json(data):
    """Read ``{"variables", "characteristic", "order", "facts": [...]}``."""
    facts = []
    for item in data["facts"]:
        facts.append(Fact(item.get("description", ""), item["kind"], item.get("poly"),
                          list(item["ideal"]), item.get("other"), bool(item.get("expected", True))))
    return (data.get("example", "custom"), data["variables"], facts,
            int(data.get("characteristic", 2)), data.get("order", "grevlex"))


_SEC2_I = ["Y^2", "X*Y"]
_SEC2_J = ["Y^2", "X^2*Y^2"]
_E4_H = ["T^2", "U^2", "X*Y + T + U", "T*U", "T*X", "T*Y", "U*X", "U*Y"]


def _sec2_facts():
    I, J = _SEC2_I, _SEC2_J
    return [
        Fact("XY + J is nonzero in A/J", "member", "X*Y", J, expected=False),
        Fact("XY + J lies in L = I/J", "member", "X*Y", I),
        Fact("J is inside I, so L = I/J is an ideal of A/J", "ideal-equal", None, I,
             other=I + J),
        Fact("X + J is not in sqrt(L)", "radical-member", "X", I, expected=False),
        Fact("Y + J is not in L", "member", "Y", I, expected=False),
        Fact("X + J is not in L", "member", "X", I, expected=False),
        Fact("Y + J is in sqrt(L)", "radical-member", "Y", I),
        Fact("sqrt(I) = sqrt((Y, XY)); (Y, XY) = (Y) is prime, so sqrt(L) = (Y)/J",
             "radical-equal", None, I, other=["Y", "X*Y"]),
        Fact("(Y, XY) and (Y) are the same ideal", "ideal-equal", None, ["Y", "X*Y"],
             other=["Y"]),
    ]


def _e4_facts():
    H = _E4_H
    HT = H + ["T"]
    HU = H + ["U"]
    L = H + ["T", "U"]
    facts = [
        Fact("XY + H is nonzero in R = A/H", "member", "X*Y", H, expected=False),
        Fact("XY + H lies in L = (H + (T, U))/H", "member", "X*Y", L),
        Fact("X + H is not in L", "member", "X", L, expected=False),
        Fact("Y + H is not in sqrt(L)", "radical-member", "Y", L, expected=False),
        Fact("X + H is not in sqrt(L)", "radical-member", "X", L, expected=False),
        Fact("sqrt(TA + H) = sqrt(H)", "radical-equal", None, HT, other=H),
        Fact("sqrt(UA + H) = sqrt(H)", "radical-equal", None, HU, other=H),
        Fact("sqrt(L) = sqrt(H)", "radical-equal", None, L, other=H),
        Fact("sqrt(H) = sqrt((T, U, XY) + H)", "radical-equal", None, H,
             other=H + ["T", "U", "X*Y"]),
        Fact("T + H is nonzero (|I| >= 2)", "member", "T", H, expected=False),
        Fact("U + H is nonzero (|J| >= 2)", "member", "U", H, expected=False),
        Fact("T + H differs from U + H (I != J)", "member", "T + U", H, expected=False),
    ]
    for v in ("T", "U", "X", "Y"):
        facts.append(Fact(f"T*{v} lies in H (so I = {{0, T + H}})", "member", f"T*{v}", H))
        facts.append(Fact(f"U*{v} lies in H (so J = {{0, U + H}})", "member", f"U*{v}", H))
    return facts


WORKED_EXAMPLES = ("sec2-quotient", "e4")


def certify_paper_example(example_id, order="grevlex"):
    """Run the fixed membership checklist for one polynomial-ring example."""
    if example_id == "sec2-quotient":
        return certify_facts(
            example_id, ["X", "Y"], _sec2_facts(), 2, order,
            notes=["weak semiprimality of L in the infinite ring A/J is asserted, "
                   "not machine-verified"])
    if example_id == "e4":
        return certify_facts(
            example_id, ["T", "U", "X", "Y"], _e4_facts(), 2, order,
            notes=["I and J being weakly semiprimary in the infinite ring A/H is "
                   "asserted, not machine-verified"])
    raise ValueError(f"unknown polynomial example {example_id!r}; choose from {WORKED_EXAMPLES}")
