"""Fixed fact checklists for the worked examples."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .. import classify as cl
from ..dsl import parse_ideal, parse_ring
from ..expansion import Radical
from ..ideals import zero_ideal
from ..polyring import certify_paper_example
from ..rings import nilradical
from .universe import e3_table


@dataclass
class ExampleReport:
    example: str
    facts: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, description, verdict):
        self.facts.append((description, bool(verdict)))

    @property
    def passed(self):
        return all(v for _, v in self.facts)

    def to_dict(self):
        return {"example": self.example, "passed": self.passed,
                "facts": [{"description": d, "passed": v} for d, v in self.facts],
                "notes": list(self.notes)}


def _z36():
    rep = ExampleReport("z36")
    R = parse_ring("Z(36)")
    I = zero_ideal(R)
    rep.add("{0} is weakly semiprimary", cl.is_weakly_semiprimary(I))
    rep.add("sqrt({0}) = 6R", I.rad == parse_ideal(R, "gen(6)"))
    sp = cl.is_semiprimary(I)
    rep.add("{0} is not semiprimary, first witness (4, 9)",
            not sp and sp.witness_names() == ["4", "9"])
    return rep


def _e1():
    rep = ExampleReport("e1")
    R = parse_ring("Z(12)")
    I = parse_ideal(R, "gen(6)")
    rep.add("I = {0, 6}", I.member_names() == ["0", "6"])
    rep.add("I^2 = {0}", I.square.is_zero)
    rep.add("sqrt(I) = I", I.rad == I)
    w = cl.is_weakly_semiprimary(I)
    rep.add("I is not weakly semiprimary, witness (2, 3)",
            not w and w.witness_names() == ["2", "3"])
    return rep


def _e2():
    rep = ExampleReport("e2")
    R = parse_ring("Z(12)")
    Z = zero_ideal(R)
    rep.add("{0} is weakly semiprimary", cl.is_weakly_semiprimary(Z))
    N = Z.rad
    rep.add("sqrt({0}) = {0, 6}", N.member_names() == ["0", "6"])
    wp = cl.is_weakly_prime(N)
    rep.add("sqrt({0}) is not weakly prime, witness (2, 3)",
            not wp and wp.witness_names() == ["2", "3"])
    return rep


def _e3():
    rep = ExampleReport("e3")
    R = parse_ring("Z(8)")
    delta = e3_table(R)
    rep.add("the table is an expansion function", delta.validation.ok)
    I = parse_ideal(R, "gen(4)")
    rep.add("delta(4R) = sqrt(4R) = 2R", delta(I) == parse_ideal(R, "gen(2)"))
    rep.add("4R lies in sqrt({0})", I <= nilradical(R))
    rep.add("4R is delta-semiprimary", cl.is_delta_semiprimary(I, delta))
    Z = zero_ideal(R)
    pairs = [(w.x, w.y) for w in cl.dual_zero_elements(Z, delta)]
    rep.add("(2, 4) is a dual-zero pair of {0}", (2, 4) in pairs)
    return rep


def _z4_remark():
    rep = ExampleReport("z4-remark")
    R = parse_ring("trunc(Z(4),3)")
    I = parse_ideal(R, "gen(X^2)")
    wp = cl.is_weakly_prime(I)
    rep.add("(X^2) is not weakly prime, witness (X, X)",
            not wp and wp.witness_names() == ["X", "X"])
    rad = parse_ideal(R, "gen(2,X)")
    rep.add("sqrt((X^2)) = (2, X)", I.rad == rad)
    rep.add("(2, X) is prime", cl.is_prime(rad))
    rep.add("(X^2) is semiprimary", cl.is_semiprimary(I))
    rep.add("(X^2) is weakly semiprimary", cl.is_weakly_semiprimary(I))
    return rep


def _polynomial(example_id):
    def run():
        cert = certify_paper_example(example_id)
        rep = ExampleReport(example_id, notes=list(cert.notes))
        for f in cert.facts:
            rep.add(f.description, f.passed)
        return rep
    return run


EXAMPLES = {
    "z36": _z36, "e1": _e1, "e2": _e2, "e3": _e3, "z4-remark": _z4_remark,
    "e4": _polynomial("e4"), "sec2-quotient": _polynomial("sec2-quotient"),
}
EXAMPLE_IDS = tuple(EXAMPLES)


def verify_example(example_id):
    try:
        fn = EXAMPLES[example_id]
    except KeyError:
        raise ValueError(f"unknown example {example_id!r}; choose from {', '.join(EXAMPLES)}") from None
    return fn()


def verify_all():
    return [verify_example(e) for e in EXAMPLE_IDS]


def reports_to_json(reports):
    return json.dumps([r.to_dict() for r in reports], indent=2)
