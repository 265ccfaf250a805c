import pytest

import oracles
from semiprimary import classify as cl
from semiprimary.dsl import parse_ideal, parse_ring
from semiprimary.errors import InvalidExpansion, NotProper, PreconditionViolation
from semiprimary.expansion import Identity, Radical, TableExpansion
from semiprimary.harness.universe import e3_table
from semiprimary.ideals import generate, unit_ideal, zero_ideal

SPECS = ["Z(2)", "Z(8)", "Z(12)", "Z(36)", "prod(Z(2),Z(4))", "prod(Z(3),Z(4))", "bool(3)",
         "trunc(Z(2),3)", "trunc(Z(4),2)", "prod(Z(2),Z(2))"]


def test_worked_witnesses():
    R = parse_ring("Z(36)")
    Z = zero_ideal(R)
    assert cl.is_weakly_semiprimary(Z)
    sp = cl.is_semiprimary(Z)
    assert not sp and sp.witness_names() == ["4", "9"]
    R12 = parse_ring("Z(12)")
    w = cl.is_weakly_semiprimary(generate(R12, [6]))
    assert not w and w.witness_names() == ["2", "3"]
    T = parse_ring("trunc(Z(4),3)")
    I = parse_ideal(T, "gen(X^2)")
    wp = cl.is_weakly_prime(I)
    assert not wp and wp.witness_names() == ["X", "X"]
    assert cl.is_weakly_semiprimary(I)


def test_trivial_cases():
    F = parse_ring("Z(5)")
    assert cl.is_prime(zero_ideal(F))
    assert cl.is_weakly_prime(zero_ideal(parse_ring("Z(12)")))
    assert all(r.verdict for r in cl.classify_all(zero_ideal(F), Radical(F)))


def test_not_proper_and_unvalidated():
    R = parse_ring("Z(6)")
    with pytest.raises(NotProper):
        cl.is_prime(unit_ideal(R))
    entries = {I: zero_ideal(R) if I.is_proper() else I for I in R.ideals}
    bad = TableExpansion.from_mapping(R, entries, check=False)
    with pytest.raises(InvalidExpansion):
        cl.is_delta_semiprimary(zero_ideal(R), bad)


def test_e3_delta_semiprimary_and_dual_zero():
    R = parse_ring("Z(8)")
    d = e3_table(R)
    assert cl.is_delta_semiprimary(generate(R, [4]), d)
    pairs = {(w.x, w.y) for w in cl.dual_zero_elements(zero_ideal(R), d)}
    assert (2, 4) in pairs


def test_dual_zero_examples():
    R = parse_ring("Z(36)")
    pairs = {(w.x, w.y) for w in cl.dual_zero_elements(zero_ideal(R), Radical(R))}
    assert (4, 9) in pairs and (9, 4) in pairs
    F = parse_ring("Z(7)")
    assert cl.dual_zero_elements(zero_ideal(F), Radical(F)) == []
    R12 = parse_ring("Z(12)")
    with pytest.raises(PreconditionViolation):
        cl.dual_zero_elements(generate(R12, [6]), Radical(R12))


def test_strongly_weakly_example():
    R = parse_ring("Z(12)")
    rep = cl.is_strongly_weakly_delta_semiprimary(generate(R, [6]), Radical(R))
    assert not rep
    assert set(rep.witness_names()) == {"gen(2)", "gen(3)"}
    assert cl.is_strongly_weakly_delta_semiprimary(zero_ideal(R), Radical(R))


def _raw_violates(R, I, left, right, weakly, witness):
    a, b = witness
    ab = R.times(a, b)
    return ab in set(I.codes) and not (weakly and ab == 0) and a not in left and b not in right


@pytest.mark.parametrize("spec", SPECS)
def test_predicates_match_oracle(spec):
    R = parse_ring(spec)
    for I in R.ideals.proper:
        m = frozenset(I.codes)
        rad = oracles.radical(R, m)
        checks = [
            (cl.is_prime(I), m, m, False), (cl.is_weakly_prime(I), m, m, True),
            (cl.is_primary(I), m, rad, False), (cl.is_weakly_primary(I), m, rad, True),
            (cl.is_semiprimary(I), rad, rad, False), (cl.is_weakly_semiprimary(I), rad, rad, True),
        ]
        for rep, left, right, weakly in checks:
            assert rep.verdict == oracles.holds(R, m, left, right, weakly), (spec, I, rep.name)
            if not rep.verdict:
                assert _raw_violates(R, I, left, right, weakly, rep.witness)


@pytest.mark.parametrize("spec", SPECS)
def test_strongly_matches_oracle(spec):
    R = parse_ring(spec)
    ideals = [frozenset(J.codes) for J in R.ideals]
    for d in (Radical(R), Identity(R)):
        for I in R.ideals.proper:
            D = frozenset(d(I).codes)
            expected = oracles.strongly_weakly(R, frozenset(I.codes), D, ideals)
            assert cl.is_strongly_weakly_delta_semiprimary(I, d).verdict == expected


@pytest.mark.parametrize("spec", SPECS)
def test_implication_lattice_holds(spec):
    R = parse_ring(spec)
    for I in R.ideals.proper:
        for d in (Radical(R), Identity(R)):
            verdicts = cl.implication_lattice(I, d)
            assert set(verdicts) == set(cl.CLASS_NAMES)


def test_report_dict_shape():
    R = parse_ring("Z(36)")
    d = cl.is_semiprimary(zero_ideal(R)).to_dict()
    assert d == {"ring": "Z(36)", "ideal": "gen()", "delta": None, "class": "semiprimary",
                 "verdict": False, "witness": ["4", "9"]}


def test_zero_ideal_weak_classes_vacuous():
    for spec in SPECS:
        R = parse_ring(spec)
        Z = zero_ideal(R)
        assert cl.is_weakly_prime(Z) and cl.is_weakly_primary(Z) and cl.is_weakly_semiprimary(Z)
