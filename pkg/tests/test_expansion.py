import pytest

from semiprimary.construct import quotient
from semiprimary.dsl import parse_ideal, parse_ring
from semiprimary.errors import IncompleteTable, InvalidExpansion, NotProper, NotQuasiLocal
from semiprimary.expansion import (Composition, ConstMaximal, Identity, IntegralClosure, IntersectionOf,
                                   PlusIdeal, Radical, SumOf, TableExpansion, product_expansion,
                                   quotient_induced, validate)
from semiprimary.harness.universe import Universe, e3_table
from semiprimary.ideals import generate, unit_ideal, zero_ideal


def test_apply_examples():
    R = parse_ring("Z(36)")
    assert Radical(R)(zero_ideal(R)) == generate(R, [6])
    I = generate(R, [4])
    assert Identity(R)(I) == I
    Z8 = parse_ring("Z(8)")
    assert e3_table(Z8)(generate(Z8, [4])) == generate(Z8, [2])
    assert e3_table(Z8)(zero_ideal(Z8)).is_zero


def test_whole_ring_maps_to_itself():
    R = parse_ring("Z(12)")
    for d in (Identity(R), Radical(R), IntegralClosure(R), PlusIdeal(R, generate(R, [6]))):
        assert d(unit_ideal(R)) == unit_ideal(R)


def test_validation_passes_and_fails():
    R = parse_ring("Z(12)")
    assert validate(Radical(R)).ok
    zero, six = zero_ideal(R), generate(R, [6])
    entries = {I: I for I in R.ideals}
    entries[zero] = six
    entries[six] = zero
    bad = TableExpansion.from_mapping(R, entries, check=False)
    report = validate(bad)
    assert not report.ok
    kind, (J, I) = report.first
    assert kind == "monotone" and J == zero and I == six
    with pytest.raises(InvalidExpansion):
        TableExpansion.from_mapping(R, entries)
    assert validate(e3_table(parse_ring("Z(8)"))).ok


def test_extensivity_violation_is_reported():
    R = parse_ring("Z(4)")
    entries = {I: zero_ideal(R) if I.is_proper() else I for I in R.ideals}
    report = validate(TableExpansion.from_mapping(R, entries, check=False))
    assert report.extensive_violations and "extensivity" in report.describe()


def test_errors():
    R = parse_ring("Z(6)")
    with pytest.raises(NotQuasiLocal):
        ConstMaximal(R)
    with pytest.raises(NotProper):
        PlusIdeal(R, unit_ideal(R))
    partial = TableExpansion(R, ((zero_ideal(R), zero_ideal(R)),), check=False)
    with pytest.raises(IncompleteTable):
        partial(generate(R, [2]))


def test_product_expansion():
    P = parse_ring("prod(Z(2),Z(4))")
    F1, F2 = P.factors
    rr = product_expansion(P, [Radical(F1), Radical(F2)])
    I = parse_ideal(P, "gen((0,2))")
    assert rr(I) == I
    J = parse_ideal(P, "gen((0,1))")
    assert rr(J) == J
    ii = product_expansion(P, [Identity(F1), Identity(F2)])
    assert all(ii(K) == K for K in P.ideals)


def test_quotient_induced_identity_and_radical():
    R = parse_ring("Z(12)")
    I = generate(R, [6])
    Q, pi = quotient(R, I)
    ind = quotient_induced(Identity(R), I, (Q, pi))
    assert all(ind(K) == K for K in Q.ideals)
    rad = quotient_induced(Radical(R), I, (Q, pi))
    assert rad.validation.ok and rad.well_defined()
    assert all(rad(K) == Radical(Q)(K) for K in Q.ideals)


def test_every_universe_expansion_validates():
    for entry in Universe.small():
        for d in entry.deltas:
            assert d.validation.ok, (entry.spec, d.to_spec())


def test_combinators_validate():
    for spec in ("Z(12)", "Z(36)", "trunc(Z(2),3)", "prod(Z(2),Z(4))"):
        R = parse_ring(spec)
        J = R.ideals.proper[1]
        base = [Identity(R), Radical(R), IntegralClosure(R), PlusIdeal(R, J)]
        for a in base:
            for b in base:
                for d in (SumOf(a, b), IntersectionOf(a, b), Composition(a, b)):
                    assert d.validation.ok, (spec, d.to_spec())


def test_apply_is_deterministic():
    R = parse_ring("trunc(Z(4),2)")
    d = IntegralClosure(R)
    assert [d(I).mask for I in R.ideals] == [d(I).mask for I in R.ideals]
