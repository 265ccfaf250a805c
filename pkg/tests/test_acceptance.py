"""Acceptance gate: ten exact-reproduction and exhaustive criteria, each timed.

Every test prints one ``PASS``/``FAIL`` line, visible even under captured output.
"""

import time

import pytest

import oracles
from semiprimary import classify as cl
from semiprimary.dsl import parse_ideal, parse_ring
from semiprimary.expansion import Identity, IntegralClosure, Radical, validate
from semiprimary.harness import Universe, run_suite
from semiprimary.harness.universe import e3_table
from semiprimary.ideals import generate, integral_closure, radical, zero_ideal
from semiprimary.polyring import certify_paper_example
from semiprimary.rings import make_product, make_zn, nilradical


@pytest.fixture
def gate(capsys):
    """Run ``body`` under a time limit and print a single verdict line."""

    def run(label, limit, body):
        start = time.perf_counter()
        ok, detail = False, ""
        try:
            body()
            ok = True
        except AssertionError as exc:
            detail = f" ({exc})" if str(exc) else ""
        elapsed = time.perf_counter() - start
        within = limit is None or elapsed < limit
        limit_text = "" if limit is None else f" / limit {limit:g}s"
        with capsys.disabled():
            verdict = "PASS" if ok and within else "FAIL"
            print(f"\n[acceptance] {verdict} {label}: {elapsed:.2f}s{limit_text}{detail}")
        assert ok, detail
        assert within, f"{label} took {elapsed:.2f}s"

    return run


@pytest.fixture(scope="module")
def universe():
    return Universe.default()


def test_c1_z36(gate):
    def body():
        R = parse_ring("Z(36)")
        Z = zero_ideal(R)
        assert cl.is_weakly_semiprimary(Z).verdict
        sp = cl.is_semiprimary(Z)
        assert not sp.verdict and sp.witness_names() == ["4", "9"]
        assert radical(Z) == generate(R, [6])
    gate("C1 Z36 zero ideal", 1, body)


def test_c2_e1(gate):
    def body():
        R = parse_ring("Z(12)")
        I = generate(R, [6])
        assert sorted(I.member_names(), key=int) == ["0", "6"]
        assert I.square.is_zero
        w = cl.is_weakly_semiprimary(I)
        assert not w.verdict and w.witness_names() == ["2", "3"]
    gate("C2 Z12 ideal {0,6}", 1, body)


def test_c3_e2_and_trunc_remark(gate):
    def body():
        R = parse_ring("Z(12)")
        N = radical(zero_ideal(R))
        assert N == generate(R, [6])
        wp = cl.is_weakly_prime(N)
        assert not wp.verdict and wp.witness_names() == ["2", "3"]
        T = parse_ring("trunc(Z(4),3)")
        I = parse_ideal(T, "gen(X^2)")
        wp = cl.is_weakly_prime(I)
        assert not wp.verdict and wp.witness_names() == ["X", "X"]
        assert cl.is_weakly_semiprimary(I).verdict
        rad = radical(I)
        assert rad == parse_ideal(T, "gen(2,X)")
        assert cl.is_prime(rad).verdict
    gate("C3 nilradical of Z12 and Z4[X]/(X^3)", 5, body)


def test_c4_e3(gate):
    def body():
        R = parse_ring("Z(8)")
        d = e3_table(R)
        assert validate(d).ok
        assert cl.is_delta_semiprimary(generate(R, [4]), d).verdict
        pairs = {(w.x, w.y) for w in cl.dual_zero_elements(zero_ideal(R), d)}
        assert (2, 4) in pairs
    gate("C4 table expansion on Z8", 1, body)


def test_c5_polynomial_certificates(gate):
    def body():
        for example in ("sec2-quotient", "e4"):
            rep = certify_paper_example(example)
            assert rep.passed, [f.description for f in rep.facts if not f.passed]
    gate("C5 polynomial certificates over F_2", 10, body)


def test_c6_theorem_suite(gate, universe):
    def body():
        reports = run_suite(universe)
        bad = [r.theorem_id for r in reports if r.violations]
        assert not bad, f"violations in {bad}"
        vacuous = [r.theorem_id for r in reports if r.vacuous and not r.flagged]
        assert not vacuous, f"vacuous: {vacuous}"
    gate("C6 theorem suite, default universe", 300, body)


def test_c7_strongly_weakly(gate):
    def body():
        mismatches = []
        for n in range(2, 25):
            R = make_zn(n)
            ideals = [frozenset(J.codes) for J in R.ideals]
            for d in (Radical(R), Identity(R), IntegralClosure(R)):
                for I in R.ideals.proper:
                    D = frozenset(d(I).codes)
                    brute = oracles.strongly_weakly(R, frozenset(I.codes), D, ideals)
                    weak = cl.is_weakly_delta_semiprimary(I, d).verdict
                    strong = cl.is_strongly_weakly_delta_semiprimary(I, d).verdict
                    if not (weak == strong == brute):
                        mismatches.append((n, I.to_spec(), d.to_spec()))
        assert not mismatches, mismatches[:5]
    gate("C7 weakly vs strongly, Z_n n<=24", 60, body)


def test_c8_oracle_equivalences(gate, universe):
    def body():
        mismatches = []
        for entry in universe:
            R = entry.ring
            rad, ident = Radical(R), Identity(R)
            for I in R.ideals.proper:
                pairs = [
                    (cl.is_delta_semiprimary(I, rad), cl.is_semiprimary(I)),
                    (cl.is_weakly_delta_semiprimary(I, rad), cl.is_weakly_semiprimary(I)),
                    (cl.is_delta_semiprimary(I, ident), cl.is_prime(I)),
                ]
                if any(a.verdict != b.verdict for a, b in pairs):
                    mismatches.append((entry.spec, I.to_spec()))
        assert not mismatches, mismatches[:5]
    gate("C8 radical/identity expansion equivalences", None, body)


def test_c9_integral_closure_sandwich(gate):
    def body():
        for n in range(2, 37):
            R = make_zn(n)
            for I in R.ideals.proper:
                bar = integral_closure(I)
                assert I <= bar <= radical(I), (n, I.to_spec())
            nil = frozenset(int(x) for x in nilradical(R))
            assert frozenset(integral_closure(zero_ideal(R)).codes) == nil, n
        R = make_zn(12)
        for I in R.ideals.proper:
            expected = oracles.integral_by_definition(R, frozenset(I.codes), max_degree=6)
            assert frozenset(integral_closure(I).codes) == expected, I.to_spec()
    gate("C9 integral closure sandwich, Z_n n<=36", None, body)


def test_c10_products(gate):
    def body():
        violations = []
        for a in range(2, 33):
            for b in range(2, 64 // a + 1):
                P = make_product([make_zn(a), make_zn(b)])
                for I in P.ideals.proper:
                    lhs = cl.is_weakly_semiprimary(I).verdict
                    rhs = I.is_zero or cl.is_semiprimary(I).verdict
                    if lhs != rhs:
                        violations.append((a, b, I.to_spec()))
        assert not violations, violations[:5]
    gate("C10 products Z_a x Z_b, ab<=64", 60, body)
