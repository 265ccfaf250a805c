"""One checker per theorem, evaluated hypothesis-first over a :class:`Universe`.

An instance whose hypotheses fail is counted as skipped. An instance whose
hypotheses hold is counted as checked, and a failed conclusion is recorded
as a violation with enough detail to rebuild it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .. import classify as cl
from ..construct import (MultiplicativeSet, RingHom, component_ideals, image_ideal, isomorphism_to,
                         kernel, localize, preimage_ideal, quotient)
from ..errors import ImplicationViolation
from ..expansion import quotient_induced
from ..ideals import Ideal, ideal_product, intersect, power_chain
from ..rings import make_zn, nilradical

S3_2_MAX_ORDER = 64
S3_4_MAX_ORDER = 64
MAY_BE_VACUOUS = frozenset({"r13", "r14"})


@dataclass
class TheoremReport:
    theorem_id: str
    checker: str
    instances_checked: int = 0
    hypothesis_skipped: int = 0
    cap_skipped: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    @property
    def vacuous(self):
        return self.instances_checked == 0

    @property
    def flagged(self):
        """Vacuity is tolerated for these checkers."""
        return self.theorem_id in MAY_BE_VACUOUS

    @property
    def status(self):
        if self.violations:
            return "FAIL"
        if self.vacuous:
            return "VACUOUS (flagged)" if self.flagged else "VACUOUS"
        return "PASS"

    def to_dict(self):
        return {"theorem": self.theorem_id, "checker": self.checker,
                "instances_checked": self.instances_checked,
                "hypothesis_skipped": self.hypothesis_skipped,
                "cap_skipped": self.cap_skipped, "violations": self.violations,
                "vacuous": self.vacuous, "status": self.status}

    # tallying -------------------------------------------------------------

    def skip(self, n=1):
        self.hypothesis_skipped += n

    def check(self, ok, **detail):
        self.instances_checked += 1
        if not ok:
            self.violations.append(detail)


# ---------------------------------------------------------------------------
# per-ring and per-(ring, delta) caches
# ---------------------------------------------------------------------------

class RingCtx:
    def __init__(self, entry):
        self.entry = entry
        self.ring = R = entry.ring
        self.ideals = R.ideals
        self.k = len(self.ideals)
        masks = np.array([I.array for I in self.ideals])
        self.masks = masks
        # sub[i, j]: ideal i inside ideal j
        self.sub = ~(masks[:, None, :] & ~masks[None, :, :]).any(axis=2)
        self.prod = np.array(self.ideals.products, dtype=np.int64)
        self.proper = [i for i, I in enumerate(self.ideals) if I.is_proper()]
        self.nil = self.ideals.index(nilradical(R))
        self.zero_mul = R.mul_table == 0
        self._deltas = {}

    def idx(self, I):
        return self.ideals.index(I)

    def spec(self, i):
        return self.ideals[i].to_spec()

    def _per_proper(self, fn):
        out = np.zeros(self.k, dtype=bool)
        for i in self.proper:
            out[i] = fn(self.ideals[i]).verdict
        return out

    @cached_property
    def prime(self):
        return self._per_proper(cl.is_prime)

    @cached_property
    def weakly_prime(self):
        return self._per_proper(cl.is_weakly_prime)

    @cached_property
    def semiprimary(self):
        return self._per_proper(cl.is_semiprimary)

    @cached_property
    def weakly_semiprimary(self):
        return self._per_proper(cl.is_weakly_semiprimary)

    def delta(self, d):
        key = id(d)
        if key not in self._deltas:
            self._deltas[key] = DeltaCtx(self, d)
        return self._deltas[key]

    @property
    def radical(self):
        return self.delta(self.entry.radical)

    def deltas(self):
        return [self.delta(d) for d in self.entry.deltas]


class DeltaCtx:
    def __init__(self, rc, delta):
        self.rc = rc
        self.delta = delta
        delta.require_valid()
        self.img = np.array([rc.idx(delta.table[I.mask]) for I in rc.ideals], dtype=np.int64)

    @property
    def name(self):
        return self.delta.to_spec()

    def _per_proper(self, fn):
        out = np.zeros(self.rc.k, dtype=bool)
        for i in self.rc.proper:
            out[i] = fn(self.rc.ideals[i], self.delta).verdict
        return out

    @cached_property
    def wdsp(self):
        return self._per_proper(cl.is_weakly_delta_semiprimary)

    @cached_property
    def dsp(self):
        return self._per_proper(cl.is_delta_semiprimary)

    def image(self, i):
        return self.rc.ideals[self.img[i]]

    def dual_zero_pairs(self, i):
        return cl.dual_zero_pairs(self.rc.ideals[i], self.image(i))

    @cached_property
    def zero_has_dual_zero(self):
        return bool(self.dual_zero_pairs(0))

    def is_proper_image(self, i):
        return self.img[i] != self.rc.k - 1


class SuiteContext:
    def __init__(self, universe):
        self.universe = universe
        self.rings = [RingCtx(e) for e in universe]

    def pairs(self):
        """Every (ring ctx, delta ctx) in universe order."""
        for rc in self.rings:
            for dc in rc.deltas():
                yield rc, dc

    def products(self):
        for rc in self.rings:
            R = rc.ring
            if R.kind == "product" and len(R.factors) == 2 and R.spec.startswith("prod("):
                yield rc


def _where(rc, dc=None, **more):
    d = {"ring": rc.ring.spec}
    if dc is not None:
        d["delta"] = dc.name
    d.update(more)
    return d


# ---------------------------------------------------------------------------
# section 2
# ---------------------------------------------------------------------------

def check_r1(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            try:
                cl.implication_lattice(rc.ideals[i], dc.delta)
                rep.check(True)
            except ImplicationViolation as exc:
                rep.check(False, **_where(rc, dc, ideal=rc.spec(i), detail=str(exc)))


def check_r2(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            pairs = dc.dual_zero_pairs(i) if dc.wdsp[i] else []
            if not pairs:
                rep.skip()
                continue
            I = rc.ideals[i]
            xs = sorted({w.x for w in pairs})
            bad = [x for x in xs if rc.ring.mul_table[x, list(I.codes)].any()]
            rep.check(not bad, **_where(rc, dc, ideal=rc.spec(i),
                                        elements=[rc.ring.names[x] for x in bad]))


def _square_zero_in_nil(rc, i):
    return rc.ideals[i].square.is_zero and rc.sub[i, rc.nil]


def check_r3(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            if not (dc.wdsp[i] and not dc.dsp[i]):
                rep.skip()
                continue
            rep.check(_square_zero_in_nil(rc, i), **_where(rc, dc, ideal=rc.spec(i)))


def check_r4(ctx, rep):
    for rc in ctx.rings:
        for i in rc.proper:
            if not (rc.weakly_semiprimary[i] and not rc.semiprimary[i]):
                rep.skip()
                continue
            rep.check(_square_zero_in_nil(rc, i), **_where(rc, ideal=rc.spec(i)))


def check_r5(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            j = dc.img[i]
            if not (dc.is_proper_image(i) and rc.weakly_prime[j]):
                rep.skip()
                continue
            rep.check(dc.wdsp[i], **_where(rc, dc, ideal=rc.spec(i)))


def check_r5_1(ctx, rep):
    for rc in ctx.rings:
        if not rc.ring.is_boolean:
            rep.skip(len(rc.proper))
            continue
        for i in rc.proper:
            rep.check(rc.weakly_semiprimary[i] == rc.weakly_prime[i], **_where(rc, ideal=rc.spec(i)))


def check_r6(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            if not (dc.wdsp[i] and dc.img[i] == dc.img[0]):
                rep.skip()
                continue
            rep.check((not dc.dsp[i]) == dc.zero_has_dual_zero, **_where(rc, dc, ideal=rc.spec(i)))


def check_r7(ctx, rep):
    for rc in ctx.rings:
        rd = rc.radical
        for i in rc.proper:
            if not (rc.sub[i, rc.nil] and rc.weakly_semiprimary[i]):
                rep.skip()
                continue
            rep.check((not rc.semiprimary[i]) == rd.zero_has_dual_zero,
                      **_where(rc, ideal=rc.spec(i)))


def check_r11(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            for j in rc.proper:
                if not (dc.wdsp[i] and rc.sub[j, i] and dc.img[j] == dc.img[i]):
                    rep.skip()
                    continue
                rep.check(dc.wdsp[j], **_where(rc, dc, ideal=rc.spec(i), smaller=rc.spec(j)))


def check_r12(ctx, rep):
    for rc in ctx.rings:
        wsp = rc.weakly_semiprimary
        for i in rc.proper:
            if not (wsp[i] and rc.sub[i, rc.nil]):
                rep.skip()
                continue
            I = rc.ideals[i]
            bad = [rc.spec(j) for j in rc.proper if rc.sub[j, i] and not wsp[j]]
            for L in rc.ideals:
                for K in (ideal_product(L, I), intersect(L, I)):
                    if not wsp[rc.idx(K)]:
                        bad.append(K.to_spec())
            for P in power_chain(I):
                if not wsp[rc.idx(P)]:
                    bad.append(P.to_spec())
            rep.check(not bad, **_where(rc, ideal=rc.spec(i), failing=sorted(set(bad))))


def check_r12_1(ctx, rep):
    for rc in ctx.rings:
        family = [i for i in rc.proper if rc.weakly_semiprimary[i] and not rc.semiprimary[i]]
        if not family:
            rep.skip()
            continue
        for size in (1, 2, 3):
            for combo in combinations(family, size):
                mask = rc.masks[list(combo)].all(axis=0)
                j = rc.ideals.index(Ideal.from_bool(rc.ring, mask))
                rep.check(rc.weakly_semiprimary[j],
                          **_where(rc, ideals=[rc.spec(c) for c in combo]))


def check_r13(ctx, rep):
    for rc, dc in ctx.pairs():
        z = dc.img[0]
        if not (dc.is_proper_image(0) and dc.dsp[z] and dc.img[z] == z):
            rep.skip()
            continue
        bad = [] if rc.prime[z] else ["delta({0}) is not prime"]
        bad += [rc.spec(i) for i in rc.proper if dc.wdsp[i] and not dc.dsp[i]]
        rep.check(not bad, **_where(rc, dc, failing=bad))


def check_r14(ctx, rep):
    for rc, dc in ctx.pairs():
        z = dc.img[0]
        if not (dc.is_proper_image(0) and dc.wdsp[z] and rc.sub[rc.nil, z] and dc.img[z] == z):
            rep.skip()
            continue
        bad = [] if rc.weakly_prime[z] else ["delta({0}) is not weakly prime"]
        for i in rc.proper:
            if not (dc.wdsp[i] and not dc.dsp[i]):
                continue
            if not (dc.img[i] == z == dc.img[rc.nil]):
                bad.append(f"{rc.spec(i)}: delta(I) differs from delta({{0}})")
            if rc.prime[z]:
                bad.append("delta({0}) is prime")
            for j in rc.proper:
                if rc.sub[j, rc.nil] and not (dc.wdsp[j] and not dc.dsp[j] and dc.img[j] == z):
                    bad.append(f"{rc.spec(i)}: {rc.spec(j)} inside the nilradical fails")
        rep.check(not bad, **_where(rc, dc, failing=sorted(set(bad))))


# ---------------------------------------------------------------------------
# section 3
# ---------------------------------------------------------------------------

def check_s3_1(ctx, rep):
    for rc in ctx.rings:
        R = rc.ring
        zd = R.zerodivisor_mask
        seen = set()
        for u in range(1, R.order):
            S = MultiplicativeSet.generated_by(R, [u])
            key = tuple(S.codes)
            if key in seen:
                continue
            seen.add(key)
            if zd[list(S.codes)].any():
                rep.skip(len(rc.proper))
                continue
            RS, f, transport = localize(R, S)
            for i in rc.proper:
                I = rc.ideals[i]
                if not rc.weakly_semiprimary[i] or I.rad.array[list(S.codes)].any():
                    rep.skip()
                    continue
                IS = transport(I)
                ok = cl.is_weakly_semiprimary(IS).verdict and IS.rad == transport(I.rad)
                rep.check(ok, **_where(rc, ideal=rc.spec(i), S=[R.names[g] for g in S.gens]))


def _quotients(rc, max_order):
    if rc.ring.order > max_order:
        return None
    out = {}
    for i in rc.proper:
        out[i] = quotient(rc.ring, rc.ideals[i])
    return out


def check_s3_2(ctx, rep):
    for rc in ctx.rings:
        qs = _quotients(rc, S3_2_MAX_ORDER)
        if qs is None:
            rep.cap_skipped += len(rc.entry.deltas) * len(rc.proper) ** 2
            continue
        for dc in rc.deltas():
            for i in rc.proper:
                Q, pi = qs[i]
                delta = quotient_induced(dc.delta, rc.ideals[i], (Q, pi))
                if not delta.validation.ok or not delta.well_defined():
                    rep.check(False, **_where(rc, dc, ideal=rc.spec(i),
                                              detail="induced map is not a well-defined expansion"))
                    continue
                for j in rc.proper:
                    if not rc.sub[i, j]:
                        rep.skip()
                        continue
                    JI = image_ideal(pi, rc.ideals[j])
                    down = cl.is_weakly_delta_semiprimary(JI, delta).verdict
                    ok = (not dc.wdsp[j] or down) and (not (dc.wdsp[i] and down) or dc.wdsp[j])
                    rep.check(ok, **_where(rc, dc, I=rc.spec(i), J=rc.spec(j)))


def check_s3_3(ctx, rep):
    for rc in ctx.rings:
        qs = _quotients(rc, rc.ring.order)
        wsp = rc.weakly_semiprimary
        for i in rc.proper:
            Q, pi = qs[i]
            for j in rc.proper:
                if not rc.sub[i, j]:
                    rep.skip()
                    continue
                down = cl.is_weakly_semiprimary(image_ideal(pi, rc.ideals[j])).verdict
                ok = (not wsp[j] or down) and (not (wsp[i] and down) or wsp[j])
                rep.check(ok, **_where(rc, I=rc.spec(i), J=rc.spec(j)))


def _surjection(R, K):
    """``R -> R/K``, re-targeted onto ``Z(d)`` when the quotient is cyclic."""
    Q, pi = quotient(R, K)
    if R.kind == "zn":
        Z = make_zn(Q.order)
        iso = isomorphism_to(Q, Z)
        if iso is not None:
            return RingHom(R, Z, iso.map[pi.map])
    return pi


def check_s3_4(ctx, rep):
    for rc in ctx.rings:
        R = rc.ring
        if R.order > S3_4_MAX_ORDER:
            rep.cap_skipped += len(rc.proper) ** 2
            continue
        wsp = rc.weakly_semiprimary
        for k in rc.proper:
            f = _surjection(R, rc.ideals[k])
            ker = rc.idx(kernel(f))
            for i in rc.proper:
                if wsp[i] and rc.sub[ker, i]:
                    rep.check(cl.is_weakly_semiprimary(image_ideal(f, rc.ideals[i])).verdict,
                              **_where(rc, kernel=rc.spec(ker), ideal=rc.spec(i), part=1))
                else:
                    rep.skip()
            for J in f.target.ideals.proper:
                if cl.is_weakly_semiprimary(J).verdict and wsp[ker]:
                    L = preimage_ideal(f, J)
                    rep.check(wsp[rc.idx(L)], **_where(rc, kernel=rc.spec(ker),
                                                        target_ideal=J.to_spec(), part=2))
                else:
                    rep.skip()


# ---------------------------------------------------------------------------
# section 4
# ---------------------------------------------------------------------------

def _product_deltas(rc):
    return [rc.delta(d) for d in rc.entry.product_deltas]


def _parts(rc, i):
    return component_ideals(rc.ring, rc.ideals[i])


def check_s4_1(ctx, rep):
    for rc in ctx.products():
        R1, R2 = rc.ring.factors
        for dc in _product_deltas(rc):
            d1, d2 = dc.delta.components
            for i in rc.proper:
                A, B = _parts(rc, i)
                if not B.is_proper():
                    own, d = A, d1
                elif not A.is_proper():
                    own, d = B, d2
                else:
                    rep.skip()
                    continue
                v = (dc.wdsp[i], dc.dsp[i], cl.is_delta_semiprimary(own, d).verdict)
                rep.check(len(set(v)) == 1, **_where(rc, dc, ideal=rc.spec(i),
                                                     verdicts=[bool(x) for x in v]))


def _full_only_at_top(delta):
    return all(delta.table[K.mask].is_proper() for K in delta.ring.ideals.proper)


def check_s4_2(ctx, rep):
    for rc in ctx.products():
        for dc in _product_deltas(rc):
            d1, d2 = dc.delta.components
            if not _full_only_at_top(d2):
                rep.skip(len(rc.proper))
                continue
            for i in rc.proper:
                A, B = _parts(rc, i)
                if not d1.table[A.mask].is_proper():
                    rep.skip()
                    continue
                rhs = i == 0 or (not B.is_proper() and dc.dsp[i])
                rep.check(dc.wdsp[i] == rhs, **_where(rc, dc, ideal=rc.spec(i)))


def check_s4_3(ctx, rep):
    for rc in ctx.products():
        for i in rc.proper:
            A, B = _parts(rc, i)
            third = (i == 0 or (not B.is_proper() and cl.is_semiprimary(A).verdict)
                     or (not A.is_proper() and cl.is_semiprimary(B).verdict))
            v = (rc.weakly_semiprimary[i], i == 0 or rc.semiprimary[i], third)
            rep.check(len(set(bool(x) for x in v)) == 1,
                      **_where(rc, ideal=rc.spec(i), verdicts=[bool(x) for x in v]))


# ---------------------------------------------------------------------------
# section 5
# ---------------------------------------------------------------------------

def _pair_arrays(rc, dc, i):
    """Hypothesis and conclusion matrices over ideal pairs ``(A, B)``."""
    d = dc.image(i).array
    M = (rc.zero_mul & ~d[:, None] & ~d[None, :]).astype(np.int64)
    m = rc.masks.astype(np.int64)
    killed_pair = (m @ M @ m.T) > 0
    inside_I = rc.sub[rc.prod, i]
    in_d = rc.sub[:, dc.img[i]]
    return killed_pair, inside_I, in_d


def check_r8(ctx, rep):
    for rc, dc in ctx.pairs():
        upper = np.triu(np.ones((rc.k, rc.k), dtype=bool))
        for i in rc.proper:
            if not dc.wdsp[i]:
                rep.skip(int(upper.sum()))
                continue
            killed_pair, inside_I, _ = _pair_arrays(rc, dc, i)
            hyp = killed_pair & inside_I & upper
            rep.skip(int((upper & ~hyp).sum()))
            bad = hyp & (rc.prod != 0)
            rep.instances_checked += int(hyp.sum())
            for a, b in np.argwhere(bad):
                rep.violations.append(_where(rc, dc, ideal=rc.spec(i), A=rc.spec(a), B=rc.spec(b)))


def _check_strong(rc, dc, i, rep):
    upper = np.triu(np.ones((rc.k, rc.k), dtype=bool))
    if not dc.wdsp[i]:
        rep.skip(int(upper.sum()))
        return
    _, inside_I, in_d = _pair_arrays(rc, dc, i)
    hyp = inside_I & (rc.prod != 0) & upper
    rep.skip(int((upper & ~hyp).sum()))
    bad = hyp & ~(in_d[:, None] | in_d[None, :])
    rep.instances_checked += int(hyp.sum())
    for a, b in np.argwhere(bad):
        rep.violations.append(_where(rc, dc, ideal=rc.spec(i), A=rc.spec(a), B=rc.spec(b)))


def check_r9(ctx, rep):
    for rc, dc in ctx.pairs():
        for i in rc.proper:
            _check_strong(rc, dc, i, rep)


def check_r10(ctx, rep):
    for rc in ctx.rings:
        for i in rc.proper:
            _check_strong(rc, rc.radical, i, rep)


# ---------------------------------------------------------------------------

CHECKERS = {
    "r1": check_r1, "r2": check_r2, "r3": check_r3, "r4": check_r4, "r5": check_r5,
    "r5.1": check_r5_1, "r6": check_r6, "r7": check_r7, "r11": check_r11, "r12": check_r12,
    "r12.1": check_r12_1, "r13": check_r13, "r14": check_r14,
    "s3.1": check_s3_1, "s3.2": check_s3_2, "s3.3": check_s3_3, "s3.4": check_s3_4,
    "s4.1": check_s4_1, "s4.2": check_s4_2, "s4.3": check_s4_3,
    "r8": check_r8, "r9": check_r9, "r10": check_r10,
}
THEOREM_IDS = tuple(CHECKERS)


def run_suite(universe, theorem_ids="all", context=None):
    """Run the chosen checkers; reports come back in the order requested."""
    if theorem_ids == "all" or theorem_ids is None:
        theorem_ids = THEOREM_IDS
    unknown = [t for t in theorem_ids if t not in CHECKERS]
    if unknown:
        raise ValueError(f"unknown theorem ids: {', '.join(unknown)}")
    ctx = context or SuiteContext(universe)
    reports = []
    for tid in theorem_ids:
        rep = TheoremReport(tid, CHECKERS[tid].__name__)
        CHECKERS[tid](ctx, rep)
        reports.append(rep)
    return reports


def reports_to_json(reports, universe=None):
    body = {"universe": getattr(universe, "name", None),
            "reports": [r.to_dict() for r in reports],
            "all_passed": all(r.passed for r in reports)}
    return json.dumps(body, indent=2, sort_keys=True)


def traceability_matrix(reports):
    lines = ["| theorem | checker | checked | skipped | cap-skipped | violations | status |",
             "|---|---|---:|---:|---:|---:|---|"]
    for r in reports:
        lines.append(f"| {r.theorem_id} | `{r.checker}` | {r.instances_checked} | "
                     f"{r.hypothesis_skipped} | {r.cap_skipped} | {len(r.violations)} | {r.status} |")
    return "\n".join(lines)
