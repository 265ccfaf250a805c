"""Ideal-class predicates decided by exhaustive pair scans.

Each predicate returns a :class:`ClassReport`. A false verdict carries the
first violating pair, scanning unordered pairs ``a <= b`` by element code in
row-major order; for conditions that are not symmetric in ``a`` and ``b``
both orientations are tried and the violating one is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ImplicationViolation, PreconditionViolation
from .ideals import Ideal, require_proper
from .rings import nilradical

CLASS_NAMES = (
    "prime", "weakly-prime", "primary", "weakly-primary",
    "semiprimary", "weakly-semiprimary",
    "delta-primary", "weakly-delta-primary",
    "delta-semiprimary", "weakly-delta-semiprimary",
    "strongly-weakly-delta-semiprimary",
)


@dataclass(frozen=True)
class ClassReport:
    ring: object
    ideal: Ideal
    delta: object
    name: str
    verdict: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.verdict

    def witness_names(self):
        if self.witness is None:
            return None
        if isinstance(self.witness[0], Ideal):
            return [w.to_spec() for w in self.witness]
        return [self.ring.names[w] for w in self.witness]

    def to_dict(self):
        return {
            "ring": self.ring.spec,
            "ideal": self.ideal.to_spec(),
            "delta": self.delta.to_spec() if self.delta is not None else None,
            "class": self.name,
            "verdict": self.verdict,
            "witness": self.witness_names(),
        }


@dataclass(frozen=True)
class DualZeroWitness:
    x: int
    y: int


def _first_violation(V):
    S = np.triu(V | V.T)
    hits = np.argwhere(S)
    if hits.size == 0:
        return None
    a, b = (int(v) for v in hits[0])
    return (a, b) if V[a, b] else (b, a)


def _violations(I, left, right, weakly):
    """Ordered pairs with ``ab in I`` (and ``ab != 0`` if weakly), ``a`` not in
    ``left`` and ``b`` not in ``right``."""
    V = I.product_in
    if weakly:
        V = V & (I.ring.mul_table != 0)
    return V & ~left.array[:, None] & ~right.array[None, :]


def _report(I, delta, name, left, right, weakly):
    require_proper(I)
    w = _first_violation(_violations(I, left, right, weakly))
    return ClassReport(I.ring, I, delta, name, w is None, w)


def _image(delta, I):
    I.ring.check_same(delta.ring)
    delta.require_valid()
    return delta.table[I.mask]


def is_prime(I):
    return _report(I, None, "prime", I, I, False)


def is_weakly_prime(I):
    return _report(I, None, "weakly-prime", I, I, True)


def is_primary(I):
    return _report(I, None, "primary", I, I.rad, False)


def is_weakly_primary(I):
    return _report(I, None, "weakly-primary", I, I.rad, True)


def is_semiprimary(I):
    return _report(I, None, "semiprimary", I.rad, I.rad, False)


def is_weakly_semiprimary(I):
    return _report(I, None, "weakly-semiprimary", I.rad, I.rad, True)


def is_delta_primary(I, delta):
    return _report(I, delta, "delta-primary", I, _image(delta, I), False)


def is_weakly_delta_primary(I, delta):
    return _report(I, delta, "weakly-delta-primary", I, _image(delta, I), True)


def is_delta_semiprimary(I, delta):
    D = _image(delta, I)
    return _report(I, delta, "delta-semiprimary", D, D, False)


def is_weakly_delta_semiprimary(I, delta):
    D = _image(delta, I)
    return _report(I, delta, "weakly-delta-semiprimary", D, D, True)


def is_strongly_weakly_delta_semiprimary(I, delta):
    """Scan ideal pairs ``A, B`` with ``{0} != AB <= I``; need ``A`` or ``B``
    inside ``delta(I)``."""
    require_proper(I)
    D = _image(delta, I)
    ideals = I.ring.ideals
    prods = ideals.products
    n = len(ideals)
    for i in range(n):
        A = ideals[i]
        a_in = A.mask & ~D.mask == 0
        for j in range(i, n):
            AB = ideals[prods[i][j]]
            if AB.mask == 1 or AB.mask & ~I.mask:
                continue
            if not (a_in or ideals[j].mask & ~D.mask == 0):
                return ClassReport(I.ring, I, delta, "strongly-weakly-delta-semiprimary",
                                   False, (A, ideals[j]))
    return ClassReport(I.ring, I, delta, "strongly-weakly-delta-semiprimary", True, None)


def is_square_zero(I):
    return I.square.is_zero


def dual_zero_pairs(I, D):
    """Ordered pairs ``(x, y)`` with ``xy = 0`` and neither in ``D``."""
    R = I.ring
    V = (R.mul_table == 0) & ~D.array[:, None] & ~D.array[None, :]
    return [DualZeroWitness(int(x), int(y)) for x, y in np.argwhere(V)]


def dual_zero_elements(I, delta):
    """All dual-zero witnesses of a weakly delta-semiprimary ideal."""
    if not is_weakly_delta_semiprimary(I, delta):
        raise PreconditionViolation(
            f"{I.to_spec()} is not weakly delta-semiprimary; dual-zero elements are undefined")
    return dual_zero_pairs(I, _image(delta, I))


def has_dual_zero(I, delta):
    return bool(dual_zero_elements(I, delta))


def classify_all(I, delta):
    """Every predicate on ``(I, delta)`` as a list of reports."""
    return [
        is_prime(I), is_weakly_prime(I), is_primary(I), is_weakly_primary(I),
        is_semiprimary(I), is_weakly_semiprimary(I),
        is_delta_primary(I, delta), is_weakly_delta_primary(I, delta),
        is_delta_semiprimary(I, delta), is_weakly_delta_semiprimary(I, delta),
        is_strongly_weakly_delta_semiprimary(I, delta),
    ]


_IMPLICATIONS = (
    ("delta-primary", "weakly-delta-semiprimary"),
    ("weakly-delta-primary", "weakly-delta-semiprimary"),
    ("delta-semiprimary", "weakly-delta-semiprimary"),
    ("weakly-prime", "weakly-semiprimary"),
    ("primary", "weakly-semiprimary"),
    ("weakly-primary", "weakly-semiprimary"),
    ("prime", "weakly-prime"),
    ("prime", "primary"),
    ("primary", "semiprimary"),
    ("semiprimary", "weakly-semiprimary"),
    ("weakly-delta-semiprimary", "strongly-weakly-delta-semiprimary"),
    ("strongly-weakly-delta-semiprimary", "weakly-delta-semiprimary"),
)


def implication_lattice(I, delta):
    """Evaluate every class on ``(I, delta)`` and check the implications
    between them; raises :class:`ImplicationViolation` on a breach."""
    verdicts = {r.name: r.verdict for r in classify_all(I, delta)}
    for lhs, rhs in _IMPLICATIONS:
        if verdicts[lhs] and not verdicts[rhs]:
            raise ImplicationViolation(
                f"{lhs} does not imply {rhs} for {I.to_spec()} in {I.ring.spec} "
                f"with delta={delta.to_spec()}")
    N = nilradical(I.ring)
    if N.is_proper() and bool(is_weakly_prime(N)) != bool(is_weakly_semiprimary(N)):
        raise ImplicationViolation(f"nilradical of {I.ring.spec}: weakly prime and "
                                   "weakly semiprimary disagree")
    return verdicts


PREDICATES = {
    "prime": lambda I, d: is_prime(I).verdict,
    "weakly-prime": lambda I, d: is_weakly_prime(I).verdict,
    "primary": lambda I, d: is_primary(I).verdict,
    "weakly-primary": lambda I, d: is_weakly_primary(I).verdict,
    "semiprimary": lambda I, d: is_semiprimary(I).verdict,
    "weakly-semiprimary": lambda I, d: is_weakly_semiprimary(I).verdict,
    "delta-primary": lambda I, d: is_delta_primary(I, d).verdict,
    "weakly-delta-primary": lambda I, d: is_weakly_delta_primary(I, d).verdict,
    "delta-semiprimary": lambda I, d: is_delta_semiprimary(I, d).verdict,
    "weakly-delta-semiprimary": lambda I, d: is_weakly_delta_semiprimary(I, d).verdict,
    "strongly-weakly-delta-semiprimary":
        lambda I, d: is_strongly_weakly_delta_semiprimary(I, d).verdict,
    "square-zero": lambda I, d: is_square_zero(I),
}
