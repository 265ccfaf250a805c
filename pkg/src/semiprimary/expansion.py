"""Expansion functions on the ideal lattice of a finite ring.

An expansion function ``delta`` maps ideals to ideals with ``L <= delta(L)``
and ``J <= I  =>  delta(J) <= delta(I)``. Every term here is total: on the
whole ring it returns the whole ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .construct import component_ideals, image_ideal, preimage_ideal, product_ideal, quotient
from .errors import IncompleteTable, InvalidArity, InvalidExpansion, NotQuasiLocal, RingMismatch
from .ideals import Ideal, ideal_sum, integral_closure, intersect, require_proper, unit_ideal


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    extensive_violations: tuple = ()
    monotone_violations: tuple = ()
    non_ideal: tuple = ()

    @property
    def first(self):
        """The first violation: a monotonicity pair if any, else a single ideal."""
        for kind, items in (("monotone", self.monotone_violations),
                            ("extensive", self.extensive_violations),
                            ("not-ideal", self.non_ideal)):
            if items:
                return kind, items[0]
        return None

    def describe(self):
        if self.ok:
            return "expansion axioms hold"
        kind, item = self.first
        if kind == "monotone":
            J, I = item
            return (f"monotonicity fails: {J.to_spec()} <= {I.to_spec()} but "
                    f"delta({J.to_spec()}) is not inside delta({I.to_spec()})")
        if kind == "extensive":
            return f"extensivity fails: {item.to_spec()} is not inside its image"
        return f"image of {item.to_spec()} is not an ideal"


class Expansion:
    """Base class; subclasses implement :meth:`_apply` and :meth:`to_spec`."""

    def apply(self, I):
        self.ring.check_same(I.ring)
        if not I.is_proper():
            return unit_ideal(self.ring)
        return self._apply(I)

    def __call__(self, I):
        return self.apply(I)

    def _apply(self, I):
        raise NotImplementedError

    def to_spec(self):
        raise NotImplementedError

    def __str__(self):
        return self.to_spec()

    @cached_property
    def table(self):
        """``{ideal mask: delta(ideal)}`` over every ideal of the ring."""
        return {I.mask: self.apply(I) for I in self.ring.ideals}

    @cached_property
    def validation(self):
        return validate(self)

    def require_valid(self):
        report = self.validation
        if not report.ok:
            raise InvalidExpansion(report.describe(), report)
        return self


def validate(delta):
    """Check both expansion axioms over all ideals and all comparable pairs."""
    ideals = delta.ring.ideals
    images = {}
    extensive, non_ideal = [], []
    for L in ideals:
        D = delta.apply(L)
        images[L.mask] = D
        if D.mask not in ideals._by_mask:
            non_ideal.append(L)
        if not L <= D:
            extensive.append(L)
    monotone = []
    for J in ideals:
        for I in ideals:
            if J.mask != I.mask and J <= I and not images[J.mask] <= images[I.mask]:
                monotone.append((J, I))
    ok = not (extensive or monotone or non_ideal)
    return ValidationReport(ok, tuple(extensive), tuple(monotone), tuple(non_ideal))


@dataclass(frozen=True, eq=True)
class Identity(Expansion):
    ring: object

    def _apply(self, I):
        return I

    def to_spec(self):
        return "id"


@dataclass(frozen=True, eq=True)
class Radical(Expansion):
    ring: object

    def _apply(self, I):
        return I.rad

    def to_spec(self):
        return "rad"


@dataclass(frozen=True, eq=True)
class ConstMaximal(Expansion):
    """``delta(I) = M`` for every proper ``I`` of a quasi-local ring."""

    ring: object

    def __post_init__(self):
        if not self.ring.ideals.is_quasi_local:
            raise NotQuasiLocal(f"{self.ring!r} has {len(self.ring.ideals.maximal)} maximal ideals")

    @property
    def maximal(self):
        return self.ring.ideals.maximal[0]

    def _apply(self, I):
        return self.maximal

    def to_spec(self):
        return "maxim"


@dataclass(frozen=True, eq=True)
class PlusIdeal(Expansion):
    """``delta(I) = I + J`` for a fixed proper ideal ``J``."""

    ring: object
    extra: Ideal

    def __post_init__(self):
        self.ring.check_same(self.extra.ring)
        require_proper(self.extra, "the added ideal")

    def _apply(self, I):
        return ideal_sum(I, self.extra)

    def to_spec(self):
        return f"plus({self.extra.to_spec()})"


@dataclass(frozen=True, eq=True)
class IntegralClosure(Expansion):
    ring: object

    def _apply(self, I):
        return integral_closure(I)

    def to_spec(self):
        return "intclo"


def _same_ring(*deltas):
    R = deltas[0].ring
    for d in deltas[1:]:
        R.check_same(d.ring)
    return R


@dataclass(frozen=True, eq=True)
class SumOf(Expansion):
    first: Expansion
    second: Expansion
    ring: object = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ring", _same_ring(self.first, self.second))

    def _apply(self, I):
        return ideal_sum(self.first.apply(I), self.second.apply(I))

    def to_spec(self):
        return f"sum({self.first.to_spec()},{self.second.to_spec()})"


@dataclass(frozen=True, eq=True)
class IntersectionOf(Expansion):
    first: Expansion
    second: Expansion
    ring: object = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ring", _same_ring(self.first, self.second))

    def _apply(self, I):
        return intersect(self.first.apply(I), self.second.apply(I))

    def to_spec(self):
        return f"cap({self.first.to_spec()},{self.second.to_spec()})"


@dataclass(frozen=True, eq=True)
class Composition(Expansion):
    """``outer(inner(I))``."""

    outer: Expansion
    inner: Expansion
    ring: object = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ring", _same_ring(self.outer, self.inner))

    def _apply(self, I):
        return self.outer.apply(self.inner.apply(I))

    def to_spec(self):
        return f"comp({self.outer.to_spec()},{self.inner.to_spec()})"


@dataclass(frozen=True, eq=True)
class ProductExpansion(Expansion):
    """Factorwise expansion on ``R_1 x ... x R_n``."""

    ring: object
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.ring.kind != "product":
            raise RingMismatch(f"{self.ring!r} is not a product ring")
        if len(self.components) != len(self.ring.factors):
            raise InvalidArity("need one component expansion per factor")
        for F, d in zip(self.ring.factors, self.components):
            F.check_same(d.ring)

    def _apply(self, I):
        parts = component_ideals(self.ring, I)
        return product_ideal(self.ring, [d.apply(J) for d, J in zip(self.components, parts)])

    def to_spec(self):
        return "prodx(" + ",".join(d.to_spec() for d in self.components) + ")"


def product_expansion(ring, components):
    return ProductExpansion(ring, tuple(components))


@dataclass(frozen=True, eq=True)
class TableExpansion(Expansion):
    """An explicitly tabulated expansion (validated on construction by default)."""

    ring: object
    entries: tuple
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for a, b in self.entries:
            self.ring.check_same(a.ring)
            self.ring.check_same(b.ring)
        if self.check:
            self.require_valid()

    @classmethod
    def from_mapping(cls, ring, mapping, check=True):
        return cls(ring, tuple(mapping.items()), check)

    @cached_property
    def _lookup(self):
        return {a.mask: b for a, b in self.entries}

    def apply(self, I):
        self.ring.check_same(I.ring)
        try:
            return self._lookup[I.mask]
        except KeyError:
            raise IncompleteTable(f"no table entry for {I.to_spec()}") from None

    def to_spec(self):
        body = ",".join(f"{a.to_spec()}->{b.to_spec()}" for a, b in self.entries)
        return "table{" + body + "}"


@dataclass(frozen=True, eq=True)
class QuotientInduced(Expansion):
    """On ``R/I``: ``delta((L + I)/I) = gamma(L + I)/I``.

    Every ideal of ``R/I`` is ``(L + I)/I`` for ``L`` its full preimage, so
    the rule is evaluated on preimages.
    """

    gamma: Expansion
    base_ideal: Ideal
    ring: object = field(compare=False)
    projection: object = field(compare=False, repr=False)

    def _apply(self, K):
        L = preimage_ideal(self.projection, K)
        return image_ideal(self.projection, self.gamma.apply(L))

    def to_spec(self):
        return f"induced({self.gamma.to_spec()},{self.base_ideal.to_spec()})"

    def well_defined(self):
        """``delta(pi(L)) == pi(gamma(L + I))`` for every ideal ``L`` of ``R``."""
        pi = self.projection
        for L in self.gamma.ring.ideals:
            lhs = self.apply(image_ideal(pi, L))
            rhs = image_ideal(pi, self.gamma.apply(ideal_sum(L, self.base_ideal)))
            if lhs != rhs:
                return False
        return True


def quotient_induced(gamma, I, quotient_ring=None):
    """The expansion on ``R/I`` induced by ``gamma`` on ``R``.

    ``quotient_ring`` may pass an existing ``(Q, pi)`` from :func:`quotient`.
    """
    gamma.ring.check_same(I.ring)
    Q, pi = quotient_ring if quotient_ring is not None else quotient(I.ring, I)
    return QuotientInduced(gamma, I, Q, pi)


__all__ = [
    "Expansion", "ValidationReport", "validate", "Identity", "Radical", "ConstMaximal",
    "PlusIdeal", "IntegralClosure", "SumOf", "IntersectionOf", "Composition",
    "ProductExpansion", "product_expansion", "TableExpansion", "QuotientInduced",
    "quotient_induced",
]
