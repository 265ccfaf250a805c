"""The ring universe the theorem suite runs over, with a δ family per ring."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from ..dsl import parse_ring
from ..expansion import (ConstMaximal, Identity, IntegralClosure, PlusIdeal, ProductExpansion,
                         Radical, TableExpansion)
from ..rings import RECOMMENDED_CAP

ENV_MAX_ORDER = "SEMIPRIMARY_MAX_ORDER"


def e3_table(R):
    """Radical on nonzero proper ideals, ``{0} -> {0}``, ``R -> R``."""
    mapping = {}
    for I in R.ideals:
        mapping[I] = I if I.is_zero or not I.is_proper() else I.rad
    return TableExpansion.from_mapping(R, mapping)


def basic_family(R, tables=()):
    """Expansions definable on any ring, plus declared tables."""
    family = [Identity(R), Radical(R), IntegralClosure(R)]
    if R.ideals.is_quasi_local:
        family.append(ConstMaximal(R))
    family.extend(PlusIdeal(R, J) for J in R.ideals.proper if not J.is_zero)
    family.extend(t(R) for t in tables)
    return family


def _dedupe(deltas):
    seen, out = set(), []
    for d in deltas:
        key = tuple(d.table[I.mask].mask for I in d.ring.ideals)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


@dataclass
class RingEntry:
    spec: str
    ring: object
    tables: tuple = ()

    @cached_property
    def product_deltas(self):
        """Factorwise combinations of each factor's basic family (products only)."""
        R = self.ring
        if R.kind != "product":
            return []
        comps = [basic_family(F, _declared_tables(F.spec)) for F in R.factors]
        return _dedupe(ProductExpansion(R, combo) for combo in product(*comps))

    @cached_property
    def deltas(self):
        # a combination equal to a basic expansion is kept in its product form
        return _dedupe(self.product_deltas + basic_family(self.ring, self.tables))

    @cached_property
    def radical(self):
        return Radical(self.ring)


_TABLES = {"Z(8)": (e3_table,)}


def _declared_tables(spec):
    return _TABLES.get(spec, ())


def default_specs():
    specs = [f"Z({n})" for n in range(2, 37)]
    specs += [f"prod(Z({a}),Z({b}))" for a in range(2, 33) for b in range(a, 33) if a * b <= 64]
    specs += [f"trunc(Z({n}),{k})" for n in range(2, 9) for k in range(2, 7) if n ** k <= 64]
    specs += [f"bool({k})" for k in range(2, 5)]
    return specs


def small_specs():
    return ["Z(2)", "Z(4)", "Z(6)", "Z(8)", "Z(12)", "Z(36)", "prod(Z(2),Z(2))",
            "prod(Z(2),Z(4))", "prod(Z(3),Z(4))", "trunc(Z(2),3)", "trunc(Z(4),3)", "bool(3)"]


def _env_cap():
    raw = os.environ.get(ENV_MAX_ORDER)
    return int(raw) if raw else RECOMMENDED_CAP


@dataclass
class Universe:
    """Ring specs capped by order; rings over the cap are counted, not used."""

    specs: list
    max_order: int = field(default_factory=_env_cap)
    name: str = "custom"

    @classmethod
    def default(cls, max_order=None):
        return cls(default_specs(), max_order or _env_cap(), "default")

    @classmethod
    def small(cls, max_order=None):
        return cls(small_specs(), max_order or _env_cap(), "small")

    @classmethod
    def named(cls, name):
        if name == "default":
            return cls.default()
        if name == "small":
            return cls.small()
        raise ValueError(f"unknown universe {name!r}; choose default or small")

    @cached_property
    def _built(self):
        entries, over = [], []
        for spec in self.specs:
            R = parse_ring(spec)
            if R.order > self.max_order:
                over.append(spec)
                continue
            entries.append(RingEntry(spec, R, _declared_tables(spec)))
        return entries, over

    @property
    def entries(self):
        return self._built[0]

    @property
    def over_cap(self):
        return self._built[1]

    def __iter__(self):
        return iter(self.entries)

    def by_order(self):
        """Entries sorted by ring order, ties kept in declaration order."""
        return sorted(self.entries, key=lambda e: e.ring.order)
