"""Smallest instance lying in one ideal class but not another."""

from __future__ import annotations

from dataclasses import dataclass

from ..classify import PREDICATES
from ..expansion import Radical


@dataclass(frozen=True)
class SeparatingWitness:
    ring: object
    ideal: object
    ideal_index: int
    delta: object

    def to_dict(self):
        return {"ring": self.ring.spec, "order": self.ring.order,
                "ideal": self.ideal.to_spec(), "ideal_index": self.ideal_index,
                "members": self.ideal.member_names(), "delta": self.delta.to_spec()}


def _predicate(name):
    try:
        return PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown class {name!r}; choose from {', '.join(PREDICATES)}") from None


def search_separating(class_a, class_b, universe, delta_factory=Radical):
    """First ``(ring order, ideal index)`` instance in ``class_a`` but not
    ``class_b``, or ``None``. δ-classes use ``delta_factory(ring)``."""
    in_a, in_b = _predicate(class_a), _predicate(class_b)
    if class_a == class_b:
        return None
    for entry in universe.by_order():
        R = entry.ring
        delta = delta_factory(R)
        for idx, I in enumerate(R.ideals):
            if I.is_proper() and in_a(I, delta) and not in_b(I, delta):
                return SeparatingWitness(R, I, idx, delta)
    return None
