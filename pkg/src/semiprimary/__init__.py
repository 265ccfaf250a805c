"""Finite commutative rings, expansion functions and the weakly semiprimary
family of ideal classes."""

from .classify import (CLASS_NAMES, ClassReport, classify_all, dual_zero_elements,
                       implication_lattice, is_delta_primary, is_delta_semiprimary, is_primary,
                       is_prime, is_semiprimary, is_strongly_weakly_delta_semiprimary,
                       is_weakly_delta_primary, is_weakly_delta_semiprimary, is_weakly_primary,
                       is_weakly_prime, is_weakly_semiprimary)
from .construct import MultiplicativeSet, RingHom, kernel, localize, quotient
from .dsl import parse_delta, parse_element, parse_ideal, parse_ring
from .errors import AlgebraError, ParseError
from .expansion import (ConstMaximal, Identity, IntegralClosure, PlusIdeal, ProductExpansion, Radical,
                        TableExpansion, validate)
from .ideals import Ideal, generate, ideal_product, ideal_sum, integral_closure, intersect, radical
from .rings import Ring, make_boolean, make_product, make_table_ring, make_trunc_poly, make_zn

__all__ = [name for name in dir() if not name.startswith("_")]
