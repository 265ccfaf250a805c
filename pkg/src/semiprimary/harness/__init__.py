"""Theorem suite, counterexample search and example checklists."""

from .examples import EXAMPLE_IDS, ExampleReport, verify_all, verify_example
from .search import SeparatingWitness, search_separating
from .theorems import (THEOREM_IDS, SuiteContext, TheoremReport, reports_to_json, run_suite,
                       traceability_matrix)
from .universe import Universe, e3_table

__all__ = [
    "EXAMPLE_IDS", "ExampleReport", "verify_all", "verify_example", "SeparatingWitness",
    "search_separating", "THEOREM_IDS", "SuiteContext", "TheoremReport", "reports_to_json",
    "run_suite", "traceability_matrix", "Universe", "e3_table",
]
