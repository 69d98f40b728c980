"""Compact directed acyclic word graphs and their left-end edit sensitivity.

Thin re-export of the compiled module; graph construction, maximal repeats,
single-edit deltas, exhaustive sweeps, worst-case families, leftward churn.
"""

from ._core import (
    ChurnQuadraticReport,
    ChurnReport,
    ChurnStep,
    ChurnTransition,
    DeltaReport,
    FamilyRow,
    Graph,
    SweepReport,
    build,
    check_lemma,
    churn_growth_exponent,
    churn_quadratic_check,
    delta,
    expand_repeats,
    family_string,
    lemma_ids,
    leftward_run,
    maximal_repeats,
    maximal_substrings,
    out_degree,
    predicted_sizes,
    size,
    sweep,
    verify_family,
)

__all__ = [
    "ChurnQuadraticReport",
    "ChurnReport",
    "ChurnStep",
    "ChurnTransition",
    "DeltaReport",
    "FamilyRow",
    "Graph",
    "SweepReport",
    "build",
    "check_lemma",
    "churn_growth_exponent",
    "churn_quadratic_check",
    "delta",
    "expand_repeats",
    "family_string",
    "lemma_ids",
    "leftward_run",
    "maximal_repeats",
    "maximal_substrings",
    "out_degree",
    "predicted_sizes",
    "size",
    "sweep",
    "verify_family",
]

__version__ = "0.1.0"
