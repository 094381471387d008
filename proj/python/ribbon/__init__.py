"""Partial-dual genus polynomials of ribbon graphs."""

from ._core import (
    ParseError,
    PreconditionError,
    RibbonGraph,
    SurfaceStats,
    VerificationError,
    asymptotic_suite,
    audit,
    closed_form_euler,
    closed_form_pdg,
    equivalent_embedding,
    euler_polynomial,
    families,
    generate,
    genus_of_partial_dual,
    max_pd_genus,
    moments,
    partial_dual,
    pdg_polynomial,
    recurrence_pdg,
    run_cli,
    spectrum,
    surface_stats,
)

__all__ = [
    "ParseError",
    "PreconditionError",
    "RibbonGraph",
    "SurfaceStats",
    "VerificationError",
    "asymptotic_suite",
    "audit",
    "closed_form_euler",
    "closed_form_pdg",
    "equivalent_embedding",
    "euler_polynomial",
    "families",
    "generate",
    "genus_of_partial_dual",
    "max_pd_genus",
    "moments",
    "partial_dual",
    "pdg_polynomial",
    "recurrence_pdg",
    "run_cli",
    "spectrum",
    "surface_stats",
]
