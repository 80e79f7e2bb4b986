"""Exact counting triangles, generating polynomials and their roots."""

from ._blockpoly import (
    bell,
    check_congruences,
    crosscheck,
    d_count,
    d_poly,
    d_poly_roots,
    d_total,
    is_prime,
    ogf,
    peak,
    samuelson,
    series,
    triangle,
    verify,
    ward_form,
)

__all__ = [
    "bell",
    "check_congruences",
    "crosscheck",
    "d_count",
    "d_poly",
    "d_poly_roots",
    "d_total",
    "is_prime",
    "ogf",
    "peak",
    "samuelson",
    "series",
    "triangle",
    "verify",
    "ward_form",
]
