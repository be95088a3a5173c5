"""Generalized Stieltjes transform toolkit."""

from ._core import (
    GstDomainError,
    GstError,
    TransformPair,
    chi_contour,
    chi_laplace_check,
    contour_beta_identity,
    delta_from_f,
    disc,
    forward,
    inverse,
    pair_point_mass,
    pair_power,
    pair_power_continued,
    pair_power_hyper,
    point_mass_sifting,
    radial_inverse,
    run_suite,
)

__all__ = [
    "GstDomainError",
    "GstError",
    "TransformPair",
    "chi_contour",
    "chi_laplace_check",
    "contour_beta_identity",
    "delta_from_f",
    "disc",
    "forward",
    "inverse",
    "pair_point_mass",
    "pair_power",
    "pair_power_continued",
    "pair_power_hyper",
    "point_mass_sifting",
    "radial_inverse",
    "run_suite",
]
