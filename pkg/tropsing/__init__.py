# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Singular tropical hypersurfaces and tropical discriminants.

The tropsing package decides exactly whether a min-plus polynomial is
singular at a point of its tropical hypersurface, in characteristic zero,
in characteristic p and p-adically. It enumerates the maximal cones of the
fans H_{p,n} of singular univariate polynomials, finds universally singular
polynomials and computes Newton polytopes of discriminants modulo p.
"""
from . import disc_newton, errors, euler, hpn, singular, trop_core, universal, verify
from .disc_newton import compare_newton, generic_discriminant, newton_polytope
from .euler import LinearForm, derivative_family, euler_derivative
from .hpn import ConeDescriptor, adjacency_probe, classify, enumerate_cones, in_H
from .singular import (
    is_singular_at,
    singular_points_multivariate,
    singular_points_univariate,
)
from .trop_core import (
    TropicalPolynomial,
    ValuationRegime,
    evaluate,
    load_polynomial,
    univariate_roots,
)
from .universal import construct_deep_cell, is_universally_singular
from .version import __version__

__all__ = [
    "disc_newton",
    "errors",
    "euler",
    "hpn",
    "singular",
    "trop_core",
    "universal",
    "verify",
    "compare_newton",
    "generic_discriminant",
    "newton_polytope",
    "LinearForm",
    "derivative_family",
    "euler_derivative",
    "ConeDescriptor",
    "adjacency_probe",
    "classify",
    "enumerate_cones",
    "in_H",
    "is_singular_at",
    "singular_points_multivariate",
    "singular_points_univariate",
    "TropicalPolynomial",
    "ValuationRegime",
    "evaluate",
    "load_polynomial",
    "univariate_roots",
    "construct_deep_cell",
    "is_universally_singular",
    "__version__",
]
