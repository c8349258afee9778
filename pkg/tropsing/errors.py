# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Definitions of Exception classes used in this package."""


class ConfigKeyError(KeyError):
    """Indicates that a config key was not found."""

    pass


class DimensionMismatchError(ValueError):
    """Indicates that a point, form, or polynomial has the wrong number of variables."""

    pass


class EmptyPolynomialError(ValueError):
    """Indicates that a root operation was called on a polynomial without terms."""

    pass


class ParseError(ValueError):
    """Indicates malformed user input (polynomial JSON, linear form, regime, descriptor)."""

    pass


class UnsupportedRegimeError(NotImplementedError):
    """Indicates that an operation is not available for a valuation regime."""

    pass


class SizeLimitError(ValueError):
    """Indicates that a configured size limit was exceeded."""

    pass


class InvalidDescriptorError(ValueError):
    """Indicates that a cone descriptor violates its residue conditions."""

    pass


class ProbeError(ValueError):
    """Indicates that a polynomial is not a valid input for adjacency probing."""

    pass


class WitnessMismatchError(ValueError):
    """Indicates that a universal cell witness does not describe the polynomial."""

    pass


class CellCollisionError(RuntimeError):
    """Indicates that a polynomial lies in the interior of two distinct maximal cones."""

    pass


class InexactDivisionError(ArithmeticError):
    """Indicates that an exact polynomial division left a remainder."""

    pass


class VerificationMismatch(AssertionError):
    """Indicates that a verification check did not reproduce the expected result."""

    pass
