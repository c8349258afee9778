# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Singularity tests for points of tropical hypersurfaces.

A point ``b`` is singular for ``f`` in a regime if it is a tropical root of
every Euler derivative of ``f``. Only the finite family returned by
:func:`~.euler.derivative_family` needs to be checked.
"""
import itertools
import logging
from fractions import Fraction

from .errors import DimensionMismatchError, SizeLimitError
from .euler import derivative_family, euler_derivative
from .trop_core import (
    Point,
    RegimeKind,
    ValuationRegime,
    argmin_support,
    normalize,
    scale,
    term_values,
    univariate_roots,
)
from .util.config import require_config_value
from .util.linalg import solve
from .util.misc import _format_rational, _get_parallel_executor

logger = logging.getLogger(__name__)


class SingularityReport:
    """The outcome of a singularity test at one point.

    Parameters
    ----------
    point : :class:`~.Point`
        The tested point.
    regime : :class:`~.ValuationRegime`
        The regime of the test.
    witnesses : list of tuple
        Pairs ``(form, argmin)``: for every family form, the argmin set of the
        derivative at the point. Empty derivatives have an empty argmin set.

    """

    def __init__(self, point, regime, witnesses):
        self.point = Point(point)
        self.regime = regime
        self.witnesses = list(witnesses)
        self.failing_forms = [form for form, argmin in self.witnesses if len(argmin) < 2]

    @property
    def is_singular(self):
        """bool: Whether every derivative has the point as a tropical root."""
        return not self.failing_forms

    @property
    def failing_form(self):
        """:class:`~.LinearForm` or None: The first form whose derivative fails."""
        return self.failing_forms[0] if self.failing_forms else None

    def to_json(self):
        """Return the report as a JSON-compatible dict."""
        return {
            "point": [_format_rational(c) for c in self.point],
            "regime": str(self.regime),
            "singular": self.is_singular,
            "failing_form": None if self.failing_form is None else str(self.failing_form),
            "failing_forms": [str(form) for form in self.failing_forms],
            "witnesses": {
                form.label: [list(exp) for exp in sorted(argmin)]
                for form, argmin in self.witnesses
            },
        }

    def __repr__(self):
        return (
            f"SingularityReport(point={self.point!r}, regime={self.regime!r}, "
            f"singular={self.is_singular})"
        )


def _spread(f, b):
    values = term_values(f, b).values()
    return max(values) - min(values)


def is_singular_at(f, b, regime):
    """Test whether ``b`` is a singular point of the tropical hypersurface of ``f``.

    The point does not have to be a tropical root of ``f``; the trivial form
    of the family checks that. An empty derivative counts as a failure.

    Parameters
    ----------
    f : :class:`~.TropicalPolynomial`
        The polynomial (non-empty).
    b : sequence or rational
        The point.
    regime : :class:`~.ValuationRegime`
        The valuation regime.

    Returns
    -------
    :class:`SingularityReport`
        The verdict with one witness per family form.

    Raises
    ------
    :class:`~.UnsupportedRegimeError`
        For the p-adic regime in more than one variable.

    """
    b = Point(b)
    if b.dim != f.dim:
        raise DimensionMismatchError(
            f"Point {b!r} has {b.dim} coordinates, the polynomial has {f.dim} variables."
        )
    spread = _spread(f, b) if regime.kind == RegimeKind.padic else 0
    witnesses = []
    for form in derivative_family(f.support, f.dim, regime, spread):
        derivative = euler_derivative(f, form, regime)
        argmin = argmin_support(derivative, b) if len(derivative) else frozenset()
        witnesses.append((form, argmin))
    return SingularityReport(b, regime, witnesses)


def singular_points_univariate(f, regime):
    """Test every tropical root of a univariate polynomial.

    Returns
    -------
    list of :class:`SingularityReport`
        One report per tropical root, in increasing order of the root. The
        singular locus consists of the points of the singular reports.

    """
    return [is_singular_at(f, [root], regime) for root, _ in univariate_roots(f)]


def _arrangement_vertices(f):
    """Return the vertices of the arrangement of pairwise tie hyperplanes of ``f``."""
    hyperplanes = {}
    for (i, a), (j, c) in itertools.combinations(f.items(), 2):
        normal = tuple(x - y for x, y in zip(i, j))
        hyperplanes.setdefault((normal, c - a), None)
    vertices = set()
    for chosen in itertools.combinations(hyperplanes, f.dim):
        solution = solve([normal for normal, _ in chosen], [rhs for _, rhs in chosen])
        if solution is not None:
            vertices.add(solution)
    return sorted(vertices)


def singular_points_multivariate(
    f, regime, max_support=None, parallelization="none", max_workers=None
):
    """Return the singular vertices of a multivariate tropical hypersurface.

    Candidates are the vertices of the arrangement of tie hyperplanes
    ``a_i + <i, b> = a_j + <j, b>``. Candidates outside ``T(f)`` are dropped
    and the others tested with :func:`is_singular_at`. Positive-dimensional
    singular loci are reported through their vertices only.

    Parameters
    ----------
    f : :class:`~.TropicalPolynomial`
        A polynomial in at least two variables.
    regime : :class:`~.ValuationRegime`
        Characteristic zero or characteristic p.
    max_support : int
        The largest support size accepted. (Default value = None, which uses
        the ``max_support`` configuration value)
    parallelization : str
        Executor mode for the candidate tests. (Default value = "none")
    max_workers : int
        Worker count for parallel modes. (Default value = None, which lets the
        executor decide)

    Returns
    -------
    list of :class:`SingularityReport`
        The singular vertices, sorted lexicographically.

    Raises
    ------
    :class:`~.SizeLimitError`
        If the support exceeds ``max_support``.

    """
    if f.dim < 2:
        raise DimensionMismatchError("Use singular_points_univariate in one variable.")
    if max_support is None:
        max_support = require_config_value("max_support")
    if len(f) > max_support:
        raise SizeLimitError(
            f"Support size {len(f)} exceeds the limit max_support={max_support}."
        )
    candidates = [
        b for b in _arrangement_vertices(f) if len(argmin_support(f, b)) >= 2
    ]
    logger.debug("Testing %d arrangement vertices in T(f).", len(candidates))
    executor = _get_parallel_executor(parallelization, max_workers)
    reports = executor(
        lambda b: is_singular_at(f, b, regime),
        candidates,
        desc="Testing candidates",
        disable=True,
    )
    return [report for report in reports if report.is_singular]


class InterpolationRecord:
    """Comparison of the p-adic and characteristic p verdicts for one polynomial.

    Attributes
    ----------
    scaled : :class:`~.TropicalPolynomial`
        The polynomial scaled into the epsilon ball.
    small_padic, small_char_p : list of :class:`SingularityReport`
        Univariate reports of ``scaled`` under both regimes.
    padic_at_zero, char_p_at_zero : :class:`SingularityReport`
        Reports of the original polynomial at 0.

    """

    def __init__(
        self, p, epsilon, scaled, small_padic, small_char_p, padic_at_zero, char_p_at_zero
    ):
        self.p = p
        self.epsilon = epsilon
        self.scaled = scaled
        self.small_padic = small_padic
        self.small_char_p = small_char_p
        self.padic_at_zero = padic_at_zero
        self.char_p_at_zero = char_p_at_zero

    @property
    def small_ball_agrees(self):
        """bool: Whether both regimes find the same singular roots near 0."""
        return [r.is_singular for r in self.small_padic] == [
            r.is_singular for r in self.small_char_p
        ]

    def to_json(self):
        """Return the record as a JSON-compatible dict."""
        return {
            "p": self.p,
            "epsilon": _format_rational(self.epsilon),
            "small_ball_agrees": self.small_ball_agrees,
            "small_padic": [r.to_json() for r in self.small_padic],
            "small_char_p": [r.to_json() for r in self.small_char_p],
            "padic_at_zero": self.padic_at_zero.to_json(),
            "char_p_at_zero": self.char_p_at_zero.to_json(),
        }

    def __repr__(self):
        return (
            f"InterpolationRecord(p={self.p}, epsilon={self.epsilon}, "
            f"small_ball_agrees={self.small_ball_agrees})"
        )


def padic_interpolation_check(f, p, epsilon=Fraction(1, 1000)):
    """Compare the p-adic and characteristic p singularity tests.

    The polynomial is normalized and scaled so that all coefficients lie in
    ``[0, epsilon/2]``; close to the origin both regimes must then agree. The
    record also holds both verdicts of ``f`` itself at 0, which for widely
    separated cone representatives tell type I cells (singular in both
    regimes) from type II cells (singular in characteristic p only).

    Parameters
    ----------
    f : :class:`~.TropicalPolynomial`
        A univariate polynomial.
    p : int
        The prime.
    epsilon : rational
        Radius of the ball. (Default value = 1/1000)

    Returns
    -------
    :class:`InterpolationRecord`

    """
    if f.dim != 1:
        raise DimensionMismatchError("The interpolation check needs a univariate polynomial.")
    epsilon = Fraction(epsilon)
    shifted = normalize(f)
    largest = max(shifted.values())
    scaled = scale(shifted, epsilon / (2 * largest)) if largest else shifted
    padic, char_p = ValuationRegime.padic(p), ValuationRegime.char_p(p)
    record = InterpolationRecord(
        p,
        epsilon,
        scaled,
        singular_points_univariate(scaled, padic),
        singular_points_univariate(scaled, char_p),
        is_singular_at(f, [0], padic),
        is_singular_at(f, [0], char_p),
    )
    if not record.small_ball_agrees:
        logger.warning("p-adic and characteristic %d verdicts differ for %s.", p, scaled)
    return record
