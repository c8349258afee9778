# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Universally singular polynomials.

A univariate polynomial of degree ``n`` is universally singular if it has a
double root at 0 in characteristic zero and in every characteristic ``p``.
Only the primes ``p <= n + 1`` need to be checked: for larger primes the Euler
derivatives agree with characteristic zero.
"""
import itertools
import logging
from math import gcd, prod

from sympy import factorint, prime, primerange

from .errors import SizeLimitError, VerificationMismatch, WitnessMismatchError
from .hpn import _argmin, _coefficients, _deletion_argmins, in_H
from .trop_core import TropicalPolynomial, polynomial_to_json
from .util.config import require_config_value
from .util.linalg import rank
from .util.misc import _get_parallel_executor

logger = logging.getLogger(__name__)


def rad(m):
    """Return the product of the distinct primes dividing ``m``.

    Raises
    ------
    ValueError
        If ``m`` is not positive.

    """
    if m <= 0:
        raise ValueError(f"The radical is defined for positive integers, got {m}.")
    return prod(factorint(m))


def universal_primes(n):
    """Return the primes that decide universal singularity in degree ``n``."""
    return list(primerange(2, n + 2))


class UniversalVerdict:
    """Membership of a polynomial in H_{0,n} and every H_{p,n}.

    Attributes
    ----------
    breakdown : dict
        Maps 0 and each prime ``p <= n + 1`` to the membership verdict.
    failing_prime : int or None
        The first characteristic (0 first) where membership fails.

    """

    def __init__(self, n, breakdown):
        self.n = n
        self.breakdown = breakdown
        self.failing_prime = next((p for p, ok in breakdown.items() if not ok), None)

    @property
    def primes(self):
        """list: The primes that were checked."""
        return [p for p in self.breakdown if p]

    def __bool__(self):
        return self.failing_prime is None

    def to_json(self):
        """Return the verdict as a JSON-compatible dict."""
        return {
            "degree": self.n,
            "universally_singular": bool(self),
            "breakdown": {str(p): ok for p, ok in self.breakdown.items()},
            "failing_prime": self.failing_prime,
        }

    def __repr__(self):
        return (
            f"UniversalVerdict(n={self.n}, universal={bool(self)}, "
            f"failing_prime={self.failing_prime})"
        )


def is_universally_singular(f, n):
    """Check membership in H_{0,n} and in H_{p,n} for every prime ``p <= n + 1``.

    Returns
    -------
    :class:`UniversalVerdict`
        Truthy iff ``f`` is universally singular.

    """
    breakdown = {0: in_H(f, 0)}
    for p in universal_primes(n):
        breakdown[p] = in_H(f, p)
    return UniversalVerdict(n, breakdown)


def active_equality_rank(f, n):
    """Return the number of independent tie equalities active at ``f``.

    The ties are those of the membership tests in characteristic zero and in
    every characteristic ``p <= n + 1``. For a universally singular ``f`` this
    is the codimension of its cell.
    """
    values = _coefficients(f)
    ties = {_argmin(values)}
    for p in universal_primes(n):
        ties.update(_deletion_argmins(values, p))
    rows = []
    for tie in ties:
        tie = sorted(tie)
        for a, b in zip(tie, tie[1:]):
            row = [0] * (n + 1)
            row[a], row[b] = 1, -1
            rows.append(row)
    return rank(rows) if rows else 0


class UnivCellWitness:
    """The combinatorial data of a codimension-3 universally singular cell.

    Parameters
    ----------
    triple : sequence of int
        The monomials ``i < j < k`` with tied minimal coefficient.
    pair : sequence of int
        The monomials ``r, s`` minimal after deleting the class of ``i``
        modulo ``d``.

    Raises
    ------
    :class:`~.WitnessMismatchError`
        If the five monomials are not distinct or the pairwise differences of
        the triple do not share one radical.

    """

    def __init__(self, triple, pair):
        self.i, self.j, self.k = sorted(int(m) for m in triple)
        self.r, self.s = sorted(int(m) for m in pair)
        if len({self.i, self.j, self.k}) != 3 or self.r == self.s:
            raise WitnessMismatchError("The witness monomials must be distinct.")
        if {self.r, self.s} & {self.i, self.j, self.k}:
            raise WitnessMismatchError(
                f"The pair {(self.r, self.s)} meets the triple {(self.i, self.j, self.k)}."
            )
        radicals = {rad(self.j - self.i), rad(self.k - self.i), rad(self.k - self.j)}
        if len(radicals) != 1:
            raise WitnessMismatchError(
                f"The differences of {(self.i, self.j, self.k)} have different radicals "
                f"{sorted(radicals)}."
            )
        self.d = radicals.pop()

    @classmethod
    def from_polynomial(cls, f):
        """Read the witness off a polynomial whose minimum is attained exactly three times.

        Raises
        ------
        :class:`~.WitnessMismatchError`
            If the minimum is not a triple, the radicals differ, or the
            minimum after deleting the class of ``i`` is not a pair.

        """
        values = _coefficients(f)
        triple = sorted(_argmin(values))
        if len(triple) != 3:
            raise WitnessMismatchError(
                f"The minimum of {f} is attained {len(triple)} times, expected 3."
            )
        i = triple[0]
        d = rad(triple[1] - i)
        pair = _argmin(values, lambda m: (m - i) % d != 0)
        if len(pair) != 2:
            raise WitnessMismatchError(
                f"After deleting the class of {i} mod {d}, the minimum of {f} is "
                f"attained {len(pair)} times, expected 2."
            )
        return cls(triple, pair)

    @property
    def unit_flags(self):
        """list of tuple: ``(residue, is_unit)`` for ``r - i`` and ``s - i`` mod ``d``."""
        return [
            ((m - self.i) % self.d, gcd(m - self.i, self.d) == 1) for m in (self.r, self.s)
        ]

    @property
    def units_ok(self):
        """bool: Whether ``r - i`` and ``s - i`` are units modulo ``d``."""
        return all(unit for _, unit in self.unit_flags)

    def representative(self, n):
        """Return the polynomial with 0 on the triple, 1 on the pair and 2 elsewhere."""
        coefficients = [2] * (n + 1)
        for m in (self.i, self.j, self.k):
            coefficients[m] = 0
        for m in (self.r, self.s):
            coefficients[m] = 1
        return TropicalPolynomial.from_coefficients(coefficients)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return (self.i, self.j, self.k, self.r, self.s) == (
            other.i,
            other.j,
            other.k,
            other.r,
            other.s,
        )

    def __hash__(self):
        return hash((self.i, self.j, self.k, self.r, self.s))

    def __repr__(self):
        return (
            f"UnivCellWitness(triple={[self.i, self.j, self.k]}, pair={[self.r, self.s]}, "
            f"d={self.d})"
        )


def enumerate_witnesses(n):
    """Yield every witness with monomials in 0..n whose pair consists of units mod ``d``."""
    for triple in itertools.combinations(range(n + 1), 3):
        i, j, k = triple
        radicals = {rad(j - i), rad(k - i), rad(k - j)}
        if len(radicals) != 1:
            continue
        d = radicals.pop()
        units = [m for m in range(n + 1) if gcd(m - i, d) == 1]
        for pair in itertools.combinations(units, 2):
            yield UnivCellWitness(triple, pair)


def codim3_cell_test(w, f):
    """Test the codimension-3 characterization on a polynomial realizing a witness.

    Parameters
    ----------
    w : :class:`UnivCellWitness`
        The witness.
    f : :class:`~.TropicalPolynomial`
        A polynomial with minimum exactly at the witness triple and, after
        deleting the class of ``i`` modulo ``d``, minimum exactly at the pair.

    Returns
    -------
    bool
        Whether the witness conditions hold; in that case ``f`` is also
        verified to be universally singular.

    Raises
    ------
    :class:`~.WitnessMismatchError`
        If ``f`` does not realize the witness pattern.
    :class:`~.VerificationMismatch`
        If the conditions hold but ``f`` is not universally singular.

    """
    values = _coefficients(f)
    if _argmin(values) != {w.i, w.j, w.k}:
        raise WitnessMismatchError(f"The minimum of {f} is not attained at {(w.i, w.j, w.k)}.")
    if _argmin(values, lambda m: (m - w.i) % w.d != 0) != {w.r, w.s}:
        raise WitnessMismatchError(
            f"After deleting the class of {w.i} mod {w.d}, the minimum of {f} is not "
            f"attained at {(w.r, w.s)}."
        )
    n = max(values)
    verdict = w.units_ok
    universal = is_universally_singular(f, n)
    if verdict and not universal:
        raise VerificationMismatch(
            f"{w!r} satisfies the cell conditions but {f} fails at p={universal.failing_prime}."
        )
    return verdict


class DeepCell:
    """A universally singular polynomial on a cell of codimension ``k + 2``.

    Attributes
    ----------
    polynomial : :class:`~.TropicalPolynomial`
    n : int
        The degree ``2 * 4**k``.
    d : int
        The product of the first ``k`` primes.
    rank : int
        The computed equality rank (the codimension).
    claimed_codimension : int
        ``k + 2``.

    """

    def __init__(self, k, n, d, polynomial, rank):
        self.k = k
        self.n = n
        self.d = d
        self.polynomial = polynomial
        self.rank = rank
        self.claimed_codimension = k + 2

    def to_json(self):
        """Return the cell as a JSON-compatible dict."""
        return {
            "k": self.k,
            "degree": self.n,
            "d": self.d,
            "rank": self.rank,
            "claimed_codimension": self.claimed_codimension,
            "universally_singular": bool(is_universally_singular(self.polynomial, self.n)),
            "polynomial": polynomial_to_json(self.polynomial),
        }

    def __repr__(self):
        return f"DeepCell(k={self.k}, n={self.n}, d={self.d}, rank={self.rank})"


def construct_deep_cell(k, max_degree=None):
    """Build a universally singular polynomial on a cell of codimension ``k + 2``.

    With ``n = 2 * 4**k`` and ``d = p_1 * ... * p_k`` the coefficients are 0 at
    ``{0, d, 2d}``, ``i`` at ``{d / p_i, d / p_i + d}`` and ``k + 1`` elsewhere.

    Parameters
    ----------
    k : int
        Positive integer.
    max_degree : int
        Largest admissible degree. (Default value = None, which uses the
        ``max_universal_degree`` configuration value)

    Returns
    -------
    :class:`DeepCell`

    Raises
    ------
    ValueError
        If ``k < 1``.
    :class:`~.SizeLimitError`
        If the degree exceeds ``max_degree``.

    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}.")
    if max_degree is None:
        max_degree = require_config_value("max_universal_degree")
    n = 2 * 4**k
    if n > max_degree:
        raise SizeLimitError(
            f"The deep cell for k={k} has degree {n}, exceeding max_universal_degree={max_degree}."
        )
    primes = [prime(t) for t in range(1, k + 1)]
    d = prod(primes)
    if d >= 4**k:
        logger.warning("The product of the first %d primes is not below 4^%d.", k, k)
    coefficients = [k + 1] * (n + 1)
    for t, q in enumerate(primes, start=1):
        coefficients[d // q] = t
        coefficients[d // q + d] = t
    for m in (0, d, 2 * d):
        coefficients[m] = 0
    f = TropicalPolynomial.from_coefficients(coefficients)
    cell = DeepCell(k, n, d, f, active_equality_rank(f, n))
    logger.info("Deep cell for k=%d: degree %d, rank %d.", k, n, cell.rank)
    return cell


class ScanEntry:
    """One universally singular coefficient vector found by :func:`scan_universal`."""

    def __init__(self, coefficients, rank, minimum_ties, witness_ok):
        self.coefficients = coefficients
        self.rank = rank
        self.minimum_ties = minimum_ties
        self.witness_ok = witness_ok

    def __repr__(self):
        return (
            f"ScanEntry({self.coefficients}, rank={self.rank}, "
            f"minimum_ties={self.minimum_ties}, witness_ok={self.witness_ok})"
        )


def _scan_one(coefficients):
    f = TropicalPolynomial.from_coefficients(coefficients)
    n = len(coefficients) - 1
    if not is_universally_singular(f, n):
        return None
    ties = len(_argmin(_coefficients(f)))
    try:
        witness_ok = UnivCellWitness.from_polynomial(f).units_ok
    except WitnessMismatchError:
        witness_ok = False
    return ScanEntry(tuple(coefficients), active_equality_rank(f, n), ties, witness_ok)


def scan_universal(n, values=(0, 1, 2), parallelization="none", max_workers=None):
    """Scan all normalized coefficient vectors for universally singular ones.

    Parameters
    ----------
    n : int
        The degree.
    values : sequence of int
        The coefficient values to combine; vectors whose minimum is not
        ``min(values)`` are skipped. (Default value = (0, 1, 2))
    parallelization : str
        Executor mode. (Default value = "none")
    max_workers : int
        Number of workers. (Default value = None)

    Returns
    -------
    list of :class:`ScanEntry`
        The universally singular vectors in lexicographic order.

    """
    lowest = min(values)
    vectors = [
        v for v in itertools.product(values, repeat=n + 1) if min(v) == lowest
    ]
    logger.info("Scanning %d coefficient vectors of degree %d.", len(vectors), n)
    executor = _get_parallel_executor(parallelization, max_workers)
    results = executor(_scan_one, vectors, desc="Scanning", disable=True, chunksize=256)
    return [entry for entry in results if entry is not None]
