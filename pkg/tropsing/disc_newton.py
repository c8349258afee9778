# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Generic discriminants, resultants and their Newton polytopes.

The discriminant of ``F = a_0 + a_1 X + ... + a_n X^n`` is computed over the
integers as ``(-1)^(n(n-1)/2) * Res(F, F') / a_n`` from the Sylvester matrix.
Its support modulo ``p`` spans the Newton polytope ``N_{p,n}``, whose faces
are counted with exact linear programming.
"""
import itertools
import logging
from collections.abc import Mapping
from fractions import Fraction
from math import comb

from .errors import InexactDivisionError, SizeLimitError
from .util.cache import PolynomialCache
from .util.config import require_config_value
from .util.linalg import affine_rank, bareiss_determinant, cofactor_determinant, row_echelon
from .util.misc import _get_parallel_executor
from .util.simplex import hull_contains, phase_one

logger = logging.getLogger(__name__)

DETERMINANT_METHODS = ("bareiss", "cofactor")


class SparseIntegerPolynomial(Mapping):
    """A multivariate polynomial with arbitrary-precision integer coefficients.

    The polynomial is a read-only mapping from exponent vectors to nonzero
    integer coefficients. Arithmetic with integers is supported.

    Parameters
    ----------
    nvars : int
        The number of variables.
    terms : mapping or iterable of pairs
        The terms ``{exponent: coefficient}``; zero coefficients are dropped.

    """

    def __init__(self, nvars, terms=()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        self._nvars = nvars
        self._terms = {}
        for exp, coeff in terms:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"Exponent {exp} does not have {nvars} entries.")
            if exp in self._terms:
                raise ValueError(f"Duplicate exponent {exp}.")
            if coeff:
                self._terms[exp] = int(coeff)

    @classmethod
    def variable(cls, nvars, index):
        """Return the variable with the given index."""
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def constant(cls, nvars, value):
        """Return a constant polynomial."""
        return cls(nvars, {(0,) * nvars: value})

    @property
    def nvars(self):
        """int: The number of variables."""
        return self._nvars

    def __getitem__(self, exp):
        return self._terms[tuple(exp)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, SparseIntegerPolynomial):
            if other._nvars != self._nvars:
                raise ValueError("Polynomials have different numbers of variables.")
            return other
        if isinstance(other, int):
            return SparseIntegerPolynomial.constant(self._nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return SparseIntegerPolynomial(self._nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparseIntegerPolynomial(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return SparseIntegerPolynomial(self._nvars, terms)

    __rmul__ = __mul__

    def leading_term(self):
        """Return ``(exponent, coefficient)`` of the lexicographically largest term."""
        exp = max(self._terms)
        return exp, self._terms[exp]

    def exact_divide(self, divisor):
        """Divide by ``divisor``, which must divide this polynomial exactly.

        Raises
        ------
        :class:`~.InexactDivisionError`
            If the division leaves a remainder.
        ZeroDivisionError
            If the divisor is zero.

        """
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("Division by the zero polynomial.")
        lead_exp, lead_coeff = divisor.leading_term()
        remainder = dict(self._terms)
        quotient = {}
        while remainder:
            exp = max(remainder)
            coeff = remainder[exp]
            shift = tuple(a - b for a, b in zip(exp, lead_exp))
            if min(shift) < 0 or coeff % lead_coeff:
                raise InexactDivisionError(
                    f"Division leaves a remainder (term {coeff} at {exp})."
                )
            factor = coeff // lead_coeff
            quotient[shift] = factor
            for dexp, dcoeff in divisor._terms.items():
                target = tuple(a + b for a, b in zip(shift, dexp))
                value = remainder.get(target, 0) - factor * dcoeff
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return SparseIntegerPolynomial(self._nvars, quotient)

    def degrees(self, weights=None):
        """Return the set of (weighted) total degrees of the terms."""
        weights = weights or [1] * self._nvars
        return {sum(w * e for w, e in zip(weights, exp)) for exp in self._terms}

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparseIntegerPolynomial.constant(self._nvars, other)
        if not isinstance(other, SparseIntegerPolynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self._nvars, frozenset(self._terms.items())))

    def __repr__(self):
        return f"SparseIntegerPolynomial({self._nvars}, {dict(sorted(self._terms.items()))!r})"

    def format(self, names=None):
        """Format the polynomial with the given variable names (default a0, a1, ...)."""
        names = names or [f"a{k}" for k in range(self._nvars)]
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in sorted(self._terms.items(), reverse=True):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
            ]
            magnitude = abs(coeff)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, "*".join(factors)))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return text + "".join(f" {sign} {body}" for sign, body in parts[1:])

    def __str__(self):
        return self.format()


def sylvester_matrix(f, g, zero):
    """Return the Sylvester matrix of two coefficient lists in descending order.

    The rows of ``f`` come first. Both lists must have a nonzero leading entry.
    """
    m, k = len(f) - 1, len(g) - 1
    size = m + k
    rows = []
    for coeffs, count in ((f, k), (g, m)):
        for r in range(count):
            row = [zero] * size
            for c, entry in enumerate(coeffs):
                row[r + c] = entry
            rows.append(row)
    return rows


def determinant(matrix, nvars, method="bareiss"):
    """Return the determinant of a matrix of :class:`SparseIntegerPolynomial` entries.

    Parameters
    ----------
    matrix : list of list
        Square polynomial matrix.
    nvars : int
        The number of variables of the entries.
    method : str
        "bareiss" (fraction-free elimination) or "cofactor" (memoized
        Laplace expansion). (Default value = "bareiss")

    """
    zero = SparseIntegerPolynomial(nvars)
    if method == "bareiss":
        return bareiss_determinant(matrix, lambda a, b: a.exact_divide(b), zero)
    if method == "cofactor":
        return cofactor_determinant(matrix, zero)
    raise ValueError(
        f"Unknown determinant method '{method}', expected one of {DETERMINANT_METHODS}."
    )


def generic_discriminant(n, method="bareiss", cache_dir=None, max_degree=None):
    """Return the discriminant of the generic polynomial of degree ``n``.

    The variables are the coefficients ``a_0, ..., a_n``.

    Parameters
    ----------
    n : int
        The degree, at least 2.
    method : str
        Determinant method, see :func:`determinant`. (Default value = "bareiss")
    cache_dir : str
        Cache directory; None disables caching. (Default value = None)
    max_degree : int
        Largest admissible degree. (Default value = None, which uses the
        ``max_degree`` configuration value)

    Raises
    ------
    :class:`~.SizeLimitError`
        If ``n`` exceeds ``max_degree``.
    :class:`~.InexactDivisionError`
        If the resultant is not divisible by ``a_n``.

    """
    if max_degree is None:
        max_degree = require_config_value("max_degree")
    if n < 2:
        raise ValueError(f"The degree must be at least 2, got {n}.")
    if n > max_degree:
        raise SizeLimitError(f"Degree {n} exceeds the limit max_degree={max_degree}.")
    cache = PolynomialCache(cache_dir)
    cached = cache.load("disc", (n,))
    if cached is not None:
        return cached
    nvars = n + 1
    a = [SparseIntegerPolynomial.variable(nvars, i) for i in range(nvars)]
    zero = SparseIntegerPolynomial(nvars)
    f = list(reversed(a))
    derivative = [i * a[i] for i in range(n, 0, -1)]
    resultant = determinant(sylvester_matrix(f, derivative, zero), nvars, method)
    try:
        disc = resultant.exact_divide(a[n])
    except InexactDivisionError as error:
        raise InexactDivisionError(
            f"The resultant of degree {n} is not divisible by a_{n}: {error}"
        ) from error
    if (n * (n - 1) // 2) % 2:
        disc = -disc
    logger.info("Discriminant of degree %d has %d terms (%s).", n, len(disc), method)
    cache.store("disc", (n,), disc)
    return disc


def resultant_generic_pair(m, k, method="bareiss", cache_dir=None, max_degree=None):
    """Return the resultant of two generic polynomials of degrees ``m`` and ``k``.

    The variables are ``b_0, ..., b_m, c_0, ..., c_k``.

    Raises
    ------
    :class:`~.SizeLimitError`
        If a degree exceeds ``max_degree`` (the ``max_resultant_degree``
        configuration value by default).

    """
    if max_degree is None:
        max_degree = require_config_value("max_resultant_degree")
    if min(m, k) < 1:
        raise ValueError("Both degrees must be positive.")
    if max(m, k) > max_degree:
        raise SizeLimitError(
            f"Degrees ({m}, {k}) exceed the limit max_resultant_degree={max_degree}."
        )
    cache = PolynomialCache(cache_dir)
    cached = cache.load("res", (m, k))
    if cached is not None:
        return cached
    nvars = m + k + 2
    variables = [SparseIntegerPolynomial.variable(nvars, i) for i in range(nvars)]
    zero = SparseIntegerPolynomial(nvars)
    f = list(reversed(variables[: m + 1]))
    g = list(reversed(variables[m + 1 :]))
    resultant = determinant(sylvester_matrix(f, g, zero), nvars, method)
    logger.info("Resultant of degrees (%d, %d) has %d terms.", m, k, len(resultant))
    cache.store("res", (m, k), resultant)
    return resultant


def support_mod_p(polynomial, p):
    """Return the exponents whose coefficient is not divisible by ``p`` (all for ``p = 0``)."""
    if p == 0:
        return set(polynomial)
    return {exp for exp, coeff in polynomial.items() if coeff % p}


class LatticePolytope:
    """The convex hull of a finite set of integer points.

    Points are projected onto pivot coordinates of their affine hull, which
    preserves the face structure and makes the polytope full-dimensional.

    Parameters
    ----------
    points : iterable of tuple
        The generating points.
    homogeneity : sequence of tuple
        Optional pairs ``(weights, degree)``; every point must satisfy
        ``<weights, point> = degree``. (Default value = ())
    max_points, max_dim : int
        Size limits. (Default value = None, which uses the configuration)

    Raises
    ------
    ValueError
        If fewer than two distinct points are given or a homogeneity fails.
    :class:`~.SizeLimitError`
        If a size limit is exceeded.

    """

    def __init__(self, points, homogeneity=(), max_points=None, max_dim=None):
        self.points = sorted({tuple(int(c) for c in point) for point in points})
        if len(self.points) < 2:
            raise ValueError("A polytope needs at least two distinct points.")
        if max_points is None:
            max_points = require_config_value("max_polytope_points")
        if max_dim is None:
            max_dim = require_config_value("max_polytope_dim")
        if len(self.points) > max_points:
            raise SizeLimitError(
                f"{len(self.points)} points exceed the limit max_polytope_points={max_points}."
            )
        for weights, degree in homogeneity:
            for point in self.points:
                if sum(w * c for w, c in zip(weights, point)) != degree:
                    raise ValueError(
                        f"Point {point} violates the homogeneity {weights} = {degree}."
                    )
        origin = self.points[0]
        differences = [[a - b for a, b in zip(point, origin)] for point in self.points[1:]]
        _, pivots = row_echelon(differences)
        self.pivots = pivots
        self.dim = len(pivots)
        if self.dim > max_dim:
            raise SizeLimitError(
                f"Polytope dimension {self.dim} exceeds the limit max_polytope_dim={max_dim}."
            )
        self.projected = [tuple(point[c] for c in pivots) for point in self.points]

    @property
    def nvars(self):
        """int: The ambient dimension of the original points."""
        return len(self.points[0])

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"LatticePolytope({len(self.points)} points, dim={self.dim})"


def discriminant_polytope(support, n):
    """Return the polytope of a discriminant support, checking both homogeneities."""
    return LatticePolytope(
        support,
        homogeneity=[([1] * (n + 1), 2 * n - 2), (list(range(n + 1)), n * (n - 1))],
    )


def newton_polytope(n, p, method="bareiss", cache_dir=None):
    """Return the Newton polytope ``N_{p,n}`` of the degree ``n`` discriminant mod ``p``."""
    disc = generic_discriminant(n, method=method, cache_dir=cache_dir)
    return discriminant_polytope(support_mod_p(disc, p), n)


class FaceCensus:
    """Vertices, edges and 2-faces of a lattice polytope.

    Attributes
    ----------
    vertices : list of tuple
        Sorted vertices (original coordinates).
    edges : list of tuple
        Sorted pairs of vertices.
    faces : list of tuple
        Sorted tuples of the vertices of each 2-face.
    census : dict
        Maps the number of vertices of a 2-face to the number of such faces.

    """

    def __init__(self, vertices, edges, faces):
        self.vertices = sorted(vertices)
        self.edges = sorted(edges)
        self.faces = sorted(faces)
        self.census = {}
        for face in self.faces:
            self.census[len(face)] = self.census.get(len(face), 0) + 1
        self.census = dict(sorted(self.census.items()))

    @property
    def triangles(self):
        """int: The number of triangular 2-faces."""
        return self.census.get(3, 0)

    @property
    def quadrangles(self):
        """int: The number of quadrangular 2-faces."""
        return self.census.get(4, 0)

    def as_tuple(self):
        """Return ``(vertices, edges, quadrangles, triangles)`` counts."""
        return (len(self.vertices), len(self.edges), self.quadrangles, self.triangles)

    def to_json(self):
        """Return the census as a JSON-compatible dict."""
        return {
            "vertices": [list(v) for v in self.vertices],
            "edge_count": len(self.edges),
            "face_census": {str(k): v for k, v in self.census.items()},
            "counts": {
                "vertices": len(self.vertices),
                "edges": len(self.edges),
                "quadrangles": self.quadrangles,
                "triangles": self.triangles,
            },
        }

    def __repr__(self):
        return (
            f"FaceCensus(vertices={len(self.vertices)}, edges={len(self.edges)}, "
            f"census={self.census})"
        )


def _closure(polytope, base):
    """Return the indices of all points in the affine hull of the base points."""
    points = polytope.projected
    chosen = [points[i] for i in base]
    span = affine_rank(chosen)
    return frozenset(
        i for i, q in enumerate(points) if i in base or affine_rank(chosen + [q]) == span
    )


def _is_face(polytope, indices):
    """Test whether the point set ``indices`` (closed under affine hull) is a face."""
    points = polytope.projected
    members = sorted(indices)
    anchor = points[members[0]]
    directions = [tuple(a - b for a, b in zip(points[i], anchor)) for i in members[1:]]
    others = [q for i, q in enumerate(points) if i not in indices]
    return not hull_contains(anchor, others, directions)


def polytope_faces(polytope, max_face_dim=2, parallelization="none", max_workers=None):
    """Enumerate the vertices, edges and 2-faces of a lattice polytope.

    A point set ``S`` containing every point of its affine hull is a face iff
    its anchor is not in ``conv(P - S) + span(S - anchor)``; each test is one
    exact phase-one simplex. A polytope of dimension at most 2 counts as its
    own face.

    Parameters
    ----------
    polytope : :class:`LatticePolytope`
        The polytope.
    max_face_dim : int
        0 for vertices only, 1 to include edges, 2 to include 2-faces.
        (Default value = 2)
    parallelization : str
        Executor mode for the vertex tests. (Default value = "none")
    max_workers : int
        Worker count for parallel modes. (Default value = None)

    Returns
    -------
    :class:`FaceCensus`

    """
    executor = _get_parallel_executor(parallelization, max_workers)
    count = len(polytope.points)
    flags = executor(
        lambda i: _is_face(polytope, frozenset([i])),
        list(range(count)),
        desc="Vertices",
        disable=True,
    )
    vertex_ids = [i for i, flag in zip(range(count), flags) if flag]
    vertex_set = set(vertex_ids)
    logger.debug("%d of %d points are vertices.", len(vertex_ids), count)

    edges = set()
    if max_face_dim >= 1:
        seen = set()
        for u, v in itertools.combinations(vertex_ids, 2):
            line = _closure(polytope, [u, v])
            if line in seen:
                continue
            seen.add(line)
            if _is_face(polytope, line):
                edges.add(tuple(sorted(line & vertex_set)))
    faces = set()
    if max_face_dim >= 2 and polytope.dim >= 2:
        seen = set()
        for triple in itertools.combinations(vertex_ids, 3):
            if affine_rank([polytope.projected[i] for i in triple]) != 2:
                continue
            plane = _closure(polytope, list(triple))
            if plane in seen:
                continue
            seen.add(plane)
            if _is_face(polytope, plane):
                faces.add(tuple(sorted(plane & vertex_set)))
    points = polytope.points
    census = FaceCensus(
        [points[i] for i in vertex_ids],
        [tuple(points[i] for i in edge) for edge in edges],
        [tuple(points[i] for i in face) for face in faces],
    )
    logger.info("Face census of %r: %r.", polytope, census)
    return census


def vertex_normal(polytope, vertex):
    """Return a weight vector minimized over the polytope exactly at ``vertex``.

    Returns
    -------
    tuple of :class:`fractions.Fraction` or None
        Weights in the original coordinates with ``<w, u - vertex> >= 1`` for
        every other point ``u``, or None if ``vertex`` is not a vertex.

    """
    vertex = tuple(vertex)
    nvars = polytope.nvars
    others = [u for u in polytope.points if u != vertex]
    matrix = []
    for row, u in enumerate(others):
        difference = [a - b for a, b in zip(u, vertex)]
        slack = [0] * len(others)
        slack[row] = -1
        matrix.append(difference + [-c for c in difference] + slack)
    solution = phase_one(matrix, [1] * len(others))
    if solution is None:
        return None
    return tuple(Fraction(solution[i] - solution[nvars + i]) for i in range(nvars))


class NewtonComparison:
    """Vertex sets of ``N_{p,n}`` and ``N_{q,n}`` and their differences."""

    def __init__(self, n, p, q, vertices_p, vertices_q):
        self.n = n
        self.p = p
        self.q = q
        self.vertices_p = sorted(vertices_p)
        self.vertices_q = sorted(vertices_q)
        self.only_p = sorted(set(vertices_p) - set(vertices_q))
        self.only_q = sorted(set(vertices_q) - set(vertices_p))

    def to_json(self):
        """Return the comparison as a JSON-compatible dict."""
        return {
            "degree": self.n,
            "chars": [self.p, self.q],
            "vertex_counts": [len(self.vertices_p), len(self.vertices_q)],
            f"only_{self.p}": [list(v) for v in self.only_p],
            f"only_{self.q}": [list(v) for v in self.only_q],
        }

    def __repr__(self):
        return (
            f"NewtonComparison(n={self.n}, p={self.p}, q={self.q}, "
            f"only_p={len(self.only_p)}, only_q={len(self.only_q)})"
        )


def compare_newton(n, p, q, method="bareiss", cache_dir=None):
    """Compare the vertex sets of ``N_{p,n}`` and ``N_{q,n}``."""
    disc = generic_discriminant(n, method=method, cache_dir=cache_dir)
    vertices = []
    for char in (p, q):
        polytope = discriminant_polytope(support_mod_p(disc, char), n)
        vertices.append(polytope_faces(polytope, max_face_dim=0).vertices)
    return NewtonComparison(n, p, q, *vertices)


def expected_face_counts(p):
    """Return ``(vertices, edges, quadrangles, triangles)`` predicted for ``N_{p,p}``."""
    edges = (p - 1) * (2 ** (p - 2) + Fraction(p, 2) - 2)
    return (2 ** (p - 1) - 1, int(edges), comb(p - 1, 2) * (2 ** (p - 3) - 1), comb(p, 3))


def cube_face_counts(n):
    """Return ``(vertices, edges, quadrangles, triangles)`` of the ``(n-1)``-cube ``N_{0,n}``."""
    return (2 ** (n - 1), (n - 1) * 2 ** (n - 2), comb(n - 1, 2) * 2 ** (n - 3), 0)
