# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Executable acceptance checks behind ``tropsing verify``.

Every check recomputes a published statement end to end and compares the
result with reference data. Checks are registered in :data:`CHECKS` under
the names accepted by ``tropsing verify --only``.
"""
import itertools
import logging
import random
from fractions import Fraction
from math import comb

from .disc_newton import (
    LatticePolytope,
    compare_newton,
    cube_face_counts,
    expected_face_counts,
    newton_polytope,
    polytope_faces,
    resultant_generic_pair,
    vertex_normal,
)
from .errors import ProbeError, VerificationMismatch
from .euler import LinearForm, euler_derivative
from .hpn import (
    NON_MAXIMAL,
    ConeDescriptor,
    ConeType,
    adjacency_probe,
    classify,
    common_root_cell,
    cone_representative,
    count_cones,
    count_cones_closed_form,
    enumerate_cones,
    halving_split,
    in_closure,
    in_H,
    in_H_via_derivatives,
    separated_representative,
    shared_with_char_zero,
    two_root_cell,
)
from .singular import (
    is_singular_at,
    padic_interpolation_check,
    singular_points_multivariate,
    singular_points_univariate,
)
from .trop_core import TropicalPolynomial, ValuationRegime, common_roots
from .universal import (
    active_equality_rank,
    codim3_cell_test,
    construct_deep_cell,
    enumerate_witnesses,
    is_universally_singular,
    scan_universal,
)

logger = logging.getLogger(__name__)

REFERENCE_ONLY_CHAR_ZERO = {
    (0, 2, 4, 0, 0, 2),
    (2, 0, 0, 4, 2, 0),
    (2, 0, 0, 5, 0, 1),
    (0, 4, 0, 0, 4, 0),
    (1, 0, 5, 0, 0, 2),
}
"""Vertices of N_{0,5} that are missing from N_{3,5}."""

REFERENCE_ONLY_CHAR_THREE = [(1, 3, 1, 0, 0, 3), (0, 3, 0, 0, 1, 3, 1)]
"""Listed vertices of N_{3,5} missing from N_{0,5}; the second has seven entries."""

CONE_COUNT_CASES = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (2, 2), (2, 3), (2, 4)]


class CheckResult:
    """The outcome of one named check.

    Parameters
    ----------
    name : str
        The check name.

    """

    def __init__(self, name):
        self.name = name
        self.details = []
        self.failures = []

    def expect(self, condition, message):
        """Record an expectation; failed ones are kept for the report."""
        if condition:
            self.details.append(message)
        else:
            self.failures.append(message)
            logger.warning("%s: %s", self.name, message)
        return condition

    def note(self, message):
        """Record an informational line."""
        self.details.append(message)

    @property
    def passed(self):
        """bool: Whether all expectations held."""
        return not self.failures

    def to_json(self):
        """Return the result as a JSON-compatible dict."""
        return {
            "name": self.name,
            "passed": self.passed,
            "failures": self.failures,
            "details": self.details,
        }

    def __repr__(self):
        return f"CheckResult({self.name!r}, passed={self.passed})"


def check_worked_examples(result, skip_slow=False, parallelization="none", max_workers=None):
    """Euler derivatives and singularity verdicts of the small worked examples."""
    f = TropicalPolynomial.from_coefficients([10 * i for i in range(6)])
    form = LinearForm.parse("x-4")
    expected = {
        "char:0": {0: 0, 1: 10, 2: 20, 3: 30, 5: 50},
        "char:2": {1: 10, 3: 30, 5: 50},
        "char:3": {0: 0, 2: 20, 3: 30, 5: 50},
        "padic:2": {0: 2, 1: 10, 2: 21, 3: 30, 5: 50},
        "padic:3": {0: 0, 1: 11, 2: 20, 3: 30, 5: 50},
    }
    for spec, terms in expected.items():
        derivative = euler_derivative(f, form, ValuationRegime.parse(spec))
        computed = {exp[0]: coeff for exp, coeff in derivative.items()}
        result.expect(computed == terms, f"d/d(x-4) under {spec}: {derivative}")

    char0, padic2 = ValuationRegime.char_zero(), ValuationRegime.padic(2)
    f = TropicalPolynomial.from_coefficients([0, 0, 0])
    g = TropicalPolynomial.from_coefficients([0, 1, 0])
    result.expect(is_singular_at(f, [0], char0).is_singular, f"{f} singular at 0 in char 0")
    result.expect(not is_singular_at(f, [0], padic2).is_singular, f"{f} not singular 2-adically")
    result.expect(is_singular_at(g, [0], padic2).is_singular, f"{g} singular 2-adically")
    result.expect(not is_singular_at(g, [0], char0).is_singular, f"{g} not singular in char 0")

    h = TropicalPolynomial(2, {(0, 0): 0, (2, 0): 0, (0, 2): 0, (2, 2): 0, (3, 0): 1})
    char3, char2 = ValuationRegime.char_p(3), ValuationRegime.char_p(2)
    result.expect(is_singular_at(h, [0, 0], char3).is_singular, f"{h} singular at (0,0) in char 3")
    report = is_singular_at(h, [0, 0], char2)
    result.expect(
        not report.is_singular and LinearForm.parse("x-y", 2) in report.failing_forms,
        f"{h} not singular at (0,0) in char 2, failing forms "
        + ", ".join(str(form) for form in report.failing_forms),
    )
    points = [tuple(r.point) for r in singular_points_multivariate(h, char3)]
    result.expect(points == [(0, 0)], f"singular locus in char 3: {points}")
    result.expect(not singular_points_multivariate(h, char2), "singular locus in char 2 is empty")


def check_cone_counts(result, skip_slow=False, parallelization="none", max_workers=None):
    """Enumerated cone counts against the closed forms."""
    for p, classes in CONE_COUNT_CASES:
        degree = p * classes - 1
        counts = count_cones(enumerate_cones(degree, p), p)
        closed = count_cones_closed_form(classes, p, degree=degree)
        result.expect(counts == closed, f"p={p}, degree {degree}: {counts} vs {closed}")
        if p == 2:
            continue
        shared = shared_with_char_zero(degree, p)
        lifted = [
            classify(cone_representative(cone, degree, p), degree, 0) for cone in shared
        ]
        triples = [ConeDescriptor(ConeType.char0, cone.monomials) for cone in shared]
        result.expect(
            lifted == triples and len(shared) == counts["I"],
            f"p={p}, degree {degree}: {len(shared)} cones shared with characteristic zero",
        )
    for n in range(2, 11):
        count = len(enumerate_cones(n, 0))
        result.expect(count == comb(n + 1, 3), f"char 0, degree {n}: {count} cones")


def check_cross_validation(result, skip_slow=False, parallelization="none", max_workers=None):
    """Representatives round-trip through classify; exhaustive completeness scan."""
    total = 0
    for p, classes in CONE_COUNT_CASES:
        degree = p * classes - 1
        for cone in enumerate_cones(degree, p):
            rep = cone_representative(cone, degree, p)
            total += 1
            if not (in_H(rep, p) and in_H_via_derivatives(rep, p)):
                result.expect(False, f"representative of {cone} is not in H_{{{p},{degree}}}")
            elif classify(rep, degree, p) != cone:
                cell = classify(rep, degree, p)
                result.expect(False, f"representative of {cone} classifies as {cell}")
    result.expect(True, f"{total} representatives round-trip")

    max_degree = 4 if skip_slow else 5
    for p in (2, 3):
        cones = {n: enumerate_cones(n, p) for n in range(2, max_degree + 1)}
        members = non_maximal = 0
        for n in range(2, max_degree + 1):
            for coefficients in itertools.product(range(4), repeat=n + 1):
                f = TropicalPolynomial.from_coefficients(list(coefficients))
                member = in_H(f, p)
                if member != in_H_via_derivatives(f, p):
                    result.expect(False, f"membership tests disagree on {f} for p={p}")
                if not member:
                    continue
                members += 1
                verdict = classify(f, n, p)
                if verdict == NON_MAXIMAL:
                    non_maximal += 1
                    if not any(in_closure(f, cone, p) for cone in cones[n]):
                        result.expect(False, f"{f} lies in H_{{{p},{n}}} but in no cone closure")
        result.expect(
            True,
            f"p={p}: {members} members of H up to degree {max_degree}, "
            f"{non_maximal} on lower-dimensional cells, all classified",
        )


def check_newton_faces(result, skip_slow=False, parallelization="none", max_workers=None):
    """Face counts of N_{p,p} and of the cubes N_{0,n}."""
    for p in (3,) if skip_slow else (3, 5):
        census = polytope_faces(
            newton_polytope(p, p), parallelization=parallelization, max_workers=max_workers
        )
        expected = expected_face_counts(p)
        result.expect(
            census.as_tuple() == expected,
            f"N_{{{p},{p}}}: {census.as_tuple()} (expected {expected})",
        )
        result.expect(
            max(census.census, default=0) <= 4,
            f"N_{{{p},{p}}} 2-faces: {census.census}",
        )
    for n in (3, 4) if skip_slow else (3, 4, 5):
        census = polytope_faces(
            newton_polytope(n, 0), parallelization=parallelization, max_workers=max_workers
        )
        result.expect(
            census.as_tuple() == cube_face_counts(n),
            f"N_{{0,{n}}}: {census.as_tuple()} (cube {cube_face_counts(n)})",
        )
    polytope = newton_polytope(3, 3)
    regime = ValuationRegime.char_p(3)
    for vertex in polytope_faces(polytope, max_face_dim=0).vertices:
        weights = vertex_normal(polytope, vertex)
        f = TropicalPolynomial.from_coefficients(list(weights))
        singular = [r for r in singular_points_univariate(f, regime) if r.is_singular]
        result.expect(not singular, f"normal direction {f} of vertex {vertex} is not singular")


def check_newton_compare(result, skip_slow=False, parallelization="none", max_workers=None):
    """The vertex sets of N_{0,5} and N_{3,5}."""
    comparison = compare_newton(5, 0, 3)
    only_zero = set(comparison.only_p)
    result.expect(
        only_zero == REFERENCE_ONLY_CHAR_ZERO,
        f"N_{{0,5}} - N_{{3,5}} = {sorted(only_zero)}",
    )
    first, second = REFERENCE_ONLY_CHAR_THREE
    result.expect(first in comparison.only_q, f"{first} is a vertex of N_{{3,5}} only")
    result.note(f"N_{{3,5}} - N_{{0,5}} = {comparison.only_q}")
    if len(second) != len(first):
        logger.warning(
            "The reference vertex %s has %d coordinates, the polytope lives in %d.",
            second,
            len(second),
            len(first),
        )
        result.note(f"reference vertex {second} has {len(second)} coordinates; not compared")
    for p in (5, 7):
        small = compare_newton(3, 0, p)
        result.expect(
            not small.only_p and not small.only_q, f"N_{{0,3}} and N_{{{p},3}} agree"
        )


def check_char2_resultant(result, skip_slow=False, parallelization="none", max_workers=None):
    """Char-2 discriminant versus the resultant of the halves."""
    for n in (2, 3):
        polytope = _resultant_polytope(n - 1)
        vertices = len(polytope_faces(polytope, max_face_dim=0).vertices)
        result.expect(
            vertices == comb(2 * n - 2, n - 1),
            f"Res({n - 1},{n - 1}) has {vertices} vertices (expected {comb(2 * n - 2, n - 1)})",
        )
    rng = random.Random(2)
    for n in (2, 3):
        agree = 0
        for _ in range(200):
            f = TropicalPolynomial.from_coefficients([rng.randint(0, 3) for _ in range(2 * n)])
            even, odd = halving_split(f)
            shared = 0 in common_roots(even, odd)
            if in_H(f, 2) == shared:
                agree += 1
            else:
                result.expect(False, f"in_H({f}, 2) differs from the halving test")
        result.expect(agree == 200, f"degree {2 * n - 1}: {agree}/200 halving verdicts agree")


def _resultant_polytope(m):
    return LatticePolytope(resultant_generic_pair(m, m))


INCIDENCE_CASES = {
    "I-I shared residue": (3, 3),
    "I-I distinct residues": (5, 4),
    "II-II shared pair": (3, 3),
    "II-II shared triple": (3, 3),
    "III-III": (3, 3),
    "two roots I-I": (3, 4),
    "two roots I-II": (3, 4),
    "two roots II-II": (3, 4),
    "two roots II-III": (3, 4),
}
"""Maps each codimension-one configuration to ``(p, adjacent maximal cells)``."""

_TWO_ROOT_TYPES = {
    "two roots I-I": ("I", "I"),
    "two roots I-II": ("I", "II"),
    "two roots II-II": ("II", "II"),
    "two roots II-III": ("II", "III"),
}


def _common_root_levels(case, n):
    p = INCIDENCE_CASES[case][0]
    monomials = range(n + 1)
    if case == "I-I shared residue":
        for level0 in itertools.combinations(monomials, 4):
            if len({m % p for m in level0}) == 3:
                yield level0, ()
    elif case == "I-I distinct residues":
        for level0 in itertools.combinations(monomials, 4):
            if len({m % p for m in level0}) == 4:
                yield level0, ()
    elif case == "II-II shared pair":
        for level0 in itertools.combinations(monomials, 2):
            if level0[0] % p != level0[1] % p:
                continue
            rest = [m for m in monomials if m % p != level0[0] % p]
            for level1 in itertools.combinations(rest, 3):
                if len({m % p for m in level1}) == 2:
                    yield level0, level1
    elif case == "II-II shared triple":
        for level0 in itertools.combinations(monomials, 3):
            if len({m % p for m in level0}) != 1:
                continue
            rest = [m for m in monomials if m % p != level0[0] % p]
            for level1 in itertools.combinations(rest, 2):
                if level1[0] % p != level1[1] % p:
                    yield level0, level1
    elif case == "III-III":
        for level0 in itertools.combinations(monomials, 2):
            if level0[0] % p != level0[1] % p:
                continue
            rest = [m for m in monomials if m % p != level0[0] % p]
            for level1 in itertools.combinations(rest, 3):
                if len({m % p for m in level1}) == 1:
                    yield level0, level1


def _two_root_cells(case, n, p):
    types = _TWO_ROOT_TYPES[case]
    cones = enumerate_cones(n, p)
    for first in cones:
        for second in cones:
            if max(first.monomials) >= min(second.monomials):
                continue
            if tuple(sorted([first.kind.value, second.kind.value])) == types:
                yield two_root_cell(n, p, first, second)


def incidence_configurations(case, max_degree=10, limit=20):
    """Yield polynomials on codimension-one cells of the given incidence case.

    Only configurations whose singular roots are exactly the intended ones
    (0, or -1 and 0 for two roots) are produced. Two-root cases pair cones of
    the named types in either order; a type III block needs degree 8 or more.
    """
    p = INCIDENCE_CASES[case][0]
    regime = ValuationRegime.char_p(p)
    two_roots = case in _TWO_ROOT_TYPES
    expected_roots = [-1, 0] if two_roots else [0]
    found = 0
    for n in range(4, max_degree + 1):
        if two_roots:
            candidates = _two_root_cells(case, n, p)
        else:
            candidates = (
                common_root_cell(n, level0, level1)
                for level0, level1 in _common_root_levels(case, n)
            )
        for f in candidates:
            roots = [r.point[0] for r in singular_points_univariate(f, regime) if r.is_singular]
            if roots != expected_roots:
                continue
            yield f
            found += 1
            if found == limit:
                return


def check_incidence(result, skip_slow=False, parallelization="none", max_workers=None):
    """Number of maximal cells adjacent to codimension-one cells."""
    limit = 4 if skip_slow else 20
    for case, (p, expected) in INCIDENCE_CASES.items():
        probed = 0
        for f in incidence_configurations(case, limit=limit):
            probed += 1
            try:
                count = adjacency_probe(f, p).count
            except ProbeError as error:
                result.expect(False, f"{case}: probing {f} failed: {error}")
                continue
            if count != expected:
                result.expect(False, f"{case}: {f} has {count} adjacent cells, expected {expected}")
        result.expect(probed >= limit, f"{case} (p={p}): {probed} configurations probed")


def check_universal(result, skip_slow=False, parallelization="none", max_workers=None):
    """Universally singular cells: scan, witnesses and deep cells."""
    max_degree = 7 if skip_slow else 10
    four_fold = 0
    for n in range(2, max_degree + 1):
        entries = scan_universal(n, parallelization=parallelization, max_workers=max_workers)
        for entry in entries:
            if entry.rank < 3:
                result.expect(False, f"{entry.coefficients} is universal with rank {entry.rank}")
            elif entry.rank == 3 and entry.minimum_ties == 3 and not entry.witness_ok:
                result.expect(False, f"{entry.coefficients} has no matching witness")
            elif entry.rank == 3 and entry.minimum_ties > 3:
                four_fold += 1
        witnesses = 0
        for witness in enumerate_witnesses(n):
            f = witness.representative(n)
            witnesses += 1
            if not (codim3_cell_test(witness, f) and active_equality_rank(f, n) == 3):
                result.expect(False, f"{witness!r} does not give a codimension-3 cell")
        result.expect(
            True,
            f"degree {n}: {len(entries)} universal vectors, {witnesses} witnesses checked",
        )
    result.note(f"{four_fold} codimension-3 universal vectors with more than three minimal ties")
    for k in (1, 2):
        cell = construct_deep_cell(k)
        universal = is_universally_singular(cell.polynomial, cell.n)
        result.expect(
            bool(universal) and cell.rank == k + 2,
            f"deep cell k={k}: degree {cell.n}, rank {cell.rank}, universal {bool(universal)}",
        )


def check_padic_interpolation(result, skip_slow=False, parallelization="none", max_workers=None):
    """p-adic versus characteristic p verdicts near the origin and far from it."""
    rng = random.Random(5)
    for p in (2, 3):
        agree = 0
        for _ in range(100):
            degree = rng.randint(2, 6)
            coefficients = [Fraction(rng.randint(-2, 2), 2000) for _ in range(degree + 1)]
            record = padic_interpolation_check(
                TropicalPolynomial.from_coefficients(coefficients), p
            )
            agree += record.small_ball_agrees
        result.expect(agree == 100, f"p={p}: {agree}/100 small polynomials agree")

    p, gap = 3, 12
    cones = [(c, n) for n in range(5, 9) for c in enumerate_cones(n, p)]
    count = 10 if skip_slow else 50
    for kind in (ConeType.type_i, ConeType.type_ii):
        chosen = rng.sample([(c, n) for c, n in cones if c.kind == kind], count)
        kept = 0
        for cone, n in chosen:
            f = separated_representative(cone, n, p, gap)
            record = padic_interpolation_check(f, p)
            if not record.char_p_at_zero.is_singular:
                result.expect(False, f"{cone} representative is not singular in char {p}")
            kept += record.padic_at_zero.is_singular
        expected = count if kind == ConeType.type_i else 0
        result.expect(
            kept == expected,
            f"type {kind.value}: {kept}/{count} stay singular 3-adically (expected {expected})",
        )


CHECKS = {
    "worked-examples": check_worked_examples,
    "cone-counts": check_cone_counts,
    "cross-validation": check_cross_validation,
    "newton-faces": check_newton_faces,
    "newton-compare": check_newton_compare,
    "char2-resultant": check_char2_resultant,
    "incidence": check_incidence,
    "universal": check_universal,
    "padic-interpolation": check_padic_interpolation,
}


def run_checks(
    names=None,
    skip_slow=False,
    parallelization="none",
    max_workers=None,
    printer=print,
    raise_on_failure=True,
):
    """Run the named checks (all by default) and print one verdict line each.

    Parameters
    ----------
    names : sequence of str
        Check names; see :data:`CHECKS`. (Default value = None)
    skip_slow : bool
        Use smaller instances for the expensive checks. (Default value = False)
    parallelization : str
        Executor mode passed to the checks. (Default value = "none")
    max_workers : int
        Worker count passed to the checks. (Default value = None)
    printer : callable
        Called with every output line; None silences output. (Default value = print)
    raise_on_failure : bool
        Raise if any check fails. (Default value = True)

    Returns
    -------
    list of :class:`CheckResult`

    Raises
    ------
    KeyError
        If a check name is unknown.
    :class:`~.VerificationMismatch`
        If any check fails and ``raise_on_failure`` is set.

    """
    names = list(CHECKS) if not names else list(names)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise KeyError(f"Unknown checks {unknown}, expected names from {sorted(CHECKS)}.")
    results = []
    for name in names:
        result = CheckResult(name)
        logger.info("Running check '%s'.", name)
        CHECKS[name](
            result,
            skip_slow=skip_slow,
            parallelization=parallelization,
            max_workers=max_workers,
        )
        results.append(result)
        if printer is not None:
            printer(f"{'PASS' if result.passed else 'FAIL'} {name}")
            for line in result.failures:
                printer(f"  mismatch: {line}")
            for line in result.details:
                printer(f"  {line}")
    failed = [result.name for result in results if not result.passed]
    if failed and raise_on_failure:
        raise VerificationMismatch(f"Checks failed: {', '.join(failed)}.")
    return results
