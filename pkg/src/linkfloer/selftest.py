"""Randomized and exhaustive self-checks shared by pytest and `verify`.

Each suite returns a CheckResult; the random suites draw from a seeded
generator so that the verify command is deterministic.
"""

import random
from dataclasses import dataclass

from .graded import (
    CollapsedGroup,
    MultiGradedGroup,
    collapse,
    disjoint_union,
    mirror,
    reverse_component,
    s_top,
    total_rank,
)
from .groupfile import parse, serialize
from .hfunction import (
    AlexanderPolynomial,
    h_from_alexander,
    torsion_coefficient,
)
from .surgery import (
    SurgeryMatrix,
    chain_matrix,
    det_exact,
    h1_order,
    smith_normal_form,
    zero_surgery_matrix,
)

DEFAULT_TRIALS = 1000
DEFAULT_SEED = 20240614


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _ok(name):
    return CheckResult(name, True)


def _fail(name, detail):
    return CheckResult(name, False, detail)


def random_collapsed_group(rng, max_n=4) -> CollapsedGroup:
    n = rng.randint(1, max_n)
    ranks = {}
    for _ in range(rng.randint(1, 12)):
        ranks[(rng.randint(-20, 20), rng.randint(-20, 20))] = rng.randint(1, 9)
    return CollapsedGroup(n, ranks)


def random_multigraded_group(rng, max_n=4) -> MultiGradedGroup:
    n = rng.randint(1, max_n)
    ranks = {}
    for _ in range(rng.randint(1, 12)):
        key = (
            rng.randint(-20, 20),
            tuple(rng.randint(-20, 20) for _ in range(n)),
        )
        ranks[key] = rng.randint(1, 9)
    return MultiGradedGroup(n, ranks)


def random_symmetric_matrix(rng, max_dim=5) -> SurgeryMatrix:
    m = rng.randint(1, max_dim)
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            rows[i][j] = rows[j][i] = rng.randint(-9, 9)
    return SurgeryMatrix(tuple(tuple(row) for row in rows))


def cofactor_det(rows) -> int:
    """Naive cofactor-expansion determinant, the oracle for det_exact."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    result = 0
    for j, value in enumerate(rows[0]):
        if value:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = value * cofactor_det(minor)
            result += term if j % 2 == 0 else -term
    return result


def mirror_suite(rng, trials) -> CheckResult:
    name = "mirror involution"
    for _ in range(trials):
        group = random_collapsed_group(rng)
        if mirror(mirror(group)) != group:
            return _fail(name, "double mirror changed %r" % (group,))
        image = mirror(group)
        if total_rank(image) != total_rank(group):
            return _fail(name, "mirror changed the total rank")
        if s_top(image) != -min(s for (_d, s) in group.ranks):
            return _fail(name, "top grading of the mirror is wrong")
    return _ok(name)


def reverse_suite(rng, trials) -> CheckResult:
    name = "orientation reversal involution"
    for _ in range(trials):
        group = random_multigraded_group(rng)
        component = rng.randint(1, group.n)
        linking = rng.randint(-6, 6)
        image = reverse_component(group, component, linking)
        if reverse_component(image, component, -linking) != group:
            return _fail(name, "reversal with opposite linking number is not inverse")
        if total_rank(image) != total_rank(group):
            return _fail(name, "reversal changed the total rank")
        i = component - 1
        for j in range(group.n):
            if j == i:
                continue
            before = sorted(abs(s[j]) for (_d, s), r in group.ranks.items() for _ in range(r))
            after = sorted(abs(s[j]) for (_d, s), r in image.ranks.items() for _ in range(r))
            if before != after:
                return _fail(name, "reversal disturbed component %d" % (j + 1))
    return _ok(name)


def collapse_suite(rng, trials) -> CheckResult:
    name = "collapse rank preservation"
    for _ in range(trials):
        group = random_multigraded_group(rng)
        collapsed = collapse(group)
        if total_rank(collapsed) != total_rank(group):
            return _fail(name, "collapse changed the total rank")
        before = sorted(d for (d, _s), r in group.ranks.items() for _ in range(r))
        after = sorted(d for (d, _s), r in collapsed.ranks.items() for _ in range(r))
        if before != after:
            return _fail(name, "collapse changed the Maslov gradings")
    return _ok(name)


def union_suite(rng, trials) -> CheckResult:
    name = "disjoint union rank and top grading"
    for _ in range(trials):
        first = random_collapsed_group(rng, max_n=2)
        second = random_collapsed_group(rng, max_n=2)
        union = disjoint_union(first, second)
        if total_rank(union) != 2 * total_rank(first) * total_rank(second):
            return _fail(name, "total rank is not 2*r1*r2")
        if s_top(union) != s_top(first) + s_top(second):
            return _fail(name, "top grading is not additive")
        if union.n != first.n + second.n:
            return _fail(name, "component count is not additive")
    return _ok(name)


def determinant_suite(rng, trials) -> CheckResult:
    name = "exact determinant vs cofactor oracle"
    for _ in range(trials):
        matrix = random_symmetric_matrix(rng)
        if det_exact(matrix) != cofactor_det([list(row) for row in matrix.entries]):
            return _fail(name, "determinant mismatch on %r" % (matrix.entries,))
    return _ok(name)


def snf_suite(rng, trials) -> CheckResult:
    name = "smith normal form invariants"
    for _ in range(trials):
        matrix = random_symmetric_matrix(rng)
        factors = smith_normal_form(matrix)
        product = 1
        for factor in factors:
            if factor < 0:
                return _fail(name, "negative invariant factor")
            product *= factor
        if product != abs(det_exact(matrix)):
            return _fail(name, "factor product differs from |det|")
        for a, b in zip(factors, factors[1:]):
            if a == 0 and b != 0:
                return _fail(name, "zero factor before a nonzero one")
            if a != 0 and b % a != 0:
                return _fail(name, "factors do not divide in sequence")
    return _ok(name)


def roundtrip_suite(rng, trials) -> CheckResult:
    name = "group file round-trip"
    for trial in range(trials):
        if trial % 2:
            group = random_collapsed_group(rng)
        else:
            group = random_multigraded_group(rng)
        if parse(serialize(group)) != group:
            return _fail(name, "round-trip changed %r" % (group,))
    return _ok(name)


def chain_determinant_suite() -> CheckResult:
    name = "chain matrix determinant identity"
    for a in range(-20, 21):
        for b in range(-20, 21):
            if det_exact(chain_matrix(a, b)) != 1 - 4 * a * b:
                return _fail(name, "det != 1 - 4ab at (%d, %d)" % (a, b))
    return _ok(name)


def zero_surgery_suite() -> CheckResult:
    name = "zero surgery homology order"
    for linking in range(-20, 21):
        order = h1_order(zero_surgery_matrix(linking))
        expected = linking * linking if linking else None
        if order != expected:
            return _fail(name, "wrong order at linking number %d" % linking)
    return _ok(name)


# Symmetric normalized Alexander polynomials of the first few (2, n) torus
# knots and the unknot; the h-function suite runs over these.
_TORUS_POLYS = {
    "unknot": {0: 1},
    "T(2,3)": {-1: 1, 0: -1, 1: 1},
    "T(2,5)": {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1},
    "T(2,7)": {-3: 1, -2: -1, -1: 1, 0: -1, 1: 1, 2: -1, 3: 1},
}


def hfunction_suite() -> CheckResult:
    name = "h-function invariants"
    for label, coefficients in _TORUS_POLYS.items():
        polynomial = AlexanderPolynomial(coefficients)
        h = h_from_alexander(polynomial)
        genus = polynomial.degree
        for k in range(-20, 21):
            naive = sum((e - k) * c for e, c in coefficients.items() if e > k)
            if torsion_coefficient(polynomial, k) != naive:
                return _fail(name, "torsion coefficient differs from the naive sum (%s)" % label)
            if h(-k) != h(k) + k:
                return _fail(name, "h symmetry fails for %s at k=%d" % (label, k))
            if not h(k + 1) <= h(k) <= h(k + 1) + 1:
                return _fail(name, "h monotonicity fails for %s at k=%d" % (label, k))
            if (h(k) == 0) != (k >= genus):
                return _fail(name, "h vanishing differs from the genus for %s" % label)
    return _ok(name)


def run_property_suites(trials=DEFAULT_TRIALS, seed=DEFAULT_SEED) -> list:
    """Run every suite and return the CheckResults in a fixed order."""
    rng = random.Random(seed)
    return [
        mirror_suite(rng, trials),
        reverse_suite(rng, trials),
        collapse_suite(rng, trials),
        union_suite(rng, trials),
        determinant_suite(rng, trials),
        snf_suite(rng, trials),
        roundtrip_suite(rng, trials),
        chain_determinant_suite(),
        zero_surgery_suite(),
        hfunction_suite(),
    ]
