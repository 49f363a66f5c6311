"""Exact integer homology of Dehn surgery presentations.

A symmetric linking/framing matrix presents the first homology of the
surgered 3-manifold: |det| is the order of the group (0 meaning infinite)
and the Smith normal form gives its invariant factors.  All arithmetic is
on Python ints, so results stay exact at any size.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class SurgeryMatrix:
    """Square symmetric integer matrix, stored as a tuple of row tuples."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        m = len(rows)
        if m < 1:
            raise ValueError("matrix must have dimension at least 1")
        for row in rows:
            if len(row) != m:
                raise ValueError("matrix must be square")
            for value in row:
                if not isinstance(value, int):
                    raise ValueError("entries must be integers: %r" % (value,))
        for i in range(m):
            for j in range(i + 1, m):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        "linking matrix must be symmetric: entry (%d,%d) is %d but (%d,%d) is %d"
                        % (i, j, rows[i][j], j, i, rows[j][i])
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)


def _bareiss(a) -> int:
    # Fraction-free elimination; every division below is exact.
    n = len(a)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def det_exact(matrix: SurgeryMatrix) -> int:
    """Signed determinant via fraction-free (Bareiss) elimination."""
    return _bareiss([list(row) for row in matrix.entries])


def _smallest_nonzero(a, start):
    pivot = None
    best = None
    for i in range(start, len(a)):
        for j in range(start, len(a)):
            value = abs(a[i][j])
            if value and (best is None or value < best):
                pivot = (i, j)
                best = value
    return pivot


def smith_normal_form(matrix: SurgeryMatrix) -> tuple:
    """Invariant factors d_1 | d_2 | ... | d_m with product |det|.

    Computed by exact integer row/column reduction: repeatedly move a
    smallest-magnitude entry to the pivot, reduce its row and column by
    euclidean steps, and fold non-divisible entries of the remaining block
    into the pivot row until the divisibility chain holds.
    """
    a = [list(row) for row in matrix.entries]
    m = len(a)
    factors = []
    for t in range(m):
        while True:
            pivot = _smallest_nonzero(a, t)
            if pivot is None:
                break
            i0, j0 = pivot
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        for j in range(t, m):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            offender = None
            for i in range(t + 1, m):
                if any(a[i][j] % p for j in range(t + 1, m)):
                    offender = i
                    break
            if offender is None:
                break
            for j in range(m):
                a[t][j] += a[offender][j]
        factors.append(abs(a[t][t]))
    return tuple(factors)


def h1_order(matrix: SurgeryMatrix):
    """Order of the presented first homology group: |det|, or None if infinite."""
    determinant = det_exact(matrix)
    return abs(determinant) if determinant else None


def chain_matrix(a: int, b: int) -> SurgeryMatrix:
    """Linking matrix of the four-component chain produced by two slam-dunks.

    With a = -(p+1) and b = -(q+1) this presents the (1/(p+1), 1/(q+1))
    surgery on the (2,4) torus link; its determinant is 1 - 4ab.
    """
    return SurgeryMatrix((
        (a, 1, 0, 0),
        (1, 0, 2, 0),
        (0, 2, 0, 1),
        (0, 0, 1, b),
    ))


def zero_surgery_matrix(linking_number: int) -> SurgeryMatrix:
    """Linking matrix of (0,0)-surgery on a 2-component link with the given
    linking number; the order of the presented group is its square."""
    return SurgeryMatrix(((0, linking_number), (linking_number, 0)))


def solve_framing_constraint(target: int, search_range: int) -> set:
    """All (p, q) with |p|,|q| <= search_range and |4(p+1)(q+1) - 1| = target.

    Exhaustive enumeration; the interesting targets are the surgery
    determinant values (3 pins down p = q = 0 or p = q = -2).
    """
    if search_range < 2:
        raise ValueError("search range must be at least 2")
    return {
        (p, q)
        for p in range(-search_range, search_range + 1)
        for q in range(-search_range, search_range + 1)
        if abs(4 * (p + 1) * (q + 1) - 1) == target
    }


def matrix_from_text(text: str) -> SurgeryMatrix:
    """Parse the matrix text form: rows split by ';', entries by ','."""
    rows = []
    for row_text in text.strip().split(";"):
        row = []
        for token in row_text.split(","):
            try:
                row.append(int(token))
            except ValueError:
                raise ValueError("bad matrix entry: %r" % token.strip()) from None
        rows.append(tuple(row))
    return SurgeryMatrix(tuple(rows))


def matrix_to_text(matrix: SurgeryMatrix) -> str:
    """Inverse of ``matrix_from_text``."""
    return ";".join(",".join(str(value) for value in row) for row in matrix.entries)
