"""Exact rational linear algebra for lattice polytopes.

Points are tuples of integers or Fractions.  Normalized volumes are taken
relative to the lattice spanned by the polytope's vertex differences; that
lattice's basis comes from a Hermite normal form and is computed once per
polytope.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError, InternalCheckError

SAMPLE_SEED = 0xA5C
SAMPLE_COUNT = 200


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def matrix_rank(rows):
    """Rank over the rationals, by Gaussian elimination with exact fractions."""
    m = _as_fraction_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_linear(matrix, rhs):
    """Solve matrix @ x = rhs exactly; None if inconsistent.

    ``matrix`` is given row-wise and must have full column rank.
    """
    rows = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    if rank < ncols:
        raise InputError("coefficient matrix does not have full column rank")
    for r in range(rank, len(rows)):
        if rows[r][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = rows[r][-1]
    return tuple(x)


def hermite_row_basis(rows):
    """Nonzero rows of the row-style Hermite normal form of an integer matrix."""
    m = [list(map(int, row)) for row in rows if any(row)]
    if not m:
        return []
    ncols = len(m[0])
    basis = []
    r = 0
    for col in range(ncols):
        # clear the column below r by gcd row operations
        while True:
            live = [i for i in range(r, len(m)) if m[i][col] != 0]
            if not live:
                break
            i = min(live, key=lambda i: abs(m[i][col]))
            m[r], m[i] = m[i], m[r]
            if m[r][col] < 0:
                m[r] = [-x for x in m[r]]
            done = True
            for i in range(r + 1, len(m)):
                q = m[i][col] // m[r][col]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                if m[i][col] != 0:
                    done = False
            if done:
                break
        if any(m[i][col] for i in range(r, len(m))):
            # reduce entries above the pivot
            for i in range(r):
                q = m[i][col] // m[r][col]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
            basis.append(tuple(m[r]))
            r += 1
            if r == len(m):
                break
    return basis


def affine_dimension(points):
    points = [tuple(p) for p in points]
    if not points:
        raise InputError("affine dimension of an empty point set is undefined")
    base = points[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return matrix_rank(diffs)


def lattice_basis(points):
    """Hermite basis of the lattice spanned by all vertex differences."""
    points = [tuple(int(x) for x in p) for p in points]
    if not points:
        raise InputError("need at least one point")
    base = points[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return hermite_row_basis(diffs)


def coordinates_in_basis(basis, vector):
    """Express ``vector`` in the given row basis; exact, raises if outside span."""
    if not basis:
        if any(vector):
            raise InputError("vector lies outside the lattice span")
        return ()
    columns = [[row[i] for row in basis] for i in range(len(basis[0]))]
    coords = solve_linear(columns, vector)
    if coords is None:
        raise InputError("vector lies outside the lattice span")
    return coords


def determinant(rows):
    """Exact determinant of a square matrix, fraction Gaussian elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError("determinant needs a square matrix")
    m = _as_fraction_rows(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def simplex_normalized_volume(simplex, basis):
    """|det| of the simplex's edge vectors in lattice-basis coordinates.

    Returns 0 for degenerate simplices (repeated vertices, wrong vertex
    count for the lattice rank, or affinely dependent vertices).
    """
    simplex = [tuple(p) for p in simplex]
    d = len(basis)
    if len(set(simplex)) != len(simplex):
        return 0
    if len(simplex) != d + 1:
        return 0
    base = simplex[0]
    rows = []
    for p in simplex[1:]:
        rows.append(coordinates_in_basis(basis, [x - b for x, b in zip(p, base)]))
    vol = abs(determinant(rows))
    if vol.denominator != 1:
        raise InternalCheckError("simplex volume is not integral in the chosen lattice")
    return int(vol)


# ---------------------------------------------------------------------------
# triangulation verification


@dataclass
class TriangulationReport:
    simplex_count: int
    dimension: int
    volume_total: int
    expected_volume: int
    sample_count: int
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            "simplex_count": self.simplex_count,
            "dimension": self.dimension,
            "volume_total": self.volume_total,
            "expected_volume": self.expected_volume,
            "sample_count": self.sample_count,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def _inverse_integer_matrix(rows):
    """Exact inverse of a square matrix via Gauss-Jordan on [M | I]."""
    n = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InputError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def triangulation_checks(polytope_vertices, simplices, expected_volume):
    """Sanity-check a claimed triangulation of conv(polytope_vertices).

    Verifies vertex membership, unimodularity of each simplex, the total
    volume against an independently computed value, and that each of 200
    seeded interior sample points lies in exactly one simplex (membership
    decided by exact barycentric coordinates).
    """
    vertices = [tuple(p) for p in polytope_vertices]
    vertex_set = set(vertices)
    simplices = [tuple(tuple(p) for p in s) for s in simplices]
    basis = lattice_basis(vertices)
    d = len(basis)
    failures = []

    for idx, simplex in enumerate(simplices):
        extra = [p for p in simplex if p not in vertex_set]
        if extra:
            failures.append(f"simplex {idx}: {len(extra)} vertices are not polytope vertices")
    if failures:
        return TriangulationReport(
            simplex_count=len(simplices),
            dimension=d,
            volume_total=0,
            expected_volume=expected_volume,
            sample_count=0,
            failures=failures,
        )

    coords = {}  # vertex -> lattice coordinates relative to vertices[0]
    base = vertices[0]
    for p in vertex_set:
        coords[p] = coordinates_in_basis(basis, [x - b for x, b in zip(p, base)])

    inverses = []
    total = 0
    for idx, simplex in enumerate(simplices):
        vol = simplex_normalized_volume(simplex, basis)
        total += vol
        if vol != 1:
            failures.append(f"simplex {idx}: normalized volume {vol}, expected 1")
            inverses.append(None)
            continue
        m = [
            [a - b for a, b in zip(coords[p], coords[simplex[0]])]
            for p in simplex[1:]
        ]
        # rows are edge vectors; invert the transpose to map points to
        # barycentric weights lam_1..lam_d
        mt = [[m[j][i] for j in range(d)] for i in range(d)]
        inv = _inverse_integer_matrix(mt)
        # unimodular, so the inverse is integral; keep plain ints for speed
        inverses.append([[int(x) for x in row] for row in inv])
    if total != expected_volume:
        failures.append(f"volume total {total} != expected {expected_volume}")
    int_coords = {p: [int(x) for x in c] for p, c in coords.items()}

    def contains(idx, num, den):
        # barycentric signs of the point num/den, all in integer arithmetic
        simplex = simplices[idx]
        rel = [a - den * b for a, b in zip(num, int_coords[simplex[0]])]
        lam = [sum(r * x for r, x in zip(row, rel)) for row in inverses[idx]]
        return all(x >= 0 for x in lam) and sum(lam) <= den

    rng = random.Random(SAMPLE_SEED)
    samples = 0
    if not failures and simplices:
        for _ in range(SAMPLE_COUNT):
            idx = rng.randrange(len(simplices))
            weights = [rng.randint(1, 10 ** 6) for _ in simplices[idx]]
            den = sum(weights)
            num = [
                sum(w * c for w, c in zip(weights, col))
                for col in zip(*(int_coords[p] for p in simplices[idx]))
            ]
            containing = [j for j in range(len(simplices)) if contains(j, num, den)]
            samples += 1
            if len(containing) != 1:
                failures.append(
                    f"sample from simplex {idx} lies in simplices {containing}"
                )
                break

    return TriangulationReport(
        simplex_count=len(simplices),
        dimension=d,
        volume_total=total,
        expected_volume=expected_volume,
        sample_count=samples,
        failures=failures,
    )
