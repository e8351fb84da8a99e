"""Alternating sign matrices, the near-diagonal faces P_lambda(n), and the
corner-sum map onto order polytopes of skew-staircase posets.

P_lambda(n) is the face of the ASM polytope cut out by forcing zeros below
the first subdiagonal (i - j >= 2) and on the cells of lambda justified to
the upper right corner.  The corner-sum map g(i,j) = 1 - sum_{i'<=i, j'>=j}
m_{i'j'} identifies it with the order polytope of the skew staircase poset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import InputError, InternalCheckError
from .geometry import affine_dimension
from .kostant import flow_ehrhart_value, flow_polytope_volume
from .posets import (
    count_linear_extensions,
    order_polynomial,
    skew_star,
    staircase_cells,
    validate_staircase_partition,
)


def is_asm(m):
    """Alternating-sign test: all partial row/column sums lie in {0,1}."""
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    if any(x not in (-1, 0, 1) for row in m for x in row):
        return False
    for row in m:
        s = 0
        for x in row:
            s += x
            if s not in (0, 1):
                return False
        if s != 1:
            return False
    for j in range(n):
        s = 0
        for i in range(n):
            s += m[i][j]
            if s not in (0, 1):
                return False
        if s != 1:
            return False
    return True


def _rows_from_state(n, colsums, zero_cols, t):
    """All rows extending the given column partial sums, entries summing to t.

    Partial row sums and the updated column sums must stay in [0, t];
    entries in zero_cols are forced to 0.
    """
    rows = []
    row = []

    def place(j, rowsum):
        if j == n:
            if rowsum == t:
                rows.append(tuple(row))
            return
        if j in zero_cols:
            choices = (0,)
        else:
            lo = max(-rowsum, -colsums[j])
            hi = min(t - rowsum, t - colsums[j])
            choices = range(lo, hi + 1)
        for a in choices:
            row.append(a)
            place(j + 1, rowsum + a)
            row.pop()

    place(0, 0)
    return rows


def zero_pattern(n, lam=()):
    """Forced-zero cells of P_lambda(n): the lower band and lambda's cells."""
    lam = validate_staircase_partition(n, lam)
    zeros = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i - j >= 2}
    for i, part in enumerate(lam, start=1):
        for j in range(n - part + 1, n + 1):
            zeros.add((i, j))
    return zeros


def enumerate_asm(n, zeros=frozenset()):
    """All n x n alternating sign matrices (with optional forced zeros)."""
    if n < 1:
        raise InputError("matrix size must be positive")
    out = []
    rows = []

    def walk(i, colsums):
        if i > n:
            if all(c == 1 for c in colsums):
                out.append(tuple(rows))
            return
        zero_cols = {j - 1 for (a, j) in zeros if a == i}
        for row in _rows_from_state(n, colsums, zero_cols, 1):
            rows.append(row)
            walk(i + 1, tuple(c + x for c, x in zip(colsums, row)))
            rows.pop()

    walk(1, (0,) * n)
    out.sort()
    return out


def p_lambda_vertices(n, lam=()):
    """Vertices of P_lambda(n): ASMs with the band and lambda zeros."""
    verts = enumerate_asm(n, frozenset(zero_pattern(n, lam)))
    for m in verts:
        if not is_asm(m):
            raise InternalCheckError("generator produced a non-alternating matrix")
    return verts


def validate_in_p_lambda(n, lam, m):
    """Membership test for (rational) matrices in P_lambda(n)."""
    if len(m) != n or any(len(row) != n for row in m):
        raise InputError(f"matrix is not {n}x{n}")
    m = tuple(tuple(Fraction(x) for x in row) for row in m)
    zeros = zero_pattern(n, lam)
    for (i, j) in zeros:
        if m[i - 1][j - 1] != 0:
            raise InputError(f"entry ({i},{j}) must be zero for this shape")
    for i in range(n):
        s = Fraction(0)
        for j in range(n):
            s += m[i][j]
            if not 0 <= s <= 1:
                raise InputError(f"row {i + 1} has a partial sum outside [0,1]")
        if s != 1:
            raise InputError(f"row {i + 1} does not sum to 1")
    for j in range(n):
        s = Fraction(0)
        for i in range(n):
            s += m[i][j]
            if not 0 <= s <= 1:
                raise InputError(f"column {j + 1} has a partial sum outside [0,1]")
        if s != 1:
            raise InputError(f"column {j + 1} does not sum to 1")
    return m


def corner_sum_map(n, lam, m):
    """g(i,j) = 1 - sum of entries weakly above and weakly right of (i,j).

    Maps P_lambda(n) into the order polytope of the skew staircase poset;
    the output is checked to be order preserving with values in [0,1].
    """
    m = validate_in_p_lambda(n, lam, m)
    cells = staircase_cells(n, lam)
    g = {}
    for (i, j) in cells:
        corner = sum(m[a][b] for a in range(i) for b in range(j - 1, n))
        g[(i, j)] = 1 - corner
    poset, _ = skew_star(n, lam)
    for (a, b) in poset.covers:
        if g[a] > g[b]:
            raise InternalCheckError(f"corner sums not order preserving at {a} <= {b}")
    if any(not 0 <= v <= 1 for v in g.values()):
        raise InternalCheckError("corner sums leave the unit interval")
    return g


def asm_dilation_count(n, lam, t):
    """Integer matrices in t * P_lambda(n), by row DP on column partial sums."""
    if t < 0:
        raise InputError("dilation factor must be nonnegative")
    zeros = zero_pattern(n, lam)
    zero_cols = {i: {j - 1 for (a, j) in zeros if a == i} for i in range(1, n + 1)}

    @lru_cache(maxsize=None)
    def count(i, colsums):
        if i > n:
            return 1 if all(c == t for c in colsums) else 0
        total = 0
        for row in _rows_from_state(n, colsums, zero_cols[i], t):
            total += count(i + 1, tuple(c + x for c, x in zip(colsums, row)))
        return total

    result = count(1, (0,) * n)
    count.cache_clear()
    return result


def proctor_ehrhart(n, t):
    """prod_{1<=i<j<=n} (2t+i+j-1)/(i+j-1), asserted to be an integer."""
    if t < 0:
        raise InputError("dilation factor must be nonnegative")
    value = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value *= Fraction(2 * t + i + j - 1, i + j - 1)
    if value.denominator != 1:
        raise InternalCheckError("product formula did not give an integer")
    return int(value)


# ---------------------------------------------------------------------------
# independent counting helpers for the family's corollaries


def dyck_path_count(n, max_height=None):
    """Dyck paths of semilength n staying weakly below max_height."""
    if max_height is None:
        max_height = n

    @lru_cache(maxsize=None)
    def walk(steps, h):
        if h < 0 or h > max_height:
            return 0
        if steps == 0:
            return 1 if h == 0 else 0
        return walk(steps - 1, h + 1) + walk(steps - 1, h - 1)

    result = walk(2 * n, 0)
    walk.cache_clear()
    return result


def euler_zigzag(k):
    """Number of alternating permutations a_1 < a_2 > a_3 < ... of [k]."""
    if k == 0:
        return 1
    count = 0
    for perm in itertools.permutations(range(1, k + 1)):
        ok = all(
            (perm[i] < perm[i + 1]) == (i % 2 == 0) for i in range(k - 1)
        )
        count += ok
    return count


def fibonacci(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def catalan(n):
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# the orchestrated report


@dataclass
class FamilyReport:
    n: int
    lam: tuple
    vertex_count: int
    dimension: int
    expected_dimension: int
    volume_by_extensions: int
    volume_by_kostant: int
    volume_by_dkk_count: int
    ehrhart_values: tuple  # asm_dilation_count at t = 0..3
    all_consistent: bool

    def to_json(self):
        return {
            "n": self.n,
            "lambda": list(self.lam),
            "vertex_count": self.vertex_count,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "volume_by_extensions": self.volume_by_extensions,
            "volume_by_kostant": self.volume_by_kostant,
            "volume_by_dkk_count": self.volume_by_dkk_count,
            "ehrhart_values": list(self.ehrhart_values),
            "all_consistent": self.all_consistent,
        }


def family_report(n, lam=(), t_max=3):
    """Cross-checked summary of P_lambda(n) through all three polytope models."""
    from .planar import poset_to_flow_graph
    from .triangulations import dkk_maximal_cliques

    lam = validate_staircase_partition(n, lam)
    verts = p_lambda_vertices(n, lam)
    flat = [tuple(x for row in m for x in row) for m in verts]
    dim = affine_dimension(flat)
    expected_dim = comb(n, 2) - sum(lam)
    poset, emb = skew_star(n, lam)
    pg = poset_to_flow_graph(poset, emb)
    vol_ext = count_linear_extensions(poset)
    vol_kostant = flow_polytope_volume(pg.graph)
    vol_dkk = len(dkk_maximal_cliques(pg.graph, pg.framing))
    ehrhart = tuple(asm_dilation_count(n, lam, t) for t in range(t_max + 1))
    consistent = (
        dim == expected_dim
        and vol_ext == vol_kostant == vol_dkk
        and len(verts) == ehrhart[1]
        and all(
            ehrhart[t] == order_polynomial(poset, t + 1) == flow_ehrhart_value(pg.graph, t)
            for t in range(t_max + 1)
        )
        and (lam != () or all(ehrhart[t] == proctor_ehrhart(n, t) for t in range(t_max + 1)))
    )
    return FamilyReport(
        n=n,
        lam=lam,
        vertex_count=len(verts),
        dimension=dim,
        expected_dimension=expected_dim,
        volume_by_extensions=vol_ext,
        volume_by_kostant=vol_kostant,
        volume_by_dkk_count=vol_dkk,
        ehrhart_values=ehrhart,
        all_consistent=consistent,
    )
