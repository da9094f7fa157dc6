"""Exact rational arithmetic and fraction-free integer linear algebra.

Rationals are plain fractions.Fraction (always reduced, positive
denominator); matrices are lists of row lists.  Determinants go through
fraction-free Bareiss elimination on integer matrices so no intermediate
rounding ever happens.  Saturation of an integer row span is computed as a
double integer kernel, which makes the quotient torsion-free by
construction.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError, RankError

__all__ = [
    "parse_rational",
    "format_rational",
    "int_det_bareiss",
    "rational_det",
    "integer_rank",
    "hnf_rows",
    "integer_kernel",
    "saturate_rows",
    "adjugate_int",
    "rational_inverse",
]


def parse_rational(s):
    """Parse 'p/q' or 'p' (also accepts ints/Fractions/decimal strings)."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rational(x):
    """Render a Fraction as 'p/q', or 'p' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def int_det_bareiss(rows):
    """Determinant of a square integer matrix, fraction-free Bareiss."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant requires a square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _clear_denominators(rows):
    """Scale each row to integers; return (int rows, product of scales)."""
    out = []
    scale = 1
    for r in rows:
        fr = [Fraction(x) for x in r]
        d = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * d) for x in fr])
        scale *= d
    return out, scale


def rational_det(rows):
    """Exact determinant of a square matrix with Fraction entries."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant requires a square matrix")
    int_rows, scale = _clear_denominators(rows)
    return Fraction(int_det_bareiss(int_rows), scale)


def integer_rank(rows):
    """Rank over the rationals of an integer (or rational) matrix."""
    if not rows:
        return 0
    m, _ = _clear_denominators(rows)
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        a = m[rank][col]
        for i in range(rank + 1, len(m)):
            b = m[i][col]
            if b == 0:
                continue
            g = gcd(a, b)
            ma, mb = a // g, b // g
            m[i] = [mb * x - ma * y for x, y in zip(m[rank], m[i])]
        rank += 1
        col += 1
    return rank


def _echelon_int(m, ncols_sweep):
    """In-place integer row echelon over the first ncols_sweep columns.

    Uses unimodular (gcd) row combinations only, so the row lattice is
    preserved.  Returns the list of (row, col) pivot positions.
    """
    pivots = []
    row = 0
    for col in range(ncols_sweep):
        piv = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for i in range(row + 1, len(m)):
            if m[i][col] == 0:
                continue
            a, b = m[row][col], m[i][col]
            g = gcd(a, b)
            s, t = _ext_gcd(a, b)
            top = [s * x + t * y for x, y in zip(m[row], m[i])]
            bot = [(a // g) * y - (b // g) * x for x, y in zip(m[row], m[i])]
            m[row], m[i] = top, bot
        if m[row][col] < 0:
            m[row] = [-x for x in m[row]]
        pivots.append((row, col))
        row += 1
    return pivots


def hnf_rows(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the unique echelon basis of the row lattice: positive pivots,
    entries above each pivot reduced into [0, pivot).  Zero rows dropped.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    pivots = _echelon_int(m, ncols)
    basis = m[: len(pivots)]
    for k, (_, j) in enumerate(pivots):
        p = basis[k][j]
        # ascending pivot order: later reductions touch only later columns
        for i in range(k):
            q = basis[i][j] // p
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[k])]
    return basis


def _ext_gcd(a, b):
    """Return (s, t) with s*a + t*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def integer_kernel(rows):
    """Basis of {x in Z^n : rows @ x^T = 0}, as rows.

    Kernels are saturated by construction.  Accepts rational input (the
    kernel only depends on the rational row span).
    """
    m, _ = _clear_denominators(rows)
    if not m:
        raise DimensionError("kernel of an empty matrix is ambiguous")
    nrows, ncols = len(m), len(m[0])
    # row-reduce [A^T | I]; rows whose A^T part vanishes carry the kernel
    work = [[m[i][j] for i in range(nrows)] + [int(k == j) for k in range(ncols)]
            for j in range(ncols)]
    pivots = _echelon_int(work, nrows)
    kernel = [w[nrows:] for w in work[len(pivots):]]
    return hnf_rows(kernel) if kernel else []


def saturate_rows(rows):
    """Basis of Z^n intersected with the rational row span of `rows`.

    The input must have full row rank.  The result spans the same rational
    subspace and the quotient of Z^n by it is torsion-free.
    """
    rows = [list(r) for r in rows]
    if not rows:
        raise RankError("cannot saturate an empty matrix")
    r = len(rows)
    if integer_rank(rows) != r:
        raise RankError(f"saturation requires full row rank (got rank < {r})")
    ker = integer_kernel(rows)
    if not ker:
        # full-dimensional span: saturation is all of Z^n
        n = len(rows[0])
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    return integer_kernel(ker)


def adjugate_int(m):
    """Adjugate of a small square integer matrix (adj(A) = det(A)·A^{-1})."""
    n = len(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * int_det_bareiss(minor)
    return adj


def rational_inverse(rows):
    """Exact inverse of a square matrix with Fraction entries."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise RankError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [r[n:] for r in m]
