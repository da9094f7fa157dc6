"""Generalized Euclidean norms: minimum Gram determinants of rank-r subsets.

nu_r is the smallest det(Gram) over r linearly independent lattice vectors.
The search is certified: any minimizing sublattice has a Minkowski-reduced
basis whose vectors fit in a ball derived from an upper bound on nu_r, the
Hermite constant and a reduction slack, so enumerating subsets of that ball
cannot miss the optimum.  Halves r > n/2 route through the dual lattice,
nu_r(L) = vol^2(L) * nu_{n-r}(L^*), with the primal witness recovered as an
integer kernel.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .exact import adjugate_int, int_det_bareiss, integer_kernel, saturate_rows
from .enumerate import lambda_sequence, vectors_within

__all__ = [
    "NormHierarchy",
    "StabilityVerdict",
    "min_sublattice_det",
    "norm_hierarchy",
    "is_stable",
    "check_scaling_law",
]

# gamma_r^r, exact, r = 1..8
_HERMITE_POW = {
    1: Fraction(1),
    2: Fraction(4, 3),
    3: Fraction(2),
    4: Fraction(4),
    5: Fraction(8),
    6: Fraction(64, 3),
    7: Fraction(64),
    8: Fraction(256),
}


def _reduction_slack(r):
    """prod_i max(1, (5/4)^(i-4)): Minkowski-reduced vectors versus minima."""
    s = Fraction(1)
    for i in range(5, r + 1):
        s *= Fraction(5, 4) ** (i - 4)
    return s


@dataclass(frozen=True)
class NormHierarchy:
    values: tuple  # nu_1 .. nu_n, exact Fractions
    witnesses: tuple  # coefficient rows achieving each nu_r
    exact: tuple  # certification flags, one per r

    def to_json(self):
        from .exact import format_rational

        return {
            "values": [format_rational(v) for v in self.values],
            "exact": list(self.exact),
            "witnesses": [[list(row) for row in w] for w in self.witnesses],
        }


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    volume_sq: Fraction
    failing_r: int = 0
    witness: tuple = ()
    values: tuple = ()

    def to_json(self):
        from .exact import format_rational

        return {
            "stable": self.stable,
            "volume_sq": format_rational(self.volume_sq),
            "failing_r": self.failing_r or None,
            "witness": [list(row) for row in self.witness] or None,
            "values": [format_rational(v) for v in self.values],
        }


def _greedy_independent(lattice, r, cap):
    """Rows of r short independent vectors, by greedy scan of a growing ball."""
    from .exact import integer_rank

    bound = min(lattice.gram[i][i] for i in range(lattice.dim))
    while True:
        rows = []
        for v in vectors_within(lattice, bound, cap=cap):
            trial = rows + [list(v.coeffs)]
            if integer_rank(trial) == len(trial):
                rows = trial
                if len(rows) == r:
                    return rows
        bound *= 2


def _subset_search(lattice, r, budget_det, lam1, cap):
    """Exact min over rank-r subsets of the Minkowski ball; returns (det, rows).

    budget_det is any upper bound on nu_r; the ball radius derived from it
    provably contains a reduced basis of some minimizer.
    """
    slack = _reduction_slack(r) * _HERMITE_POW[r]
    radius = slack * budget_det / lam1 ** (r - 1)
    vecs = vectors_within(lattice, radius, cap=cap)
    # det is sign-invariant, keep one vector per antipodal pair
    vecs = [v for v in vecs if next(c for c in v.coeffs if c) > 0]
    n_vecs = len(vecs)
    if n_vecs < r:
        raise DomainError("ball too small for a rank-r subset")  # unreachable

    gz, den = lattice.gram_scaled
    coords = np.array([v.coeffs for v in vecs], dtype=object)
    vg = coords @ np.array(gz, dtype=object)  # exact integer products
    norms = [int(x) for x in np.einsum("ij,ij->i", vg, coords)]

    best = Fraction(budget_det)
    best_rows = None
    scale = [den ** j for j in range(r + 1)]

    def prefix_ok(j, d_scaled):
        # sorted-ascending reduced prefixes satisfy d^r <= (slack * best)^j
        d = Fraction(d_scaled, scale[j])
        return d ** r <= (slack * best) ** j

    def dfs(chosen, gram_pre, d_pre):
        nonlocal best, best_rows
        j = len(chosen)
        if j == r - 1:
            adj = adjugate_int(gram_pre) if j else None
            start = chosen[-1] + 1 if chosen else 0
            for k in range(start, n_vecs):
                if j:
                    x = [int(sum(vg[i][t] * coords[k][t] for t in range(lattice.dim)))
                         for i in chosen]
                    quad = sum(x[a] * adj[a][b] * x[b]
                               for a in range(j) for b in range(j))
                    d_scaled = d_pre * norms[k] - quad
                else:
                    d_scaled = norms[k]
                if d_scaled <= 0:
                    continue
                d = Fraction(d_scaled, scale[r])
                if d < best:
                    best = d
                    best_rows = [list(vecs[i].coeffs) for i in chosen]
                    best_rows.append(list(vecs[k].coeffs))
            return
        start = chosen[-1] + 1 if chosen else 0
        for k in range(start, n_vecs):
            row = [int(sum(vg[i][t] * coords[k][t] for t in range(lattice.dim)))
                   for i in chosen]
            g_new = [gr + [row[i]] for i, gr in enumerate(gram_pre)]
            g_new.append(row + [norms[k]])
            d_new = int_det_bareiss(g_new)
            if d_new <= 0:
                continue  # reduced prefixes are independent
            if not prefix_ok(j + 1, d_new):
                continue
            dfs(chosen + [k], g_new, d_new)

    dfs([], [], 1)
    if best_rows is None:
        return Fraction(budget_det), None
    # saturating the winner can only help (and usually normalizes the rows)
    sat = saturate_rows(best_rows)
    d_sat = lattice.subset_gram_det(sat)
    if 0 < d_sat <= best:
        return d_sat, [list(r_) for r_ in sat]
    return best, best_rows


def min_sublattice_det(lattice, r, cap=None):
    """(nu_r, witness rows): minimum Gram determinant of a rank-r subset."""
    n = lattice.dim
    if not 1 <= r <= n:
        raise DomainError(f"r must be in [1:{n}]")
    if r == 1:
        lam1 = lambda_sequence(lattice, 1, cap=cap)[0]
        v = vectors_within(lattice, lam1, cap=cap)[0]
        return lam1, [list(v.coeffs)]
    if r == n:
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        return lattice.volume_sq(), ident
    if r > n - r:
        dual = lattice.dual()
        d_val, d_wit = min_sublattice_det(dual, n - r, cap=cap)
        val = lattice.volume_sq() * d_val
        wit = integer_kernel(d_wit)
        check = lattice.subset_gram_det(wit)
        if len(wit) == r and check == val:
            return val, [list(row) for row in wit]
        # duality reconciliation failed, fall through to the direct search
    lam1 = lambda_sequence(lattice, 1, cap=cap)[0]
    greedy = _greedy_independent(lattice, r, cap)
    sat0 = saturate_rows(greedy)
    budget = lattice.subset_gram_det(sat0)
    val, rows = _subset_search(lattice, r, budget, lam1, cap)
    if rows is None:
        rows = [list(r_) for r_ in sat0]
    return val, rows


def norm_hierarchy(lattice, cap=None):
    """nu_1 .. nu_n with witnesses; every value is exact by construction."""
    values, witnesses, flags = [], [], []
    for r in range(1, lattice.dim + 1):
        v, w = min_sublattice_det(lattice, r, cap=cap)
        values.append(v)
        witnesses.append(tuple(tuple(row) for row in w))
        flags.append(True)
    return NormHierarchy(tuple(values), tuple(witnesses), tuple(flags))


def is_stable(lattice, cap=None):
    """Volume 1 and no sublattice of volume below 1; witness on failure."""
    vol_sq = lattice.volume_sq()
    h = norm_hierarchy(lattice, cap=cap)
    if vol_sq != 1:
        return StabilityVerdict(False, vol_sq, failing_r=lattice.dim,
                                witness=h.witnesses[-1], values=h.values)
    for r, v in enumerate(h.values, start=1):
        if v < 1:
            return StabilityVerdict(False, vol_sq, failing_r=r,
                                    witness=h.witnesses[r - 1], values=h.values)
    return StabilityVerdict(True, vol_sq, values=h.values)


def check_scaling_law(lattice, c, cap=None):
    """nu_r(cL) == c^r nu_r(L) for all r (exact)."""
    c = Fraction(c)
    scaled = lattice.scale(c)
    h = norm_hierarchy(lattice, cap=cap)
    hs = norm_hierarchy(scaled, cap=cap)
    return all(hs.values[r - 1] == c ** r * h.values[r - 1]
               for r in range(1, lattice.dim + 1))
