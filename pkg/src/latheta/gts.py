"""Generalized theta series: counting rank-r vector subsets by Gram determinant.

Term m of the rank-r series uses the ball of squared radius r^2 * mu_m,
where mu_m is the m-th distinct squared norm of the lattice; its exponent
is the m-th smallest distinct Gram determinant realized by unordered
rank-r subsets inside that ball, and its count tallies exactly those
subsets.  Subsets are sets of distinct nonzero vectors ({v, w} and
{v, -w} are different sets); a subset contributes iff its Gram determinant
is nonzero, which for a Gram matrix is equivalent to rank r.

All determinants are exact rationals; the pair case (r = 2) runs on a
block-wise integer numpy path since six-dimensional instances need a few
million pairs.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import CapacityError, DomainError
from .exact import format_rational, int_det_bareiss
from .enumerate import lambda_sequence, vectors_within

__all__ = [
    "GtsTerm",
    "GtsSeries",
    "count_subsets_with_det",
    "generalized_theta",
    "DEFAULT_BALL_VECTOR_CAP",
    "DEFAULT_SUBSET_CAP",
]

DEFAULT_BALL_VECTOR_CAP = 20_000
DEFAULT_SUBSET_CAP = 1_000_000_000


@dataclass(frozen=True)
class GtsTerm:
    m: int
    mu: Fraction  # exponent: a Gram determinant value
    count: int
    ball_sq: Fraction
    guaranteed: bool  # only term 1 is certified by the short-vector bound

    def to_json(self):
        return {
            "m": self.m,
            "mu": format_rational(self.mu),
            "count": self.count,
            "ball_sq": format_rational(self.ball_sq),
            "guaranteed": self.guaranteed,
        }


@dataclass(frozen=True)
class GtsSeries:
    r: int
    terms: tuple

    def to_json(self):
        return {"r": self.r, "terms": [t.to_json() for t in self.terms]}


def _scaled_inner_matrix(lattice, vecs):
    """Integer matrix P with P[i][j] = den * <v_i, v_j>, plus the denominator."""
    gz, den = lattice.gram_scaled
    coords = np.array([v.coeffs for v in vecs], dtype=np.int64)
    gz_np = np.array(gz, dtype=np.int64)
    return coords @ gz_np @ coords.T, den


def _det_histogram_pairs(lattice, vecs, subset_cap):
    """Histogram {scaled det: count} over unordered pairs, numpy block-wise."""
    n_vecs = len(vecs)
    if n_vecs * (n_vecs - 1) // 2 > subset_cap:
        raise CapacityError(
            f"pair count exceeds the subset cap of {subset_cap}", cap=subset_cap
        )
    gz, den = lattice.gram_scaled
    gz_np = np.array(gz, dtype=np.int64)
    coords = np.array([v.coeffs for v in vecs], dtype=np.int64)
    vg = coords @ gz_np
    norms = np.einsum("ij,ij->i", vg, coords)
    hist = {}
    block = 1024
    for start in range(0, n_vecs, block):
        stop = min(start + block, n_vecs)
        inner = vg[start:stop] @ coords.T  # (b, n_vecs)
        dets = norms[start:stop, None] * norms[None, :] - inner * inner
        # strict upper triangle only
        rows, cols = np.indices(dets.shape)
        mask = (start + rows) < cols
        vals, counts = np.unique(dets[mask], return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            if v > 0:
                hist[v] = hist.get(v, 0) + c
    return {Fraction(v, den * den): c for v, c in hist.items()}


def _det_histogram_general(lattice, vecs, r, subset_cap):
    """Histogram over unordered r-subsets via DFS with rank pruning."""
    p_mat, den = _scaled_inner_matrix(lattice, vecs)
    p_list = p_mat.tolist()
    n_vecs = len(vecs)
    hist = {}
    visited = 0
    scale = den ** r

    def dfs(chosen, start):
        nonlocal visited
        if len(chosen) == r:
            sub = [[p_list[i][j] for j in chosen] for i in chosen]
            d = int_det_bareiss(sub)
            if d > 0:
                key = Fraction(d, scale)
                hist[key] = hist.get(key, 0) + 1
            return
        for nxt in range(start, n_vecs - (r - len(chosen)) + 1):
            visited += 1
            if visited > subset_cap:
                raise CapacityError(
                    f"visited subsets exceed the cap of {subset_cap}",
                    cap=subset_cap,
                )
            trial = chosen + [nxt]
            if len(trial) >= 2:
                sub = [[p_list[i][j] for j in trial] for i in trial]
                if int_det_bareiss(sub) == 0:
                    continue  # rank-deficient prefix cannot reach rank r
            dfs(trial, nxt + 1)

    dfs([], 0)
    return hist


def _det_histogram(lattice, r, ball_sq, vector_cap, subset_cap):
    ball_sq = Fraction(ball_sq)
    if ball_sq <= 0:
        raise DomainError("ball radius must be positive")
    if not 1 <= r <= lattice.dim:
        raise DomainError(f"r must be in [1:{lattice.dim}]")
    vecs = vectors_within(lattice, ball_sq, cap=vector_cap)
    if r == 1:
        hist = {}
        for v in vecs:
            hist[v.norm_sq] = hist.get(v.norm_sq, 0) + 1
        return hist
    if r == 2:
        return _det_histogram_pairs(lattice, vecs, subset_cap)
    return _det_histogram_general(lattice, vecs, r, subset_cap)


def count_subsets_with_det(
    lattice, r, ball_sq, target, vector_cap=DEFAULT_BALL_VECTOR_CAP,
    subset_cap=DEFAULT_SUBSET_CAP,
):
    """Number of unordered rank-r subsets in the ball with the given Gram det."""
    hist = _det_histogram(lattice, r, ball_sq, vector_cap, subset_cap)
    return hist.get(Fraction(target), 0)


def generalized_theta(
    lattice, r, m_max, vector_cap=DEFAULT_BALL_VECTOR_CAP,
    subset_cap=DEFAULT_SUBSET_CAP,
):
    if not 1 <= r <= lattice.dim:
        raise DomainError(f"r must be in [1:{lattice.dim}]")
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    mus = lambda_sequence(lattice, m_max)
    terms = []
    for m in range(1, m_max + 1):
        ball_sq = r * r * mus[m - 1]
        hist = _det_histogram(lattice, r, ball_sq, vector_cap, subset_cap)
        dets = sorted(hist)
        if len(dets) < m:
            raise DomainError(
                f"only {len(dets)} distinct determinants realized within "
                f"ball {ball_sq}; term {m} undefined"
            )
        exponent = dets[m - 1]
        terms.append(
            GtsTerm(
                m=m,
                mu=exponent,
                count=hist[exponent],
                ball_sq=ball_sq,
                guaranteed=(m == 1),
            )
        )
    return GtsSeries(r=r, terms=tuple(terms))
