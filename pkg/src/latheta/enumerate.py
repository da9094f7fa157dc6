"""Exhaustive enumeration of short lattice vectors and theta spectra.

Bounding uses a floating-point Cholesky factorization of the Gram matrix
with a small relative slack; every candidate is then admitted or rejected
by an exact integer norm check, so the output is exact.  Results come back
in a canonical order (squared norm, then lexicographic coefficients) and
every enumeration respects a configurable hard cap.
"""

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError
from .lattice import LatticeVector, QuadraticLattice

__all__ = [
    "DEFAULT_MAX_VECTORS",
    "max_vectors_cap",
    "ThetaSpectrum",
    "vectors_within",
    "theta_spectrum",
    "lambda_sequence",
]

DEFAULT_MAX_VECTORS = 5_000_000
_SLACK = 2.0 ** -20  # relative slack on the float radius before exact recheck


def max_vectors_cap():
    env = os.environ.get("LATHETA_MAX_VECTORS")
    return int(env) if env else DEFAULT_MAX_VECTORS


@dataclass(frozen=True)
class ThetaSpectrum:
    """Histogram of nonzero vectors by exact squared norm, up to `bound`."""

    terms: tuple  # ((mu: Fraction, count: int), ...) with mu strictly increasing
    bound: Fraction
    complete: bool = True

    def counts(self):
        return dict(self.terms)

    def to_json(self):
        from .exact import format_rational

        return {
            "bound": format_rational(self.bound),
            "complete": self.complete,
            "terms": [
                {"mu": format_rational(mu), "count": c} for mu, c in self.terms
            ],
        }


def _coeff_enumerate(gram_float, radius_sq):
    """All integer u != 0 with float quadratic form <= radius_sq (with slack).

    Standard Fincke-Pohst: Cholesky G = R^T R, recurse from the last
    coordinate, interval per level from the partial sums.
    """
    n = gram_float.shape[0]
    r_mat = np.linalg.cholesky(gram_float).T  # upper triangular
    q = r_mat / np.diag(r_mat)[:, None]  # unit diagonal ratios
    d = np.diag(r_mat) ** 2
    c_bound = radius_sq * (1.0 + _SLACK) + 1e-12

    out = []
    u = [0] * n

    def recurse(i, remaining, center_contrib):
        # center_contrib[j] = sum_{k>i} q[j][k]*u[k] for j <= i
        if i < 0:
            if any(u):
                out.append(tuple(u))
            return
        center = center_contrib[i]
        half = (remaining / d[i]) ** 0.5 if remaining > 0 else 0.0
        lo = int(np.ceil(-half - center - 1e-9))
        hi = int(np.floor(half - center + 1e-9))
        for ui in range(lo, hi + 1):
            u[i] = ui
            step = d[i] * (ui + center) ** 2
            rem2 = remaining - step
            if rem2 < -1e-9:
                continue
            new_contrib = [
                center_contrib[j] + q[j][i] * ui for j in range(i)
            ]
            recurse(i - 1, max(rem2, 0.0), new_contrib)
        u[i] = 0

    recurse(n - 1, c_bound, [0.0] * n)
    return out


def vectors_within(lattice: QuadraticLattice, bound, cap=None):
    """All nonzero u with u·G·u^T <= bound exactly, both signs, sorted.

    Canonical order: by exact squared norm, then lexicographically on the
    coefficient vector.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise DomainError("enumeration bound must be positive")
    cap = cap if cap is not None else max_vectors_cap()

    gz, den = lattice.gram_scaled
    gram_float = np.array([[float(x) for x in row] for row in lattice.gram])
    candidates = _coeff_enumerate(gram_float, float(bound))
    if len(candidates) > cap:
        raise CapacityError(
            f"enumeration produced {len(candidates)} candidates, "
            f"over the cap of {cap} (raise LATHETA_MAX_VECTORS to override)",
            cap=cap,
        )

    # exact admission: u Gz u^T <= bound * den, all integer arithmetic
    limit_num = bound.numerator * den
    limit_den = bound.denominator
    n = lattice.dim
    result = []
    for u in candidates:
        acc = 0
        for i in range(n):
            ui = u[i]
            if ui:
                row = gz[i]
                acc += ui * sum(row[j] * u[j] for j in range(n) if u[j])
        if acc * limit_den <= limit_num:
            result.append(LatticeVector(u, Fraction(acc, den)))
    result.sort(key=lambda v: (v.norm_sq, v.coeffs))
    return result


def theta_spectrum(lattice, bound, cap=None):
    vecs = vectors_within(lattice, bound, cap=cap)
    terms = []
    for v in vecs:
        if terms and terms[-1][0] == v.norm_sq:
            terms[-1][1] += 1
        else:
            terms.append([v.norm_sq, 1])
    return ThetaSpectrum(
        terms=tuple((mu, c) for mu, c in terms),
        bound=Fraction(bound),
        complete=True,
    )


def lambda_sequence(lattice, m, cap=None):
    """First m distinct squared norms of nonzero vectors, ascending."""
    if m < 1:
        raise DomainError("need at least one term")
    bound = min(lattice.gram[i][i] for i in range(lattice.dim))
    while True:
        spec = theta_spectrum(lattice, bound, cap=cap)
        if len(spec.terms) >= m:
            return [mu for mu, _ in spec.terms[:m]]
        bound *= 2
