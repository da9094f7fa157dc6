"""Numerical theta functions and theta-series ratios on the imaginary axis.

Theta values are truncated sums over the exact norm spectrum with a
rigorous tail bound: the vector count N(x) below squared norm x is at most
(2*sqrt(x)/lambda_1 + 1)^n by a packing argument, so the discarded mass is
summable in closed steps.  Spectra are cached per Gram matrix, which makes
scans over many tau values cheap.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .enumerate import lambda_sequence, theta_spectrum

__all__ = [
    "theta_value",
    "theta_zn",
    "ratio",
    "ratio_scan",
    "symmetry_check",
    "extremum_scan",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-9

_spectrum_cache = {}  # gram -> (bound, spectrum)


def _cached_spectrum(lattice, bound, cap=None):
    key = lattice.gram
    cached = _spectrum_cache.get(key)
    if cached is not None and cached[0] >= bound:
        return cached[1]
    spec = theta_spectrum(lattice, bound, cap=cap)
    _spectrum_cache[key] = (Fraction(bound), spec)
    return spec


def _tail_bound(n, lam1, tau, bound):
    """Upper bound on sum of exp(-pi tau mu) over norms mu > bound."""
    total = 0.0
    x = float(bound)
    sqrt_l = math.sqrt(float(lam1))
    for _ in range(10000):
        count = (2.0 * math.sqrt(x + 1.0) / sqrt_l + 1.0) ** n
        term = count * math.exp(-math.pi * tau * x)
        total += term
        if term < 1e-300 or term < total * 1e-18:
            break
        x += 1.0
    return total


def theta_value(lattice, tau, tol=DEFAULT_TOL, cap=None):
    """Theta(i*tau) = sum over lattice vectors of exp(-pi tau |v|^2)."""
    tau = float(tau)
    if tau <= 0:
        raise DomainError("tau must be positive")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    n = lattice.dim
    lam1 = lambda_sequence(lattice, 1, cap=cap)[0]
    # smallest integer truncation depth whose certified tail clears tol
    bound = Fraction(max(2, math.ceil(float(lam1))))
    while _tail_bound(n, lam1, tau, bound) >= tol:
        bound += 1
    spec = _cached_spectrum(lattice, bound, cap=cap)
    value = 1.0
    for mu, count in spec.terms:
        if mu > bound:
            break
        value += count * math.exp(-math.pi * tau * float(mu))
    return value


def theta_zn(n, tau):
    """Theta of Z^n at i*tau: the one-dimensional sum to the n-th power."""
    tau = float(tau)
    if tau <= 0:
        raise DomainError("tau must be positive")
    if n < 1:
        raise DomainError("dimension must be >= 1")
    one_d = 1.0
    k = 1
    while True:
        term = 2.0 * math.exp(-math.pi * tau * k * k)
        one_d += term
        if term < 1e-300 or term < one_d * 1e-18:
            break
        k += 1
    return one_d ** n


def ratio(lattice, tau, tol=DEFAULT_TOL, cap=None):
    """Delta(tau) = Theta_L(i tau) / Theta_{Z^n}(i tau); needs volume 1."""
    if lattice.volume_sq() != 1:
        raise DomainError(
            "theta ratio requires a volume-1 lattice "
            f"(volume_sq = {lattice.volume_sq()})"
        )
    return theta_value(lattice, tau, tol=tol, cap=cap) / theta_zn(lattice.dim, tau)


def _log_grid(tau_min, tau_max, points):
    if tau_min <= 0 or tau_max <= tau_min:
        raise DomainError("need 0 < tau_min < tau_max")
    if points < 2:
        raise DomainError("need at least two grid points")
    lo, hi = math.log(tau_min), math.log(tau_max)
    grid = [math.exp(lo + (hi - lo) * i / (points - 1)) for i in range(points)]
    # pin 1.0 exactly when it lies inside the window
    if tau_min < 1.0 < tau_max and not any(abs(t - 1.0) < 1e-12 for t in grid):
        grid.append(1.0)
        grid.sort()
    return grid


def ratio_scan(lattice, tau_min=0.25, tau_max=4.0, points=200,
               tol=DEFAULT_TOL, cap=None):
    """[(tau, delta)] on a log-spaced grid; the spectrum is computed once."""
    grid = _log_grid(float(tau_min), float(tau_max), int(points))
    # warm the cache at the smallest tau (it needs the deepest spectrum)
    ratio(lattice, grid[0], tol=tol, cap=cap)
    return [(t, ratio(lattice, t, tol=tol, cap=cap)) for t in grid]


def symmetry_check(lattice, tau0=1.0, taus=None, tol=DEFAULT_TOL, cap=None):
    """Largest |Delta(tau0*t) - Delta(tau0/t)| over the probe values."""
    tau0 = float(tau0)
    if tau0 <= 0:
        raise DomainError("tau0 must be positive")
    if taus is None:
        taus = [1.0 + 0.25 * k for k in range(1, 9)]
    worst = 0.0
    pairs = []
    for t in taus:
        t = float(t)
        if t <= 0:
            raise DomainError("probe tau values must be positive")
        a = ratio(lattice, tau0 * t, tol=tol, cap=cap)
        b = ratio(lattice, tau0 / t, tol=tol, cap=cap)
        dev = abs(a - b)
        worst = max(worst, dev)
        pairs.append((t, a, b, dev))
    return {"tau0": tau0, "max_deviation": worst, "pairs": pairs,
            "symmetric": worst <= 10 * tol}


def extremum_scan(lattice, tau_min=0.25, tau_max=4.0, points=200,
                  tol=DEFAULT_TOL, cap=None):
    """Classify tau = 1 against the grid: 'max', 'min' or 'neither'."""
    scan = ratio_scan(lattice, tau_min, tau_max, points, tol=tol, cap=cap)
    at_one = next((d for t, d in scan if abs(t - 1.0) < 1e-12), None)
    if at_one is None:
        raise DomainError("tau = 1 must lie inside the scan window")
    others = [d for t, d in scan if abs(t - 1.0) >= 1e-12]
    slack = 10 * tol
    if all(d <= at_one + slack for d in others):
        kind = "max"
    elif all(d >= at_one - slack for d in others):
        kind = "min"
    else:
        kind = "neither"
    return {"kind": kind, "delta_at_one": at_one, "scan": scan}
