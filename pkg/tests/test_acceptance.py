"""Acceptance suite: one test (one pass/fail line under pytest -v) per
criterion, each recomputing its quantities from scratch at the stated
tolerance and runtime budget.

Criterion 2 asserts the published fourth coefficient (380) of the rank-2
series of the hexagonal lattice.  Under the ball definition used throughout
this package the exact count is 444; 380 is reproducible only by clipping
the enumeration to basis coefficients |u_i| <= 5 (shown constructively in
test_gts.test_published_counts_are_box_truncations).  The assertion is kept
as stated, so that line documents the discrepancy rather than hiding it.
"""

import time
from fractions import Fraction

import pytest

from conftest import box_oracle_vectors, random_lattice
from latheta.analytic import extremum_scan, ratio
from latheta.codes import construction_a
from latheta.dsp import check_scaling_law, is_stable, norm_hierarchy
from latheta.enumerate import theta_spectrum, vectors_within
from latheta.exact import integer_rank, saturate_rows
from latheta.gts import generalized_theta
from latheta.registry import get_code, get_lattice


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            assert time.monotonic() - self.start < self.seconds


def test_criterion_01_theta1_a2():
    with Budget(1):
        spec = theta_spectrum(get_lattice("a2"), 9)
        assert spec.counts() == {1: 6, 3: 6, 4: 6, 7: 12, 9: 6}


def test_criterion_02_theta2_a2():
    with Budget(120):
        s = generalized_theta(get_lattice("a2"), 2, 4)
        got = [(t.mu, t.count) for t in s.terms]
        assert got == [
            (Fraction(3, 4), 36),
            (Fraction(3), 156),
            (Fraction(27, 4), 168),
            (Fraction(12), 380),  # ball count is 444; see module docstring
        ]


def test_criterion_03_nu_d4():
    with Budget(30):
        assert norm_hierarchy(get_lattice("d4")).values == (2, 3, 4, 4)
        assert norm_hierarchy(get_lattice("d4bar")).values == (
            1, Fraction(3, 4), Fraction(1, 2), Fraction(1, 4))


def test_criterion_04_nu_construction_a():
    with Budget(600):
        assert norm_hierarchy(get_lattice("a2_c1")).values == (1,) * 6
        mixed = (1, Fraction(3, 4), Fraction(1, 2), Fraction(3, 4), 1, 1)
        assert norm_hierarchy(get_lattice("a2_c2")).values == mixed
        assert norm_hierarchy(get_lattice("a4_c3")).values == mixed
        h4 = norm_hierarchy(get_lattice("a4_c4"))
        assert tuple(round(float(v), 2) for v in h4.values) == (
            0.75, 0.88, 0.77, 0.88, 0.75, 1.0)
        assert all(h4.exact)


def test_criterion_05_stability():
    with Budget(60):
        assert is_stable(get_lattice("a2_c1")).stable
        for lab in ("a2_c2", "a4_c3", "a4_c4"):
            v = is_stable(get_lattice(lab))
            assert not v.stable
            wit = [list(r) for r in v.witness]
            assert get_lattice(lab).subset_gram_det(wit) == v.values[
                v.failing_r - 1] < 1


def test_criterion_06_weight_data():
    with Budget(1):
        assert get_code("c1").weight_hierarchy().values == (2, 4, 6)
        assert get_code("c2").weight_hierarchy().values == (2, 3, 6)
        both = [get_code("c1").weight_enumerator(),
                get_code("c2").weight_enumerator()]
        assert both[0] == both[1] == [1, 0, 3, 0, 3, 0, 1]


def test_criterion_07_theta1_equality():
    with Budget(30):
        expected = {1: 12, 2: 60, 3: 160, 4: 252}
        for lab in ("a2_c1", "a2_c2"):
            assert theta_spectrum(get_lattice(lab), 4).counts() == expected


def test_criterion_08_a4_c3_series():
    with Budget(120):
        spec = theta_spectrum(get_lattice("a4_c3"), Fraction(9, 4))
        assert spec.counts() == {
            Fraction(1): 12, Fraction(7, 4): 16,
            Fraction(2): 8, Fraction(9, 4): 32}
        t = generalized_theta(get_lattice("a4_c3"), 2, 1).terms[0]
        assert (t.mu, t.count, t.guaranteed) == (Fraction(3, 4), 144, True)


def test_criterion_09_delta_a4_c3():
    with Budget(60):
        assert abs(ratio(get_lattice("a4_c3"), 1.0) - 1.0026) <= 0.001
        ex = extremum_scan(get_lattice("a4_c3"))
        assert ex["kind"] == "max"
        assert all(d > 1 for _, d in ex["scan"])


def test_criterion_10_delta_a4_c4():
    with Budget(60):
        ex = extremum_scan(get_lattice("a4_c4"))
        assert ex["kind"] == "min"
        assert any(d > 1 for _, d in ex["scan"])


def test_criterion_11_property_suites(rng):
    with Budget(300):
        # scaling law on 20 random (lattice, c) pairs
        for _ in range(20):
            lat = random_lattice(rng, rng.randint(2, 4))
            c = Fraction(rng.randint(1, 5), rng.randint(1, 5))
            assert check_scaling_law(lat, c)
        # duality cross-check on all fixed-dimension registry lattices
        for lab in ("a2", "d4", "d4bar", "a2_c1", "a2_c2", "a4_c3", "a4_c4"):
            lat = get_lattice(lab)
            h, hd = norm_hierarchy(lat), norm_hierarchy(lat.dual())
            vol = lat.volume_sq()
            for r in range(1, lat.dim):
                assert h.values[r - 1] == vol * hd.values[lat.dim - r - 1]
        # saturation index-squared law
        for _ in range(20):
            dim = rng.randint(2, 4)
            lat = random_lattice(rng, dim)
            r = rng.randint(1, dim)
            while True:
                rows = [[rng.randint(-4, 4) for _ in range(dim)]
                        for _ in range(r)]
                if integer_rank(rows) == r:
                    break
            q = lat.subset_gram_det(rows) / lat.subset_gram_det(
                saturate_rows(rows))
            assert q.denominator == 1
            from math import isqrt

            assert isqrt(q.numerator) ** 2 == q.numerator
        # enumeration doubling checks
        for lab in ("a2", "d4", "zn:3"):
            lat = get_lattice(lab)
            small = theta_spectrum(lat, 6)
            big = theta_spectrum(lat, 12)
            assert big.terms[: len(small.terms)] == small.terms
        # box-oracle equivalence in dimension <= 3
        for _ in range(10):
            dim = rng.randint(1, 3)
            lat = random_lattice(rng, dim)
            bound = Fraction(rng.randint(1, 5) * min(
                lat.gram[i][i] for i in range(dim)))
            got = sorted(v.coeffs for v in vectors_within(lat, bound))
            assert got == box_oracle_vectors(lat, bound)
