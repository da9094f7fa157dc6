"""End-to-end reproduction report for the bundled reference examples.

Each check recomputes a published quantity from scratch and compares.
Statuses: PASS, FAIL, and WARN for comparisons that are known to depend on
details of the original numerical setup rather than on the definitions
(those only run with strict=True, except the documented A2 rank-2 term).
"""

from fractions import Fraction

from .analytic import extremum_scan, ratio
from .codes import construction_a
from .dsp import is_stable, norm_hierarchy
from .enumerate import theta_spectrum
from .gts import count_subsets_with_det, generalized_theta
from .registry import get_code, get_lattice

__all__ = ["run_report"]


def _check(name, ok, detail, warn=False):
    status = "PASS" if ok else ("WARN" if warn else "FAIL")
    return {"name": name, "status": status, "detail": detail}


def _series_counts(series):
    return [(t.mu, t.count) for t in series.terms]


def _theta1_check(name, label, expected, bound):
    lat = get_lattice(label)
    spec = theta_spectrum(lat, bound)
    got = {mu: c for mu, c in spec.terms}
    want = {Fraction(m): c for m, c in expected}
    ok = all(got.get(m) == c for m, c in want.items())
    return _check(name, ok, f"{label}: counts {sorted(got.items())[:8]}")


def run_report(strict_gts_example3=False, tol=1e-3, cap=None):
    checks = []

    # first-order theta series
    checks.append(_theta1_check(
        "theta1_a2", "a2", [(1, 6), (3, 6), (4, 6), (7, 12), (9, 6)], 9))
    for lab in ("a2_c1", "a2_c2"):
        checks.append(_theta1_check(
            f"theta1_{lab}", lab, [(1, 12), (2, 60), (3, 160), (4, 252)], 4))
    checks.append(_theta1_check(
        "theta1_a4_c3", "a4_c3",
        [(1, 12), (Fraction(7, 4), 16), (2, 8), (Fraction(9, 4), 32)],
        Fraction(9, 4)))

    # rank-2 generalized theta of a2: the reference fourth count (380) is a
    # truncation artifact; enumerating coefficients over the box |u_i| <= 5
    # instead of the full ball of squared radius 28 reproduces it exactly,
    # while the full ball holds 444 such pairs.
    s = generalized_theta(get_lattice("a2"), 2, 4, subset_cap=10**9)
    got = _series_counts(s)
    want = [(Fraction(3, 4), 36), (Fraction(3), 156),
            (Fraction(27, 4), 168), (Fraction(12), 380)]
    checks.append(_check("theta2_a2_terms_1to3", got[:3] == want[:3],
                         f"computed {got[:3]}"))
    checks.append(_check(
        "theta2_a2_term4", got[3] == want[3],
        f"computed {got[3]}, reference (12, 380); the reference count "
        "matches a coefficient-box truncation at 5, full-ball count is 444"))

    # rank-2 leading term for a4_c3, with the guarantee flag
    s3 = generalized_theta(get_lattice("a4_c3"), 2, 1)
    t0 = s3.terms[0]
    checks.append(_check(
        "theta2_a4_c3_leading",
        (t0.mu, t0.count, t0.guaranteed) == (Fraction(3, 4), 144, True),
        f"leading term ({t0.mu}, {t0.count}), guaranteed={t0.guaranteed}"))

    # norm hierarchies
    expectations = {
        "d4": (2, 3, 4, 4),
        "d4bar": (1, Fraction(3, 4), Fraction(1, 2), Fraction(1, 4)),
        "a2_c1": (1, 1, 1, 1, 1, 1),
        "a2_c2": (1, Fraction(3, 4), Fraction(1, 2), Fraction(3, 4), 1, 1),
        "a4_c3": (1, Fraction(3, 4), Fraction(1, 2), Fraction(3, 4), 1, 1),
    }
    hierarchies = {}
    for lab, want_nu in expectations.items():
        h = norm_hierarchy(get_lattice(lab), cap=cap)
        hierarchies[lab] = h
        ok = h.values == tuple(Fraction(v) for v in want_nu)
        checks.append(_check(f"nu_{lab}", ok, f"nu = {[str(v) for v in h.values]}"))
    h4 = norm_hierarchy(get_lattice("a4_c4"), cap=cap)
    hierarchies["a4_c4"] = h4
    rounded = tuple(round(float(v), 2) for v in h4.values)
    checks.append(_check(
        "nu_a4_c4", rounded == (0.75, 0.88, 0.77, 0.88, 0.75, 1.0),
        f"nu = {[str(v) for v in h4.values]} ~ {rounded}"))

    # stability
    for lab, want_stable in (("a2_c1", True), ("a2_c2", False),
                             ("a4_c3", False), ("a4_c4", False)):
        v = is_stable(get_lattice(lab), cap=cap)
        ok = v.stable == want_stable and (v.stable or len(v.witness) > 0)
        checks.append(_check(
            f"stable_{lab}", ok,
            f"stable={v.stable}" + ("" if v.stable else
                                    f", witness rank {v.failing_r}")))

    # code weight data
    c1, c2 = get_code("c1"), get_code("c2")
    checks.append(_check(
        "hierarchy_c1", c1.weight_hierarchy().values == (2, 4, 6),
        f"d(C1) = {c1.weight_hierarchy().values}"))
    checks.append(_check(
        "hierarchy_c2", c2.weight_hierarchy().values == (2, 3, 6),
        f"d(C2) = {c2.weight_hierarchy().values}"))
    we1, we2 = c1.weight_enumerator(), c2.weight_enumerator()
    checks.append(_check(
        "enumerators_equal",
        we1 == we2 == [1, 0, 3, 0, 3, 0, 1],
        f"A(C1) = {we1}, A(C2) = {we2}"))

    # theta ratios
    d1 = ratio(get_lattice("a4_c3"), 1.0, cap=cap)
    ex3 = extremum_scan(get_lattice("a4_c3"), cap=cap)
    checks.append(_check(
        "delta_a4_c3_at_1", abs(d1 - 1.0026) <= tol, f"delta(1) = {d1:.6f}"))
    checks.append(_check(
        "delta_a4_c3_shape",
        ex3["kind"] == "max" and all(d > 1 for _, d in ex3["scan"]),
        f"kind = {ex3['kind']}, min grid delta = "
        f"{min(d for _, d in ex3['scan']):.9f}"))
    ex4 = extremum_scan(get_lattice("a4_c4"), cap=cap)
    checks.append(_check(
        "delta_a4_c4_shape",
        ex4["kind"] == "min" and any(d > 1 for _, d in ex4["scan"]),
        f"kind = {ex4['kind']}, delta(1) = {ex4['delta_at_one']:.6f}"))

    if strict_gts_example3:
        # reference rank-2 counts for the two binary Construction A lattices;
        # they came from the same truncated numerical setup, so compare as WARN
        refs = [
            ("a2_c1", [(1, 300), (2, 3936), (3, 9984)]),
            ("a2_c2", [(Fraction(3, 4), 144), (1, 92), (Fraction(7, 4), 1920)]),
        ]
        for lab, terms in refs:
            lat = get_lattice(lab)
            s = generalized_theta(lat, 2, len(terms), subset_cap=10**9)
            got = _series_counts(s)
            want = [(Fraction(m), c) for m, c in terms]
            checks.append(_check(
                f"strict_theta2_{lab}", got == want,
                f"computed {got}, reference {want}", warn=True))

    n_pass = sum(c["status"] == "PASS" for c in checks)
    n_fail = sum(c["status"] == "FAIL" for c in checks)
    n_warn = sum(c["status"] == "WARN" for c in checks)
    return {
        "checks": checks,
        "summary": {"pass": n_pass, "fail": n_fail, "warn": n_warn},
        "ok": n_fail == 0,
    }
