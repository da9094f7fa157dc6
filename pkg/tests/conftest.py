import random
from fractions import Fraction
from itertools import product
from math import isqrt

import pytest

from latheta.exact import rational_inverse
from latheta.lattice import QuadraticLattice, lattice_from_rational_basis


@pytest.fixture
def a2():
    h = Fraction(1, 2)
    return QuadraticLattice(2, ((Fraction(1), h), (h, Fraction(1))), "a2")


def random_lattice(rng, dim, label=None):
    """Small random integer basis, retried until nonsingular."""
    while True:
        basis = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)]
        try:
            return lattice_from_rational_basis(basis, label)
        except Exception:
            continue


def box_oracle_vectors(lattice, bound):
    """All nonzero coefficient vectors with norm_sq <= bound, by box scan.

    Independent of the production enumerator: coordinate bounds come from
    u_i^2 <= bound * (G^{-1})_{ii}, then every box point is norm-checked.
    """
    bound = Fraction(bound)
    inv = rational_inverse([list(r) for r in lattice.gram])
    ks = []
    for i in range(lattice.dim):
        limit = bound * inv[i][i]
        ks.append(isqrt(limit.numerator // limit.denominator) + 1)
    out = []
    for u in product(*(range(-k, k + 1) for k in ks)):
        if any(u) and lattice.norm_sq(u) <= bound:
            out.append(u)
    return sorted(out)


@pytest.fixture
def rng():
    return random.Random(20260824)
