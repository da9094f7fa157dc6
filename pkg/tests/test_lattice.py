from fractions import Fraction

import pytest

from latheta.errors import DimensionError, DomainError
from latheta.lattice import QuadraticLattice, lattice_from_rational_basis


def test_rejects_asymmetric_and_indefinite():
    with pytest.raises(DomainError):
        QuadraticLattice(2, ((1, 1), (0, 1)))
    with pytest.raises(DomainError):
        QuadraticLattice(2, ((1, 2), (2, 1)))  # det < 0
    with pytest.raises(DimensionError):
        QuadraticLattice(3, ((1, 0), (0, 1)))


def test_dual_is_involution(a2):
    assert a2.dual().dual().gram == a2.gram
    assert a2.dual().volume_sq() == 1 / a2.volume_sq()


def test_volume_and_scaling(a2):
    assert a2.volume_sq() == Fraction(3, 4)
    assert a2.scale(Fraction(1, 2)).volume_sq() == Fraction(3, 16)
    with pytest.raises(DomainError):
        a2.scale(0)


def test_norms_and_inner(a2):
    assert a2.norm_sq((1, 0)) == 1
    assert a2.norm_sq((1, -1)) == 1
    assert a2.norm_sq((1, 1)) == 3
    assert a2.inner((1, 0), (0, 1)) == Fraction(1, 2)


def test_subset_gram_det(a2):
    assert a2.subset_gram_det([(1, 0), (0, 1)]) == Fraction(3, 4)
    assert a2.subset_gram_det([(1, 0), (2, 0)]) == 0


def test_json_round_trip(a2):
    obj = a2.to_json()
    assert obj["gram"][0] == ["1", "1/2"]
    back = QuadraticLattice.from_json(obj)
    assert back.gram == a2.gram and back.label == "a2"
    with pytest.raises(DomainError):
        QuadraticLattice.from_json({"dim": 2})


def test_from_basis_matches_gram():
    lat = lattice_from_rational_basis([[1, 0], [Fraction(1, 2), Fraction(1, 2)]])
    assert lat.gram[1][1] == Fraction(1, 2)
    assert lat.volume_sq() == Fraction(1, 4)
