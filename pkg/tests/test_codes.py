from fractions import Fraction
from itertools import combinations

import pytest

from latheta.codes import LinearCode, WeightHierarchy, construction_a
from latheta.errors import DomainError
from latheta.registry import get_code


def test_weight_enumerators_identical():
    we1 = get_code("c1").weight_enumerator()
    we2 = get_code("c2").weight_enumerator()
    assert we1 == we2 == [1, 0, 3, 0, 3, 0, 1]


def test_weight_hierarchies():
    assert get_code("c1").weight_hierarchy().values == (2, 4, 6)
    assert get_code("c2").weight_hierarchy().values == (2, 3, 6)


def test_hierarchy_strictly_increasing():
    with pytest.raises(DomainError):
        WeightHierarchy((2, 2, 6))


def test_ghw_against_exhaustive_subcode_oracle():
    # oracle: scan all r-dimensional subcodes directly via codeword subsets
    code = get_code("c2")
    words = [w for w in code.codewords() if any(w)]
    masks = [sum(b << i for i, b in enumerate(w)) for w in words]
    for r in (1, 2, 3):
        best = code.n
        for sub in combinations(masks, r):
            span = {0}
            for m in sub:
                span |= {x ^ m for x in span}
            if len(span) != 2 ** r:
                continue
            support = 0
            for m in sub:
                support |= m
            best = min(best, bin(support).count("1"))
        assert code.generalized_hamming_weight(r) == best


def test_ghw_singleton_bound():
    for lab in ("c1", "c2"):
        code = get_code(lab)
        d = code.weight_hierarchy().values
        for r, dr in enumerate(d, start=1):
            assert dr <= code.n - code.k + r


def test_quaternary_rejects_binary_only_ops():
    c3 = get_code("c3")
    with pytest.raises(DomainError):
        c3.weight_enumerator()
    with pytest.raises(DomainError):
        c3.generalized_hamming_weight(1)


def test_codewords_count():
    assert len(get_code("c1").codewords()) == 8
    assert len(get_code("c3").codewords()) == 64


def test_construction_a_volume_law():
    # vol^2 = q^(n - 2k) for a free rank-k code
    for lab, q, k in (("c1", 2, 3), ("c2", 2, 3), ("c3", 4, 3), ("c4", 4, 3)):
        code = get_code(lab)
        lat = construction_a(code)
        assert lat.volume_sq() == Fraction(q) ** (code.n - 2 * k)


def test_construction_a_realizes_codeword_norms():
    # embedded codeword c has squared norm |c|^2 / q in the scaled lattice
    from latheta.enumerate import theta_spectrum

    code = get_code("c2")
    lat = construction_a(code)
    mus = set(dict(theta_spectrum(lat, 3).terms))
    for w in code.codewords():
        if any(w):
            assert Fraction(sum(w), 2) in mus


def test_json_round_trip():
    code = get_code("c4")
    back = LinearCode.from_json(code.to_json())
    assert back.generator == code.generator and back.q == 4
    with pytest.raises(DomainError):
        LinearCode.from_json({"q": 2})
