"""Z_q linear codes: weight data and Construction A lattices.

Weight enumerators and generalized Hamming weights are implemented for
binary codes only (subcodes are vector spaces there); Construction A works
for any modulus q, which is all the q=4 codes are used for.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .errors import DomainError
from .exact import hnf_rows
from .lattice import QuadraticLattice

__all__ = ["LinearCode", "WeightHierarchy", "construction_a"]


def _rref_masks(masks):
    """Canonical fully-reduced GF(2) basis of the span of bitmask vectors."""
    basis = {}  # pivot bit -> mask, each pivot unique to its own vector
    for m in masks:
        while m:
            low = m & -m
            if low in basis:
                m ^= basis[low]
            else:
                for p, b in list(basis.items()):
                    if b & low:
                        basis[p] = b ^ m
                basis[low] = m
                break
    return tuple(sorted(basis.values()))


@dataclass(frozen=True)
class WeightHierarchy:
    values: tuple  # d_1 < d_2 < ... < d_k

    def __post_init__(self):
        v = self.values
        if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            raise DomainError("weight hierarchy must be strictly increasing")


@dataclass(frozen=True)
class LinearCode:
    q: int
    n: int
    generator: tuple  # k rows, entries in [0, q)
    label: Optional[str] = None

    def __post_init__(self):
        if self.q < 2:
            raise DomainError("modulus must be >= 2")
        gen = tuple(tuple(int(x) % self.q for x in row) for row in self.generator)
        if any(len(row) != self.n for row in gen):
            raise DomainError("generator rows must have length n")
        object.__setattr__(self, "generator", gen)

    @property
    def k(self):
        return len(self.generator)

    def codewords(self):
        """All distinct codewords (additive row span over Z_q)."""
        words = set()
        for coeffs in product(range(self.q), repeat=self.k):
            w = tuple(
                sum(c * row[j] for c, row in zip(coeffs, self.generator)) % self.q
                for j in range(self.n)
            )
            words.add(w)
        return sorted(words)

    # -- binary weight data -------------------------------------------------

    def weight_enumerator(self):
        """Coefficients A_0..A_n of the Hamming weight enumerator (q=2)."""
        if self.q != 2:
            raise DomainError("weight enumerators only supported for q=2")
        if self.k > 24:
            raise DomainError("code dimension too large for full enumeration")
        coeffs = [0] * (self.n + 1)
        for w in self.codewords():
            coeffs[sum(w)] += 1
        return coeffs

    def _binary_basis_masks(self):
        """Row space basis as bitmasks (q=2), independent rows only."""
        rows = [sum(b << i for i, b in enumerate(row)) for row in self.generator]
        return list(_rref_masks(rows))

    def generalized_hamming_weight(self, r):
        """Smallest support size over r-dimensional subcodes (q=2)."""
        if self.q != 2:
            raise DomainError("generalized Hamming weights only supported for q=2")
        basis = self._binary_basis_masks()
        k = len(basis)
        if not 1 <= r <= k:
            raise DomainError(f"subcode dimension must be in [1:{k}]")
        nonzero = []
        for coeffs in product((0, 1), repeat=k):
            m = 0
            for c, b in zip(coeffs, basis):
                if c:
                    m ^= b
            if m:
                nonzero.append(m)
        best = self.n
        seen = set()
        for subset in combinations(nonzero, r):
            key = _rref_masks(subset)
            if len(key) != r or key in seen:
                continue
            seen.add(key)
            support = 0
            for m in subset:
                support |= m
            best = min(best, bin(support).count("1"))
        return best

    def weight_hierarchy(self):
        basis = self._binary_basis_masks()
        return WeightHierarchy(
            tuple(self.generalized_hamming_weight(r) for r in range(1, len(basis) + 1))
        )

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {
            "label": self.label,
            "q": self.q,
            "n": self.n,
            "generator": [list(row) for row in self.generator],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(
                q=int(obj["q"]),
                n=int(obj["n"]),
                generator=tuple(tuple(row) for row in obj["generator"]),
                label=obj.get("label"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DomainError(f"bad code JSON: {e}") from e


def construction_a(code: LinearCode, label=None):
    """Construction A lattice (1/sqrt(q)) * (embedded code + q·Z^n).

    Builds an integer basis of the unscaled lattice by Hermite reduction of
    the generator rows stacked over q·I, then divides the Gram by q.
    """
    q, n = code.q, code.n
    stacked = [list(row) for row in code.generator]
    stacked += [[q if j == i else 0 for j in range(n)] for i in range(n)]
    basis = hnf_rows(stacked)
    gram = tuple(
        tuple(
            Fraction(sum(basis[i][k] * basis[j][k] for k in range(n)), q)
            for j in range(n)
        )
        for i in range(n)
    )
    if label is None:
        label = f"a{q}({code.label})" if code.label else None
    return QuadraticLattice(n, gram, label)
