"""Lattices represented by exact rational Gram matrices.

A lattice here is a positive definite quadratic form on Z^n: all geometry
(norms, volumes, sublattice determinants, duality, scaling) is a function
of the Gram matrix alone, which stays rational even when the natural basis
is irrational (hexagonal A2, Construction A with its 1/sqrt(q) factor).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import DimensionError, DomainError, RankError
from .exact import (
    format_rational,
    parse_rational,
    rational_det,
    rational_inverse,
    integer_rank,
)

__all__ = ["QuadraticLattice", "LatticeVector", "lattice_from_rational_basis"]


@dataclass(frozen=True)
class LatticeVector:
    """Integer coefficient vector with its cached exact squared norm."""

    coeffs: tuple
    norm_sq: Fraction


@dataclass(frozen=True)
class QuadraticLattice:
    dim: int
    gram: tuple  # tuple of tuples of Fraction
    label: Optional[str] = None

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("lattice dimension must be >= 1")
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        if len(g) != self.dim or any(len(r) != self.dim for r in g):
            raise DimensionError("gram matrix shape does not match dim")
        for i in range(self.dim):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise DomainError("gram matrix must be symmetric")
        # exact positive definiteness via leading principal minors
        for k in range(1, self.dim + 1):
            minor = [list(r[:k]) for r in g[:k]]
            if rational_det(minor) <= 0:
                raise DomainError("gram matrix must be positive definite")
        object.__setattr__(self, "gram", g)

    # -- cached integer form ------------------------------------------------

    @property
    def gram_scaled(self):
        """(integer matrix, denominator d) with gram = matrix / d."""
        d = lcm(*(x.denominator for row in self.gram for x in row))
        gz = [[int(x * d) for x in row] for row in self.gram]
        return gz, d

    # -- basic invariants ---------------------------------------------------

    def volume_sq(self):
        return rational_det([list(r) for r in self.gram])

    def dual(self):
        inv = rational_inverse([list(r) for r in self.gram])
        label = f"{self.label}*" if self.label else None
        return QuadraticLattice(self.dim, tuple(tuple(r) for r in inv), label)

    def scale(self, c):
        c = Fraction(c)
        if c <= 0:
            raise DomainError("scale factor must be positive")
        g = tuple(tuple(c * x for x in row) for row in self.gram)
        return QuadraticLattice(self.dim, g, self.label)

    # -- vectors and sublattices --------------------------------------------

    def vector(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise DimensionError("coefficient vector length mismatch")
        return LatticeVector(coeffs, self.norm_sq(coeffs))

    def norm_sq(self, coeffs):
        g = self.gram
        n = self.dim
        total = Fraction(0)
        for i in range(n):
            ci = coeffs[i]
            if ci == 0:
                continue
            row = g[i]
            total += ci * sum(row[j] * coeffs[j] for j in range(n) if coeffs[j])
        return total

    def inner(self, u, v):
        g = self.gram
        n = self.dim
        total = Fraction(0)
        for i in range(n):
            if u[i]:
                total += u[i] * sum(g[i][j] * v[j] for j in range(n) if v[j])
        return total

    def subset_gram_det(self, rows):
        """det(U G U^T) for integer coefficient rows U (0 if rank-deficient)."""
        r = len(rows)
        gram = [[self.inner(rows[i], rows[j]) for j in range(r)] for i in range(r)]
        return rational_det(gram)

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {
            "label": self.label,
            "dim": self.dim,
            "gram": [[format_rational(x) for x in row] for row in self.gram],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            dim = int(obj["dim"])
            gram = tuple(
                tuple(parse_rational(x) for x in row) for row in obj["gram"]
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DomainError(f"bad lattice JSON: {e}") from e
        return cls(dim=dim, gram=gram, label=obj.get("label"))


def lattice_from_rational_basis(basis, label=None):
    """Lattice with Gram B·B^T for a square nonsingular rational basis B."""
    rows = [[Fraction(x) for x in r] for r in basis]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("basis must be square")
    if integer_rank(rows) != n:
        raise RankError("basis must be nonsingular")
    gram = tuple(
        tuple(sum(rows[i][k] * rows[j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return QuadraticLattice(n, gram, label)
