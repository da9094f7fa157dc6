"""Built-in lattices and codes addressable by label.

Labels: zn:<k>, a2, d4, d4bar, a2_c1, a2_c2, a4_c3, a4_c4 for lattices and
c1..c4 for codes.  Everything is constructed on demand and cached.
"""

from fractions import Fraction
from functools import lru_cache

from .codes import LinearCode, construction_a
from .errors import DomainError
from .lattice import QuadraticLattice, lattice_from_rational_basis

__all__ = ["get_lattice", "get_code", "lattice_labels", "code_labels"]

_CODES = {
    "c1": (2, ((1, 0, 0, 1, 0, 0),
               (0, 1, 0, 0, 1, 0),
               (0, 0, 1, 0, 0, 1))),
    "c2": (2, ((1, 0, 0, 0, 1, 0),
               (0, 1, 0, 1, 1, 1),
               (0, 0, 1, 0, 1, 0))),
    "c3": (4, ((1, 0, 0, 1, 2, 2),
               (0, 1, 0, 2, 0, 2),
               (0, 0, 1, 2, 2, 0))),
    "c4": (4, ((1, 0, 0, 0, 1, 1),
               (0, 1, 0, 1, 0, 2),
               (0, 0, 1, 1, 2, 0))),
}

_CONSTRUCTION_A = {"a2_c1": "c1", "a2_c2": "c2", "a4_c3": "c3", "a4_c4": "c4"}


def code_labels():
    return sorted(_CODES)


def lattice_labels():
    return ["zn:<k>", "a2", "d4", "d4bar"] + sorted(_CONSTRUCTION_A)


@lru_cache(maxsize=None)
def get_code(label):
    try:
        q, gen = _CODES[label]
    except KeyError:
        raise DomainError(
            f"unknown code label {label!r} (known: {', '.join(code_labels())})"
        ) from None
    return LinearCode(q=q, n=len(gen[0]), generator=gen, label=label)


@lru_cache(maxsize=None)
def get_lattice(label):
    if label.startswith("zn:"):
        try:
            n = int(label.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad dimension in label {label!r}") from None
        if not 1 <= n <= 64:
            raise DomainError("zn dimension must be in [1:64]")
        gram = tuple(
            tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
        )
        return QuadraticLattice(n, gram, label)
    if label == "a2":
        half = Fraction(1, 2)
        return QuadraticLattice(2, ((Fraction(1), half), (half, Fraction(1))), "a2")
    if label == "d4":
        return lattice_from_rational_basis(
            [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 1, 1]], "d4"
        )
    if label == "d4bar":
        lat = get_lattice("d4").scale(Fraction(1, 2))
        return QuadraticLattice(lat.dim, lat.gram, "d4bar")
    if label in _CONSTRUCTION_A:
        return construction_a(get_code(_CONSTRUCTION_A[label]), label=label)
    raise DomainError(
        f"unknown lattice label {label!r} (known: {', '.join(lattice_labels())})"
    )
