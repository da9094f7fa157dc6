"""latheta: exact lattice invariants, generalized theta series and ratios."""

from .errors import (
    CapacityError,
    DimensionError,
    DomainError,
    LathetaError,
    RankError,
)
from .lattice import LatticeVector, QuadraticLattice, lattice_from_rational_basis
from .enumerate import ThetaSpectrum, lambda_sequence, theta_spectrum, vectors_within
from .gts import GtsSeries, GtsTerm, count_subsets_with_det, generalized_theta
from .dsp import (
    NormHierarchy,
    StabilityVerdict,
    check_scaling_law,
    is_stable,
    min_sublattice_det,
    norm_hierarchy,
)
from .codes import LinearCode, WeightHierarchy, construction_a
from .analytic import (
    extremum_scan,
    ratio,
    ratio_scan,
    symmetry_check,
    theta_value,
    theta_zn,
)
from .registry import code_labels, get_code, get_lattice, lattice_labels

__version__ = "0.1.0"
