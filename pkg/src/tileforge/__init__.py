"""Connectification operators for translational tiles and spectral sets.

Folded bridges, stacking and spiral bridges over integer lattices and
rational unit-cube complexes, with exact tiling and spectrality checks on
finite abelian groups.
"""

from .bridges import (
    BridgeSpec,
    component_path,
    folded_bridge,
    generalized_product,
    product_tiling,
    snake_sequence,
)
from .cubes import (
    CubeSet,
    RationalVector,
    interior_components,
    min_component_distance,
    real_folded_bridge,
    spiral_bridge,
    stacking,
    to_lattice,
    volume,
)
from .kernels import BACKEND
from .lattice import LatticeSet, cartesian_product, connected_components, minkowski_sum
from .search import BudgetExhausted, NotFound
from .spectral import (
    CyclotomicSum,
    SpectrumWitness,
    coset_filter,
    find_spectrum,
    fourier_value,
    product_spectrum,
    verify_orthogonal_set,
    zero_set,
)
from .torus import FiniteAbelianGroup, TilingWitness, find_tiling, tiling_periods, verify_tiling

__version__ = "0.1.0"
