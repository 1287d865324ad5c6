"""Exact non-isomorphism certificates for Euclidean distance graphs on Z^2.

G(Z^2, sqrt r) joins two lattice points when their squared distance is r.
The package enumerates two-squares representations, counts components,
paths and walks, builds explicit bounded-length walks, and produces and
checks certificates that graphs for distinct realized r are not isomorphic.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .arith import (
    BezoutPair,
    Factorization,
    Radicand,
    Representation,
    all_representations,
    core_decompose,
    factorize,
    is_core,
    is_realized,
    mandatory_gcd_divisor,
    primitive_representation,
    radicand,
    solve_unit_bezout,
)
from .certify import Certificate, certify_nonisomorphic, verify_certificate
from .construct import (
    PathWitness,
    StepSequence,
    axis_translation,
    build_path,
    loop_erase,
    unit_translation,
)
from .errors import (
    BadParity,
    BudgetExceeded,
    IdenticalRadicands,
    LatticeIsoError,
    NoPrimitiveRepresentation,
    NotCoprime,
    NotCoreRadicand,
    NotRealized,
)
from .lattice import (
    INFINITE,
    ORIGIN,
    LatticeVector,
    NeighborSet,
    component_count,
    component_count_1d,
    neighbor_vectors,
    same_component,
    sublattice_index,
)
from .spectra import (
    AngleWitness,
    RationalCosine,
    angle_witness,
    cosine_spectrum,
    dot_spectrum,
    is_angle_realized,
)
from .walks import PathCountQuery, count_paths, count_walks, verify_collinear_uniqueness
