"""Short codes, moment polytopes and Panina complexes of planar chain spaces."""

from .errors import (
    ChaintopeError,
    EmptyPolytope,
    InternalMismatch,
    NonGeneric,
    NotAdmissible,
    NotNormalized,
    SizeCap,
    TooLarge,
)
from .lengths import LengthVector, ShortCode, is_generic, is_short, normalize, short_code
from .poset import FacePoset, SignedSubset, admissible_subsets, face_poset, is_admissible
from .geometry import f_vector, is_flagtope, moment_hrep, oracle_vertices, reduced_hrep, vertices
from .classifier import PolytopeClass, Tag, classify_flagtope, is_aspherical
from .smallcover import characteristic_matrix, small_cover_cells
from .panina import enumerate_cells, euler_characteristic, top_cell_flag_report

__version__ = "0.1.0"
