"""framelab: spherical tight frames, their Gram-point geometry, manifold
stratification, planar connectivity paths, and the two built-in surface
complexes."""

from .frames import (
    DEFAULT_TOL,
    EllipsoidSpec,
    Frame,
    FrameBounds,
    act_orthogonal,
    act_permutation,
    act_phases,
    expected_tight_bound,
    frame_bounds,
    frame_operator,
    is_on_ellipsoid,
    is_spherical,
    is_tight,
    permutation_matrix,
    simplex_frame,
)
from .grassmann import (
    GramCheck,
    GramPoint,
    OneRedundantEnumeration,
    OrbitWitness,
    complement,
    enumerate_one_redundant,
    frame_from_gram,
    gram,
    holonomy_sign,
    is_gram_point,
    nearest_gram_point,
    refine_loop,
    same_orbit,
    torus_point,
)
from .stratification import (
    Partition,
    TangentReport,
    check_block_cardinalities,
    commutant_partition,
    construct_regular_point,
    expected_dimensions,
    harmonic_frame,
    is_orthodecomposable,
    random_tight_frame,
    tangent_report,
)
from .planar import (
    Chain,
    FramePath,
    PlanarFrame,
    canonical_planar,
    case1_explicit_path,
    case3_explicit_path,
    chain_straighten,
    connect_to_standard,
    from_planar,
    lift_path,
    random_planar_frame,
    square_map,
    standard_chain,
    to_gram_loop,
    to_planar,
    validate_path,
)
from .cellcomplex import (
    Complex2,
    SurfaceReport,
    build_g42,
    build_g52,
    connected_components,
    surface_report,
)

__version__ = "0.1.0"
