"""Generalized Hamming weights of evaluation codes on projective tori and toric sets."""

from .errors import GHWError
from .evalcode import LinearCode, build_code, dual_code, hilbert_function, hilbert_profile
from .field import FieldSpec, field_make
from .geometry import PointSet, bipartite_points, toric_points, torus_points
from .ghw import (OracleConfig, WeightHierarchy, duality_complete, ghw_exact,
                  hierarchy_exact, is_r_mds, min_distance)

__all__ = [
    "GHWError", "LinearCode", "build_code", "dual_code", "hilbert_function", "hilbert_profile",
    "FieldSpec", "field_make", "PointSet", "bipartite_points", "toric_points", "torus_points",
    "OracleConfig", "WeightHierarchy", "duality_complete", "ghw_exact", "hierarchy_exact",
    "is_r_mds", "min_distance",
]
