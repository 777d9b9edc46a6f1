"""Exact computational kernel for homogeneous-bundle cohomology on adjoint
varieties and symbolic codimension-one foliation checks on hyperplane sections
of P^n x P^n.  All arithmetic is exact (integers and rationals)."""

from .rootsystem import (
    RootDatum,
    Weight,
    build_datum,
    dim_g,
    highest_root,
    pairing,
    weyl_vector,
)
from .weylgroup import DotResult, dot_classify, simple_reflection
from .parabolic import (
    LeviDiagram,
    MarkedDatum,
    branch_to_levi,
    is_bundle_weight,
    levi_diagram,
    nilradical_size,
)
from .repcalc import (
    Decomposition,
    Piece,
    WeightSystem,
    square_decompose,
    square_decompose_simple,
    weight_system,
    weyl_dim,
)
from .bbw import CohomologyResult, cohomology, cohomology_of_decomposition
from .adjoint import (
    AdjointData,
    adjoint_data,
    h0_omega2,
    section4_table,
    wedge2_Ddual_twisted,
)

__all__ = [
    "RootDatum",
    "Weight",
    "build_datum",
    "dim_g",
    "highest_root",
    "pairing",
    "weyl_vector",
    "DotResult",
    "dot_classify",
    "simple_reflection",
    "LeviDiagram",
    "MarkedDatum",
    "branch_to_levi",
    "is_bundle_weight",
    "levi_diagram",
    "nilradical_size",
    "Decomposition",
    "Piece",
    "WeightSystem",
    "square_decompose",
    "square_decompose_simple",
    "weight_system",
    "weyl_dim",
    "CohomologyResult",
    "cohomology",
    "cohomology_of_decomposition",
    "AdjointData",
    "adjoint_data",
    "h0_omega2",
    "section4_table",
    "wedge2_Ddual_twisted",
]

__version__ = "0.1.0"
