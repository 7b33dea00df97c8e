"""Associated varieties and GK dimensions of highest weight modules for Hermitian groups."""

from .avcore import AVResult, SpringerRow, associated_variety, k_of_lambda, orbit_dimension, orbit_label, springer_table
from .diagram import IntegralityClass, WeightInput, compute_diagram, classify_integrality, check_k_dominant
from .poset import build_poset, width, width_fast_sp, enumerate_downsets
from .root_data import Family, HermitianType, build_root_data, coroot_pairing
from .rs_oracle import k_prime

__all__ = [
    "AVResult",
    "Family",
    "HermitianType",
    "IntegralityClass",
    "SpringerRow",
    "WeightInput",
    "associated_variety",
    "build_poset",
    "build_root_data",
    "check_k_dominant",
    "classify_integrality",
    "compute_diagram",
    "coroot_pairing",
    "enumerate_downsets",
    "k_of_lambda",
    "k_prime",
    "orbit_dimension",
    "orbit_label",
    "springer_table",
    "width",
    "width_fast_sp",
]
