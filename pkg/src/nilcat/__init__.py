"""Exact linear algebra for the category of nilpotent operators on finite-dimensional spaces."""

from .abelian import cokernel, image_factorization, is_exact_pair, is_short_exact, kernel
from .core import (
    JordanType,
    NilcatError,
    NilMorphism,
    NilObject,
    canonical_object,
    compose,
    direct_sum,
    identity,
    jordan_block,
    nilindex,
)
from .field import GF, QQ, field_from_spec
from .functors import (
    HomFunctorParam,
    TensorParam,
    divergence_report,
    hom_adjunction,
    homf_obj,
    jordan_hom_object,
    tensor_adjunction,
    tensor_obj,
)
from .hom import HomSpace, hom_basis, hom_dim
from .jordan import decompose, jordan_basis, jordan_type
from .linalg import Mat

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "HomFunctorParam", "HomSpace", "JordanType", "Mat", "NilMorphism", "NilObject",
    "NilcatError", "TensorParam", "canonical_object", "cokernel", "compose", "decompose",
    "direct_sum", "divergence_report", "field_from_spec", "hom_adjunction", "hom_basis",
    "hom_dim", "homf_obj", "identity", "image_factorization", "is_exact_pair",
    "is_short_exact", "jordan_basis", "jordan_block", "jordan_hom_object", "jordan_type",
    "kernel", "nilindex", "tensor_adjunction", "tensor_obj",
]
