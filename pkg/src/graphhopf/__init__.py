"""Hopf algebras of labeled and unlabeled graphs, with exact arithmetic."""
from .algebra import (
    AlgebraElement,
    BasisMismatch,
    M,
    S,
    TensorElement,
    antipode_M,
    coproduct_M,
    coproduct_S,
    counit,
    pairing,
    product_M,
    product_S,
    structure_constants,
    tensor_product,
    unit,
)
from .graphs import (
    GraphError,
    LabeledGraph,
    UnlabeledGraph,
    VariantFlags,
    admissible_cuts,
    canonicalize,
    concatenate,
    contains_pattern,
    enumerate_graphs,
    factor_irreducible,
    gamma,
    gamma_pq,
    labelings_of,
    restrict,
)
from .structures import ForbiddenSet, in_ideal, in_subvariant, quotient_coproduct, quotient_product
from .sym import qsym_specialize, sym_morphism
from .unlabeled import MM, NotInSpan, mm_coproduct, mm_expand, mm_product, mm_recognize

__version__ = "0.1.0"
