"""Twisted homology of link complements and colored link signatures.

The package computes homology with rank-one complex local coefficient
systems over exact cyclotomic scalars, signatures and nullities of the
associated Hermitian forms, and the span/slice inequalities that turn
those invariants into genus and slice obstructions.
"""

from .exact_scalars import (
    CyclotomicNumber,
    RootOfUnity,
    UnitComplexFloat,
    real_sign,
)
from .local_system import FieldChoice, MonodromyAssignment, comparison_field, specialization_d
from .chain_complex import (
    GroupRingComplex,
    LaurentMatrix,
    betti,
    morse_estimate_check,
    rank_identity_check,
    validate_complex,
)
from .laurent import LaurentPolynomial
from .hermitian_forms import (
    HermitianMatrixExact,
    SignatureResult,
    signature_nullity,
    skew_to_hermitian,
)
from .link_diagrams import (
    ColoredLinkDiagram,
    PDCode,
    WirtingerPresentation,
    braid_to_pd,
    fox_complex,
    linking_number,
    parse_pd,
    wirtinger,
)
from .link_invariants import (
    GeneralizedSeifertData,
    SeifertMatrix,
    SignatureSample,
    colored_signature,
    levine_tristram,
    seifert_from_diagram,
    signature_scan,
    twisted_nullity,
)
from .bounds import (
    BettiInput,
    SurfaceDescriptor,
    SurfacePiece,
    min_genus_bound,
    slice_check_general,
    slice_check_simple,
    span_check,
    span_check_general_n,
    surface_betti,
)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicNumber",
    "RootOfUnity",
    "UnitComplexFloat",
    "real_sign",
    "FieldChoice",
    "MonodromyAssignment",
    "comparison_field",
    "specialization_d",
    "GroupRingComplex",
    "LaurentMatrix",
    "LaurentPolynomial",
    "betti",
    "morse_estimate_check",
    "rank_identity_check",
    "validate_complex",
    "HermitianMatrixExact",
    "SignatureResult",
    "signature_nullity",
    "skew_to_hermitian",
    "ColoredLinkDiagram",
    "PDCode",
    "WirtingerPresentation",
    "braid_to_pd",
    "fox_complex",
    "linking_number",
    "parse_pd",
    "wirtinger",
    "GeneralizedSeifertData",
    "SeifertMatrix",
    "SignatureSample",
    "colored_signature",
    "levine_tristram",
    "seifert_from_diagram",
    "signature_scan",
    "twisted_nullity",
    "BettiInput",
    "SurfaceDescriptor",
    "SurfacePiece",
    "min_genus_bound",
    "slice_check_general",
    "slice_check_simple",
    "span_check",
    "span_check_general_n",
    "surface_betti",
]
