"""Exact diagrammatics for the free oriented extension of Temperley-Lieb.

The package is layered: :mod:`freetl.word` (sign words), :mod:`freetl.coeff`
(exact scalars in Q(delta)), :mod:`freetl.diagram` (pairing diagrams and
morphisms), :mod:`freetl.gram`, :mod:`freetl.freext` (overlays, projections),
:mod:`freetl.ustl` (the unshaded embedding) and :mod:`freetl.freeprod`
(free-product counting).  :mod:`freetl.cli` is the command-line front end.
"""

__version__ = "0.1.0"

from .coeff import DELTA, DeltaMode, RationalFunction, eval_at, quantum_int
from .diagram import (
    Morphism,
    PairingDiagram,
    Side,
    compose,
    enumerate_oriented_tl,
    enumerate_unshaded_tl,
    identity,
    inner_product,
    rotate_element,
    star,
    tensor,
    trace_close,
    vector,
)
from .freext import f_vv, is_minimal, jones_wenzl, overlay_spanning_set, phi
from .freeprod import realization_count, sigma0_enumerate
from .gram import GramReport, gram_matrix, quotient_dim
from .ustl import forget_orientation, ustl_dim
from .word import Sign, Word, WordClass, classify, involution, mas_decompose, mas_parity_split, rotate

__all__ = [
    "__version__",
    "DELTA",
    "DeltaMode",
    "RationalFunction",
    "eval_at",
    "quantum_int",
    "Morphism",
    "PairingDiagram",
    "Side",
    "compose",
    "enumerate_oriented_tl",
    "enumerate_unshaded_tl",
    "identity",
    "inner_product",
    "rotate_element",
    "star",
    "tensor",
    "trace_close",
    "vector",
    "f_vv",
    "is_minimal",
    "jones_wenzl",
    "overlay_spanning_set",
    "phi",
    "realization_count",
    "sigma0_enumerate",
    "GramReport",
    "gram_matrix",
    "quotient_dim",
    "forget_orientation",
    "ustl_dim",
    "Sign",
    "Word",
    "WordClass",
    "classify",
    "involution",
    "mas_decompose",
    "mas_parity_split",
    "rotate",
]
