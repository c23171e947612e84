"""Finite biquandles as block matrices: axiom checking, completion and
enumeration, presentations of knots, and homomorphism counting."""

from .core import (
    BiquandleError,
    BiquandleMatrix,
    OpKind,
    axiom_failure,
    biqtest,
    flip,
    obverse,
)
from .formats import ParseError, format_biq, parse_biq, parse_biq_many
from .hom import baut, bhomcount, bhomlist, bisolist, breducelist
from .presentation import Presentation, PresentationVector, parse_knot
from .search import BiquandlePattern, biqfill, biqlist, enumerate_biquandles

__all__ = [
    "BiquandleError",
    "BiquandleMatrix",
    "BiquandlePattern",
    "OpKind",
    "ParseError",
    "Presentation",
    "PresentationVector",
    "axiom_failure",
    "baut",
    "bhomcount",
    "bhomlist",
    "biqfill",
    "biqlist",
    "biqtest",
    "bisolist",
    "breducelist",
    "enumerate_biquandles",
    "flip",
    "format_biq",
    "obverse",
    "parse_biq",
    "parse_biq_many",
    "parse_knot",
]
