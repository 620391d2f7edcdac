"""Python bindings for the mmwb matrix-multiplication scheme workbench."""

from ._core import (
    Family,
    LiftResult,
    Scheme,
    classical,
    encode,
    equivalent,
    lift,
    merge_reduction,
    simplify,
)

__all__ = [
    "Family",
    "LiftResult",
    "Scheme",
    "classical",
    "encode",
    "equivalent",
    "lift",
    "merge_reduction",
    "simplify",
]
