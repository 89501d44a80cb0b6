"""Exact computer algebra for Yokonuma-Hecke algebras at q = 0, their
Ariki-Koike-Shoji presentation, and the associated nil algebra."""

from .scalars import CyclotomicField, FieldSpec, PrimeField, make_field
from .ycore import YAlgebra, YElement
from .aks import AKSAlgebra, AKSElement
from .nilalg import NilAlgebra, NilElement
from . import exactla, modrep, structure, symgroup

__version__ = "0.1.0"

__all__ = [
    "CyclotomicField",
    "PrimeField",
    "FieldSpec",
    "make_field",
    "YAlgebra",
    "YElement",
    "AKSAlgebra",
    "AKSElement",
    "NilAlgebra",
    "NilElement",
    "exactla",
    "modrep",
    "structure",
    "symgroup",
    "__version__",
]
