"""Exact symplectic invariants of trivectors on a 6-dimensional space."""

from .catalog import FORMS, build, reproduce_tables
from .estimator import SymplecticAction, SymplecticInvariants
from .expression import dumps_document, format_trivector, loads_document, parse_trivector
from .exterior import Multivector, contract, pullback, trivector, wedge
from .invariants import (char_poly, i1_appendix, i1_structural, i2_appendix, i2_permutation,
                         i2_structural, j_tensor, l_endo, v_vector)
from .symplectic import OMEGA, act, random_symplectic, shear, sp_basis

__all__ = [
    "FORMS", "Multivector", "OMEGA", "SymplecticAction", "SymplecticInvariants", "act", "build",
    "char_poly", "contract", "dumps_document", "format_trivector", "i1_appendix", "i1_structural",
    "i2_appendix", "i2_permutation", "i2_structural", "j_tensor", "l_endo", "loads_document",
    "parse_trivector", "pullback", "random_symplectic", "reproduce_tables", "shear", "sp_basis",
    "trivector", "v_vector", "wedge",
]
__version__ = "0.1.0"
