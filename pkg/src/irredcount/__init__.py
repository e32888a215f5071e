"""Exact counts of monic irreducible polynomials over F_q with prescribed coefficients."""

from __future__ import annotations

from .classgroup import (
    ZERO,
    GroupStructure,
    Prescription,
    class_inverse,
    class_mul,
    class_of,
    class_pow,
    decompose,
    dlog,
    prescribe_to_class,
    structure_from_generators,
)
from .counting import Counter, I_of, N_of, log_series, zeta_numerators
from .cyclo import CycloCtx, CycloNum, cyclotomic_poly
from .errors import (
    BudgetExceeded,
    DivisionByZero,
    GroupTooLarge,
    InvalidInput,
    NotInteger,
    NotRational,
    UnknownClass,
    ZeroConstant,
)
from .ff import GF, is_irreducible, irreducibles, poly_from_str, poly_to_str
from .oracle import OracleReport, brute_F, brute_I, total_irreducibles, verify

__version__ = "0.1.0"

__all__ = [
    "ZERO",
    "GF",
    "Prescription",
    "GroupStructure",
    "Counter",
    "CycloCtx",
    "CycloNum",
    "OracleReport",
    "class_of",
    "class_mul",
    "class_inverse",
    "class_pow",
    "prescribe_to_class",
    "decompose",
    "structure_from_generators",
    "dlog",
    "N_of",
    "I_of",
    "log_series",
    "zeta_numerators",
    "cyclotomic_poly",
    "is_irreducible",
    "irreducibles",
    "poly_from_str",
    "poly_to_str",
    "brute_F",
    "brute_I",
    "total_irreducibles",
    "verify",
    "BudgetExceeded",
    "DivisionByZero",
    "GroupTooLarge",
    "InvalidInput",
    "NotInteger",
    "NotRational",
    "UnknownClass",
    "ZeroConstant",
]
