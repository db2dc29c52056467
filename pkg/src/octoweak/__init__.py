"""Complexified-octonion algebra with a seeded identity-verification harness."""

from .core import (
    E,
    IM,
    ONE,
    CplxOcton,
    StructureTable,
    associator,
    bar_star,
    commutator,
    conj_complex,
    conj_oct,
    exp_assoc,
    inner,
    inverse,
    isclose,
    mul,
    norm,
    scal,
    structure_table,
    vec,
)
from .errors import (
    DomainViolation,
    NotInAssociativeSubalgebra,
    UnknownSuite,
    ZeroDivisor,
)
from .fields import PolyField, dexp_at, dirac_scalar, eval_at, exp_field_at, partial, pullback_linear
from .gauge import ConnectionField
from .grading import IPMoveForm, SubspaceTag, project, sample
from .lorentz import Theta, gamma5_analogue, lambda_S, lambda_V, mat_exp, s_gen, v_gen
from .suites import SuiteConfig, SuiteReport, run_all, run_suite, suite_ids

__version__ = "0.1.0"

__all__ = [
    "CplxOcton",
    "StructureTable",
    "PolyField",
    "ConnectionField",
    "Theta",
    "SubspaceTag",
    "IPMoveForm",
    "SuiteConfig",
    "SuiteReport",
    "DomainViolation",
    "NotInAssociativeSubalgebra",
    "UnknownSuite",
    "ZeroDivisor",
    "E",
    "IM",
    "ONE",
    "associator",
    "bar_star",
    "commutator",
    "conj_complex",
    "conj_oct",
    "dexp_at",
    "dirac_scalar",
    "eval_at",
    "exp_assoc",
    "exp_field_at",
    "gamma5_analogue",
    "inner",
    "inverse",
    "isclose",
    "lambda_S",
    "lambda_V",
    "mat_exp",
    "mul",
    "norm",
    "partial",
    "project",
    "pullback_linear",
    "run_all",
    "run_suite",
    "s_gen",
    "sample",
    "scal",
    "structure_table",
    "suite_ids",
    "v_gen",
    "vec",
    "__version__",
]
