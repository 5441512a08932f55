"""Rota-Baxter operators on the truncated polynomial algebra K[x1..xn]/m^2."""

from .algebra import AlgebraSpec, TruncElement, alg_add, alg_mul, basis, one, scalar_mul
from .classify import (
    InvalidDataError,
    NotRB,
    Reason,
    Weight0Data,
    Weight1Data,
    classify,
    classify_weight0,
    classify_weight1,
    classify_weight_lambda,
    construct,
    construct_weight0,
    construct_weight1,
    rescale_to_weight1,
)
from .fields import QQ, FieldElement, FieldMismatchError, PrimeField, RationalField, parse_field
from .generate import (
    GenConfig,
    random_idempotent,
    random_invertible,
    random_kernel_vector,
    random_square_zero,
    random_weight0_data,
    random_weight1_data,
)
from .operators import LinearOperator, RBCheck, RBWitness, apply, compose, op_add, op_scale, rb_check
from .oracle import EnumerationBudgetError, EnumerationReport, count_idempotents, enumerate_rb

__version__ = "0.1.0"
