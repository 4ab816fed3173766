from .fields import QQ, FieldError, PrimeField, Rationals, parse_field
from .groebner import (
    Limits,
    ResourceLimitExceeded,
    buchberger,
    interreduce,
    is_groebner,
    reduce,
    s_polynomial,
)
from .ideals import (
    MonomialIdeal,
    hilbert_function,
    hilbert_function_by_rank,
    initial_ideal,
    initial_ideal_of,
    is_member,
    monomials_of_degree,
    squarefree_monomials_of_degree,
    standard_monomials,
)
from .linalg import determinant, rank
from .orders import (
    ORDER_KINDS,
    DegLex,
    DiagonalProjectionOrder,
    HomogeneousLex,
    OrderError,
    ReverseLex,
    TermOrder,
    compare,
    deglex_counterexample_order,
    initial_term,
    make_order,
    variable_ranking,
)
from .polynomial import Polynomial, PolynomialRing

__all__ = [
    "DegLex",
    "DiagonalProjectionOrder",
    "FieldError",
    "HomogeneousLex",
    "Limits",
    "MonomialIdeal",
    "ORDER_KINDS",
    "OrderError",
    "Polynomial",
    "PolynomialRing",
    "PrimeField",
    "QQ",
    "Rationals",
    "ResourceLimitExceeded",
    "ReverseLex",
    "TermOrder",
    "buchberger",
    "compare",
    "deglex_counterexample_order",
    "determinant",
    "hilbert_function",
    "hilbert_function_by_rank",
    "initial_ideal",
    "initial_ideal_of",
    "initial_term",
    "interreduce",
    "is_groebner",
    "is_member",
    "make_order",
    "monomials_of_degree",
    "parse_field",
    "rank",
    "reduce",
    "s_polynomial",
    "squarefree_monomials_of_degree",
    "standard_monomials",
    "variable_ranking",
]
