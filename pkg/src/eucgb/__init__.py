"""Strong Gröbner bases for submodules of R[x_1, ..., x_n]^k over Euclidean domains.

Coefficients come from the integers or the rationals.  The package computes
strong and reduced strong Gröbner bases, Euclidean division of polynomial
vectors, Gröbner normal forms of polynomial matrices, and solutions and
kernels of linear systems over R[x].  Hermite and reduced row echelon forms
fall out as the constant special cases.
"""
from .division import Expression, Step, euclidean_divide, lead_reduce
from .euclid import QQ, ZZ, EuclideanDomain, domain_from_name
from .groebner import (
    RunStats,
    augment,
    coprime_skip,
    member,
    reduced_strong_groebner,
    spoly,
    strong_groebner,
    verify_strong_gb,
)
from .linsys import (
    NoSolution,
    PolyMatrix,
    Solution,
    gnf,
    hermite_normal_form,
    ideal_member,
    kernel,
    lcm_gcd,
    row_reduce,
    solve,
)
from .parsing import ParseError, format_element, format_polynomial, format_vector
from .polyvec import (
    AdmissibleOrder,
    LexOrder,
    MatrixOrder,
    PolyRing,
    PolyVector,
    RingMismatchError,
    lex_order,
    matrix_order,
)

__all__ = [
    "AdmissibleOrder", "EuclideanDomain", "Expression", "LexOrder", "MatrixOrder", "NoSolution",
    "ParseError", "PolyMatrix", "PolyRing", "PolyVector", "QQ", "RingMismatchError", "RunStats",
    "Solution", "Step", "ZZ", "augment", "coprime_skip", "domain_from_name", "euclidean_divide",
    "format_element", "format_polynomial", "format_vector", "gnf", "hermite_normal_form",
    "ideal_member", "kernel", "lcm_gcd", "lead_reduce", "lex_order", "matrix_order", "member",
    "reduced_strong_groebner", "row_reduce", "solve", "spoly", "strong_groebner",
    "verify_strong_gb",
]

__version__ = "0.1.0"
