"""Exact GCD/LCM matrix analysis: total nonnegativity, closed-form inverses and divisibility."""

from ._gcdtn import (
    GcdtnError,
    determinant,
    divide,
    divide_power,
    divisors,
    factorize,
    find_monotone_order,
    gcd,
    gcd_matrix,
    is_column_monotone,
    is_factor_closed,
    is_gcd_closed,
    is_positive_definite,
    is_prime,
    is_tn,
    lcm,
    lcm_matrix,
    pascal_set,
    pow_matrix,
    quotient_closed_form,
    random_column_monotone,
    reconstruct,
    search_nondivisor,
    totient,
    tridiagonal_inverse,
)

__all__ = [name for name in dir() if not name.startswith("_")]
