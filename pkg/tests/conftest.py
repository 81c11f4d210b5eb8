import itertools
from math import comb, prod

import pytest
import sympy


def count_monomials(nvars: int, degree: int) -> int:
    """Brute-force count of monomials of a given degree (h^0 oracle)."""
    if degree < 0:
        return 0
    return sum(1 for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) == degree)


def series_coefficients(factors, order):
    """Coefficients of a product of (1 + a h)^e up to h^order, e may be negative.

    Independent of the truncated-ring code in hpdcalc.chern: uses the
    generalized binomial series directly.
    """
    coeffs = [1] + [0] * order
    for a, e in factors:
        term = [0] * (order + 1)
        for j in range(order + 1):
            # generalized binomial C(e, j) a^j
            num = 1
            for t in range(j):
                num *= e - t
            den = 1
            for t in range(1, j + 1):
                den *= t
            term[j] = num // den * a**j
        coeffs = [sum(coeffs[i] * term[j - i] for i in range(j + 1)) for j in range(order + 1)]
    return coeffs


@pytest.fixture
def monomials():
    return count_monomials


@pytest.fixture
def series():
    return series_coefficients


def sympy_chi(dims, degrees):
    """Oracle: expand the adjunction formula with sympy, truncating at the end."""
    hs = sympy.symbols(f"h0:{len(dims)}")
    expr = prod((1 + h) ** (n + 1) for h, n in zip(hs, dims))
    top = sum(dims) - len(degrees)
    for deg in degrees:
        D = sum(a * h for a, h in zip(deg, hs))
        expr *= sum((-D) ** j for j in range(sum(dims) + 1)) * D
    poly = sympy.Poly(sympy.expand(expr), *hs)
    return int(poly.coeff_monomial(prod(h**n for h, n in zip(hs, dims))))
