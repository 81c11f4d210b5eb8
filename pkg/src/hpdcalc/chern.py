"""Topological Euler characteristics of complete intersections in products of
projective spaces.

The Chow ring of ``P^{n_1} x ... x P^{n_r}`` is ``Z[h_1..h_r]/(h_i^{n_i+1})``.
For a smooth complete intersection ``X`` cut out by divisors ``D_1..D_c``::

    chi_top(X) = deg( c(T_ambient) / prod(1 + D_j) * prod(D_j) )

where ``deg`` extracts the coefficient of ``h_1^{n_1} ... h_r^{n_r}``. Inverses
``1/(1+D)`` are finite geometric series because ``D`` is nilpotent, so all
arithmetic stays in the integers.

Smoothness (genericity) of the complete intersection is assumed, never checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class AmbientSpec:
    factor_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.factor_dims)
        if not dims:
            raise ValueError("ambient needs at least one factor")
        if any(n < 0 for n in dims):
            raise ValueError(f"negative factor dimension in {dims}")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def dim(self) -> int:
        return sum(self.factor_dims)

    @property
    def rank(self) -> int:
        return len(self.factor_dims)


class TruncatedClass:
    """Sparse element of ``Z[h_1..h_r]/(h_i^{n_i+1})``."""

    __slots__ = ("dims", "coeffs")

    def __init__(self, dims: tuple[int, ...], coeffs: dict[Exponent, int] | None = None):
        self.dims = dims
        self.coeffs: dict[Exponent, int] = {}
        for e, c in (coeffs or {}).items():
            if c and all(a <= n for a, n in zip(e, dims)):
                self.coeffs[e] = self.coeffs.get(e, 0) + c

    @classmethod
    def one(cls, dims):
        return cls(dims, {(0,) * len(dims): 1})

    @classmethod
    def divisor(cls, dims, degree):
        """The class ``sum_i a_i h_i`` of a divisor of multidegree ``degree``."""
        coeffs = {}
        for i, a in enumerate(degree):
            e = [0] * len(dims)
            e[i] = 1
            coeffs[tuple(e)] = a
        return cls(dims, coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedClass(self.dims, {e: c for e, c in out.items() if c})

    def __neg__(self):
        return TruncatedClass(self.dims, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict[Exponent, int] = {}
        for (e1, c1), (e2, c2) in product(self.coeffs.items(), other.coeffs.items()):
            e = tuple(a + b for a, b in zip(e1, e2))
            if all(a <= n for a, n in zip(e, self.dims)):
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedClass(self.dims, {e: c for e, c in out.items() if c})

    def __pow__(self, k: int):
        result = TruncatedClass.one(self.dims)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, TruncatedClass) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedClass({self.coeffs})"

    def inverse_one_plus(self):
        """``1 / (1 + self)`` for nilpotent ``self`` (no constant term)."""
        if (0,) * len(self.dims) in self.coeffs:
            raise ValueError("geometric series needs a class without constant term")
        result = TruncatedClass.one(self.dims)
        term = TruncatedClass.one(self.dims)
        for _ in range(sum(self.dims)):
            term = term * (-self)
            if not term.coeffs:
                break
            result = result + term
        return result

    def degree_part(self, k: int):
        return TruncatedClass(self.dims, {e: c for e, c in self.coeffs.items() if sum(e) == k})

    def integrate(self) -> int:
        return self.coeffs.get(self.dims, 0)


@dataclass(frozen=True)
class CISpec:
    ambient: AmbientSpec
    degrees: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        r = self.ambient.rank
        degs = tuple(tuple(int(a) for a in deg) for deg in self.degrees)
        for deg in degs:
            if len(deg) != r:
                raise ValueError(f"multidegree {deg} does not match {r} ambient factors")
            if any(a < 0 for a in deg) or not any(deg):
                raise ValueError(f"multidegree {deg} must be nonnegative and nonzero")
        if len(degs) > self.ambient.dim:
            raise ValueError(
                f"{len(degs)} equations exceed ambient dimension {self.ambient.dim}"
            )
        object.__setattr__(self, "degrees", degs)

    @property
    def dim(self) -> int:
        return self.ambient.dim - len(self.degrees)


def complete_intersection(factor_dims, degrees) -> CISpec:
    """Convenience constructor; plain integers are promoted to 1-factor degrees."""
    degs = [(d,) if isinstance(d, int) else tuple(d) for d in degrees]
    return CISpec(AmbientSpec(tuple(factor_dims)), tuple(degs))


def total_chern_ambient(dims: tuple[int, ...]) -> TruncatedClass:
    c = TruncatedClass.one(dims)
    for i, n in enumerate(dims):
        h = TruncatedClass.divisor(dims, [1 if j == i else 0 for j in range(len(dims))])
        c = c * (TruncatedClass.one(dims) + h) ** (n + 1)
    return c


def chi_top(spec: CISpec) -> int:
    """Topological Euler characteristic of a smooth complete intersection."""
    dims = spec.ambient.factor_dims
    if not spec.degrees:
        return prod(n + 1 for n in dims)
    c = total_chern_ambient(dims)
    fundamental = TruncatedClass.one(dims)
    for deg in spec.degrees:
        D = TruncatedClass.divisor(dims, deg)
        c = c * D.inverse_one_plus()
        fundamental = fundamental * D
    return (c.degree_part(spec.dim) * fundamental).integrate()


def chi_hypersurface(factor_dims, degree) -> int:
    return chi_top(complete_intersection(factor_dims, [degree]))


def blowup_chi(chi_X: int, chi_Z: int, codim: int) -> int:
    """Euler characteristic of ``Bl_Z X`` from those of ``X`` and ``Z``."""
    if codim < 2:
        raise ValueError(f"blow-up centre needs codimension >= 2, got {codim}")
    return chi_X + (codim - 1) * chi_Z
