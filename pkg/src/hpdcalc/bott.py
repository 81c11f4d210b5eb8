"""Cohomology of line bundles and twisted differential forms on projective space.

Everything here is a pure function of small integers. Tables are returned as
:class:`GradedDims`, i.e. ``{q: dim H^q}`` in cohomological grading with zero
entries dropped. A shift ``C[-j]`` is therefore stored as ``{j: 1}``.

The closed form used for ``H^q(P^n, Omega^p(k))`` is Bott's formula::

    q = 0, k > p         C(k+n-p, k) * C(k-1, p)
    q = p, k = 0         1
    q = n, k < p - n     C(-k+p, -k) * C(-k-1, n-p)

and zero in every other case.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from itertools import product
from math import comb, factorial, prod


def binom(a: int, b: int) -> int:
    """Ordinary binomial, zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def signed_binom(a: int, b: int) -> int:
    """Polynomial binomial ``a (a-1) ... (a-b+1) / b!`` for any integer ``a``."""
    if b < 0:
        return 0
    return prod(a - j for j in range(b)) // factorial(b)


class GradedDims(Mapping):
    """Finitely supported map ``degree -> positive dimension``.

    Behaves as a read-only mapping; missing degrees read as absent (use
    ``get(q, 0)``). Compares equal to plain dicts with the same nonzero entries.
    """

    __slots__ = ("_data",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: dict[int, int] = {}
        for q, dim in items:
            if dim < 0:
                raise ValueError(f"negative dimension {dim} in degree {q}")
            if dim:
                data[int(q)] = data.get(int(q), 0) + int(dim)
        self._data = dict(sorted(data.items()))

    def __getitem__(self, q: int) -> int:
        return self._data[q]

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {q: d for q, d in other.items() if d}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __repr__(self):
        return f"GradedDims({self._data})"

    @property
    def euler(self) -> int:
        return sum((-1) ** q * d for q, d in self._data.items())

    @property
    def total(self) -> int:
        """Sum of all dimensions (zero iff the table is empty)."""
        return sum(self._data.values())

    def shift(self, j: int) -> GradedDims:
        """Move every entry from degree ``q`` to ``q + j``."""
        return GradedDims({q + j: d for q, d in self._data.items()})

    def tensor(self, other: GradedDims) -> GradedDims:
        out: dict[int, int] = {}
        for (q1, d1), (q2, d2) in product(self._data.items(), other._data.items()):
            out[q1 + q2] = out.get(q1 + q2, 0) + d1 * d2
        return GradedDims(out)

    def to_dict(self) -> dict[int, int]:
        return dict(self._data)


POINT = GradedDims({0: 1})


def _check_dim(n: int) -> None:
    if n < 0:
        raise ValueError(f"projective dimension must be >= 0, got {n}")


def line_cohomology(n: int, k: int) -> GradedDims:
    """Table of ``H^q(P^n, O(k))``."""
    _check_dim(n)
    if n == 0:
        return POINT
    if k >= 0:
        return GradedDims({0: comb(k + n, n)})
    if k <= -n - 1:
        return GradedDims({n: comb(-k - 1, n)})
    return GradedDims()


def omega_cohomology(n: int, p: int, k: int) -> GradedDims:
    """Table of ``H^q(P^n, Omega^p(k))`` by Bott's formula."""
    _check_dim(n)
    if not 0 <= p <= n:
        raise ValueError(f"form degree p={p} outside [0, {n}]")
    if k > p:
        return GradedDims({0: binom(k + n - p, k) * binom(k - 1, p)})
    if k == 0:
        return GradedDims({p: 1})
    if k < p - n:
        return GradedDims({n: binom(-k + p, -k) * binom(-k - 1, n - p)})
    return GradedDims()


def kunneth(factors: Iterable[tuple[int, int, int]]) -> GradedDims:
    """Cohomology of an external tensor product ``Omega^{p_1}(k_1) x ... ``.

    ``factors`` is a sequence of ``(n_i, p_i, k_i)``; the empty product is a point.
    """
    table = POINT
    for n, p, k in factors:
        table = table.tensor(omega_cohomology(n, p, k))
    return table


def chi_line(n: int, k: int) -> int:
    """Euler characteristic of ``O(k)`` on ``P^n`` as the polynomial ``C(k+n, n)``."""
    _check_dim(n)
    return signed_binom(k + n, n)
