"""Ext groups between line bundles on the universal hyperplane section.

Geometry: ``X = P^m`` polarised by ``O_X(1) = O(d)``, a linear system
``L`` of dimension ``ell`` and the incidence divisor

    H_L  of bidegree (d, 1)  inside  P^m x P^{ell-1}.

Restriction to a divisor gives the triangle ``O(-d,-1) -> O -> O_{H_L}``, so

    RHom_{H_L}(O(a), O(b)) = Cone( RG(O(b-a-(d,1))) -> RG(O(b-a)) )

with both terms computed by Kunneth on the product. The connecting map is never
computed: if one term vanishes the answer is determined, otherwise it is
reported as an honest two-term complex.

All twists here are raw bidegrees ``(u, v)``. Lefschetz coordinates
``A(alpha, beta)`` enter through :func:`box_twist`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .bott import GradedDims, chi_line, kunneth, line_cohomology


@dataclass(frozen=True)
class DivisorGeometry:
    m: int
    d: int
    ell: int

    def __post_init__(self):
        if self.m < 0 or self.d < 1 or not 1 <= self.ell <= self.m + 1:
            raise ValueError(
                f"need m >= 0, d >= 1, 1 <= ell <= m+1; got (m, d, ell) = "
                f"({self.m}, {self.d}, {self.ell})"
            )

    @property
    def dim(self) -> int:
        """Dimension of ``H_L``."""
        return self.m + self.ell - 2


class Bidegree(NamedTuple):
    u: int
    v: int

    def __add__(self, other):
        return Bidegree(self.u + other[0], self.v + other[1])

    def __sub__(self, other):
        return Bidegree(self.u - other[0], self.v - other[1])


@dataclass(frozen=True)
class ExtAnswer:
    """Result of :func:`ext_on_divisor`.

    ``table`` is set when the cone is determined; otherwise it is ``None`` and
    the complex ``term_before -> term_after`` is all we know.
    """

    table: GradedDims | None
    term_before: GradedDims
    term_after: GradedDims
    euler: int

    @property
    def determined(self) -> bool:
        return self.table is not None

    @property
    def both_terms_empty(self) -> bool:
        return not self.term_before and not self.term_after

    @property
    def vanishes(self) -> bool:
        return self.table is not None and not self.table


def _product_rg(g: DivisorGeometry, u: int, v: int) -> GradedDims:
    return kunneth([(g.m, 0, u), (g.ell - 1, 0, v)])


@lru_cache(maxsize=None)
def ext_on_divisor(g: DivisorGeometry, source, target) -> ExtAnswer:
    """``RHom_{H_L}(O(source), O(target))`` through the restriction cone."""
    du, dv = target[0] - source[0], target[1] - source[1]
    before = _product_rg(g, du - g.d, dv - 1)
    after = _product_rg(g, du, dv)
    euler = after.euler - before.euler
    if not before:
        table = after
    elif not after:
        # Cone(X -> 0) = X[1]
        table = before.shift(-1)
    else:
        table = None
    return ExtAnswer(table, before, after, euler)


def chi_on_divisor(g: DivisorGeometry, source, target) -> int:
    """Euler pairing on ``H_L`` from the polynomial Koszul formula alone.

    Does not touch any cohomology table; used as an independent check on
    ``ext_on_divisor(...).euler``.
    """
    du, dv = target[0] - source[0], target[1] - source[1]
    n2 = g.ell - 1
    return chi_line(g.m, du) * chi_line(n2, dv) - chi_line(g.m, du - g.d) * chi_line(n2, dv - 1)


def box_twist(g: DivisorGeometry, alpha: int, beta: int, s: int = 0) -> Bidegree:
    """Raw bidegree of generator ``O(s)`` of ``A(alpha, beta)``."""
    return Bidegree(s + alpha * g.d, beta)


def box_ext(g: DivisorGeometry, src: tuple[int, int], dst: tuple[int, int]) -> list[ExtAnswer]:
    """``RHom(A(src), A(dst))`` over all generator pairs ``(s, s')``."""
    return [
        ext_on_divisor(g, box_twist(g, *src, s), box_twist(g, *dst, t))
        for s in range(g.d)
        for t in range(g.d)
    ]


def boxes_orthogonal(g: DivisorGeometry, src, dst) -> bool:
    """True when every generator pair has both Kunneth terms empty."""
    return all(a.both_terms_empty for a in box_ext(g, tuple(src), tuple(dst)))


@dataclass(frozen=True)
class VanishingEntry:
    case: str
    alpha: int
    beta: int
    s: int
    s_prime: int
    passed: bool


@dataclass(frozen=True)
class VanishingReport:
    geometry: DivisorGeometry
    i: int
    entries: tuple[VanishingEntry, ...]
    skipped: tuple[tuple[str, str], ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[VanishingEntry]:
        return [e for e in self.entries if not e.passed]


def _lemma_cases(i: int, ell: int):
    """Yield ``(case, alpha, beta)`` and collect skipped cases.

    The two interior cases vanish for every value of the free coordinate; it is
    swept over one full period of twist differences on each side.
    """
    boxes: list[tuple[str, int, int]] = []
    skipped: list[tuple[str, str]] = []
    interior_alpha = list(range(1, i - 1))
    interior_beta = list(range(1, ell - 1))
    if not interior_alpha:
        skipped.append(("0<alpha<i-1", "empty range"))
    for a in interior_alpha:
        for b in range(1 - ell, ell):
            boxes.append(("0<alpha<i-1", a, b))
    if not interior_beta:
        skipped.append(("0<beta<ell-1", "empty range"))
    for b in interior_beta:
        for a in range(1 - i, i):
            boxes.append(("0<beta<ell-1", a, b))
    # The corner cases need a second row and a second column: for i = 1 or
    # ell = 1 the corner is either the diagonal block or carries a nonzero Hom.
    if i >= 2 and ell >= 2:
        boxes.append(("alpha=0,beta=ell-1", 0, ell - 1))
        boxes.append(("alpha=i-1,beta=0", i - 1, 0))
    else:
        skipped.append(("alpha=0,beta=ell-1", "needs i >= 2 and ell >= 2"))
        skipped.append(("alpha=i-1,beta=0", "needs i >= 2 and ell >= 2"))
    return boxes, skipped


def lemma_vanishing_table(g: DivisorGeometry, i: int) -> VanishingReport:
    """Check ``RHom(A(alpha, beta), A) = 0`` on each of the four vanishing cases.

    An entry passes only if both Kunneth terms of the cone are empty (the strong
    form of vanishing, independent of the connecting map).
    """
    if g.d * i != g.m + 1:
        raise ValueError(
            f"non-rectangular data: d*i = {g.d}*{i} != m+1 = {g.m + 1}; "
            "the vanishing table needs a rectangular Lefschetz decomposition"
        )
    boxes, skipped = _lemma_cases(i, g.ell)
    entries = []
    for case, a, b in boxes:
        for s in range(g.d):
            for t in range(g.d):
                ans = ext_on_divisor(g, box_twist(g, a, b, s), box_twist(g, 0, 0, t))
                entries.append(VanishingEntry(case, a, b, s, t, ans.both_terms_empty))
    return VanishingReport(g, i, tuple(entries), tuple(skipped))


def canonical_twist(g: DivisorGeometry) -> Bidegree:
    """Bidegree of ``omega_{H_L}`` by adjunction: ``O(-m-1, -ell) + O(d, 1)``."""
    return Bidegree(g.d - g.m - 1, 1 - g.ell)


def fiber_vanishing(ell: int, k: int) -> bool:
    """Whether ``RG(P^{ell-1}, O(-k)) = 0`` (true exactly for ``1 <= k <= ell-1``)."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return not line_cohomology(ell - 1, -k)
