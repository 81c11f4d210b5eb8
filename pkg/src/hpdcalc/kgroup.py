"""Grothendieck-group calculus for line bundles on products of projective spaces.

A :class:`KClass` is an integer combination of line-bundle twists
``O(a_1, ..., a_r)``. The Euler pairing is

    chi(O(a), O(b)) = prod_i C(b_i - a_i + n_i, n_i)

(polynomial binomial), extended bilinearly. Mutations act on classes only:

    [L_E F] = [F] - chi(E, F) [E]        [R_E F] = [F] - chi(F, E) [E]

A shift ``E[1]`` has class ``-[E]``; nothing else of the grading survives.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product
from math import prod

from .bott import GradedDims, kunneth, signed_binom

Twist = tuple[int, ...]


def _as_dims(ambient) -> tuple[int, ...]:
    if isinstance(ambient, int):
        return (ambient,)
    dims = getattr(ambient, "factor_dims", ambient)
    return tuple(int(n) for n in dims)


def _as_twist(t) -> Twist:
    return (int(t),) if isinstance(t, int) else tuple(int(a) for a in t)


@dataclass(frozen=True)
class KClass:
    ambient: tuple[int, ...]
    terms: Mapping[Twist, int] = field(default_factory=dict)

    def __post_init__(self):
        dims = _as_dims(self.ambient)
        clean: dict[Twist, int] = {}
        for t, c in dict(self.terms).items():
            t = _as_twist(t)
            if len(t) != len(dims):
                raise ValueError(f"twist {t} does not fit ambient {dims}")
            clean[t] = clean.get(t, 0) + int(c)
        object.__setattr__(self, "ambient", dims)
        object.__setattr__(self, "terms", {t: c for t, c in sorted(clean.items()) if c})

    @classmethod
    def line(cls, ambient, twist, mult: int = 1) -> KClass:
        return cls(_as_dims(ambient), {_as_twist(twist): mult})

    def _check(self, other: KClass) -> None:
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other: KClass) -> KClass:
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return KClass(self.ambient, out)

    def __neg__(self) -> KClass:
        return KClass(self.ambient, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def __rmul__(self, n: int) -> KClass:
        return KClass(self.ambient, {t: n * c for t, c in self.terms.items()})

    def __hash__(self):
        return hash((self.ambient, tuple(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_line(self) -> tuple[Twist, int] | None:
        """``(twist, sign)`` if this is a single line bundle up to shift."""
        if len(self.terms) == 1:
            (t, c), = self.terms.items()
            if c in (1, -1):
                return t, c
        return None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t, c in self.terms.items():
            tw = ",".join(map(str, t))
            coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(f"{coef}[O({tw})]")
        return " + ".join(parts).replace("+ -", "- ")


def _line_pairing(dims: tuple[int, ...], a: Twist, b: Twist) -> int:
    return prod(signed_binom(bi - ai + n, n) for ai, bi, n in zip(a, b, dims))


def euler_pairing(a: KClass, b: KClass) -> int:
    """``chi(a, b) = sum (-1)^q dim Ext^q(a, b)``, bilinear in both slots."""
    a._check(b)
    return sum(
        ca * cb * _line_pairing(a.ambient, ta, tb)
        for (ta, ca), (tb, cb) in product(a.terms.items(), b.terms.items())
    )


def graded_ext(a: Twist, b: Twist, ambient) -> GradedDims:
    """Full table of ``Ext^*(O(a), O(b))`` via Kunneth over the factors."""
    dims = _as_dims(ambient)
    return kunneth((n, 0, bi - ai) for n, ai, bi in zip(dims, a, b))


@dataclass(frozen=True)
class Collection:
    ambient: tuple[int, ...]
    objects: tuple[KClass, ...]

    def __post_init__(self):
        dims = _as_dims(self.ambient)
        objs = tuple(self.objects)
        if not objs:
            raise ValueError("a collection needs at least one object")
        for o in objs:
            if o.ambient != dims:
                raise ValueError(f"object {o} does not live on {dims}")
        object.__setattr__(self, "ambient", dims)
        object.__setattr__(self, "objects", objs)

    @classmethod
    def of_twists(cls, ambient, twists: Iterable) -> Collection:
        dims = _as_dims(ambient)
        return cls(dims, tuple(KClass.line(dims, t) for t in twists))

    def __len__(self):
        return len(self.objects)

    def __getitem__(self, t):
        return self.objects[t]

    def replace(self, objects: Sequence[KClass]) -> Collection:
        return Collection(self.ambient, tuple(objects))


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, st):
        s, t = st
        return self.entries[s][t]

    def __len__(self):
        return len(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def is_unitriangular(self) -> bool:
        return first_gram_violation(self) is None


def gram_matrix(c: Collection) -> GramMatrix:
    objs = c.objects
    return GramMatrix(tuple(tuple(euler_pairing(a, b) for b in objs) for a in objs))


def first_gram_violation(g: GramMatrix):
    """First ``(s, t, value)`` (0-based) breaking unit upper-triangularity."""
    n = len(g)
    for s in range(n):
        if g[s, s] != 1:
            return s, s, g[s, s]
    for t in range(n):
        for s in range(t + 1, n):
            if g[s, t] != 0:
                return s, t, g[s, t]
    return None


@dataclass(frozen=True)
class Violation:
    layer: str  # "numerical" or "graded"
    pair: tuple[int, int]  # 1-based positions (earlier, later)
    detail: str


@dataclass(frozen=True)
class ExceptionalityReport:
    passed: bool
    violations: tuple[Violation, ...] = ()
    graded_checked: bool = False

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __bool__(self):
        return self.passed


def is_exceptional_collection(c: Collection) -> ExceptionalityReport:
    """Two-layer check.

    The numerical layer asks the Gram matrix to be unit upper-triangular and
    applies to any classes. The graded layer only runs when every object is a
    single line bundle (up to shift): it requires ``Ext^*(E_s, E_s) = C`` in
    degree 0 and ``Ext^*(E_s, E_t) = 0`` for ``s > t``.

    Violations are reported with 1-based positions ``(earlier, later)``.
    """
    violations: list[Violation] = []
    g = gram_matrix(c)
    n = len(c)
    for s in range(n):
        if g[s, s] != 1:
            violations.append(Violation("numerical", (s + 1, s + 1), f"chi(E,E) = {g[s, s]}"))
    for t in range(n):
        for s in range(t + 1, n):
            if g[s, t] != 0:
                violations.append(
                    Violation("numerical", (t + 1, s + 1), f"lower-triangle entry {g[s, t]}")
                )

    lines = [o.as_line() for o in c.objects]
    graded = all(x is not None for x in lines)
    if graded:
        for s in range(n):
            ts = lines[s][0]
            diag = graded_ext(ts, ts, c.ambient)
            if diag != {0: 1}:
                violations.append(Violation("graded", (s + 1, s + 1), f"Ext(E,E) = {diag.to_dict()}"))
            for t in range(s):
                below = graded_ext(ts, lines[t][0], c.ambient)
                if below:
                    violations.append(
                        Violation("graded", (t + 1, s + 1), f"Ext(later, earlier) = {below.to_dict()}")
                    )
    return ExceptionalityReport(not violations, tuple(violations), graded)


def left_mutate(c: Collection, t: int) -> Collection:
    """Mutate ``object_t`` leftwards through ``object_{t-1}``; the pair swaps."""
    if not 1 <= t < len(c):
        raise IndexError(f"left mutation index {t} outside [1, {len(c) - 1}]")
    E, F = c[t - 1], c[t]
    objs = list(c.objects)
    objs[t - 1] = F - euler_pairing(E, F) * E
    objs[t] = E
    return c.replace(objs)


def right_mutate(c: Collection, t: int) -> Collection:
    """Mutate ``object_t`` rightwards through ``object_{t+1}``; the pair swaps."""
    if not 0 <= t < len(c) - 1:
        raise IndexError(f"right mutation index {t} outside [0, {len(c) - 2}]")
    F, E = c[t], c[t + 1]
    objs = list(c.objects)
    objs[t] = E
    objs[t + 1] = F - euler_pairing(F, E) * E
    return c.replace(objs)


def mutation_matrix(g: GramMatrix, t: int, side: str = "left") -> list[list[int]]:
    """Integer base change ``M`` with ``new_classes = M @ old_classes``.

    Reads the pairing it needs from ``g``, so ``M g M^T`` predicts the Gram
    matrix of the mutated collection without recomputing any pairing.
    """
    n = len(g)
    M = [[int(r == c) for c in range(n)] for r in range(n)]
    if side == "left":
        if not 1 <= t < n:
            raise IndexError(t)
        M[t - 1] = [0] * n
        M[t - 1][t] = 1
        M[t - 1][t - 1] = -g[t - 1, t]
        M[t] = [0] * n
        M[t][t - 1] = 1
    elif side == "right":
        if not 0 <= t < n - 1:
            raise IndexError(t)
        M[t] = [0] * n
        M[t][t + 1] = 1
        M[t + 1] = [0] * n
        M[t + 1][t] = 1
        M[t + 1][t + 1] = -g[t, t + 1]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return M


def transform_gram(g: GramMatrix, M: list[list[int]]) -> GramMatrix:
    n = len(g)
    GM = [[sum(g[s, u] * M[t][u] for u in range(n)) for t in range(n)] for s in range(n)]
    return GramMatrix(
        tuple(tuple(sum(M[s][u] * GM[u][t] for u in range(n)) for t in range(n)) for s in range(n))
    )


def beilinson_basis(ambient) -> list[Twist]:
    """Twists ``0 <= a_i <= n_i`` in lexicographic order (a full exceptional basis)."""
    dims = _as_dims(ambient)
    return [tuple(t) for t in product(*(range(n + 1) for n in dims))]


def beilinson_coordinates(x: KClass) -> list[int]:
    """Coordinates of ``x`` in the Beilinson basis.

    Solved from ``chi(x, O(b)) = sum_a x_a chi(O(a), O(b))``; the Gram matrix of
    the basis is unit upper-triangular so back-substitution stays integral.
    """
    basis = beilinson_basis(x.ambient)
    B = [KClass.line(x.ambient, b) for b in basis]
    coords: list[int] = []
    for s, b in enumerate(B):
        v = euler_pairing(x, b)
        coords.append(v - sum(coords[j] * euler_pairing(B[j], b) for j in range(s)))
    return coords


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF of an integer matrix, zero rows dropped."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: list[list[int]] = []
    col = 0
    while A and col < ncols:
        nz = [r for r in A if r[col] != 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(ncols):
                    r[j] -= q * piv[j]
            nz = [r for r in nz if r[col] != 0]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-v for v in piv]
        A = [r for r in A if r is not piv and any(r)]
        for prev in out:
            q = prev[col] // piv[col]
            if q:
                for j in range(ncols):
                    prev[j] -= q * piv[j]
        out.append(piv)
        col += 1
    return out


def lattice_hnf(classes: Iterable[KClass]) -> list[list[int]]:
    """HNF of the integer span of ``classes`` in Beilinson coordinates."""
    return hermite_normal_form([beilinson_coordinates(x) for x in classes])
