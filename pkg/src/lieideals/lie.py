"""Lie algebras given by structure constants, and their structural invariants.

The bracket on basis vectors is ``[e_i, e_j] = sum_k c[i][j][k] e_k``.  Subspaces
of the algebra are :class:`~lieideals.exactnum.Subspace` objects in the
coordinates of that basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exactnum import (
    DimensionMismatch,
    IntEchelon,
    SparseOp,
    Subspace,
    determinant,
    integral,
    kernel,
    rank,
    spin,
    to_vector,
    unit_vector,
    zero_vector,
)


class InvalidAlgebra(ValueError):
    """Raised when structure constants violate antisymmetry or Jacobi."""

    def __init__(self, violations):
        self.violations = list(violations)
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"not a Lie algebra: {shown}{more}")


class NotAnIdeal(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry" | "jacobi"
    indices: tuple

    def __str__(self):
        return f"{self.kind} at {self.indices}"


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    ``table`` maps index pairs ``(i, j)`` to the coordinate vector of
    ``[e_i, e_j]``.  Pass only ``i < j`` pairs and set ``complete=True`` to have
    the antisymmetric half filled in; otherwise the table is taken literally.
    """

    def __init__(
        self,
        dim: int,
        table: Mapping[tuple[int, int], Sequence] | None = None,
        basis_names: Sequence[str] | None = None,
        complete: bool = True,
        check: bool = True,
    ):
        self.dim = dim
        names = tuple(basis_names) if basis_names is not None else tuple(f"e{i}" for i in range(dim))
        if len(names) != dim or len(set(names)) != dim:
            raise ValueError("basis_names must be dim distinct labels")
        self.basis_names = names
        tab: dict[tuple[int, int], tuple] = {}
        for (i, j), vec in (table or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i}, {j}) out of range")
            v = to_vector(vec)
            if len(v) != dim:
                raise DimensionMismatch(f"bracket [{i},{j}] has {len(v)} coordinates, expected {dim}")
            if any(v):
                tab[(i, j)] = v
                if complete:
                    if i == j:
                        raise InvalidAlgebra([Violation("antisymmetry", (i, j))])
                    tab[(j, i)] = tuple(-x for x in v)
        self._table = tab
        if check:
            problems = validate(self)
            if problems:
                raise InvalidAlgebra(problems)

    @classmethod
    def from_tensor(cls, c, basis_names=None, check=True) -> "LieAlgebra":
        n = len(c)
        table = {(i, j): c[i][j] for i in range(n) for j in range(n) if any(c[i][j])}
        return cls(n, table, basis_names, complete=False, check=check)

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls(n)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.basis_names == other.basis_names
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.dim, self.basis_names, frozenset(self._table.items())))

    # -- bracket -------------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> tuple:
        return self._table.get((i, j), zero_vector(self.dim))

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        out = [Fraction(0)] * n
        for (i, j), v in self._table.items():
            xi = x[i]
            if xi:
                yj = y[j]
                if yj:
                    f = xi * yj
                    for k, c in enumerate(v):
                        if c:
                            out[k] += f * c
        return tuple(out)

    def structure_constants(self) -> list:
        n = self.dim
        return [[list(self.basis_bracket(i, j)) for j in range(n)] for i in range(n)]

    def nonzero_brackets(self):
        return dict(self._table)

    def ad(self, x: Sequence) -> list:
        """Matrix of ad x: column j holds [x, e_j]."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in self._table.items():
            xi = x[i]
            if xi:
                for k, c in enumerate(v):
                    if c:
                        m[k][j] += xi * c
        return m

    def ad_basis(self, i: int) -> list:
        return self.ad(unit_vector(self.dim, i))

    # -- cached helpers for spinning ------------------------------------------

    @cached_property
    def _int_ads(self) -> tuple:
        return tuple(SparseOp(self.ad_basis(i)) for i in range(self.dim))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Basis indices generating the algebra; invariance under their ad suffices for ideals."""
        n = self.dim
        gens: list[int] = []
        sub = IntEchelon(n)
        for i in range(n):
            e = [0] * n
            e[i] = 1
            if sub.contains(e):
                continue
            gens.append(i)
            ops = [self._int_ads[g] for g in gens]
            sub = spin([unit_int(n, g) for g in gens], ops, n)
            if sub.dim == n:
                break
        return tuple(gens)

    @cached_property
    def generator_ops(self) -> tuple:
        return tuple(self._int_ads[g] for g in self.generators)

    # -- subspaces -----------------------------------------------------------

    def whole(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    def subspace(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(vectors, self.dim)

    def vector(self, **coeffs) -> tuple:
        """Vector from basis-name keywords, e.g. ``L.vector(h=1, e=2)``."""
        v = [Fraction(0)] * self.dim
        for name, c in coeffs.items():
            v[self.basis_names.index(name)] = Fraction(c)
        return tuple(v)

    def span_of(self, *names: str) -> Subspace:
        return Subspace.coordinate(self.dim, [self.basis_names.index(n) for n in names])


def unit_int(n: int, i: int) -> list[int]:
    e = [0] * n
    e[i] = 1
    return e


# ----------------------------------------------------------------------------
# validation


def validate(L: LieAlgebra) -> list[Violation]:
    """Antisymmetry and Jacobi violations on basis triples (empty means valid)."""
    n = L.dim
    out: list[Violation] = []
    for i in range(n):
        if any(L.basis_bracket(i, i)):
            out.append(Violation("antisymmetry", (i, i)))
        for j in range(i + 1, n):
            a, b = L.basis_bracket(i, j), L.basis_bracket(j, i)
            if any(x + y for x, y in zip(a, b)):
                out.append(Violation("antisymmetry", (i, j)))
    if out:
        return out
    for i in range(n):
        ei = unit_vector(n, i)
        for j in range(i + 1, n):
            ej = unit_vector(n, j)
            eij = L.basis_bracket(i, j)
            for k in range(j + 1, n):
                ek = unit_vector(n, k)
                s1 = L.bracket(eij, ek)
                s2 = L.bracket(L.basis_bracket(j, k), ei)
                s3 = L.bracket(L.basis_bracket(k, i), ej)
                if any(a + b + c for a, b, c in zip(s1, s2, s3)):
                    out.append(Violation("jacobi", (i, j, k)))
    return out


# ----------------------------------------------------------------------------
# products of subspaces, ideals


def _check_sub(L: LieAlgebra, *subs: Subspace):
    for s in subs:
        if s.ambient_dim != L.dim:
            raise DimensionMismatch(f"subspace of Q^{s.ambient_dim} in a {L.dim}-dim algebra")


def bracket_spaces(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """Span of all [a, b] with a in A, b in B."""
    _check_sub(L, A, B)
    ech = IntEchelon(L.dim)
    for a in A.basis:
        for b in B.basis:
            v = L.bracket(a, b)
            if any(v):
                ech.add(integral(v))
    return ech.subspace()


def derived_algebra(L: LieAlgebra) -> Subspace:
    return bracket_spaces(L, L.whole(), L.whole())


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """L, L^(1), L^(2), ... until the series stabilises (last term repeated once removed)."""
    series = [L.whole()]
    while True:
        nxt = bracket_spaces(L, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.is_zero():
            return series


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    series = [L.whole()]
    while True:
        nxt = bracket_spaces(L, L.whole(), series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.is_zero():
            return series


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].is_zero()


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].is_zero()


def subspace_is_solvable(L: LieAlgebra, A: Subspace) -> bool:
    cur = A
    while not cur.is_zero():
        nxt = bracket_spaces(L, cur, cur)
        if nxt == cur:
            return False
        cur = nxt
    return True


def centralizer(L: LieAlgebra, A: Subspace) -> Subspace:
    """{x in L : [x, A] = 0}."""
    _check_sub(L, A)
    n = L.dim
    if A.is_zero():
        return L.whole()
    rows = []
    for a in A.basis:
        # [x, a] = -ad(a) x, so the equations are the rows of ad(a)
        rows.extend(L.ad(a))
    return kernel(rows, n)


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, L.whole())


def is_ideal(L: LieAlgebra, A: Subspace) -> bool:
    _check_sub(L, A)
    ints = [integral(a) for a in A.basis]
    ech = IntEchelon(L.dim, ints)
    for op in L.generator_ops:
        for a in ints:
            if not ech.contains(op(a)):
                return False
    return True


def ideal_closure(L: LieAlgebra, A: Subspace | Iterable[Sequence]) -> Subspace:
    """Smallest ideal containing A."""
    vectors = A.basis if isinstance(A, Subspace) else list(A)
    return spin(vectors, L.generator_ops, L.dim).subspace()


def ideal_generated(L: LieAlgebra, vectors: Iterable[Sequence], start: Subspace | None = None) -> Subspace:
    base = IntEchelon(L.dim, [integral(v) for v in start.basis]) if start is not None else None
    return spin(list(vectors), L.generator_ops, L.dim, start=base).subspace()


# ----------------------------------------------------------------------------
# Killing form, radicals


def killing_form(L: LieAlgebra) -> list:
    n = L.dim
    ads = [L.ad_basis(i) for i in range(n)]
    sparse = [[(k, l, x) for k, row in enumerate(m) for l, x in enumerate(row) if x] for m in ads]
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            b = ads[j]
            # trace(ad_i ad_j) = sum_{k,l} ad_i[k][l] ad_j[l][k]
            t = sum((x * b[l][k] for k, l, x in sparse[i] if b[l][k]), Fraction(0))
            form[i][j] = form[j][i] = t
    return form


def is_semisimple(L: LieAlgebra) -> bool:
    """Nonzero with nondegenerate Killing form."""
    if L.dim == 0:
        return False
    return determinant(killing_form(L)) != 0


def solvable_radical(L: LieAlgebra) -> Subspace:
    """Rad(L) as the Killing-orthogonal complement of [L, L]."""
    n = L.dim
    kappa = killing_form(L)
    d = derived_algebra(L)
    rows = [[sum((y[j] * kappa[i][j] for j in range(n) if y[j]), Fraction(0)) for i in range(n)] for y in d.basis]
    rad = kernel(rows, n) if rows else L.whole()
    if not is_ideal(L, rad) or not subspace_is_solvable(L, rad):
        raise AssertionError("Killing-orthogonal of L^2 is not a solvable ideal")
    if not rad.is_full():
        Q, _ = quotient(L, rad)
        if not is_semisimple(Q):
            raise AssertionError("L/Rad(L) is not semisimple")
    return rad


def jacobson_radical(L: LieAlgebra, rad: Subspace | None = None) -> Subspace:
    """[L, Rad(L)]; checks Rad^2 <= J = Rad ∩ L^2 <= Rad."""
    if rad is None:
        rad = solvable_radical(L)
    jac = bracket_spaces(L, L.whole(), rad)
    rad2 = bracket_spaces(L, rad, rad)
    if not (rad2 <= jac and jac == (rad & derived_algebra(L)) and jac <= rad):
        raise AssertionError("radical chain Rad^2 <= J = Rad ∩ L^2 failed")
    return jac


def semisimple_socle(L: LieAlgebra, rad: Subspace | None = None) -> Subspace:
    """Sum of the simple ideals: the perfect core of C_L(Rad(L))."""
    if rad is None:
        rad = solvable_radical(L)
    cur = centralizer(L, rad)
    while True:
        nxt = bracket_spaces(L, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt


# ----------------------------------------------------------------------------
# quotients and direct sums


@dataclass(frozen=True)
class QuotientMap:
    """Projection L -> L/I using the non-pivot coordinates of I as complement."""

    ideal: Subspace
    complement: tuple[int, ...]

    def project(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.complement)

    def lift(self, w: Sequence) -> tuple:
        n = self.ideal.ambient_dim
        v = [Fraction(0)] * n
        for c, x in zip(self.complement, w):
            v[c] = Fraction(x)
        return tuple(v)

    def pullback(self, sub: Subspace) -> Subspace:
        n = self.ideal.ambient_dim
        return Subspace.span([self.lift(w) for w in sub.basis] + list(self.ideal.basis), n)

    def image(self, sub: Subspace) -> Subspace:
        return Subspace.span([self.project(v) for v in sub.basis], len(self.complement))


def quotient(L: LieAlgebra, I: Subspace) -> tuple[LieAlgebra, QuotientMap]:
    _check_sub(L, I)
    if not is_ideal(L, I):
        raise NotAnIdeal("cannot take the quotient by a non-ideal")
    piv = set(I.pivots)
    comp = tuple(c for c in range(L.dim) if c not in piv)
    qmap = QuotientMap(I, comp)
    table = {}
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            v = qmap.project(L.basis_bracket(comp[a], comp[b]))
            if any(v):
                table[(a, b)] = v
    Q = LieAlgebra(len(comp), table, [L.basis_names[c] for c in comp])
    return Q, qmap


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, names: Sequence[str] | None = None) -> LieAlgebra:
    n1, n = L1.dim, L1.dim + L2.dim
    if names is None:
        names = list(L1.basis_names) + list(L2.basis_names)
        if len(set(names)) != n:
            names = [f"{x}.1" for x in L1.basis_names] + [f"{x}.2" for x in L2.basis_names]
    table = {}
    for (i, j), v in L1.nonzero_brackets().items():
        if i < j:
            table[(i, j)] = tuple(v) + zero_vector(L2.dim)
    for (i, j), v in L2.nonzero_brackets().items():
        if i < j:
            table[(n1 + i, n1 + j)] = zero_vector(n1) + tuple(v)
    return LieAlgebra(n, table, names, check=False)


def embed_first(L1: LieAlgebra, L2: LieAlgebra, A: Subspace) -> Subspace:
    return Subspace.span([tuple(v) + zero_vector(L2.dim) for v in A.basis], L1.dim + L2.dim)


def embed_second(L1: LieAlgebra, L2: LieAlgebra, A: Subspace) -> Subspace:
    return Subspace.span([zero_vector(L1.dim) + tuple(v) for v in A.basis], L1.dim + L2.dim)


# ----------------------------------------------------------------------------
# structure report and typing


EST1_TYPES = ("I", "II", "III", "IV", "reductive", "nonfaithful", "not-finite")


@dataclass(frozen=True)
class StructureReport:
    derived_series: tuple
    lower_central: tuple
    derived: Subspace
    center: Subspace
    rad: Subspace
    jac: Subspace
    ssoc: Subspace
    centralizer_of_derived: Subspace
    is_solvable: bool
    is_nilpotent: bool
    is_semisimple: bool
    general_est1_type: str
    extra: dict = field(default_factory=dict, compare=False)

    def summary(self) -> dict:
        return {
            "dim": self.rad.ambient_dim,
            "dim_derived": self.derived.dim,
            "dim_center": self.center.dim,
            "dim_rad": self.rad.dim,
            "dim_jacobson": self.jac.dim,
            "dim_ssoc": self.ssoc.dim,
            "derived_series_dims": [s.dim for s in self.derived_series],
            "lower_central_dims": [s.dim for s in self.lower_central],
            "solvable": self.is_solvable,
            "nilpotent": self.is_nilpotent,
            "semisimple": self.is_semisimple,
            "type": self.general_est1_type,
        }


def _classify(L, d2, z, rad, jac, ssoc, cl2, solvable) -> str:
    full = L.whole()
    if jac.is_zero():
        return "reductive"
    if not ssoc.is_zero():
        return "nonfaithful"
    if d2 == full:
        return "I" if rad == jac else "not-finite"
    if d2.dim == L.dim - 1:
        if z.dim == 1 and (d2 + z) == full and bracket_spaces(L, d2, d2) == d2:
            return "II"
        if not solvable and cl2 <= jac:
            return "III"
        if solvable and d2 == jac and cl2 <= jac:
            return "IV"
    return "not-finite"


def structure_report(L: LieAlgebra) -> StructureReport:
    ds = derived_series(L)
    lc = lower_central_series(L)
    d2 = ds[1] if len(ds) > 1 else ds[0]
    z = center(L)
    rad = solvable_radical(L)
    jac = jacobson_radical(L, rad)
    ssoc = semisimple_socle(L, rad)
    cl2 = centralizer(L, d2)
    solvable = ds[-1].is_zero()
    return StructureReport(
        derived_series=tuple(ds),
        lower_central=tuple(lc),
        derived=d2,
        center=z,
        rad=rad,
        jac=jac,
        ssoc=ssoc,
        centralizer_of_derived=cl2,
        is_solvable=solvable,
        is_nilpotent=lc[-1].is_zero(),
        is_semisimple=L.dim > 0 and rad.is_zero(),
        general_est1_type=_classify(L, d2, z, rad, jac, ssoc, cl2, solvable),
    )


def general_est1_type(L: LieAlgebra) -> str:
    return structure_report(L).general_est1_type


def induced_map_on_quotient(L: LieAlgebra, x: Sequence, J: Subspace, K: Subspace) -> list:
    """Matrix of ad x acting on J/K (K <= J, both ad x-stable)."""
    comp = section_basis(J, K)
    if not comp:
        return []
    sec = Subspace(L.dim, tuple(comp))
    cols = [sec.coordinates(K.reduce(L.bracket(x, c))) for c in comp]
    m = len(comp)
    return [[cols[j][i] for j in range(m)] for i in range(m)]


def section_basis(J: Subspace, K: Subspace) -> list:
    """RREF basis of a complement of K in J with zeros at K's pivot columns."""
    return list(Subspace.span([K.reduce(v) for v in J.basis], J.ambient_dim).basis)


__all__ = [
    "InvalidAlgebra",
    "NotAnIdeal",
    "LieAlgebra",
    "Violation",
    "validate",
    "bracket_spaces",
    "derived_algebra",
    "derived_series",
    "lower_central_series",
    "is_solvable",
    "is_nilpotent",
    "centralizer",
    "center",
    "is_ideal",
    "ideal_closure",
    "killing_form",
    "is_semisimple",
    "solvable_radical",
    "jacobson_radical",
    "semisimple_socle",
    "quotient",
    "QuotientMap",
    "direct_sum",
    "structure_report",
    "StructureReport",
    "general_est1_type",
    "rank",
]
