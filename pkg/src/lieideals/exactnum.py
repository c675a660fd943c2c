"""Exact rational linear algebra.

Everything here works over the rationals with :class:`fractions.Fraction`.
Subspaces are stored in reduced row-echelon form with zero rows dropped, so two
subspaces are equal exactly when their stored bases are identical.  That makes
:class:`Subspace` hashable and lets ideal lattices be built from plain sets.

A second, fraction-free code path (:class:`IntEchelon` and :func:`spin`) is used
in the hot loops that only care about spans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence

Vector = tuple  # tuple of Fraction
Matrix = list  # list of rows


class DimensionMismatch(ValueError):
    pass


# --------------------------------------------------------------------------
# scalars


def parse_rational(value) -> Fraction:
    """Read ``3``, ``"3"``, ``"-2/5"`` or a Fraction as an exact rational."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as a rational")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def is_zero(v: Sequence) -> bool:
    return not any(v)


# --------------------------------------------------------------------------
# matrices (lists of rows)


def identity(n: int) -> Matrix:
    return [list(unit_vector(n, i)) for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k in range(inner):
            rk = row[k]
            if rk:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += rk * bk[j]
        out.append(acc)
    return out


def mat_vec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def mat_add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form of ``m`` and its pivot columns.

    The returned matrix has the same shape as ``m``; zero rows end up at the
    bottom.  ``ncols`` is only needed when ``m`` has no rows.
    """
    rows = [[Fraction(x) for x in r] for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [x - f * y if y else x for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
    return rows, tuple(pivots)


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(m, ncols)[1])


def determinant(m: Matrix) -> Fraction:
    n = len(m)
    rows = [[Fraction(x) for x in r] for r in m]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        lead = rows[c][c]
        det *= lead
        for i in range(c + 1, n):
            f = rows[i][c] / lead
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def kernel(m: Sequence[Sequence], ncols: int | None = None) -> "Subspace":
    """Null space ``{x : m x = 0}`` as a canonical subspace."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, pivots = rref(m, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return Subspace.span(basis, ncols)


def solve_nullspace_basis(m: Sequence[Sequence], ncols: int) -> list[Vector]:
    return list(kernel(m, ncols).basis)


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n with a canonical RREF basis (no zero rows)."""

    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(r)} in Q^{ambient_dim}")
        red, pivots = rref(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red[: len(pivots)]))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def coordinate(cls, n: int, coords: Iterable[int]) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in sorted(set(coords))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"Q^{self.ambient_dim} vs Q^{other.ambient_dim}")

    def reduce(self, v: Sequence) -> Vector:
        """Residual of ``v`` after clearing the pivot columns of this basis."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        r = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            f = r[p]
            if f:
                r = [x - f * y if y else x for x, y in zip(r, row)]
        return tuple(r)

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the stored basis; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(Fraction(v[p]) for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.is_zero() or self == other:
            return self
        if self.is_zero():
            return other
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        if self == other or self.is_full():
            return other
        if other.is_full():
            return self
        # x in a∩b  <=>  x is annihilated by ann(a) and ann(b)
        n = self.ambient_dim
        ann = list(self.annihilator().basis) + list(other.annihilator().basis)
        return kernel(ann, n)

    def annihilator(self) -> "Subspace":
        """Vectors w with w.v = 0 for every v in the subspace."""
        return kernel(list(self.basis), self.ambient_dim)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self.issubspace(other)

    def sort_key(self):
        return (self.dim, tuple(tuple(-x for x in r) for r in self.basis))

    def to_rows(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.basis]


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def span_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    return a.issubspace(b)


# --------------------------------------------------------------------------
# fraction-free spanning, used for closures and spinning


def integral(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector with the same span."""
    den = 1
    for x in v:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    ints = [int(Fraction(x) * den) for x in v]
    return _primitive(ints)


def _primitive(v: list[int]) -> list[int]:
    g = reduce(gcd, v, 0)
    if g > 1:
        v = [x // g for x in v]
    lead = next((x for x in v if x), 0)
    if lead < 0:
        v = [-x for x in v]
    return v


class IntEchelon:
    """Echelon basis of integer rows, grown one vector at a time."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[Sequence[int]] = ()):
        self.n = n
        self.rows: dict[int, list[int]] = {}
        for r in rows:
            self.add(r)

    def copy(self) -> "IntEchelon":
        e = IntEchelon(self.n)
        e.rows = dict(self.rows)
        return e

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> list[int]:
        r = list(v)
        for p in sorted(self.rows):
            c = r[p]
            if c:
                row = self.rows[p]
                lead = row[p]
                r = [x * lead - c * y for x, y in zip(r, row)]
                r = _primitive(r)
        return r

    def add(self, v: Sequence[int]) -> list[int] | None:
        """Insert ``v``; return the new echelon row, or None if ``v`` was dependent."""
        r = self.reduce(v)
        lead = next((i for i, x in enumerate(r) if x), None)
        if lead is None:
            return None
        self.rows[lead] = r
        return r

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def subspace(self) -> Subspace:
        return Subspace.span(self.rows.values(), self.n)


class SparseOp:
    """Integer linear map stored column-wise, ``w = M v``."""

    __slots__ = ("n_out", "cols")

    def __init__(self, matrix: Sequence[Sequence], n_out: int | None = None):
        # matrix given as rows of rationals; scaled to integers (span-preserving)
        rows = [list(r) for r in matrix]
        if n_out is None:
            n_out = len(rows)
        self.n_out = n_out
        den = 1
        for r in rows:
            for x in r:
                d = Fraction(x).denominator
                den = den * d // gcd(den, d)
        n_in = len(rows[0]) if rows else 0
        cols: list[list[tuple[int, int]]] = [[] for _ in range(n_in)]
        for k, r in enumerate(rows):
            for j, x in enumerate(r):
                if x:
                    cols[j].append((k, int(Fraction(x) * den)))
        self.cols = cols

    def __call__(self, v: Sequence[int]) -> list[int]:
        w = [0] * self.n_out
        cols = self.cols
        for j, x in enumerate(v):
            if x:
                for k, c in cols[j]:
                    w[k] += c * x
        return w

    def is_zero(self) -> bool:
        return not any(self.cols)


def spin(
    seeds: Iterable[Sequence],
    ops: Sequence[Callable[[Sequence[int]], list[int]]],
    n: int,
    start: IntEchelon | None = None,
    limit: int | None = None,
) -> IntEchelon:
    """Smallest subspace containing ``seeds`` (and ``start``) stable under ``ops``.

    Stops early once the dimension reaches ``limit``.
    """
    ech = start.copy() if start is not None else IntEchelon(n)
    queue = []
    for v in seeds:
        r = ech.add(integral(v) if not all(type(x) is int for x in v) else list(v))
        if r is not None:
            queue.append(r)
    if limit is None:
        limit = n
    while queue and ech.dim < limit:
        v = queue.pop()
        for op in ops:
            r = ech.add(op(v))
            if r is not None:
                queue.append(r)
                if ech.dim >= limit:
                    break
    return ech


# --------------------------------------------------------------------------
# polynomials (coefficient tuples, constant term first)


def poly_trim(p: Sequence) -> tuple:
    p = [Fraction(x) for x in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_monic(p: Sequence) -> tuple:
    p = poly_trim(p)
    if not p:
        raise ValueError("zero polynomial")
    lead = p[-1]
    return tuple(x / lead for x in p)


def poly_degree(p: Sequence) -> int:
    return len(poly_trim(p)) - 1


def poly_eval_matrix(p: Sequence, a: Matrix) -> Matrix:
    """p(a) by Horner's rule."""
    n = len(a)
    p = poly_trim(p)
    out = zeros(n, n)
    for coeff in reversed(p):
        out = mat_mul(out, a)
        for i in range(n):
            out[i][i] += coeff
    return out


def minimal_polynomial(a: Matrix) -> tuple:
    """Monic minimal polynomial of a square rational matrix (constant first)."""
    n = len(a)
    if n == 0:
        return (Fraction(1),)
    flat = []
    power = identity(n)
    # find the first power that depends on the previous ones
    for k in range(n + 1):
        flat.append([x for row in power for x in row])
        red, piv = rref(transpose(flat), k + 1)
        if len(piv) < k + 1:
            # the last column is a combination of the earlier ones
            sol = kernel(red, k + 1).basis[0]
            return poly_monic(sol)
        power = mat_mul(power, a)
    raise AssertionError("Cayley-Hamilton violated")


def _to_sympy(p: Sequence):
    import sympy

    t = sympy.Symbol("t")
    coeffs = [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(poly_trim(p))]
    return sympy.Poly(coeffs, t, domain="QQ")


def _from_sympy(poly) -> tuple:
    coeffs = poly.all_coeffs()
    return poly_monic([Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)])


def factor_polynomial(p: Sequence) -> list[tuple[tuple, int]]:
    """Monic irreducible factors over Q with multiplicities."""
    if poly_degree(p) <= 0:
        return []
    if poly_degree(p) == 1:
        return [(poly_monic(p), 1)]
    _, factors = _to_sympy(p).factor_list()
    return [(_from_sympy(f), m) for f, m in factors]


def is_squarefree(p: Sequence) -> bool:
    return all(m == 1 for _, m in factor_polynomial(p))


def is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    a, b = q.numerator, q.denominator
    return isqrt(a) ** 2 == a and isqrt(b) ** 2 == b


def quadratic_is_irreducible(p: Sequence) -> bool:
    c, b, a = poly_trim(p)
    return not is_rational_square(b * b - 4 * a * c)


def companion_matrix(p: Sequence) -> Matrix:
    """Companion matrix: e_i -> e_{i+1}, e_d -> -sum c_k e_{k+1} (monic p)."""
    p = poly_monic(p)
    d = len(p) - 1
    m = zeros(d, d)
    for i in range(d - 1):
        m[i + 1][i] = Fraction(1)
    for k in range(d):
        m[k][d - 1] = -p[k]
    return m


def format_polynomial(p: Sequence, var: str = "t") -> str:
    terms = []
    for k, c in reversed(list(enumerate(poly_trim(p)))):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = format_rational(c) + mono
        terms.append(s)
    if not terms:
        return "0"
    out = terms[0]
    for s in terms[1:]:
        out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
    return out
