"""Enumeration of the ideals of a Lie algebra.

The candidate family starts from a set of structurally meaningful ideals and the
ideals generated by small vectors, and is closed under sum, intersection,
``[L, -]`` and centralisers.  Two checks then run until nothing changes:

* a pencil test, which looks for two abelian atoms of some quotient that are
  isomorphic as modules.  Such a pair yields infinitely many ideals, so the
  lattice cannot be finite;
* a cover probe, which searches each cover ``I < J`` of the candidate family for
  a proper submodule of ``J/I``.  Irreducibility is certified with Norton's
  criterion when possible, otherwise a bounded set of probe vectors is spun.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .exactnum import (
    SparseOp,
    Subspace,
    determinant,
    factor_polynomial,
    integral,
    kernel,
    mat_add,
    mat_mul,
    minimal_polynomial,
    poly_degree,
    poly_eval_matrix,
    spin,
    transpose,
    unit_vector,
    zeros,
)
from .lie import (
    LieAlgebra,
    bracket_spaces,
    center,
    centralizer,
    derived_series,
    ideal_closure,
    is_ideal,
    jacobson_radical,
    lower_central_series,
    section_basis,
    solvable_radical,
)


class Status(str, Enum):
    COMPLETE = "Complete"
    INFINITE = "InfiniteDetected"
    BUDGET = "BudgetExceeded"


class NotComplete(ValueError):
    """An operation needs a Complete ideal enumeration."""


@dataclass(frozen=True)
class ProbeConfig:
    """Bounds for the cover probes.

    ``max_support`` and ``coefficients`` define the fallback probe vectors:
    every vector with at most ``max_support`` nonzero coordinates drawn from
    ``coefficients``, first nonzero coordinate positive.
    """

    max_support: int = 3
    coefficients: tuple = (1, 2, -1, -2)
    random_elements: int = 3
    seed: int = 20240101


# ----------------------------------------------------------------------------
# sections J/I as modules


class Section:
    """The quotient J/I of two ideals, as a module for the adjoint action."""

    def __init__(self, L: LieAlgebra, I: Subspace, J: Subspace):
        self.L = L
        self.I = I
        self.J = J
        self.comp = section_basis(J, I)
        self.dim = len(self.comp)
        self._sec = Subspace(L.dim, tuple(self.comp))
        self._actions: dict[int, list] = {}

    def project(self, v: Sequence) -> tuple:
        return self._sec.coordinates(self.I.reduce(v))

    def lift(self, w: Sequence) -> tuple:
        n = self.L.dim
        out = [Fraction(0)] * n
        for c, x in zip(self.comp, w):
            if x:
                for k, y in enumerate(c):
                    if y:
                        out[k] += x * y
        return tuple(out)

    def pullback(self, sub: Subspace) -> Subspace:
        return Subspace.span([self.lift(w) for w in sub.basis] + list(self.I.basis), self.L.dim)

    def action(self, i: int) -> list:
        """Matrix of ad e_i on the section (column j = image of the j-th complement vector)."""
        if i not in self._actions:
            cols = [self.project(self.L.bracket(unit_vector(self.L.dim, i), c)) for c in self.comp]
            self._actions[i] = [[cols[j][r] for j in range(self.dim)] for r in range(self.dim)]
        return self._actions[i]

    def generator_actions(self) -> list:
        return [self.action(g) for g in self.L.generators]

    def int_ops(self, transposed: bool = False) -> list[SparseOp]:
        mats = self.generator_actions()
        if transposed:
            mats = [transpose(m) for m in mats]
        return [SparseOp(m, self.dim) for m in mats if any(any(r) for r in m)]


def _proper_spin(sec: Section, v, ops) -> Subspace | None:
    s = spin([v], ops, sec.dim)
    if 0 < s.dim < sec.dim:
        return s.subspace()
    return None


def _thetas(sec: Section, config: ProbeConfig):
    """Elements of the acting associative algebra tried as MeatAxe-style probes."""
    n = sec.L.dim
    rng = random.Random(config.seed + 7919 * n + sec.dim)
    combos = []
    for _ in range(config.random_elements):
        coeffs = [rng.choice((-3, -2, -1, 1, 2, 3)) for _ in range(n)]
        m = zeros(sec.dim, sec.dim)
        for i, c in enumerate(coeffs):
            m = mat_add(m, sec.action(i), c)
        combos.append(m)
    yield combos[0]
    for i in range(n):
        yield sec.action(i)
    yield from combos[1:]
    gens = sec.generator_actions()
    if len(gens) >= 2:
        yield mat_add(mat_mul(gens[0], gens[1]), combos[0])


def cover_probe(
    L: LieAlgebra, I: Subspace, J: Subspace, config: ProbeConfig | None = None
) -> Subspace | None:
    """A proper ideal strictly between I and J, or None if the probes find none.

    I and J must be ideals with I < J.  A None result is a certificate of
    irreducibility when Norton's criterion applied; otherwise it means only that
    no probe vector generated a proper submodule.
    """
    config = config or ProbeConfig()
    sec = Section(L, I, J)
    d = sec.dim
    if d <= 1:
        return None
    ops = sec.int_ops()
    if not ops:
        # trivial action: every line is a submodule
        return sec.pullback(Subspace.span([unit_vector(d, 0)], d))
    tried: set[tuple] = set()
    for theta in _thetas(sec, config):
        mp = minimal_polynomial(theta)
        for p, _ in factor_polynomial(mp):
            N = kernel(poly_eval_matrix(p, theta), d)
            for v in N.basis:
                iv = tuple(integral(v))
                if iv in tried:
                    continue
                tried.add(iv)
                sub = _proper_spin(sec, iv, ops)
                if sub is not None:
                    return sec.pullback(sub)
            if N.dim == poly_degree(p):
                # Norton: N is one-dimensional over Q[theta]/(p); its vectors spin to
                # everything, so the module is irreducible iff the dual spin is full too
                NT = kernel(poly_eval_matrix(p, transpose(theta)), d)
                dual = spin([NT.basis[0]], sec.int_ops(transposed=True), d)
                if dual.dim < d:
                    return sec.pullback(kernel(list(dual.subspace().basis), d))
                return None
    for v in probe_vectors(d, config):
        if tuple(v) in tried:
            continue
        sub = _proper_spin(sec, v, ops)
        if sub is not None:
            return sec.pullback(sub)
    return None


def probe_vectors(d: int, config: ProbeConfig):
    """Small-coefficient vectors, sparsest first."""
    firsts = [c for c in config.coefficients if c > 0]
    for support in range(1, min(config.max_support, d) + 1):
        for idx in combinations(range(d), support):
            for first in firsts:
                for rest in product(config.coefficients, repeat=support - 1):
                    v = [0] * d
                    v[idx[0]] = first
                    for k, c in zip(idx[1:], rest):
                        v[k] = c
                    yield v


# ----------------------------------------------------------------------------
# infinite lattices


@dataclass(frozen=True)
class PencilWitness:
    """Two abelian atoms P/I, Q/I with a module isomorphism between them.

    ``directions`` pairs a basis of P modulo I with the images under the
    isomorphism, both as vectors of L.  Every ``alpha`` gives a distinct ideal
    ``I + span{p + alpha * phi(p)}``.
    """

    base: Subspace
    source: Subspace
    target: Subspace
    phi: tuple  # matrix, rows = target section coordinates
    directions: tuple

    def materialize(self, alpha) -> Subspace:
        alpha = Fraction(alpha)
        vecs = [tuple(p + alpha * q for p, q in zip(pv, qv)) for pv, qv in self.directions]
        return Subspace.span(vecs + list(self.base.basis), self.base.ambient_dim)


def _upper_covers(ideals: Sequence[Subspace]) -> dict[Subspace, list[Subspace]]:
    order = sorted(ideals, key=Subspace.sort_key)
    ups: dict[Subspace, list[Subspace]] = {}
    for i, a in enumerate(order):
        above = [b for b in order[i + 1 :] if b.dim > a.dim and a <= b]
        ups[a] = [b for b in above if not any(c.dim < b.dim and c <= b for c in above if c != b)]
    return ups


def cover_pairs(ideals: Iterable[Subspace]) -> list[tuple[Subspace, Subspace]]:
    ups = _upper_covers(list(ideals))
    return [(a, b) for a in sorted(ups, key=Subspace.sort_key) for b in ups[a]]


def module_isomorphism(src: Section, dst: Section) -> list | None:
    """An invertible map src -> dst commuting with the action, if one exists."""
    dp, dq = src.dim, dst.dim
    if dp != dq or dp == 0:
        return None
    nv = dq * dp
    rows = []
    for ap, aq in zip(src.generator_actions(), dst.generator_actions()):
        for r in range(dq):
            for c in range(dp):
                eq = [Fraction(0)] * nv
                for k in range(dp):
                    if ap[k][c]:
                        eq[r * dp + k] += ap[k][c]
                for k in range(dq):
                    if aq[r][k]:
                        eq[k * dp + c] -= aq[r][k]
                if any(eq):
                    rows.append(eq)
    sols = kernel(rows, nv).basis if rows else Subspace.full(nv).basis
    if not sols:
        return None
    mats = [[list(s[r * dp : (r + 1) * dp]) for r in range(dq)] for s in sols]
    for m in mats:
        if determinant(m) != 0:
            return m
    # det of sum s^k m_k is a polynomial in s of degree <= dp*(len-1)
    for s in range(1, dp * (len(mats) - 1) + 2):
        m = zeros(dq, dp)
        for k, mk in enumerate(mats):
            m = mat_add(m, mk, Fraction(s) ** k)
        if determinant(m) != 0:
            return m
    return None


def detect_infinite(L: LieAlgebra, ideals: Iterable[Subspace]) -> PencilWitness | None:
    """Look for isomorphic abelian atoms above some candidate ideal."""
    ideals = list(ideals)
    ups = _upper_covers(ideals)
    for base in sorted(ups, key=Subspace.sort_key):
        atoms = [P for P in ups[base] if bracket_spaces(L, P, P) <= base]
        for P, Q in combinations(atoms, 2):
            if P.dim != Q.dim or (P & Q) != base:
                continue
            sp, sq = Section(L, base, P), Section(L, base, Q)
            phi = module_isomorphism(sp, sq)
            if phi is None:
                continue
            dirs = []
            for c in range(sp.dim):
                pv = sp.comp[c]
                qv = sq.lift([phi[r][c] for r in range(sq.dim)])
                dirs.append((tuple(pv), tuple(qv)))
            return PencilWitness(base, P, Q, tuple(tuple(r) for r in phi), tuple(dirs))
    return None


# ----------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class IdealSet:
    algebra: LieAlgebra
    ideals: tuple
    status: Status
    witness: PencilWitness | None = None
    stats: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __contains__(self, item):
        return item in set(self.ideals)

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    def require_complete(self):
        if not self.complete:
            raise NotComplete(f"enumeration status is {self.status.value}")


class _BudgetExceeded(Exception):
    pass


def seed_ideals(L: LieAlgebra) -> set[Subspace]:
    n = L.dim
    seeds = {L.zero(), L.whole()}
    seeds.update(derived_series(L))
    seeds.update(lower_central_series(L))
    seeds.add(center(L))
    rad = solvable_radical(L)
    seeds.add(rad)
    seeds.add(jacobson_radical(L, rad))
    d2 = bracket_spaces(L, L.whole(), L.whole())
    seeds.add(centralizer(L, d2))
    for i in range(n):
        seeds.add(ideal_closure(L, [unit_vector(n, i)]))
    for i, j in combinations(range(n), 2):
        for s in (1, -1):
            v = [0] * n
            v[i], v[j] = 1, s
            seeds.add(ideal_closure(L, [v]))
    return seeds


def _close(L: LieAlgebra, known: set[Subspace], fresh: Iterable[Subspace], budget: int) -> set[Subspace]:
    """Close under +, ∩, [L, -] and C_L(-), semi-naively."""
    whole = L.whole()
    frontier = [x for x in set(fresh) if x not in known]
    done = set(known)
    while frontier:
        done.update(frontier)
        if len(done) > budget:
            raise _BudgetExceeded
        new = set()
        for A in frontier:
            for B in (bracket_spaces(L, whole, A), centralizer(L, A)):
                if B not in done:
                    new.add(B)
        done_list = list(done)
        for A in frontier:
            for B in done_list:
                for C in (A + B, A & B):
                    if C not in done:
                        new.add(C)
            if len(done) + len(new) > budget:
                raise _BudgetExceeded
        frontier = list(new)
    return done


def enumerate_ideals(L: LieAlgebra, budget: int = 512, config: ProbeConfig | None = None) -> IdealSet:
    """All ideals of L, when the lattice is finite and the probes confirm it."""
    if budget < 2:
        raise ValueError("budget must be at least 2")
    config = config or ProbeConfig()
    stats = {"rounds": 0, "probes": 0}

    def result(ideals, status, witness=None):
        ordered = tuple(sorted(ideals, key=Subspace.sort_key))
        return IdealSet(L, ordered, status, witness, stats)

    seeds = seed_ideals(L)
    w = detect_infinite(L, seeds) if len(seeds) <= budget else None
    if w is not None:
        return result(seeds, Status.INFINITE, w)
    if len(seeds) > budget:
        return result(seeds, Status.BUDGET)
    ideals: set[Subspace] = set()
    fresh: set[Subspace] = seeds
    probed: dict[tuple, Subspace | None] = {}
    while True:
        stats["rounds"] += 1
        try:
            ideals = _close(L, ideals, fresh, budget)
        except _BudgetExceeded:
            return result(ideals | set(fresh), Status.BUDGET)
        w = detect_infinite(L, ideals)
        if w is not None:
            return result(ideals, Status.INFINITE, w)
        fresh = set()
        for pair in cover_pairs(ideals):
            if pair not in probed:
                stats["probes"] += 1
                probed[pair] = cover_probe(L, pair[0], pair[1], config)
            found = probed[pair]
            if found is not None and found not in ideals:
                fresh.add(found)
        if not fresh:
            break
    for I in ideals:
        if not is_ideal(L, I):
            raise AssertionError("enumeration produced a non-ideal")
    return result(ideals, Status.COMPLETE)


# ----------------------------------------------------------------------------
# socle and faithfulness


@dataclass(frozen=True)
class SocleReport:
    minimal_ideals: tuple
    abelian_minimal: tuple
    simple_minimal: tuple
    asoc: Subspace
    ssoc: Subspace
    soc: Subspace
    jacobson: Subspace
    center: Subspace
    frattini_trivial: bool


def minimal_ideals(ideals: IdealSet) -> list[Subspace]:
    zero = ideals.algebra.zero()
    ups = _upper_covers(list(ideals.ideals))
    return ups.get(zero, [])


def socle_report(L: LieAlgebra, ideals: IdealSet) -> SocleReport:
    ideals.require_complete()
    atoms = minimal_ideals(ideals)
    ab = [A for A in atoms if bracket_spaces(L, A, A).is_zero()]
    simple = [A for A in atoms if A not in ab]
    asoc, ssoc = L.zero(), L.zero()
    for A in ab:
        asoc = asoc + A
    for A in simple:
        ssoc = ssoc + A
    jac = jacobson_radical(L)
    z = center(L)
    return SocleReport(
        minimal_ideals=tuple(atoms),
        abelian_minimal=tuple(ab),
        simple_minimal=tuple(simple),
        asoc=asoc,
        ssoc=ssoc,
        soc=asoc + ssoc,
        jacobson=jac,
        center=z,
        frattini_trivial=jac <= asoc and (jac & z).is_zero(),
    )


def frattini_trivial(L: LieAlgebra, ideals: IdealSet) -> bool:
    return socle_report(L, ideals).frattini_trivial


def is_faithful(L: LieAlgebra, ideals: IdealSet) -> bool:
    return socle_report(L, ideals).ssoc.is_zero()


def solvable_ideals(L: LieAlgebra, ideals: IdealSet) -> list[Subspace]:
    rad = solvable_radical(L)
    return [I for I in ideals.ideals if I <= rad]
