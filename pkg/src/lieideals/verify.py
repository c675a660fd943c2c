"""Acceptance checks, shared by ``lieideals verify`` and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from . import families as fam
from .exactnum import Subspace, determinant, unit_vector
from .ideals import IdealSet, Status, enumerate_ideals, socle_report
from .lattice import (
    FiniteLattice,
    chain,
    cube,
    dual,
    enumerate_distributive,
    find_diamond,
    is_complemented,
    is_distributive,
    is_isomorphic,
    is_modular,
    laws_agree,
    lattice_of,
    m_lattice,
    n5,
    product,
)
from .lie import (
    LieAlgebra,
    bracket_spaces,
    centralizer,
    derived_algebra,
    general_est1_type,
    induced_map_on_quotient,
    jacobson_radical,
    solvable_radical,
)

# frozen output of brute_force_distributive_counts(8)
DISTRIBUTIVE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 5, 7: 8, 8: 15}


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.name} ({self.seconds:.2f}s) {self.detail}"


# ----------------------------------------------------------------------------
# corpus


@lru_cache(maxsize=None)
def catalog() -> tuple:
    return tuple(fam.catalog_upto_10())


@lru_cache(maxsize=None)
def built(spec) -> tuple[LieAlgebra, fam.Layout]:
    return fam.build_with_layout(spec)


@lru_cache(maxsize=None)
def enumerated(L: LieAlgebra) -> IdealSet:
    return enumerate_ideals(L)


def semisimple_sums() -> list[tuple[str, object]]:
    out = []
    for p in range(4):
        for center in (False, True):
            if p == 0:
                spec = fam.TypeA(center)
            elif center:
                spec = fam.TypeD(("sl2",) * p, fam.TypeA(True))
            else:
                spec = fam.SemisimpleSum(("sl2",) * p)
            out.append((p + int(center), spec))
    return out


def negatives() -> dict[str, LieAlgebra]:
    return {"abelian2": fam.abelian(2), "abelian3": fam.abelian(3), "heisenberg3": fam.heisenberg3()}


def counterexamples() -> dict[str, LieAlgebra]:
    """Algebras with finite ideal lattice whose Frattini subalgebra is nonzero."""
    return {"diagonal-heisenberg": fam.diagonal_heisenberg(), "sl2-heisenberg": fam.sl2_heisenberg()}


def corpus() -> dict[str, LieAlgebra]:
    out: dict[str, LieAlgebra] = {}
    for c in catalog():
        out[f"{c.entry} {fam.describe(c.spec)}"] = built(c.spec)[0]
    for _, spec in semisimple_sums():
        out.setdefault(fam.describe(spec), built(spec)[0])
    out.update(negatives())
    out.update(counterexamples())
    out["two-dim-nonabelian"] = fam.two_dim_nonabelian()
    return out


def _timed(number, name, fn) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported with its cause
        ok, detail = False, f"error: {type(exc).__name__}: {exc}"
    return CheckResult(number, name, ok, detail, time.perf_counter() - t)


# ----------------------------------------------------------------------------
# independent brute-force lattice oracle


def _bf_lattice_tables(n: int, le):
    meet = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lo = [c for c in range(n) if le[c][a] and le[c][b]]
            g = [c for c in lo if all(le[d][c] for d in lo)]
            hi = [c for c in range(n) if le[a][c] and le[b][c]]
            l_ = [c for c in hi if all(le[c][d] for d in hi)]
            if len(g) != 1 or len(l_) != 1:
                return None
            meet[a][b], join[a][b] = g[0], l_[0]
    return meet, join


def _bf_distributive(n, meet, join) -> bool:
    return all(
        meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]
        for a in range(n) for b in range(n) for c in range(n)
    )


def brute_force_lattices(n: int):
    """Every lattice on n elements up to isomorphism, as ``(leq, distributive)``.

    Orders are searched as all upper-triangular relations on the n - 2 middle
    elements (every finite order has a natural labeling), with an explicit
    bottom 0 and top n-1.
    """
    if n <= 2:
        le = [[i <= j for j in range(n)] for i in range(n)]
        return [(le, True)]
    m = n - 2
    pairs = list(combinations(range(m), 2))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        rel = [[i == j for j in range(m)] for i in range(m)]
        for k, (i, j) in enumerate(pairs):
            if (bits >> k) & 1:
                rel[i][j] = True
        if any(rel[i][j] and rel[j][k] and not rel[i][k] for i in range(m) for j in range(m) for k in range(m)):
            continue
        le = [[False] * n for _ in range(n)]
        for i in range(n):
            le[0][i] = le[i][n - 1] = le[i][i] = True
        for i in range(m):
            for j in range(m):
                le[i + 1][j + 1] = rel[i][j]
        tables = _bf_lattice_tables(n, le)
        if tables is None:
            continue
        key = min(
            tuple(rel[p[i]][p[j]] for i in range(m) for j in range(m))
            for p in permutations(range(m))
        )
        if key in seen:
            continue
        seen.add(key)
        out.append((le, _bf_distributive(n, *tables)))
    return out


def brute_force_distributive_counts(limit: int = 8) -> dict[int, int]:
    return {n: sum(1 for _, d in brute_force_lattices(n) if d) for n in range(1, limit + 1)}


# ----------------------------------------------------------------------------
# criteria


def _complete_lattices():
    for name, L in corpus().items():
        r = enumerated(L)
        if r.complete:
            yield name, L, r, lattice_of(r)


def check_distributivity():
    t = time.perf_counter()
    n = 0
    for name, _, _, lat in _complete_lattices():
        n += 1
        if not (is_distributive(lat) and is_modular(lat)):
            return False, f"{name} is not distributive"
    dt = time.perf_counter() - t
    return dt < 60, f"{n} complete lattices distributive and modular in {dt:.1f}s (limit 60s)"


def _tag_nodes(entry, pred) -> int | None:
    if entry.tag.startswith("h"):
        return int(entry.tag[1:].split(".")[0])
    return pred.ideal_count if pred.ideal_count in (9, 10) else None


def check_oracle_equivalence():
    bad = []
    for c in catalog():
        L, _ = built(c.spec)
        pred = fam.predict_lattice(c.spec)
        r = enumerated(L)
        expected = _tag_nodes(c, pred)
        if r.status is not Status.COMPLETE:
            bad.append(f"{c.entry}: {r.status.value}")
        elif set(r.ideals) != set(pred.ideals):
            bad.append(f"{c.entry}: ideal sets differ")
        elif not (len(r) == pred.ideal_count == c.nodes == expected):
            bad.append(f"{c.entry}: counts {len(r)}/{pred.ideal_count}/{c.nodes}/{expected}")
        elif not is_isomorphic(lattice_of(r), pred.lattice):
            bad.append(f"{c.entry}: lattices not isomorphic")
    if bad:
        return False, "; ".join(bad)
    return True, f"{len(catalog())} catalog entries match the symbolic oracle"


def _count(spec) -> int:
    r = enumerated(built(spec)[0])
    r.require_complete()
    return len(r)


def check_count_formulas():
    P = fam
    msgs = []
    polys = (P.T2_PLUS_1, P.T_MINUS_1, P.T2_MINUS_2)
    for r in (1, 2, 3):
        n = _count(P.TypeC(polys[:r]))
        if n != 2**r + 1:
            msgs.append(f"C r={r}: {n}")
    specs = [c.spec for c in catalog()]
    for spec in specs:
        n = _count(spec)
        if isinstance(spec, P.BII):
            if n != 2 * _count(spec.inner):
                msgs.append(f"{P.describe(spec)}: {n}")
        elif isinstance(spec, P.TypeD):
            if n != 2 ** len(spec.semisimple) * _count(spec.inner):
                msgs.append(f"{P.describe(spec)}: {n}")
        elif isinstance(spec, (P.BI, P.BIII)):
            lo, hi = P.predict_count(spec)
            if not lo <= n <= hi or (lo == hi and n != lo):
                msgs.append(f"{P.describe(spec)}: {n} outside [{lo}, {hi}]")
    if msgs:
        return False, "; ".join(msgs)
    return True, "C, B-II and D counts exact; B-I and B-III counts within bounds"


def check_boolean():
    for k, spec in semisimple_sums():
        lat = lattice_of(enumerated(built(spec)[0]))
        if not is_isomorphic(lat, cube(k)):
            return False, f"{fam.describe(spec)} is not cube({k})"
    bi = lattice_of(enumerated(built(fam.BI(("sl2",), ((2,),)))[0]))
    if is_complemented(chain(3)) or is_complemented(bi):
        return False, "a 3-chain is complemented"
    return True, "semisimple sums give cubes; 3-chains are not complemented"


def _is_m3(lat: FiniteLattice, w) -> bool:
    lo, a, b, c, hi = w
    return all(lat.meet(x, y) == lo and lat.join(x, y) == hi for x, y in combinations((a, b, c), 2))


def check_negative_realizability():
    ms = [m_lattice(n) for n in (3, 4, 5)]
    for m in ms:
        ok, w = is_distributive(m, witness=True)
        if ok or w is None or not _is_m3(m, w) or find_diamond(m) is None:
            return False, f"{m} lacks an M3 witness"
    for name, _, _, lat in _complete_lattices():
        if any(is_isomorphic(lat, m) for m in ms):
            return False, f"{name} has an M_n lattice"
    return True, "M_3, M_4, M_5 rejected with diamond witnesses; no corpus lattice is M_n"


def check_infinite_detection():
    for name, L in negatives().items():
        r = enumerated(L)
        if r.status is not Status.INFINITE or r.witness is None:
            return False, f"{name}: {r.status.value}"
        mats = [r.witness.materialize(alpha) for alpha in range(5)]
        if len(set(mats)) != 5:
            return False, f"{name}: pencil members coincide"
        from .lie import is_ideal

        if not all(is_ideal(L, I) for I in mats):
            return False, f"{name}: pencil member is not an ideal"
    return True, "abelian(2), abelian(3), heisenberg3 give 5 distinct pencil ideals each"


def _radical_chain(L: LieAlgebra) -> bool:
    rad = solvable_radical(L)
    jac = jacobson_radical(L, rad)
    d2 = derived_algebra(L)
    return (
        bracket_spaces(L, rad, rad) <= jac
        and jac == bracket_spaces(L, L.whole(), rad)
        and jac == (rad & d2)
        and jac <= rad
    )


def check_radical_chain():
    for name, L in corpus().items():
        if not _radical_chain(L):
            return False, f"radical chain fails on {name}"
    for c in catalog():
        L, _ = built(c.spec)
        if not socle_report(L, enumerated(L)).frattini_trivial:
            return False, f"Frattini criterion false on catalog entry {c.entry}"
    for name, L in counterexamples().items():
        if socle_report(L, enumerated(L)).frattini_trivial:
            return False, f"Frattini criterion true on counterexample {name}"
    return True, "radical chain on corpus; Frattini criterion true on catalog, false on counterexamples"


def type_subproperties(spec, L: LieAlgebra, layout: fam.Layout) -> str | None:
    """None when the type label and its computable sub-properties hold."""
    expected = {fam.BI: "I", fam.BII: "II", fam.BIII: "III", fam.TypeC: "IV"}[type(spec)]
    got = general_est1_type(L)
    if got != expected:
        return f"type {got}, expected {expected}"
    jac = jacobson_radical(L)
    if expected == "IV":
        a = unit_vector(L.dim, layout.a_index)
        m = induced_map_on_quotient(L, a, jac, bracket_spaces(L, jac, jac))
        if not m or determinant(m) == 0:
            return "a is not one-to-one on J/J^2"
    elif expected == "III":
        a = Subspace.coordinate(L.dim, [layout.a_index])
        if bracket_spaces(L, jac, a).is_zero():
            return "[J, a] = 0"
    elif expected == "II":
        S = Subspace.coordinate(L.dim, layout.semisimple_indices)
        if not (centralizer(L, S) & jac).is_zero():
            return "S has fixed points in J"
    elif expected == "I":
        if derived_algebra(L) != L.whole() or solvable_radical(L) != jac:
            return "L is not perfect with Rad = J"
    return None


def check_classification():
    n = 0
    for c in catalog():
        if isinstance(c.spec, (fam.BI, fam.BII, fam.BIII, fam.TypeC)):
            L, layout = built(c.spec)
            err = type_subproperties(c.spec, L, layout)
            if err:
                return False, f"{c.entry} {fam.describe(c.spec)}: {err}"
            n += 1
    return True, f"{n} builds classified I/II/III/IV with sub-properties"


def check_distributive_enumeration(limit: int = 8):
    t = time.perf_counter()
    oracle = brute_force_distributive_counts(limit)
    if any(oracle[n] != DISTRIBUTIVE_COUNTS[n] for n in oracle if n in DISTRIBUTIVE_COUNTS):
        return False, f"oracle counts {oracle} differ from frozen values"
    got = {}
    for n in range(1, limit + 1):
        ls = enumerate_distributive(n)
        if not all(is_distributive(l) for l in ls):
            return False, f"non-distributive lattice at n={n}"
        if any(is_isomorphic(a, b) for a, b in combinations(ls, 2)):
            return False, f"duplicate lattices at n={n}"
        got[n] = len(ls)
    dt = time.perf_counter() - t
    ok = got == oracle and got.get(8, 15) >= 15 and dt < 300
    return ok, f"counts {list(got.values())} vs oracle {list(oracle.values())} in {dt:.1f}s"


def suite_lattices() -> list[FiniteLattice]:
    out = [lat for _, _, _, lat in _complete_lattices()]
    out += [chain(n) for n in range(1, 9)] + [cube(n) for n in range(6)]
    out += [m_lattice(n) for n in (3, 4, 5)] + [n5()]
    out += [product(chain(2), chain(2)), product(cube(2), chain(3)), product(n5(), chain(2))]
    out += [dual(l) for l in list(out)]
    for n in range(1, 9):
        out += enumerate_distributive(n)
    for n in range(1, 7):
        out += [FiniteLattice(le) for le, _ in brute_force_lattices(n)]
    for c in catalog():
        out.append(fam.predict_lattice(c.spec).lattice)
    return [l for l in out if l.size <= 32]


def check_law_crosscheck():
    lats = suite_lattices()
    bad = [l for l in lats if not laws_agree(l)]
    if bad:
        return False, f"{len(bad)} lattices where laws and witness search disagree"
    return True, f"laws agree with N5/M3 search on {len(lats)} lattices"


CRITERIA = [
    (1, "ideal lattices are distributive", check_distributivity),
    (2, "oracle equivalence on the catalog", check_oracle_equivalence),
    (3, "ideal count formulas", check_count_formulas),
    (4, "boolean characterization", check_boolean),
    (5, "M_n lattices are not realizable", check_negative_realizability),
    (6, "infinite lattice detection", check_infinite_detection),
    (7, "radical chain and Frattini criterion", check_radical_chain),
    (8, "classification round trip", check_classification),
    (9, "distributive lattice enumeration", check_distributive_enumeration),
    (10, "lattice law cross-check", check_law_crosscheck),
]


def run_criterion(number: int) -> CheckResult:
    for k, name, fn in CRITERIA:
        if k == number:
            return _timed(k, name, fn)
    raise KeyError(number)


def run_all() -> list[CheckResult]:
    return [_timed(k, name, fn) for k, name, fn in CRITERIA]
