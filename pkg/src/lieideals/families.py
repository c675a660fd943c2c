"""Classified Lie algebras with finite ideal lattice and trivial Frattini subalgebra.

Every family is a semidirect product assembled from three kinds of parts:

* simple factors ``sl_k`` (the semisimple part S);
* abelian pieces: irreducible S-modules tensored with a companion block on
  which an extra element ``a`` acts;
* optionally the element ``a`` itself and a central line ``z``.

Because the basis is assembled part by part, every ideal of a family member is
a coordinate subspace, and :func:`predict_lattice` lists them symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactnum import (
    Subspace,
    companion_matrix,
    factor_polynomial,
    format_polynomial,
    parse_rational,
    poly_degree,
    poly_monic,
    quadratic_is_irreducible,
)
from .lie import LieAlgebra
from .lattice import FiniteLattice, lattice_of_subspaces


class InvalidSpec(ValueError):
    pass


Poly = tuple  # monic, constant term first
T = (Fraction(0), Fraction(1))


# ----------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class TypeA:
    center: bool = False


@dataclass(frozen=True)
class Simple:
    name: str = "sl2"


@dataclass(frozen=True)
class SemisimpleSum:
    simples: tuple = ("sl2",)


@dataclass(frozen=True)
class BI:
    simples: tuple
    modules: tuple  # one descriptor per simple factor, per module


@dataclass(frozen=True)
class BII:
    inner: BI


@dataclass(frozen=True)
class BIII:
    simples: tuple
    modules: tuple
    a_action: tuple  # polynomial of a on each module
    a_polys: tuple = ()  # S-trivial blocks


@dataclass(frozen=True)
class TypeC:
    polys: tuple


@dataclass(frozen=True)
class TypeD:
    semisimple: tuple
    inner: "FamilySpec"


FamilySpec = Union[TypeA, Simple, SemisimpleSum, BI, BII, BIII, TypeC, TypeD]

VARIANTS = {"A": TypeA, "Simple": Simple, "SemisimpleSum": SemisimpleSum, "BI": BI,
            "BII": BII, "BIII": BIII, "C": TypeC, "D": TypeD}
_NAMES = {v: k for k, v in VARIANTS.items()}


def variant(spec) -> str:
    return _NAMES[type(spec)]


def _poly(p) -> Poly:
    try:
        coeffs = [parse_rational(c) for c in p]
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"bad polynomial {p!r}") from exc
    if poly_degree(coeffs) < 1:
        raise InvalidSpec(f"polynomial {p!r} must have degree at least 1")
    return poly_monic(coeffs)


def _poly_json(p) -> list:
    from .exactnum import format_rational

    return [format_rational(c) if Fraction(c).denominator != 1 else int(c) for c in p]


def spec_from_json(data) -> FamilySpec:
    if not isinstance(data, dict) or "variant" not in data:
        raise InvalidSpec("spec must be an object with a 'variant' key")
    v = data["variant"]
    try:
        if v == "A":
            spec = TypeA(bool(data.get("center", False)))
        elif v == "Simple":
            spec = Simple(str(data.get("name", "sl2")))
        elif v == "SemisimpleSum":
            spec = SemisimpleSum(tuple(data["simples"]))
        elif v == "BI":
            spec = BI(tuple(data["simples"]), tuple(tuple(m) for m in data["modules"]))
        elif v == "BII":
            inner = spec_from_json(data["inner"])
            spec = BII(inner)
        elif v == "BIII":
            spec = BIII(
                tuple(data["simples"]),
                tuple(tuple(m) for m in data["modules"]),
                tuple(_poly(p) for p in data["a_action"]),
                tuple(_poly(p) for p in data.get("a_polys", [])),
            )
        elif v == "C":
            spec = TypeC(tuple(_poly(p) for p in data["polys"]))
        elif v == "D":
            spec = TypeD(tuple(data["semisimple"]), spec_from_json(data["inner"]))
        else:
            raise InvalidSpec(f"unknown variant {v!r}")
    except (KeyError, TypeError) as exc:
        raise InvalidSpec(f"malformed {v} spec: {exc}") from exc
    validate_spec(spec)
    return spec


def spec_to_json(spec: FamilySpec) -> dict:
    out: dict = {"variant": variant(spec)}
    if isinstance(spec, TypeA):
        out["center"] = spec.center
    elif isinstance(spec, Simple):
        out["name"] = spec.name
    elif isinstance(spec, SemisimpleSum):
        out["simples"] = list(spec.simples)
    elif isinstance(spec, BI):
        out["simples"] = list(spec.simples)
        out["modules"] = [list(m) for m in spec.modules]
    elif isinstance(spec, BII):
        out["inner"] = spec_to_json(spec.inner)
    elif isinstance(spec, BIII):
        out["simples"] = list(spec.simples)
        out["modules"] = [list(m) for m in spec.modules]
        out["a_action"] = [_poly_json(p) for p in spec.a_action]
        out["a_polys"] = [_poly_json(p) for p in spec.a_polys]
    elif isinstance(spec, TypeC):
        out["polys"] = [_poly_json(p) for p in spec.polys]
    elif isinstance(spec, TypeD):
        out["semisimple"] = list(spec.semisimple)
        out["inner"] = spec_to_json(spec.inner)
    return out


def describe(spec: FamilySpec) -> str:
    if isinstance(spec, TypeA):
        return "A(center)" if spec.center else "A(zero)"
    if isinstance(spec, Simple):
        return spec.name
    if isinstance(spec, SemisimpleSum):
        return "+".join(spec.simples)
    if isinstance(spec, BI):
        return f"BI({','.join(spec.simples)}; {list(map(list, spec.modules))})"
    if isinstance(spec, BII):
        return f"BII({describe(spec.inner)})"
    if isinstance(spec, BIII):
        acts = [format_polynomial(p) for p in spec.a_action]
        blocks = [format_polynomial(p) for p in spec.a_polys]
        return f"BIII({','.join(spec.simples)}; {list(map(list, spec.modules))}; a={acts}; A0={blocks})"
    if isinstance(spec, TypeC):
        return f"C({[format_polynomial(p) for p in spec.polys]})"
    return f"D({'+'.join(spec.semisimple)}; {describe(spec.inner)})"


# ----------------------------------------------------------------------------
# simple algebras and their modules


def _rank(name: str) -> int:
    if not (isinstance(name, str) and name.startswith("sl") and name[2:].isdigit()):
        raise InvalidSpec(f"unknown simple algebra {name!r}")
    k = int(name[2:])
    if k < 2:
        raise InvalidSpec(f"{name} is not simple")
    return k


def _sl_basis(k: int):
    """Basis matrices and names of sl_k."""
    if k == 2:
        h = [[1, 0], [0, -1]]
        e = [[0, 1], [0, 0]]
        f = [[0, 0], [1, 0]]
        return [h, e, f], ["h", "e", "f"]
    mats, names = [], []
    for i in range(k - 1):
        m = [[0] * k for _ in range(k)]
        m[i][i], m[i + 1][i + 1] = 1, -1
        mats.append(m)
        names.append(f"h{i + 1}")
    for i in range(k):
        for j in range(k):
            if i != j:
                m = [[0] * k for _ in range(k)]
                m[i][j] = 1
                mats.append(m)
                names.append(f"e{i + 1}{j + 1}")
    return mats, names


def _sl_coords(k: int, m) -> list:
    """Coordinates of a traceless k x k matrix in the basis of ``_sl_basis``."""
    if k == 2:
        return [Fraction(m[0][0]), Fraction(m[0][1]), Fraction(m[1][0])]
    out = []
    acc = Fraction(0)
    for i in range(k - 1):
        acc += m[i][i]
        out.append(acc)
    for i in range(k):
        for j in range(k):
            if i != j:
                out.append(Fraction(m[i][j]))
    return out


def _commutator(x, y):
    k = len(x)
    return [
        [sum(x[i][t] * y[t][j] - y[i][t] * x[t][j] for t in range(k)) for j in range(k)]
        for i in range(k)
    ]


def sl(k: int) -> LieAlgebra:
    mats, names = _sl_basis(k)
    table = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            v = _sl_coords(k, _commutator(mats[i], mats[j]))
            if any(v):
                table[(i, j)] = tuple(v)
    return LieAlgebra(len(mats), table, names)


def sl2() -> LieAlgebra:
    return sl(2)


def sl2_module(m: int) -> list:
    """Matrices of h, e, f on V(m): h v_i = (m-2i) v_i, f v_i = v_{i+1}, e v_i = i(m-i+1) v_{i-1}."""
    d = m + 1
    h = [[Fraction(m - 2 * i) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
    e = [[Fraction(0)] * d for _ in range(d)]
    f = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        if i >= 1:
            e[i - 1][i] = Fraction(i * (m - i + 1))
        if i + 1 < d:
            f[i + 1][i] = Fraction(1)
    return [h, e, f]


_SL2_ALIASES = {"trivial": 0, "std": 1, "dual": 1, "adjoint": 2}


def _normalize_rep(name: str, rep):
    k = _rank(name)
    if k == 2:
        if isinstance(rep, str):
            if rep not in _SL2_ALIASES:
                raise InvalidSpec(f"unknown sl2 module {rep!r}")
            rep = _SL2_ALIASES[rep]
        if isinstance(rep, bool) or not isinstance(rep, int) or rep < 0:
            raise InvalidSpec(f"sl2 module must be a highest weight >= 0, got {rep!r}")
        return rep
    if rep == 0:
        rep = "trivial"
    if rep not in ("trivial", "std", "dual", "adjoint"):
        raise InvalidSpec(f"unknown {name} module {rep!r}")
    return rep


def _is_trivial(rep) -> bool:
    return rep == 0 or rep == "trivial"


def representation(name: str, rep) -> list:
    """Matrices of the basis of ``name`` acting on the module ``rep``."""
    k = _rank(name)
    rep = _normalize_rep(name, rep)
    mats, _ = _sl_basis(k)
    if k == 2:
        return sl2_module(rep)
    if rep == "trivial":
        return [[[Fraction(0)]] for _ in mats]
    if rep == "std":
        return [[[Fraction(x) for x in r] for r in m] for m in mats]
    if rep == "dual":
        return [[[-Fraction(m[j][i]) for j in range(k)] for i in range(k)] for m in mats]
    alg = sl(k)
    return [alg.ad_basis(i) for i in range(alg.dim)]


# ----------------------------------------------------------------------------
# assembly


@dataclass(frozen=True)
class Piece:
    indices: tuple
    module: tuple | None  # normalized descriptor per simple factor, None if S acts trivially
    poly: Poly | None  # polynomial of a on the piece, None if there is no a
    acted_by: frozenset  # simple factors acting nontrivially


@dataclass(frozen=True)
class Layout:
    dim: int
    names: tuple
    simple_blocks: tuple  # index tuples, one per simple factor
    pieces: tuple
    a_index: int | None = None
    z_index: int | None = None

    @property
    def semisimple_indices(self) -> tuple:
        return tuple(i for b in self.simple_blocks for i in b)

    @property
    def abelian_indices(self) -> tuple:
        return tuple(i for p in self.pieces for i in p.indices)


@dataclass(frozen=True)
class _Parts:
    simples: tuple
    pieces: tuple  # (module or None, poly or None)
    has_a: bool = False
    has_z: bool = False


def _kron_action(mats_per_factor: list, factor: int, x: int) -> list:
    """(I ⊗ ... ⊗ rho_factor(x) ⊗ ... ⊗ I) as a dense matrix."""
    mats = [
        m[x] if s == factor else [[Fraction(int(i == j)) for j in range(len(m[0]))] for i in range(len(m[0]))]
        for s, m in enumerate(mats_per_factor)
    ]
    out = [[Fraction(1)]]
    for m in mats:
        r, c = len(out), len(m)
        new = [[Fraction(0)] * (r * c) for _ in range(r * c)]
        for i in range(r):
            for j in range(r):
                if out[i][j]:
                    for p in range(c):
                        for q in range(c):
                            if m[p][q]:
                                new[i * c + p][j * c + q] = out[i][j] * m[p][q]
        out = new
    return out


def _assemble(parts: _Parts) -> tuple[LieAlgebra, Layout]:
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    names: list[str] = []

    def add(i, j, k, c):
        if not c:
            return
        if i > j:
            i, j, c = j, i, -c
        d = table.setdefault((i, j), {})
        d[k] = d.get(k, Fraction(0)) + c

    multi = len(parts.simples) > 1
    blocks = []
    offset = 0
    for s, name in enumerate(parts.simples):
        alg = sl(_rank(name))
        for nm in alg.basis_names:
            names.append(f"{nm}.{s + 1}" if multi else nm)
        for (i, j), v in alg.nonzero_brackets().items():
            if i > j:
                continue
            for k, c in enumerate(v):
                add(offset + i, offset + j, offset + k, c)
        blocks.append(tuple(range(offset, offset + alg.dim)))
        offset += alg.dim

    pieces = []
    piece_ops = []
    for p, (module, poly) in enumerate(parts.pieces):
        if module is not None:
            reps = [representation(nm, r) for nm, r in zip(parts.simples, module)]
            udim = 1
            for r in reps:
                udim *= len(r[0])
        else:
            reps, udim = None, 1
        deg = poly_degree(poly) if poly is not None else 1
        idx = tuple(range(offset, offset + udim * deg))
        for u in range(udim):
            for r in range(deg):
                names.append(f"v{p + 1}.{u * deg + r}" if len(idx) > 1 else f"v{p + 1}")
        acted = frozenset(s for s, r in enumerate(module or ()) if not _is_trivial(r))
        pieces.append(Piece(idx, module, poly, acted))
        piece_ops.append((reps, udim, deg))
        offset += len(idx)
    a_index = z_index = None
    if parts.has_a:
        a_index = offset
        names.append("a")
        offset += 1
    if parts.has_z:
        z_index = offset
        names.append("z")
        offset += 1

    for piece, (reps, udim, deg) in zip(pieces, piece_ops):
        base = piece.indices[0]
        if reps is not None:
            for s in piece.acted_by:
                for x, gi in enumerate(blocks[s]):
                    act = _kron_action(reps, s, x)
                    for u in range(udim):
                        for u2 in range(udim):
                            if act[u2][u]:
                                for r in range(deg):
                                    add(gi, base + u * deg + r, base + u2 * deg + r, act[u2][u])
        if piece.poly is not None and a_index is not None:
            comp = companion_matrix(piece.poly)
            for u in range(udim):
                for r in range(deg):
                    for r2 in range(deg):
                        if comp[r2][r]:
                            add(a_index, base + u * deg + r, base + u * deg + r2, comp[r2][r])

    n = offset
    dense = {}
    for key, d in table.items():
        v = [Fraction(0)] * n
        for k, c in d.items():
            v[k] = c
        if any(v):
            dense[key] = tuple(v)
    L = LieAlgebra(n, dense, names)
    return L, Layout(n, tuple(names), tuple(blocks), tuple(pieces), a_index, z_index)


def _check_poly(p: Poly, allow_t: bool) -> Poly:
    p = poly_monic(p)
    if poly_degree(p) < 1:
        raise InvalidSpec("constant polynomial")
    if not allow_t and p == T:
        raise InvalidSpec("the polynomial t is not allowed here")
    if poly_degree(p) == 2 and not quadratic_is_irreducible(p):
        raise InvalidSpec(f"{format_polynomial(p)} is reducible (rational discriminant square)")
    fac = factor_polynomial(p)
    if len(fac) != 1 or fac[0][1] != 1:
        raise InvalidSpec(f"{format_polynomial(p)} is reducible")
    return p


def _check_simples(simples) -> tuple:
    if not simples:
        raise InvalidSpec("at least one simple factor is required")
    for nm in simples:
        _rank(nm)
    return tuple(simples)


def _check_modules(simples, modules, allow_trivial=False) -> tuple:
    out = []
    for m in modules:
        if len(m) != len(simples):
            raise InvalidSpec(f"module {list(m)} needs one descriptor per simple factor")
        norm = tuple(_normalize_rep(nm, r) for nm, r in zip(simples, m))
        if not allow_trivial and all(_is_trivial(r) for r in norm):
            raise InvalidSpec(f"module {list(m)} is trivial")
        out.append(norm)
    return tuple(out)


def validate_spec(spec: FamilySpec) -> None:
    _parts(spec)


def _parts(spec: FamilySpec) -> _Parts:
    if isinstance(spec, TypeA):
        return _Parts((), (), False, bool(spec.center))
    if isinstance(spec, Simple):
        return _Parts(_check_simples((spec.name,)), ())
    if isinstance(spec, SemisimpleSum):
        return _Parts(_check_simples(spec.simples), ())
    if isinstance(spec, BI):
        simples = _check_simples(spec.simples)
        mods = _check_modules(simples, spec.modules)
        if not mods:
            raise InvalidSpec("BI needs at least one module")
        if len(set(mods)) != len(mods):
            raise InvalidSpec("BI modules must be pairwise non-isomorphic")
        return _Parts(simples, tuple((m, None) for m in mods))
    if isinstance(spec, BII):
        if not isinstance(spec.inner, BI):
            raise InvalidSpec("BII inner spec must be BI")
        inner = _parts(spec.inner)
        return _Parts(inner.simples, inner.pieces, False, True)
    if isinstance(spec, BIII):
        simples = _check_simples(spec.simples)
        mods = _check_modules(simples, spec.modules)
        if not mods:
            raise InvalidSpec("BIII needs a nontrivial module")
        if len(spec.a_action) != len(mods):
            raise InvalidSpec("BIII needs one a-polynomial per module")
        acts = tuple(_check_poly(p, allow_t=True) for p in spec.a_action)
        blocks = tuple(_check_poly(p, allow_t=False) for p in spec.a_polys)
        keyed = list(zip(mods, acts))
        if len(set(keyed)) != len(keyed):
            raise InvalidSpec("BIII pieces must be pairwise non-isomorphic")
        if len(set(blocks)) != len(blocks):
            raise InvalidSpec("BIII trivial blocks need distinct polynomials")
        if all(p == T for p in acts) and not blocks:
            raise InvalidSpec("a must act nontrivially somewhere")
        pieces = tuple((m, p) for m, p in keyed) + tuple((None, p) for p in blocks)
        return _Parts(simples, pieces, has_a=True)
    if isinstance(spec, TypeC):
        polys = tuple(_check_poly(p, allow_t=False) for p in spec.polys)
        if not polys:
            raise InvalidSpec("C needs at least one polynomial")
        if len(set(polys)) != len(polys):
            raise InvalidSpec("C polynomials must be distinct")
        return _Parts((), tuple((None, p) for p in polys), has_a=True)
    if isinstance(spec, TypeD):
        outer = _check_simples(spec.semisimple)
        if isinstance(spec.inner, TypeD):
            raise InvalidSpec("D inner spec must not be D")
        inner = _parts(spec.inner)
        if isinstance(spec.inner, (Simple, SemisimpleSum)):
            raise InvalidSpec("D inner spec must be faithful (not semisimple)")
        pad = tuple(0 for _ in outer)
        pieces = tuple(
            ((pad + m) if m is not None else None, p) for m, p in inner.pieces
        )
        return _Parts(outer + inner.simples, pieces, inner.has_a, inner.has_z)
    raise InvalidSpec(f"not a family spec: {spec!r}")


def build_with_layout(spec: FamilySpec) -> tuple[LieAlgebra, Layout]:
    return _assemble(_parts(spec))


def build(spec: FamilySpec) -> LieAlgebra:
    return build_with_layout(spec)[0]


# ----------------------------------------------------------------------------
# oracles


@dataclass(frozen=True)
class Prediction:
    ideal_count: int
    bounds: tuple  # (lower, upper) from the closed formulas
    lattice: FiniteLattice
    ideals: tuple  # Subspaces in build coordinates, canonical order


def predict_count(spec: FamilySpec) -> tuple[int, int]:
    """Closed-form (lower, upper) bounds on the number of ideals; equal when exact."""
    p = _parts(spec)
    if isinstance(spec, TypeA):
        n = 2 if spec.center else 1
        return (n, n)
    if isinstance(spec, (Simple, SemisimpleSum)):
        n = 2 ** len(p.simples)
        return (n, n)
    if isinstance(spec, BI):
        l, k = len(spec.simples), len(spec.modules)
        return (2**l + 2**k - 1, 2**l * 2**k + 3 - (2**l + 2**k))
    if isinstance(spec, BII):
        lo, hi = predict_count(spec.inner)
        return (2 * lo, 2 * hi)
    if isinstance(spec, BIII):
        l = len(spec.simples)
        s = len(spec.a_polys)
        k = len(spec.modules)
        k0 = sum(1 for q in spec.a_action if poly_monic(q) == T)
        lo = 2 ** (l + 1) + 2 ** (s + k) + 2**k0 - 2
        hi = (2**l - 1) * (2 ** (s + k) + 2**k0 + 2**s - 1) + 2
        return (lo, hi)
    if isinstance(spec, TypeC):
        n = 2 ** len(spec.polys) + 1
        return (n, n)
    if isinstance(spec, TypeD):
        lo, hi = predict_count(spec.inner)
        f = 2 ** len(spec.semisimple)
        return (f * lo, f * hi)
    raise InvalidSpec(f"not a family spec: {spec!r}")


def predicted_ideals(layout: Layout) -> list[Subspace]:
    """Ideals B + T (+ a) (+ z): B a set of simple factors, T a set of pieces.

    A factor acting on a piece forces the piece into T; the element a forces
    every piece it moves; z is free.
    """
    nb, np_ = len(layout.simple_blocks), len(layout.pieces)
    a_flags = (False, True) if layout.a_index is not None else (False,)
    z_flags = (False, True) if layout.z_index is not None else (False,)
    out = []
    for bmask in range(1 << nb):
        for tmask in range(1 << np_):
            ok = all(
                (tmask >> j) & 1 or not any((bmask >> s) & 1 for s in p.acted_by)
                for j, p in enumerate(layout.pieces)
            )
            if not ok:
                continue
            for af in a_flags:
                if af and not all(
                    (tmask >> j) & 1 for j, p in enumerate(layout.pieces) if p.poly != T
                ):
                    continue
                for zf in z_flags:
                    idx = [i for s in range(nb) if (bmask >> s) & 1 for i in layout.simple_blocks[s]]
                    idx += [i for j in range(np_) if (tmask >> j) & 1 for i in layout.pieces[j].indices]
                    if af:
                        idx.append(layout.a_index)
                    if zf:
                        idx.append(layout.z_index)
                    out.append(Subspace.coordinate(layout.dim, idx))
    return sorted(set(out), key=Subspace.sort_key)


def predict_lattice(spec: FamilySpec) -> Prediction:
    _, layout = build_with_layout(spec)
    ideals = predicted_ideals(layout)
    return Prediction(len(ideals), predict_count(spec), lattice_of_subspaces(ideals), tuple(ideals))


# ----------------------------------------------------------------------------
# catalog of algebras with at most 10 ideals


@dataclass(frozen=True)
class CatalogEntry:
    entry: str
    spec: FamilySpec
    nodes: int
    tag: str


def _p(*c) -> Poly:
    return poly_monic([Fraction(x) for x in c])


T_MINUS_1 = _p(-1, 1)
T_MINUS_2 = _p(-2, 1)
T2_PLUS_1 = _p(1, 0, 1)
T2_MINUS_2 = _p(-2, 0, 1)


def catalog_upto_10() -> list[CatalogEntry]:
    s1, s2, s3 = ("sl2",), ("sl2", "sl2"), ("sl2", "sl2", "sl2")
    bi_1 = BI(s1, ((2,),))
    bi_12 = BI(s1, ((1,), (2,)))
    bi_11 = BI(s2, ((1, 1),))
    e = CatalogEntry
    return [
        e("1.1", TypeA(False), 1, "h1.1"),
        e("1.1", TypeA(True), 2, "h2.1"),
        e("1.2.1", Simple("sl2"), 2, "h2.1"),
        e("1.2.1", Simple("sl3"), 2, "h2.1"),
        e("1.2.2", SemisimpleSum(s2), 4, "h4.2"),
        e("1.2.2", TypeD(s1, TypeA(True)), 4, "h4.2"),
        e("1.2.3", SemisimpleSum(s3), 8, "h8.15"),
        e("1.2.3", TypeD(s2, TypeA(True)), 8, "h8.15"),
        e("2.1.1", bi_1, 3, "h3.1"),
        e("2.1.1", BI(s1, ((2,), (4,))), 5, "h5.3"),
        e("2.1.1", BI(s1, ((1,), (2,), (3,))), 9, "b"),
        e("2.1.2", bi_11, 5, "h5.2"),
        e("2.1.2", BI(s2, ((1, 1), (2, 1))), 7, "h7.8"),
        e("2.1.3", BI(s2, ((1, 0), (2, 1))), 8, "h8.13"),
        e("2.1.3", BI(s2, ((1, 0), (0, 1))), 9, "c"),
        e("2.1.4", BI(s3, ((1, 1, 1),)), 9, "a"),
        e("2.2", TypeD(s1, bi_1), 6, "h6.5"),
        e("2.2", TypeD(s1, bi_12), 10, "e"),
        e("2.2", TypeD(s1, bi_11), 10, "d"),
        e("3.1", BII(bi_1), 6, "h6.5"),
        e("3.1", BII(bi_12), 10, "e"),
        e("3.1", BII(bi_11), 10, "d"),
        e("4.1.1", BIII(s2, ((1, 1),), (T_MINUS_1,)), 9, "a"),
        e("4.1.2", BIII(s1, ((1,),), (T_MINUS_1,)), 5, "h5.2"),
        e("4.1.2", BIII(s1, ((1,), (2,)), (T2_PLUS_1, T2_PLUS_1)), 7, "h7.8"),
        e("4.1.3", BIII(s1, ((1,), (1,)), (T_MINUS_1, T2_MINUS_2)), 7, "h7.8"),
        e("4.1.4", BIII(s1, ((1,), (2,)), (T, T_MINUS_1)), 8, "h8.13"),
        e("4.1.5", BIII(s1, ((1,),), (T_MINUS_2,), (T_MINUS_1,)), 8, "h8.13"),
        e("4.1.6", BIII(s1, ((1,),), (T,), (T2_PLUS_1,)), 9, "c"),
        e("4.2", TypeD(s1, BIII(s1, ((1,),), (T_MINUS_1,))), 10, "d"),
        e("5.1", TypeC((T2_PLUS_1,)), 3, "h3.1"),
        e("5.1", TypeC((T2_PLUS_1, T_MINUS_1)), 5, "h5.3"),
        e("5.1", TypeC((T2_PLUS_1, T_MINUS_1, T2_MINUS_2)), 9, "b"),
        e("5.2", TypeD(s1, TypeC((T_MINUS_1,))), 6, "h6.5"),
        e("5.2", TypeD(s1, TypeC((T2_PLUS_1, T_MINUS_1))), 10, "e"),
    ]


# the entry with "more than 10" ideals is recorded but not part of the catalog
BEYOND_10 = TypeD(("sl2",), BII(BI(("sl2",), ((2,),))))


# ----------------------------------------------------------------------------
# algebras outside the classified families


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.abelian(n)


def heisenberg3() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): (0, 0, 1)}, ["x", "y", "z"])


def diagonal_heisenberg() -> LieAlgebra:
    """Heisenberg algebra extended by a diagonal derivation with weights 1, 2, 3."""
    a, x, y, z = range(4)
    return LieAlgebra(
        4,
        {(x, y): (0, 0, 0, 1), (a, x): (0, 1, 0, 0), (a, y): (0, 0, 2, 0), (a, z): (0, 0, 0, 3)},
        ["a", "x", "y", "z"],
    )


def sl2_heisenberg() -> LieAlgebra:
    """sl2 acting on the 2-dim module of a Heisenberg algebra; [v0, v1] = z."""
    L, _ = _assemble(_Parts(("sl2",), (((1,), None),)))
    n = L.dim + 1
    table = {k: tuple(v) + (Fraction(0),) for k, v in L.nonzero_brackets().items() if k[0] < k[1]}
    table[(3, 4)] = tuple(Fraction(int(i == n - 1)) for i in range(n))
    return LieAlgebra(n, table, list(L.basis_names) + ["z"])


def two_dim_nonabelian() -> LieAlgebra:
    return LieAlgebra(2, {(0, 1): (0, 1)}, ["a", "x"])
