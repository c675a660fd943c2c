from fractions import Fraction

import pytest

from lieideals import families as fam
from lieideals.exactnum import Subspace, is_squarefree, minimal_polynomial, unit_vector
from lieideals.families import (
    BI,
    BII,
    BIII,
    InvalidSpec,
    TypeA,
    TypeC,
    TypeD,
    build,
    build_with_layout,
    predict_count,
    predict_lattice,
    spec_from_json,
    spec_to_json,
)
from lieideals.ideals import enumerate_ideals, socle_report, solvable_ideals
from lieideals.lattice import chain, is_isomorphic, lattice_of, product
from lieideals.lie import (
    bracket_spaces,
    center,
    is_semisimple,
    jacobson_radical,
    solvable_radical,
    validate,
)

BI2 = BI(("sl2",), ((2,),))


def test_sl_algebras():
    for k in (2, 3, 4):
        L = fam.sl(k)
        assert L.dim == k * k - 1 and validate(L) == [] and is_semisimple(L)


def test_sl2_module_relations():
    for m in range(5):
        h, e, f = fam.sl2_module(m)
        def comm(x, y):
            n = len(x)
            return [[sum(x[i][t] * y[t][j] - y[i][t] * x[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        assert comm(e, f) == h
        assert comm(h, e) == [[2 * x for x in r] for r in e]


def test_build_examples():
    assert build(TypeA(True)).dim == 1 and not build(TypeA(True)).nonzero_brackets()
    assert build(TypeA(False)).dim == 0
    assert build(BI2).dim == 6
    L = build(TypeC((fam.T2_PLUS_1,)))
    a, x, y = L.basis_names.index("a"), L.basis_names.index("v1.0"), L.basis_names.index("v1.1")
    assert L.basis_bracket(a, x) == tuple(unit_vector(3, y))
    assert L.basis_bracket(a, y) == tuple(-c for c in unit_vector(3, x))


def test_levi_part_is_semisimple():
    for c in fam.catalog_upto_10():
        L, layout = build_with_layout(c.spec)
        S = Subspace.coordinate(L.dim, layout.semisimple_indices)
        if S.is_zero():
            continue
        assert S & solvable_radical(L) == L.zero()
        # L^2 = S + J for the constructed Levi factor
        assert bracket_spaces(L, L.whole(), L.whole()) == S + jacobson_radical(L)


def test_invalid_specs():
    with pytest.raises(InvalidSpec):
        build(TypeC(((Fraction(-4), Fraction(0), Fraction(1)),)))  # t^2 - 4 reducible
    with pytest.raises(InvalidSpec):
        build(TypeC((fam.T,)))
    with pytest.raises(InvalidSpec):
        build(BI(("sl2",), ((2,), (2,))))
    with pytest.raises(InvalidSpec):
        build(BI(("sl2",), ((0,),)))
    with pytest.raises(InvalidSpec):
        build(BIII(("sl2",), ((1,), (1,)), (fam.T_MINUS_1, fam.T_MINUS_1)))
    with pytest.raises(InvalidSpec):
        spec_from_json({"variant": "Q"})
    with pytest.raises(InvalidSpec):
        build(BI(("so3",), ((1,),)))


def test_predict_examples():
    assert predict_count(TypeC((fam.T2_PLUS_1, fam.T_MINUS_1))) == (5, 5)
    assert predict_count(BI2) == (3, 3)
    assert predict_count(TypeD(("sl2",), BI2)) == (6, 6)
    p = predict_lattice(BI2)
    assert is_isomorphic(p.lattice, chain(3)) and p.ideals[1].dim == 3
    p = predict_lattice(BII(BI2))
    assert p.ideal_count == 6 and is_isomorphic(p.lattice, product(chain(3), chain(2)))
    p = predict_lattice(TypeC((fam.T_MINUS_1, fam.T_MINUS_2)))
    assert p.ideal_count == 5 and sorted(I.dim for I in p.ideals) == [0, 1, 1, 2, 3]


@pytest.mark.parametrize("entry", fam.catalog_upto_10(), ids=lambda e: f"{e.entry}-{fam.describe(e.spec)}")
def test_catalog_oracle(entry):
    L = build(entry.spec)
    r = enumerate_ideals(L)
    pred = predict_lattice(entry.spec)
    assert r.complete
    assert set(r.ideals) == set(pred.ideals)
    lo, hi = pred.bounds
    assert lo <= len(r) <= hi and len(r) == entry.nodes
    assert socle_report(L, r).frattini_trivial


def test_same_tag_same_lattice():
    by_tag = {}
    for c in fam.catalog_upto_10():
        by_tag.setdefault(c.tag, []).append(lattice_of(enumerate_ideals(build(c.spec))))
    for tag, lats in by_tag.items():
        for l in lats[1:]:
            assert is_isomorphic(l, lats[0]), tag


def test_bi_structure():
    for spec in (BI2, BI(("sl2",), ((1,), (2,), (3,))), BI(("sl2", "sl2"), ((1, 0), (0, 1)))):
        L = build(spec)
        r = enumerate_ideals(L)
        rep = socle_report(L, r)
        assert center(L).is_zero()
        assert rep.asoc == solvable_radical(L) == jacobson_radical(L)
        assert len(solvable_ideals(L, r)) == 2 ** len(spec.modules)


def test_biii_structure():
    spec = BIII(("sl2",), ((1,), (2,)), (fam.T, fam.T_MINUS_1), ())
    L, layout = build_with_layout(spec)
    A = layout.abelian_indices
    ad_a = L.ad_basis(layout.a_index)
    block = [[ad_a[i][j] for j in A] for i in A]
    assert is_squarefree(minimal_polynomial(block))
    spec = BIII(("sl2",), ((1,),), (fam.T,), (fam.T2_PLUS_1,))
    _, layout = build_with_layout(spec)
    trivial = [p for p in layout.pieces if p.module is None]
    assert [len(p.indices) for p in trivial] == [2]


def test_c_structure():
    spec = TypeC((fam.T2_PLUS_1, fam.T_MINUS_1, fam.T2_MINUS_2))
    L, layout = build_with_layout(spec)
    A = layout.abelian_indices
    ad_a = L.ad_basis(layout.a_index)
    block = [[ad_a[i][j] for j in A] for i in A]
    mp = minimal_polynomial(block)
    assert len(mp) - 1 == len(A)  # minimal = characteristic polynomial
    assert mp[0] != 0  # invertible
    assert len(enumerate_ideals(L)) == 2**3 + 1


def test_json_roundtrip():
    for c in fam.catalog_upto_10():
        assert spec_from_json(spec_to_json(c.spec)) == c.spec


def test_beyond_ten_prediction():
    assert predict_lattice(fam.BEYOND_10).ideal_count == 12
