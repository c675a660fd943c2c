import pytest

from lieideals.families import BI, TypeC, abelian, build, heisenberg3, sl2, T2_PLUS_1
from lieideals.ideals import (
    NotComplete,
    ProbeConfig,
    Status,
    cover_probe,
    detect_infinite,
    enumerate_ideals,
    is_faithful,
    seed_ideals,
    socle_report,
    solvable_ideals,
)
from lieideals.lie import LieAlgebra, direct_sum, is_ideal, jacobson_radical


def test_abelian_line():
    r = enumerate_ideals(LieAlgebra.abelian(1))
    assert r.status is Status.COMPLETE and len(r) == 2


def test_abelian_plane_is_infinite():
    r = enumerate_ideals(abelian(2))
    assert r.status is Status.INFINITE
    w = r.witness
    assert w.base.is_zero() and w.source != w.target


def test_bi_chain():
    L = build(BI(("sl2",), ((2,),)))
    r = enumerate_ideals(L)
    assert r.status is Status.COMPLETE
    assert [I.dim for I in r.ideals] == [0, 3, 6]


def test_every_member_is_ideal_and_closed():
    L = build(BI(("sl2",), ((1,), (2,))))
    r = enumerate_ideals(L)
    s = set(r.ideals)
    assert L.zero() in s and L.whole() in s
    for I in r.ideals:
        assert is_ideal(L, I)
        for J in r.ideals:
            assert I + J in s and I & J in s


def test_cover_probe():
    L = sl2()
    assert cover_probe(L, L.zero(), L.whole()) is None
    H = heisenberg3()
    found = cover_probe(H, H.span_of("z"), H.whole())
    assert found is not None and H.span_of("z") < found < H.whole() and is_ideal(H, found)
    assert cover_probe(H, H.span_of("x", "z"), H.whole()) is None


def test_cover_probe_dual_spin():
    # the 2-dim nonabelian algebra acting on itself: 0 < x < L, x found by kernel probes
    L = LieAlgebra(2, {(0, 1): (0, 1)}, ["a", "x"])
    assert cover_probe(L, L.zero(), L.whole()) == L.span_of("x")


def test_detect_infinite_heisenberg_quotient():
    H = heisenberg3()
    w = detect_infinite(H, seed_ideals(H))
    assert w is not None and w.base == H.span_of("z")
    members = {w.materialize(a) for a in range(5)}
    assert len(members) == 5 and all(is_ideal(H, I) for I in members)


def test_detect_infinite_negative():
    L = build(BI(("sl2",), ((2,), (4,))))
    assert detect_infinite(L, enumerate_ideals(L).ideals) is None


def test_budget():
    r = enumerate_ideals(LieAlgebra.abelian(3), budget=3)
    assert r.status is Status.BUDGET
    with pytest.raises(ValueError):
        enumerate_ideals(sl2(), budget=1)


def test_socle_reports():
    L = direct_sum(sl2(), sl2())
    rep = socle_report(L, enumerate_ideals(L))
    assert len(rep.simple_minimal) == 2 and rep.ssoc.is_full() and rep.asoc.is_zero()
    assert rep.frattini_trivial
    L = build(BI(("sl2",), ((2,),)))
    r = enumerate_ideals(L)
    rep = socle_report(L, r)
    assert rep.asoc == jacobson_radical(L) and rep.frattini_trivial and is_faithful(L, r)
    L = build(TypeC((T2_PLUS_1,)))
    rep = socle_report(L, enumerate_ideals(L))
    assert rep.asoc.dim == 2 and rep.frattini_trivial


def test_faithful():
    r = enumerate_ideals(sl2())
    assert not is_faithful(sl2(), r)
    A = LieAlgebra.abelian(1)
    assert is_faithful(A, enumerate_ideals(A))


def test_not_complete_rejected():
    r = enumerate_ideals(abelian(2))
    with pytest.raises(NotComplete):
        socle_report(abelian(2), r)


def test_solvable_ideal_count():
    L = build(BI(("sl2",), ((1,), (2,))))
    assert len(solvable_ideals(L, enumerate_ideals(L))) == 2**2


def test_nonzero_ideals_meet_jacobson():
    L = build(BI(("sl2",), ((1,), (2,))))
    jac = jacobson_radical(L)
    for I in enumerate_ideals(L).ideals:
        if not I.is_zero():
            assert not (I & jac).is_zero()


def test_pattern_fallback_config():
    cfg = ProbeConfig(max_support=1, random_elements=1)
    L = build(BI(("sl2",), ((1,), (2,))))
    assert len(enumerate_ideals(L, config=cfg)) == 5
