import pytest

from lieideals.families import heisenberg3, sl2, two_dim_nonabelian, BI, build
from lieideals.lie import (
    InvalidAlgebra,
    LieAlgebra,
    NotAnIdeal,
    bracket_spaces,
    center,
    centralizer,
    derived_series,
    direct_sum,
    general_est1_type,
    ideal_closure,
    is_ideal,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    jacobson_radical,
    killing_form,
    lower_central_series,
    quotient,
    solvable_radical,
    validate,
)


def bi2():
    return build(BI(("sl2",), ((2,),)))


def test_validate():
    assert validate(LieAlgebra.abelian(3)) == []
    assert validate(sl2()) == []
    with pytest.raises(InvalidAlgebra) as info:
        LieAlgebra.from_tensor(
            [[[0] * 3, [0, 2, 0], [0, 0, -2]], [[0, -2, 0], [0] * 3, [1, 0, 0]], [[0, 0, 2], [0, 0, 0], [0] * 3]],
            ["h", "e", "f"],
        )
    assert any(v.kind == "antisymmetry" and set(v.indices) == {1, 2} for v in info.value.violations)


def test_bracket_spaces():
    A = LieAlgebra.abelian(3)
    assert bracket_spaces(A, A.whole(), A.whole()).is_zero()
    L = sl2()
    assert bracket_spaces(L, L.whole(), L.whole()) == L.whole()
    L = bi2()
    rad = solvable_radical(L)
    assert bracket_spaces(L, L.whole(), rad) == L.span_of("v1.0", "v1.1", "v1.2")


def test_series():
    A = LieAlgebra.abelian(2)
    assert derived_series(A) == [A.whole(), A.zero()]
    assert derived_series(sl2()) == [sl2().whole()]
    L = two_dim_nonabelian()
    assert derived_series(L) == [L.whole(), L.span_of("x"), L.zero()]
    H = heisenberg3()
    assert lower_central_series(H) == [H.whole(), H.span_of("z"), H.zero()]
    assert is_nilpotent(H) and is_solvable(L) and not is_nilpotent(L)


def test_center_centralizer():
    A = LieAlgebra.abelian(3)
    assert center(A).is_full()
    assert center(sl2()).is_zero()
    H = heisenberg3()
    assert centralizer(H, H.span_of("z")).is_full()


def test_killing():
    k = killing_form(sl2())
    assert k[0][0] == 8 and k[1][2] == k[2][1] == 4 and k[0][1] == 0
    assert is_semisimple(sl2()) and not is_semisimple(LieAlgebra.abelian(2))
    assert is_semisimple(direct_sum(sl2(), sl2()))


def test_radicals():
    assert solvable_radical(heisenberg3()).is_full()
    assert solvable_radical(sl2()).is_zero()
    L = bi2()
    v = L.span_of("v1.0", "v1.1", "v1.2")
    assert solvable_radical(L) == v == jacobson_radical(L)
    L = two_dim_nonabelian()
    assert jacobson_radical(L) == L.span_of("x")
    assert jacobson_radical(direct_sum(sl2(), LieAlgebra.abelian(1))).is_zero()


def test_quotient():
    H = heisenberg3()
    Q, qmap = quotient(H, H.span_of("z"))
    assert Q.dim == 2 and validate(Q) == [] and not Q.nonzero_brackets()
    assert quotient(H, H.zero())[0].dim == 3
    assert quotient(H, H.whole())[0].dim == 0
    with pytest.raises(NotAnIdeal):
        quotient(H, H.span_of("x"))
    assert qmap.pullback(Q.zero()) == H.span_of("z")


def test_direct_sum():
    L = direct_sum(sl2(), LieAlgebra.abelian(0))
    assert L.dim == 3 and validate(L) == []
    A2 = direct_sum(LieAlgebra.abelian(1), LieAlgebra.abelian(1))
    assert A2.dim == 2 and not A2.nonzero_brackets()


def test_ideal_closure():
    L = sl2()
    assert ideal_closure(L, L.zero()).is_zero()
    assert ideal_closure(L, L.span_of("e")) == L.whole()
    H = heisenberg3()
    assert ideal_closure(H, H.span_of("x")) == H.span_of("x", "z")
    assert is_ideal(H, H.span_of("z")) and not is_ideal(H, H.span_of("x"))


def test_est1_types():
    assert general_est1_type(sl2()) == "reductive"
    assert general_est1_type(bi2()) == "I"
    assert general_est1_type(heisenberg3()) == "not-finite"
    assert general_est1_type(direct_sum(sl2(), bi2())) == "nonfaithful"


def test_reductive_trichotomy():
    L = direct_sum(sl2(), LieAlgebra.abelian(1))
    assert jacobson_radical(L).is_zero()
    S = two_dim_nonabelian()
    assert bracket_spaces(S, S.whole(), S.whole()) == jacobson_radical(S)
