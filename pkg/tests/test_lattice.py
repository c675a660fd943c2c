import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieideals.lattice import (
    NotALattice,
    NotAPoset,
    atoms,
    chain,
    cube,
    dual,
    enumerate_distributive,
    find_isomorphism,
    from_covers,
    from_json,
    from_order,
    has_dp,
    hasse_edges,
    is_boolean,
    is_complemented,
    is_distributive,
    is_isomorphic,
    is_modular,
    laws_agree,
    length,
    m_lattice,
    n5,
    product,
    to_dot,
)


def test_from_order():
    assert from_order([[True]]).size == 1
    q2 = from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert is_isomorphic(q2, cube(2))
    # two maximal elements: no top
    with pytest.raises(NotALattice):
        from_covers(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
    with pytest.raises(NotAPoset):
        from_order([[True, True], [True, True]])


def test_basic_shapes():
    assert cube(0).size == 1
    assert chain(2).size == 2 and len(hasse_edges(chain(2))) == 1
    m3 = m_lattice(3)
    assert m3.size == 5 and length(m3) == 2
    with pytest.raises(ValueError):
        m_lattice(2)
    with pytest.raises(ValueError):
        chain(0)


def test_modular_distributive_witnesses():
    ok, w = is_modular(n5(), witness=True)
    assert not ok and sorted(w) == list(range(5))
    assert is_modular(m_lattice(3))
    ok, w = is_distributive(m_lattice(3), witness=True)
    assert not ok and sorted(w) == list(range(5))
    assert is_modular(cube(3)) and is_distributive(cube(3))


def test_complements():
    assert not is_complemented(chain(3))
    m4 = m_lattice(4)
    assert is_complemented(m4) and has_dp(m4) and not is_boolean(m4)
    assert is_boolean(cube(2))
    assert has_dp(chain(3))


def test_product_and_dual():
    assert is_isomorphic(product(chain(2), chain(2)), cube(2))
    assert is_isomorphic(product(cube(3), chain(1)), cube(3))
    for n in range(1, 6):
        assert is_isomorphic(dual(chain(n)), chain(n))
    p = product(chain(3), chain(4))
    assert p.size == 12 and length(p) == length(chain(3)) + length(chain(4))
    assert is_isomorphic(dual(dual(n5())), n5())


def test_isomorphism():
    l = product(cube(1), chain(3))
    m = find_isomorphism(l, l)
    assert m is not None
    assert not is_isomorphic(chain(4), cube(2))
    assert is_isomorphic(product(cube(1), chain(3)), product(chain(3), cube(1)))
    assert not is_isomorphic(n5(), m_lattice(3))


def test_length_atoms():
    assert length(chain(5)) == 4
    assert len(atoms(m_lattice(5))) == 5 and length(m_lattice(5)) == 2
    assert len(atoms(cube(4))) == 4


def test_json_and_dot_roundtrip():
    l = product(chain(2), chain(3))
    assert is_isomorphic(from_json(l.to_json()), l)
    dot = to_dot(l)
    assert dot.count(" -- ") == len(l.covers) and "rankdir=BT" in dot and "shape=point" in dot
    assert to_dot(l) == to_dot(l)
    assert 'label="(0,0)"' in to_dot(l, labels=True)


def test_enumerate_distributive_small():
    assert len(enumerate_distributive(1)) == 1
    assert [l.size for l in enumerate_distributive(3)] == [3]
    five = enumerate_distributive(5)
    square_on_top = from_covers(5, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)])
    expected = [chain(5), square_on_top, dual(square_on_top)]
    assert len(five) == 3
    for e in expected:
        assert sum(is_isomorphic(l, e) for l in five) == 1
    with pytest.raises(ValueError):
        enumerate_distributive(13)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=2, max_size=3))
def test_products_of_chains_are_distributive(ns):
    l = chain(ns[0] + 1)
    for n in ns[1:]:
        l = product(l, chain(n + 1))
    assert is_distributive(l) and is_modular(l) and laws_agree(l)
