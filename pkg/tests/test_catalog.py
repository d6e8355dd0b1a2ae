import pytest

from totreal.catalog import (
    chern_complexified,
    connected_sum,
    dual_sw_total,
    partitions,
    primitive,
    product,
    sw_total,
)
from totreal.dsl import manifold
from totreal.errors import SemanticError, UnsupportedQuery


def test_cp2():
    m = primitive("CP", 2)
    assert (m.dimension, m.orientable, m.closed) == (4, True, True)
    assert str(m.c_complexified) == "1 - 3*a^2"
    assert str(m.w_total) == "1 + a + a^2"
    assert m.fundamental_mod2 == (2,)


def test_rp4():
    m = primitive("RP", 4)
    assert str(sw_total(m)) == "1 + x + x^4"
    assert not m.orientable and m.closed
    assert str(dual_sw_total(m)) == "1 + x + x^2 + x^3"
    with pytest.raises(UnsupportedQuery):
        chern_complexified(m)


def test_rp2_integral_model():
    m = primitive("RP", 2)
    assert str(m.w_total) == "1 + x + x^2"
    c = chern_complexified(m)
    assert str(c) == "1 + b"
    b = m.integral_ring.gen("b")
    assert b + b == 0
    assert m.image_table["b"] == m.mod2_ring.gen("x") ** 2


@pytest.mark.parametrize("n", [1, 3, 7])
def test_rp_with_trivial_chern_class(n):
    m = primitive("RP", n)
    assert chern_complexified(m) == 1
    assert sw_total(m) == 1


def test_sphere_torus_euclidean():
    s1 = primitive("S", 1)
    assert s1.dimension == 1 and chern_complexified(s1) == 1 and sw_total(s1) == 1
    t3 = primitive("T", 3)
    assert sw_total(t3) == 1
    assert t3.mod2_ring.names == ("t1", "t2", "t3")
    assert t3.fundamental_mod2 == (1, 1, 1)
    r2 = primitive("R", 2)
    assert not r2.closed and r2.fundamental_mod2 is None
    assert chern_complexified(r2) == 1


def test_primitive_errors():
    with pytest.raises(SemanticError):
        primitive("XP", 2)
    with pytest.raises(SemanticError):
        primitive("CP", 0)


def test_products():
    cp2, s1, rp2 = primitive("CP", 2), primitive("S", 1), primitive("RP", 2)
    m = product(cp2, s1)
    assert m.dimension == 5
    assert str(chern_complexified(m)) == "1 - 3*a^2"
    m = product(cp2, rp2)
    assert m.dimension == 6
    assert str(chern_complexified(m)) == "1 + b - 3*a^2 + a^2*b"
    m = product(rp2, rp2)
    assert str(sw_total(m).component(2)) == "x1^2 + x1*x2 + x2^2"
    assert not m.orientable


def test_chern_of_cp2_squared():
    m = manifold("CP2*CP2")
    assert str(chern_complexified(m)) == "1 - 3*a1^2 - 3*a2^2 + 9*a1^2*a2^2"


def test_product_associativity():
    a, b, c = primitive("CP", 1), primitive("RP", 2), primitive("T", 2)
    left = product(product(a, b), c)
    right = product(a, product(b, c))
    assert left.canonical_name == right.canonical_name == "CP1*RP2*T2"
    assert str(left.w_total) == str(right.w_total)
    assert str(left.c_complexified) == str(right.c_complexified)


def test_product_rejects_connected_sum():
    cs = connected_sum(primitive("S", 2), primitive("S", 2))
    with pytest.raises(SemanticError):
        product(cs, primitive("S", 1))


def test_connected_sum_numbers():
    rp4 = primitive("RP", 4)
    rp22 = manifold("RP2*RP2")
    assert rp4.char_numbers4().w2_sq == 0
    assert rp4.char_numbers4().dual_w2_sq == 1
    assert rp22.char_numbers4().w2_sq == 1
    assert rp22.char_numbers4().dual_w2_sq == 1
    cs = connected_sum(rp4, rp22)
    n = cs.char_numbers4()
    assert (n.w2_sq, n.dual_w2_sq) == (1, 0)
    assert not cs.orientable
    assert cs.canonical_name == "RP4 # RP2*RP2"


def test_connected_sum_of_spheres_and_cp2():
    s = connected_sum(primitive("S", 4), primitive("S", 4))
    assert all(v == 0 for v in s.sw_numbers.values())
    assert s.p1_number == 0
    cp = connected_sum(primitive("CP", 2), primitive("CP", 2))
    assert primitive("CP", 2).p1_number == 3
    assert cp.p1_number == 6
    assert cp.orientable


def test_connected_sum_errors():
    with pytest.raises(SemanticError, match="closed"):
        connected_sum(primitive("R", 4), primitive("S", 4))
    with pytest.raises(SemanticError, match="dimension"):
        connected_sum(primitive("S", 3), primitive("S", 4))


def test_connected_sum_has_no_ring_classes():
    cs = manifold("RP4 # S4")
    for query in (sw_total, dual_sw_total, chern_complexified):
        with pytest.raises(UnsupportedQuery):
            query(cs)


def test_connected_sum_with_sphere_is_identity_on_numbers():
    m = manifold("RP2*RP2")
    cs = manifold("RP2*RP2 # S4")
    assert cs.sw_numbers == m.sw_numbers
    assert cs.dual_sw_numbers == m.dual_sw_numbers


def test_rp2_squared_all_sw_numbers():
    # w = (1+x+x^2)(1+y+y^2); numbers computed by hand from the expansion
    m = manifold("RP2*RP2")
    assert m.sw_numbers == {(4,): 1, (3, 1): 0, (2, 2): 1, (2, 1, 1): 0, (1, 1, 1, 1): 0}


def test_open_manifold_has_no_numbers():
    with pytest.raises(UnsupportedQuery):
        primitive("R", 4).sw_numbers


def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(12)) == 77
