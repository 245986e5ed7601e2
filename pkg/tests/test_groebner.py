import pytest

from conftest import surface_prime, three_block_ring
from mdeg.errors import BlocksNotSeparable, NotHomogeneous, NotStandardGraded
from mdeg.fields import GF32003
from mdeg.groebner import (
    Ideal,
    colon,
    colon_ideal,
    contract,
    intersect,
    saturate,
    saturate_irrelevant,
    saturate_var_block,
)
from mdeg.monomial import MonomialIdeal
from mdeg.orders import grevlex, lex
from mdeg.ring import make_ring


def twisted_cubic():
    R = make_ring(["a", "b", "c", "d"], [(1,)] * 4)
    a, b, c, d = R.gens()
    return R, Ideal(R, [a * c - b * b, b * d - c * c, a * d - b * c])


def test_reduced_gb_twisted_cubic():
    R, I = twisted_cubic()
    gb = I.groebner_basis()
    assert len(gb) == 3
    inI = I.initial_ideal()
    assert inI == MonomialIdeal(R, [(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)])


def test_gb_lex_differs():
    R, I = twisted_cubic()
    assert I.initial_ideal(lex(R)) != I.initial_ideal(grevlex(R))


def test_membership():
    R, I = twisted_cubic()
    a, b, c, d = R.gens()
    assert I.contains((a * c - b * b) * d)
    assert not I.contains(a * d)


def test_gb_is_deterministic_and_monic():
    R, I = twisted_cubic()
    gb1 = I.groebner_basis()
    gb2 = Ideal(R, list(reversed(I.gens))).groebner_basis()
    assert gb1 == gb2
    o = grevlex(R)
    for g in gb1:
        lt = max(g.terms, key=o.key)
        assert g.terms[lt] == R.field.one


def test_nonhomogeneous_generator_rejected():
    R = make_ring(["x", "y"], [(1, 0), (0, 1)])
    x, y = R.gens()
    with pytest.raises(NotHomogeneous):
        Ideal(R, [x + y])


def test_intersect_colon_saturate():
    R = make_ring(["x", "y", "z"], [(1,)] * 3)
    x, y, z = R.gens()
    assert intersect(Ideal(R, [x]), Ideal(R, [y])) == Ideal(R, [x * y])
    assert colon(Ideal(R, [x * y]), y) == Ideal(R, [x])
    assert saturate(Ideal(R, [x * x * y, x * z * z]), x) == Ideal(R, [y, z * z])
    assert colon_ideal(Ideal(R, [x * y, x * z]), Ideal(R, [y, z])) == Ideal(R, [x])


def test_saturate_var_block_removes_torsion():
    R = make_ring(["x0", "x1", "y0"], [(1, 0), (1, 0), (0, 1)])
    x0, x1, y0 = R.gens()
    # (x0) cap (x0^2, x1, y0): the second component is supported on block 1+
    I = intersect(Ideal(R, [x0]), Ideal(R, [x0 * x0, x1, y0]))
    assert saturate_var_block(I, [0, 1]) == Ideal(R, [x0])


def test_saturate_irrelevant_of_irrelevant_is_unit():
    R = make_ring(["x0", "x1", "y0"], [(1, 0), (1, 0), (0, 1)])
    x0, x1, y0 = R.gens()
    I = Ideal(R, [x0, x1, y0])
    assert saturate_irrelevant(I).is_unit()


def test_saturate_irrelevant_needs_standard():
    R = make_ring(["x"], [(2,)])
    with pytest.raises(NotStandardGraded):
        saturate_irrelevant(Ideal(R, []))


def test_contract_basic():
    R = three_block_ring()
    P = surface_prime(R)
    Q = contract(P, [2, 3])
    assert Q.ring.n == 8
    assert Q.ring.p == 2
    v = {nm: Q.ring.variable(nm) for nm in Q.ring.names}
    g = (
        v["y1"] * v["y1"] + v["y2"] * v["y2"] - v["y0"] * v["y3"]
    )
    assert Q.contains(g)
    assert not Q.contains(v["y0"])


def test_contract_keep_grading():
    R = three_block_ring()
    P = surface_prime(R)
    Q = contract(P, [2, 3], keep_grading=True)
    assert Q.ring.p == 3
    assert Q.ring.degrees[0] == (0, 1, 0)


def test_contract_rejects_straddling_degrees():
    R = make_ring(["x", "w"], [(1, 0), (1, 1)])
    with pytest.raises(BlocksNotSeparable):
        contract(Ideal(R, []), [1])


def test_contract_full_is_identity():
    R = three_block_ring()
    P = surface_prime(R)
    full = contract(P, [1, 2, 3])
    assert full.groebner_basis() == P.groebner_basis()


def test_prime_field_gb():
    R = make_ring(["a", "b", "c", "d"], [(1,)] * 4, GF32003)
    a, b, c, d = R.gens()
    I = Ideal(R, [a * c - b * b, b * d - c * c, a * d - b * c])
    assert len(I.groebner_basis()) == 3
