from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellsurf.algebra import INFINITY
from ellsurf.elliptic_q import (
    O,
    CurveQ,
    PointQ,
    add,
    lutz_nagell_reject,
    neg,
    on_curve,
    scalar_mul,
    to_integral_model,
    torsion_analysis,
    torsion_order,
    transform_point,
)
from ellsurf.errors import InvalidInput

from .torsion_fixtures import TORSION_FIXTURES, brute_force_order

E0 = CurveQ(1, 1)
P0 = PointQ(0, 1)


def test_on_curve():
    assert on_curve(E0, P0)
    assert on_curve(E0, O)
    assert not on_curve(E0, PointQ(1, 1))


def test_singular_curve_rejected():
    with pytest.raises(InvalidInput):
        CurveQ(-3, 2)


def test_duplication_on_E0():
    assert add(E0, P0, P0) == PointQ(F(1, 4), F(-9, 8))
    assert scalar_mul(E0, 2, P0) == PointQ(F(1, 4), F(-9, 8))


def test_identity_and_inverse():
    assert add(E0, P0, O) == P0
    assert add(E0, O, P0) == P0
    assert add(E0, P0, neg(E0, P0)) == O
    assert scalar_mul(E0, 0, P0) == O


def test_triple_by_chord():
    # hand-computed chord through (0,1) and (1/4,-9/8): slope -17/2
    three = add(E0, P0, PointQ(F(1, 4), F(-9, 8)))
    assert three == PointQ(72, 611)
    assert three == scalar_mul(E0, 3, P0)
    assert 611**2 == 72**3 + 72 + 1


def test_order_six_point():
    E = CurveQ(0, 1)
    P = PointQ(2, 3)
    assert scalar_mul(E, 6, P) == O
    assert brute_force_order(E, P) == 6


def test_integral_model_identity_on_integral_curve():
    E1, P1, u = to_integral_model(E0, P0)
    assert (E1, P1, u) == (E0, P0, 1)


def test_integral_model_scales_denominators():
    E = CurveQ(F(1, 16), F(1, 64))
    E1, _, u = to_integral_model(E)
    assert u == 2
    assert (E1.A, E1.B) == (1, 1)


@pytest.mark.parametrize("A,B,u", [
    (F(1, 3), 0, 3),        # 3^1 | u^4 -> v_3(u) = 1
    (F(1, 2), F(1, 2), 2),
    (0, F(1, 2**7), 4),     # 6 v_2(u) >= 7
    (F(5, 81), F(1, 5**6), 15),
    (F(-1, 3), F(19, 108), 6),
])
def test_integral_model_least_scale(A, B, u):
    # divisor-search oracle: u is the least positive integer clearing both denominators
    E1, _, got = to_integral_model(CurveQ(A, B))
    assert got == u
    assert E1.is_integral()
    for v in range(1, u):
        assert not ((F(A) * v**4).denominator == 1 and (F(B) * v**6).denominator == 1)


def test_lutz_nagell_examples():
    assert lutz_nagell_reject(E0, PointQ(F(1, 4), F(-9, 8)))
    assert not lutz_nagell_reject(E0, P0)  # 1 | 31
    assert not lutz_nagell_reject(CurveQ(-1, 0), PointQ(0, 0))
    assert lutz_nagell_reject(CurveQ(0, -2), PointQ(3, 5))  # 25 does not divide 108


def test_lutz_nagell_requires_integral_model():
    with pytest.raises(InvalidInput):
        lutz_nagell_reject(CurveQ(F(1, 2), 1), PointQ(0, 1))
    with pytest.raises(InvalidInput):
        lutz_nagell_reject(E0, O)


def test_torsion_orders():
    assert torsion_order(E0, P0) is INFINITY
    assert torsion_order(CurveQ(-1, 0), PointQ(0, 0)) == 2
    assert torsion_order(CurveQ(0, 1), PointQ(2, 3)) == 6
    assert torsion_order(E0, O) == 1


def test_generator_orders():
    assert [torsion_order(E, P) for E, P in GENERATORS] == [INFINITY, INFINITY, 4, 6]


def test_torsion_witness_is_double_of_P():
    res = torsion_analysis(E0, P0)
    assert res.witness_multiple == 2
    assert res.witness_point == PointQ(F(1, 4), F(-9, 8))
    assert res.to_json()["witness_point"] == {"x": "1/4", "y": "-9/8"}


def test_torsion_rejects_off_curve_point():
    with pytest.raises(InvalidInput):
        torsion_order(E0, PointQ(1, 1))


@pytest.mark.parametrize("name", sorted(TORSION_FIXTURES))
def test_torsion_agrees_with_brute_force(name):
    E, P, known = TORSION_FIXTURES[name]
    expected = brute_force_order(E, P)
    assert expected == known
    got = torsion_order(E, P)
    assert (got if got is not INFINITY else "inf") == expected


def test_json_roundtrip():
    assert CurveQ.from_json(E0.to_json()) == E0
    assert PointQ.from_json({"x": "1/4", "y": "-9/8"}) == PointQ(F(1, 4), F(-9, 8))
    assert PointQ.from_json({"inf": True}) == O
    with pytest.raises(InvalidInput):
        PointQ.from_json({"x": "1"})


# property suites over multiples of known points

GENERATORS = [
    (E0, P0),
    (CurveQ(0, -2), PointQ(3, 5)),
    (CurveQ(-2, 1), PointQ(0, 1)),  # order 4
    (CurveQ(0, 1), PointQ(2, 3)),  # order 6
]


@st.composite
def multiples(draw):
    E, P = draw(st.sampled_from(GENERATORS))
    ks = draw(st.lists(st.integers(-6, 6), min_size=3, max_size=3))
    return E, [scalar_mul(E, k, P) for k in ks]


@settings(max_examples=300, derandomize=True)
@given(multiples())
def test_group_law_properties(data):
    E, (P, Q, R) = data
    assert on_curve(E, add(E, P, Q))
    assert add(E, P, Q) == add(E, Q, P)
    assert add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R))
    assert add(E, P, neg(E, P)) == O
    assert add(E, P, O) == P


@settings(max_examples=200, derandomize=True)
@given(st.sampled_from(GENERATORS), st.integers(-8, 8), st.integers(-8, 8))
def test_scalar_mul_is_additive(gen, m, n):
    E, P = gen
    assert scalar_mul(E, m + n, P) == add(E, scalar_mul(E, m, P), scalar_mul(E, n, P))
    assert scalar_mul(E, -m, P) == neg(E, scalar_mul(E, m, P))


@settings(max_examples=200, derandomize=True)
@given(multiples(), st.sampled_from([F(1, 2), F(1, 3), F(2, 3), F(1, 6)]))
def test_integral_model_preserves_group(data, s):
    E, (P, Q, _) = data
    # descale E by s so that to_integral_model has work to do
    Es = CurveQ(E.A * s**4, E.B * s**6)
    Ps, Qs = transform_point(P, s), transform_point(Q, s)
    assert on_curve(Es, Ps) and on_curve(Es, Qs)
    E1, P1, u = to_integral_model(Es, Ps)
    _, Q1, _ = to_integral_model(Es, Qs)
    assert on_curve(E1, P1)
    assert transform_point(add(Es, Ps, Qs), u) == add(E1, P1, Q1)


@settings(max_examples=100, derandomize=True)
@given(st.sampled_from(GENERATORS), st.integers(1, 6))
def test_rejection_implies_infinite(gen, m):
    E, P = gen
    mP = scalar_mul(E, m, P)
    if not mP.is_infinity and lutz_nagell_reject(E, mP):
        assert torsion_order(E, P) is INFINITY
