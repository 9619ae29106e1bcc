from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellsurf.algebra import INFINITY, ONE, Polynomial, evaluate, poly_gcd, valuation_at
from ellsurf.errors import InvalidInput, InvariantViolation, SingularEquation
from ellsurf.surface import (
    D_POLY,
    I0,
    I1,
    NON_MINIMAL,
    HyperellipticBase,
    KodairaType,
    WeierstrassSurfaceData,
    base_genus,
    classify_fiber,
    discriminant_section,
    fiber_analysis,
    infinity_order,
    is_minimal,
    non_minimal_places,
    place_basis,
    section_self_intersection,
    validate_lambdas,
)

from .strategies import lambda_sets

T = Polynomial.t()
A4, A6 = T**2 + 1, Polynomial.const(1)


def base(*lambdas):
    return HyperellipticBase(tuple(F(v) for v in lambdas))


def construction_data(genus=2, lambdas=None):
    lambdas = lambdas or range(1, 2 * genus + 2)
    return WeierstrassSurfaceData(base(*lambdas), A4, A6)


# base curve


@pytest.mark.parametrize("n,g", [(5, 2), (3, 1), (11, 5)])
def test_base_genus(n, g):
    assert base_genus(base(*range(1, n + 1))) == g


def test_base_rejects_bad_lambdas():
    with pytest.raises(InvalidInput):
        base(1, 1, 2)
    with pytest.raises(InvalidInput):
        base(0, 1, 2)
    with pytest.raises(InvalidInput):
        base(1, 2, 3, 4)


def test_branch_poly():
    assert base(1, 2, 3).branch_poly == (T - 1) * (T - 2) * (T - 3)


def test_validate_lambdas_defaults():
    check = validate_lambdas([1, 2, 3, 4, 5], D_POLY)
    assert check.ok
    # direct evaluation of 4(k^2+1)^3 + 27
    assert check.D_values == tuple(F(4 * (k * k + 1) ** 3 + 27) for k in range(1, 6))
    assert check.D_values == (59, 527, 4027, 19679, 70331)


def test_validate_lambdas_failures():
    zero = validate_lambdas([1, 0, 3, 4, 5], D_POLY)
    assert not zero and zero.condition == "lambda nonzero" and zero.indices == (2,)
    dup = validate_lambdas([1, 1, 3, 4, 5], D_POLY)
    assert not dup and dup.condition == "lambdas distinct" and dup.indices == (1, 2)
    # a polynomial with a rational root stands in for D to exercise the root condition
    root = validate_lambdas([1, 2, 3], T - 3)
    assert root.condition == "lambda not a root of D" and root.indices == (3,)


def test_D_positive_on_real_line():
    # D = 4(t^2+1)^3 + 27 >= 31, so every nonzero rational lambda avoids its roots
    for k in range(-50, 51):
        assert evaluate(D_POLY, F(k, 7)) >= 31


# discriminant and the point at infinity


def test_discriminant_section():
    d = construction_data()
    delta = discriminant_section(d)
    assert delta == -16 * D_POLY and delta.degree == 6
    const = WeierstrassSurfaceData(base(1, 2, 3), Polynomial(), ONE)
    assert discriminant_section(const) == Polynomial.const(-432)


def test_singular_data_rejected():
    with pytest.raises(SingularEquation):
        WeierstrassSurfaceData(base(1, 2, 3), Polynomial.const(-3), Polynomial.const(2))


def test_degree_bound():
    with pytest.raises(InvalidInput, match="section degree bound"):
        WeierstrassSurfaceData(base(1, 2, 3), T**3, ONE)
    with pytest.raises(InvalidInput, match="section degree bound"):
        WeierstrassSurfaceData(base(1, 2, 3), T, T**4)


def test_infinity_order():
    assert infinity_order(-16 * D_POLY, 12) == 0
    assert infinity_order(ONE, 6) == 6
    assert infinity_order(T, 2) == 0
    assert infinity_order(A4, 4) == 0
    assert infinity_order(Polynomial(), 4) is INFINITY
    with pytest.raises(InvalidInput):
        infinity_order(T**2, 2)


# Kodaira classification


def test_classify_basic():
    assert classify_fiber(0, 0, 1) == I1
    assert classify_fiber(0, 0, 0) == I0
    assert classify_fiber(4, 6, 12) == NON_MINIMAL
    assert classify_fiber(INFINITY, 6, 12) == NON_MINIMAL
    assert classify_fiber(0, 0, 5) == KodairaType("I", 5)


def test_classify_I5_from_polynomials():
    # a4 = -3, a6 = 2 + t^5:  4a4^3 + 27a6^2 = 108 t^5 + 27 t^10
    a4, a6 = Polynomial.const(-3), 2 + T**5
    delta = -16 * (4 * a4**3 + 27 * a6**2)
    orders = (valuation_at(a4, T), valuation_at(a6, T), valuation_at(delta, T))
    assert orders == (0, 0, 5)
    assert classify_fiber(*orders) == KodairaType("I", 5)


@pytest.mark.parametrize("triple,label,euler", [
    ((1, 1, 2), "II", 2),
    ((2, 1, 2), "II", 2),
    ((1, 2, 3), "III", 3),
    ((1, 5, 3), "III", 3),
    ((2, 2, 4), "IV", 4),
    ((5, 2, 4), "IV", 4),
    ((2, 3, 6), "I0*", 6),
    ((2, 3, 9), "I3*", 9),
    ((3, 3, 6), "I0*", 6),
    ((2, 4, 6), "I0*", 6),
    ((3, 4, 8), "IV*", 8),
    ((3, 5, 9), "III*", 9),
    ((3, INFINITY, 9), "III*", 9),
    ((4, 5, 10), "II*", 10),
    ((4, 6, 12), "NON-MINIMAL", None),
])
def test_classify_table(triple, label, euler):
    kt = classify_fiber(*triple)
    assert str(kt) == label
    assert kt.euler_number == euler


def test_classify_rejects_inconsistent_orders():
    with pytest.raises(InvariantViolation):
        classify_fiber(1, 1, 5)
    with pytest.raises(InvariantViolation):
        classify_fiber(2, 3, 5)


def test_euler_table():
    assert I1.euler_number == 1
    assert KodairaType("I", 7).euler_number == 7
    assert KodairaType("I*", 2).euler_number == 8
    assert [KodairaType(f).euler_number for f in ("II", "III", "IV", "IV*", "III*", "II*")] == [
        2, 3, 4, 8, 9, 10,
    ]


# fiber analysis


def test_fiber_analysis_construction_data():
    report = fiber_analysis(construction_data())
    assert report.singular_points_on_B == 12
    assert report.type_counts() == {"I1": 12}
    assert report.affine_t_roots == 6
    assert all(not p.branch and p.points_on_B == 2 * p.locus.degree for p in report.places)
    assert all(not p.is_infinity for p in report.places)
    assert report.total_euler == 12 and report.chi == 1
    assert report.minimal and not report.isotrivial
    assert report.base_genus == 2


@settings(max_examples=9, derandomize=True)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda g: lambda_sets(g)))
def test_fiber_analysis_independent_of_genus_and_lambdas(lambdas):
    report = fiber_analysis(WeierstrassSurfaceData(HyperellipticBase(lambdas), A4, A6))
    assert report.type_counts() == {"I1": 12}
    assert (report.total_euler, report.chi, report.minimal) == (12, 1, True)


def test_branch_place_doubles_order():
    # a4 = -3, a6 = t + 1:  Delta = -432 (t - 1)(t + 3), lambda = 1 is a branch point
    data = WeierstrassSurfaceData(base(1, 2, 5), Polynomial.const(-3), T + 1)
    report = fiber_analysis(data)
    by_locus = {("inf" if p.is_infinity else tuple(p.locus.coeffs)): p for p in report.places}
    ramified = by_locus[tuple((T - 1).coeffs)]
    assert ramified.branch and ramified.points_on_B == 1
    assert (ramified.v_delta, str(ramified.kodaira_type)) == (2, "I2")
    split = by_locus[tuple((T + 3).coeffs)]
    assert not split.branch and split.points_on_B == 2 and str(split.kodaira_type) == "I1"
    at_inf = by_locus["inf"]
    assert (at_inf.v_a4, at_inf.v_a6, at_inf.v_delta) == (4, 4, 8)
    assert str(at_inf.kodaira_type) == "IV*"
    assert report.total_euler == 12 and report.chi == 1


@pytest.mark.parametrize("a4,a6,label", [
    (T - 1, T - 1, "IV"),            # downstairs (1,1,2) doubled
    (T - 1, (T - 1) ** 2, "I0*"),    # downstairs (1,2,3) doubled
    ((T - 1) ** 2, (T - 1) ** 2, "IV*"),
])
def test_starred_types_at_branch_places(a4, a6, label):
    data = WeierstrassSurfaceData(base(1, 2, 3), a4, a6)
    report = fiber_analysis(data)
    place = next(p for p in report.places if not p.is_infinity and p.locus == T - 1)
    delta = report.discriminant
    assert place.v_a4 == 2 * valuation_at(a4, T - 1)
    assert place.v_a6 == 2 * valuation_at(a6, T - 1)
    assert place.v_delta == 2 * valuation_at(delta, T - 1)
    assert str(place.kodaira_type) == label


def test_is_minimal_examples():
    assert is_minimal(construction_data())
    cusp = WeierstrassSurfaceData(base(1, 2, 3), (T - 1) ** 2, (T - 1) ** 3)
    assert non_minimal_places(cusp) == [T - 1]
    assert not is_minimal(cusp)
    assert not fiber_analysis(cusp).minimal
    no_a4 = WeierstrassSurfaceData(base(1, 2, 3), Polynomial(), ONE)
    assert non_minimal_places(no_a4) == ["inf"]
    report = fiber_analysis(no_a4)
    assert not report.minimal and report.chi is None
    # same polynomials, but t = 1 unramified: orders (2, 3) only
    assert is_minimal(WeierstrassSurfaceData(base(2, 3, 4), (T - 1) ** 2, (T - 1) ** 3))


def test_section_self_intersection():
    assert section_self_intersection(construction_data(2)) == (-1, 2)
    assert section_self_intersection(construction_data(5)) == (-1, 5)
    deg2 = WeierstrassSurfaceData(base(1, 2, 3, 4, 5), T**4 + 1, A6, line_bundle_degree=2)
    assert section_self_intersection(deg2) == (-2, 2)
    with pytest.raises(InvalidInput):
        section_self_intersection(WeierstrassSurfaceData(base(1, 2, 3), Polynomial(), ONE))


def test_line_bundle_degree_two_bookkeeping():
    # the degree-1 polynomials become non-minimal at infinity: orders 8-4 and 12-0
    naive = WeierstrassSurfaceData(base(1, 2, 3, 4, 5), A4, A6, line_bundle_degree=2)
    assert non_minimal_places(naive) == ["inf"]
    data = WeierstrassSurfaceData(base(1, 2, 3, 4, 5), T**4 + 1, A6, line_bundle_degree=2)
    report = fiber_analysis(data)
    assert report.weighted_delta_order == 24
    assert report.total_euler == 24 and report.chi == 2


def test_surface_json_roundtrip():
    d = construction_data()
    assert WeierstrassSurfaceData.from_json(d.to_json()) == d
    with pytest.raises(InvalidInput):
        WeierstrassSurfaceData.from_json({**d.to_json(), "genus": 3})


# random data within the degree bounds

coeff = st.integers(-3, 3)


@st.composite
def surface_data(draw):
    g = draw(st.integers(1, 3))
    lambdas = draw(
        st.lists(st.integers(-4, 4).filter(bool), min_size=2 * g + 1, max_size=2 * g + 1, unique=True)
    )
    a4 = Polynomial(draw(st.lists(coeff, max_size=3)))
    a6 = Polynomial(draw(st.lists(coeff, max_size=4)))
    if (4 * a4**3 + 27 * a6**2).is_zero():
        a6 = a6 + 1
    return WeierstrassSurfaceData(base(*lambdas), a4, a6)


@settings(max_examples=300, derandomize=True)
@given(surface_data())
def test_random_surface_bookkeeping(data):
    report = fiber_analysis(data)
    assert sum(p.points_on_B * p.v_delta for p in report.places) == 12
    assert report.minimal == is_minimal(data)
    if report.minimal:
        assert report.total_euler % 12 == 0
        assert report.chi * 12 == report.total_euler
    for q in place_basis(data):
        divides = q.divides(data.base.branch_poly)
        coprime = poly_gcd(q, data.base.branch_poly) == ONE
        assert divides != coprime
    for p in report.places:
        assert p.euler_number == p.kodaira_type.euler_number
        if p.is_infinity:
            assert p.points_on_B == 1
        else:
            assert p.points_on_B == (p.locus.degree if p.branch else 2 * p.locus.degree)
