"""Graded polynomial rings: parsing, arithmetic, gradings, involution."""

import pytest

from hypothesis import given, strategies as st

from mfwin.field import QQ, PrimeField
from mfwin.poly import (
    Poly,
    RingSpec,
    UnboundedEnumeration,
    enumerate_monomials,
    global_ring,
    global_superpotential,
    ring_from_json,
    so2_local_ring,
    so2_superpotential,
    standard_quadrics,
)


def _ring():
    return so2_local_ring(2)


def test_parse_and_print_roundtrip() -> None:
    R = _ring()
    for text in ["s*x1 + t*x2", "t^2 - s*u", "x1^3*y2 - 2*t + 1/2",
                 "-(s - t)*(s + t)", "0"]:
        p = R.parse(text)
        assert R.parse(p.to_str()) == p


def test_parse_handles_python_power_operator() -> None:
    R = _ring()
    assert R.parse("t**2 - s*u") == R.parse("t^2 - s*u")


def test_parse_rejects_garbage() -> None:
    R = _ring()
    with pytest.raises(ValueError):
        R.parse("s + q")  # unknown variable
    with pytest.raises(ValueError):
        R.parse("s @ t")  # bad character
    with pytest.raises(ValueError):
        R.parse("s t")  # missing operator
    with pytest.raises(ValueError):
        R.parse("s / t")  # only integer denominators
    with pytest.raises(ValueError):
        R.parse("(s + t")  # unbalanced


def test_arithmetic_ring_laws() -> None:
    R = _ring()
    a = R.parse("s + x1*y1")
    b = R.parse("t - y2")
    c = R.parse("u*x2 + 3")
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert a * R.one() == a
    assert (a ** 3) == a * a * a


def test_multidegree_of_local_superpotential() -> None:
    R = so2_local_ring(3)
    W = so2_superpotential(R, 3)
    assert W.multidegree() == {"torus": (0,), "r": 2}
    # base variables are torus-neutral with r = 0, fiber vars are r = 1
    assert R.parse("s").multidegree() == {"torus": (0,), "r": 0}
    assert R.parse("x1").multidegree() == {"torus": (1,), "r": 1}
    assert R.parse("y3").multidegree() == {"torus": (-1,), "r": 1}
    assert R.parse("s + x1").multidegree() is None


def test_sigma_is_an_involution_fixing_the_superpotential() -> None:
    R = so2_local_ring(3)
    W = so2_superpotential(R, 3)
    assert W.sigma_apply() == W
    p = R.parse("s*x1^2 - t*y2*x3 + u")
    assert p.sigma_apply().sigma_apply() == p
    assert R.parse("x1").sigma_apply() == R.parse("y1")


def test_partial_satisfies_leibniz() -> None:
    R = _ring()
    f = R.parse("s*x1^2 + t*x2")
    g = R.parse("x1*y1 - u")
    prod = f * g
    for v in R.names:
        assert prod.partial(v) == f.partial(v) * g + f * g.partial(v)


def test_evaluate_partial_substitution() -> None:
    R = _ring()
    p = R.parse("s*x1 + t*x2 + u")
    q = p.evaluate({"s": 1, "t": 0})
    assert q == R.parse("x1 + u")
    assert p.evaluate_full({"s": 2, "x1": 3, "u": 1}) == QQ.from_int(7)
    # unmentioned variables default to zero in full evaluation
    assert p.evaluate_full({"u": 5}) == QQ.from_int(5)
    with pytest.raises(ValueError):
        p.evaluate({"zz": 1})


def test_enumerate_monomials_base_degree_counts() -> None:
    R = so2_local_ring(2)
    # base vars s,t,u: dim of degree-d piece of a 3-variable polynomial ring
    for d in range(5):
        got = [m for m in enumerate_monomials(R, base=d, r=0)]
        assert len(got) == (d + 1) * (d + 2) // 2


def test_enumerate_monomials_torus_weight() -> None:
    R = so2_local_ring(2)
    # r = 1, weight +1: exactly the x variables
    ms = enumerate_monomials(R, torus=(1,), r=1, base=0)
    polys = sorted(R.monomial(m).to_str() for m in ms)
    assert polys == ["x1", "x2"]


def test_enumerate_monomials_unbounded_raises() -> None:
    R = so2_local_ring(2)
    with pytest.raises(UnboundedEnumeration):
        enumerate_monomials(R, torus=(0,))  # s^k all qualify
    with pytest.raises(ValueError):
        enumerate_monomials(R)


def test_global_ring_conventions() -> None:
    A = global_ring(2, 1, rconv="A")
    B = global_ring(2, 1, rconv="B")
    assert A.rdeg["p1"] == 2 and A.rdeg["x1"] == 0
    assert B.rdeg["p1"] == 0 and B.rdeg["x1"] == 1
    W = global_superpotential(B, standard_quadrics(B, 2, 1))
    assert W.multidegree() == {"torus": (0, 0), "r": 2}
    assert W.sigma_apply() == W
    with pytest.raises(ValueError):
        global_ring(2, 1, rconv="C")


def test_parity_convention() -> None:
    R = so2_local_ring(2)
    # fiber generators are odd, base generators even
    assert R.parity_of((1,), 0) == 1
    assert R.parity_of((0,), 0) == 0
    assert R.parity_of((0,), 1) == 1
    B = global_ring(2, 1, rconv="B")
    assert B.parity_of((1, 0), 0) == 1
    assert B.parity_of((1, 1), 0) == 0


def test_ring_json_roundtrip() -> None:
    for R in (so2_local_ring(3), global_ring(2, 2, rconv="A"),
              so2_local_ring(2, corank=1, field=PrimeField(7))):
        R2 = ring_from_json(R.to_json())
        assert R2 == R
        assert R2.torus == R.torus and R2.rdeg == R.rdeg


def test_poly_json_roundtrip() -> None:
    R = _ring()
    p = R.parse("3*s*x1^2 - t/2 + u*y2")
    assert Poly.from_json(R, p.to_json()) == p


def test_monic_and_leading_data() -> None:
    R = _ring()
    p = R.parse("2*s^2 + 4*t")
    assert p.leading_coeff() == QQ.from_int(2)
    assert p.monic() == R.parse("s^2 + 2*t")
    assert R.zero().leading_monomial() is None


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 3),
                          st.integers(0, 3), st.integers(0, 2)),
                max_size=6))
def test_print_parse_roundtrip_random(terms) -> None:
    R = so2_local_ring(1, corank=1)  # variables s, x1, y1
    p = R.zero()
    for c, a, b, d in terms:
        p = p + R.monomial((a, b, d), QQ.from_int(c))
    assert R.parse(p.to_str()) == p


def test_corank_presets_and_errors() -> None:
    assert so2_local_ring(1, corank=1).names == ("s", "x1", "y1")
    assert so2_local_ring(2, corank=0).names == ("x1", "x2", "y1", "y2")
    with pytest.raises(ValueError):
        so2_local_ring(1, corank=2)  # need n >= corank
    with pytest.raises(ValueError):
        so2_local_ring(3, corank=5)


def test_superpotential_matches_quadratic_form() -> None:
    R = so2_local_ring(3)
    W = so2_superpotential(R, 3)
    expected = R.parse("s*x1*y1 + t*(x1*y2 + x2*y1) + u*x2*y2 + x3*y3")
    assert W == expected
