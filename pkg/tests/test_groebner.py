"""Groebner bases, syzygies, elimination, subquotient presentations."""

import pytest

from mfwin.field import QQ
from mfwin.poly import RingSpec, so2_local_ring
from mfwin.groebner import (
    ModElt,
    SubquotientPresentation,
    buchberger,
    default_order,
    elimination_order,
    graded_piece_dim,
    ideal_gb,
    is_member,
    minimalize_presentation,
    normal_form,
    submodule_intersect_subring,
    subquotient,
    syzygies,
)


def _scalar(ring, text):
    return ModElt(ring, 1, {0: ring.parse(text)})


def test_ideal_gb_of_matrix_columns() -> None:
    R = so2_local_ring(2)
    gb, order = ideal_gb(R, [R.parse("s*x1 + t*x2"), R.parse("t*x1 + u*x2")])
    assert sorted(e.comps[0].to_str() for e in gb) == [
        "s*x1 + t*x2", "t*x1 + u*x2", "t^2*x2 - s*u*x2"]
    # the S-pair product lands in the ideal, its scalar cofactor does not
    assert is_member(_scalar(R, "(t^2 - s*u)*x2"), gb, order)
    assert not is_member(_scalar(R, "t^2 - s*u"), gb, order)
    assert is_member(_scalar(R, "(t^2 - s*u)^3*x1"), gb, order)


def test_normal_form_with_quotients_reconstructs_input() -> None:
    R = so2_local_ring(2)
    gb, order = ideal_gb(R, [R.parse("s*x1 + t*x2"), R.parse("t*x1 + u*x2")])
    f = _scalar(R, "(s + u)*(s*x1 + t*x2) + x1*(t*x1 + u*x2) + y1")
    nf, quots = normal_form(f, gb, order, want_quotients=True)
    assert [p.to_str() for p in nf.to_column()] == ["y1"]
    recon = nf
    for q, b in zip(quots, gb):
        recon = recon + b.poly_mul(q)
    assert (recon - f).is_zero()


def test_normal_form_is_idempotent() -> None:
    R = so2_local_ring(2)
    gb, order = ideal_gb(R, [R.parse("s*x1 + t*x2"), R.parse("t*x1 + u*x2")])
    f = _scalar(R, "s^2*x1 + t*u*x2 + t^3")
    nf = normal_form(f, gb, order)
    assert normal_form(nf, gb, order).comps == nf.comps


def test_syzygies_of_regular_sequence_are_koszul() -> None:
    R = RingSpec(("x", "y", "z"))
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    cols = [ModElt.from_column(R, [v]) for v in (x, y, z)]
    syz = syzygies(cols, R)
    assert [[q.to_str() for q in s.to_column()] for s in syz] == [
        ["y", "-x", "0"], ["z", "0", "-x"], ["0", "z", "-y"]]
    # every syzygy annihilates the columns
    for s in syz:
        tot = R.zero()
        for pos, p in s.comps.items():
            tot = tot + p * (x, y, z)[pos]
        assert tot.is_zero()
    # and the classical relations lie in the computed module
    order = default_order(R, 3)
    sgb = buchberger(list(syz), order)
    for col in ([y, -x, R.zero()], [z, R.zero(), -x], [R.zero(), z, -y]):
        assert normal_form(ModElt.from_column(R, col), sgb, order).is_zero()


def test_syzygies_modulo_quotient_ideal() -> None:
    # over Q[s,t,u]/(t^2 - su) the single column (t) acquires the syzygy
    # coming from t*t = s*u: coefficient t kills it only modulo the ideal
    R = so2_local_ring(2)
    ideal = [R.parse("t^2 - s*u")]
    syz = syzygies([_scalar(R, "t")], R, quotient_ideal=ideal)
    gb, order = ideal_gb(R, ideal)
    for s in syz:
        prod = s.comps.get(0, R.zero()) * R.parse("t")
        assert is_member(ModElt(R, 1, {0: prod}), gb, order)
    assert any(not s.is_zero() for s in syz)


def test_submodule_intersect_subring_extracts_base_element() -> None:
    R = so2_local_ring(2)
    h1 = _scalar(R, "t^2 - s*u + x1*y1")
    h2 = _scalar(R, "x1*y1")
    inter = submodule_intersect_subring([h1, h2], R,
                                        ["x1", "x2", "y1", "y2"])
    assert [[q.to_str() for q in e.to_column()] for e in inter] == [["t^2 - s*u"]]


def test_subquotient_of_kernel_modulo_image() -> None:
    # ker(R^2 -> R, (a, b) |-> a*x - b*y) = <(y, x)>; quotient by x*(y, x)
    R = RingSpec(("x", "y", "z"))
    x, y = R.var("x"), R.var("y")
    pres = subquotient([[x], [-y]], [[x * y, x * x]], R)
    assert [g["label"] for g in pres.gens] == ["k0"]
    assert [[q.to_str() for q in r.to_column()] for r in pres.relations] == [["x"]]
    assert [[q.to_str() for q in r.to_column()]
            for r in pres.representatives] == [["y", "x"]]


def test_subquotient_zero_kernel_is_trivial() -> None:
    R = RingSpec(("x", "y", "z"))
    # (a) |-> (a*x, a*y) is injective, so the subquotient is the zero module
    pres = subquotient([[R.var("x"), R.var("y")]], [], R)
    assert pres.gens == [] and pres.relations == []


def test_minimalize_presentation_eliminates_unit_generator() -> None:
    R = so2_local_ring(2)
    rel1 = ModElt(R, 2, {0: R.one(), 1: R.parse("-s")})
    rel2 = ModElt(R, 2, {0: R.parse("u"), 1: R.parse("t")})
    pres = SubquotientPresentation(R, [{"label": "a"}, {"label": "b"}],
                                   [rel1, rel2])
    m = minimalize_presentation(pres)
    assert [g["label"] for g in m.gens] == ["b"]
    assert [[q.to_str() for q in r.to_column()] for r in m.relations] == [
        ["s*u + t"]]


def test_graded_piece_dim_quadric_cone() -> None:
    R = so2_local_ring(2)
    pres = SubquotientPresentation(
        R, [{"label": "e", "r": 0, "base": 0, "torus": (0,)}], [],
        ideal=[R.parse("t^2 - s*u")])
    dims = [graded_piece_dim(pres, {"base": d, "r": 0}) for d in range(7)]
    assert dims == [1, 3, 5, 7, 9, 11, 13]


def test_graded_piece_dim_respects_cap() -> None:
    R = so2_local_ring(2)
    pres = SubquotientPresentation(
        R, [{"label": "e", "r": 0, "base": 0, "torus": (0,)}], [],
        ideal=[R.parse("t^2 - s*u")])
    with pytest.raises(ValueError):
        graded_piece_dim(pres, {"base": 25, "r": 0})
    with pytest.raises(ValueError):
        graded_piece_dim(pres, {"base": 5, "r": 0}, cap=3)


def test_elimination_order_makes_fiber_leads_expensive() -> None:
    R = so2_local_ring(2)
    order = elimination_order(R, 1, {"x1", "x2", "y1", "y2"})
    # x1 outranks any pure base monomial under the elimination order
    lead_x = order.key(0, tuple(1 if n == "x1" else 0 for n in R.names))
    lead_s3 = order.key(0, tuple(3 if n == "s" else 0 for n in R.names))
    assert lead_x > lead_s3


def test_buchberger_gives_confluent_reduction() -> None:
    # same normal form regardless of generator order: basis is a real GB
    R = so2_local_ring(2)
    gens = [R.parse("s*x1 + t*x2"), R.parse("t*x1 + u*x2"),
            R.parse("s*u*x1 - t^2*x1")]
    gb1, order = ideal_gb(R, gens)
    gb2, _ = ideal_gb(R, list(reversed(gens)))
    probe = _scalar(R, "s^2*t*x1 + u^3*x2 + x1*x2*y1")
    n1 = normal_form(probe, gb1, order)
    n2 = normal_form(probe, gb2, order)
    assert [p.to_str() for p in n1.to_column()] == \
        [p.to_str() for p in n2.to_column()]
