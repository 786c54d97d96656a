"""Graded matrix factorizations: constructors, operations, fiber weights."""

import random

import pytest

from mfwin.poly import RingSpec, so2_local_ring
from mfwin.mf import (
    Gen,
    MatrixFactorization,
    apply_generator_permutation,
    corank2_pair,
    direct_sum,
    dual_mf,
    even_corank1_pair,
    global_koszul,
    hom_dg,
    knorrer_factor,
    knorrer_factor_o2,
    koszul_mf,
    mf_equal,
    restrict_mf,
    shift_mf,
    sigma_mf,
    standard_model,
    standard_quadric_basis,
    tensor_mf,
    twist_mf,
    validate_mf,
    weights_at_point,
)


def test_koszul_squares_to_potential() -> None:
    R = so2_local_ring(3, corank=0)
    for k in range(1, 4):
        a = [R.var("x%d" % (i + 1)) for i in range(k)]
        b = [R.var("y%d" % (i + 1)) for i in range(k)]
        m = koszul_mf(R, a, b)
        assert m.rank == 2 ** k
        rep = validate_mf(m)
        assert rep["ok"], rep["errors"]


def test_koszul_zero_slot_is_allowed() -> None:
    R = so2_local_ring(2, corank=0)
    m = koszul_mf(R, [R.zero()], [R.var("y1")])
    assert validate_mf(m)["ok"]
    assert m.w.is_zero()
    m2 = koszul_mf(R, [R.var("x1")], [R.zero()])
    assert validate_mf(m2)["ok"]


def test_koszul_rejects_bad_slots() -> None:
    R = so2_local_ring(2)
    with pytest.raises(ValueError):
        koszul_mf(R, [R.var("x1")], [R.var("x2")])  # weights do not cancel
    with pytest.raises(ValueError):
        koszul_mf(R, [R.var("x1")], [R.parse("x2*y1*y2")])  # r-degrees sum to 4
    with pytest.raises(ValueError):
        koszul_mf(R, [R.zero()], [R.zero()])
    with pytest.raises(ValueError):
        koszul_mf(R, [R.var("x1")], [])


def test_standard_models_validate() -> None:
    for n, corank in ((2, 2), (3, 2), (2, 1), (4, 1), (2, 0)):
        model = standard_model(n, corank)
        for name, obj in model.objects.items():
            rep = validate_mf(obj)
            assert rep["ok"], (n, corank, name, rep["errors"])


def test_standard_model_bad_parameters() -> None:
    with pytest.raises(ValueError):
        standard_model(4, 2)  # chain only covers n = 2 and odd n
    with pytest.raises(ValueError):
        standard_model(3, 1)  # even-case model needs even n
    with pytest.raises(ValueError):
        standard_model(2, 3)
    with pytest.raises(ValueError):
        standard_model(2, 2, variant="su2")


def test_rank_six_pair_shapes() -> None:
    ring = so2_local_ring(2)
    m1, m2 = corank2_pair(ring)
    assert m1.rank == 6 and m2.rank == 6
    assert sorted(m1.entries) == sorted(m2.entries)
    assert validate_mf(m1)["ok"] and validate_mf(m2)["ok"]
    # the second family is the involution image of the first, re-twisted
    assert mf_equal(m2, twist_mf(sigma_mf(m1), -1))


def test_validate_reports_degree_error_with_location() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    bad = MatrixFactorization(ring, m1.w, list(m1.gens), dict(m1.entries))
    bad.entries[(0, 2)] = ring.parse("x1^2")
    rep = validate_mf(bad)
    assert not rep["ok"]
    assert any("m0<-m2" in e and "torus degree" in e for e in rep["errors"])


def test_validate_reports_square_error_with_location() -> None:
    ring = so2_local_ring(2)
    _, m2 = corank2_pair(ring)
    bad = MatrixFactorization(ring, m2.w, list(m2.gens), dict(m2.entries))
    del bad.entries[(1, 4)]
    rep = validate_mf(bad)
    assert not rep["ok"]
    assert any(e.startswith("d^2 fails at (") for e in rep["errors"])


def test_tensor_multiplies_rank_and_adds_potential() -> None:
    ring = so2_local_ring(3)
    m1, _ = corank2_pair(ring)
    f = knorrer_factor(ring, 3)
    t = tensor_mf(m1, f)
    assert t.rank == m1.rank * f.rank
    assert t.w == m1.w + f.w
    assert validate_mf(t)["ok"]


def test_dual_negates_potential_and_degrees() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    d = dual_mf(m1)
    assert d.w == -m1.w
    assert [g.torus for g in d.gens] == [tuple(-c for c in g.torus)
                                         for g in m1.gens]
    assert [g.shift for g in d.gens] == [-g.shift for g in m1.gens]
    assert validate_mf(d)["ok"]


def test_shift_twice_is_identity() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    assert mf_equal(shift_mf(shift_mf(m1, 1), -1), m1)
    assert mf_equal(shift_mf(m1, 2),
                    MatrixFactorization(ring, m1.w,
                                        [Gen(g.label, g.torus, g.shift + 2)
                                         for g in m1.gens],
                                        dict(m1.entries)))


def test_twist_moves_generator_weights() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    t = twist_mf(m1, 5)
    assert [g.torus[0] for g in t.gens] == [g.torus[0] + 5 for g in m1.gens]
    assert t.entries == m1.entries
    assert validate_mf(t)["ok"]


def test_hom_dg_has_zero_potential() -> None:
    ring = so2_local_ring(2)
    m1, m2 = corank2_pair(ring)
    h = hom_dg(m1, m1)
    assert h.w.is_zero()
    assert h.rank == 36
    # d^2 = 0 on the nose for an endomorphism complex
    assert all(p.is_zero() for p in h.d_squared().values())
    # cross Hom also squares to zero: potentials cancel whatever the twists
    hx = hom_dg(m1, m2)
    assert hx.w.is_zero()
    assert all(p.is_zero() for p in hx.d_squared().values())


def test_direct_sum_requires_matching_potential() -> None:
    ring = so2_local_ring(2)
    m1, m2 = corank2_pair(ring)
    s = direct_sum(m1, m1)
    assert s.rank == 12 and validate_mf(s)["ok"]
    k = knorrer_factor(ring, 1)
    with pytest.raises(ValueError):
        direct_sum(m1, k)


def test_generator_permutation_preserves_validity() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    perm = [3, 0, 5, 1, 2, 4]
    p = apply_generator_permutation(m1, perm, signs=[1, -1, 1, 1, -1, 1])
    assert validate_mf(p)["ok"]
    assert [g.label for g in p.gens] == ["m3", "m0", "m5", "m1", "m2", "m4"]


def test_json_roundtrip_preserves_object() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    m1r = restrict_mf(m1, [ring.parse("s")])
    back = MatrixFactorization.from_json(m1r.to_json())
    assert mf_equal(back, m1r, up_to_labels=False)
    assert [p.to_str() for p in back.ideal] == ["s"]


def test_knorrer_rank_two_kernel() -> None:
    ring = so2_local_ring(2, corank=0)
    k = knorrer_factor(ring, 1)
    assert k.rank == 2
    assert validate_mf(k)["ok"]
    rep = weights_at_point(k, {})
    assert rep["weights"] == [-1, 0]
    assert rep["multiplicities"] == {-1: (0, 1), 0: (1, 0)}


def test_knorrer_rank_four_kernel_with_involution() -> None:
    ring = so2_local_ring(2, corank=0)
    k, sig = knorrer_factor_o2(ring, 1, 2)
    assert k.rank == 4
    assert validate_mf(k)["ok"]
    assert sig.square == -1
    v = sig.verify()
    assert v["ok"] and v["chain"] and v["square"]
    rep = weights_at_point(k, {})
    assert rep["weights"] == [-1, 0, 1]


def _random_koszul(rng, ring):
    choices = [("s", "x1*y1"), ("t", "x1*y2"), ("u", "x2*y2"),
               ("x1", "y1"), ("x2", "y2"), ("x3", "y3")]
    slots = [rng.choice(choices) for _ in range(rng.randint(1, 3))]
    return koszul_mf(ring,
                     [ring.parse(a) for a, _ in slots],
                     [ring.parse(b) for _, b in slots],
                     twist=rng.randint(-1, 1))


def _weight_totals(m, point):
    rep = weights_at_point(m, point)
    return {w: sum(rep["multiplicities"][w]) for w in rep["weights"]}


def test_knorrer_tensor_weight_laws_on_random_objects() -> None:
    ring = so2_local_ring(3)
    rng = random.Random(11)
    k2 = knorrer_factor(ring, 3)
    k4, _ = knorrer_factor_o2(ring, 1, 2)
    for _ in range(10):
        m = _random_koszul(rng, ring)
        for point in ({}, {"s": 1}, {"s": 1, "t": 0, "u": 0}):
            t0 = _weight_totals(m, point)
            got2 = _weight_totals(tensor_mf(m, k2), point)
            want2 = {}
            for w in set(list(t0) + [w - 1 for w in t0]):
                v = t0.get(w + 1, 0) + t0.get(w, 0)
                if v:
                    want2[w] = v
            assert got2 == want2
            got4 = _weight_totals(tensor_mf(m, k4), point)
            want4 = {}
            for w in set(w + d for w in t0 for d in (-1, 0, 1)):
                v = t0.get(w + 1, 0) + 2 * t0.get(w, 0) + t0.get(w - 1, 0)
                if v:
                    want4[w] = v
            assert got4 == want4


def test_weights_of_rank_six_pair_at_strata_points() -> None:
    ring = so2_local_ring(3)
    m1, m2 = corank2_pair(ring)
    rep = weights_at_point(m1, {})
    assert rep["weights"] == [-1, 0]
    assert rep["multiplicities"] == {-1: (2, 2), 0: (1, 1)}
    rep = weights_at_point(m1, {"s": 1})
    assert rep["multiplicities"] == {-1: (1, 1), 0: (1, 1)}
    assert weights_at_point(m1, {"s": 1, "u": 1})["weights"] == []
    rep = weights_at_point(m2, {})
    assert rep["multiplicities"] == {-1: (1, 1), 0: (2, 2)}


def test_weights_at_point_rejects_bad_points() -> None:
    ring = so2_local_ring(2)
    m1, _ = corank2_pair(ring)
    with pytest.raises(ValueError):
        weights_at_point(m1, {"x1": 1})  # fiber variable carries weight
    flat = MatrixFactorization(ring, ring.parse("s"), [Gen("g", (0,), 0)], {})
    with pytest.raises(ValueError):
        weights_at_point(flat, {"s": 1})  # potential does not vanish


def test_even_case_pair_obeys_weight_bound() -> None:
    for n in (2, 4):
        ring = so2_local_ring(n, corank=1)
        k1, k2 = even_corank1_pair(ring, n)
        for k in (k1, k2):
            assert validate_mf(k)["ok"]
            ws = [g.torus[0] for g in k.gens]
            assert min(ws) >= -n // 2 and max(ws) <= n // 2
        # both extremes are hit
        assert max(g.torus[0] for g in k1.gens) == n // 2
        assert min(g.torus[0] for g in k2.gens) == -n // 2
    with pytest.raises(ValueError):
        even_corank1_pair(so2_local_ring(2, corank=1), 3)


def test_global_koszul_ranks_and_validity() -> None:
    for n, l in ((1, 1), (2, 2), (3, 3)):
        m = global_koszul(n, l)
        assert m.rank == 2 ** (2 * n)
        rep = validate_mf(m)
        assert rep["ok"], rep["errors"]


def test_quadric_basis_counts_and_limit() -> None:
    R = so2_local_ring(3, corank=0)
    basis = standard_quadric_basis(R, 3, 6)
    assert len(basis) == 6
    assert all(q.sigma_apply() == q for q in basis)
    assert basis[0] == R.parse("x1*y1")
    assert basis[1] == R.parse("x1*y2 + x2*y1")
    with pytest.raises(ValueError):
        standard_quadric_basis(R, 3, 7)
