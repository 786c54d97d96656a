"""Window regions, weight orders, reduction, exceptional collections."""

import random

import pytest

from mfwin.poly import so2_local_ring
from mfwin.mf import (
    direct_sum,
    knorrer_factor,
    koszul_mf,
    twist_mf,
    validate_mf,
    weights_at_point,
)
from mfwin.windows import (
    IrrepLabel,
    UnboundedRegionError,
    down_closure,
    enumerate_exceptional,
    invariant_hom_dim,
    irrep_leq,
    is_good,
    is_sigma_symmetric,
    leq_stratum,
    random_strip_weights,
    reduce_to_window,
    sigma_set,
    up_closure,
    weight_truncate,
    window_regions,
)


def test_window_regions_reference_counts() -> None:
    s_plus, s_minus, s_res = window_regions(3, 2)
    assert s_plus.enumerate() == [
        (0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)]
    assert s_res.enumerate() == [
        (0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]
    assert len(s_plus.enumerate()) == 9 and len(s_res.enumerate()) == 6


def test_negative_strip_is_unbounded() -> None:
    _, s_minus, _ = window_regions(3, 2)
    assert not s_minus.is_bounded()
    with pytest.raises(UnboundedRegionError):
        s_minus.enumerate()
    # membership still decidable
    assert (0, 0) in s_minus and (3, 0) in s_minus
    assert (5, 5) not in s_minus and (-1, 0) not in s_minus


def test_restricted_strip_empty_without_pencil() -> None:
    _, _, s_res = window_regions(3, 0)
    assert s_res.enumerate() == []
    _, s_minus, _ = window_regions(3, 0)
    assert (0, 0) not in s_minus


def test_even_rank_window_membership() -> None:
    s_plus, _, _ = window_regions(4, 1)
    assert (2, 2) in s_plus
    assert (3, 1) not in s_plus
    # width bound drops by one on the upper half of the strip
    assert (2, 0) in s_plus and (4, 2) not in s_plus
    assert (3, 4) in s_plus


def test_window_regions_reject_bad_parameters() -> None:
    with pytest.raises(ValueError):
        window_regions(0, 1)
    with pytest.raises(ValueError):
        window_regions(3, -1)


def test_stratum_orders() -> None:
    assert leq_stratum((0, 0), (1, 0), "X-locus")
    assert leq_stratum((0, 0), (-1, -1), "X-locus")
    assert not leq_stratum((0, 0), (0, 1), "X-locus")
    assert leq_stratum((0, 0), (0, 1), "y-locus")
    assert leq_stratum((0, 0), (-1, -1), "y-locus")
    assert not leq_stratum((0, 0), (1, 0), "y-locus")
    assert leq_stratum((0, 0), (2, 3), "full")
    assert not leq_stratum((0, 0), (2, -1), "full")
    with pytest.raises(ValueError):
        leq_stratum((0, 0), (1, 1), "z-locus")


def test_closure_predicates() -> None:
    up = up_closure([(0, 0)], "full")
    assert up((2, 1)) and not up((-1, 3))
    down = down_closure([(0, 0)], "X-locus")
    # below (0,0) on the X-locus: second coordinate >= max(0, first)
    assert down((-1, 0)) and down((1, 1)) and down((-1, 1))
    assert not down((1, 0))
    assert not down((-2, -1))


def test_is_good_reference_sets() -> None:
    assert is_good({(0, 3)}, 3)
    assert not is_good({(0, 0)}, 3)
    assert is_good({(1, 2), (0, 3)}, 3)
    assert not is_good({(0, 3), (3, 0)}, 3)


def test_sigma_set_helpers() -> None:
    assert sigma_set({(1, 2), (0, 0)}) == {(2, 1), (0, 0)}
    assert is_sigma_symmetric({(1, 2), (2, 1)})
    assert not is_sigma_symmetric({(1, 2)})


def test_weight_truncate_block_selection() -> None:
    ring = so2_local_ring(2, corank=0)
    a = twist_mf(knorrer_factor(ring, 1), 5)   # weights {5, 4}
    b = knorrer_factor(ring, 1)                # weights {0, -1}
    m = direct_sum(a, b)
    sub, quot = weight_truncate(m, [(5,), (4,)])
    assert sub.rank == 2 and quot.rank == 2
    assert validate_mf(sub)["ok"] and validate_mf(quot)["ok"]
    assert sorted(g.torus[0] for g in sub.gens) == [4, 5]
    assert sorted(g.torus[0] for g in quot.gens) == [-1, 0]


def test_weight_truncate_trivial_selection() -> None:
    ring = so2_local_ring(2, corank=0)
    m = knorrer_factor(ring, 1)
    sub, quot = weight_truncate(m, lambda w: True)
    assert sub.rank == m.rank and quot.rank == 0


def test_weight_truncate_escaping_selection_raises() -> None:
    ring = so2_local_ring(2, corank=0)
    m = knorrer_factor(ring, 1)
    with pytest.raises(ValueError, match="not closed under the differential"):
        weight_truncate(m, [(0,)])


def test_reduce_noop_inside_window() -> None:
    ws = {(0, 0), (1, 0), (0, 1)}
    final, trace = reduce_to_window(ws, 3)
    assert final == ws and trace == []


def test_reduce_worked_example_trace() -> None:
    final, trace = reduce_to_window([(0, 3), (3, 0)], 3)
    assert final == {(0, 0), (0, 1), (1, 0), (2, 2)}
    assert trace == [
        {"stage": "width", "side": "high", "width": 3, "chosen": [(0, 3)],
         "result": [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]},
        {"stage": "width", "side": "low", "width": 2, "chosen": [(2, 0)],
         "result": [(0, 0), (0, 1), (1, 0), (2, 2)]},
    ]


def test_reduce_diagonal_uses_strip_phase_only() -> None:
    final, trace = reduce_to_window({(4, 4)}, 3)
    assert final == {(2, 2)}
    assert trace == [{"stage": "strip",
                      "moves": [{"weight": [4, 4], "diagonal_steps": -2}],
                      "result": [(2, 2)]}]


def test_reduce_rejects_asymmetric_input() -> None:
    with pytest.raises(ValueError, match="sigma-symmetric"):
        reduce_to_window({(1, 0)}, 3)


def test_reduce_random_sets_land_in_window() -> None:
    rng = random.Random(20260823)
    for n in (3, 4, 5):
        s_plus, _, _ = window_regions(n, max(0, n - 1))
        for _ in range(60):
            ws = random_strip_weights(n, rng)
            assert is_sigma_symmetric(ws)
            final, _ = reduce_to_window(ws, n)
            assert is_sigma_symmetric(final)
            assert all(w in s_plus for w in final)


def test_random_strip_weights_shape() -> None:
    rng = random.Random(5)
    ws = random_strip_weights(3, rng, count=4)
    assert is_sigma_symmetric(ws)
    assert 0 < len(ws) <= 8


def test_irrep_label_validation() -> None:
    with pytest.raises(ValueError):
        IrrepLabel("off", (1, 2))  # needs i > j
    with pytest.raises(ValueError):
        IrrepLabel("off", (2, 1), sign=1)
    with pytest.raises(ValueError):
        IrrepLabel("diag", (1, 2), sign=1)
    with pytest.raises(ValueError):
        IrrepLabel("diag", (1, 1))  # sign required
    with pytest.raises(ValueError):
        IrrepLabel("spin", (1, 1), sign=1)
    assert IrrepLabel("off", (2, 1)).orbit() == [(2, 1), (1, 2)]
    assert IrrepLabel("diag", (1, 1), 1).orbit() == [(1, 1)]


def test_exceptional_collection_without_pencil() -> None:
    labels, edges = enumerate_exceptional(3, 0)
    assert len(labels) == 9
    kinds = [(r.kind, r.weight, r.sign) for r in labels]
    assert kinds == [
        ("diag", (0, 0), 1), ("diag", (0, 0), -1), ("off", (1, 0), None),
        ("diag", (1, 1), 1), ("diag", (1, 1), -1), ("off", (2, 1), None),
        ("diag", (2, 2), 1), ("diag", (2, 2), -1), ("off", (3, 2), None)]
    # edges form a DAG compatible with the sort order
    assert all(a < b for a, b in edges)


def test_exceptional_collection_gap_at_reference_point() -> None:
    labels, edges = enumerate_exceptional(3, 2)
    assert [(r.kind, r.weight, r.sign) for r in labels] == [
        ("diag", (2, 2), 1), ("diag", (2, 2), -1), ("off", (3, 2), None)]
    assert edges == [(0, 2), (1, 2)]


def test_exceptional_collection_empty_when_windows_agree() -> None:
    assert enumerate_exceptional(3, 3) == ([], [])
    assert enumerate_exceptional(5, 5) == ([], [])
    assert enumerate_exceptional(5, 7) == ([], [])


def test_incomparable_labels_admit_no_invariant_maps() -> None:
    for n, l in ((3, 0), (3, 2)):
        labels, _ = enumerate_exceptional(n, l)
        for r1 in labels:
            for r2 in labels:
                if set(r1.orbit()) == set(r2.orbit()):
                    continue
                if not irrep_leq(r1, r2):
                    assert invariant_hom_dim(r1, r2, n) == 0


def test_invariant_hom_dim_reference_values() -> None:
    d0p = IrrepLabel("diag", (0, 0), 1)
    d0m = IrrepLabel("diag", (0, 0), -1)
    d1p = IrrepLabel("diag", (1, 1), 1)
    d1m = IrrepLabel("diag", (1, 1), -1)
    off10 = IrrepLabel("off", (1, 0))
    assert invariant_hom_dim(d0p, off10, 3) == 3
    assert invariant_hom_dim(off10, d0p, 3) == 0
    # 9 bidegree-(1,1) monomials: 3 swap-fixed plus 3 exchanged pairs
    assert invariant_hom_dim(d0p, d1p, 3) == 6
    assert invariant_hom_dim(d0p, d1m, 3) == 3
    assert invariant_hom_dim(d0m, d1m, 3) == 6
    # a ring stands in for the coordinate count
    ring = so2_local_ring(3)
    assert invariant_hom_dim(d0p, d1p, ring) == 6
    with pytest.raises(ValueError):
        invariant_hom_dim(d0p, d1p, 0)


def test_maximal_weights_survive_in_homology() -> None:
    # objects whose differential vanishes at the origin keep a nonzero
    # homology piece at their maximal generator weight
    ring = so2_local_ring(3)
    rng = random.Random(99)
    slots = [("s", "x1*y1"), ("t", "x1*y2"), ("x1", "y1"),
             ("x2", "y2"), ("x3", "y3")]
    for _ in range(10):
        picks = [rng.choice(slots) for _ in range(rng.randint(1, 3))]
        m = koszul_mf(ring,
                      [ring.parse(a) for a, _ in picks],
                      [ring.parse(b) for _, b in picks],
                      twist=rng.randint(-2, 2))
        top = max(g.torus[0] for g in m.gens)
        rep = weights_at_point(m, {})
        assert top in rep["weights"]
        assert sum(rep["multiplicities"][top]) > 0
