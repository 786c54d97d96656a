"""Weight combinatorics for the rank-two torus: regions, orders, reductions.

Weights are pairs (i, j) of integers.  The reflection sigma swaps the two
coordinates.  A WeightRegion is a union of systems of linear inequalities;
the two standard window regions and the restricted strip are built by
window_regions.  reduce_to_window pushes an arbitrary sigma-symmetric
weight set into the positive window by strip normalization followed by
width-reduction steps, recording a trace.  enumerate_exceptional lists the
two-variable-swap irreducibles squeezed between the windows together with
their Hom-order DAG.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import ceil, comb, floor

from .mf import MatrixFactorization


class UnboundedRegionError(ValueError):
    pass


class WeightRegion:
    """Union of conjunctions of inequalities a*i + b*j <= c on Z².

    systems: list of systems; each system is a list of (a, b, c) triples.
    Membership is decidable always; enumeration only when the underlying
    rational polyhedron is bounded (or empty).
    """

    def __init__(self, systems, name=None):
        self.systems = [list(sys) for sys in systems]
        self.name = name

    def contains(self, w):
        i, j = w
        for sys in self.systems:
            if all(a * i + b * j <= c for (a, b, c) in sys):
                return True
        return False

    def __contains__(self, w):
        return self.contains(w)

    def is_bounded(self):
        for sys in self.systems:
            feasible, bounded, _ = _system_points(sys, points=False)
            if feasible and not bounded:
                return False
        return True

    def enumerate(self):
        """Sorted list of lattice points; raises if unbounded."""
        out = set()
        for sys in self.systems:
            feasible, bounded, pts = _system_points(sys, points=True)
            if feasible and not bounded:
                raise UnboundedRegionError(
                    "region %s is unbounded" % (self.name or self.systems))
            out.update(pts or [])
        return sorted(out)

    def inequality_strings(self):
        def term(coef, var):
            if coef == 0:
                return ""
            if coef == 1:
                return "+%s" % var
            if coef == -1:
                return "-%s" % var
            return "%+d%s" % (coef, var)

        out = []
        for sys in self.systems:
            lines = []
            for (a, b, c) in sys:
                lhs = (term(a, "i") + term(b, "j")).lstrip("+") or "0"
                lines.append("%s <= %d" % (lhs, c))
            out.append(lines)
        return out

    def to_json(self):
        return {"name": self.name,
                "systems": [[list(ineq) for ineq in sys]
                            for sys in self.systems]}

    def __repr__(self):
        return "WeightRegion(%s)" % (self.name or self.systems)


def _system_points(system, points=True):
    """(feasible, bounded, lattice points or None) for one system."""
    pure_i = [(a, c) for (a, b, c) in system if b == 0]
    ub = [t for t in system if t[1] > 0]
    lb = [t for t in system if t[1] < 0]
    derived = list(pure_i)
    for (a1, b1, c1) in ub:
        for (a2, b2, c2) in lb:
            # (c2 - a2 i)/b2 <= j <= (c1 - a1 i)/b1
            derived.append((b1 * a2 - b2 * a1, b1 * c2 - b2 * c1))
    ilo = ihi = None
    for (a, c) in derived:
        if a == 0:
            if c < 0:
                return False, True, []
        elif a > 0:
            v = Fraction(c, a)
            if ihi is None or v < ihi:
                ihi = v
        else:
            v = Fraction(c, a)
            if ilo is None or v > ilo:
                ilo = v
    if ilo is not None and ihi is not None and ilo > ihi:
        return False, True, []
    if not (ub and lb) or ilo is None or ihi is None:
        return True, False, None
    if not points:
        return True, True, None
    pts = []
    for i in range(ceil(ilo), floor(ihi) + 1):
        jlo = jhi = None
        ok = True
        for (a, b, c) in system:
            rhs = c - a * i
            if b == 0:
                if rhs < 0:
                    ok = False
                    break
            elif b > 0:
                v = Fraction(rhs, b)
                if jhi is None or v < jhi:
                    jhi = v
            else:
                v = Fraction(rhs, b)
                if jlo is None or v > jlo:
                    jlo = v
        if not ok or jlo > jhi:
            continue
        for j in range(ceil(jlo), floor(jhi) + 1):
            pts.append((i, j))
    return True, True, pts


def window_regions(n, l):
    """The positive window, the negative strip, and the restricted strip.

    Pairs lie in the positive window when their sum sits in [0, 2n-1] and
    their width |i-j| is small; for even n the width bound drops by one on
    the upper half of the strip.  The negative strip bounds the sum by
    [0, 2l-1] only (unbounded region); the restricted strip adds the width
    bound floor(n/2).
    """
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    lo = (-1, -1, 0)
    if n % 2 == 1:
        k = (n - 1) // 2
        s_plus = WeightRegion(
            [[lo, (1, 1, 2 * n - 1), (1, -1, k), (-1, 1, k)]], name="S+")
    else:
        h = n // 2
        s_plus = WeightRegion(
            [[lo, (1, 1, n - 1), (1, -1, h), (-1, 1, h)],
             [(-1, -1, -n), (1, 1, 2 * n - 1), (1, -1, h - 1), (-1, 1, h - 1)]],
            name="S+")
    s_minus = WeightRegion([[lo, (1, 1, 2 * l - 1)]], name="S-")
    w = n // 2
    s_minus_res = WeightRegion(
        [[lo, (1, 1, 2 * l - 1), (1, -1, w), (-1, 1, w)]], name="S-res")
    return s_plus, s_minus, s_minus_res


# ---------------------------------------------------------------------------
# orders on the weight lattice


def sigma_weight(w):
    return (w[1], w[0])


def sigma_set(ws):
    return {(b, a) for (a, b) in ws}


def is_sigma_symmetric(ws):
    ws = set(ws)
    return all((b, a) in ws for (a, b) in ws)


STRATUM_KINDS = ("full", "X-locus", "y-locus")


def leq_stratum(w1, w2, stratum="full"):
    """Partial order from the monoid of coordinate weights on a stratum.

    full: both product coordinates available, w1 <= w2 iff the difference
        is componentwise nonnegative.
    X-locus: first-factor coordinates (weight (1,0)) and the pairing
        coordinates (weight (-1,-1)): w2 = w1 + (l-m, -m) with l, m >= 0.
    y-locus: the mirrored stratum, w2 = w1 + (-m, l-m).
    """
    di = w2[0] - w1[0]
    dj = w2[1] - w1[1]
    if stratum == "full":
        return di >= 0 and dj >= 0
    if stratum == "X-locus":
        return dj <= 0 and di - dj >= 0
    if stratum == "y-locus":
        return di <= 0 and dj - di >= 0
    raise ValueError("unknown stratum %r (want one of %s)"
                     % (stratum, ", ".join(STRATUM_KINDS)))


def up_closure(seeds, stratum="full"):
    """Predicate for {w : some seed <= w}."""
    seeds = [tuple(s) for s in seeds]
    return lambda w: any(leq_stratum(s, w, stratum) for s in seeds)


def down_closure(seeds, stratum="full"):
    """Predicate for {w : w <= some seed}."""
    seeds = [tuple(s) for s in seeds]
    return lambda w: any(leq_stratum(w, s, stratum) for s in seeds)


def is_good(ws, n):
    """No collision between the set and its n+1 shifted reflections.

    True iff (union over i = 0..n of sigma(S) - (i, 0)) does not meet S.
    """
    ws = set(ws)
    for (a, b) in ws:
        for i in range(n + 1):
            if (b - i, a) in ws:
                return False
    return True


# ---------------------------------------------------------------------------
# truncation of graded complexes


def weight_truncate(m, selector):
    """Split a graded complex by a d-closed selection of generator weights.

    selector: a finite collection of weight pairs or a predicate on pairs
    (use up_closure/down_closure to build one from seeds).  Every nonzero
    entry from a selected generator must land on a selected generator;
    otherwise a ValueError reports the first escaping entry.  Returns
    (subcomplex, quotient complex).
    """
    if callable(selector):
        pred = selector
    else:
        chosen = {tuple(w) for w in selector}
        pred = lambda w: tuple(w) in chosen
    keep = [idx for idx, g in enumerate(m.gens) if pred(tuple(g.torus))]
    kept = set(keep)
    for (t, s), p in m.entries.items():
        if p.is_zero():
            continue
        if s in kept and t not in kept:
            raise ValueError(
                "selection not closed under the differential: entry %s -> %s"
                % (m.gens[s].label, m.gens[t].label))
    rest = [idx for idx in range(len(m.gens)) if idx not in kept]
    return _sub_complex(m, keep), _sub_complex(m, rest)


def _sub_complex(m, keep):
    pos = {idx: k for k, idx in enumerate(keep)}
    entries = {}
    for (t, s), p in m.entries.items():
        if t in pos and s in pos and not p.is_zero():
            entries[(pos[t], pos[s])] = p
    return MatrixFactorization(m.ring, m.w, [m.gens[idx] for idx in keep],
                               entries, ideal=m.ideal)


# ---------------------------------------------------------------------------
# reduction into the positive window


def reduce_to_window(ws, n):
    """Push a sigma-symmetric weight set into the positive window.

    Phase 1 moves each weight along the diagonal so its coordinate sum
    lands in the strip [0, 2n-1].  Phase 2 repeatedly removes the extremal
    width-k weights: on the high-sum side they are replaced by their n
    lowered copies; on the low-sum side the raised copies are intersected
    with their mirror image.  Both phases preserve sigma-symmetry; each
    phase-2 step either lowers the maximal width or shrinks the count of
    maximal-width weights, so the loop terminates with a subset of the
    positive window.  Returns (final set, trace of steps).
    """
    current = {tuple(w) for w in ws}
    if not is_sigma_symmetric(current):
        raise ValueError("weight set is not sigma-symmetric")
    s_plus, _, _ = window_regions(n, max(0, n - 1))
    trace = []

    moves = []
    normalized = set()
    for w in sorted(current):
        ssum = w[0] + w[1]
        if ssum > 2 * n - 1:
            k = -((ssum - (2 * n - 1) + 1) // 2)
        elif ssum < 0:
            k = (-ssum + 1) // 2
        else:
            k = 0
        if k:
            moves.append({"weight": list(w), "diagonal_steps": k})
        normalized.add((w[0] + k, w[1] + k))
    if moves:
        trace.append({"stage": "strip", "moves": moves,
                      "result": sorted(normalized)})
    current = normalized

    def width(w):
        return abs(w[0] - w[1])

    while current and not all(s_plus.contains(w) for w in current):
        k = max(width(w) for w in current)
        high = {w for w in current if width(w) == k and w[0] + w[1] >= n}
        if high:
            chosen = {w for w in high if w[0] < w[1]}
            mirror = sigma_set(chosen)
            add = set()
            for i in range(1, n + 1):
                add |= {(a, b - i) for (a, b) in chosen}
                add |= {(a - i, b) for (a, b) in mirror}
            new = (current - (chosen | mirror)) | add
            trace.append({"stage": "width", "side": "high", "width": k,
                          "chosen": sorted(chosen), "result": sorted(new)})
        else:
            low = {w for w in current if width(w) == k}
            chosen = {w for w in low if w[0] > w[1]}
            cand = (current - chosen) | {(a, b + i) for (a, b) in chosen
                                         for i in range(1, n + 1)}
            new = cand & sigma_set(cand)
            trace.append({"stage": "width", "side": "low", "width": k,
                          "chosen": sorted(chosen), "result": sorted(new)})
        current = new

    return current, trace


def random_strip_weights(n, rng, count=4):
    """Random swap-symmetric weight set suitable for reduce_to_window.

    Draws orbit seeds from a band wide enough to exercise both reduction
    phases and closes under the swap.  count bounds the number of seeds,
    so the result has at most 2*count weights.
    """
    ws = set()
    for _ in range(count):
        i = rng.randint(-2 * n, 3 * n)
        j = rng.randint(-2 * n, 3 * n)
        ws.add((i, j))
        ws.add((j, i))
    return ws


# ---------------------------------------------------------------------------
# exceptional collections between the windows


class IrrepLabel:
    """Either the swap-orbit of an off-diagonal pair or a signed diagonal.

    kind "off": weight (i, j) with i > j stands for the orbit
    {(i, j), (j, i)}.  kind "diag": weight (i, i) plus a sign, the two
    equivariant structures on the diagonal character.
    """

    __slots__ = ("kind", "weight", "sign")

    def __init__(self, kind, weight, sign=None):
        if kind not in ("off", "diag"):
            raise ValueError("kind must be 'off' or 'diag'")
        weight = tuple(weight)
        if kind == "off":
            if weight[0] <= weight[1]:
                raise ValueError("off-diagonal canonical form needs i > j")
            if sign is not None:
                raise ValueError("off-diagonal labels carry no sign")
        else:
            if weight[0] != weight[1]:
                raise ValueError("diagonal label needs i == j")
            if sign not in (1, -1):
                raise ValueError("diagonal labels need sign +-1")
        self.kind = kind
        self.weight = weight
        self.sign = sign

    def orbit(self):
        if self.kind == "off":
            return [self.weight, (self.weight[1], self.weight[0])]
        return [self.weight]

    def to_json(self):
        out = {"kind": self.kind, "weight": list(self.weight)}
        if self.kind == "diag":
            out["sign"] = self.sign
        return out

    def __eq__(self, other):
        return (isinstance(other, IrrepLabel) and self.kind == other.kind
                and self.weight == other.weight and self.sign == other.sign)

    def __hash__(self):
        return hash((self.kind, self.weight, self.sign))

    def __repr__(self):
        if self.kind == "off":
            return "IrrepLabel(off %s)" % (self.weight,)
        return "IrrepLabel(diag %s %s)" % (self.weight,
                                           "+" if self.sign == 1 else "-")


def irrep_leq(r1, r2):
    """Orbit order: some representative pair dominates componentwise."""
    return any(a[0] <= b[0] and a[1] <= b[1]
               for a in r1.orbit() for b in r2.orbit())


def enumerate_exceptional(n, l):
    """Irreducibles whose weights fill the window gap, with the Hom DAG.

    Returns (labels, edges); edges are index pairs (a, b) with
    labels[a] < labels[b] in the orbit order (distinct orbits only, which
    keeps the relation acyclic).
    """
    s_plus, _, s_res = window_regions(n, l)
    gap = [w for w in s_plus.enumerate() if not s_res.contains(w)]
    labels = []
    seen = set()
    for (i, j) in gap:
        if i == j:
            labels.append(IrrepLabel("diag", (i, i), 1))
            labels.append(IrrepLabel("diag", (i, i), -1))
        else:
            canon = (max(i, j), min(i, j))
            if canon not in seen:
                seen.add(canon)
                labels.append(IrrepLabel("off", canon))
    labels.sort(key=lambda r: (sum(r.weight), r.weight,
                               0 if r.sign is None else -r.sign))
    edges = []
    for a, ra in enumerate(labels):
        for b, rb in enumerate(labels):
            if a == b or set(ra.orbit()) == set(rb.orbit()):
                continue
            if irrep_leq(ra, rb):
                edges.append((a, b))
    return labels, edges


def _monomial_count(n, a, b):
    """Bidegree-(a, b) monomials in n symbols of each of the two kinds."""
    if a < 0 or b < 0:
        return 0
    return comb(a + n - 1, n - 1) * comb(b + n - 1, n - 1)


def invariant_hom_dim(r1, r2, model):
    """Dimension of swap-invariant maps between two irreducibles.

    model: the number of coordinates in each factor, or a ring whose
    x-variables are counted.  Off-diagonal orbits pair freely with both
    representatives of the target; diagonal-to-diagonal maps split into
    swap-fixed monomials (kept only when the signs agree) plus exchanged
    pairs (always kept).
    """
    if isinstance(model, int):
        n = model
    else:
        n = sum(1 for v in model.names if v.startswith("x"))
    if n <= 0:
        raise ValueError("model has no first-factor coordinates")

    w1 = r1.weight
    w2 = r2.weight
    if r1.kind == "off" and r2.kind == "off":
        d1 = (w2[0] - w1[0], w2[1] - w1[1])
        d2 = (w2[1] - w1[0], w2[0] - w1[1])
        return _monomial_count(n, *d1) + _monomial_count(n, *d2)
    if r1.kind == "off" or r2.kind == "off":
        return _monomial_count(n, w2[0] - w1[0], w2[1] - w1[1])
    a = w2[0] - w1[0]
    total = _monomial_count(n, a, a)
    fixed = comb(a + n - 1, n - 1) if a >= 0 else 0
    pairs = (total - fixed) // 2
    return fixed + pairs if r1.sign == r2.sign else pairs
