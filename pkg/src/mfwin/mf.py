"""Curved differential modules (matrix factorizations) over a graded ring.

An object holds a free module with graded generators, a potential W, and a
square matrix d of polynomial entries with d^2 = W * Id (modulo an optional
ideal, for objects living over a quotient).  Generators carry a torus
weight and an r-shift; the entry from source generator g to target h must
be homogeneous of torus degree chi(h) - chi(g) and r-degree
r(h) - r(g) + 1, so that d raises element r-degree by exactly one.

Parity of a generator is <epsilon, chi> + shift mod 2 for the ring's
epsilon vector; homogeneity then forces d to be parity-odd.
"""

from __future__ import annotations

import itertools

from . import linalg
from .groebner import (ModElt, buchberger, default_order, is_member,
                       normal_form)
from .poly import Poly, RingSpec, ring_from_json


class Gen:
    """A free-module generator: label, torus weight tuple, r-shift."""

    __slots__ = ("label", "torus", "shift")

    def __init__(self, label, torus, shift=0):
        self.label = label
        if isinstance(torus, int):
            torus = (torus,)
        self.torus = tuple(torus)
        self.shift = shift

    def parity(self, ring):
        return ring.parity_of(self.torus, self.shift)

    def weight(self):
        """Scalar weight for rank-one torus gradings."""
        if len(self.torus) == 1:
            return self.torus[0]
        return self.torus

    def __repr__(self):
        return "Gen(%s, chi=%s, r=%d)" % (self.label, self.torus, self.shift)

    def to_json(self):
        return {"label": self.label, "torus": list(self.torus),
                "shift": self.shift}


class MatrixFactorization:
    """d: M -> M with d^2 = W * Id (mod the attached ideal, if any).

    entries: dict (target index, source index) -> nonzero Poly.
    W == 0 (with an ideal) gives an honest differential module.
    """

    def __init__(self, ring, w, gens, entries, ideal=None):
        self.ring = ring
        self.w = w
        self.gens = list(gens)
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self.ideal = list(ideal or [])

    @property
    def rank(self):
        return len(self.gens)

    def entry(self, t, s):
        return self.entries.get((t, s), self.ring.zero())

    def column(self, s):
        return ModElt(self.ring, self.rank,
                      {t: p for (t, si), p in self.entries.items() if si == s})

    def columns(self):
        return [self.column(s) for s in range(self.rank)]

    def gen_degrees(self):
        """Per position: (torus weight, r-shift) — the ambient degree data."""
        return [(g.torus, g.shift) for g in self.gens]

    def d_squared(self):
        out = {}
        for (t, j), p in self.entries.items():
            for (j2, s), q in self.entries.items():
                if j2 != j:
                    continue
                cur = out.get((t, s), self.ring.zero()) + p * q
                if cur.is_zero():
                    out.pop((t, s), None)
                else:
                    out[(t, s)] = cur
        return out

    def compose_with(self, other):
        """Matrix product self . other (self applied after other)."""
        out = {}
        for (t, j), p in self.entries.items():
            for (j2, s), q in other.entries.items():
                if j2 != j:
                    continue
                cur = out.get((t, s), self.ring.zero()) + p * q
                if cur.is_zero():
                    out.pop((t, s), None)
                else:
                    out[(t, s)] = cur
        return out

    def parity(self, i):
        return self.gens[i].parity(self.ring)

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "w": self.w.to_json(),
            "generators": [g.to_json() for g in self.gens],
            "entries": [{"target": t, "source": s, "poly": p.to_json()}
                        for (t, s), p in sorted(self.entries.items())],
            "ideal": [p.to_json() for p in self.ideal],
        }

    @staticmethod
    def from_json(data, ring=None):
        if ring is None:
            ring = ring_from_json(data["ring"])
        w = Poly.from_json(ring, data["w"])
        gens = [Gen(g["label"], tuple(g["torus"]), g["shift"])
                for g in data["generators"]]
        entries = {}
        for e in data["entries"]:
            entries[(e["target"], e["source"])] = Poly.from_json(ring, e["poly"])
        ideal = [Poly.from_json(ring, p) for p in data.get("ideal", [])]
        return MatrixFactorization(ring, w, gens, entries, ideal=ideal)

    def __repr__(self):
        return "MatrixFactorization(rank %d)" % self.rank


def validate_mf(m):
    """Structural and equational checks; returns {"ok": bool, "errors": [...]}."""
    errors = []
    ring = m.ring
    wdeg = None if m.w.is_zero() else m.w.multidegree()
    if not m.w.is_zero():
        if wdeg is None:
            errors.append("potential is not multihomogeneous")
        else:
            if any(c != 0 for c in wdeg["torus"]):
                errors.append("potential has nonzero torus weight %s"
                              % (wdeg["torus"],))
            if wdeg["r"] != 2:
                errors.append("potential has r-degree %d, expected 2" % wdeg["r"])
    for (t, s), p in m.entries.items():
        if t >= m.rank or s >= m.rank or t < 0 or s < 0:
            errors.append("entry (%d,%d) out of range" % (t, s))
            continue
        md = p.multidegree()
        gt, gs = m.gens[t], m.gens[s]
        want_torus = tuple(a - b for a, b in zip(gt.torus, gs.torus))
        want_r = gt.shift - gs.shift + 1
        if md is None:
            errors.append("entry %s<-%s is not homogeneous" % (gt.label, gs.label))
        else:
            if tuple(md["torus"]) != want_torus:
                errors.append("entry %s<-%s has torus degree %s, expected %s"
                              % (gt.label, gs.label, md["torus"], want_torus))
            if md["r"] != want_r:
                errors.append("entry %s<-%s has r-degree %d, expected %d"
                              % (gt.label, gs.label, md["r"], want_r))
    # d^2 = W * Id, modulo the ideal when present
    sq = m.d_squared()
    gb = None
    if m.ideal:
        gb, order = _ideal_gb(ring, m.ideal)
    for t in range(m.rank):
        for s in range(m.rank):
            want = m.w if t == s else ring.zero()
            have = sq.get((t, s), ring.zero())
            diff = have - want
            if diff.is_zero():
                continue
            if gb is not None:
                rem = normal_form(ModElt(ring, 1, {0: diff}), gb, order)
                if rem.is_zero():
                    continue
            errors.append("d^2 fails at (%d,%d): %s" % (t, s, diff))
    return {"ok": not errors, "errors": errors}


def _ideal_gb(ring, gens):
    order = default_order(ring, 1)
    gb = buchberger([ModElt(ring, 1, {0: g}) for g in gens if not g.is_zero()],
                    order)
    return gb, order


# ---------------------------------------------------------------------------
# constructions


def koszul_mf(ring, a_list, b_list, twist=0, prefix="k"):
    """Koszul-type factorization of sum a_i * b_i.

    Generators are indexed by subsets T of {0..k-1}; d sends e_T to
    sum_{t in T} +- a_t e_{T-t} + sum_{t not in T} +- b_t e_{T+t} with the
    usual alternating signs.  Weights: chi(e_T) = -sum_{t in T} chi(a_t)
    (plus the twist); shifts: r(e_T) = sum_{t in T} (1 - rdeg(a_t)).
    """
    k = len(a_list)
    if len(b_list) != k:
        raise ValueError("need equally many a's and b's")
    if isinstance(twist, int):
        twist = (twist,) * 1 if ring.torus_rank == 1 else (twist,) * ring.torus_rank
    adeg = []
    for a, b in zip(a_list, b_list):
        da, db = a.multidegree(), b.multidegree()
        if (da is None and not a.is_zero()) or (db is None and not b.is_zero()):
            raise ValueError("koszul inputs must be homogeneous")
        if a.is_zero() and b.is_zero():
            raise ValueError("koszul needs a nonzero entry in each pair")
        if a.is_zero():
            # zero is homogeneous of any degree; infer the slot's degree
            # from the partner so generator weights stay determined
            da = {"torus": tuple(-c for c in db["torus"]), "r": 2 - db["r"]}
        elif not b.is_zero():
            if any(x + y != 0 for x, y in zip(da["torus"], db["torus"])):
                raise ValueError("koszul torus weights do not cancel")
            if da["r"] + db["r"] != 2:
                raise ValueError("koszul r-degrees must sum to 2")
        adeg.append(da)
    subsets = []
    for size in range(k + 1):
        subsets.extend(itertools.combinations(range(k), size))
    subsets.sort(key=lambda T: (len(T), T))
    index = {T: i for i, T in enumerate(subsets)}
    gens = []
    for T in subsets:
        chi = [0] * ring.torus_rank
        shift = 0
        for t in T:
            for c in range(ring.torus_rank):
                chi[c] -= adeg[t]["torus"][c]
            shift += 1 - adeg[t]["r"]
        chi = tuple(c + tw for c, tw in zip(chi, twist))
        label = prefix + ("".join(str(t) for t in T) if T else "_")
        gens.append(Gen(label, chi, shift))
    entries = {}
    for T in subsets:
        for t in T:
            sgn = (-1) ** sum(1 for sx in T if sx < t)
            T2 = tuple(x for x in T if x != t)
            entries[(index[T2], index[T])] = a_list[t].scale(sgn)
        for t in range(k):
            if t in T:
                continue
            sgn = (-1) ** sum(1 for sx in T if sx < t)
            T2 = tuple(sorted(T + (t,)))
            entries[(index[T2], index[T])] = b_list[t].scale(sgn)
    w = ring.zero()
    for a, b in zip(a_list, b_list):
        w = w + a * b
    return MatrixFactorization(ring, w, gens, entries)


def tensor_mf(m, n):
    """Tensor product; d = d_m (x) 1 + (-1)^{parity} 1 (x) d_n."""
    ring = m.ring
    if n.ring != ring:
        raise ValueError("tensor factors must share a ring")
    gens = []
    pos = {}
    for i, gi in enumerate(m.gens):
        for j, gj in enumerate(n.gens):
            pos[(i, j)] = len(gens)
            gens.append(Gen("%s*%s" % (gi.label, gj.label),
                            tuple(a + b for a, b in zip(gi.torus, gj.torus)),
                            gi.shift + gj.shift))
    entries = {}
    for (t, s), p in m.entries.items():
        for j in range(n.rank):
            entries[(pos[(t, j)], pos[(s, j)])] = p
    for (t, s), p in n.entries.items():
        for i in range(m.rank):
            sgn = -1 if m.parity(i) else 1
            q = p.scale(sgn)
            key = (pos[(i, t)], pos[(i, s)])
            cur = entries.get(key)
            entries[key] = q if cur is None else cur + q
    return MatrixFactorization(ring, m.w + n.w, gens, entries,
                               ideal=list(m.ideal) + list(n.ideal))


def dual_mf(m):
    """Dual object: factorization of -W; entry rule has the Koszul sign."""
    ring = m.ring
    gens = [Gen(g.label + "'", tuple(-c for c in g.torus), -g.shift)
            for g in m.gens]
    entries = {}
    for (t, s), p in m.entries.items():
        # map e_t^dual -> e_s^dual picks up -(-1)^{parity(t)}
        sgn = -1 if m.parity(t) == 0 else 1
        entries[(s, t)] = p.scale(sgn)
    return MatrixFactorization(ring, -m.w, gens, entries, ideal=list(m.ideal))


def twist_mf(m, k):
    """Tensor by the torus character k (int for rank one, tuple otherwise)."""
    if isinstance(k, int):
        k = (k,) * m.ring.torus_rank
    gens = [Gen(g.label, tuple(a + b for a, b in zip(g.torus, k)), g.shift)
            for g in m.gens]
    return MatrixFactorization(m.ring, m.w, gens, dict(m.entries),
                               ideal=list(m.ideal))


def shift_mf(m, k):
    """Homological shift [k]: r-shifts move by k, d picks up (-1)^k."""
    gens = [Gen(g.label, g.torus, g.shift + k) for g in m.gens]
    entries = dict(m.entries) if k % 2 == 0 else \
        {key: p.scale(-1) for key, p in m.entries.items()}
    return MatrixFactorization(m.ring, m.w, gens, entries, ideal=list(m.ideal))


def sigma_mf(m):
    """Apply the ring involution to every entry and generator weight."""
    ring = m.ring
    gens = []
    for g in m.gens:
        lbl = g.label[2:] if g.label.startswith("s:") else "s:" + g.label
        gens.append(Gen(lbl, ring.apply_sigma_torus(g.torus), g.shift))
    entries = {k: p.sigma_apply() for k, p in m.entries.items()}
    return MatrixFactorization(ring, m.w.sigma_apply(), gens, entries,
                               ideal=[p.sigma_apply() for p in m.ideal])


def dual_twist_shift(m, twist=0, shift=0, dualize=False):
    """Composite convenience operation: optional dual, then twist and shift."""
    out = dual_mf(m) if dualize else m
    if twist:
        out = twist_mf(out, twist)
    if shift:
        out = shift_mf(out, shift)
    return out


def hom_dg(m, n):
    """Inner Hom as a differential module: dual(m) (x) n.

    When m and n share a potential the result has W = 0 — an honest
    differential module whose cohomology computes morphisms.  Position
    (i, j) corresponds to the matrix entry sending generator i of m to
    generator j of n.
    """
    return tensor_mf(dual_mf(m), n)


def restrict_mf(m, ideal_gens):
    """The same data considered over the quotient by the given ideal."""
    return MatrixFactorization(m.ring, m.w, list(m.gens), dict(m.entries),
                               ideal=list(m.ideal) + list(ideal_gens))


def direct_sum(m, n):
    ring = m.ring
    gens = list(m.gens) + list(n.gens)
    entries = dict(m.entries)
    off = m.rank
    for (t, s), p in n.entries.items():
        entries[(t + off, s + off)] = p
    if m.w != n.w:
        raise ValueError("direct summands must share the potential")
    return MatrixFactorization(ring, m.w, gens, entries,
                               ideal=list(m.ideal) + list(n.ideal))


def apply_generator_permutation(m, perm, signs=None):
    """Relabel generators: new position i holds old generator perm[i],
    optionally rescaled by signs[i].  Differential conjugated accordingly."""
    ring = m.ring
    inv = {old: new for new, old in enumerate(perm)}
    gens = [m.gens[old] for old in perm]
    signs = signs or [1] * m.rank
    entries = {}
    for (t, s), p in m.entries.items():
        nt, ns = inv[t], inv[s]
        c = ring.field.from_int(signs[nt]) / ring.field.from_int(signs[ns])
        entries[(nt, ns)] = p.scale(c)
    return MatrixFactorization(ring, m.w, gens, entries, ideal=list(m.ideal))


def mf_equal(a, b, up_to_labels=True):
    """Structural equality of two objects (degrees and entries)."""
    if a.rank != b.rank or a.w != b.w:
        return False
    for ga, gbn in zip(a.gens, b.gens):
        if ga.torus != gbn.torus or ga.shift != gbn.shift:
            return False
        if not up_to_labels and ga.label != gbn.label:
            return False
    return a.entries == b.entries


# ---------------------------------------------------------------------------
# maps between objects


def map_degree(phi_entries, src, tgt):
    """Common Hom-degree rho of a homogeneous map given by its entries.

    The entry from source generator g to target generator h of a map of
    Hom-degree rho must have torus degree chi(h)-chi(g) and r-degree
    r(h)-r(g)+rho.  Returns rho, or None when the entries are inconsistent.
    """
    rhos = set()
    for (t, s), p in phi_entries.items():
        if p.is_zero():
            continue
        md = p.multidegree()
        if md is None:
            return None
        gt, gs = tgt.gens[t], src.gens[s]
        if tuple(md["torus"]) != tuple(a - b for a, b in zip(gt.torus, gs.torus)):
            return None
        rhos.add(md["r"] - gt.shift + gs.shift)
    if len(rhos) != 1:
        return None
    return rhos.pop()


def hom_differential(phi_entries, src, tgt, rho):
    """D(phi) = d_tgt . phi - (-1)^rho phi . d_src, as an entry dict."""
    ring = src.ring
    out = {}

    def add(key, p):
        cur = out.get(key, ring.zero()) + p
        if cur.is_zero():
            out.pop(key, None)
        else:
            out[key] = cur

    for (t, j), p in tgt.entries.items():
        for (j2, s), q in phi_entries.items():
            if j2 == j:
                add((t, s), p * q)
    sgn = -1 if rho % 2 == 0 else 1  # -(-1)^rho
    for (t, j), p in phi_entries.items():
        for (j2, s), q in src.entries.items():
            if j2 == j:
                add((t, s), p.scale(sgn) * q)
    return out


def compose_maps(psi_entries, phi_entries, ring):
    """Entries of psi . phi."""
    out = {}
    for (t, j), p in psi_entries.items():
        for (j2, s), q in phi_entries.items():
            if j2 != j:
                continue
            cur = out.get((t, s), ring.zero()) + p * q
            if cur.is_zero():
                out.pop((t, s), None)
            else:
                out[(t, s)] = cur
    return out


def sigma_transport(phi_entries):
    """Entry-wise involution transport of a map between sigma-images.

    For maps between objects built positionally from each other by
    sigma_mf, the transported map has entry sigma(phi[h][g]) at the same
    positions.
    """
    return {k: p.sigma_apply() for k, p in phi_entries.items()}


class SigmaStructure:
    """An isomorphism S: sigma(M) -> M recorded as constant matrix data.

    perm: target position for each source position of sigma(M);
    signs: rational scalars;  square: the scalar c with S . sigma(S) = c*Id.
    """

    def __init__(self, m, perm, signs, square):
        self.m = m
        self.perm = list(perm)
        self.signs = list(signs)
        self.square = square

    def entries(self):
        ring = self.m.ring
        return {(self.perm[s], s): ring.const(self.signs[s])
                for s in range(self.m.rank)}

    def verify(self):
        """Check S d_sigma = d S and the square scalar; returns report."""
        ring = self.m.ring
        sm = sigma_mf(self.m)
        S = self.entries()
        lhs = compose_maps(S, sm.entries, ring)
        rhs = compose_maps(self.m.entries, S, ring)
        ok_chain = lhs == rhs
        # S . sigma(S): entries of sigma(S) equal those of S with sigma
        # applied (constants, so unchanged); composite should be square*Id
        SS = compose_maps(S, sigma_transport(S), ring)
        want = {(i, i): ring.const(self.square) for i in range(self.m.rank)}
        ok_square = SS == want
        return {"ok": ok_chain and ok_square, "chain": ok_chain,
                "square": ok_square}


# ---------------------------------------------------------------------------
# the standard local models


def corank2_pair(ring):
    """The two rank-six factorizations generating the local corank-two model.

    Built over any so2_local_ring(n >= 2, corank=2).  The second is the
    involution image of the first, twisted by -1.
    """
    P = ring.parse
    gens = [
        Gen("m0", (0,), 0),   # even
        Gen("m1", (0,), 1),   # odd
        Gen("m2", (-1,), 0),  # odd
        Gen("m3", (-1,), 0),  # odd
        Gen("m4", (-1,), 1),  # even
        Gen("m5", (-1,), 1),  # even
    ]
    E = {
        (0, 1): P("s*u - t^2"),
        (0, 2): P("s*x1 + t*x2"),
        (0, 3): P("t*x1 + u*x2"),
        (1, 4): P("x1"),
        (1, 5): P("x2"),
        (2, 4): P("-u"),
        (2, 5): P("t"),
        (3, 4): P("t"),
        (3, 5): P("-s"),
        (2, 0): P("y1"),
        (3, 0): P("y2"),
        (4, 1): P("s*y1 + t*y2"),
        (5, 1): P("t*y1 + u*y2"),
        (4, 2): P("-x2*y2"),
        (4, 3): P("x2*y1"),
        (5, 2): P("x1*y2"),
        (5, 3): P("-x1*y1"),
    }
    w2 = P("s*x1*y1 + t*x1*y2 + t*x2*y1 + u*x2*y2")
    m1 = MatrixFactorization(ring, w2, gens, E)
    m2 = twist_mf(sigma_mf(m1), -1)
    return m1, m2


def corank2_ideal(ring):
    """Vanishing ideal of the first ruling family inside the local model."""
    P = ring.parse
    return [P("s*x1 + t*x2"), P("t*x1 + u*x2"), P("s*u - t^2")]


def knorrer_factor(ring, i):
    """Rank-two periodicity kernel in the variables x_i, y_i (weights 0, -1)."""
    return koszul_mf(ring, [ring.var("x%d" % i)], [ring.var("y%d" % i)],
                     prefix="k%d" % i)


def knorrer_factor_o2(ring, i, j):
    """Rank-four periodicity kernel for the involution-equivariant setting.

    Factorizes x_i y_i + x_j y_j with generator weights {-1, 0, 0, +1} and
    carries a sigma structure squaring to -1.
    """
    x1, y1 = ring.var("x%d" % i), ring.var("y%d" % i)
    x2, y2 = ring.var("x%d" % j), ring.var("y%d" % j)
    gens = [
        Gen("a1", (-1,), 0),
        Gen("a2", (1,), 0),
        Gen("b1", (0,), 0),
        Gen("b2", (0,), 0),
    ]
    entries = {
        # A -> B block
        (2, 0): x1, (2, 1): y2,
        (3, 0): x2, (3, 1): -y1,
        # B -> A block
        (0, 2): y1, (0, 3): y2,
        (1, 2): x2, (1, 3): -x1,
    }
    m = MatrixFactorization(ring, x1 * y1 + x2 * y2, gens, entries)
    sigma = SigmaStructure(m, perm=[1, 0, 3, 2], signs=[1, -1, -1, 1],
                           square=-1)
    return m, sigma


def even_corank1_pair(ring, n):
    """Koszul resolutions of the two reference families in the even model.

    Over so2_local_ring(n, corank=1) with n even; twists +-n/2 put the
    generator weights inside [-n/2, n/2].
    """
    if n % 2:
        raise ValueError("even-case model needs n even")
    s = ring.var("s")
    xs = [ring.var("x%d" % i) for i in range(1, n + 1)]
    ys = [ring.var("y%d" % i) for i in range(1, n + 1)]
    b1 = [s * ys[0]] + ys[1:]
    b2 = [s * xs[0]] + xs[1:]
    k1 = koszul_mf(ring, xs, b1, twist=n // 2, prefix="p")
    k2 = koszul_mf(ring, ys, b2, twist=-(n // 2), prefix="q")
    return k1, k2


class StandardModel:
    """Packaged ring + potential + generating objects for a local model."""

    def __init__(self, ring, w, objects, n, corank, variant, sigma_data=None):
        self.ring = ring
        self.w = w
        self.objects = objects
        self.n = n
        self.corank = corank
        self.variant = variant
        self.sigma_data = sigma_data or {}

    def object_names(self):
        return sorted(self.objects)

    def to_json(self):
        return {
            "n": self.n,
            "corank": self.corank,
            "variant": self.variant,
            "ring": self.ring.to_json(),
            "w": self.w.to_json(),
            "objects": {k: v.to_json() for k, v in self.objects.items()},
        }


def standard_model(n, corank, variant="so2"):
    """Reference models: ring, potential, generating factorizations.

    corank 2: the rank-six pair for n = 2; for odd n >= 3 the pair is
    propagated by tensoring with the rank-two periodicity kernels and
    twisting by (n-1)/2.  corank 1: the even-case Koszul pair (n even).
    corank 0: a single contractible Koszul object.
    variant "so2" or "o2" (the latter also records involution data).
    """
    from .poly import so2_local_ring, so2_superpotential
    variant = variant.lower()
    if variant not in ("so2", "o2"):
        raise ValueError("variant must be 'so2' or 'o2'")
    if corank == 2:
        if n < 2:
            raise ValueError("corank-two model needs n >= 2")
        if n > 2 and n % 2 == 0:
            raise ValueError("corank-two chain is defined for n = 2 and odd n")
        ring = so2_local_ring(n, 2)
        w = so2_superpotential(ring, n, 2)
        m1, m2 = corank2_pair(ring)
        if n == 2:
            objects = {"family1": m1, "family2": m2}
        else:
            for i in range(3, n + 1):
                f = knorrer_factor(ring, i)
                m1 = tensor_mf(m1, f)
                m2 = tensor_mf(m2, f)
            tw = (n - 1) // 2
            objects = {"family1": twist_mf(m1, tw), "family2": twist_mf(m2, tw)}
        sigma_data = {}
        if variant == "o2":
            sigma_data["pair_swap"] = ("family1", "family2")
        return StandardModel(ring, w, objects, n, corank, variant, sigma_data)
    if corank == 1:
        if n % 2:
            raise ValueError("corank-one model implemented for even n")
        ring = so2_local_ring(n, 1)
        w = so2_superpotential(ring, n, 1)
        k1, k2 = even_corank1_pair(ring, n)
        sigma_data = {}
        if variant == "o2":
            sigma_data["pair_swap"] = ("family1", "family2")
        return StandardModel(ring, w, {"family1": k1, "family2": k2},
                             n, corank, variant, sigma_data)
    if corank == 0:
        ring = so2_local_ring(n, 0)
        w = so2_superpotential(ring, n, 0)
        xs = [ring.var("x%d" % i) for i in range(1, n + 1)]
        ys = [ring.var("y%d" % i) for i in range(1, n + 1)]
        k = koszul_mf(ring, xs, ys, prefix="z")
        return StandardModel(ring, w, {"contractible": k}, n, corank, variant)
    raise ValueError("corank must be 0, 1 or 2")


def standard_quadric_basis(ring, n, l):
    """First l elements of the swap-symmetric mixed quadric basis.

    The basis enumerates index pairs (i, k) with i <= k in the order
    (1,1), (1,2), (2,2), (1,3), (2,3), (3,3), ...; pair (i, i) gives
    x_i*y_i and pair (i, k) with i < k gives x_i*y_k + x_k*y_i.
    """
    pairs = []
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            pairs.append((i, k))
    if l > len(pairs):
        raise ValueError("only %d independent quadrics exist for n=%d"
                         % (len(pairs), n))
    out = []
    for i, k in pairs[:l]:
        q = ring.var("x%d" % i) * ring.var("y%d" % k)
        if i != k:
            q = q + ring.var("x%d" % k) * ring.var("y%d" % i)
        out.append(q)
    return out


def global_koszul(n, l, rconv="B", field=None):
    """Koszul factorization of the universal quadric pairing at desk scale.

    Over the two-torus ring with fiber coordinates x_1..x_n, y_1..y_n and
    system coordinates p_1..p_l, the potential W = sum_j p_j q_j pairs the
    standard quadric basis against the system coordinates.  The
    factorization is the Koszul object on all 2n fiber coordinates with
    co-factors half the corresponding gradient entries of W, so it has
    2^(2n) generators and squares to W.
    """
    from .poly import global_ring
    ring = global_ring(n, l, rconv=rconv, field=field)
    quads = standard_quadric_basis(ring, n, l)
    w = ring.zero()
    for j, q in enumerate(quads):
        w = w + ring.var("p%d" % (j + 1)) * q
    half = ring.field.from_int(1, 2)
    coords = ["x%d" % i for i in range(1, n + 1)]
    coords += ["y%d" % i for i in range(1, n + 1)]
    a_list = [ring.var(v) for v in coords]
    b_list = [w.partial(v).scale(half) for v in coords]
    m = koszul_mf(ring, a_list, b_list)
    if not (m.w - w).is_zero():
        raise RuntimeError("gradient splitting failed to reproduce W")
    return m


# ---------------------------------------------------------------------------
# weights at a point


def weights_at_point(m, point):
    """Torus weights (with parity-split multiplicities) of the fiberwise
    homology of d at a base point.

    point: dict variable -> value; unassigned variables are set to zero.
    Assigned variables must have torus weight zero, so that the evaluated
    differential is weight-preserving.  Raises when W does not vanish at
    the resulting point.
    """
    ring = m.ring
    field = ring.field
    zero_w = (0,) * ring.torus_rank
    for v in point:
        if ring.torus[v] != zero_w:
            raise ValueError("point assigns variable %r of nonzero weight" % v)
    subs = {n: point.get(n, 0) for n in ring.names}
    if m.w.evaluate_full(subs) != field.zero:
        raise ValueError("potential does not vanish at the given point")
    # evaluated differential, split by weight and parity
    by_weight = {}
    for i, g in enumerate(m.gens):
        by_weight.setdefault(g.torus, ([], []))[g.parity(ring)].append(i)
    evaluated = {}
    for (t, s), p in m.entries.items():
        c = p.evaluate_full(subs)
        if c != field.zero:
            evaluated[(t, s)] = c
    mult = {}
    for wkey, (evens, odds) in sorted(by_weight.items()):
        # map even -> odd and odd -> even within this weight
        A = [[evaluated.get((t, s), field.zero) for s in evens] for t in odds]
        B = [[evaluated.get((t, s), field.zero) for s in odds] for t in evens]
        ra = linalg.rank(A, field) if evens and odds else 0
        rb = linalg.rank(B, field) if evens and odds else 0
        h_even = len(evens) - ra - rb
        h_odd = len(odds) - ra - rb
        if h_even or h_odd:
            key = wkey[0] if ring.torus_rank == 1 else wkey
            mult[key] = (h_even, h_odd)
    return {"weights": sorted(mult), "multiplicities": mult}
