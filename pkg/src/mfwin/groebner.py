"""Groebner bases for submodules of free modules over a polynomial ring.

Implements Buchberger's algorithm for module elements (vectors of
polynomials) with a configurable order:

* ring monomials are compared in graded reverse lexicographic order;
* module positions are combined with the ring order either
  position-over-term (POT, position dominates) or term-over-position
  (TOP, ring monomial dominates, position breaks ties);
* an optional list of weight vectors is consulted first, which yields
  elimination orders (e.g. eliminate fiber variables to intersect with a
  subring, or make extra bookkeeping positions dominate to read off
  syzygies and kernels).

Ideals are the rank-one case.  All reductions are exact over the
coefficient field; output bases are reduced (monic, auto-reduced, sorted).
"""

from __future__ import annotations

import heapq
import itertools

from .poly import Poly, degrevlex_key, enumerate_monomials


class ModuleOrder:
    """Order on module terms (position, monomial).

    mode: "TOP" or "POT".
    weights: optional list of (position-weight list | None, variable-weight
        list | None) pairs; each contributes a first-stage comparison key
        w(position) + w(monomial), larger key = larger term.  Used to build
        elimination orders.
    pot_rank_key: for POT, positions are compared by this callable (smaller
        callable value = LARGER position priority); default is the position
        index itself, so earlier positions dominate.
    """

    def __init__(self, nvars, rank, mode="TOP", weights=None, pot_rank_key=None):
        self.nvars = nvars
        self.rank = rank
        self.mode = mode
        self.weights = weights or []
        self.pot_rank_key = pot_rank_key or (lambda pos: pos)
        self._cache = {}
        if mode not in ("TOP", "POT"):
            raise ValueError("mode must be TOP or POT")

    def key(self, pos, mono):
        k = self._cache.get((pos, mono))
        if k is None:
            k = self._build_key(pos, mono)
            self._cache[(pos, mono)] = k
        return k

    def _build_key(self, pos, mono):
        parts = []
        for pw, vw in self.weights:
            k = 0
            if pw is not None:
                k += pw[pos]
            if vw is not None:
                k += sum(w * e for w, e in zip(vw, mono))
            parts.append(k)
        if self.mode == "POT":
            parts.append(tuple(-c for c in _as_tuple(self.pot_rank_key(pos))))
            parts.append(degrevlex_key(mono))
        else:
            parts.append(degrevlex_key(mono))
            parts.append(tuple(-c for c in _as_tuple(self.pot_rank_key(pos))))
        return tuple(parts)


def _as_tuple(v):
    return v if isinstance(v, tuple) else (v,)


class ModElt:
    """An element of a free module: dict position -> Poly (nonzero)."""

    __slots__ = ("ring", "rank", "comps")

    def __init__(self, ring, rank, comps=None):
        self.ring = ring
        self.rank = rank
        self.comps = {}
        if comps:
            for pos, p in comps.items():
                if not p.is_zero():
                    self.comps[pos] = p

    @staticmethod
    def from_column(ring, column):
        """Build from a list of Poly (index = position)."""
        return ModElt(ring, len(column),
                      {i: p for i, p in enumerate(column) if not p.is_zero()})

    def to_column(self):
        return [self.comps.get(i, self.ring.zero()) for i in range(self.rank)]

    def is_zero(self):
        return not self.comps

    def __add__(self, other):
        out = dict(self.comps)
        for pos, p in other.comps.items():
            s = out.get(pos, self.ring.zero()) + p
            if s.is_zero():
                out.pop(pos, None)
            else:
                out[pos] = s
        return ModElt(self.ring, self.rank, out)

    def __sub__(self, other):
        return self + other.scale(-self.ring.field.one)

    def poly_mul(self, p):
        return ModElt(self.ring, self.rank,
                      {pos: q * p for pos, q in self.comps.items()})

    def scale_mono(self, mono, coeff):
        t = self.ring.monomial(mono, coeff)
        return ModElt(self.ring, self.rank,
                      {pos: q * t for pos, q in self.comps.items()})

    def scale(self, c):
        return ModElt(self.ring, self.rank,
                      {pos: q.scale(c) for pos, q in self.comps.items()})

    def terms(self):
        for pos, p in self.comps.items():
            for m, c in p.terms.items():
                yield (pos, m), c

    def lead(self, order):
        """((position, monomial), coeff) of the largest term, or None."""
        best = None
        best_key = None
        for pm, c in self.terms():
            k = order.key(pm[0], pm[1])
            if best_key is None or k > best_key:
                best_key = k
                best = (pm, c)
        return best

    def coeff_at(self, pos, mono):
        p = self.comps.get(pos)
        if p is None:
            return self.ring.field.zero
        return p.terms.get(mono, self.ring.field.zero)

    def restrict_positions(self, keep):
        """Project onto a subset of positions (list), renumbering in order."""
        idx = {pos: i for i, pos in enumerate(keep)}
        out = {}
        for pos, p in self.comps.items():
            if pos in idx:
                out[idx[pos]] = p
        return ModElt(self.ring, len(keep), out)

    def __repr__(self):
        return "ModElt(%s)" % {pos: str(p) for pos, p in sorted(self.comps.items())}


def _divides(m1, m2):
    return all(a <= b for a, b in zip(m1, m2))


def _mono_div(m2, m1):
    return tuple(b - a for a, b in zip(m1, m2))


def _mono_lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _reducer_index(basis, order):
    """Map position -> [(lead monomial, lead coeff, basis index)]."""
    by_pos = {}
    for i, b in enumerate(basis):
        ld = b.lead(order)
        if ld is None:
            continue
        (pos, mono), c = ld
        by_pos.setdefault(pos, []).append((mono, c, i))
    return by_pos


def normal_form(elt, basis, order, want_quotients=False, reducers=None):
    """Reduce a module element against a list of basis elements.

    Full reduction: the result has no term divisible by a basis lead.  With
    want_quotients, also returns polynomials q_i with
    elt = sum q_i b_i + rem.  reducers may carry a precomputed
    _reducer_index to avoid recomputing leads.
    """
    ring = elt.ring
    # private copies: the loop below mutates term dicts in place
    rem = ModElt(ring, elt.rank,
                 {pos: Poly(ring, dict(p.terms)) for pos, p in elt.comps.items()})
    out = ModElt(ring, elt.rank)
    quots = [ring.zero() for _ in basis] if want_quotients else None
    by_pos = reducers if reducers is not None else _reducer_index(basis, order)
    # peel the lead off rem repeatedly; irreducible leads move to out
    while rem.comps:
        (pos, mono), c = rem.lead(order)
        hit = None
        for lmono, lc, i in by_pos.get(pos, ()):
            if _divides(lmono, mono):
                hit = (lmono, lc, i)
                break
        if hit is None:
            p = rem.comps[pos]
            q = p.terms.pop(mono)
            if not p.terms:
                del rem.comps[pos]
            tgt = out.comps.get(pos)
            if tgt is None:
                out.comps[pos] = ring.monomial(mono, q)
            else:
                tgt.terms[mono] = q
            continue
        lmono, lc, i = hit
        q_mono = _mono_div(mono, lmono)
        q_coeff = c / lc
        rem = rem + basis[i].scale_mono(q_mono, -q_coeff)
        if want_quotients:
            quots[i] = quots[i] + ring.monomial(q_mono, q_coeff)
    if want_quotients:
        return out, quots
    return out


def buchberger(gens, order, auto_reduce=True):
    """Groebner basis of the submodule generated by gens (list of ModElt).

    Normal selection strategy (smallest S-pair lcm first) with the chain
    criterion; coprime-lead pairs are skipped only in the rank-one case.
    Returns a reduced basis: monic leads, no lead divides another, every
    element fully reduced against the others, sorted by decreasing lead.
    """
    if not gens:
        return []
    ring = gens[0].ring
    one = ring.field.one
    basis = []
    leads = []
    for g in gens:
        if not g.is_zero():
            basis.append(g)
            leads.append(g.lead(order))

    heap = []  # (lcm order key, i, j) with i < j, same lead position
    counter = itertools.count()

    def push_pairs(j):
        (pj, mj), _ = leads[j]
        for i in range(j):
            (pi, mi), _ = leads[i]
            if pi != pj:
                continue
            lcm = _mono_lcm(mi, mj)
            if tuple(a + b for a, b in zip(mi, mj)) == lcm \
                    and set(basis[i].comps) == {pi} and set(basis[j].comps) == {pj}:
                continue
            heapq.heappush(heap, (order.key(pi, lcm), next(counter), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    done = set()
    while heap:
        _, _, i, j = heapq.heappop(heap)
        done.add((i, j))
        (pi, mi), ci = leads[i]
        (pj, mj), cj = leads[j]
        lcm = _mono_lcm(mi, mj)
        # chain criterion: a third lead dividing the lcm whose two pairs are
        # both already handled makes this pair redundant
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            (pk, mk), _ = leads[k]
            if pk != pi or not _divides(mk, lcm):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        s = basis[i].scale_mono(_mono_div(lcm, mi), one / ci) \
            - basis[j].scale_mono(_mono_div(lcm, mj), one / cj)
        rem = normal_form(s, basis, order)
        if not rem.is_zero():
            basis.append(rem)
            leads.append(rem.lead(order))
            push_pairs(len(basis) - 1)

    if auto_reduce:
        basis = _reduce_basis(basis, order)
    return basis


def _reduce_basis(basis, order):
    # drop elements whose lead is divisible by another lead, then tail-reduce
    keep = []
    leads = [b.lead(order) for b in basis]
    for i, b in enumerate(basis):
        (pi, mi), _ = leads[i]
        redundant = False
        for j in range(len(basis)):
            if j == i:
                continue
            (pj, mj), _ = leads[j]
            if pj == pi and _divides(mj, mi):
                if _divides(mi, mj) and j > i:
                    continue  # equal leads: keep the earlier one
                redundant = True
                break
        if not redundant:
            keep.append(b)
    out = []
    for i, b in enumerate(keep):
        others = out + keep[i + 1:]
        r = normal_form(b, others, order) if others else b
        if not r.is_zero():
            ld = r.lead(order)
            out.append(r.scale(r.ring.field.one / ld[1]))
    out.sort(key=lambda g: order.key(*g.lead(order)[0]), reverse=True)
    return out


def is_member(elt, basis, order):
    return normal_form(elt, basis, order).is_zero()


# ---------------------------------------------------------------------------
# derived operations


def default_order(ring, rank, mode="TOP"):
    return ModuleOrder(len(ring.names), rank, mode=mode)


def elimination_order(ring, rank, elim_vars, mode="TOP"):
    """Order making the given variables most expensive (subring elimination).

    With TOP, a lead free of elim_vars forces the whole element free of
    them, which is what subring intersection needs.
    """
    vw = [1 if n in elim_vars else 0 for n in ring.names]
    return ModuleOrder(len(ring.names), rank, mode=mode, weights=[(None, vw)])


def position_elimination_order(ring, rank, expensive_positions):
    """Order making a set of positions dominate everything else.

    Used for syzygy/kernel computations on an extended module: original
    positions are expensive, bookkeeping positions are cheap; an element
    whose lead sits in a cheap position has *all* its support there.
    """
    pw = [1 if i in expensive_positions else 0 for i in range(rank)]
    return ModuleOrder(len(ring.names), rank, mode="POT",
                       weights=[(pw, None)])


def syzygies(columns, ring, quotient_ideal=None):
    """Generators of the syzygy module of the given columns.

    columns: list of ModElt (or poly-lists) of common rank r, viewed as a map
    from a free module of rank len(columns).  Over a quotient ring pass the
    ideal generators; syzygies are then computed modulo the ideal (their
    coordinates are only meaningful modulo it).
    """
    if not columns:
        return []
    cols = [c if isinstance(c, ModElt) else ModElt.from_column(ring, c)
            for c in columns]
    r = cols[0].rank
    k = len(cols)
    ideal = list(quotient_ideal or [])
    ext_rank = r + k
    ext = []
    for j, c in enumerate(cols):
        comps = {pos: p for pos, p in c.comps.items()}
        comps[r + j] = ring.one()
        ext.append(ModElt(ring, ext_rank, comps))
    # ideal multiples of each original position, no bookkeeping part
    for f in ideal:
        for pos in range(r):
            ext.append(ModElt(ring, ext_rank, {pos: f}))
    order = position_elimination_order(ring, ext_rank, set(range(r)))
    gb = buchberger(ext, order)
    out = []
    for g in gb:
        if all(pos >= r for pos in g.comps):
            out.append(g.restrict_positions(list(range(r, ext_rank))))
    return out


def kernel_of_map(columns, ring, quotient_ideal=None):
    """Kernel of the module map with the given columns, as column vectors
    over the source free module (rank = number of columns)."""
    return syzygies(columns, ring, quotient_ideal=quotient_ideal)


def submodule_intersect_subring(gens, ring, fiber_vars):
    """Elements of the submodule generated by gens all of whose coordinates
    avoid fiber_vars.  Returns a generating set over the subring."""
    if not gens:
        return []
    rank = gens[0].rank
    order = elimination_order(ring, rank, set(fiber_vars), mode="TOP")
    gb = buchberger(gens, order)
    fiber_idx = [ring.index[v] for v in fiber_vars]
    out = []
    for g in gb:
        free = True
        for pos, p in g.comps.items():
            for m in p.terms:
                if any(m[i] for i in fiber_idx):
                    free = False
                    break
            if not free:
                break
        if free:
            out.append(g)
    return out


class SubquotientPresentation:
    """A finitely presented module: generators with degrees, relations.

    gens: list of dicts {"label", "torus", "r", "parity"} (degrees optional)
    relations: list of ModElt over the generator positions (coefficients in
        the ambient ring, to be read modulo its ideal when present)
    representatives: optional list of ModElt in an ambient module
    """

    def __init__(self, ring, gens, relations, representatives=None, ideal=None):
        self.ring = ring
        self.gens = gens
        self.relations = relations
        self.representatives = representatives
        self.ideal = list(ideal or [])

    @property
    def rank(self):
        return len(self.gens)

    def relation_columns(self):
        return [r.to_column() for r in self.relations]

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "generators": [dict(g) for g in self.gens],
            "relations": [[p.to_json() for p in r.to_column()]
                          for r in self.relations],
            "ideal": [p.to_json() for p in self.ideal],
        }

    def __repr__(self):
        return "SubquotientPresentation(%d gens, %d relations)" % (
            len(self.gens), len(self.relations))


def subquotient(ker_columns, im_columns, ring, quotient_ideal=None,
                gen_degrees=None, ambient_rank=None):
    """Present ker(A)/im(B): A, B given by their columns (im ⊆ ker assumed).

    ker_columns: columns of the map A whose kernel is taken (list of
        poly-lists) — pass the matrix columns of A index by source position.
        Here A is specified as a function on the ambient free module via its
        matrix columns: ambient position j ↦ column j.
    im_columns: columns spanning the submodule to quotient by.
    Returns a SubquotientPresentation with generators = minimal kernel
    generators and relations = syzygies + expressions of im-columns.
    """
    amb = ambient_rank
    if amb is None:
        amb = len(ker_columns[0]) if ker_columns else (
            len(im_columns[0]) if im_columns else 0)
    acols = [ModElt.from_column(ring, c) for c in ker_columns]
    K = kernel_of_columns_of_matrix(acols, ring, amb, quotient_ideal)
    return present_subquotient_from_kernel(K, im_columns, ring, quotient_ideal,
                                           gen_degrees=gen_degrees)


def kernel_of_columns_of_matrix(matrix_columns, ring, ambient_rank,
                                quotient_ideal=None):
    """Kernel of the map (ambient free module) -> (target) whose matrix has
    the given columns: elements v with sum v_j * col_j = 0 (mod ideal)."""
    del ambient_rank
    return syzygies(matrix_columns, ring, quotient_ideal=quotient_ideal)


def present_subquotient_from_kernel(kernel_gens, im_columns, ring,
                                    quotient_ideal=None, gen_degrees=None):
    """Given generators of ker(A) (as ModElt in the ambient module) and the
    columns of B, present ker(A)/im(B)."""
    ideal = list(quotient_ideal or [])
    K = [k for k in kernel_gens if not k.is_zero()]
    if not K:
        return SubquotientPresentation(ring, [], [], representatives=[],
                                       ideal=ideal)
    amb = K[0].rank
    icols = [c if isinstance(c, ModElt) else ModElt.from_column(ring, c)
             for c in (im_columns or [])]

    # relations: coefficient vectors c with sum c_i K_i in im(B) + ideal.
    # Compute the kernel of [K | B | ideal*e_j] and project onto the K-part.
    cols = K + icols
    rel_full = syzygies(cols, ring, quotient_ideal=ideal)
    rels = [r.restrict_positions(list(range(len(K)))) for r in rel_full]
    rels = [r for r in rels if not r.is_zero()]

    pres = SubquotientPresentation(
        ring,
        _degree_records(K, ring, gen_degrees),
        rels,
        representatives=K,
        ideal=ideal,
    )
    return minimalize_presentation(pres)


def _degree_records(reps, ring, gen_degrees):
    recs = []
    for i, k in enumerate(reps):
        rec = {"label": "k%d" % i}
        if gen_degrees is not None:
            deg = _rep_degree(k, ring, gen_degrees)
            if deg is not None:
                rec.update(deg)
        recs.append(rec)
    return recs


def _rep_degree(elt, ring, ambient_degrees):
    """Common (torus, r) degree of a homogeneous ambient element.

    ambient_degrees: list of (torus tuple, r shift) per ambient position,
    where the element degree of c * e_pos is (torus(c) + torus_pos,
    r(c) - shift_pos).
    """
    degs = set()
    for pos, p in elt.comps.items():
        w_pos, shift = ambient_degrees[pos]
        for m in p.terms:
            w = ring.mono_torus(m)
            degs.add((tuple(a + b for a, b in zip(w, w_pos)),
                      ring.mono_rdeg(m) - shift))
    if len(degs) != 1:
        return None
    (w, r), = degs
    return {"torus": list(w), "r": r}


def minimalize_presentation(pres):
    """Remove generators hit by unit coefficients in some relation."""
    ring = pres.ring
    field = ring.field
    gens = list(pres.gens)
    rels = [ModElt(ring, len(gens), dict(r.comps)) for r in pres.relations]
    reps = list(pres.representatives) if pres.representatives is not None else None
    changed = True
    while changed:
        changed = False
        for ri, r in enumerate(rels):
            unit_pos = None
            for pos, p in r.comps.items():
                if p.is_constant() and not p.is_zero():
                    unit_pos = pos
                    break
            if unit_pos is None:
                continue
            c = r.comps[unit_pos].constant_value()
            # solve generator unit_pos in terms of the others, substitute
            expr = {pos: p.scale(-(field.one / c))
                    for pos, p in r.comps.items() if pos != unit_pos}
            new_rels = []
            for j, other in enumerate(rels):
                if j == ri:
                    continue
                if unit_pos in other.comps:
                    q = other.comps[unit_pos]
                    comps = {pos: p for pos, p in other.comps.items()
                             if pos != unit_pos}
                    ne = ModElt(ring, len(gens), comps)
                    for pos, p in expr.items():
                        add = ModElt(ring, len(gens), {pos: p * q})
                        ne = ne + add
                else:
                    ne = other
                if not ne.is_zero():
                    new_rels.append(ne)
            # renumber positions to drop unit_pos
            keep = [i for i in range(len(gens)) if i != unit_pos]
            rels = [nr.restrict_positions(keep) for nr in new_rels]
            rels = [nr for nr in rels if not nr.is_zero()]
            gens = [g for i, g in enumerate(gens) if i != unit_pos]
            if reps is not None:
                reps = [rp for i, rp in enumerate(reps) if i != unit_pos]
            changed = True
            break
    out = SubquotientPresentation(ring, gens, rels, representatives=reps,
                                  ideal=pres.ideal)
    return out


# ---------------------------------------------------------------------------
# graded dimension counting


def ideal_gb(ring, gens, extra_order=None):
    order = extra_order or default_order(ring, 1)
    return buchberger([ModElt(ring, 1, {0: g}) for g in gens if not g.is_zero()],
                      order), order


DEGREE_CAP = 20


def graded_piece_dim(pres, degree, cap=DEGREE_CAP):
    """Dimension over the field of one graded piece of a presented module.

    degree: dict with any of "torus" (tuple/int), "r" (int), "base" (int);
    the keys given must make each generator's piece a finite-dimensional
    space (otherwise an error naming the unbounded variable is raised).

    The presentation's relation columns must be homogeneous for the degrees
    requested; dimensions are counted as standard monomials modulo a
    Groebner basis of relations + ideal.
    """
    for k in degree:
        if k in ("r", "base") and degree[k] > cap:
            raise ValueError("degree %r exceeds cap %d" % (degree, cap))
    ring = pres.ring
    rank = len(pres.gens)
    if rank == 0:
        return 0
    cols = list(pres.relations)
    for f in pres.ideal:
        for pos in range(rank):
            cols.append(ModElt(ring, rank, {pos: f}))
    order = default_order(ring, rank, mode="TOP")
    gb = buchberger(cols, order) if cols else []
    leads = [g.lead(order)[0] for g in gb]

    total = 0
    for pos in range(rank):
        g = pres.gens[pos]
        tq = degree.get("torus")
        if tq is not None and isinstance(tq, int):
            tq = (tq,)
        rq = degree.get("r")
        bq = degree.get("base")
        gw = g.get("torus")
        gr = g.get("r")
        gb_deg = g.get("base")
        torus_t = None
        if tq is not None:
            if gw is None:
                raise ValueError("generator %s lacks a torus degree" % g.get("label"))
            torus_t = tuple(a - b for a, b in zip(tq, gw))
        r_t = None
        if rq is not None:
            if gr is None:
                raise ValueError("generator %s lacks an r-degree" % g.get("label"))
            r_t = rq - gr
        b_t = None
        if bq is not None:
            b_t = bq - (gb_deg or 0)
        monos = enumerate_monomials(ring, torus=torus_t, r=r_t, base=b_t)
        for m in monos:
            standard = True
            for (lpos, lm) in leads:
                if lpos == pos and _divides(lm, m):
                    standard = False
                    break
            if standard:
                total += 1
    return total
