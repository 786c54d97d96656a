"""Clifford algebras of symmetric bilinear forms and corank stratification.

The algebra of a form q on an m-dimensional space is carried on the
2^m-dimensional basis indexed by subsets of the generators, with the
defining relations e_i e_j + e_j e_i = 2 q_ij.  Products are normalized
lazily and memoized, so large algebras cost only what is actually
multiplied.  The even part is exposed as a view sharing the parent's
arithmetic.  center_split solves the commutation system exactly and
classifies the center (simple / split idempotents / nilpotent /
quadratic extension).  stratify_system analyzes pencils of symmetric
matrices exactly (determinant factorization, corank at every root
including infinity) and larger systems by exact sampling along lines.
"""

from __future__ import annotations

import itertools
import random

import sympy

from . import linalg
from .field import QQ

SIZE_CAP = 12


class QuadraticForm:
    """A symmetric m x m matrix over an exact field."""

    def __init__(self, matrix, field=None):
        self.field = field or QQ
        mat = [[self.field.coerce(v) for v in row] for row in matrix]
        m = len(mat)
        for row in mat:
            if len(row) != m:
                raise ValueError("quadratic form matrix must be square")
        for i in range(m):
            for j in range(i):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("quadratic form matrix must be symmetric")
        self.matrix = mat
        self.m = m

    @classmethod
    def diagonal(cls, entries, field=None):
        field = field or QQ
        m = len(entries)
        mat = [[field.coerce(entries[i]) if i == j else field.zero
                for j in range(m)] for i in range(m)]
        return cls(mat, field)

    @classmethod
    def hyperbolic(cls, n, field=None):
        """The split form of rank 2n pairing the first n against the last n."""
        field = field or QQ
        half = field.from_int(1, 2)
        mat = [[field.zero] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            mat[i][n + i] = half
            mat[n + i][i] = half
        return cls(mat, field)

    def corank(self):
        return self.m - linalg.rank(self.matrix, self.field)

    def to_json(self):
        return {"m": self.m,
                "matrix": [[self.field.to_str(v) for v in row]
                           for row in self.matrix]}

    @classmethod
    def from_json(cls, data, field=None):
        field = field or QQ
        return cls([[field.from_str(str(v)) for v in row]
                    for row in data["matrix"]], field)

    def __repr__(self):
        return "QuadraticForm(m=%d)" % self.m


def _normalize_word(q, word, coeff):
    """Rewrite a generator word into the subset basis.

    Returns a dict mapping sorted index tuples to coefficients.  Rules:
    e_i e_i -> q_ii and, for i > j, e_i e_j -> 2 q_ij - e_j e_i.
    """
    field = q.field
    out = {}
    stack = [(coeff, tuple(word))]
    while stack:
        c, w = stack.pop()
        bad = None
        for a in range(len(w) - 1):
            if w[a] >= w[a + 1]:
                bad = a
                break
        if bad is None:
            acc = out.get(w, field.zero) + c
            if acc != field.zero:
                out[w] = acc
            else:
                out.pop(w, None)
            continue
        i, j = w[bad], w[bad + 1]
        if i == j:
            qii = q.matrix[i][i]
            if qii != field.zero:
                stack.append((c * qii, w[:bad] + w[bad + 2:]))
        else:
            qij = q.matrix[i][j]
            if qij != field.zero:
                stack.append((c * (qij + qij), w[:bad] + w[bad + 2:]))
            stack.append((-c, w[:bad] + (j, i) + w[bad + 2:]))
    return out


class CliffordAlgebra:
    """Subset-basis presentation of the Clifford algebra of a form.

    Elements are dicts mapping basis indices to field elements.  The
    basis is ordered by (subset size, lexicographic), so index 0 is the
    unit.
    """

    def __init__(self, q):
        if q.m > SIZE_CAP:
            raise ValueError("form size %d exceeds the cap %d"
                             % (q.m, SIZE_CAP))
        self.q = q
        self.field = q.field
        self.m = q.m
        self.basis = []
        for size in range(q.m + 1):
            self.basis.extend(itertools.combinations(range(q.m), size))
        self.index = {s: i for i, s in enumerate(self.basis)}
        self._products = {}

    @property
    def dim(self):
        return len(self.basis)

    def parity(self, idx):
        return len(self.basis[idx]) % 2

    def unit(self):
        return {0: self.field.one}

    def generator(self, i):
        if not 0 <= i < self.m:
            raise ValueError("no generator %d" % i)
        return {self.index[(i,)]: self.field.one}

    def basis_label(self, idx):
        subset = self.basis[idx]
        if not subset:
            return "1"
        return "*".join("e%d" % (i + 1) for i in subset)

    def mul_basis(self, i, j):
        key = (i, j)
        got = self._products.get(key)
        if got is None:
            raw = _normalize_word(self.q, self.basis[i] + self.basis[j],
                                  self.field.one)
            got = {self.index[s]: c for s, c in raw.items()}
            self._products[key] = got
        return got

    def multiplicative_generators(self):
        return [self.generator(i) for i in range(self.m)]

    def even_part(self):
        return CliffordEvenPart(self)

    def element_str(self, x):
        parts = []
        for idx in sorted(x):
            c = x[idx]
            if c == self.field.zero:
                continue
            parts.append("%s*%s" % (self.field.to_str(c),
                                    self.basis_label(idx)))
        return " + ".join(parts) if parts else "0"


class CliffordEvenPart:
    """The parity-zero subalgebra, re-indexed contiguously."""

    def __init__(self, parent):
        self.parent = parent
        self.field = parent.field
        self.m = parent.m
        self.indices = [i for i in range(parent.dim) if parent.parity(i) == 0]
        self.lookup = {p: k for k, p in enumerate(self.indices)}

    @property
    def dim(self):
        return len(self.indices)

    def unit(self):
        return {0: self.field.one}

    def basis_label(self, idx):
        return self.parent.basis_label(self.indices[idx])

    def mul_basis(self, i, j):
        raw = self.parent.mul_basis(self.indices[i], self.indices[j])
        return {self.lookup[p]: c for p, c in raw.items()}

    def multiplicative_generators(self):
        gens = []
        for a in range(self.m):
            for b in range(a + 1, self.m):
                pidx = self.parent.index[(a, b)]
                gens.append({self.lookup[pidx]: self.field.one})
        return gens

    def element_str(self, x):
        lifted = {self.indices[k]: c for k, c in x.items()}
        return self.parent.element_str(lifted)


# ---------------------------------------------------------------------------
# element arithmetic on index->coefficient dicts


def alg_add(alg, x, y):
    out = dict(x)
    zero = alg.field.zero
    for k, c in y.items():
        acc = out.get(k, zero) + c
        if acc != zero:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


def alg_scale(alg, x, c):
    if c == alg.field.zero:
        return {}
    return {k: v * c for k, v in x.items()}


def alg_sub(alg, x, y):
    return alg_add(alg, x, alg_scale(alg, y, -alg.field.one))


def alg_mul(alg, x, y):
    zero = alg.field.zero
    out = {}
    for i, ci in x.items():
        for j, cj in y.items():
            cij = ci * cj
            for k, ck in alg.mul_basis(i, j).items():
                acc = out.get(k, zero) + cij * ck
                if acc != zero:
                    out[k] = acc
                else:
                    out.pop(k, None)
    return out


def alg_equal(alg, x, y):
    return not alg_sub(alg, x, y)


def check_clifford_relations(c):
    """e_i e_j + e_j e_i = 2 q_ij for every generator pair."""
    field = c.field
    for i in range(c.m):
        for j in range(c.m):
            ei, ej = c.generator(i), c.generator(j)
            anti = alg_add(c, alg_mul(c, ei, ej), alg_mul(c, ej, ei))
            want = alg_scale(c, c.unit(),
                             c.q.matrix[i][j] + c.q.matrix[i][j])
            if not alg_equal(c, anti, want):
                return False
    return True


def check_associativity(alg, trials=20, seed=0, support=3):
    """(xy)z = x(yz) on random sparse triples."""
    rng = random.Random(seed)
    dim = alg.dim

    def rand_elt():
        out = {}
        for _ in range(support):
            out[rng.randrange(dim)] = alg.field.from_int(rng.randint(-5, 5))
        return {k: v for k, v in out.items() if v != alg.field.zero}

    for _ in range(trials):
        x, y, z = rand_elt(), rand_elt(), rand_elt()
        left = alg_mul(alg, alg_mul(alg, x, y), z)
        right = alg_mul(alg, x, alg_mul(alg, y, z))
        if not alg_equal(alg, left, right):
            return False
    return True


def clifford_algebra(q):
    """Build the algebra of a quadratic form (with even-part accessor)."""
    if not isinstance(q, QuadraticForm):
        q = QuadraticForm(q)
    return CliffordAlgebra(q)


# ---------------------------------------------------------------------------
# center analysis


class CenterReport:
    """Center dimension, idempotent split flag and block sizes.

    Iterates as the triple (center_dim, split, blocks); extra diagnosis
    lives in the attributes: nilpotent (a nonzero square-zero central
    element exists, with a witness), extension_discriminant (the split
    exists only after adjoining a square root of this field element),
    center_basis (coordinate vectors), witness (element dict).
    """

    def __init__(self, center_dim, split, blocks, nilpotent=False,
                 extension_discriminant=None, witness=None,
                 center_basis=None):
        self.center_dim = center_dim
        self.split = split
        self.blocks = blocks
        self.nilpotent = nilpotent
        self.extension_discriminant = extension_discriminant
        self.witness = witness
        self.center_basis = center_basis

    def __iter__(self):
        return iter((self.center_dim, self.split, self.blocks))

    def to_json(self, alg=None):
        data = {
            "center_dim": self.center_dim,
            "split": self.split,
            "blocks": list(self.blocks) if self.blocks else None,
            "nilpotent": self.nilpotent,
        }
        if self.extension_discriminant is not None and alg is not None:
            data["extension_discriminant"] = alg.field.to_str(
                self.extension_discriminant)
        elif self.extension_discriminant is not None:
            data["extension_discriminant"] = str(self.extension_discriminant)
        if self.witness is not None and alg is not None:
            data["witness"] = alg.element_str(self.witness)
        return data

    def __repr__(self):
        return ("CenterReport(dim=%d, split=%s, blocks=%s)"
                % (self.center_dim, self.split, self.blocks))


def _center_basis(alg):
    """Coordinate basis of the center via the commutation system."""
    field = alg.field
    dim = alg.dim
    gens = alg.multiplicative_generators()
    if not gens:
        return [[field.one if i == k else field.zero for i in range(dim)]
                for k in range(dim)]
    rows = []
    for g in gens:
        cols = []
        touched = set()
        for k in range(dim):
            bk = {k: field.one}
            comm = alg_sub(alg, alg_mul(alg, bk, g), alg_mul(alg, g, bk))
            cols.append(comm)
            touched.update(comm)
        for out in sorted(touched):
            rows.append([cols[k].get(out, field.zero) for k in range(dim)])
    return linalg.nullspace(rows, dim, field)


def _vec_to_elt(field, vec):
    return {k: c for k, c in enumerate(vec) if c != field.zero}


def _is_nilpotent(alg, x):
    dim = alg.dim
    power = dict(x)
    steps = 0
    while (1 << steps) < dim + 1:
        steps += 1
    for _ in range(steps):
        if not power:
            return True
        power = alg_mul(alg, power, power)
    return not power


def _left_mult_rank(alg, p):
    field = alg.field
    dim = alg.dim
    cols = [alg_mul(alg, p, {k: field.one}) for k in range(dim)]
    rows = [[cols[k].get(out, field.zero) for k in range(dim)]
            for out in range(dim)]
    return linalg.rank(rows, field)


def center_split(alg):
    """Classify the center of a finite-dimensional algebra view.

    Works on a CliffordAlgebra or its even part (anything exposing dim,
    field, unit, mul_basis and multiplicative_generators).  Solves the
    linear commutation system for the center; when the center is
    two-dimensional, analyzes z^2 = alpha + beta z on a complement z of
    the unit: square discriminant -> idempotent split with block sizes,
    zero discriminant -> nilpotent witness, non-square -> the quadratic
    extension needed for the split.
    """
    field = alg.field
    basis_vecs = _center_basis(alg)
    cdim = len(basis_vecs)
    unit = alg.unit()
    if cdim <= 1:
        return CenterReport(cdim, False, None, center_basis=basis_vecs)

    # pick a center element independent of the unit
    z = None
    for vec in basis_vecs:
        elt = _vec_to_elt(field, vec)
        non_unit = {k: c for k, c in elt.items() if k != 0}
        if non_unit:
            z = elt
            break
    if z is None:  # center spanned by multiples of the unit: impossible
        return CenterReport(cdim, False, None, center_basis=basis_vecs)

    if cdim > 2:
        nil = None
        for vec in basis_vecs:
            elt = _vec_to_elt(field, vec)
            cand = {k: c for k, c in elt.items() if k != 0}
            if cand and _is_nilpotent(alg, cand):
                nil = cand
                break
        return CenterReport(cdim, False, None, nilpotent=nil is not None,
                            witness=nil, center_basis=basis_vecs)

    # two-dimensional center: solve z^2 = alpha * 1 + beta * z
    zsq = alg_mul(alg, z, z)
    touched = sorted(set(unit) | set(z) | set(zsq))
    mat = [[unit.get(k, field.zero), z.get(k, field.zero)] for k in touched]
    rhs = [zsq.get(k, field.zero) for k in touched]
    sol = linalg.solve(mat, rhs, field)
    if sol is None:
        raise RuntimeError("center element does not satisfy a quadratic")
    alpha, beta = sol
    disc = beta * beta + alpha + alpha + alpha + alpha
    if disc == field.zero:
        half_beta = beta / field.from_int(2)
        nil = alg_sub(alg, z, alg_scale(alg, unit, half_beta))
        return CenterReport(2, False, None, nilpotent=True, witness=nil,
                            center_basis=basis_vecs)
    ok, root = field.is_square(disc)
    if not ok:
        return CenterReport(2, False, None, extension_discriminant=disc,
                            center_basis=basis_vecs)
    lam_plus = (beta + root) / field.from_int(2)
    lam_minus = (beta - root) / field.from_int(2)
    p = alg_scale(alg, alg_sub(alg, z, alg_scale(alg, unit, lam_minus)),
                  field.one / (lam_plus - lam_minus))
    if not alg_equal(alg, alg_mul(alg, p, p), p):
        raise RuntimeError("idempotent construction failed")
    r = _left_mult_rank(alg, p)
    return CenterReport(2, True, (r, alg.dim - r), witness=p,
                        center_basis=basis_vecs)


# ---------------------------------------------------------------------------
# corank stratification of linear systems of symmetric matrices


class StrataReport:
    """Exact corank data for a pencil, or sampled data for a larger system."""

    def __init__(self, m, system_size, kind, det_str, members=None,
                 corank1_count=None, corank_counts=None, samples=None,
                 identically_singular=False):
        self.m = m
        self.system_size = system_size
        self.kind = kind
        self.det_str = det_str
        self.members = members or []
        self.corank1_count = corank1_count
        self.corank_counts = corank_counts or {}
        self.samples = samples or []
        self.identically_singular = identically_singular

    def has_corank_at_least(self, c):
        return any(mem["corank"] >= c for mem in self.members)

    def to_json(self):
        return {
            "m": self.m,
            "system_size": self.system_size,
            "kind": self.kind,
            "det": self.det_str,
            "identically_singular": self.identically_singular,
            "members": self.members,
            "corank1_count": self.corank1_count,
            "corank_counts": {str(k): v
                              for k, v in sorted(self.corank_counts.items())},
            "samples": self.samples,
        }

    def text_summary(self):
        lines = ["%s of %d symmetric %dx%d matrices"
                 % (self.kind, self.system_size, self.m, self.m)]
        if self.identically_singular:
            lines.append("  determinant vanishes identically")
            return "\n".join(lines)
        lines.append("  det: %s" % self.det_str)
        for mem in self.members:
            lines.append("  root %s: multiplicity %d, corank %d%s"
                         % (mem["root"], mem["multiplicity"], mem["corank"],
                            "" if mem.get("smooth", True) else
                            " (non-transverse)"))
        if self.corank1_count is not None:
            lines.append("  corank-1 count with multiplicity: %d"
                         % self.corank1_count)
        for s in self.samples:
            note = ""
            if s.get("degenerate"):
                note = ", identically singular"
            elif s["corank_ge2"]:
                note = ", corank>=2 present"
            lines.append("  sampled line %d: corank-1 count %s%s"
                         % (s["sample"], s["corank1_count"], note))
        return "\n".join(lines)


def _to_sympy(v):
    return sympy.Rational(int(v.numerator), int(v.denominator))


def _from_sympy(field, r):
    r = sympy.Rational(r)
    return field.from_int(int(r.p), int(r.q))


def _rank_at_root(A, B, root, field):
    m = len(A)
    mat = [[A[i][j] + root * B[i][j] for j in range(m)] for i in range(m)]
    return linalg.rank(mat, field), mat


# univariate polynomials over the field, as low-to-high coefficient lists


def _poly_trim(coeffs, field):
    while coeffs and coeffs[-1] == field.zero:
        coeffs.pop()
    return coeffs


def _poly_rem(a, b, field):
    a = list(a)
    db = len(b) - 1
    inv = field.one / b[-1]
    while len(a) - 1 >= db and a:
        if a[-1] == field.zero:
            a.pop()
            continue
        f = a[-1] * inv
        off = len(a) - 1 - db
        for k in range(db + 1):
            a[off + k] = a[off + k] - f * b[k]
        a.pop()
    return _poly_trim(a, field)


def _poly_gcd(a, b, field):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_rem(a, b, field)
    if a:
        inv = field.one / a[-1]
        a = [c * inv for c in a]
    return a


def _interpolate(points, values, field):
    """Coefficients (low to high) of the poly through the given points."""
    n = len(points)
    rows = [[field.one] * n for _ in range(n)]
    for i, x in enumerate(points):
        acc = field.one
        for j in range(n):
            rows[i][j] = acc
            acc = acc * x
    sol = linalg.solve(rows, values, field)
    return _poly_trim(list(sol), field)


def _minor_polys(A, B, size, field):
    """All size x size minors of A + t*B as coefficient lists."""
    m = len(A)
    points = [field.from_int(k) for k in range(size + 1)]
    evaluated = []
    for x in points:
        evaluated.append([[A[i][j] + x * B[i][j] for j in range(m)]
                         for i in range(m)])
    out = []
    for rows in itertools.combinations(range(m), size):
        for cols in itertools.combinations(range(m), size):
            vals = []
            for mat in evaluated:
                sub = [[mat[i][j] for j in cols] for i in rows]
                vals.append(_det(sub, field))
            out.append(_interpolate(points, vals, field))
    return out


def _corank_at_factor(A, B, f_coeffs, field, minor_gcds):
    """Corank of A + t*B at the roots of an irreducible factor.

    corank >= c exactly when the factor divides every minor of size
    m - c + 1; minor gcds are computed lazily and cached per size.
    """
    m = len(A)
    corank = 1
    while corank < m:
        size = m - corank
        if size == 0:
            return m
        g = minor_gcds.get(size)
        if g is None:
            g = []
            for p in _minor_polys(A, B, size, field):
                if not p:
                    continue
                monic = [c / p[-1] for c in p]
                g = monic if not g else _poly_gcd(g, monic, field)
                if len(g) == 1:
                    break
            minor_gcds[size] = g
        if not g:  # all minors of this size vanish identically
            corank += 1
            continue
        if len(g) == 1 or _poly_rem(g, f_coeffs, field):
            return corank
        corank += 1
    return corank


def _det(mat, field):
    """Exact determinant by fraction-free elimination."""
    m = len(mat)
    rows = [list(r) for r in mat]
    det = field.one
    for c in range(m):
        piv = None
        for i in range(c, m):
            if rows[i][c] != field.zero:
                piv = i
                break
        if piv is None:
            return field.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = field.one / rows[c][c]
        for i in range(c + 1, m):
            f = rows[i][c] * inv
            if f != field.zero:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def _minor(mat, drop_row, drop_col, field):
    sub = [[mat[i][j] for j in range(len(mat)) if j != drop_col]
           for i in range(len(mat)) if i != drop_row]
    return _det(sub, field)


def _det_gradient(mat, directions, field):
    """Directional derivatives of det at mat along each direction matrix.

    d/ds det(mat + s*D) at s=0 equals the cofactor pairing sum_ij
    adj(mat)_ji * D_ij; computed from first minors directly.
    """
    m = len(mat)
    grads = []
    for D in directions:
        total = field.zero
        for i in range(m):
            for j in range(m):
                if D[i][j] == field.zero:
                    continue
                sign = field.one if (i + j) % 2 == 0 else -field.one
                total = total + sign * _minor(mat, i, j, field) * D[i][j]
        grads.append(total)
    return grads


def _pencil_report(A, B, field, kind="pencil", system_size=2):
    m = len(A)
    # determinant of the affine family by evaluation and interpolation
    points = [field.from_int(k) for k in range(m + 1)]
    vals = [_det([[A[i][j] + x * B[i][j] for j in range(m)]
                  for i in range(m)], field) for x in points]
    det_coeffs = _interpolate(points, vals, field)
    if not det_coeffs:
        return StrataReport(m, system_size, kind, "0",
                            identically_singular=True)
    t = sympy.Symbol("t")
    poly = sympy.Poly({k: _to_sympy(c) for k, c in enumerate(det_coeffs)}, t)
    members = []
    corank_counts = {}
    minor_gcds = {}
    _, factors = sympy.factor_list(poly)
    for f, mult in sorted(factors, key=lambda fm: (fm[0].degree(),
                                                   str(fm[0].as_expr()))):
        deg = f.degree()
        if deg == 0:
            continue
        if deg == 1:
            root_sym = sympy.Rational(-f.nth(0), f.nth(1))
            root = _from_sympy(field, root_sym)
            rank, mat = _rank_at_root(A, B, root, field)
            corank = m - rank
            grads = _det_gradient(mat, [B], field)
            smooth = corank == 1 and mult == 1 and grads[0] != field.zero
            members.append({"root": str(root_sym), "degree": 1,
                            "multiplicity": int(mult), "corank": corank,
                            "smooth": smooth})
            weight = int(mult)
        else:
            f_coeffs = [_from_sympy(field, c)
                        for c in reversed(f.all_coeffs())]
            corank = _corank_at_factor(A, B, f_coeffs, field, minor_gcds)
            members.append({"root": str(f.as_expr()), "degree": int(deg),
                            "multiplicity": int(mult), "corank": corank,
                            "smooth": corank == 1 and mult == 1})
            weight = int(mult) * int(deg)
        corank_counts[corank] = corank_counts.get(corank, 0) + weight
    inf_mult = m - (len(det_coeffs) - 1)
    if inf_mult > 0:
        corank_b = m - linalg.rank(B, field)
        members.append({"root": "infinity", "degree": 1,
                        "multiplicity": inf_mult, "corank": corank_b,
                        "smooth": corank_b == 1 and inf_mult == 1})
        corank_counts[corank_b] = corank_counts.get(corank_b, 0) + inf_mult
    corank1 = sum(mem["multiplicity"] * mem["degree"] for mem in members
                  if mem["corank"] == 1)
    return StrataReport(m, system_size, kind, str(poly.as_expr()),
                        members=members, corank1_count=corank1,
                        corank_counts=corank_counts)


def random_symmetric_matrix(m, rng, bound=9, field=None):
    field = field or QQ
    mat = [[field.zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            v = field.from_int(rng.randint(-bound, bound))
            mat[i][j] = v
            mat[j][i] = v
    return mat


def stratify_system(basis, dim_v=None, samples=12, seed=0, field=None):
    """Corank stratification of a linear system of symmetric matrices.

    For a pencil (two matrices) the analysis is exact: the determinant
    of the affine family A + t*B is factored over the rationals, the
    corank at every root (rational or not, including the member at
    infinity) is computed exactly, and corank-1 roots are counted with
    multiplicity.  For three or more matrices the symbolic determinant
    is recorded and random lines through the system are analyzed as
    pencils, reporting per-line counts and any corank >= 2 sightings.
    """
    field = field or QQ
    if field is not QQ and not isinstance(field, type(QQ)):
        raise ValueError("stratification works over the rationals")
    mats = []
    m = None
    for raw in basis:
        if isinstance(raw, QuadraticForm):
            raw = raw.matrix
        mat = [[field.coerce(v) for v in row] for row in raw]
        if m is None:
            m = len(mat)
        if len(mat) != m or any(len(row) != m for row in mat):
            raise ValueError("system matrices must share one square size")
        for i in range(m):
            for j in range(i):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("system matrices must be symmetric")
        mats.append(mat)
    if dim_v is not None and dim_v != m:
        raise ValueError("dim_v=%r does not match matrix size %d"
                         % (dim_v, m))
    if not mats:
        raise ValueError("empty system")
    flat = [[mat[i][j] for i in range(m) for j in range(m)] for mat in mats]
    if linalg.rank(flat, field) != len(mats):
        raise ValueError("degenerate basis")

    if len(mats) == 2:
        return _pencil_report(mats[0], mats[1], field)

    # larger system: symbolic determinant plus sampled lines
    syms = sympy.symbols("c0:%d" % len(mats))
    if m <= 6:
        M = sympy.Matrix(m, m, lambda i, j: sum(
            s * _to_sympy(mat[i][j]) for s, mat in zip(syms, mats)))
        det_str = str(sympy.expand(M.det()))
    else:
        det_str = "(not expanded: m > 6)"
    rng = random.Random(seed)
    sample_reports = []
    for k in range(samples):
        while True:
            u = [rng.randint(-5, 5) for _ in mats]
            v = [rng.randint(-5, 5) for _ in mats]
            if linalg.rank([u, v], QQ) == 2:
                break
        A = [[sum(field.from_int(ui) * mat[i][j]
                  for ui, mat in zip(u, mats)) for j in range(m)]
             for i in range(m)]
        B = [[sum(field.from_int(vi) * mat[i][j]
                  for vi, mat in zip(v, mats)) for j in range(m)]
             for i in range(m)]
        line = _pencil_report(A, B, field, kind="line",
                              system_size=len(mats))
        sample_reports.append({
            "sample": k,
            "coefficients": [u, v],
            "corank1_count": line.corank1_count,
            "corank_ge2": line.has_corank_at_least(2),
            "degenerate": line.identically_singular,
            "members": line.members,
        })
    return StrataReport(m, len(mats), "net" if len(mats) == 3 else "system",
                        det_str, samples=sample_reports)
