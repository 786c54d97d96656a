"""Sparse multivariate polynomials over an exact field, with multigradings.

A ring carries, per variable: a torus weight (tuple of integers, one entry
per torus factor), an internal degree ``r`` (the grading raised by the
differentials downstream), and optionally an involution ``sigma`` permuting
the variables.  Polynomials are dictionaries mapping exponent tuples to
nonzero field elements.

The monomial order used throughout is graded reverse lexicographic with
respect to the declared variable order (earlier names are larger).
"""

from __future__ import annotations

import itertools

from .field import QQ, parse_field


class RingSpec:
    """A polynomial ring with a torus grading, an r-grading and optional sigma.

    Parameters
    ----------
    names : variable names, in order (earlier = larger in the term order)
    field : coefficient field object (default rationals)
    torus : dict name -> weight tuple (length torus_rank); missing = zero
    rdeg : dict name -> integer internal degree; missing = 0
    torus_rank : number of torus factors
    sigma : optional dict name -> name, an involution of the variables
    sigma_torus : matrix (tuple of row tuples) describing how sigma acts on
        torus weights; required when sigma is given
    epsilon : tuple of integers used to convert torus weights into parities,
        satisfying <epsilon, torus(v)> + rdeg(v) even for every variable
    base : optional tuple of names singled out as "base" variables (used by
        degree queries that ask for a base degree)
    """

    def __init__(self, names, field=None, torus=None, rdeg=None, torus_rank=1,
                 sigma=None, sigma_torus=None, epsilon=None, base=()):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {n: i for i, n in enumerate(self.names)}
        self.field = field if field is not None else QQ
        self.torus_rank = torus_rank
        zero_w = (0,) * torus_rank
        torus = torus or {}
        rdeg = rdeg or {}
        self.torus = {}
        self.rdeg = {}
        for n in self.names:
            w = torus.get(n, zero_w)
            if isinstance(w, int):
                w = (w,)
            if len(w) != torus_rank:
                raise ValueError("torus weight of %s has wrong rank" % n)
            self.torus[n] = tuple(int(c) for c in w)
            self.rdeg[n] = int(rdeg.get(n, 0))
        self.base = tuple(base)
        for b in self.base:
            if b not in self.index:
                raise ValueError("unknown base variable %r" % (b,))
        self.sigma = dict(sigma) if sigma else None
        self.sigma_torus = tuple(tuple(row) for row in sigma_torus) if sigma_torus else None
        if self.sigma is not None:
            self._check_sigma()
        if epsilon is None:
            epsilon = zero_w
        if isinstance(epsilon, int):
            epsilon = (epsilon,)
        self.epsilon = tuple(int(c) for c in epsilon)
        # parity bookkeeping only has to be consistent on rings that carry
        # a torus action; purely auxiliary rings skip the check
        if any(self.epsilon) or any(any(w) for w in self.torus.values()):
            for n in self.names:
                if (self._eps_pair(self.torus[n]) + self.rdeg[n]) % 2 != 0:
                    raise ValueError("epsilon incompatible with variable %s" % n)

    # -- sigma ---------------------------------------------------------

    def _check_sigma(self):
        if self.sigma_torus is None:
            raise ValueError("sigma requires sigma_torus")
        for a, b in self.sigma.items():
            if self.sigma.get(b) != a:
                raise ValueError("sigma is not an involution at %s" % a)
            if self.apply_sigma_torus(self.torus[a]) != tuple(self.torus[b]):
                raise ValueError("sigma breaks torus weights at %s" % a)
            if self.rdeg[a] != self.rdeg[b]:
                raise ValueError("sigma breaks r-degrees at %s" % a)
        for n in self.names:
            if n not in self.sigma:
                raise ValueError("sigma must be defined on all variables")

    def apply_sigma_torus(self, w):
        """Image of a torus weight tuple under the involution."""
        if self.sigma_torus is None:
            raise ValueError("ring has no sigma")
        return tuple(sum(row[j] * w[j] for j in range(self.torus_rank))
                     for row in self.sigma_torus)

    def sigma_perm(self):
        return tuple(self.index[self.sigma[n]] for n in self.names)

    # -- gradings ------------------------------------------------------

    def _eps_pair(self, w):
        return sum(e * c for e, c in zip(self.epsilon, w))

    def parity_of(self, torus_weight, shift):
        """Parity in {0,1} of a generator with the given weight and r-shift."""
        if isinstance(torus_weight, int):
            torus_weight = (torus_weight,)
        return (self._eps_pair(torus_weight) + shift) % 2

    def mono_torus(self, exps):
        w = [0] * self.torus_rank
        for e, n in zip(exps, self.names):
            if e:
                t = self.torus[n]
                for c in range(self.torus_rank):
                    w[c] += e * t[c]
        return tuple(w)

    def mono_rdeg(self, exps):
        return sum(e * self.rdeg[n] for e, n in zip(exps, self.names))

    def mono_base_deg(self, exps):
        return sum(exps[self.index[b]] for b in self.base)

    # -- constructors --------------------------------------------------

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.coerce(c)
        if c == self.field.zero:
            return Poly(self, {})
        return Poly(self, {(0,) * len(self.names): c})

    def var(self, name):
        exps = [0] * len(self.names)
        exps[self.index[name]] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def monomial(self, exps, coeff=1):
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return Poly(self, {})
        return Poly(self, {tuple(exps): c})

    def parse(self, text):
        return _parse_poly(self, text)

    def __eq__(self, other):
        return (isinstance(other, RingSpec) and other.names == self.names
                and other.field == self.field and other.torus == self.torus
                and other.rdeg == self.rdeg)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return "RingSpec(%s)" % ",".join(self.names)

    def to_json(self):
        data = {
            "vars": [{"name": n, "torus": list(self.torus[n]), "r": self.rdeg[n]}
                     for n in self.names],
            "torus_rank": self.torus_rank,
            "field": self.field.name,
            "epsilon": list(self.epsilon),
        }
        if self.base:
            data["base"] = list(self.base)
        if self.sigma:
            data["sigma"] = {a: b for a, b in self.sigma.items()}
            data["sigma_torus"] = [list(r) for r in self.sigma_torus]
        return data


def ring_from_json(data):
    return RingSpec(
        [v["name"] for v in data["vars"]],
        field=parse_field(data.get("field", "rational")),
        torus={v["name"]: tuple(v.get("torus", [0])) for v in data["vars"]},
        rdeg={v["name"]: v.get("r", 0) for v in data["vars"]},
        torus_rank=data.get("torus_rank", 1),
        sigma=data.get("sigma"),
        sigma_torus=[tuple(r) for r in data["sigma_torus"]] if data.get("sigma_torus") else None,
        epsilon=tuple(data.get("epsilon", [])) or None,
        base=tuple(data.get("base", ())),
    )


def degrevlex_key(exps):
    """Sort key for monomials; larger key = larger monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Poly:
    """A sparse polynomial: dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic predicates ---------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        if not self.terms:
            return True
        z = (0,) * len(self.ring.names)
        return len(self.terms) == 1 and z in self.terms

    def constant_value(self):
        z = (0,) * len(self.ring.names)
        return self.terms.get(z, self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        if isinstance(other, int) or isinstance(other, str):
            return self.ring.const(other)
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        terms = dict(self.terms)
        zero = self.ring.field.zero
        for m, c in other.terms.items():
            s = terms.get(m, zero) + c
            if s == zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, {})
        zero = self.ring.field.zero
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, zero) + c1 * c2
                if s == zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if c == self.ring.field.zero:
            return Poly(self.ring, {})
        return Poly(self.ring, {m: co * c for m, co in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def partial(self, var):
        """Formal partial derivative with respect to a variable name."""
        idx = self.ring.index[var]
        zero = self.ring.field.zero
        out = {}
        for m, c in self.terms.items():
            e = m[idx]
            if not e:
                continue
            m2 = m[:idx] + (e - 1,) + m[idx + 1:]
            s = out.get(m2, zero) + c * self.ring.field.from_int(e)
            if s == zero:
                out.pop(m2, None)
            else:
                out[m2] = s
        return Poly(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, tuple(sorted(self.terms.items()))))

    # -- degrees -------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def multidegree(self):
        """Return {"torus": weight tuple, "r": int} when homogeneous, else None."""
        if not self.terms:
            return None
        degs = {(self.ring.mono_torus(m), self.ring.mono_rdeg(m)) for m in self.terms}
        if len(degs) != 1:
            return None
        (w, r), = degs
        return {"torus": w, "r": r}

    def is_homogeneous(self):
        return self.is_zero() or self.multidegree() is not None

    def base_degree(self):
        """Common base degree of all terms, or None if mixed / no base vars."""
        if not self.terms:
            return None
        degs = {self.ring.mono_base_deg(m) for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    # -- leading data --------------------------------------------------

    def leading_monomial(self):
        if not self.terms:
            return None
        return max(self.terms, key=degrevlex_key)

    def leading_coeff(self):
        m = self.leading_monomial()
        return None if m is None else self.terms[m]

    def monic(self):
        m = self.leading_monomial()
        if m is None:
            return self
        c = self.terms[m]
        one = self.ring.field.one
        if c == one:
            return self
        return Poly(self.ring, {mo: co / c for mo, co in self.terms.items()})

    # -- substitution and transforms ----------------------------------

    def evaluate(self, subs):
        """Substitute values (field elements / ints / polys) for variables.

        Unmentioned variables are left alone; the result lives in the same
        ring (substituted values are treated as constants there).
        """
        ring = self.ring
        vals = {}
        for n, v in subs.items():
            if n not in ring.index:
                raise ValueError("unknown variable %r" % (n,))
            vals[ring.index[n]] = v if isinstance(v, Poly) else ring.const(v)
        out = ring.zero()
        for m, c in self.terms.items():
            term = ring.monomial(
                tuple(0 if i in vals else e for i, e in enumerate(m)), c)
            for i, e in enumerate(m):
                if i in vals and e:
                    term = term * (vals[i] ** e)
            out = out + term
        return out

    def evaluate_full(self, subs):
        """Evaluate with every variable assigned; returns a field element."""
        res = self.evaluate({n: subs.get(n, 0) for n in self.ring.names})
        if not res.is_constant():
            raise ValueError("evaluation did not produce a constant")
        return res.constant_value()

    def sigma_apply(self):
        """Apply the ring involution to this polynomial."""
        perm = self.ring.sigma_perm()
        out = {}
        for m, c in self.terms.items():
            img = [0] * len(m)
            for i, e in enumerate(m):
                img[perm[i]] = e
            out[tuple(img)] = c
        return Poly(self.ring, out)

    # -- io ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]),
                      reverse=True)

    def __repr__(self):
        return self.to_str()

    def to_str(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for e, n in zip(m, self.ring.names):
                if e == 1:
                    factors.append(n)
                elif e > 1:
                    factors.append("%s^%d" % (n, e))
            cs = field.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors:
                body = cs + "*" + "*".join(factors)
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def to_json(self):
        field = self.ring.field
        return [{"coeff": field.to_str(c), "exps": list(m)}
                for m, c in self.sorted_terms()]

    @staticmethod
    def from_json(ring, data):
        out = ring.zero()
        for t in data:
            out = out + ring.monomial(tuple(t["exps"]), ring.field.from_str(t["coeff"]))
        return out


# ---------------------------------------------------------------------------
# parser


class _Tok:
    def __init__(self, kind, val):
        self.kind = kind
        self.val = val


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("name", text[i:j]))
            i = j
        elif ch in "+-*/()^":
            if ch == "*" and i + 1 < len(text) and text[i + 1] == "*":
                toks.append(_Tok("^", "^"))
                i += 2
            else:
                toks.append(_Tok(ch, ch))
                i += 1
        else:
            raise ValueError("bad character %r in polynomial" % ch)
    return toks


class _Parser:
    def __init__(self, ring, toks):
        self.ring = ring
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        if t is None:
            raise ValueError("unexpected end of polynomial")
        self.pos += 1
        return t

    def parse_expr(self):
        t = self.peek()
        sign = 1
        if t is not None and t.kind in "+-":
            self.next()
            sign = -1 if t.kind == "-" else 1
        out = self.parse_term().scale(sign)
        while True:
            t = self.peek()
            if t is None or t.kind not in "+-":
                break
            self.next()
            nxt = self.parse_term()
            out = out + (nxt.scale(-1) if t.kind == "-" else nxt)
        return out

    def parse_term(self):
        out = self.parse_factor()
        while True:
            t = self.peek()
            if t is not None and t.kind == "*":
                self.next()
                out = out * self.parse_factor()
            elif t is not None and t.kind == "/":
                self.next()
                d = self.next()
                if d.kind != "int":
                    raise ValueError("can only divide by integers")
                out = out.scale(self.ring.field.from_int(1, d.val))
            else:
                return out

    def parse_factor(self):
        base = self.parse_atom()
        t = self.peek()
        if t is not None and t.kind == "^":
            self.next()
            e = self.next()
            neg = False
            if e.kind == "-":
                neg = True
                e = self.next()
            if e.kind != "int" or neg:
                raise ValueError("exponent must be a nonnegative integer")
            return base ** e.val
        return base

    def parse_atom(self):
        t = self.next()
        if t.kind == "int":
            return self.ring.const(t.val)
        if t.kind == "name":
            if t.val not in self.ring.index:
                raise ValueError("unknown variable %r" % t.val)
            return self.ring.var(t.val)
        if t.kind == "(":
            inner = self.parse_expr()
            close = self.next()
            if close.kind != ")":
                raise ValueError("missing closing parenthesis")
            return inner
        if t.kind == "-":
            return -self.parse_atom()
        raise ValueError("unexpected token %r" % (t.val,))


def _parse_poly(ring, text):
    toks = _tokenize(text)
    p = _Parser(ring, toks)
    out = p.parse_expr()
    if p.peek() is not None:
        raise ValueError("trailing input in polynomial %r" % text)
    return out


# ---------------------------------------------------------------------------
# graded monomial enumeration


class UnboundedEnumeration(ValueError):
    pass


def enumerate_monomials(ring, torus=None, r=None, base=None):
    """All exponent tuples with the requested homogeneous degrees.

    Any of ``torus`` (weight tuple or int), ``r`` (integer) and ``base``
    (integer, counted over the ring's declared base variables) may be given;
    at least one must be.  Raises UnboundedEnumeration when the requested
    graded piece is provably infinite or when no finite bound on some
    exponent can be derived from the constraints.
    """
    if torus is None and r is None and base is None:
        raise ValueError("no degree constraints given")
    if torus is not None and isinstance(torus, int):
        torus = (torus,)
    nv = len(ring.names)
    bounds = []
    for i, n in enumerate(ring.names):
        b = None
        if r is not None and ring.rdeg[n] > 0:
            if r < 0:
                return []
            b = r // ring.rdeg[n]
        if base is not None and n in ring.base:
            if base < 0:
                return []
            b = min(b, base) if b is not None else base
        if b is None and torus is not None:
            w = ring.torus[n]
            for c in range(ring.torus_rank):
                if w[c] == 0:
                    continue
                same_sign = all(ring.torus[m][c] * w[c] >= 0 for m in ring.names)
                if same_sign and torus[c] * (1 if w[c] > 0 else -1) >= 0:
                    b = abs(torus[c]) // abs(w[c])
                    break
                if same_sign:
                    return []
        if b is None:
            raise UnboundedEnumeration(
                "no bound on exponent of %r from constraints (torus=%r, r=%r, base=%r)"
                % (n, torus, r, base))
        bounds.append(b)

    out = []

    def rec(i, exps, rleft, bleft, wleft):
        if i == nv:
            if (rleft in (None, 0)) and (bleft in (None, 0)) and \
                    (wleft is None or all(c == 0 for c in wleft)):
                out.append(tuple(exps))
            return
        n = ring.names[i]
        for e in range(bounds[i] + 1):
            r2 = rleft - e * ring.rdeg[n] if rleft is not None else None
            if r2 is not None and r2 < 0:
                break
            b2 = bleft - (e if n in ring.base else 0) if bleft is not None else None
            if b2 is not None and b2 < 0:
                break
            w2 = None
            if wleft is not None:
                w2 = tuple(c - e * t for c, t in zip(wleft, ring.torus[n]))
            exps.append(e)
            rec(i + 1, exps, r2, b2, w2)
            exps.pop()

    rec(0, [], r, base, torus)
    return out


# ---------------------------------------------------------------------------
# standard ring presets


def so2_local_ring(n, corank=2, field=None):
    """Local model ring for the rank-one torus: base variables for the
    quadratic form of the given corank, plus fiber variables x_i, y_i.

    corank 2: base s, t, u;  corank 1: base s;  corank 0: no base.
    Fiber variables carry torus weight +1 (x) / -1 (y) and r-degree 1.
    """
    if corank == 2:
        base = ("s", "t", "u")
    elif corank == 1:
        base = ("s",)
    elif corank == 0:
        base = ()
    else:
        raise ValueError("corank must be 0, 1 or 2")
    if n < corank:
        raise ValueError("need n >= corank")
    xs = tuple("x%d" % i for i in range(1, n + 1))
    ys = tuple("y%d" % i for i in range(1, n + 1))
    names = base + xs + ys
    torus = {}
    rdeg = {}
    sigma = {}
    for b in base:
        torus[b] = (0,)
        rdeg[b] = 0
        sigma[b] = b
    for x, y in zip(xs, ys):
        torus[x] = (1,)
        torus[y] = (-1,)
        rdeg[x] = 1
        rdeg[y] = 1
        sigma[x] = y
        sigma[y] = x
    return RingSpec(names, field=field, torus=torus, rdeg=rdeg, torus_rank=1,
                    sigma=sigma, sigma_torus=((-1,),), epsilon=(1,), base=base)


def so2_superpotential(ring, n, corank=2):
    """The superpotential of the local model on ``so2_local_ring(n, corank)``."""
    W = ring.zero()
    x = [ring.var("x%d" % i) for i in range(1, n + 1)]
    y = [ring.var("y%d" % i) for i in range(1, n + 1)]
    if corank == 2:
        s, t, u = ring.var("s"), ring.var("t"), ring.var("u")
        W = s * x[0] * y[0] + t * (x[0] * y[1] + x[1] * y[0]) + u * x[1] * y[1]
        for k in range(2, n):
            W = W + x[k] * y[k]
    elif corank == 1:
        s = ring.var("s")
        W = s * x[0] * y[0]
        for k in range(1, n):
            W = W + x[k] * y[k]
    else:
        for k in range(n):
            W = W + x[k] * y[k]
    return W


def global_ring(n, l, rconv="B", field=None):
    """Global model ring: x_1..x_n, y_1..y_n and pencil/net variables p_1..p_l.

    Torus rank 2: x has weight (1,0), y has (0,1), p has (-1,-1).  Two
    r-degree conventions are supported: "A" (p has r = 2, x and y have 0)
    and "B" (x and y have r = 1, p has 0).
    """
    xs = tuple("x%d" % i for i in range(1, n + 1))
    ys = tuple("y%d" % i for i in range(1, n + 1))
    ps = tuple("p%d" % j for j in range(1, l + 1))
    names = xs + ys + ps
    torus = {}
    rdeg = {}
    sigma = {}
    for x, y in zip(xs, ys):
        torus[x] = (1, 0)
        torus[y] = (0, 1)
        sigma[x] = y
        sigma[y] = x
        if rconv == "A":
            rdeg[x] = rdeg[y] = 0
        elif rconv == "B":
            rdeg[x] = rdeg[y] = 1
        else:
            raise ValueError("rconv must be 'A' or 'B'")
    for p in ps:
        torus[p] = (-1, -1)
        rdeg[p] = 2 if rconv == "A" else 0
        sigma[p] = p
    eps = (0, 0) if rconv == "A" else (1, 1)
    return RingSpec(names, field=field, torus=torus, rdeg=rdeg, torus_rank=2,
                    sigma=sigma, sigma_torus=((0, 1), (1, 0)), epsilon=eps,
                    base=ps)


def global_superpotential(ring, quadrics):
    """W = sum_j p_j * f_j for given quadrics f_j (list of Poly)."""
    W = ring.zero()
    for j, f in enumerate(quadrics, start=1):
        W = W + ring.var("p%d" % j) * f
    return W


def standard_quadrics(ring, n, l):
    """The split family used by the scenario suite: f_j = x_j*y_j rotated.

    f_1 = sum_i x_i y_i, and for j >= 2, f_j = sum_i x_i y_{i+j-1 mod n}.
    Each is torus weight (1,1); together generic enough for smoke tests.
    """
    out = []
    for j in range(1, l + 1):
        f = ring.zero()
        for i in range(1, n + 1):
            k = ((i + j - 2) % n) + 1
            f = f + ring.var("x%d" % i) * ring.var("y%d" % k)
        out.append(f)
    return out
