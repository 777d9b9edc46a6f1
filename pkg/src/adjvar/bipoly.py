"""Exact bihomogeneous polynomial arithmetic on P^n x P^n.

Polynomials live in Q[x_0..x_n, y_0..y_n] with terms stored sparsely as
(x-exponent tuple, y-exponent tuple) -> Fraction.  Everything downstream
needs only four primitives, all implemented here with no dependencies:
multivariate gcd by recursive content extraction, exact single-divisor
division, pseudo-reduction modulo the incidence quadric q = sum x_i y_i,
and exact division by a coordinate modulo q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

Term = tuple[tuple[int, ...], tuple[int, ...]]


class BiPoly:
    """Sparse polynomial in the bigraded ring of P^n x P^n over Q."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean: dict[Term, Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[key] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "BiPoly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c) -> "BiPoly":
        e = (0,) * (n + 1)
        return cls(n, {(e, e): Fraction(c)})

    @classmethod
    def x(cls, n: int, i: int) -> "BiPoly":
        xe = tuple(1 if k == i else 0 for k in range(n + 1))
        return cls(n, {(xe, (0,) * (n + 1)): Fraction(1)})

    @classmethod
    def y(cls, n: int, j: int) -> "BiPoly":
        ye = tuple(1 if k == j else 0 for k in range(n + 1))
        return cls(n, {((0,) * (n + 1), ye): Fraction(1)})

    @classmethod
    def incidence_quadric(cls, n: int) -> "BiPoly":
        """q = sum_i x_i y_i, the equation of the hyperplane section."""
        out = cls.zero(n)
        for i in range(n + 1):
            out = out + cls.x(n, i) * cls.y(n, i)
        return out

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, Fraction(0)) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return BiPoly(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BiPoly(self.n, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly.zero(self.n)
            return BiPoly(
                self.n, {k: c * other for k, c in self.terms.items()}
            )
        out: dict[Term, Fraction] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(xa, xb)),
                    tuple(a + b for a, b in zip(ya, yb)),
                )
                v = out.get(key, Fraction(0)) + ca * cb
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return BiPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if self.is_zero:
            return "BiPoly(0)"
        bits = []
        for (xe, ye), c in sorted(self.terms.items()):
            mono = "".join(
                f"x{i}^{e}" if e > 1 else (f"x{i}" if e else "")
                for i, e in enumerate(xe)
            ) + "".join(
                f"y{j}^{e}" if e > 1 else (f"y{j}" if e else "")
                for j, e in enumerate(ye)
            )
            bits.append(f"{c}*{mono or '1'}")
        return " + ".join(bits)

    # -- degrees -----------------------------------------------------------
    def bidegree(self):
        """The (x-degree, y-degree) pair; raises unless bihomogeneous."""
        if self.is_zero:
            return None
        degs = {(sum(xe), sum(ye)) for xe, ye in self.terms}
        if len(degs) != 1:
            raise ValueError(f"polynomial is not bihomogeneous: degrees {degs}")
        return degs.pop()

    # -- calculus ----------------------------------------------------------
    def dx(self, i: int) -> "BiPoly":
        out: dict[Term, Fraction] = {}
        for (xe, ye), c in self.terms.items():
            if xe[i]:
                nxe = list(xe)
                nxe[i] -= 1
                key = (tuple(nxe), ye)
                out[key] = out.get(key, Fraction(0)) + c * xe[i]
        return BiPoly(self.n, out)

    def dy(self, j: int) -> "BiPoly":
        out: dict[Term, Fraction] = {}
        for (xe, ye), c in self.terms.items():
            if ye[j]:
                nye = list(ye)
                nye[j] -= 1
                key = (xe, tuple(nye))
                out[key] = out.get(key, Fraction(0)) + c * ye[j]
        return BiPoly(self.n, out)

    def dvar(self, v: int) -> "BiPoly":
        """Partial derivative by flat variable index (x_0..x_n, y_0..y_n)."""
        return self.dx(v) if v <= self.n else self.dy(v - self.n - 1)

    # -- evaluation --------------------------------------------------------
    def eval_point(self, xs, ys) -> Fraction:
        total = Fraction(0)
        for (xe, ye), c in self.terms.items():
            v = c
            for b, e in zip(xs, xe):
                if e:
                    v *= b**e
            for b, e in zip(ys, ye):
                if e:
                    v *= b**e
            total += v
        return total

    def restrict_line(self, family: int, base, p0, p1):
        """Coefficients of the binary form f(line(s,t)), indexed by t-degree.

        Family 1 fixes the x-factor at ``base`` and moves y along the line
        spanned by p0, p1; family 2 is symmetric.  The input must be
        bihomogeneous, so the result is a homogeneous binary form of degree
        equal to the moving-factor degree; [] encodes the zero form.
        """
        coeffs: dict[int, Fraction] = {}
        maxdeg = 0
        for (xe, ye), c in self.terms.items():
            move_exp = ye if family == 1 else xe
            fix_exp = xe if family == 1 else ye
            v = c
            for b, e in zip(base, fix_exp):
                if e:
                    v *= b**e
            if not v:
                continue
            # expand prod_k (s p0_k + t p1_k)^{e_k} into binary coefficients
            poly = {0: Fraction(1)}  # t-degree -> coefficient
            deg = 0
            for k, e in enumerate(move_exp):
                for _ in range(e):
                    nxt: dict[int, Fraction] = {}
                    for td, cc in poly.items():
                        if p0[k]:
                            nxt[td] = nxt.get(td, Fraction(0)) + cc * p0[k]
                        if p1[k]:
                            nxt[td + 1] = nxt.get(td + 1, Fraction(0)) + cc * p1[k]
                    poly = nxt
                    deg += 1
            maxdeg = max(maxdeg, deg)
            for td, cc in poly.items():
                coeffs[td] = coeffs.get(td, Fraction(0)) + v * cc
        out = [coeffs.get(k, Fraction(0)) for k in range(maxdeg + 1)]
        if all(not c for c in out):
            return []
        return out

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"x": list(xe), "y": list(ye), "c": str(c)}
                for (xe, ye), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BiPoly":
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            key = (tuple(int(e) for e in t["x"]), tuple(int(e) for e in t["y"]))
            terms[key] = Fraction(t["c"])
        return cls(n, terms)

    # -- content -----------------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self/c primitive over the integers."""
        if self.is_zero:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "BiPoly":
        c = self.content()
        lead = self.terms[max(self.terms)] if self.terms else Fraction(1)
        if lead < 0:
            c = -c
        return self * (Fraction(1) / c) if c != 1 else self


# -- flat-variable helpers used by gcd/division ------------------------------


def _exp(key: Term, v: int, n: int) -> int:
    return key[0][v] if v <= n else key[1][v - n - 1]


def _set_exp(key: Term, v: int, n: int, value: int) -> Term:
    xe, ye = key
    if v <= n:
        t = list(xe)
        t[v] = value
        return (tuple(t), ye)
    t = list(ye)
    t[v - n - 1] = value
    return (xe, tuple(t))


def used_vars(f: BiPoly):
    out = set()
    for xe, ye in f.terms:
        for i, e in enumerate(xe):
            if e:
                out.add(i)
        for j, e in enumerate(ye):
            if e:
                out.add(f.n + 1 + j)
    return out


def var_degree(f: BiPoly, v: int) -> int:
    if f.is_zero:
        return -1
    return max(_exp(key, v, f.n) for key in f.terms)


def var_coefficient(f: BiPoly, v: int, k: int) -> BiPoly:
    """Coefficient of (flat var v)^k, with that variable's exponent zeroed."""
    out = {}
    for key, c in f.terms.items():
        if _exp(key, v, f.n) == k:
            out[_set_exp(key, v, f.n, 0)] = c
    return BiPoly(f.n, out)


def var_shift(f: BiPoly, v: int, k: int) -> BiPoly:
    """Multiply by (flat var v)^k."""
    out = {}
    for key, c in f.terms.items():
        out[_set_exp(key, v, f.n, _exp(key, v, f.n) + k)] = c
    return BiPoly(f.n, out)


def poly_divexact(f: BiPoly, g: BiPoly):
    """Quotient f/g when g divides f exactly, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return BiPoly.zero(f.n)
    gkey = max(g.terms)
    gc = g.terms[gkey]
    q: dict[Term, Fraction] = {}
    r = f
    while not r.is_zero:
        rkey = max(r.terms)
        xq = tuple(a - b for a, b in zip(rkey[0], gkey[0]))
        yq = tuple(a - b for a, b in zip(rkey[1], gkey[1]))
        if any(e < 0 for e in xq) or any(e < 0 for e in yq):
            return None
        c = r.terms[rkey] / gc
        q[(xq, yq)] = c
        r = r - BiPoly(f.n, {(xq, yq): c}) * g
    return BiPoly(f.n, q)


def _pseudo_rem(f: BiPoly, g: BiPoly, v: int) -> BiPoly:
    """Pseudo-remainder of f by g as univariate polynomials in flat var v."""
    df, dg = var_degree(f, v), var_degree(g, v)
    lc = var_coefficient(g, v, dg)
    r = f
    while not r.is_zero and var_degree(r, v) >= dg:
        dr = var_degree(r, v)
        lr = var_coefficient(r, v, dr)
        r = lc * r - var_shift(lr, v, dr - dg) * g
    return r


def _content_wrt(f: BiPoly, v: int):
    """(content, primitive part) of f as a univariate polynomial in v."""
    parts = [var_coefficient(f, v, k) for k in range(var_degree(f, v) + 1)]
    cont = BiPoly.zero(f.n)
    for p in parts:
        cont = poly_gcd(cont, p)
    pp = poly_divexact(f, cont)
    if pp is None:
        raise ArithmeticError("content failed to divide its polynomial")
    return cont, pp


def poly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Primitive multivariate gcd over Q, by recursive content extraction
    variable by variable and a primitive pseudo-remainder sequence."""
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    vs = used_vars(f) | used_vars(g)
    if not vs:
        return BiPoly.const(f.n, 1)
    v = max(vs)
    if var_degree(g, v) == 0:
        return poly_gcd(_content_wrt(f, v)[0], g)
    if var_degree(f, v) == 0:
        return poly_gcd(f, _content_wrt(g, v)[0])
    if var_degree(f, v) < var_degree(g, v):
        f, g = g, f
    cf, pf = _content_wrt(f, v)
    cg, pg = _content_wrt(g, v)
    cont = poly_gcd(cf, cg)
    a, b = pf, pg
    while True:
        r = _pseudo_rem(a, b, v)
        if r.is_zero:
            return (cont * b).primitive()
        if var_degree(r, v) == 0:
            # primitive parts share no factor involving v
            return cont.primitive()
        a, b = b, _content_wrt(r, v)[1]


def poly_gcd_list(polys) -> BiPoly:
    out = None
    for p in polys:
        out = p if out is None else poly_gcd(out, p)
        if out and not used_vars(out):
            break
    return out.primitive() if out is not None else out


def reduce_mod_quadric(f: BiPoly, elim: int | None = None) -> BiPoly:
    """Pseudo-remainder of f by q = sum x_i y_i, eliminating one variable.

    ``elim`` is the flat index of the variable solved for (default y_0); its
    partner coordinate is the leading coefficient of q in that variable.
    Returns r free of the eliminated variable with partner^k f = h q + r;
    since q is prime and coordinates are not in (q), f lies in (q) iff r = 0.
    """
    n = f.n
    if elim is None:
        elim = n + 1  # y_0
    a = elim - n - 1 if elim > n else elim
    partner = BiPoly.x(n, a) if elim > n else BiPoly.y(n, a)
    q = BiPoly.incidence_quadric(n)
    r = f
    while var_degree(r, elim) >= 1:
        k = var_degree(r, elim)
        lead = var_coefficient(r, elim, k)
        r = partner * r - var_shift(lead, elim, k - 1) * q
    return r


def is_zero_mod_quadric(f: BiPoly) -> bool:
    return reduce_mod_quadric(f).is_zero


def divide_by_var_mod_quadric(f: BiPoly, v: int):
    """Exact polynomial tau with f = var_v * tau (mod q), or None.

    Writing f = v*A + B with B free of v, membership of B in (v, q) is
    equivalent to divisibility of B by q - x_a y_a in the ring without v,
    and the quotient reassembles to a polynomial representative.
    """
    n = f.n
    a = v if v <= n else v - n - 1
    deg = var_degree(f, v)
    if deg < 0:
        return BiPoly.zero(n)
    big_a = BiPoly.zero(n)
    for k in range(1, deg + 1):
        big_a = big_a + var_shift(var_coefficient(f, v, k), v, k - 1)
    b = var_coefficient(f, v, 0)
    if b.is_zero:
        return big_a
    qbar = BiPoly.incidence_quadric(n) - BiPoly.x(n, a) * BiPoly.y(n, a)
    w = poly_divexact(b, qbar)
    if w is None:
        return None
    partner_poly = BiPoly.y(n, a) if v <= n else BiPoly.x(n, a)
    return big_a - partner_poly * w
