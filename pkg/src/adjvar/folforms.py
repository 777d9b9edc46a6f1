"""Codimension-one foliations on the smooth hyperplane section X of
P^n x P^n, checked symbolically over exact rationals.

Twisted 1-forms are represented by their ambient polynomial coefficients; all
identities on X are tested modulo the incidence quadric q = sum x_i y_i.
Restriction to X is never materialized: a statement "on X" becomes membership
in (q) after wedging with dq where the conormal direction matters, i.e.

* integrability on X:   dq ^ omega ^ d(omega) = 0  (mod q),
* invariance of V(F)^X: dq ^ dF ^ omega = 0        (mod q, F),

each of which is implied by the corresponding ambient identity.  Ideal
membership uses only pseudo-division by q and exact single-divisor division in
a polynomial ring, chart by chart.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import (
    BiPoly,
    divide_by_var_mod_quadric,
    is_zero_mod_quadric,
    poly_divexact,
    poly_gcd_list,
    reduce_mod_quadric,
)


class _MinusInfinity:
    """Sentinel for the degree of a foliation whose general family line is a
    leaf; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __gt__(self, other):
        return False


MINUS_INFINITY = _MinusInfinity()


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------


class PolyOneForm:
    """A global section of Omega^1(a, b) on P^n x P^n in ambient coordinates.

    ``coeffs[v]`` multiplies dx_v for v <= n and dy_{v-n-1} otherwise; the
    dx-coefficients are bihomogeneous of bidegree (a-1, b) and the
    dy-coefficients of bidegree (a, b-1).  Both Euler contractions
    sum x_i A_i and sum y_j B_j must vanish identically.
    """

    __slots__ = ("n", "coeffs", "bidegree")

    def __init__(self, n: int, coeffs):
        if len(coeffs) != 2 * (n + 1):
            raise ValueError("need one coefficient per dx_i and dy_j")
        self.n = n
        self.coeffs = tuple(coeffs)
        if all(c.is_zero for c in self.coeffs):
            raise ValueError("the zero form does not define a foliation")
        self.bidegree = self._check_bidegree()
        self._check_euler()

    def _check_bidegree(self):
        a = b = None
        for v, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            da, db = c.bidegree()
            if v <= self.n:
                cand = (da + 1, db)
            else:
                cand = (da, db + 1)
            if a is None:
                a, b = cand
            elif (a, b) != cand:
                raise ValueError(
                    f"coefficient bidegrees are inconsistent: {(a, b)} vs {cand}"
                )
        return (a, b)

    def _check_euler(self):
        n = self.n
        ex = BiPoly.zero(n)
        ey = BiPoly.zero(n)
        for i in range(n + 1):
            ex = ex + BiPoly.x(n, i) * self.coeffs[i]
            ey = ey + BiPoly.y(n, i) * self.coeffs[n + 1 + i]
        if not ex.is_zero or not ey.is_zero:
            raise ValueError("Euler contraction does not vanish")

    def dx_coeff(self, i: int) -> BiPoly:
        return self.coeffs[i]

    def dy_coeff(self, j: int) -> BiPoly:
        return self.coeffs[self.n + 1 + j]

    def scaled(self, c) -> "PolyOneForm":
        return PolyOneForm(self.n, [p * c for p in self.coeffs])

    def as_dict(self) -> dict:
        return {(v,): c for v, c in enumerate(self.coeffs) if not c.is_zero}

    def to_json(self) -> dict:
        def poly_json(p: BiPoly):
            return [
                {"x": list(xe), "y": list(ye), "c": str(c)}
                for (xe, ye), c in sorted(p.terms.items())
            ]

        return {
            "schema": "1",
            "n": self.n,
            "bidegree": list(self.bidegree),
            "dx": [poly_json(self.coeffs[i]) for i in range(self.n + 1)],
            "dy": [
                poly_json(self.coeffs[self.n + 1 + j]) for j in range(self.n + 1)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyOneForm":
        n = int(data["n"])

        def poly(items):
            terms = {}
            for t in items:
                key = (tuple(int(e) for e in t["x"]), tuple(int(e) for e in t["y"]))
                terms[key] = Fraction(t["c"])
            return BiPoly(n, terms)

        coeffs = [poly(p) for p in data["dx"]] + [poly(p) for p in data["dy"]]
        return cls(n, coeffs)


# generic exterior algebra on dicts {sorted var tuple: BiPoly}


def _merge_wedge(i_tuple, j_tuple):
    """Merge two strictly increasing index tuples; returns (sign, merged) or
    None on a repeated index."""
    merged = []
    sign = 1
    a, b = list(i_tuple), list(j_tuple)
    ai = bi = 0
    while ai < len(a) and bi < len(b):
        if a[ai] == b[bi]:
            return None
        if a[ai] < b[bi]:
            merged.append(a[ai])
            ai += 1
        else:
            # b[bi] jumps over the remaining entries of a
            sign *= (-1) ** (len(a) - ai)
            merged.append(b[bi])
            bi += 1
    merged.extend(a[ai:])
    merged.extend(b[bi:])
    return sign, tuple(merged)


def form_wedge(f: dict, g: dict, n: int) -> dict:
    out: dict = {}
    for ikey, ic in f.items():
        for jkey, jc in g.items():
            m = _merge_wedge(ikey, jkey)
            if m is None:
                continue
            sign, key = m
            term = ic * jc * sign
            cur = out.get(key)
            out[key] = term if cur is None else cur + term
    return {k: v for k, v in out.items() if not v.is_zero}


def form_d(f: dict, n: int) -> dict:
    out: dict = {}
    for key, c in f.items():
        for v in range(2 * (n + 1)):
            dv = c.dvar(v)
            if dv.is_zero:
                continue
            m = _merge_wedge((v,), key)
            if m is None:
                continue
            sign, nkey = m
            term = dv * sign
            cur = out.get(nkey)
            out[nkey] = term if cur is None else cur + term
    return {k: v for k, v in out.items() if not v.is_zero}


def dq_form(n: int) -> dict:
    out = {}
    for i in range(n + 1):
        out[(i,)] = BiPoly.y(n, i)
        out[(n + 1 + i,)] = BiPoly.x(n, i)
    return out


def d_of_poly(f: BiPoly) -> dict:
    n = f.n
    out = {}
    for v in range(2 * (n + 1)):
        dv = f.dvar(v)
        if not dv.is_zero:
            out[(v,)] = dv
    return out


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def pencil_form(h1: BiPoly, h2: BiPoly) -> PolyOneForm:
    """The pencil foliation h1 dh2 - h2 dh1 of two (1,1)-sections."""
    n = h1.n
    for h in (h1, h2):
        if h.is_zero or h.bidegree() != (1, 1):
            raise ValueError("pencil sections must be nonzero of bidegree (1,1)")
    key = next(iter(h1.terms))
    c1 = h1.terms[key]
    c2 = h2.terms.get(key, Fraction(0))
    if h2 * c1 == h1 * c2:
        raise ValueError("degenerate pencil: the two sections are proportional")
    coeffs = []
    for v in range(2 * (n + 1)):
        coeffs.append(h1 * h2.dvar(v) - h2 * h1.dvar(v))
    return PolyOneForm(n, coeffs)


def log_form(residues, factors) -> PolyOneForm:
    """The logarithmic form (prod f_i)(sum lambda_i df_i / f_i).

    The residues must annihilate the factor bidegrees componentwise,
    sum lambda_i deg(f_i) = (0, 0); this is the first-Chern-class constraint
    that makes the form a well-defined projective 1-form.
    """
    if len(residues) != len(factors) or not factors:
        raise ValueError("need matching nonempty residue and factor lists")
    residues = [Fraction(r) for r in residues]
    n = factors[0].n
    degs = []
    for f in factors:
        if f.is_zero:
            raise ValueError("zero factor in a logarithmic form")
        degs.append(f.bidegree())
    total = (
        sum(r * d[0] for r, d in zip(residues, degs)),
        sum(r * d[1] for r, d in zip(residues, degs)),
    )
    if total != (0, 0):
        raise ValueError(
            f"residue condition violated: sum lambda_i deg_i = {total}, not (0,0)"
        )
    coeffs = [BiPoly.zero(n) for _ in range(2 * (n + 1))]
    for i, (ri, fi) in enumerate(zip(residues, factors)):
        cofactor = BiPoly.const(n, 1)
        for j, fj in enumerate(factors):
            if j != i:
                cofactor = cofactor * fj
        for v in range(2 * (n + 1)):
            coeffs[v] = coeffs[v] + cofactor * fi.dvar(v) * ri
    if all(c.is_zero for c in coeffs):
        raise ValueError("degenerate logarithmic form (identically zero)")
    return PolyOneForm(n, coeffs)


def pullback_form(coeffs_x, n: int) -> PolyOneForm:
    """Pullback along the first projection of a 1-form on P^n: the dx
    coefficients depend only on x and the dy block vanishes."""
    zero = BiPoly.zero(n)
    return PolyOneForm(n, list(coeffs_x) + [zero] * (n + 1))


def builtin_pullback(degree: int, n: int) -> PolyOneForm:
    """pi_1-pullback of a standard integrable degree-0 or degree-1 foliation
    on P^n (a pencil of hyperplanes, resp. a two-factor logarithmic form)."""
    x = lambda i: BiPoly.x(n, i)
    if degree == 0:
        # x0 dx1 - x1 dx0
        coeffs = [x(1) * -1, x(0)] + [BiPoly.zero(n)] * (n - 1)
        return pullback_form(coeffs, n)
    if degree == 1:
        # 2h dx0 - x0 dh with h = x1 x2 - x0^2: residues (2, -1) against
        # (x0, h), the rational first integral x0^2 / h
        h = x(1) * x(2) - x(0) * x(0)
        coeffs = []
        for i in range(n + 1):
            c = h * (2 if i == 0 else 0) - x(0) * h.dx(i)
            coeffs.append(c)
        return pullback_form(coeffs, n)
    raise ValueError("only pullback degrees 0 and 1 are built in")


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def integrable(omega: PolyOneForm) -> bool:
    """Frobenius integrability of the foliation cut out on X.

    True iff omega ^ d(omega) = 0 identically or after wedging with dq and
    reducing modulo q (the two coincide for forms defined on all of
    P^n x P^n; the dq factor accounts for forms only defined along X).
    """
    n = omega.n
    w = omega.as_dict()
    gamma = form_wedge(w, form_d(w, n), n)
    if not gamma:
        return True
    if all(is_zero_mod_quadric(c) for c in gamma.values()):
        return True
    four = form_wedge(dq_form(n), gamma, n)
    return all(is_zero_mod_quadric(c) for c in four.values())


def _charts(n: int):
    return list(range(2 * (n + 1)))


def _member_saturated(g: BiPoly, f_chart: BiPoly, n: int, chart: int) -> bool:
    """Does g vanish on V(F, q) away from {chart variable = 0}?

    The chart eliminates the partner coordinate of q; membership reduces to
    exact divisibility by the chart image of F in a polynomial ring (a UFD).
    """
    elim = chart + n + 1 if chart <= n else chart - n - 1
    r = reduce_mod_quadric(g, elim)
    if r.is_zero:
        return True
    r = _strip_var(r, chart)
    return poly_divexact(r, f_chart) is not None


def _strip_var(p: BiPoly, v: int) -> BiPoly:
    """Divide out the highest power of a coordinate dividing every term."""
    from .bipoly import var_coefficient, var_degree, var_shift

    if p.is_zero:
        return p
    val = min(
        (k[0][v] if v <= p.n else k[1][v - p.n - 1]) for k in p.terms
    )
    if val == 0:
        return p
    out = BiPoly.zero(p.n)
    for k in range(val, var_degree(p, v) + 1):
        out = out + var_shift(var_coefficient(p, v, k), v, k - val)
    return out


def is_invariant(omega: PolyOneForm, f: BiPoly) -> bool:
    """Is the hypersurface V(F) ^ X invariant under the foliation of omega?

    Tests dq ^ dF ^ omega = 0 modulo the saturation of (F, q): at a general
    point of V(F, q) the conormal of V(F) ^ X is spanned by dF and dq, so
    invariance says omega lies in that span.  The ambient identity
    omega ^ dF = 0 (mod F, q) implies this.  Each chart contributes an exact
    divisibility test; all charts together cover every component.
    """
    n = omega.n
    if f.is_zero:
        raise ValueError("invariance of the zero divisor is undefined")
    three = form_wedge(
        form_wedge(dq_form(n), d_of_poly(f), n), omega.as_dict(), n
    )
    if not three:
        return True
    f_reduced = {}
    for chart in _charts(n):
        elim = chart + n + 1 if chart <= n else chart - n - 1
        fr = _strip_var(reduce_mod_quadric(f, elim), chart)
        if fr.is_zero:
            raise ValueError("F lies in the ideal of X")
        f_reduced[chart] = fr
    for chart in _charts(n):
        for g in three.values():
            if not _member_saturated(g, f_reduced[chart], n, chart):
                return False
    return True


def has_divisorial_singularities(omega: PolyOneForm) -> bool:
    """Does the zero scheme of omega on X contain a divisor?

    Checks the ambient content gcd of the coefficients (with q-powers
    stripped, since q vanishes on X identically), then retests each
    coordinate hyperplane modulo q to catch factors invisible to the ambient
    gcd.
    """
    n = omega.n
    coeffs = [c for c in omega.coeffs if not c.is_zero]
    if all(is_zero_mod_quadric(c) for c in coeffs):
        return True
    g = poly_gcd_list(coeffs)
    q = BiPoly.incidence_quadric(n)
    while True:
        quo = poly_divexact(g, q)
        if quo is None:
            break
        g = quo
    from .bipoly import used_vars

    if used_vars(g):
        return True
    for v in _charts(n):
        if all(
            divide_by_var_mod_quadric(c, v) is not None for c in omega.coeffs
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# lines and tangency degrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineInFamily:
    """A line inside a fiber of one of the two projections of X.

    Family 1 fixes the x-point ``base`` and moves y along the span of p0, p1
    inside the incidence hyperplane of ``base``; family 2 is symmetric.  The
    defining constraint base . p0 = base . p1 = 0 puts the whole line on X.
    """

    family: int
    base: tuple
    p0: tuple
    p1: tuple

    def __post_init__(self):
        if self.family not in (1, 2):
            raise ValueError("family must be 1 or 2")
        dot0 = sum(a * b for a, b in zip(self.base, self.p0))
        dot1 = sum(a * b for a, b in zip(self.base, self.p1))
        if dot0 != 0 or dot1 != 0:
            raise ValueError("line does not lie on the incidence hyperplane")
        if not _independent(self.p0, self.p1):
            raise ValueError("non-reduced parametrization: spanning points coincide")


def _independent(p, q) -> bool:
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] * q[j] - p[j] * q[i] != 0:
                return True
    return False


def tangency_degree(omega: PolyOneForm, line: LineInFamily):
    """Number of tangencies of the foliation with the line, with multiplicity.

    The pullback of omega along (s:t) -> line(s,t) is b(s,t) (t ds - s dt)
    for a homogeneous binary form b; returns deg b, or MINUS_INFINITY when
    the line is contained in a leaf (b = 0).
    """
    n = omega.n
    block = range(n + 1, 2 * (n + 1)) if line.family == 1 else range(n + 1)
    u: list[Fraction] | None = None
    v_form: list[Fraction] | None = None

    def add(acc, form, scale):
        if not form or not scale:
            return acc
        if acc is None:
            acc = [Fraction(0)] * len(form)
        if len(acc) < len(form):
            acc = acc + [Fraction(0)] * (len(form) - len(acc))
        for k, c in enumerate(form):
            acc[k] += c * scale
        return acc

    for idx, var in enumerate(block):
        c = omega.coeffs[var]
        if c.is_zero:
            continue
        restricted = c.restrict_line(line.family, line.base, line.p0, line.p1)
        u = add(u, restricted, line.p0[idx])
        v_form = add(v_form, restricted, line.p1[idx])

    def normalize(form):
        if form is None or all(not c for c in form):
            return None
        return form

    u, v_form = normalize(u), normalize(v_form)
    if u is None and v_form is None:
        return MINUS_INFINITY
    # Euler on the moving factor forces s U + t V = 0, so U = t b, V = -s b
    if u is not None:
        if u[0] != 0:
            raise ArithmeticError("pullback lost the Euler relation")
        b = u[1:]
    else:
        b = [-c for c in v_form[:-1]]
    if all(not c for c in b):
        return MINUS_INFINITY
    return len(b) - 1


# ---------------------------------------------------------------------------
# numerics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FoliationNumerics:
    """Class-level invariants of a foliation with normal bundle O_X(a, b)."""

    normal_bidegree: tuple
    K_F_bidegree: tuple
    deg_H1: int
    deg_H2: int
    splitting_p: int

    def to_json(self) -> dict:
        return {
            "normal_bidegree": list(self.normal_bidegree),
            "K_F_bidegree": list(self.K_F_bidegree),
            "deg_H1": self.deg_H1,
            "deg_H2": self.deg_H2,
            "splitting_p": self.splitting_p,
        }


def foliation_numerics(normal_bidegree, n: int) -> FoliationNumerics:
    """Degrees against the two line families and the foliation canonical
    class, from intersection numbers: a fiber line of pi_1 meets h2 once and
    h1 not at all, K_X = O(-n, -n), and a degree-zero foliation restricts on
    a general minimal rational curve with p = deg f*T_X - 2 = n - 2 positive
    summands."""
    a, b = normal_bidegree
    return FoliationNumerics(
        normal_bidegree=(a, b),
        K_F_bidegree=(a - n, b - n),
        deg_H1=b - 2,
        deg_H2=a - 2,
        splitting_p=max(n - 2, 0),
    )


# ---------------------------------------------------------------------------
# vector-field induced foliations (X a 3-fold, n = 2)
# ---------------------------------------------------------------------------


def linear_field(matrix, n: int):
    """The vector field of a trace-free matrix A acting as x -> Ax on the
    first factor and y -> -A^T y on the second; it kills q exactly."""
    comps = []
    for i in range(n + 1):
        c = BiPoly.zero(n)
        for j in range(n + 1):
            if matrix[i][j]:
                c = c + BiPoly.x(n, j) * Fraction(matrix[i][j])
        comps.append(c)
    for j in range(n + 1):
        c = BiPoly.zero(n)
        for i in range(n + 1):
            if matrix[i][j]:
                c = c - BiPoly.y(n, i) * Fraction(matrix[i][j])
        comps.append(c)
    return tuple(comps)


def field_apply(field, f: BiPoly) -> BiPoly:
    out = BiPoly.zero(f.n)
    for v, comp in enumerate(field):
        if not comp.is_zero:
            out = out + comp * f.dvar(v)
    return out


def _linear_reduce_monomial(key, n: int, power: int):
    """x_0^power * (monomial) rewritten modulo q into y_0-free terms.

    Each y_0^k is traded for (-(x_1 y_1 + ... + x_n y_n))^k x_0^{-k}, using up
    k of the supplied x_0 powers; the map is linear over monomials, which the
    equation assembly below relies on (pseudo-division is not linear)."""
    xe, ye = key
    k = ye[0]
    if k > power:
        raise ValueError("insufficient x_0 power for linear reduction")
    base_x = list(xe)
    base_x[0] += power - k
    base_y = list(ye)
    base_y[0] = 0
    out = {}
    qbar_pow = {((0,) * (n + 1), (0,) * (n + 1)): Fraction(1)}
    qbar = {}
    for i in range(1, n + 1):
        xx = [0] * (n + 1)
        yy = [0] * (n + 1)
        xx[i] = 1
        yy[i] = 1
        qbar[(tuple(xx), tuple(yy))] = Fraction(-1)
    for _ in range(k):
        nxt = {}
        for (xa, ya), ca in qbar_pow.items():
            for (xb, yb), cb in qbar.items():
                kk = (
                    tuple(a + b for a, b in zip(xa, xb)),
                    tuple(a + b for a, b in zip(ya, yb)),
                )
                nxt[kk] = nxt.get(kk, Fraction(0)) + ca * cb
        qbar_pow = nxt
    for (xa, ya), ca in qbar_pow.items():
        kk = (
            tuple(a + b for a, b in zip(base_x, xa)),
            tuple(a + b for a, b in zip(base_y, ya)),
        )
        out[kk] = out.get(kk, Fraction(0)) + ca
    return out


def _nullspace(rows, ncols):
    """Basis of the nullspace of a sparse rational matrix (rows are dicts)."""
    dense = [[Fraction(0)] * ncols for _ in rows]
    for r, row in enumerate(rows):
        for c, v in row.items():
            dense[r][c] = v
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(dense)) if dense[i][c]), None)
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        inv = 1 / dense[r][c]
        dense[r] = [x * inv for x in dense[r]]
        for i in range(len(dense)):
            if i != r and dense[i][c]:
                f = dense[i][c]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        pivots.append(c)
        r += 1
        if r == len(dense):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -dense[ri][fc]
        basis.append(vec)
    return basis


def foliation_from_fields(v1, v2, normal_bidegree=(2, 2)) -> PolyOneForm:
    """The 1-form of the codimension-one foliation spanned by two vector
    fields tangent to X (n = 2 only, so X is a 3-fold).

    Solves exactly for a form of the given bidegree with vanishing Euler
    contractions that annihilates both fields modulo q; this is the ambient
    realization of contracting the local volume form of X by the two fields.
    For an honest foliation the solution space is one-dimensional; dimension
    zero means no foliation of that bidegree (raise), higher dimension means
    the fields are dependent along X (raise).
    """
    n = v1[0].n
    if n != 2:
        raise ValueError("vector-field foliations are implemented for n = 2")
    q = BiPoly.incidence_quadric(n)
    for v in (v1, v2):
        if not is_zero_mod_quadric(field_apply(v, q)):
            raise ValueError("vector field is not tangent to X")
    if not _fields_independent(v1, v2):
        raise ValueError("the two vector fields are dependent on X")

    a, b = normal_bidegree
    nvars = 2 * (n + 1)
    blocks = []  # (var index, list of monomial keys)
    columns = []
    for v in range(nvars):
        deg = (a - 1, b) if v <= n else (a, b - 1)
        if deg[0] < 0 or deg[1] < 0:
            blocks.append((v, []))
            continue
        monos = [
            (xe, ye)
            for xe in _exponents(n + 1, deg[0])
            for ye in _exponents(n + 1, deg[1])
        ]
        blocks.append((v, monos))
        for m in monos:
            columns.append((v, m))
    col_index = {vm: i for i, vm in enumerate(columns)}

    equations: dict = {}

    def add_equation(tag, key, col, value):
        row = equations.setdefault((tag, key), {})
        row[col] = row.get(col, Fraction(0)) + value

    # Euler contractions vanish identically (exact linear constraints)
    for v, monos in blocks:
        mult = v if v <= n else v - n - 1
        tag = "ex" if v <= n else "ey"
        for m in monos:
            xe, ye = m
            if v <= n:
                t = list(xe)
                t[mult] += 1
                key = (tuple(t), ye)
            else:
                t = list(ye)
                t[mult] += 1
                key = (xe, tuple(t))
            add_equation(tag, key, col_index[(v, m)], Fraction(1))

    # omega(v_k) = 0 modulo q, via the linear y_0-elimination normal form
    for tag, field in (("v1", v1), ("v2", v2)):
        # the y_0-degree of coefficient * field component is bounded by the
        # total y-degree of the product
        power = 0
        for v, comp in enumerate(field):
            if comp.is_zero:
                continue
            block_ydeg = b if v <= n else b - 1
            power = max(power, block_ydeg + comp.bidegree()[1])
        for v, monos in blocks:
            comp = field[v]
            if comp.is_zero:
                continue
            for m in monos:
                prod = BiPoly(n, {m: Fraction(1)}) * comp
                for key, cc in prod.terms.items():
                    for rkey, rv in _linear_reduce_monomial(key, n, power).items():
                        add_equation(tag, rkey, col_index[(v, m)], cc * rv)

    rows = list(equations.values())
    kernel = _nullspace(rows, len(columns))
    junk = _zero_restriction_basis(n, (a, b), col_index)
    reps = _quotient_by(kernel, junk, len(columns))
    if not reps:
        raise ValueError(
            f"no foliation form of bidegree {normal_bidegree} annihilates the fields"
        )
    if len(reps) > 1:
        raise ValueError("the two vector fields are dependent on X")
    vec = reps[0]
    coeffs = []
    for v, monos in blocks:
        terms = {}
        for m in monos:
            c = vec[col_index[(v, m)]]
            if c:
                terms[m] = c
        coeffs.append(BiPoly(n, terms))
    coeffs = _saturate(coeffs, n, mod_q=False)
    return PolyOneForm(n, coeffs)


def _zero_restriction_basis(n, bidegree, col_index):
    """Coordinate vectors of the Euler-compliant ambient forms restricting to
    zero on X: q*alpha - alpha(E_x)*dq over alphas with alpha(E_x) = alpha(E_y).

    These always solve the annihilation equations, so the honest solution
    space is the quotient by this junk."""
    a, b = bidegree
    q = BiPoly.incidence_quadric(n)
    alpha_blocks = []
    alpha_cols = []
    for v in range(2 * (n + 1)):
        deg = (a - 2, b - 1) if v <= n else (a - 1, b - 2)
        if deg[0] < 0 or deg[1] < 0:
            alpha_blocks.append((v, []))
            continue
        monos = [
            (xe, ye)
            for xe in _exponents(n + 1, deg[0])
            for ye in _exponents(n + 1, deg[1])
        ]
        alpha_blocks.append((v, monos))
        for m in monos:
            alpha_cols.append((v, m))
    if not alpha_cols:
        return []
    acol = {vm: i for i, vm in enumerate(alpha_cols)}
    # constraint alpha(E_x) - alpha(E_y) = 0
    rows: dict = {}
    for v, monos in alpha_blocks:
        mult = v if v <= n else v - n - 1
        sign = 1 if v <= n else -1
        for m in monos:
            xe, ye = m
            if v <= n:
                t = list(xe)
                t[mult] += 1
                key = (tuple(t), ye)
            else:
                t = list(ye)
                t[mult] += 1
                key = (xe, tuple(t))
            row = rows.setdefault(key, {})
            row[acol[(v, m)]] = row.get(acol[(v, m)], Fraction(0)) + sign
    alphas = _nullspace(list(rows.values()), len(alpha_cols))
    out = []
    for avec in alphas:
        acoeffs = []
        for v, monos in alpha_blocks:
            terms = {}
            for m in monos:
                c = avec[acol[(v, m)]]
                if c:
                    terms[m] = c
            acoeffs.append(BiPoly(n, terms))
        g = BiPoly.zero(n)
        for i in range(n + 1):
            g = g + BiPoly.x(n, i) * acoeffs[i]
        vec = [Fraction(0)] * len(col_index)
        ok = True
        for v in range(2 * (n + 1)):
            dq_v = BiPoly.y(n, v) if v <= n else BiPoly.x(n, v - n - 1)
            comp = q * acoeffs[v] - g * dq_v
            for m, c in comp.terms.items():
                idx = col_index.get((v, m))
                if idx is None:
                    ok = False
                    break
                vec[idx] = c
            if not ok:
                break
        if ok and any(vec):
            out.append(vec)
    return out


def _quotient_by(kernel, junk, ncols):
    """Representatives of kernel modulo span(junk): reduce each kernel vector
    against an echelon form of the junk space and keep one per direction."""
    echelon = []
    pivots = []

    def reduce_vec(vec):
        vec = list(vec)
        for row, piv in zip(echelon, pivots):
            if vec[piv]:
                f = vec[piv] / row[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    for j in junk:
        r = reduce_vec(j)
        piv = next((i for i, v in enumerate(r) if v), None)
        if piv is not None:
            echelon.append(r)
            pivots.append(piv)
    reps = []
    for k in kernel:
        r = reduce_vec(k)
        piv = next((i for i, v in enumerate(r) if v), None)
        if piv is None:
            continue
        scaled = [v / r[piv] for v in r]
        if not any(_vec_eq(scaled, other) for other in reps):
            reps.append(scaled)
    return reps


def _vec_eq(u, v):
    return all(a == b for a, b in zip(u, v))


def _fields_independent(v1, v2) -> bool:
    nvars = len(v1)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            minor = v1[i] * v2[j] - v1[j] * v2[i]
            if not is_zero_mod_quadric(minor):
                return True
    return False


def _saturate(coeffs, n: int, mod_q: bool = True):
    """Divide out the polynomial content and (optionally) any coordinate
    factor mod q.  The mod-q division only preserves Euler contractions up to
    multiples of q, so callers that need exact Euler identities disable it."""
    nonzero = [c for c in coeffs if not c.is_zero]
    g = poly_gcd_list(nonzero)
    if g is not None:
        from .bipoly import used_vars

        if used_vars(g):
            coeffs = [
                poly_divexact(c, g) if not c.is_zero else c for c in coeffs
            ]
            if any(c is None for c in coeffs):
                raise ArithmeticError("content division failed")
    changed = mod_q
    while changed:
        changed = False
        for v in range(2 * (n + 1)):
            divided = [divide_by_var_mod_quadric(c, v) for c in coeffs]
            if all(d is not None for d in divided) and any(
                not d.is_zero for d in divided
            ):
                coeffs = divided
                changed = True
    # normalize the rational content for reproducible output
    nonzero = [c for c in coeffs if not c.is_zero]
    if nonzero:
        from math import gcd, lcm

        num = 0
        den = 1
        for c in nonzero:
            cc = c.content()
            num = gcd(num, cc.numerator)
            den = lcm(den, cc.denominator)
        content = Fraction(num, den)
        if nonzero[0].terms[max(nonzero[0].terms)] < 0:
            content = -content
        if content not in (0, 1):
            coeffs = [c * (Fraction(1) / content) for c in coeffs]
    return list(coeffs)


def same_foliation(w1: PolyOneForm, w2: PolyOneForm) -> bool:
    """Do two forms cut out the same foliation on X?  True iff
    dq ^ w1 ^ w2 = 0 mod q (proportionality along X up to the conormal)."""
    n = w1.n
    three = form_wedge(
        form_wedge(dq_form(n), w1.as_dict(), n), w2.as_dict(), n
    )
    return all(is_zero_mod_quadric(c) for c in three.values())


# ---------------------------------------------------------------------------
# built-in foliations
# ---------------------------------------------------------------------------


def builtin_affine(n: int = 2):
    """The rigid foliation from the affine subalgebra acting through the
    degree-two embedding of the projective line: semisimple generator
    diag(1,0,-1) and raising nilpotent, with [s, e] = e.

    Returns (form, invariant surfaces (F1, F2) of classes (2,0) and (0,2)).
    """
    if n != 2:
        raise ValueError("the affine-action foliation lives on n = 2")
    s = [[1, 0, 0], [0, 0, 0], [0, 0, -1]]
    e = [[0, 1, 0], [0, 0, 2], [0, 0, 0]]
    v_s = linear_field(s, n)
    v_e = linear_field(e, n)
    omega = foliation_from_fields(v_s, v_e)
    x = lambda i: BiPoly.x(n, i)
    y = lambda j: BiPoly.y(n, j)
    f1 = x(1) * x(1) - x(0) * x(2) * 4  # the conic orbit closure
    f2 = y(1) * y(1) - y(0) * y(2)  # its dual on the second factor
    return omega, f1, f2


def builtin_torus(n: int = 2):
    """A torus-orbit foliation: two commuting diagonal fields; its first
    integral is the monomial pencil x1 y1 / x0 y0."""
    if n != 2:
        raise ValueError("the torus cross-check lives on n = 2")
    a = [[-1, 0, 0], [0, -1, 0], [0, 0, 2]]
    b = [[2, 0, 0], [0, -1, 0], [0, 0, -1]]
    return foliation_from_fields(linear_field(a, n), linear_field(b, n))


def builtin_pencil(n: int, sampler=None) -> PolyOneForm:
    """A transverse pencil of hyperplane sections; generic when sampled.

    The fixed members are sum (k+1) x_k y_k and the cyclic form
    sum x_k y_{k+1}, which stay irreducible after restriction to X."""
    if sampler is None:
        h1 = BiPoly.zero(n)
        h2 = BiPoly.zero(n)
        for k in range(n + 1):
            h1 = h1 + BiPoly.x(n, k) * BiPoly.y(n, k) * (k + 1)
            h2 = h2 + BiPoly.x(n, k) * BiPoly.y(n, (k + 1) % (n + 1))
        return pencil_form(h1, h2)
    return pencil_form(sampler.section11(), sampler.section11())


def builtin_log4(n: int, lam=1, mu=2) -> PolyOneForm:
    """Four-factor logarithmic form with residues (lam, -lam, mu, -mu) on two
    (1,0) and two (0,1) hyperplanes."""
    x = lambda i: BiPoly.x(n, i)
    y = lambda j: BiPoly.y(n, j)
    factors = [
        x(0),
        x(0) + x(1),
        y(0),
        y(0) + y(1) + (y(2) if n >= 2 else BiPoly.zero(n)),
    ]
    return log_form([lam, -Fraction(lam), mu, -Fraction(mu)], factors)


# ---------------------------------------------------------------------------
# seeded sampling
# ---------------------------------------------------------------------------


class FolSampler:
    """Deterministic rational sampling for genericity checks.

    Rational points have numerators and denominators bounded by ``height``;
    all draws flow from the one seed, so runs are reproducible.
    """

    def __init__(self, n: int, seed: int = 2024, height: int = 100):
        self.n = n
        self.rng = random.Random(seed)
        self.height = height

    def fraction(self, nonzero=False) -> Fraction:
        h = self.height
        while True:
            value = Fraction(self.rng.randint(-h, h), self.rng.randint(1, h))
            if value or not nonzero:
                return value

    def point(self):
        """A rational point with no zero coordinate (generic for our uses)."""
        return tuple(self.fraction(nonzero=True) for _ in range(self.n + 1))

    def line(self, family: int) -> LineInFamily:
        base = self.point()
        for _ in range(100):
            p0 = self._in_hyperplane(base)
            p1 = self._in_hyperplane(base)
            if _independent(p0, p1):
                return LineInFamily(family=family, base=base, p0=p0, p1=p1)
        raise RuntimeError("failed to sample an independent line")

    def _in_hyperplane(self, base):
        coords = [self.fraction() for _ in range(self.n)]
        last = -sum(b * c for b, c in zip(base[:-1], coords)) / base[-1]
        return tuple(coords + [last])

    def section11(self) -> BiPoly:
        """A random (1,1)-section, generically irreducible and transverse."""
        n = self.n
        out = BiPoly.zero(n)
        while out.is_zero:
            terms = {}
            for i in range(n + 1):
                for j in range(n + 1):
                    c = self.fraction()
                    if c:
                        xe = tuple(1 if k == i else 0 for k in range(n + 1))
                        ye = tuple(1 if k == j else 0 for k in range(n + 1))
                        terms[(xe, ye)] = c
            out = BiPoly(n, terms)
        return out

    def euler_form(self, bidegree) -> PolyOneForm:
        """A random form of the given bidegree with exact Euler vanishing,
        built from antisymmetric coefficient matrices; generically it is not
        integrable."""
        a, b = bidegree
        n = self.n
        coeffs = [BiPoly.zero(n) for _ in range(2 * (n + 1))]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                g = self._random_bipoly((a - 2, b))
                coeffs[i] = coeffs[i] + g * BiPoly.x(n, j)
                coeffs[j] = coeffs[j] - g * BiPoly.x(n, i)
                h = self._random_bipoly((a, b - 2))
                coeffs[n + 1 + i] = coeffs[n + 1 + i] + h * BiPoly.y(n, j)
                coeffs[n + 1 + j] = coeffs[n + 1 + j] - h * BiPoly.y(n, i)
        return PolyOneForm(n, coeffs)

    def _random_bipoly(self, bidegree) -> BiPoly:
        a, b = bidegree
        if a < 0 or b < 0:
            return BiPoly.zero(self.n)
        n = self.n
        terms = {}
        for xe in _exponents(n + 1, a):
            for ye in _exponents(n + 1, b):
                c = self.fraction()
                if c:
                    terms[(xe, ye)] = c
        return BiPoly(n, terms)


def _exponents(nvars: int, total: int):
    if nvars == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _exponents(nvars - 1, total - first):
            yield (first,) + rest
