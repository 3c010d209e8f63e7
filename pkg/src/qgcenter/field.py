"""Exact arithmetic in the coefficient field Q(r, s).

Elements live in the fraction field of Laurent polynomials in two variables
r, s whose exponents are rationals (the ambient field is assumed to contain
r^(1/m^2), s^(1/m^2) for the relevant lattice constant m, so every exponent
denominator we ever produce divides m^2).

Representation:

  Rat       = fractions.Fraction (arbitrary precision, always reduced)
  LaurentRS = sparse dict {(exp_r, exp_s): coeff}, no zero coefficients
  FieldElem = normalized fraction num/den of two LaurentRS

Normalization integerizes exponents through u = r^(1/L), v = s^(1/L) where L
is the lcm of the exponent denominators at hand, removes the polynomial gcd
of numerator and denominator, and pins the denominator to an ordinary
polynomial (minimal exponent 0 in each variable) with leading coefficient +1
under graded-lex order with u > v.  Equal values therefore have identical
representations and equality is plain dict comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def rat_to_str(q: Fraction) -> str:
    """Serialize a rational as "p" or "p/q"."""
    q = _as_rat(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative integer, or None if not a perfect power."""
    if n < 0 or k <= 0:
        raise ValueError("integer_root needs n >= 0, k >= 1")
    if k == 1 or n in (0, 1):
        return n
    lo, hi = 0, 1
    while hi**k <= n:
        hi <<= 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


def rat_root(q: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of a positive rational, or None."""
    if q <= 0:
        return None
    p = integer_root(q.numerator, k)
    d = integer_root(q.denominator, k)
    if p is None or d is None:
        return None
    return Fraction(p, d)


def rat_pow(base: Fraction, e: Fraction) -> Fraction:
    """base**e for rational e; raises ValueError when the root is not rational."""
    base = _as_rat(base)
    e = _as_rat(e)
    if e.denominator == 1:
        return base**e.numerator
    root = rat_root(base, e.denominator)
    if root is None:
        raise ValueError(
            f"{base} has no exact {e.denominator}-th root; exponent {e} not evaluable"
        )
    return root**e.numerator


class LaurentRS:
    """Laurent polynomial in r, s: finitely many terms coeff * r^a * s^b.

    Exponents a, b are Fractions; coefficients are nonzero Fractions.
    Instances are treated as immutable; all operators return fresh objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        tidy: dict[tuple[Fraction, Fraction], Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                c = _as_rat(c)
                if c:
                    tidy[(_as_rat(a), _as_rat(b))] = c
        self.terms = tidy

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentRS":
        return cls()

    @classmethod
    def one(cls) -> "LaurentRS":
        return cls({(_ZERO, _ZERO): _ONE})

    @classmethod
    def const(cls, c) -> "LaurentRS":
        return cls({(_ZERO, _ZERO): _as_rat(c)})

    @classmethod
    def monomial(cls, c, a, b) -> "LaurentRS":
        """c * r^a * s^b."""
        return cls({(_as_rat(a), _as_rat(b)): _as_rat(c)})

    @classmethod
    def var_r(cls) -> "LaurentRS":
        return cls.monomial(1, 1, 0)

    @classmethod
    def var_s(cls) -> "LaurentRS":
        return cls.monomial(1, 0, 1)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == {(_ZERO, _ZERO): _ONE}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentRS") -> "LaurentRS":
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, _ZERO) + c
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
        res = LaurentRS.__new__(LaurentRS)
        res.terms = out
        return res

    def __neg__(self) -> "LaurentRS":
        res = LaurentRS.__new__(LaurentRS)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentRS") -> "LaurentRS":
        return self + (-other)

    def __mul__(self, other: "LaurentRS") -> "LaurentRS":
        if not self.terms or not other.terms:
            return LaurentRS.zero()
        # monomial fast path covers the bulk of character arithmetic
        if len(other.terms) == 1:
            ((a2, b2), c2), = other.terms.items()
            res = LaurentRS.__new__(LaurentRS)
            res.terms = {(a + a2, b + b2): c * c2 for (a, b), c in self.terms.items()}
            return res
        if len(self.terms) == 1:
            return other * self
        out: dict[tuple[Fraction, Fraction], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                acc = out.get(k, _ZERO) + c1 * c2
                if acc:
                    out[k] = acc
                else:
                    out.pop(k, None)
        res = LaurentRS.__new__(LaurentRS)
        res.terms = out
        return res

    def scale(self, c) -> "LaurentRS":
        c = _as_rat(c)
        if not c:
            return LaurentRS.zero()
        res = LaurentRS.__new__(LaurentRS)
        res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    def __pow__(self, n: int) -> "LaurentRS":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((a, b), c), = self.terms.items()
            return LaurentRS.monomial(c**n, a * n, b * n)
        out = LaurentRS.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentRS) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ---------------------------------------------------------

    def sorted_terms(self):
        """Terms sorted by exponent pair: deterministic iteration order."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in self.sorted_terms():
            factors = []
            if c != 1 or (a == 0 and b == 0):
                factors.append(str(c))
            if a:
                factors.append("r" if a == 1 else f"r^({a})")
            if b:
                factors.append("s" if b == 1 else f"s^({b})")
            bits.append("*".join(factors))
        return " + ".join(bits)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list:
        return [
            {"r": rat_to_str(a), "s": rat_to_str(b), "c": rat_to_str(c)}
            for (a, b), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list) -> "LaurentRS":
        return cls(
            {(Fraction(t["r"]), Fraction(t["s"])): Fraction(t["c"]) for t in data}
        )

    def evaluate(self, r0: Fraction, s0: Fraction) -> Fraction:
        """Exact value at a rational point; raises on non-evaluable exponents."""
        total = _ZERO
        for (a, b), c in self.terms.items():
            total += c * rat_pow(r0, a) * rat_pow(s0, b)
        return total


# ---------------------------------------------------------------------------
# integerized polynomial helpers (exponents as plain ints, u > v graded-lex)
# ---------------------------------------------------------------------------

IntPoly = dict  # {(int, int): Fraction}


def _grlex_key(e):
    return (e[0] + e[1], e[0])


def _leading(f: IntPoly):
    return max(f, key=_grlex_key)


def _ipoly_mul(f: IntPoly, g: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            k = (a1 + a2, b1 + b2)
            acc = out.get(k, _ZERO) + c1 * c2
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
    return out


def _ipoly_sub(f: IntPoly, g: IntPoly) -> IntPoly:
    out = dict(f)
    for k, c in g.items():
        acc = out.get(k, _ZERO) - c
        if acc:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


def _ipoly_div_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact division f/g in Q[u, v]; raises ArithmeticError if not exact."""
    q: IntPoly = {}
    rem = dict(f)
    lg = _leading(g)
    cg = g[lg]
    while rem:
        lr = _leading(rem)
        ea, eb = lr[0] - lg[0], lr[1] - lg[1]
        if ea < 0 or eb < 0:
            raise ArithmeticError("non-exact polynomial division")
        coef = rem[lr] / cg
        term = {(ea, eb): coef}
        q[(ea, eb)] = coef
        rem = _ipoly_sub(rem, _ipoly_mul(term, g))
    return q


def _int_content_and_primitive(coeffs: dict[int, Fraction]):
    """Scale a univariate poly over Q to primitive over Z with positive lead."""
    den = lcm(*(c.denominator for c in coeffs.values())) if coeffs else 1
    ints = {e: c.numerator * (den // c.denominator) for e, c in coeffs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g == 0:
        return {}, _ZERO
    if ints[max(ints)] < 0:
        g = -g
    return {e: v // g for e, v in ints.items()}, Fraction(g, den)


def _upoly_prem(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Pseudo-remainder of univariate integer polys (sparse dicts)."""
    a = dict(a)
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        # a := lb * a - la * x^(da-db) * b
        new: dict[int, int] = {}
        for e, c in a.items():
            new[e] = c * lb
        for e, c in b.items():
            k = e + da - db
            new[k] = new.get(k, 0) - la * c
        a = {e: c for e, c in new.items() if c}
    return a


def _upoly_primitive(a: dict[int, int]) -> dict[int, int]:
    if not a:
        return {}
    g = 0
    for c in a.values():
        g = gcd(g, c)
    if a[max(a)] < 0:
        g = -g
    return {e: c // g for e, c in a.items()}


def _upoly_gcd(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Primitive gcd of univariate integer polys via primitive PRS."""
    a = _upoly_primitive(a)
    b = _upoly_primitive(b)
    while b:
        a, b = b, _upoly_primitive(_upoly_prem(a, b))
    return a


def _upoly_divexact(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Exact division of univariate integer polys; raises if not exact."""
    q: dict[int, int] = {}
    a = dict(a)
    db = max(b)
    lb = b[db]
    while a:
        da = max(a)
        la = a[da]
        if da < db or la % lb:
            raise ArithmeticError("non-exact univariate division")
        c = la // lb
        q[da - db] = c
        for eb, cb in b.items():
            k = eb + da - db
            v = a.get(k, 0) - c * cb
            if v:
                a[k] = v
            else:
                a.pop(k, None)
    return q


def _upoly_eval(p: dict[int, int], x: int) -> int:
    return sum(c * x**e for e, c in p.items())


def _interp_upoly(xs: list[int], ys: list[Fraction]) -> dict[int, Fraction]:
    """Newton interpolation over Q: the unique poly p with p(xs[i]) = ys[i]."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly: dict[int, Fraction] = {}
    basis: dict[int, Fraction] = {0: _ONE}
    for i in range(n):
        if coef[i]:
            for e, c in basis.items():
                acc = poly.get(e, _ZERO) + coef[i] * c
                if acc:
                    poly[e] = acc
                else:
                    poly.pop(e, None)
        nb: dict[int, Fraction] = {}
        for e, c in basis.items():
            nb[e + 1] = nb.get(e + 1, _ZERO) + c
            acc = nb.get(e, _ZERO) - c * xs[i]
            if acc:
                nb[e] = acc
            else:
                nb.pop(e, None)
        basis = nb
    return poly


def _split_content(ints: dict[tuple[int, int], int]):
    """{(u,v): int} -> (content in Z[u], primitive part as {v: {u: int}})."""
    rec: dict[int, dict[int, int]] = {}
    for (a, b), c in ints.items():
        rec.setdefault(b, {})[a] = c
    cont: dict[int, int] = {}
    for coeff in rec.values():
        cont = _upoly_gcd(cont, coeff) if cont else _upoly_primitive(coeff)
        if cont == {0: 1}:
            break
    pp = {b: _upoly_divexact(coeff, cont) for b, coeff in rec.items()}
    return cont, pp


def _divides(h: IntPoly, p: IntPoly) -> bool:
    try:
        _ipoly_div_exact(p, h)
        return True
    except ArithmeticError:
        return False


def _gcd_images(pf, pg) -> IntPoly:
    """gcd of Z[u]-primitive parts via univariate images in v + interpolation.

    Evaluates u at integer points, takes univariate gcds in v, scales images by
    gamma = gcd of the leading v-coefficients (Brown's normalization), then
    interpolates and certifies the candidate by exact division into both inputs.
    """
    lf, lg = pf[max(pf)], pg[max(pg)]
    gamma = _upoly_gcd(lf, lg)
    du_f = max(max(c) for c in pf.values())
    du_g = max(max(c) for c in pg.values())
    npts = max(gamma) + min(du_f, du_g) + 1

    def as_ipoly(rec):
        return {(a, b): Fraction(c) for b, coeff in rec.items() for a, c in coeff.items()}

    f_biv, g_biv = as_ipoly(pf), as_ipoly(pg)
    xs: list[int] = []
    imgs: list[dict[int, Fraction]] = []
    target_dv = None
    x, sign = 1, 1
    while True:
        x_val = x * sign
        if sign == 1:
            sign = -1
        else:
            sign, x = 1, x + 1
        if _upoly_eval(lf, x_val) == 0 or _upoly_eval(lg, x_val) == 0:
            continue
        fimg = {b: _upoly_eval(c, x_val) for b, c in pf.items()}
        gimg = {b: _upoly_eval(c, x_val) for b, c in pg.items()}
        himg = _upoly_gcd({k: v for k, v in fimg.items() if v},
                          {k: v for k, v in gimg.items() if v})
        dv = max(himg)
        if dv == 0:
            return {(0, 0): _ONE}
        if target_dv is None or dv < target_dv:
            xs, imgs, target_dv = [], [], dv
        if dv == target_dv:
            lead = himg[dv]
            gx = _upoly_eval(gamma, x_val)
            imgs.append({e: Fraction(c * gx, lead) for e, c in himg.items()})
            xs.append(x_val)
        if len(xs) >= npts:
            cand: IntPoly = {}
            for e in range(target_dv + 1):
                upoly = _interp_upoly(xs, [img.get(e, _ZERO) for img in imgs])
                for eu, c in upoly.items():
                    cand[(eu, e)] = c
            den = lcm(*(c.denominator for c in cand.values()))
            cints = {k: int(c * den) for k, c in cand.items()}
            _, cpp = _split_content(cints)
            h = as_ipoly(cpp)
            if _divides(h, f_biv) and _divides(h, g_biv):
                return h
            npts += 2  # unlucky interpolation set; gather more evidence


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """gcd in Q[u, v], primitive over Z with positive grlex leading coefficient."""
    if not f:
        return dict(g)
    if not g:
        return dict(f)
    if len(f) == 1 or len(g) == 1:
        # a monomial can only share a monomial factor
        au = min(e[0] for e in f)
        av_ = min(e[1] for e in f)
        bu = min(e[0] for e in g)
        bv = min(e[1] for e in g)
        return {(min(au, bu), min(av_, bv)): _ONE}

    def to_ints(p: IntPoly) -> dict[tuple[int, int], int]:
        den = lcm(*(c.denominator for c in p.values()))
        return {k: int(c * den) for k, c in p.items()}

    cf, pf = _split_content(to_ints(f))
    cg, pg = _split_content(to_ints(g))
    ucont = _upoly_gcd(cf, cg)
    if max(pf) == 0 or max(pg) == 0:
        h: IntPoly = {(0, 0): _ONE}
    else:
        h = _gcd_images(pf, pg)
    out: IntPoly = {}
    for (a, b), c in h.items():
        for eu, cu in ucont.items():
            k = (a + eu, b)
            acc = out.get(k, _ZERO) + c * cu
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
    lead = _leading(out)
    if out[lead] < 0:
        out = {k: -c for k, c in out.items()}
    den = lcm(*(c.denominator for c in out.values()))
    num_gcd = 0
    for c in out.values():
        num_gcd = gcd(num_gcd, int(c * den))
    return {k: Fraction(int(c * den), num_gcd) for k, c in out.items()}


class FieldElem:
    """Normalized element of the fraction field of LaurentRS."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentRS, den: LaurentRS, _normalized: bool = False):
        if _normalized:
            self.num = num
            self.den = den
        else:
            e = normalize_fraction(num, den)
            self.num = e.num
            self.den = e.den

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "FieldElem":
        return cls(LaurentRS.zero(), LaurentRS.one(), _normalized=True)

    @classmethod
    def one(cls) -> "FieldElem":
        return cls(LaurentRS.one(), LaurentRS.one(), _normalized=True)

    @classmethod
    def const(cls, c) -> "FieldElem":
        c = _as_rat(c)
        if not c:
            return cls.zero()
        return cls(LaurentRS.const(c), LaurentRS.one(), _normalized=True)

    @classmethod
    def from_laurent(cls, p: LaurentRS) -> "FieldElem":
        return cls(p, LaurentRS.one(), _normalized=True)

    @classmethod
    def monomial(cls, c, a, b) -> "FieldElem":
        c = _as_rat(c)
        if not c:
            return cls.zero()
        return cls(LaurentRS.monomial(c, a, b), LaurentRS.one(), _normalized=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_rat(self) -> Fraction:
        """The constant value, if this element is a constant; raises otherwise."""
        if self.is_zero():
            return _ZERO
        if self.den.is_one() and self.num.is_monomial():
            ((a, b), c), = self.num.terms.items()
            if a == 0 and b == 0:
                return c
        raise ValueError(f"not a constant: {self!r}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "FieldElem") -> "FieldElem":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return normalize_fraction(self.num + other.num, self.den)
        return normalize_fraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return self + (-other)

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.num, self.den, _normalized=True)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        if self.is_zero() or other.is_zero():
            return FieldElem.zero()
        if self.den.is_one() and other.den.is_one():
            return FieldElem(self.num * other.num, self.den, _normalized=True)
        return normalize_fraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        if other.is_zero():
            raise ZeroDivisionError("division by zero field element")
        if self.is_zero():
            return FieldElem.zero()
        return normalize_fraction(self.num * other.den, self.den * other.num)

    def inverse(self) -> "FieldElem":
        return FieldElem.one() / self

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = FieldElem.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "FieldElem":
        c = _as_rat(c)
        if not c:
            return FieldElem.zero()
        return FieldElem(self.num.scale(c), self.den, _normalized=True)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElem)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "FieldElem":
        return normalize_fraction(
            LaurentRS.from_json(data["num"]), LaurentRS.from_json(data["den"])
        )


def normalize_fraction(num: LaurentRS, den: LaurentRS) -> FieldElem:
    """Canonical form of num/den; raises ZeroDivisionError on zero denominator."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return FieldElem.zero()

    if den.is_monomial():
        ((da, db), dc), = den.terms.items()
        res = LaurentRS.__new__(LaurentRS)
        res.terms = {(a - da, b - db): c / dc for (a, b), c in num.terms.items()}
        return FieldElem(res, LaurentRS.one(), _normalized=True)

    exps = [e for k in num.terms for e in k] + [e for k in den.terms for e in k]
    scale = lcm(*(e.denominator for e in exps))

    def integerize(p: LaurentRS):
        ints = {(int(a * scale), int(b * scale)): c for (a, b), c in p.terms.items()}
        mu = min(e[0] for e in ints)
        mv = min(e[1] for e in ints)
        return {(a - mu, b - mv): c for (a, b), c in ints.items()}, (mu, mv)

    inum, (nu, nv) = integerize(num)
    iden, (du, dv) = integerize(den)

    if len(inum) > 1:  # monomial numerator needs no polynomial gcd
        g = poly_gcd(inum, iden)
        if len(g) > 1 or _leading(g) != (0, 0):
            inum = _ipoly_div_exact(inum, g)
            iden = _ipoly_div_exact(iden, g)

    lead = iden[_leading(iden)]
    shift_u = Fraction(nu - du, scale)
    shift_v = Fraction(nv - dv, scale)
    new_num = LaurentRS(
        {
            (Fraction(a, scale) + shift_u, Fraction(b, scale) + shift_v): c / lead
            for (a, b), c in inum.items()
        }
    )
    new_den = LaurentRS(
        {(Fraction(a, scale), Fraction(b, scale)): c / lead for (a, b), c in iden.items()}
    )
    return FieldElem(new_num, new_den, _normalized=True)


def field_arithmetic(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """Dispatch add/sub/mul/div on normalized field elements."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def evaluate_at_point(x: FieldElem, r0: Fraction, s0: Fraction) -> Fraction:
    """Exact rational value of x at (r0, s0).

    Requires r0, s0 > 0 and r0 != s0 so that generic-parameter denominators
    like s - r cannot vanish silently; any fractional exponent must have an
    exact rational root at the point, otherwise ValueError is raised.  A pole
    raises ZeroDivisionError.
    """
    r0, s0 = _as_rat(r0), _as_rat(s0)
    if r0 <= 0 or s0 <= 0:
        raise ValueError("evaluation point must be positive")
    if r0 == s0:
        raise ValueError("evaluation point must have r0 != s0")
    den_val = x.den.evaluate(r0, s0)
    if den_val == 0:
        raise ZeroDivisionError(f"pole at ({r0}, {s0})")
    return x.num.evaluate(r0, s0) / den_val
