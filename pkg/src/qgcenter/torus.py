"""Torus algebra elements and the characters evaluated on them.

A torus monomial is a pair (eta, phi) standing for the group-like product
w'_eta w_phi; U0Element is a finitely supported FieldElem-combination of such
monomials, keyed by omega-coordinate tuples.  FlatElement is the diagonal
subalgebra spanned by w'_eta w_{-eta}, keyed by eta alone; it carries the Weyl
action and is where every Harish-Chandra image lives.

All character evaluations come out as single Laurent monomials; this is
asserted at the representation level because it is the first thing a
coordinate-conversion bug breaks.
"""

from __future__ import annotations

from fractions import Fraction

from .euler import EulerData
from .field import FieldElem, LaurentRS
from .roots import RootSystem, Weight

_ZERO = Fraction(0)


def _assert_exponent_scale(ed: EulerData, e: Fraction) -> Fraction:
    m2 = ed.rs.det_cartan**2
    if (e * m2).denominator != 1:
        raise AssertionError(
            f"exponent {e} has denominator not dividing m^2 = {m2}"
        )
    return e


def rho_eval(ed: EulerData, lam: Weight, eta: Weight, phi: Weight) -> LaurentRS:
    """The character value rho^lam(w'_eta w_phi) as a single monomial.

    In alpha-coordinates: r^(lam^T (R^T phi + S^T eta)) s^(lam^T (S^T phi + R^T eta)).
    """
    n = ed.rs.rank
    r_exp = _ZERO
    s_exp = _ZERO
    for k in range(n):
        lk = lam.alpha[k]
        if not lk:
            continue
        rt_phi = sum((ed.r_mat[j][k] * phi.alpha[j] for j in range(n)), _ZERO)
        st_eta = sum((ed.s_mat[j][k] * eta.alpha[j] for j in range(n)), _ZERO)
        st_phi = sum((ed.s_mat[j][k] * phi.alpha[j] for j in range(n)), _ZERO)
        rt_eta = sum((ed.r_mat[j][k] * eta.alpha[j] for j in range(n)), _ZERO)
        r_exp += lk * (rt_phi + st_eta)
        s_exp += lk * (st_phi + rt_eta)
    _assert_exponent_scale(ed, r_exp)
    _assert_exponent_scale(ed, s_exp)
    out = LaurentRS.monomial(1, r_exp, s_exp)
    assert len(out.terms) == 1
    return out


def rho_pair_eval(
    ed: EulerData, lam: Weight, mu: Weight, eta: Weight, phi: Weight
) -> LaurentRS:
    """rho^(lam,mu)(w'_eta w_phi) = rho^lam(...) * (r s^-1)^((eta+phi, mu))."""
    base = rho_eval(ed, lam, eta, phi)
    t = ed.rs.inner(eta + phi, mu)
    _assert_exponent_scale(ed, t)
    return base * LaurentRS.monomial(1, t, -t)


def omega_pairing(ed: EulerData, lam1: Weight, lam2: Weight) -> LaurentRS:
    """Hopf pairing of group-likes: <w'_lam1, w_lam2> = r^<lam1,lam2> s^-<lam2,lam1>."""
    a = _assert_exponent_scale(ed, ed.euler_pair(lam1, lam2))
    b = _assert_exponent_scale(ed, ed.euler_pair(lam2, lam1))
    return LaurentRS.monomial(1, a, -b)


def chi_eval(ed: EulerData, key, probe) -> LaurentRS:
    """chi_{eta,phi}(eta',phi') = <w'_eta, w_phi'> <w'_eta', w_phi>."""
    eta, phi = key
    eta2, phi2 = probe
    return omega_pairing(ed, eta, phi2) * omega_pairing(ed, eta2, phi)


class U0Element:
    """FieldElem-combination of torus monomials w'_eta w_phi.

    Keys are pairs of omega-coordinate tuples.  form is "root" (keys must lie
    in Q x Q) or "weight" (keys in the full weight lattice).
    """

    __slots__ = ("rs", "terms", "form")

    def __init__(self, rs: RootSystem, terms=None, form: str = "weight"):
        if form not in ("root", "weight"):
            raise ValueError("form must be 'root' or 'weight'")
        self.rs = rs
        self.form = form
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, FieldElem):
                    c = FieldElem.const(c)
                if c.is_zero():
                    continue
                self.terms[key] = c
        if form == "root":
            for eta_key, phi_key in self.terms:
                eta = rs.weight_from_omega(eta_key)
                phi = rs.weight_from_omega(phi_key)
                if not (eta.in_root_lattice() and phi.in_root_lattice()):
                    raise ValueError("root-lattice form requires keys in Q x Q")

    @classmethod
    def monomial(cls, rs, eta: Weight, phi: Weight, coef=1, form="weight"):
        return cls(rs, {(eta.omega, phi.omega): coef}, form=form)

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __add__(self, other: "U0Element") -> "U0Element":
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, FieldElem.zero()) + c
            if acc.is_zero():
                out.pop(k, None)
            else:
                out[k] = acc
        res = U0Element(self.rs, form=self.form)
        res.terms = out
        return res

    def scale(self, c: FieldElem) -> "U0Element":
        res = U0Element(self.rs, form=self.form)
        if not c.is_zero():
            res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    def __mul__(self, other: "U0Element") -> "U0Element":
        out: dict = {}
        for (e1, p1), c1 in self.terms.items():
            for (e2, p2), c2 in other.terms.items():
                k = (
                    tuple(a + b for a, b in zip(e1, e2)),
                    tuple(a + b for a, b in zip(p1, p2)),
                )
                acc = out.get(k, FieldElem.zero()) + c1 * c2
                if acc.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = acc
        res = U0Element(self.rs, form=self.form)
        res.terms = out
        return res

    def __eq__(self, other):
        return (
            isinstance(other, U0Element)
            and (self.rs.type_tag, self.rs.rank) == (other.rs.type_tag, other.rs.rank)
            and self.form == other.form
            and self.terms == other.terms
        )

    def evaluate(self, ed: EulerData, lam: Weight, mu: Weight | None = None) -> FieldElem:
        """Apply the character rho^lam (or rho^(lam,mu)) term by term."""
        total = FieldElem.zero()
        for (eta_key, phi_key), c in self.terms.items():
            eta = self.rs.weight_from_omega(eta_key)
            phi = self.rs.weight_from_omega(phi_key)
            if mu is None:
                mono = rho_eval(ed, lam, eta, phi)
            else:
                mono = rho_pair_eval(ed, lam, mu, eta, phi)
            total = total + c * FieldElem.from_laurent(mono)
        return total


def gamma_rho_twist(ed: EulerData, x: U0Element, inverse: bool = False) -> U0Element:
    """The twist gamma^(-rho): each w'_eta w_phi scaled by rho^(-rho)(w'_eta w_phi).

    With inverse=True the scaling uses +rho, undoing the twist exactly.
    """
    lam = ed.rs.rho if inverse else -ed.rs.rho
    out = U0Element(x.rs, form=x.form)
    terms = {}
    for (eta_key, phi_key), c in x.terms.items():
        eta = x.rs.weight_from_omega(eta_key)
        phi = x.rs.weight_from_omega(phi_key)
        mono = rho_eval(ed, lam, eta, phi)
        terms[(eta_key, phi_key)] = c * FieldElem.from_laurent(mono)
    out.terms = terms
    return out


class FlatElement:
    """Element of the flat subalgebra: sum of c_eta * w'_eta w_{-eta}."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms=None):
        self.rs = rs
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, FieldElem):
                    c = FieldElem.const(c)
                if not c.is_zero():
                    self.terms[key] = c

    @classmethod
    def unit(cls, rs: RootSystem) -> "FlatElement":
        return cls(rs, {rs.zero.omega: 1})

    @classmethod
    def basis_term(cls, rs: RootSystem, eta: Weight, coef=1) -> "FlatElement":
        return cls(rs, {eta.omega: coef})

    def is_zero(self) -> bool:
        return not self.terms

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def support(self):
        return [self.rs.weight_from_omega(k) for k, _ in self.items_sorted()]

    def coeff(self, eta: Weight) -> FieldElem:
        return self.terms.get(eta.omega, FieldElem.zero())

    def __add__(self, other: "FlatElement") -> "FlatElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, FieldElem.zero()) + c
            if acc.is_zero():
                out.pop(k, None)
            else:
                out[k] = acc
        res = FlatElement(self.rs)
        res.terms = out
        return res

    def __sub__(self, other: "FlatElement") -> "FlatElement":
        return self + other.scale(FieldElem.const(-1))

    def scale(self, c: FieldElem) -> "FlatElement":
        if not isinstance(c, FieldElem):
            c = FieldElem.const(c)
        res = FlatElement(self.rs)
        if not c.is_zero():
            res.terms = {k: v * c for k, v in self.terms.items()}
        return res

    def __mul__(self, other: "FlatElement") -> "FlatElement":
        """Convolution: (w'_a w_-a)(w'_b w_-b) = w'_{a+b} w_{-(a+b)}."""
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                acc = out.get(k, FieldElem.zero()) + c1 * c2
                if acc.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = acc
        res = FlatElement(self.rs)
        res.terms = out
        return res

    def __eq__(self, other):
        return (
            isinstance(other, FlatElement)
            and (self.rs.type_tag, self.rs.rank) == (other.rs.type_tag, other.rs.rank)
            and self.terms == other.terms
        )

    def to_u0(self, form: str = "weight") -> U0Element:
        """Embed via eta -> (eta, -eta)."""
        out = U0Element(self.rs, form=form)
        out.terms = {
            (k, tuple(-a for a in k)): c for k, c in self.terms.items()
        }
        return out

    def to_json(self) -> list:
        from .field import rat_to_str

        return [
            {"eta_omega_coords": [rat_to_str(a) for a in k], "coef": c.to_json()}
            for k, c in self.items_sorted()
        ]

    @classmethod
    def from_json(cls, rs: RootSystem, data: list) -> "FlatElement":
        return cls(
            rs,
            {
                tuple(Fraction(a) for a in item["eta_omega_coords"]): FieldElem.from_json(
                    item["coef"]
                )
                for item in data
            },
        )

    def __repr__(self):
        bits = [f"{c!r}*e[{','.join(str(a) for a in k)}]" for k, c in self.items_sorted()]
        return " + ".join(bits) if bits else "0"


def weyl_act_flat(rs: RootSystem, word, x: FlatElement) -> FlatElement:
    """Transport coefficients along eta -> sigma(eta) for sigma given by word."""
    out = FlatElement(rs)
    terms = {}
    for k, c in x.terms.items():
        w = rs.apply_word(word, rs.weight_from_omega(k))
        terms[w.omega] = c
    out.terms = terms
    return out


def invariance_witness(rs: RootSystem, x: FlatElement):
    """None if x is W-invariant, else the index of a violating simple reflection."""
    for i in range(1, rs.rank + 1):
        if weyl_act_flat(rs, [i], x) != x:
            return i
    return None
