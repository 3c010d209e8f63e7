"""Harish-Chandra images, the orbit-sum basis, and the Grothendieck ring.

The image of the canonical central element attached to a dominant integral
weight lam is the W-invariant flat element

    sum_{mu <= lam} dim L(lam)_mu  .  w'_mu w_{-mu},

with unit coefficient at lam.  Orbit sums (one coefficient-1 term per orbit
element) are the computational basis of the invariants; the change of basis
against the images is unitriangular for the dominance-then-height elimination
order used here, which is what makes every expansion below terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError
from .field import FieldElem
from .mults import freudenthal
from .roots import RootSystem, Weight
from .torus import FlatElement, invariance_witness

_TABLE_MEMO: dict = {}
_POLY_MEMO: dict = {}


def _mult_table(rs: RootSystem, lam: Weight):
    key = (rs.type_tag, rs.rank, lam.omega)
    table = _TABLE_MEMO.get(key)
    if table is None:
        table = freudenthal(rs, lam)
        _TABLE_MEMO[key] = table
    return table


@dataclass
class HCImage:
    lam: Weight
    flat: FlatElement


def _check_form(lam: Weight, form: str):
    if form not in ("root", "weight"):
        raise ValueError("form must be 'root' or 'weight'")
    if not (lam.is_dominant() and lam.in_weight_lattice()):
        raise ValueError(f"weight must be dominant integral: {lam!r}")
    if form == "root" and not lam.in_root_lattice():
        raise ValueError(
            "root-lattice form requires lam in the root lattice (lam in L+ ∩ Q)"
        )


def hc_image(rs: RootSystem, lam: Weight, form: str = "weight") -> HCImage:
    """The canonical W-invariant flat element attached to lam."""
    _check_form(lam, form)
    table = _mult_table(rs, lam)
    flat = FlatElement(rs, {w.omega: m for w, m in table.all_weights()})
    if flat.coeff(lam) != FieldElem.one():
        raise AssertionError("highest-weight coefficient must be 1")
    return HCImage(lam, flat)


def orbit_sum(rs: RootSystem, nu: Weight) -> FlatElement:
    """Sum over the W-orbit of nu, every element with coefficient exactly 1."""
    if not nu.is_dominant():
        raise ValueError("orbit_sum takes the dominant representative")
    return FlatElement(rs, {w.omega: 1 for w in rs.weyl_orbit(nu)})


def _max_dominant_key(rs: RootSystem, x: FlatElement) -> Weight | None:
    """Largest dominant support key under (height, omega-lex)."""
    best = None
    for key in x.terms:
        if all(c >= 0 for c in key):
            w = rs.weight_from_omega(key)
            rank_key = (w.height(), w.omega)
            if best is None or rank_key > best[0]:
                best = (rank_key, w)
    return None if best is None else best[1]


def expand_in_orbit_sums(rs: RootSystem, x: FlatElement) -> dict:
    """Unique expansion of a W-invariant flat element in orbit sums.

    Returns {dominant omega key: FieldElem}; raises on non-invariant input
    with the index of a witness reflection.
    """
    witness = invariance_witness(rs, x)
    if witness is not None:
        raise ValueError(f"not W-invariant: sigma_{witness} moves the element")
    rem = x
    out: dict = {}
    while not rem.is_zero():
        nu = _max_dominant_key(rs, rem)
        if nu is None:
            raise ConsistencyError("invariant element with no dominant key")
        c = rem.coeff(nu)
        out[nu.omega] = c
        rem = rem - orbit_sum(rs, nu).scale(c)
    return out


def express_orbit_sum_in_hc(rs: RootSystem, nu: Weight, form: str = "weight") -> dict:
    """Coefficients c_mu with orbit_sum(nu) = sum c_mu hc_image(mu).

    Unitriangular inversion of the multiplicity matrix by stripping the
    maximal remaining dominant key.
    """
    _check_form(nu, form)
    rem = orbit_sum(rs, nu)
    out: dict = {}
    while not rem.is_zero():
        mu = _max_dominant_key(rs, rem)
        if mu is None:
            raise ConsistencyError("expansion left no dominant key")
        c = rem.coeff(mu)
        out[mu.omega] = c
        rem = rem - hc_image(rs, mu, form).flat.scale(c)
    return out


def expand_in_hc_images(rs: RootSystem, x: FlatElement, form: str = "weight") -> dict:
    """Expansion of a W-invariant flat element against the hc images."""
    witness = invariance_witness(rs, x)
    if witness is not None:
        raise ValueError(f"not W-invariant: sigma_{witness} moves the element")
    rem = x
    out: dict = {}
    while not rem.is_zero():
        mu = _max_dominant_key(rs, rem)
        if mu is None:
            raise ConsistencyError("expansion left no dominant key")
        c = rem.coeff(mu)
        out[mu.omega] = c
        rem = rem - hc_image(rs, mu, form).flat.scale(c)
    return out


def grothendieck_product(rs: RootSystem, lam: Weight, mu: Weight, form: str = "weight") -> dict:
    """Structure constants of hc_image(lam) . hc_image(mu) in the image basis.

    Returns {dominant omega key: nonnegative int}; a negative or non-integer
    coefficient is a ConsistencyError, never silently returned.
    """
    _check_form(lam, form)
    _check_form(mu, form)
    prod = hc_image(rs, lam, form).flat * hc_image(rs, mu, form).flat
    raw = expand_in_hc_images(rs, prod, form)
    out: dict = {}
    for key, c in sorted(raw.items()):
        try:
            val = c.as_rat()
        except ValueError:
            raise ConsistencyError(f"non-constant structure coefficient at {key}")
        if val.denominator != 1 or val < 0:
            raise ConsistencyError(
                f"structure coefficient {val} at {key} is not a nonnegative integer"
            )
        if val:
            out[key] = int(val)
    return out


def poly_express(rs: RootSystem, lam: Weight) -> dict:
    """Integer polynomial P with P(x_1..x_n) -> hc_image(lam) under x_i = hc_image(w_i).

    Returned as {exponent tuple: int}.  Leading-term elimination: subtract the
    monomial matching lam's omega-coordinates and recurse on the
    dominance-smaller remainder.
    """
    _check_form(lam, "weight")
    key = (rs.type_tag, rs.rank, lam.omega)
    memo = _POLY_MEMO.get(key)
    if memo is not None:
        return dict(memo)
    exps = tuple(int(c) for c in lam.omega)
    monom = FlatElement.unit(rs)
    for i, e in enumerate(exps):
        if e:
            monom = monom * _flat_power(rs, i, e)
    diff = monom - hc_image(rs, lam).flat
    poly: dict = {exps: 1}
    if not diff.is_zero():
        rest = expand_in_hc_images(rs, diff)
        for mu_key, c in sorted(rest.items()):
            val = c.as_rat()
            if val.denominator != 1:
                raise ConsistencyError("non-integer coefficient in elimination")
            sub = poly_express(rs, rs.weight_from_omega(mu_key))
            for e, k in sub.items():
                acc = poly.get(e, 0) - int(val) * k
                if acc:
                    poly[e] = acc
                else:
                    poly.pop(e, None)
    _POLY_MEMO[key] = dict(poly)
    return poly


_POWER_MEMO: dict = {}


def _flat_power(rs: RootSystem, i: int, e: int) -> FlatElement:
    key = (rs.type_tag, rs.rank, i, e)
    got = _POWER_MEMO.get(key)
    if got is None:
        if e == 1:
            got = hc_image(rs, rs.fundamental[i]).flat
        else:
            got = _flat_power(rs, i, e - 1) * hc_image(rs, rs.fundamental[i]).flat
        _POWER_MEMO[key] = got
    return got


def poly_evaluate(rs: RootSystem, poly: dict) -> FlatElement:
    """Substitute the fundamental hc images into an exponent-dict polynomial."""
    total = FlatElement(rs)
    for exps, coef in sorted(poly.items()):
        term = FlatElement.unit(rs)
        for i, e in enumerate(exps):
            if e:
                term = term * _flat_power(rs, i, e)
        total = total + term.scale(FieldElem.const(coef))
    return total


def poly_to_json(poly: dict) -> list:
    return [
        {"exponents": list(exps), "coefficient": coef}
        for exps, coef in sorted(poly.items())
    ]


def poly_to_str(poly: dict) -> str:
    """Human-readable polynomial in variables x1..xn, deterministic order."""
    if not poly:
        return "0"
    bits = []
    for exps, coef in sorted(poly.items(), reverse=True):
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e:
                factors.append(f"x{i + 1}^{e}")
        body = "*".join(factors)
        if not body:
            bits.append(f"{coef:+d}")
        elif coef == 1:
            bits.append(f"+{body}")
        elif coef == -1:
            bits.append(f"-{body}")
        else:
            bits.append(f"{coef:+d}*{body}")
    out = " ".join(bits)
    return out[1:] if out.startswith("+") else out
