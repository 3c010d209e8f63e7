"""Weight multiplicities of the finite-dimensional simple modules.

Multiplicities are computed classically (Freudenthal's recursion); the
two-parameter weight modules have the same dimensions whenever r s^-1 is
generic, which is exactly the regime this toolkit works in.  Two independent
oracles are provided for cross-checks: Kostant's alternating-sum formula
(small rank, full Weyl group enumeration) and the Weyl dimension product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .roots import RootSystem, Weight

_ZERO = Fraction(0)


class MultTable:
    """Multiplicities dim L(lam)_mu for dominant mu <= lam, orbit-extended."""

    def __init__(self, rs: RootSystem, lam: Weight, dominant: dict):
        self.rs = rs
        self.lam = lam
        self.dominant = dict(dominant)  # omega tuple -> positive int

    def mult(self, mu: Weight) -> int:
        """Multiplicity at any weight, via its dominant representative."""
        dom, _ = self.rs.dominant_rep(mu)
        return self.dominant.get(dom.omega, 0)

    def dominant_items(self):
        return sorted(self.dominant.items())

    def all_weights(self):
        """Every weight of the module with its multiplicity, orbit-extended."""
        out = []
        for key, m in self.dominant_items():
            for w in self.rs.weyl_orbit(self.rs.weight_from_omega(key)):
                out.append((w, m))
        out.sort(key=lambda pair: pair[0].omega)
        return out

    def dimension(self) -> int:
        total = 0
        for key, m in self.dominant.items():
            total += m * len(self.rs.weyl_orbit(self.rs.weight_from_omega(key)))
        return total

    def to_json(self) -> dict:
        return {
            "type": self.rs.type_tag,
            "rank": self.rs.rank,
            "lambda": [int(x) for x in self.lam.omega],
            "mults": [
                {"mu": [str(x) for x in key], "m": m}
                for key, m in self.dominant_items()
            ],
        }

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "MultTable":
        lam = rs.weight_from_omega(data["lambda"])
        dominant = {
            tuple(Fraction(x) for x in item["mu"]): item["m"] for item in data["mults"]
        }
        return cls(rs, lam, dominant)


def _require_dominant_integral(lam: Weight):
    if not (lam.is_dominant() and lam.in_weight_lattice()):
        raise ValueError(f"weight must be dominant integral, got {lam!r}")


def module_weight_set(rs: RootSystem, lam: Weight, height_limit=None) -> set:
    """Omega-coordinate keys of all weights of L(lam).

    Downward closure from lam by simple-root subtraction, keeping weights whose
    dominant representative stays <= lam (weight-diagram saturation).
    """
    seen = {lam.omega}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, rs.rank + 1):
                cand = w - rs.simple_root(i)
                if cand.omega in seen:
                    continue
                if height_limit is not None and (lam - cand).height() > height_limit:
                    continue
                dom, _ = rs.dominant_rep(cand)
                if rs.dominance_leq(dom, lam):
                    seen.add(cand.omega)
                    nxt.append(cand)
        frontier = nxt
    return seen


def freudenthal(rs: RootSystem, lam: Weight, height_limit=None) -> MultTable:
    """Full multiplicity table of the simple module with highest weight lam."""
    _require_dominant_integral(lam)
    weights = module_weight_set(rs, lam, height_limit)
    dominants = [
        rs.weight_from_omega(k)
        for k in weights
        if all(x >= 0 for x in k)
    ]
    dominants.sort(key=lambda w: ((lam - w).height(), w.omega))
    rho = rs.rho
    lam_norm = rs.inner(lam + rho, lam + rho)
    mults: dict = {lam.omega: 1}
    for mu in dominants:
        if mu == lam:
            continue
        acc = _ZERO
        for alpha in rs.positive_roots:
            k = 1
            while True:
                nu = mu + alpha.scale(k)
                if nu.omega not in weights:
                    break
                dom, _ = rs.dominant_rep(nu)
                m = mults.get(dom.omega)
                if m is None:
                    raise AssertionError("Freudenthal level ordering violated")
                acc += 2 * m * rs.inner(nu, alpha)
                k += 1
        denom = lam_norm - rs.inner(mu + rho, mu + rho)
        if denom == 0:
            raise AssertionError("vanishing Freudenthal denominator below lam")
        val = acc / denom
        if val.denominator != 1 or val <= 0:
            raise AssertionError(f"non-positive-integer multiplicity {val}")
        mults[mu.omega] = int(val)
    return MultTable(rs, lam, mults)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

_KOSTANT_MAX_RANK = 3


def enumerate_weyl_group(rs: RootSystem):
    """All Weyl group elements as (alpha-coordinate matrix, sign) pairs.

    Materializes the whole group; guarded to small rank.
    """
    n = rs.rank
    gens = [
        tuple(tuple(row) for row in rs.reflection_matrix_alpha(i))
        for i in range(1, n + 1)
    ]

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for mat in frontier:
            sign = seen[mat]
            for g in gens:
                prod = mul(g, mat)
                if prod not in seen:
                    seen[prod] = -sign
                    nxt.append(prod)
        frontier = nxt
    assert len(seen) == rs.weyl_order()
    return sorted(seen.items())


def _apply_alpha_matrix(rs: RootSystem, mat, w: Weight) -> Weight:
    n = rs.rank
    coords = [
        sum((Fraction(mat[i][k]) * w.alpha[k] for k in range(n)), _ZERO)
        for i in range(n)
    ]
    return rs.weight_from_alpha(coords)


def kostant_partition_count(rs: RootSystem, beta: Weight) -> int:
    """Number of ways to write beta as a multiset of positive roots."""
    coords = tuple(beta.alpha)
    if any(c.denominator != 1 or c < 0 for c in coords):
        return 0
    roots = [tuple(int(x) for x in a.alpha) for a in rs.positive_roots]

    @lru_cache(maxsize=None)
    def count(rem: tuple, idx: int) -> int:
        if all(c == 0 for c in rem):
            return 1
        if idx == len(roots):
            return 0
        root = roots[idx]
        total = 0
        cur = rem
        while True:
            total += count(cur, idx + 1)
            nxt = tuple(c - d for c, d in zip(cur, root))
            if any(c < 0 for c in nxt):
                break
            cur = nxt
        return total

    return count(tuple(int(c) for c in coords), 0)


def kostant_mult(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Kostant's formula: sum over W of signed partition counts."""
    if rs.rank > _KOSTANT_MAX_RANK:
        raise ValueError(
            f"kostant_mult oracle limited to rank <= {_KOSTANT_MAX_RANK}"
        )
    _require_dominant_integral(lam)
    rho = rs.rho
    total = 0
    for mat, sign in enumerate_weyl_group(rs):
        arg = _apply_alpha_matrix(rs, mat, lam + rho) - (mu + rho)
        total += sign * kostant_partition_count(rs, arg)
    return total


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula, as an exact integer."""
    _require_dominant_integral(lam)
    rho = rs.rho
    out = Fraction(1)
    for alpha in rs.positive_roots:
        out *= rs.inner(lam + rho, alpha) / rs.inner(rho, alpha)
    assert out.denominator == 1
    return int(out)


def dominant_box(rs: RootSystem, max_height: Fraction):
    """All dominant integral weights with height(lam) <= max_height, sorted."""
    out = []
    bound = int(max_height) + 1
    coords = [0] * rs.rank

    def rec(i):
        if i == rs.rank:
            w = rs.weight_from_omega(list(coords))
            if w.height() <= max_height:
                out.append(w)
            return
        for c in range(bound * 3 + 1):
            coords[i] = c
            # heights are monotone in each coordinate; prune early
            w_partial = rs.weight_from_omega(
                [coords[k] if k <= i else 0 for k in range(rs.rank)]
            )
            if w_partial.height() > max_height:
                break
            rec(i + 1)
        coords[i] = 0

    rec(0)
    out.sort(key=lambda w: (w.height(), w.omega))
    return out
