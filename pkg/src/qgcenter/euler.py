"""The Euler bilinear form and the structure-constant matrices.

The Euler form on the root lattice is upper-triangular against the node
ordering: <i,j> = d_i c_ij for i < j, d_i on the diagonal, 0 for i > j, with
the type-D revision <n-1,n> = -1, <n,n-1> = +1 on the two fork nodes.  The two
integer matrices derived from it,

    R_ij = <j,i>,   S_ij = -<i,j>,

satisfy R = -S^T and R - S = DC (the symmetrized Cartan matrix), and govern
the structure constants a_ij = r^(R_ij) s^(S_ij).  R + S is antisymmetric; its
invertibility at even rank is what the injectivity arguments lean on, so exact
determinants and kernels of both combinations are exposed here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .field import LaurentRS
from .linalg import int_det, kernel_basis
from .roots import RootSystem, Weight

_ZERO = Fraction(0)
_ONE = Fraction(1)


class EulerData:
    """Euler-form tables for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        e = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i < j:
                    e[i][j] = rs.d[i] * rs.cartan[i][j]
                elif i == j:
                    e[i][j] = rs.d[i]
        if rs.type_tag == "D":
            e[n - 2][n - 1] = -1
            e[n - 1][n - 2] = 1
        self.euler = tuple(tuple(row) for row in e)
        self.r_mat = tuple(tuple(e[j][i] for j in range(n)) for i in range(n))
        self.s_mat = tuple(tuple(-e[i][j] for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if self.r_mat[i][j] - self.s_mat[i][j] != rs.sym[i][j]:
                    raise AssertionError("R - S != DC")
                if self.r_mat[i][j] != -self.s_mat[j][i]:
                    raise AssertionError("R != -S^T")

    # -- pairing --------------------------------------------------------------

    def euler_pair(self, x: Weight, y: Weight) -> Fraction:
        """Bilinear extension of <i,j> to the weight lattice (alpha-coordinates)."""
        n = self.rs.rank
        total = _ZERO
        for i in range(n):
            if not x.alpha[i]:
                continue
            for j in range(n):
                if self.euler[i][j] and y.alpha[j]:
                    total += x.alpha[i] * self.euler[i][j] * y.alpha[j]
        return total

    def structure_constant(self, i: int, j: int) -> LaurentRS:
        """a_ij = r^(R_ij) s^(S_ij), 1-based indices."""
        n = self.rs.rank
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"index out of range: ({i}, {j})")
        return LaurentRS.monomial(1, self.r_mat[i - 1][j - 1], self.s_mat[i - 1][j - 1])

    def structure_matrix(self) -> list[list[LaurentRS]]:
        n = self.rs.rank
        return [
            [self.structure_constant(i, j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]

    # -- determinants and kernels ----------------------------------------------

    def combination(self, which: str) -> list[list[int]]:
        n = self.rs.rank
        if which == "R_minus_S":
            return [[self.r_mat[i][j] - self.s_mat[i][j] for j in range(n)] for i in range(n)]
        if which == "R_plus_S":
            return [[self.r_mat[i][j] + self.s_mat[i][j] for j in range(n)] for i in range(n)]
        raise ValueError(f"unknown combination {which!r}")

    def det_and_kernel(self, which: str):
        """(exact determinant, kernel basis) of R-S or R+S.

        Kernel vectors are integer, primitive, first nonzero entry positive,
        sorted; they are alpha-coordinate column vectors.
        """
        m = self.combination(which)
        det = int_det(m)
        if det != 0:
            return det, []
        frac_rows = [[Fraction(x) for x in row] for row in m]
        basis = kernel_basis(frac_rows, _ZERO, _ONE)
        out = []
        for vec in basis:
            den = 1
            for x in vec:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in vec]
            g = 0
            for x in ints:
                g = gcd(g, x)
            ints = [x // g for x in ints]
            lead = next(x for x in ints if x)
            if lead < 0:
                ints = [-x for x in ints]
            out.append(ints)
        out.sort()
        return 0, out

    def to_json(self) -> dict:
        det_ms, ker_ms = self.det_and_kernel("R_minus_S")
        det_ps, ker_ps = self.det_and_kernel("R_plus_S")
        return {
            "type": self.rs.type_tag,
            "rank": self.rs.rank,
            "detRminusS": det_ms,
            "detRplusS": det_ps,
            "kernel": ker_ps,
            "R": [list(r) for r in self.r_mat],
            "S": [list(r) for r in self.s_mat],
        }


def build_euler(type_tag: str, rank: int) -> EulerData:
    return EulerData(RootSystem(type_tag, rank))
