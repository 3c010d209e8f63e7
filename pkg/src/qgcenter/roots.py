"""Root systems, Weyl groups, weight lattices, and the dominance order.

All simple types A-G at the ranks where they exist.  Conventions follow the
usual Bourbaki numbering; the Cartan matrix is c_ij = 2(a_i, a_j)/(a_i, a_i),
fundamental weights are the columns of its inverse in simple-root coordinates,
so omega-coordinates and alpha-coordinates of a weight are related by
omega = C . alpha.

Simple-reflection indices in the public API are 1-based throughout (words are
lists like [1, 2, 1]); weights carry both coordinate systems eagerly as exact
Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .linalg import int_det

_ZERO = Fraction(0)

VALID_RANKS = {
    "A": range(1, 100),
    "B": range(2, 100),
    "C": range(2, 100),
    "D": range(3, 100),
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}

# number of positive roots, for construction-time sanity checks
_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_WEYL_ORDERS = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def cartan_matrix(type_tag: str, rank: int) -> list[list[int]]:
    n = rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, cij=-1, cji=-1):  # 0-based
        c[i][j] = cij
        c[j][i] = cji

    if type_tag in ("A", "B", "C", "D"):
        chain = n - 1 if type_tag in ("A",) else n - 2
        for i in range(chain):
            edge(i, i + 1)
        if type_tag == "B" and n >= 2:
            edge(n - 2, n - 1, -1, -2)
        elif type_tag == "C" and n >= 2:
            edge(n - 2, n - 1, -2, -1)
        elif type_tag == "D":
            if n == 3:
                edge(0, 1)
                edge(0, 2)
            else:
                edge(n - 3, n - 2)
                edge(n - 3, n - 1)
    elif type_tag == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)):
            if i < n and j < n:
                edge(i, j)
        edge(1, 3)
    elif type_tag == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
    elif type_tag == "G":
        edge(0, 1, -3, -1)
    return c


def symmetrizers(type_tag: str, rank: int) -> list[int]:
    """d_i = (a_i, a_i)/ell: 1 on short/simply-laced roots, larger on long ones."""
    n = rank
    if type_tag == "B":
        return [2] * (n - 1) + [1]
    if type_tag == "C":
        return [1] * (n - 1) + [2]
    if type_tag == "F":
        return [2, 2, 1, 1]
    if type_tag == "G":
        return [1, 3]
    return [1] * n


def length_scale(type_tag: str) -> int:
    """ell: 1 for types B and F, 2 otherwise."""
    return 1 if type_tag in ("B", "F") else 2


def _mat_inverse(c: list[list[int]]) -> list[list[Fraction]]:
    n = len(c)
    aug = [[Fraction(c[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class Weight:
    """Lattice/rational weight carrying both coordinate systems.

    omega: coordinates in the fundamental-weight basis.
    alpha: coordinates in the simple-root basis (omega = C . alpha).
    """

    __slots__ = ("omega", "alpha")

    def __init__(self, omega, alpha):
        self.omega = tuple(omega)
        self.alpha = tuple(alpha)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.omega == other.omega

    def __hash__(self):
        return hash(self.omega)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.omega, other.omega)),
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a - b for a, b in zip(self.omega, other.omega)),
            tuple(a - b for a, b in zip(self.alpha, other.alpha)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.omega), tuple(-a for a in self.alpha))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.omega), tuple(c * a for a in self.alpha))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.omega)

    def in_weight_lattice(self) -> bool:
        return all(a.denominator == 1 for a in self.omega)

    def in_root_lattice(self) -> bool:
        return all(a.denominator == 1 for a in self.alpha)

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.omega)

    def height(self) -> Fraction:
        """Sum of alpha-coordinates."""
        return sum(self.alpha, _ZERO)

    def __repr__(self):
        return f"Weight(omega={[str(a) for a in self.omega]})"


class RootSystem:
    """Immutable root-system data for one (type, rank)."""

    def __init__(self, type_tag: str, rank: int):
        if type_tag not in VALID_RANKS or rank not in VALID_RANKS[type_tag]:
            raise ValueError(f"invalid type/rank: {type_tag}{rank}")
        self.type_tag = type_tag
        self.rank = rank
        self.cartan = tuple(tuple(row) for row in cartan_matrix(type_tag, rank))
        self.d = tuple(symmetrizers(type_tag, rank))
        self.ell = length_scale(type_tag)
        self.inverse_cartan = tuple(
            tuple(row) for row in _mat_inverse([list(r) for r in self.cartan])
        )
        self.det_cartan = int_det([list(r) for r in self.cartan])
        if self.det_cartan <= 0:
            raise AssertionError("Cartan determinant must be positive")
        # symmetrized matrix (d_i c_ij); inner product is (ell/2) * alpha^T (DC) alpha
        self.sym = tuple(
            tuple(self.d[i] * self.cartan[i][j] for j in range(rank)) for i in range(rank)
        )
        for i in range(rank):
            for j in range(rank):
                assert self.sym[i][j] == self.sym[j][i], "DC must be symmetric"

        self.zero = self.weight_from_alpha([0] * rank)
        self.fundamental = [
            self.weight_from_omega([int(i == k) for k in range(rank)]) for i in range(rank)
        ]
        self.positive_roots = self._positive_roots()
        expected = _POSITIVE_COUNTS[type_tag](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"positive root count {len(self.positive_roots)} != {expected}"
            )
        half_sum = self.zero
        for beta in self.positive_roots:
            half_sum = half_sum + beta
        half_sum = half_sum.scale(Fraction(1, 2))
        rho = self.zero
        for w in self.fundamental:
            rho = rho + w
        if rho != half_sum:
            raise AssertionError("rho mismatch: sum of fundamentals != half positive sum")
        self.rho = rho

    # -- constructors --------------------------------------------------------

    def weight_from_omega(self, coords) -> Weight:
        w = [Fraction(x) for x in coords]
        if len(w) != self.rank:
            raise ValueError("coordinate length != rank")
        a = [
            sum((self.inverse_cartan[k][i] * w[i] for i in range(self.rank)), _ZERO)
            for k in range(self.rank)
        ]
        return Weight(w, a)

    def weight_from_alpha(self, coords) -> Weight:
        a = [Fraction(x) for x in coords]
        if len(a) != self.rank:
            raise ValueError("coordinate length != rank")
        w = [
            sum((self.cartan[i][k] * a[k] for k in range(self.rank)), _ZERO)
            for i in range(self.rank)
        ]
        return Weight(w, a)

    def simple_root(self, i: int) -> Weight:
        """alpha_i, 1-based."""
        return self.weight_from_alpha([int(k == i - 1) for k in range(self.rank)])

    # -- bilinear form -------------------------------------------------------

    def inner(self, x: Weight, y: Weight) -> Fraction:
        """(x, y), normalized so (a_i, a_i) = ell * d_i."""
        total = _ZERO
        for i in range(self.rank):
            if not x.alpha[i]:
                continue
            for j in range(self.rank):
                if y.alpha[j]:
                    total += x.alpha[i] * self.sym[i][j] * y.alpha[j]
        return total * Fraction(self.ell, 2)

    def coroot_pairing(self, x: Weight, i: int) -> Fraction:
        """(x, alpha_i^vee) = i-th omega-coordinate (i 1-based)."""
        return x.omega[i - 1]

    # -- Weyl group ----------------------------------------------------------

    def reflect(self, i: int, w: Weight) -> Weight:
        """Simple reflection sigma_i (1-based): w - (w, alpha_i^vee) alpha_i."""
        c = w.omega[i - 1]
        if not c:
            return w
        i0 = i - 1
        # omega-coordinates of alpha_i form column i0 of the Cartan matrix
        omega = tuple(
            w.omega[k] - c * self.cartan[k][i0] for k in range(self.rank)
        )
        alpha = tuple(
            w.alpha[k] - (c if k == i0 else 0) for k in range(self.rank)
        )
        return Weight(omega, alpha)

    def apply_word(self, word, w: Weight) -> Weight:
        """Apply sigma_{word[0]}, then sigma_{word[1]}, ... to w."""
        for i in word:
            w = self.reflect(i, w)
        return w

    def reflection_matrix_alpha(self, i: int) -> list[list[int]]:
        """Matrix of sigma_i on alpha-coordinates: I - e_i (row i of C)."""
        i0 = i - 1
        n = self.rank
        return [
            [int(r == c) - (self.cartan[i0][c] if r == i0 else 0) for c in range(n)]
            for r in range(n)
        ]

    def weyl_orbit(self, w: Weight) -> list[Weight]:
        """Full W-orbit, deterministically sorted by omega-coordinates."""
        seen = {w.omega: w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(1, self.rank + 1):
                    y = self.reflect(i, x)
                    if y.omega not in seen:
                        seen[y.omega] = y
                        nxt.append(y)
            frontier = nxt
        return [seen[k] for k in sorted(seen)]

    def dominant_rep(self, w: Weight):
        """The dominant orbit representative and a word mapping w to it."""
        word = []
        cur = w
        for _ in range(100000):
            neg = next((i for i in range(self.rank) if cur.omega[i] < 0), None)
            if neg is None:
                return cur, word
            word.append(neg + 1)
            cur = self.reflect(neg + 1, cur)
        raise AssertionError("dominant_rep failed to terminate")

    def weyl_order(self) -> int:
        return _WEYL_ORDERS[self.type_tag](self.rank)

    # -- dominance -----------------------------------------------------------

    def dominance_leq(self, mu: Weight, lam: Weight) -> bool:
        """mu <= lam iff lam - mu is a nonnegative integer sum of simple roots."""
        return all(c.denominator == 1 and c >= 0 for c in (lam - mu).alpha)

    # -- construction helpers --------------------------------------------------

    def _positive_roots(self) -> list[Weight]:
        simples = [self.simple_root(i) for i in range(1, self.rank + 1)]
        seen = {w.omega: w for w in simples}
        frontier = simples[:]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(1, self.rank + 1):
                    y = self.reflect(i, x)
                    if y.omega not in seen:
                        seen[y.omega] = y
                        nxt.append(y)
            frontier = nxt
        pos = [w for w in seen.values() if all(c >= 0 for c in w.alpha)]
        pos.sort(key=lambda w: (w.height(), w.alpha))
        return pos

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        from .field import rat_to_str

        return {
            "type": self.type_tag,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "symmetrizers": list(self.d),
            "ell": self.ell,
            "positive_roots": [
                [rat_to_str(c) for c in w.alpha] for w in self.positive_roots
            ],
            "rho_alpha": [rat_to_str(c) for c in self.rho.alpha],
        }

    def __repr__(self):
        return f"RootSystem({self.type_tag}{self.rank})"


def build_root_system(type_tag: str, rank: int) -> RootSystem:
    return RootSystem(type_tag, rank)
