"""Exact root-system kernel.

Root systems are built from Bourbaki data for the simple types A-G and
finite products thereof.  Roots are integer vectors in the simple-root
basis; weights are rational vectors in the fundamental-weight basis, so
coords[i] is the pairing with the i-th simple coroot.  Everything is exact
(``fractions.Fraction``); no floats anywhere.

Simple roots are numbered 1..rank in all public interfaces.  The Cartan
matrix convention is ``cartan[i][j] = <alpha_j, alpha_i_vee>`` (0-based
internally), so the j-th column of the Cartan matrix is alpha_j written in
fundamental-weight coordinates.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

RootVector = tuple[int, ...]

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}

_SPEC_RE = re.compile(r"^([A-G])([0-9]+)$")


def _simple_cartan(letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix of one simple component, Bourbaki numbering."""
    def chain(n: int) -> list[list[int]]:
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        return a

    if letter == "A" and rank >= 1:
        return chain(rank)
    if letter == "B" and rank >= 2:
        a = chain(rank)
        a[rank - 1][rank - 2] = -2  # alpha_rank is the short root
        return a
    if letter == "C" and rank >= 2:
        a = chain(rank)
        a[rank - 2][rank - 1] = -2  # alpha_rank is the long root
        return a
    if letter == "D" and rank >= 3:
        # chain on 1..rank-1 plus the fork edge (rank-2, rank); D3 = A3
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i in range(rank - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
        return a
    if letter == "E" and rank in (6, 7, 8):
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: rank - 2]
        edges.append((1, 3))  # alpha_2 hangs off alpha_4
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a
    if letter == "F" and rank == 4:
        a = chain(4)
        a[2][1] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        return a
    if letter == "G" and rank == 2:
        return [[2, -3], [-1, 2]]  # alpha_1 short
    raise ValueError(f"invalid simple component {letter}{rank}")


def _positive_closure(cartan: Sequence[Sequence[int]]) -> list[RootVector]:
    """All positive roots, by closing the simple roots under root strings.

    Processing strictly by height: beta + alpha_i is a root iff
    q = p - <beta, alpha_i_vee> >= 1 where p is the number of steps the
    alpha_i-string continues below beta.
    """
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    roots: set[RootVector] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt: list[RootVector] = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in roots:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """d_i with d_i * cartan[i][j] == d_j * cartan[j][i], d = 1 on long...

    Normalization: the first vertex of each connected component gets d = 1;
    the ratios are forced along edges.  Only the ratios matter for pairings.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    stack.append(j)
    return [x if x is not None else Fraction(1) for x in d]


def _invert(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan elimination over Fraction."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _exact(c):
    # ints hash and add an order of magnitude faster than Fraction, and
    # nearly every weight in practice is integral, so only keep Fraction
    # for genuinely fractional entries
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class Weight:
    """A weight in fundamental-weight coordinates, exact rational entries."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        self.coords: tuple[int | Fraction, ...] = tuple(_exact(c) for c in coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        if len(self) != len(other):
            raise ValueError("weight rank mismatch")
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        if len(self) != len(other):
            raise ValueError("weight rank mismatch")
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-c for c in self.coords)

    def __mul__(self, scalar) -> "Weight":
        return Weight(c * Fraction(scalar) for c in self.coords)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_regular_dominant(self) -> bool:
        return all(c > 0 for c in self.coords)

    def __repr__(self) -> str:
        return "Weight(%s)" % ", ".join(str(c) for c in self.coords)


class RootSystem:
    """A reduced root system, possibly a product of simple components."""

    def __init__(self, components: Sequence[tuple[str, int]]) -> None:
        comps = []
        for comp in components:
            try:
                letter, rank = comp
            except (TypeError, ValueError):
                raise ValueError(f"component must be a (letter, rank) pair, got {comp!r}")
            comps.append((str(letter).upper(), int(rank)))
        if not comps:
            raise ValueError("a root system needs at least one component")
        self.components: tuple[tuple[str, int], ...] = tuple(comps)
        self.rank: int = sum(r for _, r in self.components)

        cartan = [[0] * self.rank for _ in range(self.rank)]
        positives: list[RootVector] = []
        spans: list[tuple[int, int]] = []
        offset = 0
        for letter, rank in self.components:
            block = _simple_cartan(letter, rank)
            for i in range(rank):
                for j in range(rank):
                    cartan[offset + i][offset + j] = block[i][j]
            pad = (0,) * offset
            tail = (0,) * (self.rank - offset - rank)
            positives.extend(pad + r + tail for r in _positive_closure(block))
            spans.append((offset, offset + rank))
            offset += rank
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in cartan)
        self.positive_roots: tuple[RootVector, ...] = tuple(
            sorted(positives, key=lambda r: (sum(r), r)))
        self.component_spans: tuple[tuple[int, int], ...] = tuple(spans)
        self.symmetrizer: tuple[Fraction, ...] = tuple(_symmetrizer(self.cartan))
        self._cartan_inv: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._cartan_inv is None:
            self._cartan_inv = _invert(self.cartan)
        return self._cartan_inv

    def spec_string(self) -> str:
        return ",".join(f"{letter}{rank}" for letter, rank in self.components)

    def simple_root(self, i: int) -> RootVector:
        """The i-th simple root (1-based) in root coordinates."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple root index {i} out of range 1..{self.rank}")
        return tuple(int(k == i - 1) for k in range(self.rank))

    def root_coordinates(self, weight: Weight) -> tuple[Fraction, ...]:
        """Expand a weight in the simple-root basis (rational in general)."""
        if len(weight) != self.rank:
            raise ValueError("weight rank mismatch")
        inv = self.cartan_inverse
        return tuple(sum(inv[i][j] * weight.coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"RootSystem({self.spec_string()!r})"


def parse_spec(spec: str) -> list[tuple[str, int]]:
    """Parse a component list such as ``"C2"`` or ``"A3,A3,A3"``."""
    comps = []
    for piece in spec.split(","):
        m = _SPEC_RE.match(piece.strip())
        if not m:
            raise ValueError(f"cannot parse root-system component {piece.strip()!r}")
        comps.append((m.group(1), int(m.group(2))))
    return comps


def build_root_system(spec) -> RootSystem:
    """Build a root system from a spec string or a list of (letter, rank)."""
    if isinstance(spec, str):
        return RootSystem(parse_spec(spec))
    return RootSystem(spec)


def root_to_weight(rs: RootSystem, root: Sequence[int]) -> Weight:
    """A root in root coordinates, rewritten in fundamental coordinates."""
    if len(root) != rs.rank:
        raise ValueError("root rank mismatch")
    return Weight(sum(rs.cartan[i][j] * root[j] for j in range(rs.rank))
                  for i in range(rs.rank))


def cartan_pairing(rs: RootSystem, lam: Weight, root: Sequence[int]) -> Fraction:
    """<lam, beta_vee> for beta given in root coordinates.

    With the symmetrizer d, (lam, beta) = sum_i lam_i c_i d_i up to the global
    form scale, and (beta, beta) = sum_j c_j d_j (A c)_j; the pairing
    2 (lam, beta) / (beta, beta) is scale-free.
    """
    if len(lam) != rs.rank or len(root) != rs.rank:
        raise ValueError("rank mismatch in pairing")
    d = rs.symmetrizer
    numer = 2 * sum(lam.coords[i] * root[i] * d[i] for i in range(rs.rank))
    denom = sum(root[j] * d[j]
                * sum(rs.cartan[j][k] * root[k] for k in range(rs.rank))
                for j in range(rs.rank))
    if denom == 0:
        raise ValueError("pairing against the zero vector")
    return Fraction(numer, 1) / denom


def rho(rs: RootSystem) -> Weight:
    """The half-sum of positive roots: all fundamental coordinates 1."""
    return Weight([1] * rs.rank)


def rho_J(rs: RootSystem, J: Iterable[int]) -> Weight:
    """Sum of the fundamental weights indexed by J (1-based indices)."""
    members = set()
    for j in J:
        if not 1 <= int(j) <= rs.rank:
            raise ValueError(f"index {j} outside 1..{rs.rank}")
        members.add(int(j))
    return Weight([1 if i + 1 in members else 0 for i in range(rs.rank)])


def is_dominant(weight: Weight) -> bool:
    return weight.is_dominant()


def is_regular_dominant(weight: Weight) -> bool:
    return weight.is_regular_dominant()


def subsystem_components(rs: RootSystem, J: Iterable[int]):
    """Classify the Dynkin subdiagram on the vertex set J (1-based).

    Returns a list of (letter, rank, vertices) triples where vertices are
    0-based original indices arranged in Bourbaki order for the detected
    type.  The arrangement is checked against the reference Cartan matrix.
    """
    verts0 = set()
    for j in J:
        if not 1 <= int(j) <= rs.rank:
            raise ValueError(f"index {j} outside 1..{rs.rank}")
        verts0.add(int(j) - 1)
    pieces = []
    seen: set[int] = set()
    for v in sorted(verts0):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in verts0:
                if w not in comp and rs.cartan[u][w] != 0:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        pieces.append(_classify_piece(rs.cartan, sorted(comp)))
    for letter, rank, order in pieces:
        ref = _simple_cartan(letter, rank)
        for a in range(rank):
            for b in range(rank):
                if rs.cartan[order[a]][order[b]] != ref[a][b]:
                    raise AssertionError(
                        f"subdiagram classification {letter}{rank} inconsistent at {order}")
    return pieces


def _classify_piece(cartan, verts: list[int]) -> tuple[str, int, tuple[int, ...]]:
    n = len(verts)
    if n == 1:
        return ("A", 1, (verts[0],))
    adj = {v: [u for u in verts if u != v and cartan[v][u] != 0] for v in verts}
    if n == 2:
        u, v = verts
        m = cartan[u][v] * cartan[v][u]
        if m == 1:
            return ("A", 2, (u, v))
        if m == 2:  # canonical order short, long
            return ("C", 2, (u, v) if cartan[u][v] == -2 else (v, u))
        if m == 3:
            return ("G", 2, (u, v) if cartan[u][v] == -3 else (v, u))
        raise ValueError(f"invalid bond multiplicity {m}")
    branch = [v for v in verts if len(adj[v]) == 3]
    if branch:
        b = branch[0]
        legs = []
        for nb in sorted(adj[b]):
            leg, prev = [nb], b
            while True:
                ahead = [u for u in adj[leg[-1]] if u != prev]
                if not ahead:
                    break
                prev = leg[-1]
                leg.append(ahead[0])
            legs.append(leg)
        legs.sort(key=lambda leg: (len(leg), leg[0]))
        lengths = tuple(len(leg) for leg in legs)
        if lengths[0] == 1 and lengths[1] == 1:
            order = list(reversed(legs[2])) + [b, legs[0][0], legs[1][0]]
            return ("D", n, tuple(order))
        if lengths[:2] == (1, 2) and lengths[2] in (2, 3, 4):
            order = [legs[1][1], legs[0][0], legs[1][0], b] + legs[2]
            return ("E", n, tuple(order))
        raise ValueError(f"unclassifiable branch diagram with legs {lengths}")
    ends = sorted(v for v in verts if len(adj[v]) == 1)
    path, prev = [ends[0]], None
    while len(path) < n:
        nxt = [u for u in adj[path[-1]] if u != prev][0]
        prev = path[-1]
        path.append(nxt)
    doubles = [k for k in range(n - 1)
               if cartan[path[k]][path[k + 1]] * cartan[path[k + 1]][path[k]] == 2]
    if not doubles:
        return ("A", n, tuple(path))
    k = doubles[0]
    if 0 < k < n - 2:  # interior double bond: F4, long pair first
        if cartan[path[k + 1]][path[k]] != -2:
            path.reverse()
        return ("F", 4, tuple(path))
    if k == 0:
        path.reverse()
    u, v = path[-2], path[-1]
    if cartan[v][u] == -2:  # final vertex short
        return ("B", n, tuple(path))
    return ("C", n, tuple(path))


def component_weyl_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDERS[(letter, rank)]


def parabolic_weyl_order(rs: RootSystem, J: Iterable[int]) -> int:
    """|W_J|, computed in closed form from the subdiagram classification."""
    order = 1
    for letter, rank, _ in subsystem_components(rs, J):
        order *= component_weyl_order(letter, rank)
    return order
