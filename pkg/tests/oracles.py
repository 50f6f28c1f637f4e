"""Independent reference implementations backing the derived test values.

Deliberately naive re-derivations: epsilon-coordinate root models for the
classical types, reflection-orbit root generation, a brute-force Weyl group
closure with determinant signs, Kostant partition counting, and the
alternating-sum Weyl character formula.  None of it reuses the package's
Weyl-group or character machinery.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from frobcrit.rootsys import RootSystem, Weight


# ---------------------------------------------------------------------------
# epsilon-coordinate models of the classical root systems


def eps_simple_roots(letter: str, n: int) -> list[tuple[int, ...]]:
    def e(i: int, dim: int, c: int = 1) -> tuple[int, ...]:
        return tuple(c if k == i else 0 for k in range(dim))

    def pair(i: int, j: int, dim: int, cj: int) -> tuple[int, ...]:
        return tuple((1 if k == i else 0) + (cj if k == j else 0) for k in range(dim))

    if letter == "A":
        return [pair(i, i + 1, n + 1, -1) for i in range(n)]
    if letter == "B":
        return [pair(i, i + 1, n, -1) for i in range(n - 1)] + [e(n - 1, n)]
    if letter == "C":
        return [pair(i, i + 1, n, -1) for i in range(n - 1)] + [e(n - 1, n, 2)]
    if letter == "D":
        return [pair(i, i + 1, n, -1) for i in range(n - 1)] + [pair(n - 2, n - 1, n, 1)]
    raise ValueError(letter)


def eps_positive_roots(letter: str, n: int) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()

    def vec(entries: dict[int, int], dim: int) -> tuple[int, ...]:
        return tuple(entries.get(k, 0) for k in range(dim))

    if letter == "A":
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                out.add(vec({i: 1, j: -1}, n + 1))
        return out
    for i in range(n):
        for j in range(i + 1, n):
            if letter in ("B", "C", "D"):
                out.add(vec({i: 1, j: -1}, n))
                out.add(vec({i: 1, j: 1}, n))
        if letter == "B":
            out.add(vec({i: 1}, n))
        if letter == "C":
            out.add(vec({i: 2}, n))
    return out


def _dot(u, v) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def eps_cartan(letter: str, n: int) -> list[list[int]]:
    simple = eps_simple_roots(letter, n)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = 2 * _dot(simple[j], simple[i]) / _dot(simple[i], simple[i])
            assert v.denominator == 1
            row.append(int(v))
        out.append(row)
    return out


def eps_vector_of_root(letter: str, n: int, coords) -> tuple[Fraction, ...]:
    """Map simple-root coordinates to the epsilon model."""
    simple = eps_simple_roots(letter, n)
    dim = len(simple[0])
    return tuple(sum((Fraction(coords[k]) * simple[k][d] for k in range(n)),
                     Fraction(0)) for d in range(dim))


# ---------------------------------------------------------------------------
# reflection-orbit root generation (works for every type)


def reflection_orbit_positive_roots(rs: RootSystem) -> set[tuple[int, ...]]:
    """All positive roots as the W-orbit of the simple roots."""
    n = rs.rank

    def reflect(i: int, c):
        pairing = sum(rs.cartan[i][j] * c[j] for j in range(n))
        return tuple(c[k] - (pairing if k == i else 0) for k in range(n))

    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                image = reflect(i, c)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return {c for c in seen if all(x >= 0 for x in c)}


# ---------------------------------------------------------------------------
# brute-force Weyl group with signs, Kostant partitions, character formula


def brute_weyl_with_signs(rs: RootSystem) -> dict[tuple, int]:
    """{fundamental-coordinate matrix: det} for every Weyl element."""
    n = rs.rank
    gens = []
    for i in range(n):
        gens.append(tuple(tuple((1 if r == c else 0) - (rs.cartan[r][i] if c == i else 0)
                                for c in range(n)) for r in range(n)))

    def mul(a, b):
        return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
                     for r in range(n))

    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    out = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                cand = mul(m, g)
                if cand not in out:
                    out[cand] = -out[m]
                    nxt.append(cand)
        frontier = nxt
    return out


class KostantCounter:
    """Number of ways to write a root-lattice vector as a nonnegative sum
    of positive roots."""

    def __init__(self, rs: RootSystem) -> None:
        self.positives = list(rs.positive_roots)
        self.memo: dict[tuple[tuple[int, ...], int], int] = {}

    def count(self, vec: tuple[int, ...], idx: int = 0) -> int:
        if all(x == 0 for x in vec):
            return 1
        if any(x < 0 for x in vec) or idx >= len(self.positives):
            return 0
        key = (vec, idx)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        total = 0
        current = vec
        while True:
            total += self.count(current, idx + 1)
            current = tuple(a - b for a, b in zip(current, self.positives[idx]))
            if any(x < 0 for x in current):
                break
        self.memo[key] = total
        return total


def character_multiplicity_oracle(rs: RootSystem, lam: Weight, mu: Weight,
                                  weyl=None, kostant: KostantCounter | None = None) -> int:
    """Alternating-sum Weyl character formula:
    m(mu) = sum_w sign(w) P(w(lam + rho) - (mu + rho))."""
    n = rs.rank
    if weyl is None:
        weyl = brute_weyl_with_signs(rs)
    if kostant is None:
        kostant = KostantCounter(rs)
    rho = Weight([1] * n)
    shifted = (lam + rho).coords
    target = (mu + rho).coords
    inv = rs.cartan_inverse
    total = 0
    for matrix, sign in weyl.items():
        moved = tuple(sum(matrix[r][c] * shifted[c] for c in range(n)) for r in range(n))
        diff = tuple(m - t for m, t in zip(moved, target))
        coords = []
        ok = True
        for i in range(n):
            x = sum((inv[i][j] * diff[j] for j in range(n)), Fraction(0))
            if x.denominator != 1 or x < 0:
                ok = False
                break
            coords.append(int(x))
        if ok:
            total += sign * kostant.count(tuple(coords))
    return total


def a1_tensor(a: int, b: int) -> list[int]:
    """Clebsch-Gordan for sl2: highest weights of (a) x (b)."""
    return list(range(abs(a - b), a + b + 1, 2))


def permutation_inversion_histogram(n: int) -> dict[int, int]:
    """Length distribution of S_n as inversion counts."""
    hist: dict[int, int] = {}
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        hist[inv] = hist.get(inv, 0) + 1
    return hist
