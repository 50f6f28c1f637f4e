"""Weyl group elements, enumeration and Steinberg-type weight identities.

An element is stored as its integer matrix acting on fundamental-weight
coordinates; that matrix is the canonical form used for equality and
hashing.  Words are tuples of 1-based simple-root indices and compose left
to right, i.e. ``from_word(rs, (1, 2))`` is s_1 composed with s_2, applied
as s_1(s_2(v)).
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Sequence

from .rootsys import (
    RootSystem,
    RootVector,
    Weight,
    _invert,
    parabolic_weyl_order,
    rho_J,
    root_to_weight,
)

DEFAULT_ENUM_CAP = 10 ** 6
_ENUM_CAP_ENV = "FROBCRIT_ENUM_CAP"


class EnumerationCapExceeded(ValueError):
    """Raised instead of attempting to materialize an oversized Weyl group."""

    def __init__(self, rs: RootSystem, J, order: int, cap: int) -> None:
        self.order = order
        self.cap = cap
        super().__init__(
            f"refusing to enumerate W_J of {rs.spec_string()} with J={sorted(J)}: "
            f"order is {order}, cap is {cap}")


def _identity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _right_multiply_generator(rs: RootSystem, mat, j0: int):
    """mat @ S_j in O(rank^2): only column j changes."""
    n = rs.rank
    col = [sum(mat[k][c] * rs.cartan[c][j0] for c in range(n)) for k in range(n)]
    return tuple(tuple(mat[k][b] - col[k] if b == j0 else mat[k][b] for b in range(n))
                 for k in range(n))


class WeylElement:
    """Group element of W(rs) with matrix canonical form."""

    __slots__ = ("rs", "matrix", "word", "_root_matrix")

    def __init__(self, rs: RootSystem, matrix, word: tuple[int, ...] | None = None) -> None:
        self.rs = rs
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.word = word  # some reduced word when produced by enumerate/from_word
        self._root_matrix = None

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeylElement)
                and self.rs == other.rs and self.matrix == other.matrix)

    def __hash__(self) -> int:
        return hash((self.rs.components, self.matrix))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.rs != other.rs:
            raise ValueError("cannot multiply elements of different Weyl groups")
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word  # not necessarily reduced
        return WeylElement(self.rs, _mat_mul(self.matrix, other.matrix), word)

    def act(self, weight: Weight) -> Weight:
        if len(weight) != self.rs.rank:
            raise ValueError("weight rank mismatch")
        n = self.rs.rank
        return Weight(sum(self.matrix[i][j] * weight.coords[j] for j in range(n))
                      for i in range(n))

    def _ensure_root_matrix(self):
        # action on root coordinates: A^{-1} M A, integral for Weyl matrices
        if self._root_matrix is None:
            n = self.rs.rank
            inv = self.rs.cartan_inverse
            ma = _mat_mul(self.matrix, self.rs.cartan)
            rm = []
            for i in range(n):
                row = []
                for j in range(n):
                    x = sum(inv[i][k] * ma[k][j] for k in range(n))
                    if isinstance(x, Fraction):
                        if x.denominator != 1:
                            raise AssertionError("non-integral root action")
                        x = x.numerator
                    row.append(int(x))
                rm.append(tuple(row))
            self._root_matrix = tuple(rm)
        return self._root_matrix

    def act_root(self, root: Sequence[int]) -> RootVector:
        """Image of a vector given in root coordinates."""
        if len(root) != self.rs.rank:
            raise ValueError("root rank mismatch")
        rm = self._ensure_root_matrix()
        n = self.rs.rank
        return tuple(sum(rm[i][j] * root[j] for j in range(n)) for i in range(n))

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        count = 0
        for beta in self.rs.positive_roots:
            image = self.act_root(beta)
            if all(c <= 0 for c in image):
                count += 1
        return count

    def inverse(self) -> "WeylElement":
        word = tuple(reversed(self.word)) if self.word is not None else None
        inv = _invert(self.matrix)
        return WeylElement(self.rs,
                           tuple(tuple(int(x) for x in row) for row in inv),
                           word)

    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank)

    def __repr__(self) -> str:
        if self.word is not None:
            return f"WeylElement(word={self.word})"
        return f"WeylElement(matrix={self.matrix})"


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, _identity_matrix(rs.rank), ())


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Compose simple reflections; indices are 1-based, leftmost applied last.

    ``from_word(rs, (1, 2)).act(v)`` is s_1(s_2(v)).
    """
    letters = tuple(int(i) for i in word)
    for i in letters:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"simple reflection index {i} outside 1..{rs.rank}")
    mat = _identity_matrix(rs.rank)
    for i in letters:  # I @ S_{i_1} @ ... @ S_{i_k}
        mat = _right_multiply_generator(rs, mat, i - 1)
    return WeylElement(rs, mat, letters)


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return int(cap)
    env = os.environ.get(_ENUM_CAP_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_ENUM_CAP


def enumerate_parabolic(rs: RootSystem, J: Iterable[int] | None = None,
                        cap: int | None = None) -> list[WeylElement]:
    """All elements of W_J with reduced words, breadth-first by length.

    The order |W_J| is computed in closed form first; if it exceeds the cap
    (argument, else FROBCRIT_ENUM_CAP, else 10^6) the enumeration is refused
    and the exception carries the exact order.
    """
    members = tuple(range(1, rs.rank + 1)) if J is None else tuple(sorted(set(int(j) for j in J)))
    order = parabolic_weyl_order(rs, members)
    eff_cap = _resolve_cap(cap)
    if order > eff_cap:
        raise EnumerationCapExceeded(rs, members, order, eff_cap)
    start = identity(rs)
    seen = {start.matrix: start}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for j in members:
                mat = _right_multiply_generator(rs, w.matrix, j - 1)
                if mat not in seen:
                    elem = WeylElement(rs, mat, w.word + (j,))
                    seen[mat] = elem
                    out.append(elem)
                    nxt.append(elem)
        frontier = nxt
    if len(out) != order:
        raise AssertionError(
            f"enumerated {len(out)} elements of W_J, closed form says {order}")
    return out


def longest_element(rs: RootSystem, J: Iterable[int] | None = None) -> WeylElement:
    """w_0^J, by the greedy descent: repeatedly reflect -rho_J toward dominance."""
    members = sorted(set(int(j) for j in (J if J is not None else range(1, rs.rank + 1))))
    for j in members:
        if not 1 <= j <= rs.rank:
            raise ValueError(f"index {j} outside 1..{rs.rank}")
    mu = list((-rho_J(rs, members)).coords)
    applied: list[int] = []
    n = rs.rank
    while True:
        j = next((j for j in members if mu[j - 1] < 0), None)
        if j is None:
            break
        c = mu[j - 1]
        for k in range(n):
            mu[k] -= c * rs.cartan[k][j - 1]
        applied.append(j)
    w = from_word(rs, tuple(reversed(applied)))
    expected = sum(1 for beta in rs.positive_roots
                   if all(beta[k] == 0 for k in range(n) if k + 1 not in members))
    if w.length() != expected:
        raise AssertionError("greedy longest element has wrong length")
    return w


def verify_st_decomp(rs: RootSystem, J: Iterable[int]) -> tuple[Weight, Weight, bool]:
    """Check sum of R_J^+ == rho_J - w_0^J(rho_J); returns (lhs, rhs, equal)."""
    members = sorted(set(int(j) for j in J))
    memberset = set(members)
    n = rs.rank
    total = [0] * n
    for beta in rs.positive_roots:
        if all(beta[k] == 0 for k in range(n) if k + 1 not in memberset):
            for k in range(n):
                total[k] += beta[k]
    lhs = root_to_weight(rs, tuple(total))
    rj = rho_J(rs, members)
    rhs = rj - longest_element(rs, members).act(rj)
    return lhs, rhs, lhs == rhs


def steinberg_weights(rs: RootSystem, J: Iterable[int], p: int) -> tuple[Weight, Weight]:
    """((p-1) rho_J, (1-p) w_0^J rho_J); requires p >= 2."""
    if int(p) < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    p = int(p)
    members = sorted(set(int(j) for j in J))
    rj = rho_J(rs, members)
    return (p - 1) * rj, (1 - p) * longest_element(rs, members).act(rj)
