"""Embeddings of reductive subgroups, described on the weight level.

An embedding H -> G is recorded by the linear map that restriction of
characters induces on fundamental-weight coordinates: a rank(H) x rank(G)
rational matrix.  Torus factors are never represented; builders that would
produce one (a Levi with nontrivial center, the orthogonal groups inside
special linear groups) project to the semisimple coordinates, i.e. row k of
the matrix is the pairing of the restricted weight with the k-th simple
coroot of H.

Each builder stamps a structured ``label`` used by the Donkin-pair registry
for provenance matching, e.g. ``"levi:C2:J=[1]"`` or ``"so_in_sl:n=6"``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rootsys import (
    RootSystem,
    RootVector,
    Weight,
    _exact,
    build_root_system,
    root_to_weight,
    subsystem_components,
)


class Embedding:
    """H -> G with restriction matrix on fundamental coordinates.

    ``root_lift``, when given, maps each positive root of H (root
    coordinates) to the tuple of G-roots whose root spaces span the
    corresponding root space of Lie(H).  When absent, the fiber of the
    restriction map over the root is used.  ``twist_exponent`` marks
    factors embedded through a power of Frobenius.
    """

    def __init__(self, g: RootSystem, h: RootSystem, restriction, label: str,
                 twist_exponent: int | None = None,
                 root_lift: dict[RootVector, tuple[RootVector, ...]] | None = None) -> None:
        self.g = g
        self.h = h
        rows = tuple(tuple(_exact(x) for x in row) for row in restriction)
        if len(rows) != h.rank or any(len(r) != g.rank for r in rows):
            raise ValueError(
                f"restriction matrix must be {h.rank} x {g.rank}, got "
                f"{len(rows)} x {len(rows[0]) if rows else 0}")
        self.restriction = rows
        self.label = str(label)
        self.twist_exponent = twist_exponent
        self.root_lift = root_lift

    def __repr__(self) -> str:
        return f"Embedding({self.label!r})"


def restrict(emb: Embedding, weight: Weight) -> Weight:
    """Restriction of a G-weight to H, in H fundamental coordinates."""
    if len(weight) != emb.g.rank:
        raise ValueError(
            f"weight has rank {len(weight)}, embedding source has rank {emb.g.rank}")
    return Weight(sum(row[j] * weight.coords[j] for j in range(emb.g.rank))
                  for row in emb.restriction)


def rho_h(emb: Embedding) -> Weight:
    """rho of the subgroup: all H fundamental coordinates equal 1."""
    return Weight([1] * emb.h.rank)


def validate(emb: Embedding) -> list[str]:
    """Sanity checks; returns a list of violation strings, empty when clean.

    The load-bearing check: every positive root of H must be the restriction
    of at least one positive root of G, otherwise Borel compatibility
    (B_H = B cap H) is broken and every criterion downstream is meaningless.
    """
    violations: list[str] = []
    g_restrictions = {restrict(emb, root_to_weight(emb.g, beta))
                      for beta in emb.g.positive_roots}
    for gamma in emb.h.positive_roots:
        target = root_to_weight(emb.h, gamma)
        if target not in g_restrictions:
            violations.append(
                f"positive root {gamma} of {emb.h.spec_string()} is not the "
                f"restriction of any positive root of {emb.g.spec_string()}")
    if emb.root_lift is not None:
        for gamma in emb.h.positive_roots:
            if gamma not in emb.root_lift:
                violations.append(f"root_lift is missing the positive root {gamma}")
    return violations


def root_fiber(emb: Embedding, gamma: RootVector) -> tuple[RootVector, ...]:
    """G-roots spanning the gamma root space of Lie(H) inside Lie(G).

    Uses the explicit lift when the builder supplied one, else the full
    restriction fiber over gamma among all (positive and negative) G-roots.
    """
    if emb.root_lift is not None and gamma in emb.root_lift:
        return emb.root_lift[gamma]
    target = root_to_weight(emb.h, gamma)
    fiber = []
    for beta in emb.g.positive_roots:
        for signed in (beta, tuple(-c for c in beta)):
            if restrict(emb, root_to_weight(emb.g, signed)) == target:
                fiber.append(signed)
    if not fiber:
        raise ValueError(f"no G-root restricts to the H-root {gamma}")
    return tuple(fiber)


def detect_twist(emb: Embedding, p: int) -> bool:
    """Whether some factor of G acts on H-weights through Frobenius mod p.

    True when the builder recorded a twist exponent, or when the restriction
    columns of an entire component of G are nonzero integers all divisible
    by p (the weight-level shadow of a p-th power map).
    """
    if emb.twist_exponent is not None:
        return True
    p = int(p)
    for lo, hi in emb.g.component_spans:
        block = [emb.restriction[i][j] for i in range(emb.h.rank) for j in range(lo, hi)]
        if all(x == 0 for x in block):
            continue
        if all(x.denominator == 1 and x.numerator % p == 0 for x in block):
            return True
    return False


# ---------------------------------------------------------------------------
# builders


def identity(h) -> Embedding:
    h = _as_root_system(h)
    eye = [[1 if i == j else 0 for j in range(h.rank)] for i in range(h.rank)]
    return Embedding(h, h, eye, f"identity:{h.spec_string()}")


def levi(rs, J: Iterable[int]) -> Embedding:
    """The semisimple part of the standard Levi subgroup L_J inside G.

    H-coordinates are pairings with the simple coroots indexed by J, so the
    central character of L_J is dropped.  The root spaces of H are literally
    root spaces of G, recorded in ``root_lift``.
    """
    g = _as_root_system(rs)
    members = sorted(set(int(j) for j in J))
    if not members:
        raise ValueError("a Levi embedding needs a nonempty index set J")
    pieces = subsystem_components(g, members)
    order = [v for _, _, verts in pieces for v in verts]
    h = build_root_system([(letter, rank) for letter, rank, _ in pieces])
    rows = [[1 if j == v else 0 for j in range(g.rank)] for v in order]
    lift: dict[RootVector, tuple[RootVector, ...]] = {}
    gpos = set(g.positive_roots)
    for gamma in h.positive_roots:
        beta = [0] * g.rank
        for k, v in enumerate(order):
            beta[v] = gamma[k]
        beta_t = tuple(beta)
        if beta_t not in gpos:  # subsystem closure guarantees this
            raise AssertionError(f"Levi lift of {gamma} is not a root of G")
        lift[gamma] = (beta_t,)
    label = f"levi:{g.spec_string()}:J={members}"
    return Embedding(g, h, rows, label, root_lift=lift)


def diagonal(h, k: int) -> Embedding:
    """H diagonally inside H x ... x H (k factors); k = 1 is the identity."""
    h = _as_root_system(h)
    k = int(k)
    if k < 1:
        raise ValueError("diagonal embedding needs k >= 1")
    g = build_root_system(list(h.components) * k)
    eye = [[1 if i == j else 0 for j in range(h.rank)] for i in range(h.rank)]
    rows = [row * k for row in eye]
    return Embedding(g, h, rows, f"diagonal:{h.spec_string()}:k={k}")


def folding_AC(m: int) -> Embedding:
    """Sp_2m inside SL_2m: fold A_{2m-1} by its diagram involution."""
    m = int(m)
    if m < 2:
        raise ValueError("folding_AC needs m >= 2")
    g = build_root_system([("A", 2 * m - 1)])
    h = build_root_system([("C", m)])
    rows = []
    for i in range(1, m):
        rows.append([1 if j + 1 in (i, 2 * m - i) else 0 for j in range(g.rank)])
    rows.append([1 if j + 1 == m else 0 for j in range(g.rank)])
    return Embedding(g, h, rows, f"folding_AC:m={m}")


def folding_DB(n: int) -> Embedding:
    """SO_{2n-1} inside SO_2n: fold D_n by the swap of the fork vertices."""
    n = int(n)
    if n < 4:
        raise ValueError("folding_DB needs n >= 4")
    g = build_root_system([("D", n)])
    h = build_root_system([("B", n - 1)])
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(n - 2)]
    rows.append([1 if j >= n - 2 else 0 for j in range(n)])
    return Embedding(g, h, rows, f"folding_DB:n={n}")


def folding_E6F4() -> Embedding:
    """F4 inside E6, folding by the diagram involution 1<->6, 3<->5."""
    g = build_root_system([("E", 6)])
    h = build_root_system([("F", 4)])
    rows = [
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [1, 0, 0, 0, 0, 1],
    ]
    return Embedding(g, h, rows, "folding_E6F4")


def folding_B3G2() -> Embedding:
    """G2 inside Spin_7 (the fixed points of triality, seen from B3)."""
    g = build_root_system([("B", 3)])
    h = build_root_system([("G", 2)])
    rows = [
        [1, 0, 1],
        [0, 1, 0],
    ]
    return Embedding(g, h, rows, "folding_B3G2")


def _so_coords(lam: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    # epsilon-coordinates of the restricted weight: c_k = lam_k + ... + lam_{n-1}
    c = [sum(lam[k:], Fraction(0)) for k in range(n - 1)] + [Fraction(0)]
    m = n // 2
    a = [c[k] - c[n - 1 - k] for k in range(m)]
    if n % 2 == 1:
        if m == 1:
            return (2 * a[0],)
        return tuple(a[k] - a[k + 1] for k in range(m - 1)) + (2 * a[m - 1],)
    if m == 2:
        return (a[0] - a[1], a[0] + a[1])
    return tuple(a[k] - a[k + 1] for k in range(m - 1)) + (a[m - 2] + a[m - 1],)


def so_in_sl(n: int) -> Embedding:
    """SO_n inside SL_n (fixed points of the transpose-inverse involution).

    H is the semisimple type B_{(n-1)/2} or D_{n/2}, with the low-rank
    aliases so_3 = A1, so_4 = A1 x A1, so_6 = D3.
    """
    n = int(n)
    if n < 3:
        raise ValueError("so_in_sl needs n >= 3")
    g = build_root_system([("A", n - 1)])
    m = n // 2
    if n % 2 == 1:
        comps = [("B", m)] if m >= 2 else [("A", 1)]
    else:
        comps = [("D", m)] if m >= 3 else [("A", 1), ("A", 1)]
    h = build_root_system(comps)
    cols = []
    for i in range(n - 1):
        lam = [Fraction(0)] * (n - 1)
        lam[i] = Fraction(1)
        cols.append(_so_coords(lam, n))
    rows = [[cols[j][i] for j in range(n - 1)] for i in range(h.rank)]
    return Embedding(g, h, rows, f"so_in_sl:n={n}")


def frobenius_twisted_diagonal(h, p: int) -> Embedding:
    """H in H x H by (id, Frobenius^p) on the weight level: lam + p mu."""
    h = _as_root_system(h)
    p = int(p)
    if p < 2:
        raise ValueError("frobenius twist needs p >= 2")
    g = build_root_system(list(h.components) * 2)
    rows = [[0] * (2 * h.rank) for _ in range(h.rank)]
    for i in range(h.rank):
        rows[i][i] = 1
        rows[i][h.rank + i] = p
    label = f"frobenius_twisted_diagonal:{h.spec_string()}:p={p}"
    return Embedding(g, h, rows, label, twist_exponent=p)


def _as_root_system(spec) -> RootSystem:
    if isinstance(spec, RootSystem):
        return spec
    return build_root_system(spec)
