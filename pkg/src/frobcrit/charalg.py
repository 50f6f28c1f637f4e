"""Exact character computations: weight multiplicities and branching.

Multiplicities come from Freudenthal's recursion evaluated over the
dominant weights of the module; full characters are recovered by Weyl-orbit
expansion.  Branching through an embedding pushes the character along the
restriction matrix and strips highest weights greedily from the top.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .embed import Embedding
from .rootsys import (
    RootSystem,
    Weight,
    build_root_system,
    cartan_pairing,
    rho,
    root_to_weight,
)

_char_cache: dict[tuple, "DominantCharacter"] = {}
_factor_systems: dict[tuple, RootSystem] = {}


def dominant_conjugate(rs: RootSystem, weight: Weight) -> Weight:
    """The unique dominant element of the Weyl orbit."""
    coords = list(weight.coords)
    n = rs.rank
    while True:
        i = next((i for i in range(n) if coords[i] < 0), None)
        if i is None:
            return Weight(coords)
        c = coords[i]
        for k in range(n):
            coords[k] -= c * rs.cartan[k][i]


def weyl_orbit(rs: RootSystem, weight: Weight) -> set[tuple[Fraction, ...]]:
    """All coordinate tuples in the Weyl orbit of the weight."""
    start = weight.coords
    seen = {start}
    frontier = [start]
    n = rs.rank
    while frontier:
        nxt = []
        for coords in frontier:
            for i in range(n):
                if coords[i] == 0:
                    continue
                c = coords[i]
                image = tuple(coords[k] - c * rs.cartan[k][i] for k in range(n))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return seen


class DominantCharacter:
    """Character of an irreducible module, stored on dominant weights only."""

    def __init__(self, rs: RootSystem, highest: Weight,
                 multiplicities: dict[Weight, int]) -> None:
        self.rs = rs
        self.highest = highest
        self.multiplicities = multiplicities
        self._full: dict[Weight, int] | None = None
        self._dim: int | None = None

    def dimension(self) -> int:
        if self._dim is None:
            self._dim = sum(m * len(weyl_orbit(self.rs, mu))
                            for mu, m in self.multiplicities.items())
        return self._dim

    def weights(self) -> dict[Weight, int]:
        """The full character: every weight with its multiplicity."""
        if self._full is None:
            full: dict[Weight, int] = {}
            for mu, m in self.multiplicities.items():
                for coords in weyl_orbit(self.rs, mu):
                    full[Weight(coords)] = m
            self._full = full
        return self._full


def _factor_system(component: tuple) -> RootSystem:
    sub = _factor_systems.get(component)
    if sub is None:
        sub = _factor_systems[component] = build_root_system([component])
    return sub


def freudenthal(rs: RootSystem, lam: Weight) -> DominantCharacter:
    """Weight multiplicities of the irreducible module with highest weight lam."""
    if len(lam) != rs.rank:
        raise ValueError("highest weight rank mismatch")
    if not lam.is_integral() or not lam.is_dominant():
        raise ValueError(f"highest weight must be dominant integral, got {lam!r}")

    if len(rs.components) > 1:
        # characters of product systems factor, so combine the per-component
        # dominant maps instead of running the recursion on the product
        factor_maps = []
        for (lo, hi), comp in zip(rs.component_spans, rs.components):
            piece = Weight(lam.coords[lo:hi])
            factor_maps.append(_cached_character(_factor_system(comp), piece)
                               .multiplicities)
        mults: dict[Weight, int] = {}
        for combo in itertools.product(*(fm.items() for fm in factor_maps)):
            coords = tuple(c for w, _ in combo for c in w.coords)
            m = 1
            for _, factor_mult in combo:
                m *= factor_mult
            mults[Weight(coords)] = m
        return DominantCharacter(rs, lam, mults)

    # one common denominator clears the symmetrizer, after which both sides
    # of the recursion scale together and everything below is plain integer
    # arithmetic on coordinate tuples
    n = rs.rank
    cartan = rs.cartan
    scale = math.lcm(*(d.denominator for d in rs.symmetrizer))
    isym = [int(d * scale) for d in rs.symmetrizer]
    pos = []
    for beta in rs.positive_roots:
        bw = tuple(int(c) for c in root_to_weight(rs, beta).coords)
        # root coordinates of bw are beta itself, so (bw, bw) is immediate
        coef = tuple(beta[k] * isym[k] for k in range(n))
        ip_bb = sum(coef[k] * bw[k] for k in range(n))
        pos.append((bw, beta, coef, ip_bb))

    # all dominant weights of the module: close lam under subtracting positive
    # roots while staying dominant, tracking the root coordinates of lam - mu
    # (integers, since the difference lies in the root lattice)
    lam_t = tuple(int(c) for c in lam.coords)
    dom = {lam_t: (0,) * n}
    frontier = [lam_t]
    while frontier:
        nxt = []
        for mu_t in frontier:
            diff = dom[mu_t]
            for bw, beta, _, _ in pos:
                cand = tuple(mu_t[k] - bw[k] for k in range(n))
                if min(cand) >= 0 and cand not in dom:
                    dom[cand] = tuple(diff[k] + beta[k] for k in range(n))
                    nxt.append(cand)
        frontier = nxt

    ordered = sorted(dom, key=lambda t: (sum(dom[t]), t))
    mults: dict[tuple, int] = {lam_t: 1}
    for mu_t in ordered:
        if mu_t == lam_t:
            continue
        acc = 0
        for bw, _, coef, ip_bb in pos:
            # along the string nu = mu + k*bw the form is affine in k:
            # (nu, bw) = (mu, bw) + k (bw, bw)
            base = sum(coef[k] * mu_t[k] for k in range(n))
            k = 1
            nu = tuple(mu_t[j] + bw[j] for j in range(n))
            while True:
                if min(nu) >= 0:
                    key = nu
                else:
                    v = list(nu)
                    lowered = True
                    while lowered:
                        lowered = False
                        for i in range(n):
                            c = v[i]
                            if c < 0:
                                for j in range(n):
                                    v[j] -= c * cartan[j][i]
                                lowered = True
                    key = tuple(v)
                m = mults.get(key)
                if m is None:
                    break  # weight strings are saturated, nothing further up
                acc += m * (base + k * ip_bb)
                k += 1
                nu = tuple(nu[j] + bw[j] for j in range(n))
        # (lam+rho, lam+rho) - (mu+rho, mu+rho) = (lam+mu+2rho, lam-mu), and
        # the second factor carries the integer root coordinates tracked above
        diff = dom[mu_t]
        denom = sum(diff[k] * isym[k] * (lam_t[k] + mu_t[k] + 2)
                    for k in range(n))
        value, remainder = divmod(2 * acc, denom)
        if remainder or value <= 0:
            raise AssertionError(f"non-positive-integer multiplicity at {mu_t!r}")
        mults[mu_t] = value
    return DominantCharacter(rs, lam,
                             {Weight(t): m for t, m in mults.items()})


def _cached_character(rs: RootSystem, lam: Weight) -> DominantCharacter:
    key = (rs.components, lam.coords)
    char = _char_cache.get(key)
    if char is None:
        char = _char_cache[key] = freudenthal(rs, lam)
    return char


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension by the Weyl dimension formula; independent of freudenthal."""
    if not lam.is_integral() or not lam.is_dominant():
        raise ValueError(f"highest weight must be dominant integral, got {lam!r}")
    rho_w = rho(rs)
    out = Fraction(1)
    for beta in rs.positive_roots:
        out *= cartan_pairing(rs, lam + rho_w, beta) / cartan_pairing(rs, rho_w, beta)
    if out.denominator != 1:
        raise AssertionError("Weyl dimension formula returned a non-integer")
    return int(out)


def branch(emb: Embedding, lam: Weight) -> dict[Weight, int]:
    """Decompose the restriction of the irreducible G-module to H.

    Returns {H-highest-weight: multiplicity}, insertion-ordered from the
    top.  Raises when the restricted character is not a character of H
    (non-integral weights, a non-dominant leading term, or a negative
    residual multiplicity), which is how inconsistent embeddings surface.
    """
    # G-side characters are rarely revisited between calls, so the full
    # product character is not cached; its single-type factors and the
    # H-side constituents below repeat heavily and are.  All bookkeeping
    # runs on raw coordinate tuples; Weight only crosses the API edges.
    full = freudenthal(emb.g, lam).weights()
    h = emb.h
    rows = emb.restriction
    gn = emb.g.rank
    residual: dict[tuple, int] = {}
    for w, m in full.items():
        wc = w.coords
        rw = tuple(sum(row[j] * wc[j] for j in range(gn)) for row in rows)
        if not all(c.denominator == 1 for c in rw):
            raise ValueError(
                f"restriction of the weight {tuple(wc)} is the non-integral "
                f"H-weight {rw}")
        residual[rw] = residual.get(rw, 0) + m

    heights = []
    for j in range(h.rank):
        basis = Weight([1 if k == j else 0 for k in range(h.rank)])
        heights.append(sum(h.root_coordinates(basis), Fraction(0)))
    hscale = math.lcm(*(x.denominator for x in heights))
    hv = tuple(int(x * hscale) for x in heights)

    def height(t: tuple):
        return sum(hv[j] * t[j] for j in range(h.rank))

    # subtracting a character only touches weights strictly lower in the
    # (height, coords) order, so one descending pass visits every top that
    # the repeated-argmax formulation would
    out: dict[Weight, int] = {}
    residual = {t: m for t, m in residual.items() if m != 0}
    for top in sorted(residual, key=lambda t: (height(t), t), reverse=True):
        mult = residual.get(top, 0)
        if mult == 0:
            continue
        if min(top) < 0:
            raise ValueError(
                f"maximal weight {top} of the restricted character "
                f"is not dominant; restriction is not a character of H")
        if mult < 0:
            raise ValueError(
                f"negative residual multiplicity {mult} at {top}")
        for w, m in _cached_character(h, Weight(top)).weights().items():
            key = w.coords
            left = residual.get(key, 0) - mult * m
            if left == 0:
                residual.pop(key, None)
            else:
                residual[key] = left
        out[Weight(top)] = mult
    if residual:
        worst = max(residual, key=lambda t: (height(t), t))
        raise ValueError(
            f"negative residual multiplicity {residual[worst]} at {worst}")
    return out


@dataclass
class SurjectivityScanRow:
    index: int                 # 1-based fundamental weight index on G
    top_weight: Weight         # leading H-constituent of the restriction
    top_multiplicity: int
    multiplicity_one: bool


def fundamental_weight_surjectivity_scan(emb: Embedding) -> list[SurjectivityScanRow]:
    """Leading branching multiplicity for each fundamental weight of G.

    Multiplicity one for the top constituent is the numerical shadow of the
    restriction map on sections being surjective at that weight.
    """
    rows = []
    for i in range(1, emb.g.rank + 1):
        lam = Weight([1 if k == i - 1 else 0 for k in range(emb.g.rank)])
        decomposition = branch(emb, lam)
        top, mult = next(iter(decomposition.items()))
        rows.append(SurjectivityScanRow(i, top, mult, mult == 1))
    return rows
