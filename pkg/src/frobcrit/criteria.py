"""Frobenius-splitting criteria for spherical subgroup orbit closures.

Everything is phrased on the weight level.  For an embedding H -> G, a
parabolic index set J and a prime p, the central test is dominance of

    2 rho_H - (rho_J)|_H

together with surjectivity of restriction on Steinberg-type sections; the
conclusions are emitted as tagged statements about the induced varieties
H x_{B_H} (P_J/B), their images in G/B, and the H-orbit closures inside.
All geometry lives in those statement strings: this module never
manipulates varieties, only exact weight data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .embed import Embedding, detect_twist, restrict, rho_h, root_fiber, validate
from .rootsys import (
    Weight,
    cartan_pairing,
    parabolic_weyl_order,
    rho_J,
)
from .weyl import EnumerationCapExceeded, WeylElement, enumerate_parabolic

ORBIT_LABEL_CAP = 100

SURJECTIVITY_SOURCES = ("donkin-registry", "large-p", "user-asserted", "none")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass
class CriterionInput:
    """One criterion instance: embedding, parabolic index set, prime."""
    embedding: Embedding
    J: tuple[int, ...]
    p: int
    surjectivity_source: str = "donkin-registry"
    lie_separability: str | None = None  # optional caller assertion: holds/fails

    def __post_init__(self) -> None:
        self.J = tuple(sorted(set(int(j) for j in self.J)))
        self.p = int(self.p)


@dataclass
class SurjectivityStatus:
    status: str    # "holds" | "unknown"
    source: str
    detail: str

    @property
    def holds(self) -> bool:
        return self.status == "holds"


@dataclass
class LieSeparabilityStatus:
    status: str    # "holds" | "fails" | "unknown"
    source: str


@dataclass
class Conclusion:
    tag: str
    statement: str
    theorem: str
    orbit_count: int | None = None
    orbit_labels: tuple[tuple[int, ...], ...] | None = None


@dataclass
class DivisorData:
    weight: Weight           # (p-1) rho_J on G
    multiplicity: int        # p-1, the coefficient of each component
    indices: tuple[int, ...]  # J: one divisor component per index


@dataclass
class CriterionReport:
    input: CriterionInput
    condition1_weight: Weight
    condition1_dominant: bool
    condition1_regular: bool
    surjectivity: SurjectivityStatus
    lie_separability: LieSeparabilityStatus
    lemma53_min_p: int
    conclusions: list[Conclusion] = field(default_factory=list)
    divisor: DivisorData | None = None

    def tags(self) -> tuple[str, ...]:
        return tuple(c.tag for c in self.conclusions)


def lemma53_min_p(emb: Embedding) -> int:
    """Prime bound above which restriction surjectivity holds unconditionally.

    The bound is the ceiling of max <rho_H + omega_i|_H, gamma_vee> over the
    fundamental weights omega_i of G and positive roots gamma of H.
    """
    rh = rho_h(emb)
    best = Fraction(0)
    for i in range(emb.g.rank):
        omega = Weight([1 if k == i else 0 for k in range(emb.g.rank)])
        shifted = rh + restrict(emb, omega)
        for gamma in emb.h.positive_roots:
            best = max(best, cartan_pairing(emb.h, shifted, gamma))
    return math.ceil(best)


def _resolve_surjectivity(inp: CriterionInput, min_p: int) -> SurjectivityStatus:
    source = inp.surjectivity_source
    if source not in SURJECTIVITY_SOURCES:
        raise ValueError(
            f"unknown surjectivity source {source!r}; expected one of "
            f"{', '.join(SURJECTIVITY_SOURCES)}")
    p = inp.p
    if source == "user-asserted":
        return SurjectivityStatus("holds", "user-asserted", "asserted by the caller")
    if source == "large-p":
        if p >= min_p:
            return SurjectivityStatus("holds", "large-p", f"p={p} >= {min_p}")
        return SurjectivityStatus("unknown", "large-p", f"p={p} < {min_p}")
    if source == "none":
        return SurjectivityStatus("unknown", "none", "no surjectivity source requested")
    # donkin-registry, falling through to the large-p bound on a miss
    from .registry import lookup_donkin
    hit = lookup_donkin(inp.embedding, p)
    if hit.status == "yes":
        return SurjectivityStatus("holds", "donkin-registry", hit.detail)
    if p >= min_p:
        return SurjectivityStatus(
            "holds", "large-p", f"registry miss; p={p} >= {min_p}")
    return SurjectivityStatus(
        "unknown", "donkin-registry",
        f"registry does not match {inp.embedding.label!r} at p={p} and p < {min_p}")


def _resolve_lie(inp: CriterionInput) -> LieSeparabilityStatus:
    if len(inp.J) == inp.embedding.g.rank:
        # p_J = g, the containment of Lie algebras is the definition of H in G
        return LieSeparabilityStatus("holds", "parabolic-is-full")
    if detect_twist(inp.embedding, inp.p):
        return LieSeparabilityStatus("fails", "frobenius-twist")
    if inp.lie_separability in ("holds", "fails"):
        return LieSeparabilityStatus(inp.lie_separability, "user-flag")
    if inp.lie_separability is not None:
        raise ValueError(
            f"lie_separability flag must be 'holds' or 'fails', got {inp.lie_separability!r}")
    return LieSeparabilityStatus("unknown", "undetermined")


def _orbit_words(emb: Embedding, J: tuple[int, ...]):
    count = parabolic_weyl_order(emb.g, J)
    if count > ORBIT_LABEL_CAP:
        return count, None
    try:
        elements = enumerate_parabolic(emb.g, J)
    except EnumerationCapExceeded:
        return count, None
    words = tuple(sorted((el.word for el in elements), key=lambda w: (len(w), w)))
    return count, words


def check_main(inp: CriterionInput) -> CriterionReport:
    """Evaluate the splitting criterion and assemble tagged conclusions."""
    emb = inp.embedding
    problems = validate(emb)
    if problems:
        raise ValueError("embedding fails validation: " + "; ".join(problems))
    if not _is_prime(inp.p):
        raise ValueError(f"p must be prime, got {inp.p}")
    for j in inp.J:
        if not 1 <= j <= emb.g.rank:
            raise ValueError(f"J index {j} outside 1..{emb.g.rank}")

    p, J = inp.p, inp.J
    rj = rho_J(emb.g, J)
    rj_res = restrict(emb, rj)
    cond1 = 2 * rho_h(emb) - rj_res
    dominant = cond1.is_dominant()
    regular = cond1.is_regular_dominant()
    min_p = lemma53_min_p(emb)
    surjectivity = _resolve_surjectivity(inp, min_p)
    lie = _resolve_lie(inp)

    report = CriterionReport(
        input=inp,
        condition1_weight=cond1,
        condition1_dominant=dominant,
        condition1_regular=regular,
        surjectivity=surjectivity,
        lie_separability=lie,
        lemma53_min_p=min_p,
    )
    if not dominant:
        return report

    count, words = _orbit_words(emb, J)
    jset = list(J)

    def conclude(tag: str, statement: str, theorem: str) -> None:
        report.conclusions.append(Conclusion(tag, statement, theorem, count, words))

    if not surjectivity.holds:
        would = ["SPLIT_PJ"]
        if regular:
            would.append("GLOBALLY_F_REGULAR")
        if (rho_h(emb) - rj_res).is_dominant():
            would.append("CANONICAL_SPLIT")
        if lie.status == "holds":
            would.append("COR72_HPJ")
        if len(J) == emb.g.rank:
            would.extend(["COR73_FLAG", "COHOMOLOGY_VANISHING"])
        conclude(
            "CONDITIONAL",
            f"2 rho_H - rho_J|_H = {_coords(cond1)} is dominant, but surjectivity of "
            f"restriction on sections of weight (p-1) rho_J is unresolved "
            f"({surjectivity.detail}); if it holds, these follow: {', '.join(would)}",
            "pending-surjectivity")
        return report

    conclude(
        "SPLIT_PJ",
        f"the induced variety H x_BH (P_J/B) is Frobenius split by a splitting of "
        f"weight (p-1)(2 rho_H - rho_J|_H) with p={p}, J={jset}, compatibly with "
        f"every induced Schubert variety H x_BH X(w), w in W_J",
        "induced-parabolic-splitting")
    report.divisor = DivisorData((p - 1) * rj, p - 1, J)
    if (rho_h(emb) - rj_res).is_dominant():
        conclude(
            "CANONICAL_SPLIT",
            f"rho_H - rho_J|_H = {_coords(rho_h(emb) - rj_res)} is dominant, so the "
            f"splitting of H x_BH (P_J/B) can be chosen B_H-canonical",
            "canonical-splitting")
    if regular:
        conclude(
            "GLOBALLY_F_REGULAR",
            f"2 rho_H - rho_J|_H = {_coords(cond1)} is regular dominant, so "
            f"H x_BH (P_J/B) and every induced Schubert variety H x_BH X(w), "
            f"w in W_J, is globally F-regular",
            "induced-parabolic-splitting")
    if lie.status == "holds":
        extra = ("; each orbit closure is globally F-regular" if regular else "")
        conclude(
            "COR72_HPJ",
            f"Lie(H) + Lie(P_J) separability holds ({lie.source}), so the splitting "
            f"descends: H P_J/B is Frobenius split compatibly with the H-orbit "
            f"closures H.X(w) for all w in W_J{extra}",
            "separable-descent")
    if len(J) == emb.g.rank:
        conclude(
            "COR73_FLAG",
            f"J is the full index set, so G/B itself is Frobenius split compatibly "
            f"with the closure of every H-orbit H.X(w), w in W",
            "full-flag-descent")
        conclude(
            "COHOMOLOGY_VANISHING",
            f"for every dominant lambda and every w in W: H^i of the orbit closure "
            f"H.X(w) with coefficients in L(lambda) vanishes for i > 0, and "
            f"H^0(G/B, L(lambda)) -> H^0 of the orbit closure is surjective",
            "full-flag-descent")
    return report


def divisor_weights(inp: CriterionInput) -> DivisorData:
    """The splitting divisor data ((p-1) rho_J, one component per j in J).

    Only meaningful when the criterion actually produces a splitting;
    raises otherwise.
    """
    report = check_main(inp)
    if report.divisor is None:
        raise ValueError(
            "no P_J-splitting was concluded for this input; divisor data undefined")
    return report.divisor


@dataclass
class Thm41Report:
    weight: Weight
    p: int
    condition2_weight: Weight      # 2(p-1) rho_H - lambda|_H
    condition2_holds: bool
    canonical_weight: Weight       # (p-1) rho_H - lambda|_H
    canonical_holds: bool
    surjectivity: SurjectivityStatus
    condition1_status: str         # "steinberg-supplied" | "assumed"
    steinberg_J: tuple[int, ...] | None


def thm41_hypotheses(emb: Embedding, lam: Weight, p: int) -> Thm41Report:
    """Audit the hypotheses of the general splitting theorem at weight lam.

    Condition (1) is supplied automatically when lam has Steinberg shape
    (p-1) rho_J for some J; otherwise the caller must argue it separately.
    """
    if not _is_prime(int(p)):
        raise ValueError(f"p must be prime, got {p}")
    p = int(p)
    if len(lam) != emb.g.rank:
        raise ValueError("weight rank mismatch")
    if not lam.is_integral() or not lam.is_dominant():
        raise ValueError(f"lambda must be dominant integral, got {lam!r}")
    lam_res = restrict(emb, lam)
    cond2 = 2 * (p - 1) * rho_h(emb) - lam_res
    canonical = (p - 1) * rho_h(emb) - lam_res
    steinberg_J: tuple[int, ...] | None = None
    if all(c in (0, p - 1) for c in lam.coords):
        steinberg_J = tuple(i + 1 for i, c in enumerate(lam.coords) if c == p - 1)
    probe = CriterionInput(emb, steinberg_J or (), p, "donkin-registry")
    surjectivity = _resolve_surjectivity(probe, lemma53_min_p(emb))
    return Thm41Report(
        weight=lam,
        p=p,
        condition2_weight=cond2,
        condition2_holds=cond2.is_dominant(),
        canonical_weight=canonical,
        canonical_holds=canonical.is_dominant(),
        surjectivity=surjectivity,
        condition1_status="steinberg-supplied" if steinberg_J is not None else "assumed",
        steinberg_J=steinberg_J,
    )


def conjugated_borel_check(emb: Embedding, x: WeylElement, J: Iterable[int]) -> bool:
    """Dominance test for the conjugated Borel B_x = x B x^{-1}.

    Requires B_x cap H to be a Borel subgroup of H: for each positive H-root
    the lifted G-root spaces must land entirely on one side of x(R+).  The
    signs carve out the positive system P_x inside the restrictions of
    x(R+), and the test is dominance of 2 rho_H - (x . rho_J)|_H against
    P_x.  For x the identity this is exactly condition (1) of check_main.
    """
    problems = validate(emb)
    if problems:
        raise ValueError("embedding fails validation: " + "; ".join(problems))
    if x.rs != emb.g:
        raise ValueError("conjugating element does not act on the source group")
    members = sorted(set(int(j) for j in J))
    for j in members:
        if not 1 <= j <= emb.g.rank:
            raise ValueError(f"J index {j} outside 1..{emb.g.rank}")

    x_positive = {x.act_root(beta) for beta in emb.g.positive_roots}
    signs: dict[tuple[int, ...], int] = {}
    for gamma in emb.h.positive_roots:
        fiber = root_fiber(emb, gamma)
        plus = all(r in x_positive for r in fiber)
        minus = all(tuple(-c for c in r) in x_positive for r in fiber)
        if plus == minus:
            raise ValueError(
                f"B_x cap H is not a Borel subgroup of H: the root spaces over "
                f"{gamma} are split by x (word {x.word})")
        signs[gamma] = 1 if plus else -1

    target = 2 * rho_h(emb) - restrict(emb, x.act(rho_J(emb.g, members)))
    return all(sign * cartan_pairing(emb.h, target, gamma) >= 0
               for gamma, sign in signs.items())


def _coords(w: Weight) -> str:
    return "(" + ", ".join(str(c) for c in w.coords) + ")"
