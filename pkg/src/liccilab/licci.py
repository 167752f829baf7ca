"""Licci decision machinery.

The Huneke-Ulrich iteration decides the licci property for Artinian
monomial ideals: write the ideal in standard form (pure powers plus
x^B * K), replace it by (x_i^{a_i - b_i} : i) + K and repeat.  Reaching
the unit ideal certifies licci; reaching a sharp part whose generators
have no common variable is a fixpoint and certifies not licci.

``classify`` wraps the iteration in a cascade of cheaper classical
certificates (Cohen-Macaulayness, low height, Gorenstein codimension 3,
the Huneke-Ulrich regularity obstruction, bi-CM duality), each carrying a
citation and computed witnesses in the verdict.  Licci is always read at
the homogeneous maximal ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .betti import betti_table, invariants, IdealInvariants
from .exact import FieldSpec, RATIONALS
from .monomial import IdealError, Monomial, MonomialIdeal
from .squarefree import alexander_dual

LICCI = "Licci"
NOT_LICCI = "NotLicci"
UNKNOWN = "Unknown"

CITATIONS = {
    "R1": "licci ideals are Cohen-Macaulay (Peskine-Szpiro; graded case via Nagata localization)",
    "R2": "principal ideals and complete intersections are licci (height-one CM ideals in a UFD are principal)",
    "R3": "Cohen-Macaulay ideals of height at most 2 in a regular local ring are licci (Gaeta-type; Kimura-Terai-Yoshida, Lemma 2.2)",
    "R4": "Gorenstein ideals of height 3 in a regular local ring are licci (Watanabe; Kimura-Terai-Yoshida, Lemma 2.2)",
    "R5": "regularity obstruction: reg(S/I) <= (alpha-1) pd(S/I) - alpha forbids licci for CM ideals (Huneke-Ulrich, The structure of linkage, Cor. 5.13)",
    "R6": "Huneke-Ulrich standard-form iteration decides licci for Artinian monomial ideals",
    "R7": "a bi-CM squarefree ideal is licci iff its height is at most 2 or it is generated by variables (Terai duality with the Huneke-Ulrich obstruction forces alpha = 1 in height >= 3)",
}


@dataclass(frozen=True)
class RuleFiring:
    rule: str
    citation: str
    witness: str


@dataclass(frozen=True)
class HUStep:
    k: int
    ideal: MonomialIdeal
    note: str


@dataclass(frozen=True)
class LicciVerdict:
    status: str
    rules: tuple
    hu_trace: Optional[tuple] = None

    @property
    def fired_rule(self) -> str:
        return self.rules[-1].rule if self.rules else ""


@dataclass(frozen=True)
class HUStepResult:
    """Outcome of one iteration step: 'unit', 'fixpoint' or 'next'."""

    kind: str
    next_ideal: Optional[MonomialIdeal]
    summary: str


def hu_step(ideal: MonomialIdeal) -> HUStepResult:
    """One standard-form step of the Huneke-Ulrich iteration."""
    if not ideal.is_artinian() or not ideal.is_proper:
        raise IdealError("hu_step wants a proper Artinian ideal")
    sf = ideal.standard_form()
    if sf.sharp.is_zero:
        return HUStepResult("unit", None, "complete intersection")
    if sf.b.is_unit:
        return HUStepResult(
            "fixpoint", None, "fixpoint: gcd of sharp part is 1"
        )
    n = ideal.n_vars
    gens = [Monomial.variable(n, i, sf.a[i] - sf.b[i]) for i in range(n)]
    gens.extend(sf.k_ideal.gens)
    nxt = MonomialIdeal(ideal.vars, gens)
    summary = (
        f"a={sf.a} b={tuple(sf.b)} sharp gens={len(sf.sharp.gens)}"
    )
    return HUStepResult("next", nxt, summary)


def _pure_power_weight(ideal: MonomialIdeal) -> int:
    # sum of the a_i; an Artinian minimal generating set holds exactly one
    # pure power per variable
    total = 0
    for g in ideal.gens:
        pp = g.pure_power()
        if pp:
            total += pp[1]
    return total


def hu_decide(ideal: MonomialIdeal) -> LicciVerdict:
    """Iterate hu_step to a unit ideal (licci) or a fixpoint (not licci)."""
    if not ideal.is_artinian() or not ideal.is_proper:
        raise IdealError("hu_decide wants a proper Artinian ideal")
    trace = []
    current = ideal
    k = 0
    weight = _pure_power_weight(current)
    while True:
        k += 1
        step = hu_step(current)
        if step.kind == "unit":
            trace.append(HUStep(k, MonomialIdeal(current.vars, [[0] * current.n_vars]),
                                "complete intersection"))
            status = LICCI
            break
        if step.kind == "fixpoint":
            trace.append(HUStep(k, current, step.summary))
            status = NOT_LICCI
            break
        current = step.next_ideal
        if current.is_unit:
            trace.append(HUStep(k, current, "principal sharp part; reached the unit ideal"))
            status = LICCI
            break
        trace.append(HUStep(k, current, step.summary))
        new_weight = _pure_power_weight(current)
        if new_weight >= weight:
            raise IdealError("iteration failed to decrease, input was malformed")
        weight = new_weight
    witness = f"terminated at step {k}: {trace[-1].note}"
    return LicciVerdict(
        status, (RuleFiring("R6", CITATIONS["R6"], witness),), tuple(trace)
    )


def obstruction_not_licci(ideal: MonomialIdeal, inv: IdealInvariants) -> bool:
    """Huneke-Ulrich regularity obstruction; only meaningful for CM ideals."""
    if not inv.is_CM:
        raise IdealError("the regularity obstruction assumes a CM ideal")
    return inv.reg <= (inv.alpha - 1) * inv.pd - inv.alpha


def _artinian_invariants(ideal: MonomialIdeal) -> IdealInvariants:
    # Artinian quotients have depth 0, so pd = n = height and CM is automatic;
    # regularity is the top socle degree and the CM type is the socle dimension.
    n = ideal.n_vars
    socle = ideal.socle_monomials()
    return IdealInvariants(
        pd=n,
        reg=max(m.degree for m in socle),
        depth=0,
        is_CM=True,
        is_gorenstein=len(socle) == 1,
        has_linear_resolution=len({g.degree for g in ideal.gens}) == 1
        and max(m.degree for m in socle) == ideal.alpha() - 1,
        alpha=ideal.alpha(),
    )


def _invariants_for(ideal: MonomialIdeal, field: FieldSpec) -> IdealInvariants:
    if ideal.is_artinian():
        return _artinian_invariants(ideal)
    return invariants(betti_table(ideal, field), ideal)


def classify(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> LicciVerdict:
    """Rule cascade deciding licci-ness at the homogeneous maximal ideal.

    Rules fire in order: (R1) non-CM, (R2) principal or complete
    intersection, (R3) CM of height <= 2, (R4) Gorenstein of height 3,
    (R5) the regularity obstruction, (R6) the Huneke-Ulrich iteration for
    Artinian ideals, (R7) the bi-CM classification.  ``Unknown`` is a
    legitimate outcome, not an error.
    """
    if ideal.is_zero or ideal.is_unit:
        raise IdealError("classify wants a nonzero proper ideal")

    # cheap certificates that do not need a Betti table
    if ideal.is_complete_intersection() or len(ideal.gens) == 1:
        witness = (
            "principal" if len(ideal.gens) == 1 else
            f"complete intersection on {len(ideal.gens)} disjoint supports"
        )
        return LicciVerdict(LICCI, (RuleFiring("R2", CITATIONS["R2"], witness),))

    inv = _invariants_for(ideal, field)
    height = ideal.height()

    if not inv.is_CM:
        witness = f"pd={inv.pd} != height={height}"
        return LicciVerdict(NOT_LICCI, (RuleFiring("R1", CITATIONS["R1"], witness),))

    if height <= 2:
        witness = f"CM with height={height}"
        return LicciVerdict(LICCI, (RuleFiring("R3", CITATIONS["R3"], witness),))

    if height == 3 and inv.is_gorenstein:
        witness = "Gorenstein with height=3"
        return LicciVerdict(LICCI, (RuleFiring("R4", CITATIONS["R4"], witness),))

    if obstruction_not_licci(ideal, inv):
        witness = (
            f"reg={inv.reg} <= (alpha-1)*pd - alpha = "
            f"{(inv.alpha - 1) * inv.pd - inv.alpha} (alpha={inv.alpha}, pd={inv.pd})"
        )
        return LicciVerdict(NOT_LICCI, (RuleFiring("R5", CITATIONS["R5"], witness),))

    if ideal.is_artinian():
        return hu_decide(ideal)

    if ideal.is_squarefree:
        dual = alexander_dual(ideal)
        dual_inv = invariants(betti_table(dual, field), dual)
        if dual_inv.is_CM:
            generated_by_vars = all(g.degree == 1 for g in ideal.gens)
            if height <= 2 or generated_by_vars:
                witness = f"bi-CM with height={height}"
                return LicciVerdict(LICCI, (RuleFiring("R7", CITATIONS["R7"], witness),))
            witness = (
                f"bi-CM with height={height} >= 3, alpha={inv.alpha} > 1"
            )
            return LicciVerdict(NOT_LICCI, (RuleFiring("R7", CITATIONS["R7"], witness),))

    return LicciVerdict(UNKNOWN, ())


def audit_rules(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> dict:
    """Evaluate every applicable rule independently (for contradiction checks).

    Returns {rule id: status} for each rule whose hypotheses hold; a sound
    implementation never reports both Licci and NotLicci.
    """
    out = {}
    if ideal.is_complete_intersection() or len(ideal.gens) == 1:
        out["R2"] = LICCI
    inv = _invariants_for(ideal, field)
    height = ideal.height()
    if not inv.is_CM:
        out["R1"] = NOT_LICCI
    else:
        if height <= 2:
            out["R3"] = LICCI
        if height == 3 and inv.is_gorenstein:
            out["R4"] = LICCI
        if obstruction_not_licci(ideal, inv):
            out["R5"] = NOT_LICCI
    if ideal.is_artinian():
        out["R6"] = hu_decide(ideal).status
    if ideal.is_squarefree and inv.is_CM and not ideal.is_zero:
        dual = alexander_dual(ideal)
        if invariants(betti_table(dual, field), dual).is_CM:
            ok = height <= 2 or all(g.degree == 1 for g in ideal.gens)
            out["R7"] = LICCI if ok else NOT_LICCI
    return out


def licci_bound_check(ideal: MonomialIdeal, verdict: LicciVerdict) -> bool:
    """Soundness alarm: every licci squarefree ideal satisfies
    height(I) <= floor(n / alpha(I)) + 1.  Non-licci verdicts pass vacuously."""
    if not ideal.is_squarefree:
        raise IdealError("the height bound applies to squarefree ideals")
    if verdict.status != LICCI:
        return True
    return ideal.height() <= ideal.n_vars // ideal.alpha() + 1
