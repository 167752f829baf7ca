"""Verification of monomial direct links and of the linkage chain that
connects a suspension path ideal down to a complete intersection.

Only monomial regular sequences are supported: a list of non-unit
monomials is regular exactly when the supports are pairwise disjoint.
Reports are structured per check so callers can render a human audit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import star, suspension, t_path_ideal
from .monomial import IdealError, Monomial, MonomialIdeal


@dataclass(frozen=True)
class LinkCheck:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class LinkReport:
    title: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def is_monomial_regular_sequence(monomials) -> bool:
    """True iff the (non-unit) monomials have pairwise disjoint supports."""
    monomials = list(monomials)
    if not monomials:
        raise IdealError("empty sequence")
    used = 0
    for m in monomials:
        if m.is_unit:
            raise IdealError("unit monomial in a regular sequence")
        mask = m.support_mask
        if mask & used:
            return False
        used |= mask
    return True


def verify_direct_link(
    i1: MonomialIdeal, i2: MonomialIdeal, regseq
) -> LinkReport:
    """Check that (regseq) links i1 and i2: the sequence is regular, sits in
    both ideals, and each ideal is the colon of the other."""
    regseq = [m if isinstance(m, Monomial) else Monomial(m) for m in regseq]
    checks = []
    regular = is_monomial_regular_sequence(regseq)
    checks.append(LinkCheck("regular_sequence", regular))
    ci = MonomialIdeal(i1.vars, regseq)
    contained = ci.containment(i1) and ci.containment(i2)
    checks.append(LinkCheck("contained_in_both", contained))
    if regular and contained:
        heights = (ci.height(), i1.height(), i2.height())
        checks.append(
            LinkCheck(
                "heights_match",
                heights[0] == heights[1] == heights[2],
                f"heights {heights}",
            )
        )
        colon2 = ci.colon(i2)
        checks.append(
            LinkCheck("colon_by_second_gives_first", colon2 == i1, repr(colon2))
        )
        colon1 = ci.colon(i1)
        checks.append(
            LinkCheck("colon_by_first_gives_second", colon1 == i2, repr(colon1))
        )
    return LinkReport("direct link", tuple(checks))


def _chain_product(n_vars: int, columns) -> Monomial:
    e = [0] * n_vars
    for c in columns:
        e[c] = 1
    return Monomial(e)


class _SuspensionChain:
    """Index bookkeeping for the suspension of an edge plus isolated vertices.

    Vertices are x_1 .. x_n followed by whisker columns; ``col(i, j)`` is
    the ambient index of x_{ij} with x_{i0} = x_i, for i in 1..n and
    j in 0..t-1.
    """

    def __init__(self, n: int, t: int):
        if n < 2 or t < 3:
            raise IdealError("the chain wants n >= 2 and t >= 3")
        self.n, self.t = n, t
        self.graph = star(1, n - 2)
        self.susp = suspension(self.graph, t)
        self.vars = self.susp.labels
        self.N = len(self.vars)

    def col(self, i: int, j: int) -> int:
        if j == 0:
            return i - 1
        return self.n + (i - 1) * (self.t - 1) + (j - 1)

    def chain_monomial(self, i: int, j_from: int, j_to: int) -> Monomial:
        """Product of x_{ij} for j_from <= j < j_to (empty product is 1)."""
        return _chain_product(
            self.N, (self.col(i, j) for j in range(j_from, j_to))
        )

    def whisker_block(self) -> list:
        return [self.chain_monomial(i, 0, self.t) for i in range(3, self.n + 1)]

    def mixed_gen(self, l: int, k: int, shift: int = 0) -> Monomial:
        """Generator of I_k at parameter l: an l-step walk down the first
        whisker times a (k-l)-step walk down the second, both starting at
        column ``shift`` (shift 1 moves the whole picture one step outward)."""
        a = self.chain_monomial(1, shift, l + shift)
        b = self.chain_monomial(2, shift, k - l + shift)
        return a.times(b)

    def ideal_i(self, k: int) -> MonomialIdeal:
        gens = [self.mixed_gen(l, k) for l in range(k + 1)]
        gens.extend(self.whisker_block())
        return MonomialIdeal(self.vars, gens)

    def ideal_j(self, k: int, shift: int = 0) -> MonomialIdeal:
        gens = [
            self.chain_monomial(1, shift, k + shift),
            self.chain_monomial(2, shift, k + shift),
        ]
        gens.extend(self.whisker_block())
        return MonomialIdeal(self.vars, gens)

    def ideal_i_shifted(self, k: int) -> MonomialIdeal:
        """The displayed I' at rung k: mixed generators one step outward."""
        gens = [self.mixed_gen(l - 1, k - 2, shift=1) for l in range(1, k)]
        gens.extend(self.whisker_block())
        return MonomialIdeal(self.vars, gens)

    def shift_map(self, ideal: MonomialIdeal) -> MonomialIdeal:
        """Relabel x_{i,j} -> x_{i,j+1 mod t} on the two edge whiskers."""
        perm = list(range(self.N))
        for i in (1, 2):
            for j in range(self.t):
                perm[self.col(i, j)] = self.col(i, (j + 1) % self.t)
        return ideal.permute_vars(perm)


def verify_suspension_chain(n: int, t: int) -> LinkReport:
    """Verify the linkage ladder for the suspension of one edge plus n-2
    isolated vertices: each rung links the k-step ideal to the (k-2)-step
    ideal through explicit complete intersections and colon identities,
    ending at a complete intersection for k <= 2."""
    chain = _SuspensionChain(n, t)
    checks = []

    built = chain.ideal_i(t)
    from_graph = t_path_ideal(chain.susp, t)
    checks.append(
        LinkCheck(
            "path_ideal_matches_display",
            built == from_graph,
            f"{len(built.gens)} generators",
        )
    )

    k = t
    while k >= 3:
        tag = f"k={k}"
        ik = chain.ideal_i(k)
        jk = chain.ideal_j(k)
        ik_shift = chain.ideal_i_shifted(k)
        jk_shift = chain.ideal_j(k - 1, shift=1)

        checks.append(
            LinkCheck(
                f"{tag}: shifted ideal is the k-2 rung",
                ik_shift == chain.shift_map(chain.ideal_i(k - 2)),
            )
        )

        for name, ci, big in (("J", jk, ik), ("J'", jk_shift, ik_shift)):
            checks.append(
                LinkCheck(
                    f"{tag}: {name} is a CI inside its ideal",
                    ci.is_complete_intersection() and ci.containment(big),
                )
            )
        checks.append(
            LinkCheck(
                f"{tag}: equal heights",
                jk.height() == ik.height() == jk_shift.height() == ik_shift.height(),
                f"height {jk.height()}",
            )
        )

        # the displayed colon identity, step by step
        mixed = MonomialIdeal(
            chain.vars, [chain.mixed_gen(l, k) for l in range(1, k)]
        )
        shifted_mixed = MonomialIdeal(
            chain.vars, [chain.mixed_gen(l - 1, k - 2, shift=1) for l in range(1, k)]
        )
        front = MonomialIdeal(
            chain.vars,
            [_chain_product(chain.N, (chain.col(1, 0), chain.col(2, 0)))],
        )
        left = jk.colon(ik)
        checks.append(
            LinkCheck(
                f"{tag}: colon absorbs CI members",
                left == jk.colon(mixed),
            )
        )
        checks.append(
            LinkCheck(
                f"{tag}: factoring x_10 x_20 lands on the shifted CI",
                mixed == front.product(shifted_mixed)
                and jk.colon(front) == jk_shift
                and jk.colon(mixed) == jk_shift.colon(shifted_mixed),
            )
        )
        checks.append(
            LinkCheck(
                f"{tag}: shifted colon absorbs its CI members",
                jk_shift.colon(shifted_mixed) == jk_shift.colon(ik_shift),
            )
        )
        middle = left
        checks.append(
            LinkCheck(
                f"{tag}: three-line identity J:I = J':I'",
                middle == jk_shift.colon(ik_shift),
            )
        )

        link1 = verify_direct_link(ik, middle, jk.gens)
        checks.append(
            LinkCheck(f"{tag}: I_k directly linked to J:I", link1.passed)
        )
        link2 = verify_direct_link(ik_shift, middle, jk_shift.gens)
        checks.append(
            LinkCheck(f"{tag}: I' directly linked to the same middle ideal", link2.passed)
        )
        k -= 2

    if k == 1:
        i1 = chain.ideal_i(1)
        checks.append(
            LinkCheck("terminal: I_1 is a complete intersection", i1.is_complete_intersection())
        )
    else:
        i2 = chain.ideal_i(2)
        ci = chain.ideal_j(2)
        middle = ci.colon(i2)
        expected = MonomialIdeal(
            chain.vars,
            [chain.chain_monomial(1, 1, 2), chain.chain_monomial(2, 1, 2)]
            + chain.whisker_block(),
        )
        checks.append(
            LinkCheck(
                "terminal: (x_10 x_11, x_20 x_21, whiskers) : I_2 is the displayed CI",
                middle == expected and middle.is_complete_intersection(),
            )
        )
        link = verify_direct_link(i2, middle, ci.gens)
        checks.append(LinkCheck("terminal: I_2 directly linked to a CI", link.passed))

    return LinkReport(f"suspension chain n={n}, t={t}", tuple(checks))
