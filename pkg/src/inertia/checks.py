"""Identities every computed instance must satisfy, run exhaustively over Γ."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .delzant import DelzantData
from .inertial_ring import (
    nary_star_exponents,
    res_monomial,
    smile_sets,
    smile_structure_constant,
    star_exponents,
    star_structure_constant,
)
from .kirwan import DEFAULT_CUTOFF, kirwan_kernel_generators, poincare_series_q, rational_slice_ranks
from .polytope import LabeledPolytope
from .sectors import GammaTable, inverse


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, detail=None) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.examples) < 3:
                self.examples.append(detail)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def run_checks(D: DelzantData, P: LabeledPolytope, G: GammaTable, cutoff=DEFAULT_CUTOFF) -> list[CheckResult]:
    els = G.elements
    consts = {(g, h): star_structure_constant(D, g, h) for g in els for h in els}
    exps = {(g, h): star_exponents(D, g, h) for g in els for h in els}
    res = {g: res_monomial(D, g) for g in els}

    integral = CheckResult("star exponents in {0,1}")
    nary = CheckResult("n-ary exponents are floors")
    grading = CheckResult("grading")
    commut = CheckResult("commutativity")
    smile = CheckResult("star equals smile")
    split = CheckResult("obstruction + normal = star exponent")
    resmul = CheckResult("res multiplicative")
    assoc = CheckResult("associativity")
    ages = CheckResult("age(g) + age(g^-1) = moving coordinates")
    box = CheckResult("in box iff sector face nonempty")
    closed = CheckResult("Gamma closed under the group law")
    members = set(els)
    for s in G.gamma:
        g = s.g
        gi = G.sector(inverse(D, g))
        ages.record(s.age + gi.age == len(s.moving_coords), g)
        box.record(s.in_box == (s.sector_face is not None), g)
    for g in els:
        for h in els:
            eps = exps[(g, h)]
            integral.record(all(e in (0, 1) for e in eps), (g, h))
            gh, c = consts[(g, h)]
            closed.record(gh in members, (g, h))
            grading.record(
                G.sector(g).degree_shift + G.sector(h).degree_shift == G.sector(gh).degree_shift + 2 * sum(eps, Fraction(0)),
                (g, h),
            )
            commut.record(consts[(h, g)] == consts[(g, h)], (g, h))
            smile.record(smile_structure_constant(D, g, h) == (gh, c), (g, h))
            ob, nb = smile_sets(D, g, h)
            split.record(all(int(i in ob) + int(i in nb) == eps[i] for i in range(D.N)), (g, h))
            resmul.record(res[g] * res[h] == res[gh] * c, (g, h))
    # exponent-vector form of associativity; it implies equality of the monomials
    pos = {g: n for n, g in enumerate(els)}
    mult = [[pos[consts[(g, h)][0]] for h in els] for g in els]
    ex = [[exps[(g, h)] for h in els] for g in els]
    n = len(els)
    for g in range(n):
        for h in range(n):
            gh, e1 = mult[g][h], ex[g][h]
            for k in range(n):
                hk = mult[h][k]
                e2, e3, e4 = ex[gh][k], ex[h][k], ex[g][hk]
                assoc.record(
                    mult[gh][k] == mult[g][hk] and all(a + b == c + d for a, b, c, d in zip(e1, e2, e3, e4)),
                    (els[g], els[h], els[k]),
                )
    for g in els:
        for h in els:
            for k in G.box:
                k = k.g
                sums = [g.a[i] + h.a[i] + k.a[i] for i in range(D.N)]
                nary.record(nary_star_exponents(D, g, h, k) == tuple(Fraction(int(x)) for x in sums), (g, h, k))
    q = CheckResult("Poincare series equals slice ranks")
    series = poincare_series_q(D, P, G, cutoff)
    ranks = rational_slice_ranks(D, P, G, cutoff)
    for deg in sorted(set(series) | set(ranks)):
        q.record(series.get(deg, 0) == ranks.get(deg, 0), deg)
    killed = CheckResult("sectors off the polytope are killed")
    ker = kirwan_kernel_generators(D, P, G)
    for s in G.gamma:
        if s.sector_face is None:
            killed.record(any(k.sector == s.g and k.coefficient == 1 for k in ker.generators), s.g)
    return [closed, integral, nary, grading, commut, smile, split, resmul, assoc, ages, box, q, killed]

