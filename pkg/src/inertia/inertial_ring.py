"""Inertial cohomology of ``C^N`` under ``K``: structure constants of the
twisted product, the obstruction-bundle cross-check, the restriction map into
monomials with rational exponents, and a ring presentation.

Every sector ``NH^{*,g}(C^N)`` is free of rank one over ``H_K^*(pt)`` and all
fixed sets contain the origin, so the whole product is recorded by one
monomial in the weights per pair of group elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Mapping, Sequence

from .delzant import DelzantData
from .poly import Poly
from .sectors import GammaTable, LogweightVector, identity, inverse, multiply, power

Character = tuple[int, ...]


@dataclass(frozen=True)
class WeightMonomial:
    """``scalar * prod_w w^{r_w}`` with ``w`` running over characters of ``K``."""

    terms: tuple[tuple[Character, Fraction], ...] = ()
    scalar: int = 1

    @classmethod
    def make(cls, powers: Mapping[Character, Fraction] | Sequence[tuple[Character, Fraction]], scalar: int = 1):
        acc: dict[Character, Fraction] = {}
        items = powers.items() if isinstance(powers, Mapping) else powers
        for w, r in items:
            r = Fraction(r)
            if r < 0:
                raise ValueError("negative exponent")
            acc[tuple(w)] = acc.get(tuple(w), Fraction(0)) + r
        return cls(tuple(sorted((w, r) for w, r in acc.items() if r)), scalar)

    @classmethod
    def one(cls) -> WeightMonomial:
        return cls()

    def __mul__(self, other: WeightMonomial) -> WeightMonomial:
        return WeightMonomial.make(list(self.terms) + list(other.terms), self.scalar * other.scalar)

    @property
    def degree(self) -> Fraction:
        """Cohomological degree; each character has degree 2."""
        return 2 * sum((r for _, r in self.terms), Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(r.denominator == 1 for _, r in self.terms)

    def to_poly(self, nvars: int) -> Poly:
        """Expand as a polynomial in ``u_1..u_k``, the leading variables of a ring with ``nvars`` variables."""
        if not self.is_integral:
            raise ValueError("fractional exponents have no polynomial form")
        out = Poly.const(nvars, self.scalar)
        for w, r in self.terms:
            lin = Poly(nvars, {tuple(int(j == i) for j in range(nvars)): c for i, c in enumerate(w)})
            out = out * lin ** int(r)
        return out

    def render(self, coeff_names: Sequence[str]) -> str:
        k = len(coeff_names)
        if self.is_integral:
            return self.to_poly(k).render(coeff_names)
        pieces = [] if self.scalar == 1 else [str(self.scalar)]
        for w, r in self.terms:
            base = Poly.linear(list(w)).render(coeff_names) if k else "1"
            if base not in coeff_names:
                base = f"({base})"
            if r != 1:
                base += f"^{_fmt(r)}" if r.denominator == 1 else f"^({_fmt(r)})"
            pieces.append(base)
        return "*".join(pieces) or "1"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _weight_power(D: DelzantData, exps: Sequence[Fraction]) -> WeightMonomial:
    return WeightMonomial.make([(D.weights[i], e) for i, e in enumerate(exps) if e])


# ---------------------------------------------------------------------------
# Structure constants


def star_exponents(D: DelzantData, g: LogweightVector, h: LogweightVector) -> tuple[Fraction, ...]:
    gh = multiply(D, g, h)
    return tuple(x + y - z for x, y, z in zip(g.a, h.a, gh.a))


def nary_star_exponents(D: DelzantData, *gs: LogweightVector) -> tuple[Fraction, ...]:
    prod = identity(D)
    for g in gs:
        prod = multiply(D, prod, g)
    sums = [sum((g.a[i] for g in gs), Fraction(0)) for i in range(D.N)]
    out = tuple(s - z for s, z in zip(sums, prod.a))
    assert all(x == floor(s) for x, s in zip(out, sums))
    return out


def star_structure_constant(D: DelzantData, g: LogweightVector, h: LogweightVector):
    """``y_g * y_h = c * y_{gh}``; returns ``(gh, c)``."""
    return multiply(D, g, h), _weight_power(D, star_exponents(D, g, h))


def smile_sets(D: DelzantData, g: LogweightVector, h: LogweightVector) -> tuple[frozenset[int], frozenset[int]]:
    """Coordinates of the obstruction bundle and of the normal bundle of
    ``Y^{g,h}`` in ``Y^{gh}``."""
    gh = multiply(D, g, h)
    ginv = inverse(D, gh)
    obstruction = frozenset(i for i in range(D.N) if g.a[i] + h.a[i] + ginv.a[i] == 2)
    normal = frozenset(i for i in range(D.N) if gh.a[i] == 0 and (g.a[i] or h.a[i]))
    return obstruction, normal


def smile_factors(D: DelzantData, g: LogweightVector, h: LogweightVector) -> tuple[WeightMonomial, WeightMonomial]:
    eps, f = smile_sets(D, g, h)
    one = Fraction(1)
    return (
        _weight_power(D, [one if i in eps else 0 for i in range(D.N)]),
        _weight_power(D, [one if i in f else 0 for i in range(D.N)]),
    )


def smile_structure_constant(D: DelzantData, g: LogweightVector, h: LogweightVector):
    eps, f = smile_factors(D, g, h)
    return multiply(D, g, h), eps * f


def res_monomial(D: DelzantData, g: LogweightVector) -> WeightMonomial:
    return _weight_power(D, g.a)


@dataclass(frozen=True)
class StructureConstants:
    table: dict

    def __getitem__(self, pair):
        return self.table[pair]


def structure_constants(D: DelzantData, G: GammaTable) -> StructureConstants:
    els = G.elements
    return StructureConstants({(g, h): star_structure_constant(D, g, h) for g in els for h in els})


# ---------------------------------------------------------------------------
# Presentations


def coefficient_names(k: int) -> list[str]:
    return ["u"] if k == 1 else [f"u{j + 1}" for j in range(k)]


@dataclass(frozen=True)
class RingPresentation:
    coefficient_variables: tuple[tuple[str, int, Character], ...]
    sector_generators: tuple[tuple[str, LogweightVector, Fraction], ...]
    relations: tuple[Poly, ...]
    # image of y_g for every g in Gamma (1 for the identity)
    sector_images: dict

    @property
    def names(self) -> list[str]:
        return [c[0] for c in self.coefficient_variables] + [s[0] for s in self.sector_generators]

    @property
    def degrees(self) -> list[Fraction]:
        return [Fraction(c[1]) for c in self.coefficient_variables] + [s[2] for s in self.sector_generators]

    @property
    def nvars(self) -> int:
        return len(self.coefficient_variables) + len(self.sector_generators)

    @property
    def k(self) -> int:
        return len(self.coefficient_variables)

    def render(self, p: Poly) -> str:
        k = self.k
        return p.render(self.names, key=lambda m: (-sum(m[k:]), -sum(m), tuple(-e for e in m)))

    def degree_of(self, p: Poly) -> Fraction:
        (deg,) = p.weighted_degrees(self.degrees)
        return deg

    def describe(self) -> str:
        gens = ", ".join(self.names)
        rels = ", ".join(self.render(r) for r in self.relations)
        return f"Z[{gens}]/<{rels}>" if self.relations else f"Z[{gens}]"


def reduce_relations(polys: Sequence[Poly], degrees: Sequence[Fraction]) -> list[Poly]:
    """Drop zero relations, duplicates up to sign, and monomial multiples of
    relations already kept (lower degrees first).  Surviving relations keep
    their input order."""
    order = sorted(
        range(len(polys)),
        key=lambda j: (min(polys[j].weighted_degrees(degrees), default=Fraction(0)), j),
    )
    kept: list[int] = []
    # p = x^m q  iff  both have the same monomial-free part and gcd(q) divides gcd(p)
    by_shape: dict = {}
    for j in order:
        p = polys[j]
        if p.is_zero():
            continue
        shape, floor_ = _shape(p)
        if any(all(a <= b for a, b in zip(f, floor_)) for f in by_shape.get(shape, ())):
            continue
        by_shape.setdefault(shape, []).append(floor_)
        kept.append(j)
    return [polys[j] for j in sorted(kept)]


def _shape(p: Poly):
    """Sign-normalized ``p / gcd-monomial`` and the gcd monomial itself."""
    monos = list(p.terms)
    floor_ = tuple(min(m[i] for m in monos) for i in range(p.nvars))
    body = sorted((tuple(a - b for a, b in zip(m, floor_)), c) for m, c in p.terms.items())
    if body[-1][1] < 0:
        body = [(m, -c) for m, c in body]
    return tuple(body), floor_


def _eliminations(D: DelzantData, twisted: Sequence[LogweightVector]) -> dict:
    """``h -> (g, n)`` whenever ``y_h = y_g^n`` exactly for an earlier kept ``g``."""
    out: dict = {}
    # exact powers of kept generators: y_g^n = y_{g^n} iff every floor(n a_i(g)) vanishes
    exact_powers: dict = {}
    for h in twisted:
        if h in exact_powers:
            out[h] = exact_powers[h]
            continue
        for n in range(2, h.order):
            if any(n * x >= 1 for x in h.a):
                break
            exact_powers.setdefault(power(D, h, n), (h, n))
    return out


def nh_presentation(D: DelzantData, G: GammaTable, reduce: bool = True) -> RingPresentation:
    """Generators and relations for ``NH^{*,Gamma}`` over ``Z[u]``."""
    D.require_connected()
    k = D.k_rank
    twisted = [s.g for s in G.twisted]
    n = len(twisted)
    full_n = k + n
    full_names = [f"y{j + 1}" for j in range(n)]
    var_of = {g: k + j for j, g in enumerate(twisted)}

    def y(g):
        return Poly.const(full_n, 1) if g.is_identity else Poly.var(full_n, var_of[g])

    rels = []
    for a, g in enumerate(twisted):
        for h in twisted[a:]:
            target, c = star_structure_constant(D, g, h)
            rels.append(y(g) * y(h) - c.to_poly(full_n) * y(target))

    elim = _eliminations(D, twisted) if reduce else {}
    kept = [g for g in twisted if g not in elim]
    new_n = k + len(kept)
    images: list[Poly] = [Poly.var(new_n, j) for j in range(k)] + [Poly(new_n)] * n
    kept_pos = {g: k + j for j, g in enumerate(kept)}
    for g in twisted:
        if g in kept_pos:
            images[var_of[g]] = Poly.var(new_n, kept_pos[g])
    for g in twisted:
        if g in elim:
            base, m = elim[g]
            images[var_of[g]] = images[var_of[base]] ** m

    relations = [r.substitute(images, new_n) for r in rels]
    coeff = tuple((name, 2, tuple(int(i == j) for i in range(k))) for j, name in enumerate(coefficient_names(k)))
    gens = tuple((full_names[var_of[g] - k], g, 2 * sum(g.a, Fraction(0))) for g in kept)
    degrees = [Fraction(2)] * k + [s[2] for s in gens]
    if reduce:
        relations = reduce_relations(relations, degrees)
    sector_images = {identity(D): Poly.const(new_n, 1)}
    sector_images.update({g: images[var_of[g]] for g in twisted})
    return RingPresentation(coeff, gens, tuple(relations), sector_images)
