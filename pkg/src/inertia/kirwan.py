"""The inertial Kirwan map and the Chen-Ruan cohomology of the quotient.

Two routes to the kernel:

* circle quotients: the origin is the only fixed point and the Morse-Thom
  class of a sector is the Euler class of its fixed subspace;
* polytope quotients: Stanley-Reisner monomials ``x_S`` of facet sets that
  miss the sector face, with ``x_i`` sent to the ``i``-th weight.

Graded groups are computed on the free module ``sum_g Z[u] y_g``; everything is
exact and truncated at a degree cutoff.
"""

from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .delzant import DelzantData
from .errors import UnsupportedError
from .exact_algebra import GradedAbelianGroup, graded_slice_group, lcm, nullspace_q, sparse_rank_q
from .inertial_ring import (
    RingPresentation,
    nh_presentation,
    reduce_relations,
    star_structure_constant,
)
from .poly import Poly, monomials_of_degree
from .polytope import LabeledPolytope, face_from_facets, h_vector
from .sectors import GammaTable, LogweightVector

DEFAULT_CUTOFF = 20


@dataclass(frozen=True)
class KernelGenerator:
    sector: LogweightVector
    coefficient: Poly  # in u_1..u_k
    element: Poly  # in the variables of the NH presentation


@dataclass(frozen=True)
class KernelIdeal:
    generators: tuple[KernelGenerator, ...]
    presentation: RingPresentation

    def render(self) -> list[str]:
        return [self.presentation.render(gen.element) for gen in self.generators]


def _linear_form(w: Sequence[int]) -> Poly:
    k = len(w)
    return Poly(k, {tuple(int(j == i) for j in range(k)): c for i, c in enumerate(w)})


def minimal_missing_sets(P: LabeledPolytope, fixed: Sequence[int], moving: Sequence[int]) -> list[tuple[int, ...]]:
    """Minimal ``S`` inside ``fixed`` whose facets, together with ``moving``,
    have empty common face."""
    found: list[frozenset] = []
    fixed = sorted(fixed)
    for r in range(len(fixed) + 1):
        for S in itertools.combinations(fixed, r):
            s = frozenset(S)
            if any(t <= s for t in found):
                continue
            if face_from_facets(P, s | set(moving)) is None:
                found.append(s)
    return [tuple(sorted(s)) for s in found]


def _sector_coefficients(D: DelzantData, P: LabeledPolytope, g: LogweightVector, route: str) -> list[Poly]:
    k = D.k_rank
    fixed = [i for i in range(D.N) if g.a[i] == 0]
    if route == "morse":
        c = Poly.const(k, 1)
        for i in fixed:
            c = c * _linear_form(D.weights[i])
        return [c]
    moving = [i for i in range(D.N) if g.a[i] != 0]
    out = []
    for S in minimal_missing_sets(P, fixed, moving):
        c = Poly.const(k, 1)
        for i in S:
            c = c * _linear_form(D.weights[i])
        out.append(c)
    return out


def kirwan_kernel_generators(
    D: DelzantData,
    P: LabeledPolytope,
    G: GammaTable,
    route: str | None = None,
    presentation: RingPresentation | None = None,
) -> KernelIdeal:
    """Kernel generators, sector by sector, in the variables of ``nh_presentation``."""
    D.require_connected()
    route = route or ("morse" if D.mode == "circle" else "stanley-reisner")
    if route not in ("morse", "stanley-reisner"):
        raise ValueError(f"unknown route {route!r}")
    if route == "morse" and (D.k_rank != 1 or any(w[0] <= 0 for w in D.weights)):
        raise UnsupportedError("the Morse route needs a circle acting with positive weights")
    R = presentation or nh_presentation(D, G)
    k = D.k_rank
    gens = []
    for s in G.gamma:
        y = R.sector_images[s.g]
        for c in _sector_coefficients(D, P, s.g, route):
            gens.append(KernelGenerator(s.g, c, c.embed(R.nvars, list(range(k))) * y))
    return KernelIdeal(tuple(gens), R)


def hcr_presentation(D: DelzantData, P: LabeledPolytope, G: GammaTable) -> tuple[RingPresentation, KernelIdeal]:
    """Chen-Ruan cohomology presentation: NH relations plus the Kirwan kernel."""
    R = nh_presentation(D, G)
    ker = kirwan_kernel_generators(D, P, G, presentation=R)
    rels = list(R.relations) + [g.element for g in ker.generators]
    rels = reduce_relations(rels, R.degrees)
    H = RingPresentation(R.coefficient_variables, R.sector_generators, tuple(rels), R.sector_images)
    return H, ker


# ---------------------------------------------------------------------------
# Stanley-Reisner data of one sector


@dataclass(frozen=True)
class StanleyReisnerPresentation:
    variables: tuple[int, ...]  # facet indices i with x_i a variable
    monomial_ideal: tuple[tuple[int, ...], ...]
    linear_ideal: tuple[tuple[int, ...], ...]  # integer coefficient rows over ``variables``
    weights: tuple[tuple[int, ...], ...]

    @property
    def is_zero(self) -> bool:
        return () in self.monomial_ideal

    def hilbert_series(self, cutoff: int | None = None) -> dict[int, int]:
        """Q-dimensions of the graded pieces, degree ``2j`` for polynomial degree ``j``.

        The linear relations are solved by sending ``x_i`` to its weight, which
        identifies the ring with a quotient of ``Q[u_1..u_k]``.
        """
        if self.is_zero:
            return {}
        k = len(self.weights[0]) if self.weights else 0
        gens = []
        for S in self.monomial_ideal:
            c = Poly.const(k, 1)
            for i in S:
                c = c * _linear_form(self.weights[self.variables.index(i)])
            gens.append(c)
        out = {}
        top = cutoff // 2 if cutoff is not None else len(self.variables)
        for j in range(top + 1):
            basis = list(monomials_of_degree(k, j))
            pos = {m: n for n, m in enumerate(basis)}
            rows = []
            for c in gens:
                e = sum(next(iter(c.terms)))
                if e > j:
                    continue
                for m in monomials_of_degree(k, j - e):
                    p = c * Poly.monomial(m)
                    rows.append({pos[mm]: Fraction(v) for mm, v in p.terms.items()})
            dim = len(basis) - sparse_rank_q(rows)
            if dim:
                out[2 * j] = dim
        return out


def stanley_reisner(D: DelzantData, P: LabeledPolytope, g: LogweightVector) -> StanleyReisnerPresentation:
    D.require_connected()
    fixed = tuple(i for i in range(D.N) if g.a[i] == 0)
    moving = [i for i in range(D.N) if g.a[i] != 0]
    monos = tuple(minimal_missing_sets(P, fixed, moving))
    W = [list(D.weights[i]) for i in fixed]
    # linear forms sum alpha_i x_i vanishing on the weights: alpha in the left kernel of W
    cols = [[W[i][j] for i in range(len(fixed))] for j in range(D.k_rank)]
    lin = []
    for v in nullspace_q(cols, len(fixed)):
        den = 1
        for x in v:
            den = lcm(den, x.denominator)
        lin.append(tuple(int(x * den) for x in v))
    return StanleyReisnerPresentation(fixed, monos, tuple(lin), tuple(D.weights[i] for i in fixed))


# ---------------------------------------------------------------------------
# Graded pieces


def poincare_series_q(D: DelzantData, P: LabeledPolytope, G: GammaTable, cutoff=DEFAULT_CUTOFF) -> dict[Fraction, int]:
    """``sum_g t^{2 age(g)} h_{F_g}(t^2)``, truncated at ``cutoff``."""
    D.require_connected()
    out: dict[Fraction, int] = {}
    for s in G.gamma:
        if s.sector_face is None:
            continue
        for j, h in enumerate(h_vector(s.sector_face)):
            deg = s.degree_shift + 2 * j
            if h and deg <= cutoff:
                out[deg] = out.get(deg, 0) + h
    return dict(sorted(out.items()))


def _module_basis(D: DelzantData, G: GammaTable, cutoff) -> dict[Fraction, list[tuple[LogweightVector, tuple[int, ...]]]]:
    k = D.k_rank
    basis: dict[Fraction, list] = {}
    for s in G.gamma:
        j = 0
        while s.degree_shift + 2 * j <= cutoff:
            for m in monomials_of_degree(k, j):
                basis.setdefault(s.degree_shift + 2 * j, []).append((s.g, m))
            j += 1
    return dict(sorted(basis.items()))


def kernel_slices(D: DelzantData, P: LabeledPolytope, G: GammaTable, cutoff=DEFAULT_CUTOFF, route: str | None = None):
    """Basis of each degree slice of ``sum_g Z[u] y_g`` and the integer rows
    spanning the kernel ideal in it."""
    D.require_connected()
    route = route or ("morse" if D.mode == "circle" else "stanley-reisner")
    k = D.k_rank
    basis = _module_basis(D, G, cutoff)
    index = {deg: {b: n for n, b in enumerate(bs)} for deg, bs in basis.items()}
    rows: dict[Fraction, list[list[int]]] = {deg: [] for deg in basis}
    for s in G.gamma:
        for c in _sector_coefficients(D, P, s.g, route):
            cdeg = 2 * sum(next(iter(c.terms))) if c.terms else 0
            for h in G.elements:
                target, const = star_structure_constant(D, h, s.g)
                p = c * const.to_poly(k)
                base = G.sector(target).degree_shift + cdeg + const.degree
                j = 0
                while base + 2 * j <= cutoff:
                    pos = index[base + 2 * j]
                    for m in monomials_of_degree(k, j):
                        row = [0] * len(pos)
                        for mono, v in p.terms.items():
                            mm = tuple(a + b for a, b in zip(mono, m))
                            row[pos[(target, mm)]] += v
                        if any(row):
                            rows[base + 2 * j].append(row)
                    j += 1
    return basis, {deg: _compress(rs) for deg, rs in rows.items()}


def _compress(rows: list[list[int]]) -> list[list[int]]:
    """Same row span: rows with one nonzero entry are merged per column by gcd,
    other rows are deduplicated."""
    singles: dict[int, int] = {}
    multi = set()
    for row in rows:
        nz = [j for j, v in enumerate(row) if v]
        if len(nz) == 1:
            j = nz[0]
            singles[j] = gcd(singles.get(j, 0), row[j])
        else:
            if row[nz[0]] < 0:
                row = [-v for v in row]
            multi.add(tuple(row))
    n = len(rows[0]) if rows else 0
    out = [[v if i == j else 0 for i in range(n)] for j, v in sorted(singles.items())]
    return out + [list(r) for r in sorted(multi)]


def rational_slice_ranks(D: DelzantData, P: LabeledPolytope, G: GammaTable, cutoff=DEFAULT_CUTOFF) -> dict[Fraction, int]:
    basis, rows = kernel_slices(D, P, G, cutoff)
    out = {}
    for deg, bs in basis.items():
        r = len(bs) - sparse_rank_q([{j: Fraction(v) for j, v in enumerate(row) if v} for row in rows[deg]])
        if r:
            out[deg] = r
    return out


def graded_groups_z(D: DelzantData, P: LabeledPolytope, G: GammaTable, cutoff=DEFAULT_CUTOFF) -> GradedAbelianGroup:
    """Integral graded pieces of ``H_CR`` for circle quotients."""
    if D.k_rank != 1:
        raise UnsupportedError("integral computation supported only for circle quotients")
    basis, rows = kernel_slices(D, P, G, cutoff)
    degrees = [deg for deg, bs in basis.items() for _ in bs]
    return graded_slice_group(degrees, rows)


def display_degrees(groups: GradedAbelianGroup, cutoff) -> list[Fraction]:
    """Every integer degree up to the cutoff plus any fractional degree present."""
    degs = {Fraction(n) for n in range(int(cutoff) + 1)}
    degs.update(d for d in groups.degrees() if d <= cutoff)
    return sorted(degs)

