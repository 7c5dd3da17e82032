"""Twisted sectors: finite stabilizers, the group they generate, logweights
and ages.

An element ``g`` of ``K`` is stored by its coordinates ``theta`` in
``R^k / Z^k`` (the torus dual to the chosen character basis) together with its
logweight vector ``a``, ``a_i = frac(<w_i, theta>)``.  In polytope mode ``K``
sits inside ``T^N`` so ``a`` determines ``theta``; in circle mode a
non-primitive weight vector makes some elements act trivially, and ``theta``
keeps them apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .delzant import DelzantData
from .errors import InputError, UnsupportedError
from .exact_algebra import IntegerMatrix, frac, lattice_coset_reps, lcm
from .polytope import Face, LabeledPolytope, face_from_facets


@dataclass(frozen=True, order=True)
class LogweightVector:
    a: tuple[Fraction, ...]
    theta: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.a, self.theta)))

    def __hash__(self):
        return self._hash

    @property
    def order(self) -> int:
        return lcm(*(x.denominator for x in self.theta))

    @property
    def is_identity(self) -> bool:
        return not any(self.theta)

    def label(self) -> str:
        return ",".join(_fmt(x) for x in self.a)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def element(D: DelzantData, theta: Sequence) -> LogweightVector:
    theta = tuple(frac(t) for t in theta)
    if len(theta) != D.k_rank:
        raise ValueError(f"expected {D.k_rank} torus coordinates")
    a = tuple(frac(sum((w * t for w, t in zip(wi, theta)), Fraction(0))) for wi in D.weights)
    return LogweightVector(a, theta)


def from_logweights(D: DelzantData, a: Sequence) -> LogweightVector:
    """Recover the element of ``K`` with the given logweights (polytope mode)."""
    a = tuple(frac(x) for x in a)
    if D.character_section is None:
        raise ValueError("logweights do not determine an element in circle mode")
    if any(x.denominator != 1 for x in D.varpi.apply(a)):
        raise InputError(f"({', '.join(map(_fmt, a))}) is not an element of K")
    g = element(D, D.character_section.apply(a))
    if g.a != a:
        raise InputError(f"({', '.join(map(_fmt, a))}) is not an element of K")
    return g


def identity(D: DelzantData) -> LogweightVector:
    return element(D, (0,) * D.k_rank)


def multiply(D: DelzantData, g: LogweightVector, h: LogweightVector) -> LogweightVector:
    return element(D, [x + y for x, y in zip(g.theta, h.theta)])


def inverse(D: DelzantData, g: LogweightVector) -> LogweightVector:
    return element(D, [-x for x in g.theta])


def power(D: DelzantData, g: LogweightVector, n: int) -> LogweightVector:
    return element(D, [n * x for x in g.theta])


def in_K(D: DelzantData, a: Sequence) -> bool:
    """Membership congruence: ``varpi . a`` integral (polytope mode)."""
    return all(x.denominator == 1 for x in D.varpi.apply([Fraction(x) for x in a]))


# ---------------------------------------------------------------------------
# Finite stabilizers


def stabilizer_of_face(D: DelzantData, P: LabeledPolytope, f: Face) -> list[LogweightVector]:
    """All elements of ``K`` fixing a point lying over the relative interior of ``f``."""
    D.require_connected()
    if D.mode == "circle":
        support = [i for i in range(D.N) if i not in f.active_facets]
        g = 0
        for i in support:
            g = gcd(g, D.weights[i][0])
        return sorted(element(D, r) for r in lattice_coset_reps([[g]]))
    # polytope mode: the vertex group of a vertex of f, restricted to f's facets
    act = sorted(f.vertex_facets[0])
    M = IntegerMatrix.from_columns([D.varpi.column(i) for i in act], D.d)
    out = []
    for c in lattice_coset_reps(M):
        a = [Fraction(0)] * D.N
        for i, x in zip(act, c):
            a[i] = x
        if any(a[i] for i in act if i not in f.active_facets):
            continue
        out.append(from_logweights(D, a))
    return sorted(out)


def vertex_faces(P: LabeledPolytope) -> list[Face]:
    return [face_from_facets(P, act) for act in P.vertex_facets]


def enumerate_box(D: DelzantData, P: LabeledPolytope) -> list[LogweightVector]:
    """Finite stabilizers: the union of the vertex stabilizers, sorted."""
    D.require_connected()
    box = set()
    for v in vertex_faces(P):
        box.update(stabilizer_of_face(D, P, v))
    return sorted(box)


# ---------------------------------------------------------------------------
# Sector data and the group Gamma


@dataclass(frozen=True)
class SectorData:
    g: LogweightVector
    age: Fraction
    fixed_coords: frozenset[int]
    sector_face: Face | None
    in_box: bool

    @property
    def degree_shift(self) -> Fraction:
        return 2 * self.age

    @property
    def moving_coords(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.g.a) if x)


def sector_data(D: DelzantData, P: LabeledPolytope, g: LogweightVector, in_box: bool | None = None) -> SectorData:
    age = sum(g.a, Fraction(0))
    fixed = frozenset(i for i, x in enumerate(g.a) if x == 0)
    moving = [i for i in range(D.N) if i not in fixed]
    face = face_from_facets(P, moving)
    if in_box is None:
        in_box = face is not None
    return SectorData(g, age, fixed, face, in_box)


@dataclass(frozen=True)
class GammaTable:
    box: tuple[SectorData, ...]
    gamma: tuple[SectorData, ...]
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "_index", {s.g: k for k, s in enumerate(self.gamma)})

    def __len__(self):
        return len(self.gamma)

    def index(self, g: LogweightVector) -> int:
        return self._index[g]

    def sector(self, g: LogweightVector) -> SectorData:
        return self.gamma[self._index[g]]

    @property
    def elements(self) -> list[LogweightVector]:
        return [s.g for s in self.gamma]

    @property
    def twisted(self) -> list[SectorData]:
        """Nontrivial sectors in canonical order."""
        return [s for s in self.gamma if not s.g.is_identity]


def gamma_group(
    D: DelzantData,
    P: LabeledPolytope,
    box: Iterable[LogweightVector] | None = None,
    max_order: int | None = None,
) -> GammaTable:
    """Close the box under the group law; sectors in lexicographic order.

    With ``max_order`` set, a group with more elements raises ``UnsupportedError``.
    """
    D.require_connected()
    box = sorted(set(enumerate_box(D, P) if box is None else box) | {identity(D)})
    gens = [g for g in box if not g.is_identity]
    seen = {identity(D)}
    frontier = [identity(D)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(D, x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
            if max_order is not None and len(seen) > max_order:
                raise UnsupportedError(f"Gamma has more than {max_order} elements")
        frontier = nxt
    box_set = set(box)
    gamma = tuple(sector_data(D, P, g, in_box=g in box_set) for g in sorted(seen))
    exponent = lcm(*(g.order for g in seen))
    return GammaTable(
        box=tuple(s for s in gamma if s.in_box),
        gamma=gamma,
        exponent=exponent,
    )


def parse_element(D: DelzantData, G: GammaTable, text: str) -> LogweightVector:
    """CLI element syntax: ``k/n`` (a phase) in circle mode, a comma-separated
    logweight vector in polytope mode."""
    text = text.strip()
    try:
        if D.mode == "circle":
            g = element(D, [Fraction(text)])
        else:
            parts = [Fraction(t) for t in text.split(",")]
            if len(parts) != D.N:
                raise InputError(f"expected {D.N} logweights, got {len(parts)}")
            g = from_logweights(D, parts)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"cannot parse group element {text!r}") from None
    if g not in G._index:
        raise InputError(f"element {text!r} is not in the group generated by finite stabilizers")
    return g


def element_name(D: DelzantData, g: LogweightVector) -> str:
    if D.mode == "circle":
        return _fmt(g.theta[0])
    return g.label()
