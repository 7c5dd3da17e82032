"""Labeled simple rational polytopes and their face lattices.

A labeled polytope is ``{x : <x, y_i> >= eta_i}`` with primitive inward integer
normals ``y_i`` and a positive integer label ``m_i`` on each facet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .exact_algebra import content, nullspace_q, rank_q, solve_q


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: Fraction
    label: int = 1


@dataclass(frozen=True)
class Face:
    """Nonempty face cut out by ``active_facets``.

    ``vertex_facets[k]`` is the full active set of ``vertex_set[k]``.
    """

    active_facets: frozenset[int]
    dim: int
    vertex_set: tuple[tuple[Fraction, ...], ...]
    vertex_facets: tuple[frozenset[int], ...]
    ambient_dim: int

    @property
    def is_vertex(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True)
class LabeledPolytope:
    dim: int
    facets: tuple[Facet, ...]
    vertices: tuple[tuple[Fraction, ...], ...] = field(init=False, compare=False, repr=False)
    vertex_facets: tuple[frozenset[int], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        _validate_facets(self.dim, self.facets)
        pts, acts = _vertices(self.dim, self.facets)
        object.__setattr__(self, "vertices", pts)
        object.__setattr__(self, "vertex_facets", acts)

    @property
    def N(self) -> int:
        return len(self.facets)

    @property
    def normals(self) -> list[tuple[int, ...]]:
        return [f.normal for f in self.facets]

    @property
    def labels(self) -> list[int]:
        return [f.label for f in self.facets]

    @property
    def offsets(self) -> list[Fraction]:
        return [f.offset for f in self.facets]


def make_polytope(normals: Sequence[Sequence[int]], offsets: Sequence, labels: Sequence[int] | None = None) -> LabeledPolytope:
    """Build and validate a labeled polytope from its facet data."""
    if not normals:
        raise InputError("polytope needs at least one facet")
    d = len(normals[0])
    labels = labels or [1] * len(normals)
    facets = tuple(
        Facet(tuple(int(x) for x in y), Fraction(eta), int(m)) for y, eta, m in zip(normals, offsets, labels)
    )
    return LabeledPolytope(d, facets)


def _validate_facets(d: int, facets: Sequence[Facet]) -> None:
    if d < 0:
        raise InputError("dimension must be nonnegative")
    for i, f in enumerate(facets):
        if len(f.normal) != d:
            raise InputError(f"facet {i}: normal has {len(f.normal)} components, expected {d}")
        if f.label < 1:
            raise InputError(f"facet {i}: label must be a positive integer")
        if d and content(f.normal) != 1:
            raise InputError(f"facet {i}: normal not primitive")
    if d == 0:
        return
    Y = [list(f.normal) for f in facets]
    if rank_q(Y, d) < d:
        raise InputError("unbounded")
    # extreme rays of the recession cone {v : Y v >= 0} sit on d-1 tight constraints
    for S in itertools.combinations(range(len(facets)), d - 1):
        rows = [Y[i] for i in S]
        null = nullspace_q(rows, d)
        if len(null) != 1:
            continue
        r = null[0]
        vals = [sum(a * b for a, b in zip(y, r)) for y in Y]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            raise InputError("unbounded")


def _vertices(d: int, facets: Sequence[Facet]):
    N = len(facets)
    if d == 0:
        # a point; every facet inequality is vacuous
        return ((),), (frozenset(),)

    def slack(x, i):
        f = facets[i]
        return sum(a * b for a, b in zip(f.normal, x)) - f.offset

    found: dict[tuple, frozenset] = {}
    for S in itertools.combinations(range(N), d):
        x = solve_q([facets[i].normal for i in S], [facets[i].offset for i in S])
        if x is None:
            continue
        x = tuple(x)
        if x in found:
            continue
        if all(slack(x, i) >= 0 for i in range(N)):
            found[x] = frozenset(i for i in range(N) if slack(x, i) == 0)
    if not found:
        raise InputError("empty polytope")
    for x, act in found.items():
        if len(act) != d:
            raise InputError("not simple")
    used = set().union(*found.values())
    for i in range(N):
        if i not in used:
            raise InputError(f"facet {i}: redundant inequality (not a facet)")
    pts = sorted(found)
    return tuple(pts), tuple(found[p] for p in pts)


# ---------------------------------------------------------------------------
# Faces


def face_from_facets(P: LabeledPolytope, S: Iterable[int]) -> Face | None:
    """The face on which (at least) the facets in ``S`` are active, or ``None``."""
    S = frozenset(S)
    idx = [k for k, act in enumerate(P.vertex_facets) if S <= act]
    if not idx:
        return None
    active = frozenset.intersection(*(P.vertex_facets[k] for k in idx))
    return Face(
        active_facets=active,
        dim=P.dim - len(active),
        vertex_set=tuple(P.vertices[k] for k in idx),
        vertex_facets=tuple(P.vertex_facets[k] for k in idx),
        ambient_dim=P.dim,
    )


def enumerate_faces(P: LabeledPolytope) -> list[Face]:
    """All nonempty faces, from the polytope itself down to its vertices."""
    active_sets = set()
    for act in P.vertex_facets:
        for r in range(len(act) + 1):
            active_sets.update(frozenset(c) for c in itertools.combinations(sorted(act), r))
    faces = [face_from_facets(P, A) for A in active_sets]
    return sorted(faces, key=lambda f: (-f.dim, sorted(f.active_facets)))


def f_vector(P: LabeledPolytope) -> list[int]:
    counts = [0] * (P.dim + 1)
    for f in enumerate_faces(P):
        counts[f.dim] += 1
    return counts


def h_vector(F: Face) -> list[int]:
    """h-vector of a simple face by index counting under a generic functional."""
    k = F.dim
    pts = F.vertex_set
    if k == 0:
        return [1]
    d = F.ambient_dim
    n = len(pts)
    adjacent = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if len(F.vertex_facets[a] & F.vertex_facets[b]) == d - 1
    ]
    bound = max((abs(x.numerator) * x.denominator for p in pts for x in p), default=1)
    M = 2 * bound + 1
    while True:
        weights = [M**j for j in range(d)]
        val = [sum(w * x for w, x in zip(weights, p)) for p in pts]
        if all(val[a] != val[b] for a, b in adjacent):
            break
        M += 1
    index = [0] * n
    for a, b in adjacent:
        if val[a] > val[b]:
            index[a] += 1
        else:
            index[b] += 1
    h = [0] * (k + 1)
    for i in index:
        h[i] += 1
    return h


# ---------------------------------------------------------------------------
# Text format


def _parse_number(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a number: {tok!r}") from None


def _parse_int(tok: str) -> int:
    x = _parse_number(tok)
    if x.denominator != 1:
        raise InputError(f"expected an integer, got {tok!r}")
    return int(x)


def strip_comments(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_polytope(text: str) -> LabeledPolytope:
    """Parse the line-oriented ``mode polytope`` format and validate the result."""
    d = None
    facets = []
    for line in strip_comments(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "mode":
            if rest != "polytope":
                raise InputError(f"expected 'mode polytope', got 'mode {rest}'")
        elif key == "dim":
            d = _parse_int(rest)
        elif key == "facet":
            parts = [p.strip() for p in rest.split(";")]
            if len(parts) not in (2, 3):
                raise InputError(f"facet line needs 'normal ; offset [; label]': {line!r}")
            normal = tuple(_parse_int(t) for t in parts[0].split())
            offset = _parse_number(parts[1])
            label = _parse_int(parts[2]) if len(parts) == 3 else 1
            facets.append(Facet(normal, offset, label))
        else:
            raise InputError(f"unknown directive {key!r}")
    if d is None:
        raise InputError("missing 'dim' line")
    if not facets:
        raise InputError("no facets given")
    return LabeledPolytope(d, tuple(facets))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_polytope(P: LabeledPolytope) -> str:
    lines = ["mode polytope", f"dim {P.dim}"]
    for f in P.facets:
        lines.append(f"facet {' '.join(map(str, f.normal))} ; {_fmt(f.offset)} ; {f.label}")
    return "\n".join(lines) + "\n"
