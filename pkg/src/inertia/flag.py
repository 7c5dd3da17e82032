"""Finite stabilizers of the maximal torus on a flag manifold ``K/T``.

Root data are generated from Cartan matrices (Bourbaki numbering).  Roots are
written in simple-root coordinates; the Weyl alcove vertices in coordinates
``x_j = alpha_j(t)``.  Torus elements of the simply connected group are stored
in coroot coordinates modulo 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import InputError, UnsupportedError
from .exact_algebra import IntegerMatrix, cokernel_structure, inverse_q, lcm, solve_q

WEYL_EXCEPTIONAL = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}
ROOT_COUNT_EXCEPTIONAL = {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}
ENUMERATION_LIMIT = 5000


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """``A[i][j] = <alpha_i^vee, alpha_j>``."""
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        A[i][j], A[j][i] = aij, aji

    if family == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif family in ("B", "C"):
        for i in range(n - 2):
            bond(i, i + 1)
        # B: last root short; C: last root long
        bond(n - 2, n - 1, -1, -2) if family == "B" else bond(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -3, -1)
    return A


def _check_type(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)
    if family == "A" and rank == 0:
        return
    if not ok or rank > 8:
        raise UnsupportedError(f"unsupported root system type {family}{rank}")


def weyl_order(family: str, rank: int) -> int:
    n = rank
    if family == "A":
        return factorial(n + 1)
    if family in ("B", "C"):
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    return WEYL_EXCEPTIONAL[f"{family}{rank}"]


def root_count(family: str, rank: int) -> int:
    n = rank
    if family == "A":
        return n * (n + 1)
    if family in ("B", "C"):
        return 2 * n * n
    if family == "D":
        return 2 * n * (n - 1)
    return ROOT_COUNT_EXCEPTIONAL[f"{family}{rank}"]


def _symmetrizer(A: list[list[int]]) -> list[Fraction]:
    """Squared root lengths ``(alpha_i, alpha_i)`` up to scale, per connected component."""
    n = len(A)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if A[i][j] and i != j and d[j] is None:
                    # (a_i, a_j) = A[i][j] d_i / 2 = A[j][i] d_j / 2
                    d[j] = d[i] * A[i][j] / A[j][i]
                    stack.append(j)
    return d


def generate_roots(A: list[list[int]]) -> list[tuple[int, ...]]:
    """All roots in simple-root coordinates, closed under simple reflections."""
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for k in range(n):
                pairing = sum(A[k][j] * beta[j] for j in range(n))
                if pairing:
                    gamma = tuple(b - pairing * int(j == k) for j, b in enumerate(beta))
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    return sorted(seen, key=lambda r: (-sum(r), tuple(-x for x in r)))


@dataclass(frozen=True)
class RootSystemData:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    # simple roots and roots in fundamental-weight coordinates (an integral realization)
    simple_roots: tuple[tuple[int, ...], ...]
    all_roots: tuple[tuple[int, ...], ...]
    lowest_root: tuple[int, ...]
    marks: tuple[int, ...]
    weyl_order: int
    root_coordinates: tuple[tuple[int, ...], ...]  # the same roots in simple-root coordinates

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def root_system_data(family: str, rank: int | None = None) -> RootSystemData:
    if rank is None:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", family)
        if not m:
            raise InputError(f"cannot parse root system type {family!r}")
        family, rank = m.group(1), int(m.group(2))
    family = family.upper()
    _check_type(family, rank)
    A = cartan_matrix(family, rank)
    n = rank
    if n == 0:
        return RootSystemData(family, 0, (), (), (), (), (), 1, ())
    coords = generate_roots(A)
    if len(coords) != root_count(family, rank):
        raise AssertionError("root closure disagrees with the classification")

    def weight(beta):
        # alpha_j = sum_i A[i][j] varpi_i
        return tuple(sum(A[i][j] * beta[j] for j in range(n)) for i in range(n))

    simple = tuple(weight(tuple(int(i == j) for j in range(n))) for i in range(n))
    roots = tuple(weight(b) for b in coords)
    highest = coords[0]
    lowest = weight(tuple(-x for x in highest))
    # omega + sum_a c_a alpha = 0
    c = solve_q([[simple[j][i] for j in range(n)] for i in range(n)], [-x for x in lowest])
    marks = tuple(int(x) for x in c)
    return RootSystemData(
        family=family,
        rank=rank,
        cartan=tuple(tuple(r) for r in A),
        simple_roots=simple,
        all_roots=roots,
        lowest_root=lowest,
        marks=marks,
        weyl_order=weyl_order(family, rank),
        root_coordinates=tuple(coords),
    )


# ---------------------------------------------------------------------------
# Recognizing subsystems


def _components(A: list[list[int]]) -> list[list[int]]:
    n = len(A)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and A[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def classify_cartan(A: list[list[int]]) -> list[tuple[str, int]]:
    """Decompose a Cartan matrix into irreducible types, largest first."""
    types = []
    for comp in _components(A):
        B = [[A[i][j] for j in comp] for i in comp]
        types.append(_classify_irreducible(B))
    return sorted(types, key=lambda t: (-t[1], t[0]))


def _classify_irreducible(B: list[list[int]]) -> tuple[str, int]:
    n = len(B)
    if n == 1:
        return ("A", 1)
    off = [(i, j) for i in range(n) for j in range(n) if i != j and B[i][j]]
    laced = max(B[i][j] * B[j][i] for i, j in off)
    degree = [sum(1 for j in range(n) if j != i and B[i][j]) for i in range(n)]
    if laced == 3:
        return ("G", 2)
    if laced == 2:
        if n == 2:
            return ("B", 2)
        i, j = next((i, j) for i, j in off if B[i][j] * B[j][i] == 2)
        if degree[i] == 2 and degree[j] == 2:
            return ("F", 4)
        d = _symmetrizer(B)
        short = sum(1 for x in d if x == min(d))
        return ("B", n) if short == 1 else ("C", n)
    if max(degree) <= 2:
        return ("A", n)
    branch = degree.index(3)
    arms = []
    for j in range(n):
        if B[branch][j] and j != branch:
            length, prev, cur = 1, branch, j
            while True:
                nxt = [k for k in range(n) if k not in (prev, cur) and B[cur][k]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[0] == arms[1] == 1:
        return ("D", n)
    return ("E", n)


def type_label(types: list[tuple[str, int]]) -> str:
    return "x".join(f"{f}{r}" for f, r in types) if types else "T"


_GROUP_NAMES = {"A": lambda n: f"SU({n + 1})", "B": lambda n: f"Spin({2 * n + 1})", "C": lambda n: f"Sp({n})",
                "D": lambda n: f"Spin({2 * n})", "G": lambda n: "G2", "F": lambda n: "F4", "E": lambda n: f"E{n}"}


def group_name(types: list[tuple[str, int]]) -> str:
    """Human-readable name of the compact group with the given root type."""
    if types == [("A", 1), ("A", 1)]:
        return "SO(4)"
    if not types:
        return "T"
    return " x ".join(_GROUP_NAMES[f](r) for f, r in types)


# ---------------------------------------------------------------------------
# Special classes


@dataclass(frozen=True)
class SpecialClass:
    vertex: int  # 0 for the lowest-root node, j >= 1 for alpha_j
    alcove_vertex: tuple[Fraction, ...]
    adjoint_order: int
    centralizer_roots: tuple[tuple[int, ...], ...]  # simple roots of the centralizer, simple-root coordinates
    centralizer_type: str
    centralizer_name: str
    centralizer_weyl_order: int
    component_count: int
    centralizer_semisimple: bool

    @property
    def central(self) -> bool:
        return self.adjoint_order == 1


@dataclass(frozen=True)
class SpecialClassTable:
    root_system: RootSystemData
    entries: tuple[SpecialClass, ...]


def _affine_nodes(R: RootSystemData) -> list[tuple[int, ...]]:
    """Affine diagram nodes in simple-root coordinates: lowest root, then simple roots."""
    n = R.rank
    return [tuple(-x for x in R.root_coordinates[0])] + [tuple(int(i == j) for j in range(n)) for i in range(n)]


def _cartan_of(R: RootSystemData, roots: list[tuple[int, ...]]) -> list[list[int]]:
    d = _symmetrizer([list(r) for r in R.cartan])
    n = R.rank

    def inner(a, b):
        # (alpha_i, alpha_j) = A[i][j] d_i / 2
        return sum(a[i] * b[j] * R.cartan[i][j] * d[i] / 2 for i in range(n) for j in range(n))

    return [[int(2 * inner(a, b) / inner(a, a)) for b in roots] for a in roots]


def special_classes(R: RootSystemData) -> SpecialClassTable:
    n = R.rank
    if n == 0:
        return SpecialClassTable(R, (SpecialClass(0, (), 1, (), "T", "T", 1, 1, True),))
    nodes = _affine_nodes(R)
    marks = (1,) + R.marks
    entries = []
    for v in range(n + 1):
        x = tuple(Fraction(int(j + 1 == v), marks[v]) for j in range(n))
        others = [nodes[i] for i in range(n + 1) if i != v]
        # the roots integral on t are generated by the remaining affine nodes
        A = _cartan_of(R, others)
        types = classify_cartan(A)
        wt = 1
        for f, r in types:
            wt *= weyl_order(f, r)
        entries.append(
            SpecialClass(
                vertex=v,
                alcove_vertex=x,
                adjoint_order=marks[v],
                centralizer_roots=tuple(others),
                centralizer_type=type_label(types),
                centralizer_name=group_name(types),
                centralizer_weyl_order=wt,
                component_count=R.weyl_order // wt,
                centralizer_semisimple=sum(r for _, r in types) == n,
            )
        )
    return SpecialClassTable(R, tuple(entries))


# ---------------------------------------------------------------------------
# Torus elements and the generated group


def _to_coroot(R: RootSystemData, x) -> tuple[Fraction, ...]:
    # x_j = sum_i y_i A[i][j]
    n = R.rank
    At = [[R.cartan[i][j] for i in range(n)] for j in range(n)]
    y = solve_q(At, list(x))
    return tuple(Fraction(v) % 1 for v in y)


def weyl_orbit(R: RootSystemData, y: tuple[Fraction, ...]) -> list[tuple[Fraction, ...]]:
    """Orbit of a torus element (coroot coordinates mod 1) under the Weyl group."""
    den = lcm(*(v.denominator for v in y))
    orbit = _orbit_scaled(R, tuple(int(v * den) % den for v in y), den)
    return sorted(tuple(Fraction(v, den) for v in p) for p in orbit)


def _orbit_scaled(R: RootSystemData, y: tuple[int, ...], den: int) -> set[tuple[int, ...]]:
    # s_k: y_k -> y_k - alpha_k(t), with alpha_k(t) = sum_i y_i A[i][k]
    n = R.rank
    cols = [[(i, R.cartan[i][k]) for i in range(n) if R.cartan[i][k]] for k in range(n)]
    seen = {y}
    frontier = [y]
    while frontier:
        nxt = []
        for p in frontier:
            for k in range(n):
                xk = sum(p[i] * a for i, a in cols[k]) % den
                if not xk:
                    continue
                q = p[:k] + ((p[k] - xk) % den,) + p[k + 1 :]
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class FlagGamma:
    stabilizer_count: int
    invariant_factors: tuple[int, ...]
    order: int
    # coroot coordinates mod 1; listed only when small
    finite_stabilizers: tuple[tuple[Fraction, ...], ...] | None
    elements: tuple[tuple[Fraction, ...], ...] | None

    def describe(self) -> str:
        return " x ".join(f"Z{t}" for t in self.invariant_factors) or "1"


def _hnf(rows: list[list[int]], n: int) -> list[list[int]]:
    """Row-style Hermite form of a full-rank integer lattice in ``Z^n``."""
    rows = [list(r) for r in rows if any(r)]
    out = []
    for col in range(n):
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        rows = [r for r in rest if any(r)]
    for i in range(n):
        for j in range(i):
            q = out[j][i] // out[i][i]
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], out[i])]
    return out


def _in_lattice(H: list[list[int]], v: list[int]) -> bool:
    v = list(v)
    for i, row in enumerate(H):
        if v[i] % row[i]:
            return False
        q = v[i] // row[i]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def gamma_flag(R: RootSystemData, table: SpecialClassTable | None = None) -> FlagGamma:
    """Weyl conjugates of the alcove vertices in ``T`` of the simply connected
    group, and the subgroup they generate."""
    table = table or special_classes(R)
    n = R.rank
    if n == 0:
        return FlagGamma(1, (), 1, ((),), ((),))
    verts = [_to_coroot(R, e.alcove_vertex) for e in table.entries]
    den = lcm(*(v.denominator for p in verts for v in p))
    stabs: set[tuple[int, ...]] = set()
    for y in verts:
        stabs.update(_orbit_scaled(R, tuple(int(v * den) % den for v in y), den))
    # the group is L / Z^n with L = Z^n + span(stabs); work with den * L
    H = _hnf([[den * int(i == j) for j in range(n)] for i in range(n)], n)
    for p in sorted(stabs):
        if not _in_lattice(H, list(p)):
            H = _hnf(H + [list(p)], n)
    Hinv = inverse_q(H)
    X = [[int(den * Hinv[i][j]) for j in range(n)] for i in range(n)]
    _, torsion = cokernel_structure(IntegerMatrix.from_rows(X, n))
    order = 1
    for t in torsion:
        order *= t

    def unscale(p):
        return tuple(Fraction(v, den) for v in p)

    listed = tuple(sorted(unscale(p) for p in stabs)) if len(stabs) <= ENUMERATION_LIMIT else None
    elements = None
    if order <= ENUMERATION_LIMIT:
        gens = sorted(stabs)
        seen = {(0,) * n}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple((a + b) % den for a, b in zip(p, g))
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        if len(seen) != order:
            raise AssertionError("enumerated group disagrees with its lattice description")
        elements = tuple(sorted(unscale(p) for p in seen))
    return FlagGamma(len(stabs), tuple(torsion), order, listed, elements)
