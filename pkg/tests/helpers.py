"""Shared fixtures: golden inputs, random input generators and a brute-force
Hilbert function of a graded presentation."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, gcd, lcm

from inertia import UnsupportedError, circle_action_data, circle_simplex, delzant_lift, gamma_group, make_polytope
from inertia.exact_algebra import IntegerMatrix, sparse_rank_q
from inertia.poly import Poly
from inertia.sectors import from_logweights

F = Fraction


def circle(weights, level=1):
    D = circle_action_data(weights, level)
    P = circle_simplex(weights, level)
    return D, P, gamma_group(D, P)


def polytope(normals, offsets, labels):
    P = make_polytope(normals, offsets, labels)
    D = delzant_lift(P)
    return D, P, gamma_group(D, P)


def by_logweights(D, G, *rows):
    return [from_logweights(D, [F(x) for x in r]) for r in rows]


# ---------------------------------------------------------------------------
# random inputs


def _hull(points):
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def random_polygon(rng: random.Random, size=4, max_label=3):
    """A lattice polygon with inward primitive normals and random labels, as
    ``(normals, offsets, labels)``."""
    while True:
        pts = [(rng.randint(0, size), rng.randint(0, size)) for _ in range(rng.randint(3, 6))]
        hull = _hull(pts)
        if len(hull) >= 3:
            break
    normals, offsets = [], []
    for p, q in zip(hull, hull[1:] + hull[:1]):
        dx, dy = q[0] - p[0], q[1] - p[1]
        g = gcd(dx, dy)
        n = (-dy // g, dx // g)  # counterclockwise hull: inward normal
        normals.append(n)
        offsets.append(n[0] * p[0] + n[1] * p[1])
    labels = [rng.randint(1, max_label) for _ in normals]
    return normals, offsets, labels


def random_polytope_input(rng: random.Random, max_gamma=36):
    while True:
        normals, offsets, labels = random_polygon(rng)
        P = make_polytope(normals, offsets, labels)
        D = delzant_lift(P)
        if not D.connected or max(_vertex_orders(D, P)) > max_gamma:
            continue
        try:
            G = gamma_group(D, P, max_order=max_gamma)
        except UnsupportedError:
            continue
        return (normals, offsets, labels), (D, P, G)


def _vertex_orders(D, P):
    for act in P.vertex_facets:
        cols = [D.varpi.column(i) for i in sorted(act)]
        yield abs(IntegerMatrix.from_columns(cols, D.d).det())


def random_circle_input(rng: random.Random, max_gamma=36):
    while True:
        weights = [rng.randint(1, 8) for _ in range(rng.randint(2, 5))]
        if lcm(*weights) > max_gamma:
            continue
        D, P, G = circle(weights)
        if len(G) <= max_gamma:
            return weights, (D, P, G)


# ---------------------------------------------------------------------------
# brute-force Hilbert function of Q[x]/(relations), variables of rational degree


class TooMany(Exception):
    pass


def monomials_up_to(degrees, cutoff, limit=None):
    """All exponent vectors of weighted degree ``<= cutoff``, grouped by degree.

    Raises ``TooMany`` once more than ``limit`` have been produced.
    """
    out: dict[Fraction, list[tuple[int, ...]]] = {}
    count = 0

    def rec(i, mono, deg):
        nonlocal count
        if i == len(degrees):
            out.setdefault(deg, []).append(tuple(mono))
            count += 1
            if limit is not None and count > limit:
                raise TooMany
            return
        e = 0
        while deg + e * degrees[i] <= cutoff:
            mono.append(e)
            rec(i + 1, mono, deg + e * degrees[i])
            mono.pop()
            e += 1

    rec(0, [], Fraction(0))
    return out


def presentation_hilbert(degrees, relations, cutoff):
    """Q-dimension of every degree slice of ``Q[x]/(relations)`` up to ``cutoff``,
    spanning the ideal by ``relation * monomial``."""
    degrees = [Fraction(d) for d in degrees]
    if any(d <= 0 for d in degrees):
        raise ValueError("generators of positive degree only")
    monos = monomials_up_to(degrees, cutoff)
    index = {deg: {m: n for n, m in enumerate(ms)} for deg, ms in monos.items()}
    rows: dict[Fraction, list[dict]] = {deg: [] for deg in monos}
    for r in relations:
        (rdeg,) = r.weighted_degrees(degrees)
        for mdeg, ms in monos.items():
            total = rdeg + mdeg
            if total > cutoff:
                continue
            pos = index[total]
            for m in ms:
                p = r * Poly.monomial(m)
                rows[total].append({pos[k]: Fraction(v) for k, v in p.terms.items()})
    out = {}
    for deg, ms in monos.items():
        dim = len(ms) - sparse_rank_q(rows[deg])
        if dim:
            out[deg] = dim
    return dict(sorted(out.items()))


def h_from_f(f):
    """h-vector of a simple polytope from its f-vector, ``f[k]`` = number of k-faces."""
    f = list(f) + [1]
    d = len(f) - 1
    return [sum((-1) ** (k - i) * comb(k, i) * f[k] for k in range(i, d + 1)) for i in range(d + 1)]
