"""The quotient construction: from a labeled polytope (or a circle weight
vector) to the subtorus ``K`` of ``T^N`` and its weights on ``C^N``.

Conventions
-----------
``varpi`` is the ``d x N`` integer matrix whose ``i``-th column is
``m_i * y_i``.  ``K`` is the kernel of ``T^N -> T^d`` induced by ``varpi``; its
character lattice is ``Z^N / varpi^T Z^d``.  A basis of that lattice is fixed
by the Smith normal form of ``varpi^T``, and ``weights[i]`` is the image of the
``i``-th standard character in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, UnsupportedError
from .exact_algebra import IntegerMatrix, content, inverse_q, smith_normal_form
from .polytope import (
    LabeledPolytope,
    format_polytope,
    make_polytope,
    parse_polytope,
    strip_comments,
)


@dataclass(frozen=True)
class DelzantData:
    mode: str  # "polytope" or "circle"
    N: int
    d: int
    varpi: IntegerMatrix
    k_rank: int
    weights: tuple[tuple[int, ...], ...]
    connected: bool
    moment_offsets: tuple[Fraction, ...]
    component_group: tuple[int, ...] = ()
    # k x N integer matrix sending a logweight vector of an element of K to
    # its coordinates in R^k / Z^k; None in circle mode, where phases are primary
    character_section: IntegerMatrix | None = None

    def require_connected(self) -> None:
        if not self.connected:
            raise UnsupportedError(
                "K is disconnected (component group "
                + " x ".join(f"Z/{t}" for t in self.component_group)
                + "); twisted-sector products are not available for this input"
            )

    @property
    def is_circle(self) -> bool:
        return self.k_rank == 1

    def weight_matrix(self) -> IntegerMatrix:
        """``N x k`` matrix whose rows are the weights."""
        return IntegerMatrix.from_rows(self.weights, self.k_rank)


@dataclass(frozen=True)
class CircleAction:
    weights: tuple[int, ...]

    def __post_init__(self):
        if not self.weights:
            raise InputError("at least one weight is required")
        if any((not isinstance(b, int)) or b < 1 for b in self.weights):
            raise InputError("weights must be positive")


def _to_int_matrix(rows) -> list[list[int]]:
    out = []
    for r in rows:
        row = []
        for x in r:
            if Fraction(x).denominator != 1:
                raise ArithmeticError("expected an integral inverse")
            row.append(int(x))
        out.append(row)
    return out


def delzant_lift(P: LabeledPolytope) -> DelzantData:
    """Lift a labeled polytope to the torus ``K`` acting on ``C^N``."""
    N, d = P.N, P.dim
    cols = [[m * x for x in y] for y, m in zip(P.normals, P.labels)]
    varpi = IntegerMatrix.from_columns(cols, d)
    snf = smith_normal_form(varpi.T)
    factors = snf.invariant_factors
    component_group = tuple(f for f in factors if f > 1)
    connected = len(factors) == d and not component_group
    k = N - d
    U = snf.U.tolist()
    bottom = [U[r] for r in range(d, N)]
    Uinv = _to_int_matrix(inverse_q(U)) if N else []
    section = [[Uinv[i][c] for i in range(N)] for c in range(d, N)]
    if k == 1 and all(x <= 0 for x in bottom[0]):
        bottom = [[-x for x in bottom[0]]]
        section = [[-x for x in section[0]]]
    weights = tuple(tuple(bottom[r][i] for r in range(k)) for i in range(N))
    return DelzantData(
        mode="polytope",
        N=N,
        d=d,
        varpi=varpi,
        k_rank=k,
        weights=weights,
        connected=connected,
        moment_offsets=tuple(P.offsets),
        component_group=component_group,
        character_section=IntegerMatrix.from_rows(section, N),
    )


def circle_action_data(b: CircleAction | Sequence[int], level=1) -> DelzantData:
    """Direct encoding of ``S^1`` acting on ``C^N`` with positive weights ``b``."""
    if not isinstance(b, CircleAction):
        b = CircleAction(tuple(b))
    level = Fraction(level)
    if level <= 0:
        raise InputError("level must be positive")
    N = len(b.weights)
    varpi = _simplex_varpi(b.weights)
    return DelzantData(
        mode="circle",
        N=N,
        d=N - 1,
        varpi=varpi,
        k_rank=1,
        weights=tuple((w,) for w in b.weights),
        connected=True,
        moment_offsets=(level,),
    )


def _simplex_varpi(weights: Sequence[int]) -> IntegerMatrix:
    """A surjection ``Z^N -> Z^{N-1}`` with kernel spanned by the primitive part of ``weights``."""
    g = content(weights)
    prim = [w // g for w in weights]
    N = len(prim)
    snf = smith_normal_form(IntegerMatrix.from_columns([prim]))
    U = snf.U.tolist()
    return IntegerMatrix.from_rows(U[1:], N)


def circle_simplex(b: CircleAction | Sequence[int], level=1) -> LabeledPolytope:
    """The moment polytope ``{sum b_i x_i = level, x >= 0}`` as a labeled polytope.

    Facet ``i`` is ``{x_i = 0}``.  Labels absorb any non-primitive columns of
    the chosen surjection, so the lift of this polytope has ``K`` the circle
    acting with the primitive part of ``b``.
    """
    weights = b.weights if isinstance(b, CircleAction) else tuple(b)
    level = Fraction(level)
    g = content(weights)
    prim = [w // g for w in weights]
    varpi = _simplex_varpi(weights)
    N = len(prim)
    normals, labels = [], []
    for i in range(N):
        col = varpi.column(i)
        m = content(col) or 1
        normals.append(tuple(x // m for x in col))
        labels.append(m)
    # x_i = <alpha, varpi e_i> - eta'_i with sum prim_i x_i = level / g
    eta = [Fraction(0)] * N
    eta[0] = -level / g / prim[0]
    offsets = [e / m for e, m in zip(eta, labels)]
    return make_polytope(normals, offsets, labels)


# ---------------------------------------------------------------------------
# Input files


def parse_circle(text: str) -> tuple[CircleAction, Fraction]:
    weights = None
    level = Fraction(1)
    for line in strip_comments(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "mode":
            if rest != "circle":
                raise InputError(f"expected 'mode circle', got 'mode {rest}'")
        elif key == "weights":
            try:
                vals = [Fraction(t) for t in rest.split()]
            except (ValueError, ZeroDivisionError):
                raise InputError(f"bad weights line: {line!r}") from None
            if any(v.denominator != 1 for v in vals):
                raise InputError("weights must be integers")
            weights = tuple(int(v) for v in vals)
        elif key == "level":
            try:
                level = Fraction(rest)
            except (ValueError, ZeroDivisionError):
                raise InputError(f"bad level: {rest!r}") from None
            if level <= 0:
                raise InputError("level must be positive")
        else:
            raise InputError(f"unknown directive {key!r}")
    if weights is None:
        raise InputError("missing 'weights' line")
    return CircleAction(weights), level


def input_mode(text: str) -> str:
    for line in strip_comments(text):
        key, _, rest = line.partition(" ")
        if key == "mode":
            mode = rest.strip()
            if mode not in ("circle", "polytope"):
                raise InputError(f"unknown mode {mode!r}")
            return mode
    raise InputError("missing 'mode' line")


def load_input(text: str) -> tuple[DelzantData, LabeledPolytope]:
    """Parse either input format into ``(DelzantData, moment polytope)``."""
    if input_mode(text) == "circle":
        b, level = parse_circle(text)
        return circle_action_data(b, level), circle_simplex(b, level)
    P = parse_polytope(text)
    return delzant_lift(P), P


def format_input(D: DelzantData, P: LabeledPolytope) -> str:
    """Canonical echo of a parsed input; parsing it back reproduces the same data."""
    if D.mode == "circle":
        level = D.moment_offsets[0]
        lv = str(level.numerator) if level.denominator == 1 else f"{level.numerator}/{level.denominator}"
        return f"mode circle\nweights {' '.join(str(w[0]) for w in D.weights)}\nlevel {lv}\n"
    return format_polytope(P)
