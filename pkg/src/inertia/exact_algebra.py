"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere. Matrices are small (desk scale), so the algorithms
are the plain dense ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix; ``nrows`` and ``ncols`` may be zero."""

    nrows: int
    ncols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise ValueError("entries do not match the stated shape")
        for row in self.entries:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"integer entries required, got {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> IntegerMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable[int]], nrows: int | None = None) -> IntegerMatrix:
        cols = [tuple(int(x) for x in c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls.from_rows(zip(*cols), len(cols)) if cols else cls(nrows, 0, ((),) * nrows)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntegerMatrix:
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], nrows: int | None = None, ncols: int | None = None) -> IntegerMatrix:
        nrows = len(diag) if nrows is None else nrows
        ncols = len(diag) if ncols is None else ncols
        return cls.from_rows(
            [[diag[i] if i == j and i < len(diag) else 0 for j in range(ncols)] for i in range(nrows)],
            ncols,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def T(self) -> IntegerMatrix:
        return IntegerMatrix(self.ncols, self.nrows, tuple(zip(*self.entries)) if self.nrows else ((),) * self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return IntegerMatrix(
            self.nrows,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product; works for int or Fraction vectors."""
        return tuple(sum((a * b for a, b in zip(r, v)), 0) for r in self.entries)

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det([list(r) for r in self.entries])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()!r})"


def as_matrix(M) -> IntegerMatrix:
    return M if isinstance(M, IntegerMatrix) else IntegerMatrix.from_rows(M)


def bareiss_det(A: list[list[int]]) -> int:
    """Fraction-free determinant."""
    A = [list(r) for r in A]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        r = min(self.D.shape)
        return tuple(self.D[i, i] for i in range(r) if self.D[i, i] != 0)


def smith_normal_form(M) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivoting picks the nonzero entry of smallest absolute value in the
    remaining block, ties going to the first in row-major order, so the
    output is a deterministic function of the input.
    """
    M = as_matrix(M)
    m, n = M.shape
    A = M.tolist()
    U = IntegerMatrix.identity(m).tolist()
    V = IntegerMatrix.identity(n).tolist()

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                # a smaller remainder appeared in row or column t; move it to the pivot
                cands = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cands, key=lambda c: (c[0], c[1], c[2]))
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1

    return SmithDecomposition(
        IntegerMatrix.from_rows(U, m),
        IntegerMatrix.from_rows(A, n),
        IntegerMatrix.from_rows(V, n),
    )


def cokernel_structure(M) -> tuple[int, list[int]]:
    """Isomorphism type of ``Z^rows / image(M)`` as ``(free_rank, torsion)``."""
    M = as_matrix(M)
    factors = smith_normal_form(M).invariant_factors
    return M.nrows - len(factors), [d for d in factors if d > 1]


def lattice_coset_reps(M) -> list[tuple[Fraction, ...]]:
    """Representatives ``M^{-1} b`` in ``[0,1)^d`` of the finite group ``Z^d / M Z^d``.

    Raises ``ValueError("infinite quotient")`` for singular ``M``.
    """
    M = as_matrix(M)
    if M.nrows != M.ncols:
        raise ValueError("lattice_coset_reps needs a square matrix")
    d = M.nrows
    if d == 0:
        return [()]
    if M.det() == 0:
        raise ValueError("infinite quotient")
    snf = smith_normal_form(M)
    diag = [snf.D[i, i] for i in range(d)]
    reps = set()
    for c in itertools.product(*(range(k) for k in diag)):
        scaled = [Fraction(ci, k) for ci, k in zip(c, diag)]
        reps.add(tuple(frac(x) for x in snf.V.apply(scaled)))
    return sorted(reps)


def frac(x) -> Fraction:
    """Fractional part in ``[0, 1)``."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x) if x else out
    return out


def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


# ---------------------------------------------------------------------------
# Rational elimination


def row_reduce(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns ``(nonzero rows, pivot columns)``."""
    A = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank_q(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(row_reduce(rows, ncols)[1])


def sparse_rank_q(rows: Iterable[Mapping]) -> int:
    """Rank over Q of sparse rows given as ``{column_key: value}`` mappings."""
    basis: dict = {}  # pivot key -> normalized row
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            key = min(r)
            if key in basis:
                f = r[key]
                for k, v in basis[key].items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                inv = 1 / r[key]
                basis[key] = {k: v * inv for k, v in r.items()}
                break
    return len(basis)


def nullspace_q(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` over Q."""
    R, pivots = row_reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_q(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """The unique solution of a square nonsingular system, else ``None``."""
    n = len(A)
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, pivots = row_reduce(aug, n + 1)
    if pivots != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def inverse_q(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(A)]
    R, pivots = row_reduce(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


# ---------------------------------------------------------------------------
# Graded abelian groups


def _chain_form(torsion: Iterable[int]) -> tuple[int, ...]:
    """Re-express a finite abelian group in divisibility-chain form."""
    torsion = [t for t in torsion if t > 1]
    if not torsion:
        return ()
    factors = smith_normal_form(IntegerMatrix.diagonal(torsion)).invariant_factors
    return tuple(d for d in factors if d > 1)


@dataclass(frozen=True)
class GradedAbelianGroup:
    """Per rational degree: ``(free_rank, torsion coefficients)``.

    Degrees absent from ``slices`` are zero groups.
    """

    slices: Mapping[Fraction, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        norm = {}
        for deg, (rank, tors) in self.slices.items():
            norm[Fraction(deg)] = (int(rank), _chain_form(tors))
        object.__setattr__(self, "slices", dict(sorted(norm.items())))

    def __getitem__(self, degree) -> tuple[int, tuple[int, ...]]:
        return self.slices.get(Fraction(degree), (0, ()))

    def degrees(self) -> list[Fraction]:
        return list(self.slices)

    def rational_rank(self, degree) -> int:
        return self[degree][0]

    def is_zero(self, degree) -> bool:
        rank, tors = self[degree]
        return rank == 0 and not tors

    def describe(self, degree) -> str:
        rank, tors = self[degree]
        parts = []
        if rank == 1:
            parts.append("Z")
        elif rank > 1:
            parts.append(f"Z^{rank}")
        parts += [f"Z/{t}" for t in tors]
        return " + ".join(parts) if parts else "0"


def graded_slice_group(
    generator_degrees: Sequence,
    relation_rows: Mapping | None = None,
) -> GradedAbelianGroup:
    """Degreewise cokernels of a graded presentation.

    ``generator_degrees`` lists the degree of every basis element; the basis of
    a slice is the subsequence of elements of that degree, in order.
    ``relation_rows[deg]`` is a list of integer rows over that slice's basis.
    """
    relation_rows = relation_rows or {}
    counts: dict[Fraction, int] = {}
    for deg in generator_degrees:
        deg = Fraction(deg)
        counts[deg] = counts.get(deg, 0) + 1
    slices = {}
    for deg, n in counts.items():
        rows = relation_rows.get(deg, [])
        for row in rows:
            if len(row) != n:
                raise ValueError(f"relation row of length {len(row)} in a slice of rank {n}")
        # cokernel of the map Z^{#relations} -> Z^n whose columns are the rows
        M = IntegerMatrix.from_rows(rows, n).T if rows else IntegerMatrix.zeros(n, 0)
        slices[deg] = cokernel_structure(M)
    return GradedAbelianGroup({d: (r, tuple(t)) for d, (r, t) in slices.items()})
