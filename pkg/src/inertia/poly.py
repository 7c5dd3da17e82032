"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """A polynomial in ``nvars`` variables, stored as ``{exponents: coefficient}``.

    Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean = {}
        for mono, c in (terms or {}).items():
            if c:
                if len(mono) != nvars:
                    raise ValueError("monomial length does not match nvars")
                clean[tuple(mono)] = _clean(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, nvars: int, c) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> Poly:
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> Poly:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> Poly:
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), 0)

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def weighted_degrees(self, weights: Sequence) -> set:
        return {sum((Fraction(w) * e for w, e in zip(weights, m)), Fraction(0)) for m in self.terms}

    def is_homogeneous(self, weights: Sequence) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def substitute(self, images: Sequence[Poly], nvars: int | None = None) -> Poly:
        """Compose: variable ``i`` is replaced by ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else nvars
        if target is None:
            raise ValueError("target ring size unknown")
        out = Poly(target)
        for mono, c in self.terms.items():
            term = Poly.const(target, c)
            for img, e in zip(images, mono):
                if e:
                    term = term * img**e
            out = out + term
        return out

    def embed(self, nvars: int, positions: Sequence[int]) -> Poly:
        """Reinterpret in a larger ring, sending variable ``i`` to ``positions[i]``."""
        out = {}
        for mono, c in self.terms.items():
            e = [0] * nvars
            for p, k in zip(positions, mono):
                e[p] += k
            out[tuple(e)] = c
        return Poly(nvars, out)

    def monomial_quotient(self, other: Poly) -> Monomial | None:
        """Return ``m`` if ``self == x^m * other`` for a monomial ``x^m``, else ``None``."""
        if not self.terms or len(self.terms) != len(other.terms):
            return None
        lead_s, lead_o = max(self.terms), max(other.terms)
        shift = tuple(a - b for a, b in zip(lead_s, lead_o))
        if any(s < 0 for s in shift):
            return None
        for m, c in other.terms.items():
            if self.terms.get(tuple(a + b for a, b in zip(m, shift))) != c:
                return None
        return shift

    def render(self, names: Sequence[str], key=None) -> str:
        """Human-readable form; ``key`` orders the monomials (default: total degree, descending)."""
        if not self.terms:
            return "0"
        pieces = []
        key = key or (lambda m: (-sum(m), tuple(-e for e in m)))
        for mono in sorted(self.terms, key=key):
            c = self.terms[mono]
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            neg = c < 0
            if not pieces:
                pieces.append(("-" if neg else "") + text)
            else:
                pieces.append((" - " if neg else " + ") + text)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"


def monomials_of_degree(nvars: int, degree: int) -> Iterable[Monomial]:
    """All exponent vectors in ``nvars`` variables with total degree ``degree``."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest
