"""Univariate max-plus polynomials.

A polynomial is a dense coefficient vector in descending degree:
``coeffs[i]`` multiplies x^(d-i), so ``[0, 5, 8, 9]`` is
0*x^3 + 5*x^2 + 8*x + 9 tropically, i.e. max(3x, 5+2x, 8+x, 9).

Roots are the corners of the piecewise-linear graph.  They are read off
the upper concave hull of the points (exponent, coefficient): a hull
edge of slope s and horizontal length L contributes the finite root -s
with multiplicity L.  Trailing -inf coefficients give a root at -inf;
its multiplicity is taken to be the number of trailing -inf entries
(the slope of the graph at the far left), a convention the corner
definition itself leaves open.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import NEG_INF, ScalarLike, TropicalScalar, trop_div, trop_mul, trop_pow, trop_sum
from .errors import AssumptionViolated, InvalidPolynomial, UnsortedRoots


@dataclass(frozen=True)
class TropicalPolynomial:
    coeffs: tuple[TropicalScalar, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidPolynomial("coefficient vector is empty")
        if self.coeffs[0].is_neg_inf:
            raise InvalidPolynomial("leading coefficient must be finite")

    @staticmethod
    def of(*coeffs: ScalarLike) -> "TropicalPolynomial":
        """Build from leading-first values; ints, 'p/q' text, and None (-inf) coerce."""
        return TropicalPolynomial(tuple(TropicalScalar.of(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class RootList:
    """Finite roots (descending, with multiplicities) plus the -inf root."""

    finite_roots: tuple[tuple[TropicalScalar, int], ...]
    zero_root_multiplicity: int

    def multiplicity_total(self) -> int:
        return sum(m for _, m in self.finite_roots) + self.zero_root_multiplicity

    def finite_values(self) -> tuple[TropicalScalar, ...]:
        return tuple(r for r, _ in self.finite_roots)


def evaluate(P: TropicalPolynomial, x: TropicalScalar) -> TropicalScalar:
    """max over i of coeffs[i] + (d-i)*x, with -inf absorbing."""
    d = P.degree
    return trop_sum(trop_mul(c, trop_pow(x, d - i)) for i, c in enumerate(P.coeffs))


def _upper_hull(points: list[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    """Upper concave hull of points with strictly increasing x.

    Collinear interior points are dropped, so consecutive hull vertices
    always describe maximal edges.
    """
    hull: list[tuple[int, Fraction]] = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep only strict right turns: cross >= 0 means (x2,y2) is
            # on or below the segment from (x1,y1) to p
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def roots(P: TropicalPolynomial) -> RootList:
    """Corner roots with multiplicities; multiplicities sum to deg P."""
    d = P.degree
    # (exponent, coefficient) for the finite coefficients, exponent ascending
    points = [(d - i, c.value) for i, c in enumerate(P.coeffs) if c.value is not None]
    points.reverse()
    zero_mult = points[0][0]  # lowest finite exponent = trailing -inf count
    hull = _upper_hull(points)
    finite: list[tuple[TropicalScalar, int]] = []
    for (e1, c1), (e2, c2) in zip(hull, hull[1:]):
        slope = Fraction(c2 - c1, e2 - e1)
        finite.append((TropicalScalar(-slope), e2 - e1))
    finite.reverse()  # hull walks exponent-ascending, so roots came out ascending
    return RootList(tuple(finite), zero_mult)


def from_roots(leading: ScalarLike, root_values: Iterable[ScalarLike]) -> TropicalPolynomial:
    """Polynomial with the given finite roots: coefficients are the
    leading value tropically multiplied by prefix products of the roots."""
    lead = TropicalScalar.of(leading)
    if not lead.is_finite:
        raise InvalidPolynomial("leading coefficient must be finite")
    rs = [TropicalScalar.of(r) for r in root_values]
    for r in rs:
        if not r.is_finite:
            raise InvalidPolynomial("from_roots takes finite roots only")
    for a, b in zip(rs, rs[1:]):
        if a < b:
            raise UnsortedRoots(f"roots must be non-increasing, got {a} < {b}")
    coeffs = [lead]
    acc = lead
    for r in rs:
        acc = trop_mul(acc, r)
        coeffs.append(acc)
    return TropicalPolynomial(tuple(coeffs))


def make_monic(P: TropicalPolynomial) -> TropicalPolynomial:
    """Divide every coefficient by the leading one; the roots are unchanged."""
    c0 = P.coeffs[0]
    return TropicalPolynomial(tuple(trop_div(c, c0) for c in P.coeffs))


def is_simple_nonzero(P: TropicalPolynomial) -> bool:
    """True iff every root is finite and of multiplicity one."""
    rl = roots(P)
    return rl.zero_root_multiplicity == 0 and all(m == 1 for _, m in rl.finite_roots)


def common_roots(A: TropicalPolynomial, B: TropicalPolynomial) -> list[TropicalScalar]:
    """Shared finite roots of two simple-nonzero-root polynomials, descending."""
    for name, P in (("A", A), ("B", B)):
        if not is_simple_nonzero(P):
            raise AssumptionViolated(f"{name} does not have simple non-zero roots")
    b_set = set(roots(B).finite_values())
    return [r for r in roots(A).finite_values() if r in b_set]
