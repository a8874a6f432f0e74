"""Exact-integer symbolic resultant and its tropicalization.

The resultant for degrees (m, n) is computed as the determinant of the
symbolic Sylvester matrix in the indeterminates a_0..a_m, b_0..b_n, by
signed permutation expansion with pruning on the band structure.  Its
support, with integer coefficients discarded, is the max-plus form
whose value and tie count at a coefficient point define the order.

Exponent vectors index a_0..a_m first, then b_0..b_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import NEG_INF, ONE, ScalarLike, TropicalScalar
from .errors import CapExceeded, TropicalZeroResultant, ZeroPolynomial
from .sylvester import OrderReport

Monomial = tuple[int, ...]

#: permutation expansion is guarded at (m+n)! <= 8! products
EXPANSION_LIMIT = 8

_RES_CACHE: dict[tuple[int, int], tuple[tuple[Monomial, int], ...]] = {}


@dataclass(frozen=True)
class SparseIntPoly:
    """Integer polynomial in a_0..a_m, b_0..b_n as a term map."""

    m: int
    n: int
    terms: dict[Monomial, int]

    @property
    def nvars(self) -> int:
        return self.m + self.n + 2


@dataclass(frozen=True)
class TropicalTerm:
    coeff: TropicalScalar
    exponents: Monomial


@dataclass(frozen=True)
class TropicalForm:
    """Max-plus polynomial: finitely many terms with distinct monomials."""

    nvars: int
    terms: tuple[TropicalTerm, ...]

    def __post_init__(self):
        seen = set()
        for t in self.terms:
            if len(t.exponents) != self.nvars:
                raise ValueError("exponent vector length mismatch")
            if t.coeff.is_neg_inf:
                raise ValueError("terms must have finite coefficients")
            if t.exponents in seen:
                raise ValueError(f"duplicate monomial {t.exponents}")
            seen.add(t.exponents)

    @staticmethod
    def of(nvars: int, terms: Sequence[tuple[ScalarLike, Sequence[int]]]) -> "TropicalForm":
        return TropicalForm(
            nvars,
            tuple(TropicalTerm(TropicalScalar.of(c), tuple(e)) for c, e in terms),
        )

    @property
    def monomials(self) -> frozenset[Monomial]:
        return frozenset(t.exponents for t in self.terms)


def _band_columns(m: int, n: int) -> list[list[tuple[int, int]]]:
    """Per row, the (column, variable index) pairs inside the band."""
    size = m + n
    rows = []
    for i in range(n):
        rows.append([(j, j - i) for j in range(size) if 0 <= j - i <= m])
    for r in range(m):
        rows.append([(j, m + 1 + (j - r)) for j in range(size) if 0 <= j - r <= n])
    return rows


def symbolic_resultant(m: int, n: int) -> SparseIntPoly:
    """Determinant of the symbolic Sylvester matrix, exact integers."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    if m + n > EXPANSION_LIMIT:
        raise CapExceeded(f"expansion guarded at m+n <= {EXPANSION_LIMIT}, got {m + n}")
    key = (m, n)
    if key not in _RES_CACHE:
        _RES_CACHE[key] = _expand_determinant(m, n)
    return SparseIntPoly(m, n, dict(_RES_CACHE[key]))


def _expand_determinant(m: int, n: int) -> tuple[tuple[Monomial, int], ...]:
    size = m + n
    rows = _band_columns(m, n)
    acc: dict[Monomial, int] = {}
    exps = [0] * (m + n + 2)

    def descend(i: int, used: int, sign: int) -> None:
        if i == size:
            mono = tuple(exps)
            acc[mono] = acc.get(mono, 0) + sign
            return
        for col, var in rows[i]:
            bit = 1 << col
            if used & bit:
                continue
            # parity flips once per already-used column to the right
            flips = (used >> (col + 1)).bit_count()
            exps[var] += 1
            descend(i + 1, used | bit, -sign if flips & 1 else sign)
            exps[var] -= 1

    descend(0, 0, 1)
    return tuple(sorted((mo, c) for mo, c in acc.items() if c != 0))


def specialize(R: SparseIntPoly, values: Sequence[Fraction]) -> Fraction:
    """Evaluate at exact rational values for a_0..a_m, b_0..b_n."""
    if len(values) != R.nvars:
        raise ValueError(f"expected {R.nvars} values, got {len(values)}")
    total = Fraction(0)
    for mono, coeff in R.terms.items():
        term = Fraction(coeff)
        for v, e in zip(values, mono):
            if e:
                term *= v**e
        total += term
    return total


def tropicalize(R: SparseIntPoly) -> TropicalForm:
    """The support of R as a max-plus form; integer coefficients discarded."""
    if not R.terms:
        raise ZeroPolynomial("the zero polynomial has no tropicalization")
    return TropicalForm(
        R.nvars, tuple(TropicalTerm(ONE, mono) for mono in sorted(R.terms))
    )


def _term_value(t: TropicalTerm, point: Sequence[TropicalScalar]) -> TropicalScalar:
    total = t.coeff.value
    for p, e in zip(point, t.exponents):
        if e:
            if p.value is None:
                return NEG_INF
            total += p.value * e
    return TropicalScalar(total)


def order_at(F: TropicalForm, point: Sequence[ScalarLike]) -> OrderReport:
    """Value of the form at the point and the exact count of tied terms."""
    pt = [TropicalScalar.of(p) for p in point]
    if len(pt) != F.nvars:
        raise ValueError(f"point has {len(pt)} coordinates, form has {F.nvars}")
    best: TropicalScalar | None = None
    count = 0
    for t in F.terms:
        v = _term_value(t, pt)
        if v.is_neg_inf:
            continue
        if best is None or best < v:
            best, count = v, 1
        elif best == v:
            count += 1
    if best is None:
        raise TropicalZeroResultant("every term evaluates to -inf at this point")
    return OrderReport.from_count(best, count)


def resultant_term_values(
    m: int, n: int, a: Sequence[ScalarLike], b: Sequence[ScalarLike]
) -> list[tuple[Monomial, TropicalScalar]]:
    """Per-monomial values of the resultant support at (a, b), sorted
    by value descending (ties in monomial order)."""
    if len(a) != m + 1 or len(b) != n + 1:
        raise ValueError(f"expected {m + 1} a-values and {n + 1} b-values")
    F = tropicalize(symbolic_resultant(m, n))
    pt = [TropicalScalar.of(v) for v in list(a) + list(b)]
    table = [(t.exponents, _term_value(t, pt)) for t in F.terms]
    table.sort(key=lambda row: row[0])
    table.sort(key=lambda row: row[1], reverse=True)
    return table


def monomial_str(mono: Monomial, m: int, n: int) -> str:
    """Readable form like ``a0*a2*b1^2*b2``; ``1`` for the empty monomial."""
    if len(mono) != m + n + 2:
        raise ValueError("exponent vector length mismatch")
    parts = []
    for idx, e in enumerate(mono):
        if not e:
            continue
        name = f"a{idx}" if idx <= m else f"b{idx - m - 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"
