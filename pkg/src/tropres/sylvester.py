"""Sylvester matrix over the max-plus semifield and its tropical permanent.

For A of degree m and B of degree n the matrix is (n+m) x (n+m): n rows
of shifted A-coefficients above m rows of shifted B-coefficients,
off-band entries -inf.  The tropical permanent P is the max over all
permutations pi of the entry sum M[1,pi_1] + ... + M[n+m,pi_{n+m}];
equivalently a max-weight perfect assignment.

Permutations are written (nu_1..nu_n, mu_1..mu_m): row i <= n takes
column nu_i, row n+r takes column mu_r.  The split permutations (both
blocks increasing) are the only ones that can attain P, and the number
of split permutations attaining it is what the order of the tropical
resultant counts.  Indices are 1-based throughout, matching the
(1,...,n+m) convention of the column positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .core import NEG_INF, TropicalScalar
from .errors import (
    AssumptionViolated,
    CapExceeded,
    DegreeZero,
    PreconditionViolated,
    TropicalZeroResultant,
)
from .poly import TropicalPolynomial, is_simple_nonzero, roots

#: Upper bound on split-permutation enumerations (C(n+m, n) candidates).
DEFAULT_ENUM_BUDGET = 10_000_000

#: Hard size guard for the factorial brute force, a test oracle only.
BRUTE_FORCE_LIMIT = 9


@dataclass(frozen=True)
class TropicalMatrix:
    """Square max-plus matrix with its rows split n on top, m below."""

    rows: tuple[tuple[TropicalScalar, ...], ...]
    n: int
    m: int

    def __post_init__(self):
        size = self.n + self.m
        if len(self.rows) != size or any(len(r) != size for r in self.rows):
            raise ValueError(f"matrix must be {size}x{size}")

    @staticmethod
    def of(rows: Sequence[Sequence[object]], n: int, m: int) -> "TropicalMatrix":
        return TropicalMatrix(
            tuple(tuple(TropicalScalar.of(c) for c in row) for row in rows), n, m
        )

    @property
    def size(self) -> int:
        return self.n + self.m

    def __str__(self) -> str:
        return "\n".join(" ".join(str(c) for c in row) for row in self.rows)


@dataclass(frozen=True)
class SplitPermutation:
    """Permutation whose two blocks are each strictly increasing."""

    nu: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        merged = sorted(self.nu + self.mu)
        if merged != list(range(1, len(merged) + 1)):
            raise ValueError("nu and mu must partition 1..n+m")
        if any(a >= b for a, b in zip(self.nu, self.nu[1:])) or any(
            a >= b for a, b in zip(self.mu, self.mu[1:])
        ):
            raise ValueError("nu and mu must each be strictly increasing")

    def as_tuple(self) -> tuple[int, ...]:
        return self.nu + self.mu

    def as_json_dict(self) -> dict:
        return {"nu": list(self.nu), "mu": list(self.mu)}


@dataclass(frozen=True)
class OrderReport:
    """Resultant value with its exact maximizer count.

    The integer count is the ground truth; order_log2 is display only.
    """

    resultant_value: TropicalScalar
    maximizer_count: int
    order_log2: float
    is_power_of_two: bool
    k_if_integral: int | None

    @staticmethod
    def from_count(value: TropicalScalar, count: int) -> "OrderReport":
        assert count >= 1
        is_pow = count & (count - 1) == 0
        return OrderReport(
            resultant_value=value,
            maximizer_count=count,
            order_log2=math.log2(count),
            is_power_of_two=is_pow,
            k_if_integral=count.bit_length() - 1 if is_pow else None,
        )

    def as_json_dict(self) -> dict:
        return {
            "resultant": str(self.resultant_value),
            "maximizers": self.maximizer_count,
            "order_log2": self.order_log2,
            "power_of_two": self.is_power_of_two,
            "k": self.k_if_integral,
        }


@dataclass(frozen=True)
class TheoremVerdict:
    """Common-root count k against maximizer count theta; holds iff theta = 2^k."""

    k: int
    theta: int
    holds: bool

    def as_json_dict(self) -> dict:
        return {"k": self.k, "theta": self.theta, "holds": self.holds}


def build_sylvester(A: TropicalPolynomial, B: TropicalPolynomial) -> TropicalMatrix:
    """Band matrix of the two coefficient vectors: n A-rows over m B-rows."""
    m, n = A.degree, B.degree
    if m < 1 or n < 1:
        raise DegreeZero(f"both degrees must be >= 1, got m={m}, n={n}")
    size = n + m
    a, b = A.coeffs, B.coeffs
    rows = []
    for i in range(n):
        rows.append(tuple(a[j - i] if 0 <= j - i <= m else NEG_INF for j in range(size)))
    for r in range(m):
        rows.append(tuple(b[j - r] if 0 <= j - r <= n else NEG_INF for j in range(size)))
    return TropicalMatrix(tuple(rows), n, m)


def perm_value(M: TropicalMatrix, pi: Sequence[int]) -> TropicalScalar:
    """Tropical product of the entries selected by pi (1-based columns)."""
    if sorted(pi) != list(range(1, M.size + 1)):
        raise ValueError("pi must be a permutation of 1..n+m")
    total = Fraction(0)
    for i, col in enumerate(pi):
        v = M.rows[i][col - 1].value
        if v is None:
            return NEG_INF
        total += v
    return TropicalScalar(total)


def enumerate_s_star(
    n: int, m: int, max_enum: int = DEFAULT_ENUM_BUDGET
) -> Iterator[SplitPermutation]:
    """All C(n+m, n) split permutations, lexicographic in nu."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got n={n}, m={m}")
    total = math.comb(n + m, n)
    if total > max_enum:
        raise CapExceeded(f"{total} split permutations exceed the budget of {max_enum}")
    universe = range(1, n + m + 1)
    for nu in combinations(universe, n):
        chosen = set(nu)
        mu = tuple(j for j in universe if j not in chosen)
        yield SplitPermutation(nu, mu)


def _int_grid(M: TropicalMatrix) -> tuple[list[list[int | None]], int]:
    """Clear denominators so hot loops run on plain ints (None = -inf)."""
    denoms = [c.value.denominator for row in M.rows for c in row if c.value is not None]
    scale = math.lcm(*denoms) if denoms else 1
    grid = [
        [None if c.value is None else int(c.value * scale) for c in row] for row in M.rows
    ]
    return grid, scale


def permanent_brute(M: TropicalMatrix) -> TropicalScalar:
    """Max of the entry sums over all (n+m)! permutations.  Oracle only."""
    N = M.size
    if N > BRUTE_FORCE_LIMIT:
        raise CapExceeded(f"brute force is guarded at size {BRUTE_FORCE_LIMIT}, got {N}")
    grid, scale = _int_grid(M)
    best: int | None = None
    for cols in permutations(range(N)):
        total = 0
        for i, c in enumerate(cols):
            v = grid[i][c]
            if v is None:
                break
            total += v
        else:
            if best is None or total > best:
                best = total
    if best is None:
        return NEG_INF
    return TropicalScalar(Fraction(best, scale))


def _sstar_scan(M: TropicalMatrix, max_enum: int) -> tuple[int | None, int, int]:
    """(best scaled value, tie count, scale) over the split permutations."""
    n, N = M.n, M.size
    if math.comb(N, n) > max_enum:
        raise CapExceeded(f"{math.comb(N, n)} split permutations exceed the budget of {max_enum}")
    grid, scale = _int_grid(M)
    top, bottom = grid[:n], grid[n:]
    cols = range(N)
    best: int | None = None
    count = 0
    for nu in combinations(cols, n):
        chosen = set(nu)
        total = 0
        for i, c in enumerate(nu):
            v = top[i][c]
            if v is None:
                break
            total += v
        else:
            r = 0
            for c in cols:
                if c in chosen:
                    continue
                v = bottom[r][c]
                if v is None:
                    break
                total += v
                r += 1
            else:
                if best is None or total > best:
                    best, count = total, 1
                elif total == best:
                    count += 1
    return best, count, scale


def permanent_sstar(M: TropicalMatrix, max_enum: int = DEFAULT_ENUM_BUDGET) -> TropicalScalar:
    """Max of the entry sums over split permutations only; equals the permanent."""
    best, _, scale = _sstar_scan(M, max_enum)
    if best is None:
        return NEG_INF
    return TropicalScalar(Fraction(best, scale))


def permanent_assignment(M: TropicalMatrix) -> TropicalScalar:
    """Tropical permanent as a max-weight perfect assignment.

    Exact shortest-augmenting-path method with potentials over rational
    costs; -inf entries are forbidden edges.  Polynomial time, no size
    guard.  Returns -inf when no permutation avoids the -inf entries.
    """
    N = M.size
    # minimize negated weights; None stays forbidden
    cost = [[None if c.value is None else -c.value for c in row] for row in M.rows]
    zero = Fraction(0)
    u = [zero] * (N + 1)
    v = [zero] * (N + 1)
    match = [0] * (N + 1)  # match[j] = row assigned to column j (1-based, 0 = none)
    way = [0] * (N + 1)
    for i in range(1, N + 1):
        match[0] = i
        j0 = 0
        minv: list[Fraction | None] = [None] * (N + 1)  # None = +inf
        used = [False] * (N + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta: Fraction | None = None
            j1 = 0
            for j in range(1, N + 1):
                if used[j]:
                    continue
                c = cost[i0 - 1][j - 1]
                if c is not None:
                    cur = c - u[i0] - v[j]
                    if minv[j] is None or cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] is not None and (delta is None or minv[j] < delta):
                    delta = minv[j]
                    j1 = j
            if delta is None:
                return NEG_INF  # no augmenting path: no feasible assignment
            for j in range(N + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    total = Fraction(0)
    for j in range(1, N + 1):
        total += M.rows[match[j] - 1][j - 1].value
    return TropicalScalar(total)


def count_maximizers(M: TropicalMatrix, max_enum: int = DEFAULT_ENUM_BUDGET) -> OrderReport:
    """Resultant value with the exact number of split permutations attaining it."""
    best, count, scale = _sstar_scan(M, max_enum)
    if best is None:
        raise TropicalZeroResultant("every permutation hits a -inf entry")
    return OrderReport.from_count(TropicalScalar(Fraction(best, scale)), count)


def maximizers_by_merge(
    A: TropicalPolynomial, B: TropicalPolynomial
) -> tuple[int, list[SplitPermutation]]:
    """Maximizing split permutations built directly from the root lists.

    Merge the descending root lists of B and A into one non-increasing
    sequence; the positions taken by B's roots form nu, those taken by
    A's roots form mu.  Every tie between a root of A and a root of B
    branches the merge two ways, so the count is 2^(common roots).
    """
    for name, P in (("A", A), ("B", B)):
        if not is_simple_nonzero(P):
            raise AssumptionViolated(f"{name} does not have simple non-zero roots")
    alpha = roots(A).finite_values()
    beta = roots(B).finite_values()
    n, m = len(beta), len(alpha)
    nu = [0] * n
    mu = [0] * m
    witnesses: list[SplitPermutation] = []

    def extend(i: int, j: int, pos: int) -> None:
        if i == n and j == m:
            witnesses.append(SplitPermutation(tuple(nu), tuple(mu)))
            return
        take_beta = i < n and (j == m or not beta[i] < alpha[j])
        take_alpha = j < m and (i == n or not alpha[j] < beta[i])
        if take_beta:
            nu[i] = pos
            extend(i + 1, j, pos + 1)
        if take_alpha:
            mu[j] = pos
            extend(i, j + 1, pos + 1)

    extend(0, 0, 1)
    witnesses.sort(key=lambda s: s.nu)
    return len(witnesses), witnesses


def check_zigzag_lemma(M: TropicalMatrix, pi: Sequence[int], k: int) -> bool:
    """Does swapping the descent at position k strictly increase the value?

    k is 1-based; positions k and k+1 must lie in the same block and
    form a descent, and the unswapped value must be finite.  On matrices
    built from simple-nonzero-root polynomials this always returns True.
    """
    pi = tuple(pi)
    N = M.size
    if not (1 <= k < N) or k == M.n:
        raise PreconditionViolated(f"positions {k},{k + 1} do not sit in one block")
    if pi[k - 1] <= pi[k]:
        raise PreconditionViolated(f"no descent at position {k}")
    base = perm_value(M, pi)
    if base.is_neg_inf:
        raise PreconditionViolated("value at pi is -inf")
    swapped = list(pi)
    swapped[k - 1], swapped[k] = swapped[k], swapped[k - 1]
    return base < perm_value(M, swapped)


def verify_main_theorem(
    A: TropicalPolynomial, B: TropicalPolynomial, max_enum: int = DEFAULT_ENUM_BUDGET
) -> TheoremVerdict:
    """Check that the maximizer count is exactly 2^(number of common roots)."""
    from .poly import common_roots  # local import keeps module load order flat

    k = len(common_roots(A, B))
    report = count_maximizers(build_sylvester(A, B), max_enum)
    return TheoremVerdict(k=k, theta=report.maximizer_count, holds=report.maximizer_count == 2**k)


def perm_monomial(n: int, m: int, split: SplitPermutation) -> tuple[int, ...]:
    """Exponent vector of the split permutation's entry product.

    Variables are ordered a_0..a_m then b_0..b_n; for split permutations
    every selected entry is in band, so the monomial is always defined.
    """
    exps = [0] * (m + n + 2)
    for i, col in enumerate(split.nu):
        idx = col - (i + 1)
        if not 0 <= idx <= m:
            raise ValueError("nu selects an off-band entry")
        exps[idx] += 1
    for r, col in enumerate(split.mu):
        idx = col - (r + 1)
        if not 0 <= idx <= n:
            raise ValueError("mu selects an off-band entry")
        exps[m + 1 + idx] += 1
    return tuple(exps)
