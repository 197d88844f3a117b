"""Exact closed forms for the Mobius function of the sublattice order.

Everything here is plain big-integer arithmetic (rationals only as an
intermediate, with the result asserted integral).  Each formula is
cross-validated elsewhere against the interval oracle; where a customary
printed form of an identity is off by a sign or a normalization, both the
as-printed and the corrected form are exposed, with the corrected one as the
contract-bearing default and the printed one pinned to the value it actually
produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import Element, ImpLattice, Verdict, full_algebra, make_verdict
from .algebra import _set_partitions
from .poset import mobius_between


class NonIntegerResultError(ArithmeticError):
    """An exact-rational evaluation failed to reduce to an integer."""


def factorial(m: int) -> int:
    return math.factorial(m)


_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks.

    Computed by the recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1).
    """
    if n < 0 or k < 0:
        raise ValueError(f"stirling2 needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    while len(_STIRLING_ROWS) <= n:
        prev = _STIRLING_ROWS[-1]
        m = len(_STIRLING_ROWS)
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = j * (prev[j] if j < m else 0) + prev[j - 1]
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][k]


def bell(n: int) -> int:
    """Total number of set partitions: the Stirling row sum."""
    return sum(stirling2(n, k) for k in range(n + 1))


def partition_mobius(block_sizes: list[int]) -> int:
    """Partition-lattice Mobius value for a partition of the given type:
    the product of (-1)^(m-1) * (m-1)! over block sizes m."""
    value = 1
    for m in block_sizes:
        value *= (-1) ** (m - 1) * factorial(m - 1)
    return value


def mobius_product_formula(A: ImpLattice) -> int:
    """Closed form for mu(A, B): (-1)^(n-w) * |a|! * prod (|block|-1)!.

    The sign exponent is n - w(A); a variant with exponent |a| + w(A) - n
    circulates but is wrong whenever |a| is odd (see
    :func:`mobius_product_formula_printed`).
    """
    value = (-1) ** (A.n - A.w) * factorial(A.base.rank)
    for b in A.blocks:
        value *= factorial(b.rank - 1)
    return value


def mobius_product_formula_printed(A: ImpLattice) -> int:
    """The as-printed variant with sign exponent |a| + w(A) - n; kept so the
    erratum suite can pin the discrepancy (off by (-1)^|a|)."""
    value = (-1) ** (A.base.rank + A.w - A.n) * factorial(A.base.rank)
    for b in A.blocks:
        value *= factorial(b.rank - 1)
    return value


@dataclass(frozen=True)
class ChainSumReport:
    """A signed Stirling-product sum over strictly decreasing integer chains.

    ``chain_count`` is the number of chains the sum ranges over (the
    evaluation itself collapses the chain recursion to O(n^2) arithmetic).
    """

    variant: str
    n: int
    k: int | None
    value: int
    chain_count: int


def chain_report_to_dict(r: ChainSumReport) -> dict:
    return {
        "variant": r.variant,
        "n": r.n,
        "k": r.k,
        "value": str(r.value),
        "chain_count": r.chain_count,
    }


_RANK_CHAIN_CACHE: dict[tuple[int, int], int] = {}


def _rank_chain_value(k: int, n: int) -> int:
    # T(k) = 1; T(m) = -sum_{j=k}^{m-1} S(m,j) T(j): the suffix-sum form of
    # sum over chains n = n_0 > ... > n_p = k of (-1)^p prod S(n_{i-1}, n_i)
    if n == k:
        return 1
    got = _RANK_CHAIN_CACHE.get((k, n))
    if got is None:
        got = -sum(stirling2(n, j) * _rank_chain_value(k, j) for j in range(k, n))
        _RANK_CHAIN_CACHE[(k, n)] = got
    return got


_CORRECTED_CACHE: dict[int, int] = {}


def _corrected_value(n: int) -> int:
    # f(m) = (-1)^m - sum_{j=1}^{m-1} S(m,j) f(j)
    got = _CORRECTED_CACHE.get(n)
    if got is None:
        got = (-1) ** n - sum(stirling2(n, j) * _corrected_value(j) for j in range(1, n))
        _CORRECTED_CACHE[n] = got
    return got


def chain_sum_printed(n: int) -> ChainSumReport:
    """The as-printed chain sum for mu({1}, B_n): chains down to 1 weighted
    by (-1)^(p+1) times the Stirling product.

    This form drops the closed-suborder term of the closure identity, so it
    evaluates to (-1)^n (n-1)! rather than (-1)^n n!; it is exposed for the
    erratum suite (the corrected sum is :func:`chain_sum_corrected`).
    """
    if n < 1:
        raise ValueError(f"chain sums need n >= 1, got {n}")
    count = 1 if n == 1 else 2 ** (n - 2)
    return ChainSumReport("printed", n, None, -_rank_chain_value(1, n), count)


def chain_sum_corrected(n: int) -> ChainSumReport:
    """The corrected chain sum: (-1)^n plus chains with any endpoint >= 1
    weighted by (-1)^(endpoint+p); equals mu({1}, B_n) = (-1)^n n!."""
    if n < 1:
        raise ValueError(f"chain sums need n >= 1, got {n}")
    return ChainSumReport("corrected", n, None, _corrected_value(n), 2 ** (n - 1) - 1)


def mu_top_closed_form(n: int) -> int:
    """mu({1}, B_n) = (-1)^n n!."""
    if n < 0:
        raise ValueError(f"atom count must be >= 0, got {n}")
    return (-1) ** n * factorial(n)


def _check_rank_domain(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"rank sums need 1 <= k <= n, got k={k}, n={n}")


def mu_rank_sum_oracle(k: int, n: int) -> int:
    """Sum of oracle mu(A, B_n) over Boolean subalgebras A with k atoms."""
    _check_rank_domain(k, n)
    top = full_algebra(n)
    total = 0
    for part in _set_partitions(tuple(range(n))):
        if len(part) != k:
            continue
        A = ImpLattice(n, Element.bottom(n), tuple(Element(n, b) for b in part))
        total += mobius_between(A, top)
    return total


def mu_rank_sum_chain(k: int, n: int) -> ChainSumReport:
    """The same rank-restricted sum as a signed Stirling chain sum over
    chains from n down to k."""
    _check_rank_domain(k, n)
    count = 1 if n == k else 2 ** (n - k - 1)
    return ChainSumReport("rank_chain", n, k, _rank_chain_value(k, n), count)


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def mu_rank_sum_composition(k: int, n: int) -> int:
    """The rank-restricted sum as a harmonic-style composition sum:
    (-1)^(n-k) * (n!/k!) * sum over ordered compositions of n into k positive
    parts of 1/(product of parts).

    The 1/k! normalization is the correction: without it the ordered sum
    overcounts set partitions with repeated block sizes (see
    :func:`mu_rank_sum_composition_printed`).
    """
    _check_rank_domain(k, n)
    total = Fraction(0)
    for parts in _compositions(n, k):
        denom = 1
        for p in parts:
            denom *= p
        total += Fraction(1, denom)
    value = (-1) ** (n - k) * Fraction(factorial(n), factorial(k)) * total
    if value.denominator != 1:
        raise NonIntegerResultError(f"composition sum for (k={k}, n={n}) is {value}")
    return int(value)


def mu_rank_sum_composition_printed(k: int, n: int) -> int:
    """The as-printed composition form without the 1/k! factor; differs from
    the oracle by k! for every k >= 2 and is pinned by the erratum suite."""
    _check_rank_domain(k, n)
    total = Fraction(0)
    for parts in _compositions(n, k):
        denom = 1
        for p in parts:
            denom *= p
        total += Fraction(1, denom)
    value = (-1) ** (n - k) * factorial(n) * total
    if value.denominator != 1:
        raise NonIntegerResultError(f"printed composition sum for (k={k}, n={n}) is {value}")
    return int(value)


def rank_one_chain_identity(n: int) -> Verdict:
    """Compare (-1)^(n-1) (n-1)! with the rank-1 chain sum."""
    if n < 1:
        raise ValueError(f"identity needs n >= 1, got {n}")
    lhs = (-1) ** (n - 1) * factorial(n - 1)
    rhs = mu_rank_sum_chain(1, n).value
    return make_verdict("rank-one-chain-vs-signed-factorial", {"n": n}, lhs, rhs)
