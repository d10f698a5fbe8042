"""Conversions between symmetric-function bases.

The ring elements passed to :func:`power_sums_from_elementary` only need
``+``, ``-`` and ``*`` (by each other and by ints), so the same code serves
MultiPoly values and cohomology-ring elements.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, TypeVar

from .partitions import Partition, partitions_of

R = TypeVar("R")


def power_sums_from_elementary(e: Sequence[R], n: int) -> R:
    """Newton power sum p_n in terms of e_1, e_2, ... (missing e_i are zero).

    p_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n.
    """
    if n <= 0:
        raise ValueError(f"power sum index must be >= 1, got {n}")
    if not e:
        raise ValueError("need at least e_1 to fix the ring")
    zero = e[0] * 0
    es = list(e) + [zero] * max(0, n - len(e))
    p = [None]
    for k in range(1, n + 1):
        acc = zero
        for i in range(1, k):
            if i <= len(e):
                term = es[i - 1] * p[k - i]
                acc = acc + term if i % 2 else acc - term
        if k <= len(e):
            last = es[k - 1] * k
            acc = acc + last if k % 2 else acc - last
        p.append(acc)
    return p[n]


def _count_01_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if sum(rows) != sum(cols):
        return 0
    return _count_rec(tuple(rows), tuple(sorted((c for c in cols if c), reverse=True)))


@lru_cache(maxsize=None)
def _count_rec(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if not rows:
        return 1 if not cols else 0
    r, rest = rows[0], rows[1:]
    groups: dict[int, int] = {}
    for c in cols:
        groups[c] = groups.get(c, 0) + 1
    values = sorted(groups)
    total = 0

    def choose(idx, left, ways, new_cols):
        nonlocal total
        if idx == len(values):
            if left == 0:
                nc = tuple(sorted((c for c in new_cols if c), reverse=True))
                total += ways * _count_rec(rest, nc)
            return
        v, m = values[idx], groups[values[idx]]
        for k in range(0, min(m, left) + 1):
            choose(idx + 1, left - k, ways * comb(m, k), new_cols + [v - 1] * k + [v] * (m - k))

    choose(0, r, 1, [])
    return total


@lru_cache(maxsize=None)
def _m_to_e_matrix(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[Fraction, ...], ...]]:
    """Inverse of the e->m transition matrix on partitions of n."""
    parts = partitions_of(n)
    size = len(parts)
    # e_mu = sum_lambda M[mu][lambda] m_lambda
    M = [[Fraction(_count_01_matrices(mu, lam)) for lam in parts] for mu in parts]
    # solve M^T-free: want m = M^{-1} e, i.e. rows of M^{-1}
    aug = [row[:] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(M)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = tuple(tuple(row[size:]) for row in aug)
    return parts, inv


def monomial_in_elementary(lam: Partition) -> dict[Partition, int]:
    """Expand the monomial symmetric function m_lam as sum_mu coeff * e_mu.

    Integral and stable in the number of variables (valid for >= |lam| variables).
    """
    lam = Partition(lam)
    n = lam.weight
    if n == 0:
        return {Partition(): 1}
    parts, inv = _m_to_e_matrix(n)
    # m = Minv e  ->  m_lam = sum_mu Minv[lam][mu] e_mu   (M rows indexed by mu)
    # e = M m with M[mu][lam]; hence m = M^{-1} e with row index lam
    row = inv[parts.index(lam)]
    out = {}
    for mu, c in zip(parts, row):
        if c:
            if c.denominator != 1:
                raise ArithmeticError("non-integral monomial->elementary coefficient")
            out[mu] = int(c)
    return out


def elementary_monomials_count(mu: Partition, lam: Partition) -> int:
    """Coefficient of m_lam in e_mu (count of 0-1 matrices)."""
    return _count_01_matrices(tuple(mu), tuple(lam))
