"""Exact arithmetic core: rationals, sparse polynomials, truncated series,
symmetric functions and partitions."""
from fractions import Fraction as Rational

from .partitions import Partition, partition_count, partitions_of
from .poly import Context, ContextError, MultiPoly, parse_poly
from .series import DEFAULT_ORDER, NonInvertibleError, TruncSeries, series_reverse
from .symmetric import monomial_in_elementary, power_sums_from_elementary


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact product; both factors must share a variable context."""
    return a.mul(b)


__all__ = [
    "Rational", "Partition", "partition_count", "partitions_of", "Context", "ContextError",
    "MultiPoly", "parse_poly", "poly_mul", "DEFAULT_ORDER", "NonInvertibleError",
    "TruncSeries", "series_reverse", "monomial_in_elementary", "power_sums_from_elementary",
]
