"""Truncated univariate power series with MultiPoly coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Context, ContextError, MultiPoly, Scalar

DEFAULT_ORDER = 12


class NonInvertibleError(ArithmeticError):
    """Leading coefficient is not a unit of the coefficient ring."""


class TruncSeries:
    """sum_{k=0}^{N} c_k t^k with c_k in a polynomial ring; O(t^{N+1}) dropped."""

    __slots__ = ("ctx", "coeffs", "order")

    def __init__(self, ctx: Context, coeffs: Sequence[MultiPoly | Scalar], order: int = DEFAULT_ORDER):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        cs = []
        for c in list(coeffs)[: order + 1]:
            if not isinstance(c, MultiPoly):
                c = MultiPoly.const(ctx, c)
            elif c.ctx != ctx:
                raise ContextError("series coefficient in the wrong context")
            cs.append(c)
        cs += [ctx.zero()] * (order + 1 - len(cs))
        self.ctx = ctx
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def variable(cls, ctx: Context, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls(ctx, [0, 1], order)

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k] if 0 <= k <= self.order else self.ctx.zero()

    def _check(self, other: "TruncSeries"):
        if other.ctx != self.ctx:
            raise ContextError("series live in different coefficient contexts")
        if other.order != self.order:
            raise ValueError("series have different truncation orders")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.ctx, [self[0] + other] + list(self.coeffs[1:]), self.order)
        self._check(other)
        return TruncSeries(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.ctx, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.ctx, [c * other for c in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [self.ctx.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.ctx, out, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncSeries":
        if k < 0:
            raise ValueError("negative power of a series")
        out = TruncSeries(self.ctx, [1], self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ctx == other.ctx and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.order, self.coeffs))

    def __repr__(self):
        body = " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if c)
        return f"TruncSeries({body or '0'}, O(t^{self.order + 1}))"

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def with_order(self, order: int) -> "TruncSeries":
        return TruncSeries(self.ctx, self.coeffs[: order + 1], order)

    def map_coeffs(self, fn) -> "TruncSeries":
        return TruncSeries(self.ctx, [fn(c) for c in self.coeffs], self.order)

    def shift_down(self, k: int) -> "TruncSeries":
        """Divide by t^k; the lowest k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series not divisible by t^{k}")
        return TruncSeries(self.ctx, self.coeffs[k:], self.order)

    def derivative(self) -> "TruncSeries":
        return TruncSeries(self.ctx, [c * k for k, c in enumerate(self.coeffs) if k], self.order)

    def integral(self) -> "TruncSeries":
        """Antiderivative with zero constant term (top coefficient is dropped)."""
        return TruncSeries(
            self.ctx, [0] + [c / (k + 1) for k, c in enumerate(self.coeffs[:-1])], self.order
        )

    def _unit_leading(self) -> Fraction:
        c0 = self[0]
        if not c0 or not c0.is_constant():
            raise NonInvertibleError(f"constant term {c0} is not a nonzero rational")
        return c0.to_scalar()

    def reciprocal(self) -> "TruncSeries":
        inv0 = 1 / self._unit_leading()
        out = [MultiPoly.const(self.ctx, inv0)]
        for k in range(1, self.order + 1):
            acc = self.ctx.zero()
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-acc * inv0)
        return TruncSeries(self.ctx, out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.reciprocal()
        return TruncSeries(self.ctx, [c / other for c in self.coeffs], self.order)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(t)); inner must have zero constant term."""
        self._check(inner)
        if inner[0]:
            raise ValueError("inner series must have zero constant term")
        result = TruncSeries(self.ctx, [self[0]], self.order)
        power = TruncSeries(self.ctx, [1], self.order)
        for k in range(1, self.order + 1):
            power = power * inner
            if self.coeffs[k]:
                result = result + power * self.coeffs[k]
        return result

    def log(self) -> "TruncSeries":
        """log(f) for f(0) = 1, via log f = integral(f'/f)."""
        if self[0] != 1:
            raise NonInvertibleError("log needs constant term 1")
        return (self.derivative() * self.reciprocal()).integral()

    def exp(self) -> "TruncSeries":
        """exp(f) for f(0) = 0, via the recurrence n e_n = sum k f_k e_{n-k}."""
        if self[0]:
            raise ValueError("exp needs zero constant term")
        e = [self.ctx.one()]
        for n in range(1, self.order + 1):
            acc = self.ctx.zero()
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * e[n - k] * k
            e.append(acc / n)
        return TruncSeries(self.ctx, e, self.order)


def series_reverse(f: TruncSeries) -> TruncSeries:
    """Compositional inverse g with f(g(t)) = t mod t^{N+1}.

    Requires f(0) = 0 and f'(0) a nonzero rational.  Coefficients are fixed one
    degree at a time: [t^k] f(g) is linear in g_k with slope f'(0).
    """
    if f[0]:
        raise ValueError("series_reverse needs f(0) = 0")
    lead = f[1]
    if not lead or not lead.is_constant():
        raise NonInvertibleError(f"linear coefficient {lead} is not a nonzero rational")
    inv = 1 / lead.to_scalar()
    g = TruncSeries(f.ctx, [0, inv], f.order)
    for k in range(2, f.order + 1):
        err = f.compose(g)[k]
        if err:
            cs = list(g.coeffs)
            cs[k] = cs[k] - err * inv
            g = TruncSeries(f.ctx, cs, f.order)
    return g
