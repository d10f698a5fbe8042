"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` lives in a :class:`Context`, an ordered tuple of named
variables with integer weights.  Terms are stored as a dict mapping exponent
tuples to :class:`fractions.Fraction`; zero coefficients are never stored.
Values are immutable once built.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class ContextError(ValueError):
    """Operands live in different variable contexts."""


@dataclass(frozen=True)
class Context:
    names: tuple[str, ...]
    weights: tuple[int, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        names = tuple(self.names)
        weights = (1,) * len(names) if self.weights is None else tuple(self.weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable required")
        if len(set(names)) != len(names):
            raise ContextError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ContextError(f"variable {name!r} not in context {self.names}") from None

    def weight_of(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def var(self, name: str) -> "MultiPoly":
        return MultiPoly.var(self, name)

    def gens(self) -> list["MultiPoly"]:
        return [MultiPoly.var(self, n) for n in self.names]

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly.const(self, 1)

    def union(self, other: "Context") -> "Context":
        """Context containing self's variables followed by other's new ones."""
        names = list(self.names)
        weights = list(self.weights)
        for n, w in zip(other.names, other.weights):
            if n in names:
                if weights[names.index(n)] != w:
                    raise ContextError(f"variable {n!r} has conflicting weights")
                continue
            names.append(n)
            weights.append(w)
        return Context(tuple(names), tuple(weights))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient expected, got {type(c).__name__}")


class MultiPoly:
    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: Context, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.ctx = ctx
        clean = {}
        n = len(ctx)
        for exps, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} has wrong length for {ctx.names}")
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, ctx: Context, c: Scalar) -> "MultiPoly":
        c = _as_fraction(c)
        return cls._raw(ctx, {(0,) * len(ctx): c} if c else {})

    @classmethod
    def var(cls, ctx: Context, name: str) -> "MultiPoly":
        i = ctx.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(ctx)))
        return cls._raw(ctx, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, ctx: Context, exps: Iterable[int], c: Scalar = 1) -> "MultiPoly":
        return cls(ctx, {tuple(exps): c})

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ctx != self.ctx:
                raise ContextError(f"context mismatch: {self.ctx.names} vs {other.ctx.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.ctx, other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _as_fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("non-negative integer exponent required")
        result = MultiPoly.const(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _as_fraction(c)
        if not c:
            return MultiPoly._raw(self.ctx, {})
        return MultiPoly._raw(self.ctx, {e: v * c for e, v in self.terms.items()})

    def mul(self, other: "MultiPoly", max_weight: int | None = None) -> "MultiPoly":
        """Product, optionally dropping terms of weighted degree > max_weight."""
        if other.ctx != self.ctx:
            raise ContextError(f"context mismatch: {self.ctx.names} vs {other.ctx.names}")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        if max_weight is None:
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    e = tuple([x + y for x, y in zip(e1, e2)])
                    out[e] = out.get(e, 0) + c1 * c2
        else:
            w = self.ctx.weights
            bw = [(e2, c2, sum(x * y for x, y in zip(e2, w))) for e2, c2 in b.items()]
            for e1, c1 in a.items():
                w1 = sum(x * y for x, y in zip(e1, w))
                for e2, c2, w2 in bw:
                    if w1 + w2 > max_weight:
                        continue
                    e = tuple([x + y for x, y in zip(e1, e2)])
                    out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.ctx, {e: c for e, c in out.items() if c})

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.ctx, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.ctx), Fraction(0))

    def to_scalar(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    def coeff(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        """Weighted degree (max over terms); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ctx.weight_of(e) for e in self.terms)

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = {self.ctx.weight_of(e) for e in self.terms}
        if weight is not None:
            return ws <= {weight}
        return len(ws) <= 1

    def homogeneous_part(self, weight: int) -> "MultiPoly":
        w = self.ctx.weight_of
        return MultiPoly._raw(self.ctx, {e: c for e, c in self.terms.items() if w(e) == weight})

    def truncate(self, max_weight: int) -> "MultiPoly":
        w = self.ctx.weight_of
        return MultiPoly._raw(self.ctx, {e: c for e, c in self.terms.items() if w(e) <= max_weight})

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(n for n, k in zip(self.ctx.names, e) if k)
        return used

    def degree_in(self, name: str) -> int:
        i = self.ctx.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split as sum_k coeff_k * name^k, coefficients free of ``name``."""
        i = self.ctx.index(name)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: MultiPoly._raw(self.ctx, t) for k, t in out.items()}

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # -- transformations --------------------------------------------------
    def embed(self, ctx: Context) -> "MultiPoly":
        """Re-express in a context containing all variables this one uses."""
        if ctx == self.ctx:
            return self
        pos = []
        for i, n in enumerate(self.ctx.names):
            pos.append(ctx.names.index(n) if n in ctx.names else None)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(ctx)
            for i, k in enumerate(e):
                if k:
                    if pos[i] is None:
                        raise ContextError(f"variable {self.ctx.names[i]!r} missing from {ctx.names}")
                    new[pos[i]] = k
            terms[tuple(new)] = c
        return MultiPoly._raw(ctx, terms)

    def subs(self, values: Mapping[str, "MultiPoly | Scalar"], ctx: Context | None = None) -> "MultiPoly":
        """Substitute variables; unsubstituted variables are kept.

        The result lives in ``ctx`` (default: this polynomial's context).
        Replacement polynomials must live in the target context.
        """
        target = ctx or self.ctx
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                name = self.ctx.names[i]
                if name in values:
                    v = values[name]
                    base = v if isinstance(v, MultiPoly) else MultiPoly.const(target, v)
                else:
                    base = MultiPoly.var(target, name)
                cache[key] = base ** k
            return cache[key]

        out = MultiPoly.const(target, 0)
        for e, c in self.terms.items():
            term = MultiPoly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        names = self.ctx.names
        for e, c in self.terms.items():
            v = c
            for n, k in zip(names, e):
                if k:
                    v *= _as_fraction(values[n]) ** k
            total += v
        return total

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ValueError when ``divisor`` does not divide."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        lead_e = max(divisor.terms)  # lex order on exponent tuples
        lead_c = divisor.terms[lead_e]
        rem = self
        quot: dict = {}
        while rem.terms:
            e = max(rem.terms)
            if any(x < y for x, y in zip(e, lead_e)):
                raise ValueError("polynomial is not divisible")
            qe = tuple(x - y for x, y in zip(e, lead_e))
            qc = rem.terms[e] / lead_c
            quot[qe] = quot.get(qe, 0) + qc
            rem = rem - MultiPoly._raw(self.ctx, {qe: qc}).mul(divisor)
        return MultiPoly(self.ctx, quot)

    # -- canonical ordering and text --------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded lex order: ascending weight, then lex-descending exponents."""
        w = self.ctx.weight_of
        return sorted(self.terms.items(), key=lambda t: (w(t[0]), tuple(-x for x in t[0])))

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ctx.names, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_str

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, ctx: Context) -> MultiPoly:
    """Inverse of :meth:`MultiPoly.to_str` (accepts the canonical text form)."""
    text = text.strip()
    if text == "0":
        return ctx.zero()
    out = ctx.zero()
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        exps = [0] * len(ctx)
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            name, _, k = factor.partition("^")
            exps[ctx.index(name)] += int(k) if k else 1
        out = out + MultiPoly(ctx, {tuple(exps): coeff})
        pos = m.end()
    return out
