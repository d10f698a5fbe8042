"""Cohomological models of explicit smooth projective varieties.

A variety is modelled by a finite graded ring (:class:`CohRing`), the total
Chern class of its tangent bundle, and an integration functional.  Supported
constructions: projective spaces, products, hypersurfaces of given
multidegree in products of projective spaces, and projective bundles of
vector bundles given by Chern classes.

Sign convention for a projective bundle P(V) -> B of rank r: ``zeta`` is
c_1(O(1)) and satisfies ``zeta^r + c_1(V) zeta^{r-1} + ... + c_r(V) = 0``, so
that pi_*(zeta^{r-1}) = 1 and pi_*(zeta^{r-1+i}) = s_i(V), where
s(V) = c(V)^{-1}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContextError, DegreeError, DomainError
from .exactalg import Context, MultiPoly, Partition, parse_poly, partitions_of
from .exactalg.symmetric import monomial_in_elementary, power_sums_from_elementary


@dataclass(frozen=True)
class Generator:
    name: str
    kind: str  # "nil": name^order = 0 ; "bundle": Grothendieck relation of rank `order`
    order: int
    chern: tuple[MultiPoly, ...] = ()  # c_1..c_r of the bundle, in earlier generators


class CohRing:
    """Graded ring generated in degree 1 by nilpotent and projective-bundle classes.

    Optional ``params`` are weight-0 symbols treated as coefficients, so that
    integrals may come out as polynomials in them.
    """

    def __init__(self, generators: Sequence[Generator] = (), params: Sequence[str] = ()):
        names = [g.name for g in generators]
        if len(set(names) | set(params)) != len(names) + len(params):
            raise ContextError(f"duplicate symbol among {names + list(params)}")
        self.ctx = Context(tuple(names) + tuple(params), (1,) * len(names) + (0,) * len(params))
        self.params = tuple(params)
        self.generators = tuple(
            Generator(g.name, g.kind, g.order, tuple(c.embed(self.ctx) for c in g.chern))
            for g in generators
        )
        for g in self.generators:
            if g.order < 1:
                raise DomainError(f"generator {g.name} has order {g.order}")
        self.top_degree = sum(g.order - 1 for g in self.generators)
        self.top_exps = tuple(g.order - 1 for g in self.generators)
        self._powers: dict[int, list[MultiPoly]] = {}

    def __eq__(self, other):
        return isinstance(other, CohRing) and (self.generators, self.params) == (
            other.generators, other.params)

    def __hash__(self):
        return hash((self.generators, self.params))

    def __repr__(self):
        return f"CohRing({[g.name for g in self.generators]}, params={list(self.params)})"

    # -- construction -------------------------------------------------------
    def with_generator(self, gen: Generator) -> "CohRing":
        return CohRing(self.generators + (gen,), self.params)

    def tensor(self, other: "CohRing") -> "CohRing":
        mine = {g.name for g in self.generators}
        clash = mine & {g.name for g in other.generators}
        if clash:
            raise ContextError(f"generator names collide: {sorted(clash)}")
        params = tuple(self.params) + tuple(p for p in other.params if p not in self.params)
        return CohRing(self.generators + other.generators, params)

    def with_params(self, params: Sequence[str]) -> "CohRing":
        extra = tuple(p for p in params if p not in self.params)
        return CohRing(self.generators, self.params + extra)

    # -- elements -----------------------------------------------------------
    def element(self, value) -> "CohElement":
        if isinstance(value, CohElement):
            value = value.poly
        if isinstance(value, MultiPoly):
            value = value.embed(self.ctx)
        else:
            value = MultiPoly.const(self.ctx, value)
        return CohElement(self, self.reduce(value))

    def gen(self, name: str) -> "CohElement":
        return CohElement(self, self.reduce(MultiPoly.var(self.ctx, name)))

    def one(self) -> "CohElement":
        return CohElement(self, MultiPoly.const(self.ctx, 1))

    def zero(self) -> "CohElement":
        return CohElement(self, self.ctx.zero())

    def parse(self, text: str) -> "CohElement":
        return self.element(parse_poly(text, self.ctx))

    # -- normal form --------------------------------------------------------
    def reduce(self, poly: MultiPoly, below: int | None = None) -> MultiPoly:
        """Normal form w.r.t. generators with index < ``below`` (default: all)."""
        poly = poly.truncate(self.top_degree)
        stop = len(self.generators) if below is None else below
        for j in reversed(range(stop)):
            g = self.generators[j]
            if g.kind == "nil":
                poly = MultiPoly._raw(
                    self.ctx, {e: c for e, c in poly.terms.items() if e[j] < g.order})
                continue
            if not any(e[j] >= g.order for e in poly.terms):
                continue
            keep: dict = {}
            high: dict[int, dict] = {}
            for e, c in poly.terms.items():
                if e[j] < g.order:
                    keep[e] = c
                else:
                    high.setdefault(e[j], {})[e[:j] + (0,) + e[j + 1:]] = c
            out = MultiPoly._raw(self.ctx, keep)
            for k, rest in high.items():
                out = out + MultiPoly._raw(self.ctx, rest).mul(
                    self._zeta_power(j, k), max_weight=self.top_degree)
            poly = out
        return poly

    def _zeta_power(self, j: int, k: int) -> MultiPoly:
        """zeta_j^k rewritten with zeta_j-exponents < rank, lower part reduced."""
        g = self.generators[j]
        table = self._powers.setdefault(j, [])
        zeta = MultiPoly.var(self.ctx, g.name)
        r = g.order
        if not table:
            rel = self.ctx.zero()
            for i, c in enumerate(g.chern, start=1):
                rel = rel - c * zeta ** (r - i)
            table.append(self.reduce(rel, below=j))  # zeta^r
        while len(table) <= k - r:
            nxt = table[-1] * zeta
            parts = nxt.coefficients_in(g.name)
            out = self.ctx.zero()
            for e, coeff in parts.items():
                if e < r:
                    out = out + coeff * zeta ** e
                else:
                    out = out + coeff.mul(table[0], max_weight=self.top_degree)
            table.append(self.reduce(out.truncate(self.top_degree), below=j))
        return table[k - r]

    def top_coefficient(self, poly: MultiPoly):
        """Coefficient of the top basis monomial; Fraction, or MultiPoly in params."""
        poly = self.reduce(poly)
        ngen = len(self.generators)
        if not self.params:
            return poly.coeff(self.top_exps + ())
        out = {}
        for e, c in poly.terms.items():
            if e[:ngen] == self.top_exps:
                out[(0,) * ngen + e[ngen:]] = c
        return MultiPoly(self.ctx, out)


class CohElement:
    """Element of a CohRing, always kept in normal form."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: CohRing, poly: MultiPoly):
        self.ring = ring
        self.poly = poly

    def _coerce(self, other) -> "CohElement":
        if isinstance(other, CohElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextError("elements of different cohomology rings")
            return other
        if isinstance(other, (int, Fraction)):
            return CohElement(self.ring, MultiPoly.const(self.ring.ctx, other))
        if isinstance(other, MultiPoly):
            return self.ring.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CohElement(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return CohElement(self.ring, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CohElement(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohElement(self.ring, self.poly.scale(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = self.poly.mul(other.poly, max_weight=self.ring.top_degree)
        return CohElement(self.ring, self.ring.reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return CohElement(self.ring, self.poly / c)

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def part(self, degree: int) -> "CohElement":
        return CohElement(self.ring, self.poly.homogeneous_part(degree))

    def truncate(self, degree: int) -> "CohElement":
        return CohElement(self.ring, self.poly.truncate(degree))

    def pullback(self, ring: CohRing) -> "CohElement":
        return ring.element(self.poly)

    def __str__(self):
        return self.poly.to_str()

    def __repr__(self):
        return f"CohElement({self.poly.to_str()!r})"


def graded_inverse(total: Sequence[CohElement], upto: int, one: CohElement) -> list[CohElement]:
    """Components 0..upto of (1 + c_1 + c_2 + ...)^{-1}; ``total`` lists c_1, c_2, ..."""
    s = [one]
    for k in range(1, upto + 1):
        acc = one * 0
        for i in range(1, min(k, len(total)) + 1):
            acc = acc - total[i - 1] * s[k - i]
        s.append(acc)
    return s


@dataclass(frozen=True)
class BundleData:
    """A vector bundle through its Chern classes c_1..c_rank (a virtual-free model)."""

    rank: int
    chern: tuple[CohElement, ...]

    def __post_init__(self):
        if len(self.chern) > max(self.rank, 0):
            extra = self.chern[self.rank:]
            if any(extra):
                raise DegreeError("Chern classes above the rank must vanish")
            object.__setattr__(self, "chern", tuple(self.chern[: self.rank]))
        for i, c in enumerate(self.chern, start=1):
            if c and not c.poly.is_homogeneous(i):
                raise DegreeError(f"c_{i} is not homogeneous of degree {i}: {c}")

    @property
    def ring(self) -> CohRing:
        return self.chern[0].ring

    @classmethod
    def from_roots(cls, ring: CohRing, roots: Sequence) -> "BundleData":
        roots = [ring.element(r) for r in roots]
        total = [ring.one()]
        for lam in roots:
            total = [a + (lam * total[i - 1] if i else 0) for i, a in enumerate(total + [ring.zero()])]
        return cls(len(roots), tuple(total[1:]) if roots else ())

    @classmethod
    def trivial(cls, ring: CohRing, rank: int) -> "BundleData":
        return cls(rank, tuple(ring.zero() for _ in range(rank)))

    def c(self, k: int) -> CohElement:
        if k == 0:
            return self.ring.one()
        if 1 <= k <= len(self.chern):
            return self.chern[k - 1]
        return self.ring.zero()

    def total(self) -> CohElement:
        out = self.ring.one()
        for c in self.chern:
            out = out + c
        return out

    def pullback(self, ring: CohRing) -> "BundleData":
        return BundleData(self.rank, tuple(c.pullback(ring) for c in self.chern))

    def direct_sum(self, other: "BundleData") -> "BundleData":
        ring = self.ring
        total = self.total() * other.total()
        rank = self.rank + other.rank
        return BundleData(rank, tuple(total.part(k) for k in range(1, rank + 1)))

    def twist(self, line_c1: CohElement) -> "BundleData":
        """V (x) L from c_1(L): c_k = sum_i binom(r-i, k-i) c_i(V) c_1(L)^{k-i}."""
        from math import comb
        r = self.rank
        out = []
        for k in range(1, r + 1):
            acc = self.ring.zero()
            for i in range(0, k + 1):
                acc = acc + self.c(i) * line_c1 ** (k - i) * comb(r - i, k - i)
            out.append(acc)
        return BundleData(r, tuple(out))

    def segre(self, upto: int) -> list[CohElement]:
        return graded_inverse(self.chern, upto, self.ring.one())


@dataclass(frozen=True, eq=False)
class VarietyData:
    """Smooth projective variety: ring, tangent Chern classes, integration.

    ``fundamental`` is the class cut out inside the ambient ring (the
    hypersurface class h for hypersurfaces, 1 otherwise); integration is the
    top-monomial coefficient of ``alpha * fundamental``.
    """

    dimension: int
    ring: CohRing
    tangent: BundleData
    fundamental: CohElement
    descriptor: dict = field(default_factory=dict)

    def integrate(self, alpha):
        alpha = self.ring.element(alpha)
        top = alpha.part(self.dimension) * self.fundamental
        return self.ring.top_coefficient(top.poly)

    def c(self, k: int) -> CohElement:
        if k == 0:
            return self.ring.one()
        return self.tangent.c(k) if 1 <= k <= self.tangent.rank else self.ring.zero()

    def chern_classes(self) -> list[CohElement]:
        return [self.c(k) for k in range(1, self.dimension + 1)]

    def normal_chern_classes(self) -> list[CohElement]:
        """c_1..c_dim of the virtual bundle -T."""
        return graded_inverse(self.chern_classes(), self.dimension, self.ring.one())[1:]

    def descriptor_json(self) -> str:
        return json.dumps(self.descriptor, sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        return f"VarietyData(dim={self.dimension}, {self.descriptor_json()})"


# -- constructors ------------------------------------------------------------

def point() -> VarietyData:
    ring = CohRing()
    return VarietyData(0, ring, BundleData(0, ()), ring.one(), {"kind": "projective_space", "n": 0})


def projective_space(n: int, var: str = "x") -> VarietyData:
    """P^n with ring Z[x]/(x^{n+1}) and c(T) = (1+x)^{n+1}."""
    if n < 0:
        raise DomainError(f"projective_space needs n >= 0, got {n}")
    if n == 0:
        return point()
    ring = CohRing([Generator(var, "nil", n + 1)])
    x = ring.gen(var)
    total = (ring.one() + x) ** (n + 1)
    tangent = BundleData(n, tuple(total.part(k) for k in range(1, n + 1)))
    return VarietyData(n, ring, tangent, ring.one(), {"kind": "projective_space", "n": n, "var": var})


def product(x: VarietyData, y: VarietyData) -> VarietyData:
    ring = x.ring.tensor(y.ring)
    tx, ty = x.tangent.pullback(ring), y.tangent.pullback(ring)
    tangent = tx.direct_sum(ty) if tx.rank and ty.rank else (tx if tx.rank else ty)
    if not tangent.rank:
        tangent = BundleData(0, ())
    fund = x.fundamental.pullback(ring) * y.fundamental.pullback(ring)
    desc = {"kind": "product", "factors": [x.descriptor, y.descriptor]}
    return VarietyData(x.dimension + y.dimension, ring, tangent, fund, desc)


def product_of(factors: Iterable[VarietyData]) -> VarietyData:
    factors = list(factors)
    if not factors:
        return point()
    out = factors[0]
    for f in factors[1:]:
        out = product(out, f)
    if len(factors) > 2:
        out = VarietyData(out.dimension, out.ring, out.tangent, out.fundamental,
                          {"kind": "product", "factors": [f.descriptor for f in factors]})
    return out


def multiproj_hypersurface(n: Sequence[int], d: Sequence[int],
                           vars: Sequence[str] | None = None) -> VarietyData:
    """Hypersurface of multidegree d in P^{n_1} x ... x P^{n_r}."""
    n, d = list(n), list(d)
    if len(n) != len(d) or not n:
        raise DomainError("n and d must be non-empty and of equal length")
    if any(k < 1 for k in n) or any(k < 0 for k in d):
        raise DomainError("need n_i >= 1 and d_i >= 0")
    dim = sum(n) - 1
    if dim < 0:
        raise DomainError("hypersurface dimension would be negative")
    vars = list(vars) if vars is not None else [f"x{i + 1}" for i in range(len(n))]
    ring = CohRing([Generator(v, "nil", k + 1) for v, k in zip(vars, n)])
    xs = [ring.gen(v) for v in vars]
    h = ring.zero()
    for di, xi in zip(d, xs):
        h = h + xi * di
    ambient = ring.one()
    for ni, xi in zip(n, xs):
        ambient = ambient * (ring.one() + xi) ** (ni + 1)
    # (1 + h)^{-1} truncated at dim
    inv = graded_inverse([h], dim, ring.one())
    total = ambient * sum(inv[1:], inv[0])
    tangent = BundleData(dim, tuple(total.part(k) for k in range(1, dim + 1)))
    desc = {"kind": "multiproj_hypersurface", "n": n, "d": d, "vars": vars}
    return VarietyData(dim, ring, tangent, h, desc)


def projective_bundle(base: VarietyData, v: BundleData, var: str | None = None,
                      bundle_desc: dict | None = None) -> VarietyData:
    """P(V) -> base with zeta = c_1(O(1)) and tangent T_base + V (x) O(1) - O."""
    if v.rank < 1:
        raise DomainError("projective bundle needs rank >= 1")
    if var is None:
        k = sum(1 for g in base.ring.generators if g.kind == "bundle")
        var = f"z{k + 1}"
    v = v.pullback(base.ring)
    ring = base.ring.with_generator(Generator(var, "bundle", v.rank, tuple(c.poly for c in v.chern)))
    zeta = ring.gen(var)
    vv = v.pullback(ring)
    rel = vv.twist(zeta)  # c(V (x) O(1)); minus trivial O does not change c
    total = base.tangent.pullback(ring).total() * rel.total() if base.tangent.rank else rel.total()
    dim = base.dimension + v.rank - 1
    tangent = BundleData(dim, tuple(total.part(k) for k in range(1, dim + 1)))
    desc = {
        "kind": "projective_bundle",
        "base": base.descriptor,
        "bundle": bundle_desc or {"chern": [str(c) for c in v.chern]},
        "var": var,
    }
    return VarietyData(dim, ring, tangent, base.fundamental.pullback(ring), desc)


# -- descriptors ---------------------------------------------------------------

def from_descriptor(desc: dict | str) -> VarietyData:
    """Build a variety from its JSON descriptor (dict or JSON text)."""
    if isinstance(desc, str):
        desc = json.loads(desc)
    kind = desc.get("kind")
    if kind == "projective_space":
        return projective_space(int(desc["n"]), desc.get("var", "x"))
    if kind == "multiproj_hypersurface":
        return multiproj_hypersurface(desc["n"], desc["d"], desc.get("vars"))
    if kind == "product":
        return product_of(from_descriptor(f) for f in desc["factors"])
    if kind == "projective_bundle":
        base = from_descriptor(desc["base"])
        b = desc["bundle"]
        if "roots" in b:
            v = BundleData.from_roots(base.ring, [base.ring.parse(r) for r in b["roots"]])
        elif "chern" in b:
            cs = tuple(base.ring.parse(c) for c in b["chern"])
            v = BundleData(len(cs), cs)
        else:
            raise DomainError("bundle needs 'roots' or 'chern'")
        return projective_bundle(base, v, desc.get("var"), bundle_desc=b)
    raise DomainError(f"unknown variety kind {kind!r}")


# -- pushforward ---------------------------------------------------------------

def pushforward_proj_bundle(coeffs: Sequence, v: BundleData):
    """pi_*(sum_k coeffs[k] zeta^k) for P(V) -> B, via pi_*(zeta^{r-1+i}) = s_i(V).

    ``coeffs`` are base-ring elements (CohElement, or MultiPoly for a free
    polynomial base, in which case the Chern classes of ``v`` may also be
    MultiPoly values wrapped in a plain list).
    """
    r = v.rank
    chern = list(v.chern)
    one = chern[0] * 0 + 1 if chern else 1
    upto = max(len(coeffs) - r, 0)
    s = graded_inverse(chern, upto, one)
    out = one * 0
    for k, beta in enumerate(coeffs):
        i = k - r + 1
        if i >= 0:
            out = out + beta * s[i]
    return out


@dataclass(frozen=True)
class FreeBundle:
    """Chern classes as plain polynomials (for pushforward over a free ring)."""
    rank: int
    chern: tuple[MultiPoly, ...]


def pushforward_by_roots(coeffs: Sequence[MultiPoly], roots: Sequence[MultiPoly]) -> MultiPoly:
    """sum_i f(-lambda_i) / prod_{j != i} (lambda_j - lambda_i) for f = sum coeffs[k] t^k.

    Works over a free polynomial ring holding explicit root symbols; the
    rational expression is cleared by the Vandermonde product and divided
    back exactly.
    """
    roots = list(roots)
    r = len(roots)
    ctx = roots[0].ctx
    vander = ctx.one()
    for i in range(r):
        for j in range(i + 1, r):
            vander = vander * (roots[j] - roots[i])
    numer = ctx.zero()
    for i, lam in enumerate(roots):
        denom = ctx.one()
        for j in range(r):
            if j != i:
                denom = denom * (roots[j] - lam)
        val = ctx.zero()
        power = ctx.one()
        for beta in coeffs:
            val = val + beta * power
            power = power * (-lam)
        numer = numer + val * vander.exact_div(denom)
    return numer.exact_div(vander)


# -- Chern numbers ---------------------------------------------------------------

def _monomial_numbers(x: VarietyData, classes: Sequence[CohElement]) -> dict[Partition, Fraction]:
    n = x.dimension
    cache: dict[Partition, CohElement] = {Partition(): x.ring.one()}

    def prod(p: Partition) -> CohElement:
        if p not in cache:
            cache[p] = prod(Partition(p[1:])) * classes[p[0] - 1]
        return cache[p]

    return {p: x.integrate(prod(p)) for p in partitions_of(n)}


def chern_monomial_numbers(x: VarietyData, virtual: bool = False) -> dict[Partition, Fraction]:
    """{I: integral of c_{i_1} ... c_{i_k}} over partitions I of dim X.

    ``virtual=True`` uses the Chern classes of -T instead of T.
    """
    classes = x.normal_chern_classes() if virtual else x.chern_classes()
    return _monomial_numbers(x, classes)


def conner_floyd_numbers(x: VarietyData, virtual: bool = True) -> dict[Partition, Fraction]:
    """{I: integral of the Conner-Floyd class c_I} (monomial symmetric in the roots)."""
    mono = chern_monomial_numbers(x, virtual=virtual)
    out = {}
    for lam in partitions_of(x.dimension):
        total = Fraction(0)
        for mu, c in monomial_in_elementary(lam).items():
            total += c * mono[mu]
        out[lam] = total
    return out


def chern_number(x: VarietyData, i: Partition | Sequence[int]) -> Fraction:
    """Conner-Floyd Chern number c_I(-T_X), the coefficient of b_I in b(X)."""
    i = Partition(i)
    if i.weight != x.dimension:
        raise DegreeError(f"partition {tuple(i)} has weight {i.weight}, dimension is {x.dimension}")
    classes = x.normal_chern_classes()
    total = Fraction(0)
    for mu, c in monomial_in_elementary(i).items():
        cls = x.ring.one()
        for part in mu:
            cls = cls * classes[part - 1]
        total += c * x.integrate(cls)
    return total


def tangent_chern_number(x: VarietyData, i: Partition | Sequence[int],
                         basis: str = "monomial") -> Fraction:
    """Chern number of T_X: ``monomial`` gives c_{i_1}...c_{i_k}[X]; ``conner_floyd`` gives c_I(T)."""
    i = Partition(i)
    if i.weight != x.dimension:
        raise DegreeError(f"partition {tuple(i)} has weight {i.weight}, dimension is {x.dimension}")
    if basis == "monomial":
        cls = x.ring.one()
        for part in i:
            cls = cls * x.c(part)
        return x.integrate(cls)
    if basis == "conner_floyd":
        return conner_floyd_numbers(x, virtual=False)[i]
    raise DomainError(f"unknown basis {basis!r}")


def power_sum_class(x: VarietyData, n: int, virtual: bool = False) -> CohElement:
    classes = x.normal_chern_classes() if virtual else x.chern_classes()
    if not classes:
        return x.ring.zero()
    return power_sums_from_elementary(classes, n)


def s_n(x: VarietyData):
    """Tangent s_n: integral of p_n(T_X) with n = dim X (0 for a point)."""
    if x.dimension == 0:
        return Fraction(0)
    return x.integrate(power_sum_class(x, x.dimension))


def log_chern_class(x: VarietyData, n: int) -> CohElement:
    """Degree-n component of log c(T_X)."""
    y = x.ring.zero()
    for c in x.chern_classes():
        y = y + c
    out = x.ring.zero()
    power = x.ring.one()
    for k in range(1, n + 1):
        power = (power * y).truncate(n)
        term = power.part(n) * Fraction(1, k)
        out = out + term if k % 2 else out - term
    return out


def s_n_via_log(x: VarietyData):
    """s_n from the logarithm: p_n(T) = (-1)^{n+1} n [log c(T)]_n."""
    n = x.dimension
    if n == 0:
        return Fraction(0)
    sign = 1 if n % 2 else -1
    return sign * n * x.integrate(log_chern_class(x, n))


def is_numerically_zero(x: VarietyData, alpha: CohElement) -> bool:
    """alpha pairs to zero against every basis monomial of complementary degree."""
    alpha = x.ring.element(alpha)
    degrees = {x.ring.ctx.weight_of(e) for e in alpha.poly.terms}
    gens = [g for g in x.ring.generators]
    for deg in degrees:
        part = alpha.part(deg)
        comp = x.dimension - deg
        if comp < 0:
            continue
        for mono in _basis_monomials(gens, comp):
            m = x.ring.element(MultiPoly.monomial(x.ring.ctx, mono + (0,) * len(x.ring.params)))
            if x.integrate(part * m):
                return False
    return True


def _basis_monomials(gens: Sequence[Generator], degree: int):
    def rec(i, left):
        if i == len(gens):
            if left == 0:
                yield ()
            return
        for k in range(0, min(gens[i].order - 1, left) + 1):
            for rest in rec(i + 1, left - k):
                yield (k,) + rest
    yield from rec(0, degree)


def is_calabi_yau(x: VarietyData) -> bool:
    """c_1(T_X) vanishes in the model ring (tested numerically)."""
    if x.dimension == 0:
        return True
    return is_numerically_zero(x, x.c(1))


def euler_characteristic(x: VarietyData):
    return x.integrate(x.c(x.dimension)) if x.dimension else x.integrate(1)
