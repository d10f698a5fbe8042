"""Cobordism classes as Chern-number vectors and the generator criterion.

A class of degree n is stored through its b-class: for each partition I of n
the Conner-Floyd number c_I(-T).  Products multiply b-series:
b_I * b_J = b_{I u J}.  The coefficient at the one-part partition (n) is the
s-number of the class in the normal convention, s_n(-T) = -s_n(T).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Any, Iterable, Mapping, Sequence

from .chern import (VarietyData, conner_floyd_numbers, from_descriptor,
                    multiproj_hypersurface, s_n)
from .errors import DomainError, InternalConsistencyError
from .exactalg import Context, MultiPoly, Partition, partitions_of, power_sums_from_elementary
from .exactalg.symmetric import elementary_monomials_count


@dataclass(frozen=True, eq=False)
class CobClass:
    """Finitely supported {degree: {Partition: Rational}} of b-coefficients."""

    components: Mapping[int, Mapping[Partition, Fraction]]
    provenance: str = ""

    def __post_init__(self):
        clean: dict[int, dict[Partition, Fraction]] = {}
        for deg, comp in self.components.items():
            for p, v in comp.items():
                p = Partition(p)
                if p.weight != deg:
                    raise DomainError(f"partition {tuple(p)} filed under degree {deg}")
                v = Fraction(v)
                if v:
                    clean.setdefault(int(deg), {})[p] = v
        object.__setattr__(self, "components", clean)

    def __eq__(self, other):
        return isinstance(other, CobClass) and self.components == other.components

    def __hash__(self):
        return hash(tuple(sorted((d, tuple(sorted(c.items()))) for d, c in self.components.items())))

    def degrees(self) -> list[int]:
        return sorted(self.components)

    def component(self, n: int) -> dict[Partition, Fraction]:
        return dict(self.components.get(n, {}))

    def entry(self, p: Partition | Sequence[int]) -> Fraction:
        p = Partition(p)
        return self.components.get(p.weight, {}).get(p, Fraction(0))

    def __add__(self, other: "CobClass") -> "CobClass":
        out: dict[int, dict[Partition, Fraction]] = {}
        for src in (self, other):
            for d, comp in src.components.items():
                tgt = out.setdefault(d, {})
                for p, v in comp.items():
                    tgt[p] = tgt.get(p, Fraction(0)) + v
        return CobClass(out, _join(self.provenance, "+", other.provenance))

    def scale(self, c) -> "CobClass":
        c = Fraction(c)
        return CobClass({d: {p: v * c for p, v in comp.items()} for d, comp in self.components.items()},
                        f"{c}*({self.provenance})" if self.provenance else "")

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "CobClass") -> "CobClass":
        return cob_mul(self, other)

    def to_json(self) -> dict:
        """{"degree": n, "entries": {"[i1,...]": "num/den"}} (single-degree classes)."""
        degs = self.degrees()
        if len(degs) > 1:
            return {"components": [CobClass({d: self.components[d]}).to_json() for d in degs]}
        deg = degs[0] if degs else 0
        entries = {p.key(): str(v) for p, v in sorted(self.components.get(deg, {}).items())}
        out: dict[str, Any] = {"degree": deg, "entries": entries}
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "CobClass":
        if isinstance(data, str):
            data = json.loads(data)
        if "components" in data:
            out = zero_class()
            for part in data["components"]:
                out = out + cls.from_json(part)
            return out
        deg = int(data["degree"])
        entries = {Partition.from_key(k): Fraction(v) for k, v in data["entries"].items()}
        return cls({deg: entries}, data.get("provenance", ""))

    def __repr__(self):
        return f"CobClass({json.dumps(self.to_json(), sort_keys=True)})"


def _join(a: str, op: str, b: str) -> str:
    if a and b:
        return f"{a} {op} {b}"
    return a or b


def unit_class() -> CobClass:
    return CobClass({0: {Partition(): 1}}, "pt")


def zero_class() -> CobClass:
    return CobClass({})


def b_class(x: VarietyData) -> CobClass:
    """b(X) = sum_I c_I(-T_X) b_I over partitions of dim X."""
    nums = conner_floyd_numbers(x, virtual=True)
    for p, v in nums.items():
        if v.denominator != 1:
            raise InternalConsistencyError(f"non-integral Chern number c_{tuple(p)} = {v}")
    return CobClass({x.dimension: nums}, x.descriptor_json())


def cob_mul(a: CobClass, b: CobClass) -> CobClass:
    out: dict[int, dict[Partition, Fraction]] = {}
    for da, ca in a.components.items():
        for db, cb in b.components.items():
            tgt = out.setdefault(da + db, {})
            for pa, va in ca.items():
                for pb, vb in cb.items():
                    k = pa.union(pb)
                    tgt[k] = tgt.get(k, Fraction(0)) + va * vb
    return CobClass(out, _join(f"({a.provenance})" if a.provenance else "", "*",
                               f"({b.provenance})" if b.provenance else ""))


def s_n_from_tangent_numbers(n: int, numbers: Mapping[Partition, Fraction]) -> Fraction:
    """s_n = p_n(c_1, ..., c_n) paired with tangent Chern-monomial numbers (Newton)."""
    if n < 1:
        raise DomainError("s_n needs n >= 1")
    ctx = Context(tuple(f"c{i}" for i in range(1, n + 1)), tuple(range(1, n + 1)))
    pn = power_sums_from_elementary(ctx.gens(), n)
    total = Fraction(0)
    for e, c in pn.terms.items():
        parts = [i + 1 for i, k in enumerate(e) for _ in range(k)]
        total += c * Fraction(numbers.get(Partition(parts), 0))
    return total


def s_n_of_class(c: CobClass, n: int) -> Fraction:
    """Coefficient at the partition (n); equals -s_n(T) for a variety."""
    if n < 1:
        raise DomainError("s_n needs n >= 1")
    return c.entry(Partition([n]))


@lru_cache(maxsize=None)
def _tangent_transition(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[Fraction, ...], ...]]:
    """Rows: tangent monomial numbers c^mu(T) as combinations of b-entries c_lam(-T)."""
    parts = partitions_of(n)
    ctx = Context(tuple(f"e{i}" for i in range(1, n + 1)), tuple(range(1, n + 1)))
    es = ctx.gens()
    # graded inverse of 1 + e1 + e2 + ...
    cT = [ctx.one()]
    for k in range(1, n + 1):
        acc = ctx.zero()
        for i in range(1, k + 1):
            acc = acc - es[i - 1] * cT[k - i]
        cT.append(acc)
    rows = []
    for mu in parts:
        poly = ctx.one()
        for part in mu:
            poly = poly * cT[part]
        row = [Fraction(0)] * len(parts)
        for exps, coeff in poly.terms.items():
            nu = Partition([i + 1 for i, k in enumerate(exps) for _ in range(k)])
            for j, lam in enumerate(parts):
                m = elementary_monomials_count(nu, lam)
                if m:
                    row[j] += coeff * m
        rows.append(tuple(row))
    return parts, tuple(rows)


def tangent_numbers(c: CobClass, n: int) -> dict[Partition, Fraction]:
    """Tangent Chern-monomial numbers c_{i1}...c_{ik}(T) of the degree-n part."""
    parts, rows = _tangent_transition(n)
    comp = c.components.get(n, {})
    vec = [comp.get(lam, Fraction(0)) for lam in parts]
    return {mu: sum((r * v for r, v in zip(row, vec)), Fraction(0)) for mu, row in zip(parts, rows)}


# -- the generator criterion ---------------------------------------------------

def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    return all(k % q for q in range(2, int(k ** 0.5) + 1))


def odd_prime_power_base(m: int) -> int | None:
    """l if m = l^i with l an odd prime and i >= 1, else None."""
    if m < 3:
        return None
    for q in range(3, m + 1, 2):
        if m % q == 0:
            if not _is_prime(q):
                return None
            while m % q == 0:
                m //= q
            return q if m == 1 else None
    return None


def mandated_primes(n: int) -> list[int]:
    out = []
    for m in (n, n + 1):
        l = odd_prime_power_base(m)
        if l is not None and l not in out:
            out.append(l)
    return out


def required_form(n: int, p: int = 1) -> str:
    ls = mandated_primes(n)
    head = "*".join(str(l) for l in ls)
    tail = "2^a" + (f"*{p}^b" if p > 1 else "")
    return f"+-{head}*{tail}" if head else f"+-{tail}"


def star_condition(n: int, s, p: int = 1) -> bool:
    """|s| = (mandated primes) * 2^a * p^b."""
    s = Fraction(s)
    if s.denominator != 1:
        raise DomainError(f"s must be integral, got {s}")
    if p != 1 and not _is_prime(p):
        raise DomainError(f"p must be 1 or a prime, got {p}")
    m = abs(int(s))
    if m == 0:
        return False
    for l in mandated_primes(n):
        if m % l:
            return False
        m //= l
    for q in (2, p):
        if q > 1:
            while m % q == 0:
                m //= q
    return m == 1


@dataclass
class GeneratorReport:
    degree: int
    s_value: Fraction
    required_form: str
    witness: list[tuple[int, dict]]
    passes: bool
    calabi_yau: bool = False
    best_gcd: int = 0
    candidates_examined: int = 0

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "s_n": str(self.s_value),
            "required_form": self.required_form,
            "witness": [{"coefficient": c, "variety": d} for c, d in self.witness],
            "passes": self.passes,
            "calabi_yau": self.calabi_yau,
            "best_gcd": self.best_gcd,
            "candidates_examined": self.candidates_examined,
        }


DEFAULT_FAMILY = {"max_factors": 3, "max_n_excess": 1, "max_d_excess": 2,
                  "coeff_bound": 4, "include_products": True, "max_terms": 2}


def hypersurface_s_n(n_list: Sequence[int], d_list: Sequence[int]) -> int:
    """s_n(H) for H of multidegree d in prod P^{n_j}, from p_n(T_H) = p_n(T_amb) - h^n.

    The integral of (sum_j (n_j+1) x_j^n - h^n) h over the ambient space.
    """
    r = len(n_list)
    dim = sum(n_list) - 1
    target = tuple(n_list)
    total = 0
    for j in range(r):
        for k in range(r):
            e = [0] * r
            e[j] += dim
            e[k] += 1
            if tuple(e) == target:
                total += (n_list[j] + 1) * d_list[k]
    multinom = factorial(dim + 1)
    for nj in n_list:
        multinom //= factorial(nj)
    prod = 1
    for nj, dj in zip(n_list, d_list):
        prod *= dj ** nj
    return total - multinom * prod


def _family(n: int, family: Mapping) -> list[tuple[dict, int, bool]]:
    """(descriptor, s_n, is_CY) for every candidate, in canonical order."""
    max_r = int(family.get("max_factors", 3))
    max_ni = n + int(family.get("max_n_excess", 1))
    max_di = n + int(family.get("max_d_excess", 2))
    out = []
    seen = set()
    for r in range(1, max_r + 1):
        for ns in _sorted_compositions(n + 1, r, max_ni):
            for ds in itertools.product(range(0, max_di + 1), repeat=r):
                key = tuple(sorted(zip(ns, ds), reverse=True))
                if key in seen:
                    continue
                seen.add(key)
                nl = [a for a, _ in key]
                dl = [b for _, b in key]
                cy = all(b == a + 1 for a, b in key)
                out.append(({"kind": "multiproj_hypersurface", "n": nl, "d": dl},
                            hypersurface_s_n(nl, dl), cy))
    if family.get("include_products", True):
        for parts in partitions_of(n):
            desc = ({"kind": "projective_space", "n": parts[0]} if len(parts) == 1 else
                    {"kind": "product", "factors": [
                        {"kind": "projective_space", "n": k, "var": f"x{i + 1}"}
                        for i, k in enumerate(parts)]})
            s = n + 1 if len(parts) == 1 else 0
            out.append((desc, s, False))
    return out


def _sorted_compositions(total: int, parts: int, cap: int):
    """Non-increasing tuples of `parts` integers in [1, cap] summing to total."""
    def rec(left, k, mx):
        if k == 0:
            if left == 0:
                yield ()
            return
        for first in range(min(mx, left), 0, -1):
            for rest in rec(left - first, k - 1, first):
                yield (first,) + rest
    yield from rec(total, parts, cap)


def generator_search(n: int, p: int = 1, search_space: Mapping | None = None) -> GeneratorReport:
    """First class (single candidate, then two-term combination) passing the criterion.

    Calabi-Yau candidates are tried before the rest of the family, so the
    witness is a class with c_1 = 0 whenever one exists in range.
    """
    if n < 2:
        raise DomainError("polynomial generators start in degree 2")
    family = dict(DEFAULT_FAMILY, **(search_space or {}))
    cands = _family(n, family)
    if not cands:
        raise DomainError("empty search space")
    bound = int(family.get("coeff_bound", 4))
    max_terms = int(family.get("max_terms", 2))
    form = required_form(n, p)
    g = 0
    for _, s, _ in cands:
        g = gcd(g, abs(s))
    examined = 0
    tiers = [[c for c in cands if c[2]], cands]
    for tier in tiers:
        for desc, s, cy in tier:
            examined += 1
            if star_condition(n, s, p):
                return GeneratorReport(n, Fraction(s), form, [(1, desc)], True, cy, g, examined)
        if max_terms >= 2:
            coeffs = [c for c in range(-bound, bound + 1) if c]
            live = [c for c in tier if c[1]]
            for (d1, s1, cy1), (d2, s2, cy2) in itertools.combinations(live, 2):
                for c1 in coeffs:
                    if c1 < 0:
                        continue  # overall sign is irrelevant to the criterion
                    for c2 in coeffs:
                        examined += 1
                        s = c1 * s1 + c2 * s2
                        if star_condition(n, s, p):
                            return GeneratorReport(n, Fraction(s), form, [(c1, d1), (c2, d2)],
                                                   True, cy1 and cy2, g, examined)
    return GeneratorReport(n, Fraction(g), form, [], False, False, g, examined)


def witness_class(report: GeneratorReport) -> CobClass:
    out = zero_class()
    for c, desc in report.witness:
        out = out + b_class(from_descriptor(desc)).scale(c)
    return out


def witness_s_n(report: GeneratorReport) -> Fraction:
    """Recompute the witness's tangent s_n through the full chern route."""
    return sum((c * s_n(from_descriptor(d)) for c, d in report.witness), Fraction(0))


def genus_of_class(c: CobClass, g) -> "EllElement":
    """phi of a homogeneous class via its tangent Chern numbers."""
    from .genus import ELL, EllElement, genus_of_chern_numbers
    degs = [d for d in c.degrees()]
    if not degs:
        return EllElement(ELL.zero(), 0)
    if len(degs) > 1:
        raise DomainError("genus_of_class needs a homogeneous class")
    n = degs[0]
    if n == 0:
        return EllElement(MultiPoly.const(ELL, c.entry(Partition())), 0)
    return genus_of_chern_numbers(n, tangent_numbers(c, n), g)
