"""Classical flops: the two iterated projective bundles and their s_n.

For rank-2 bundles A, B on a smooth base Z the flop difference is

    X1 - X2 = P_{P(A)}(B (x) O_{P(A)}(-1) + O) - P_{P(B)}(A (x) O_{P(B)}(-1) + O),

both of dimension dim Z + 3.  ``s_n_flop_formula`` evaluates the closed form
in the Chern roots a1, a2 of A and b1, b2 of B; ``s_n_flop_geometric``
builds the two varieties and subtracts their s_n.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterator, Sequence

from .chern import (BundleData, CohElement, VarietyData, from_descriptor, point,
                    product, projective_bundle, projective_space, s_n)
from .errors import DegreeError, DomainError, FlopDefect
from .genus import EllElement, GenusSeries, genus_of_variety


@dataclass(frozen=True, eq=False)
class FlopDatum:
    z: VarietyData
    roots_a: tuple[CohElement, CohElement]
    roots_b: tuple[CohElement, CohElement]

    def __post_init__(self):
        if len(self.roots_a) != 2 or len(self.roots_b) != 2:
            raise DomainError("classical flops need rank-2 bundles A and B")
        ring = self.z.ring
        ra = tuple(ring.element(r) for r in self.roots_a)
        rb = tuple(ring.element(r) for r in self.roots_b)
        for r in ra + rb:
            if r and not r.poly.is_homogeneous(1):
                raise DegreeError(f"Chern root {r} is not of degree 1")
        object.__setattr__(self, "roots_a", ra)
        object.__setattr__(self, "roots_b", rb)

    @property
    def dimension(self) -> int:
        return self.z.dimension + 3

    def swapped(self) -> "FlopDatum":
        return FlopDatum(self.z, self.roots_b, self.roots_a)

    def to_json(self) -> dict:
        return {"base": self.z.descriptor, "rootsA": [str(r) for r in self.roots_a],
                "rootsB": [str(r) for r in self.roots_b]}

    @classmethod
    def from_json(cls, data: dict) -> "FlopDatum":
        z = from_descriptor(data["base"])
        ra = [z.ring.parse(str(r)) for r in data["rootsA"]]
        rb = [z.ring.parse(str(r)) for r in data["rootsB"]]
        return cls(z, tuple(ra), tuple(rb))

    def __repr__(self):
        return f"FlopDatum({self.to_json()})"


def _side(z: VarietyData, first: Sequence[CohElement], second: Sequence[CohElement],
          names: tuple[str, str]) -> VarietyData:
    """P_{P(first)}(second (x) O(-1) + O)."""
    a = BundleData.from_roots(z.ring, first)
    pa = projective_bundle(z, a, names[0],
                           bundle_desc={"roots": [str(r) for r in first]})
    zeta = pa.ring.gen(names[0])
    roots = [r.pullback(pa.ring) - zeta for r in second] + [pa.ring.zero()]
    v = BundleData.from_roots(pa.ring, roots)
    return projective_bundle(pa, v, names[1], bundle_desc={"roots": [str(r) for r in roots]})


def flop_difference_varieties(f: FlopDatum) -> tuple[VarietyData, VarietyData]:
    taken = {g.name for g in f.z.ring.generators}
    k = 1
    while f"z{k}" in taken or f"z{k + 1}" in taken:
        k += 1
    names = (f"z{k}", f"z{k + 1}")
    return _side(f.z, f.roots_a, f.roots_b, names), _side(f.z, f.roots_b, f.roots_a, names)


def _check_n(f: FlopDatum, n: int | None) -> int:
    if n is None:
        return f.dimension
    if n != f.dimension:
        raise DegreeError(f"n = {n} but the flop has dimension {f.dimension}")
    return n


def flop_bracket(i: Sequence[int], n: int) -> int:
    """The bracket weight attached to the monomial a1^i1 a2^i2 b1^i3 b2^i4."""
    i1, i2, i3, i4 = i
    return ((-1) ** i2 * comb(n - 1, i1) + (-1) ** i1 * comb(n - 1, i2)
            + (-1) ** (i4 + 1) * comb(n - 1, i3) + (-1) ** (i3 + 1) * comb(n - 1, i4))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def s_n_flop_formula(f: FlopDatum, n: int | None = None) -> Fraction:
    """Closed-form s_n of X1 - X2 as an integral over Z."""
    n = _check_n(f, n)
    ring = f.z.ring
    roots = f.roots_a + f.roots_b
    powers = [[ring.one()] for _ in roots]
    for pw, r in zip(powers, roots):
        for _ in range(n - 3):
            pw.append(pw[-1] * r)
    total = ring.zero()
    for idx in _compositions(n - 3, 4):
        w = flop_bracket(idx, n)
        if w:
            term = ring.one()
            for pw, k in zip(powers, idx):
                term = term * pw[k]
            total = total + term * w
    return f.z.integrate(total)


def s_n_flop_geometric(f: FlopDatum, n: int | None = None) -> Fraction:
    n = _check_n(f, n)
    x1, x2 = flop_difference_varieties(f)
    return s_n(x1) - s_n(x2)


def flop_ideal_probe(f: FlopDatum, g: GenusSeries, raise_on_defect: bool = True) -> EllElement:
    """phi(X1) - phi(X2); must vanish."""
    x1, x2 = flop_difference_varieties(f)
    diff = genus_of_variety(x1, g) - genus_of_variety(x2, g)
    if raise_on_defect and not diff.is_zero():
        raise FlopDefect(diff)
    return diff


def s_n_gcds(data: Sequence[FlopDatum]) -> dict[int, int]:
    """gcd of s_n(X1 - X2) over the data, per dimension (0 when all vanish)."""
    out: dict[int, int] = {}
    for d in data:
        s = s_n_flop_formula(d)
        out[d.dimension] = gcd(out.get(d.dimension, 0), int(s))
    return dict(sorted(out.items()))


# -- data families -------------------------------------------------------------

GRID_BASES = ("pt", "P1", "P2", "P1xP1")


def base_variety(name: str) -> VarietyData:
    if name == "pt":
        return point()
    if name.startswith("P") and name[1:].isdigit():
        return projective_space(int(name[1:]), "h")
    if name == "P1xP1":
        return product(projective_space(1, "x"), projective_space(1, "y"))
    if name == "P1xP2":
        return product(projective_space(1, "x"), projective_space(2, "y"))
    raise DomainError(f"unknown base {name!r}")


def _hyperplane_sum(z: VarietyData) -> CohElement:
    h = z.ring.zero()
    for g in z.ring.generators:
        h = h + z.ring.gen(g.name)
    return h


def grid_data(bases: Sequence[str] = GRID_BASES, bound: int = 2) -> list[FlopDatum]:
    """Roots k*H with H the sum of hyperplane classes, k in [-bound, bound].

    Root pairs are taken unordered within A and within B.  The point base
    contributes its single (zero-root) datum.
    """
    out = []
    for name in bases:
        z = base_variety(name)
        if z.dimension == 0:
            zero = z.ring.zero()
            out.append(FlopDatum(z, (zero, zero), (zero, zero)))
            continue
        H = _hyperplane_sum(z)
        pairs = list(itertools.combinations_with_replacement(range(-bound, bound + 1), 2))
        for pa in pairs:
            for pb in pairs:
                out.append(FlopDatum(z, tuple(H * k for k in pa), tuple(H * k for k in pb)))
    return out


def random_data(count: int, seed: int, bases: Sequence[str] = ("P1", "P2", "P1xP1", "P3", "P1xP2"),
                bound: int = 2) -> list[FlopDatum]:
    """Seeded data with roots sum_j k_j x_j, independent k_j in [-bound, bound]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        z = base_variety(rng.choice(list(bases)))
        gens = [z.ring.gen(g.name) for g in z.ring.generators]

        def root():
            r = z.ring.zero()
            for x in gens:
                r = r + x * rng.randint(-bound, bound)
            return r
        out.append(FlopDatum(z, (root(), root()), (root(), root())))
    return out
