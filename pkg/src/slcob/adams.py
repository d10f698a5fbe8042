"""Bidegree bookkeeping for the motivic Adams E2 pages of MGL and MSL.

At an odd prime l the E2 pages are free polynomial algebras over Z/l on the
generators listed by :func:`e2_generators`.  Tridegrees are (s, p, q) with s
homological; on the diagonal p = 2q.  The Koszul part computes
Ext over the exterior algebra B on Q_0, ..., Q_{m-1}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, StructuralDefect
from .exactalg import Partition, partitions_of


def _check_prime(l: int):
    if l < 3 or l % 2 == 0 or any(l % q == 0 for q in range(3, int(l ** 0.5) + 1, 2)):
        raise DomainError(f"l must be an odd prime, got {l}")


def _powers(l: int, upto: int, start: int = 0) -> list[int]:
    out, r = [], start
    while l ** r <= upto:
        out.append(l ** r)
        r += 1
    return out


# -- partitions ------------------------------------------------------------------

def is_l_adic(p: Partition | Sequence[int], l: int) -> bool:
    """Some part equals l^s - 1 with s >= 1."""
    _check_prime(l)
    p = Partition(p)
    targets = {q - 1 for q in _powers(l, max(p, default=0) + 1, start=1)}
    return any(part in targets for part in p)


def is_l_admissible(p: Partition | Sequence[int], l: int, variant: str = "literal") -> bool:
    """Multiplicity of each part l^r (r >= 0) is 0 or divides l.

    ``variant="mod"`` instead asks that each such multiplicity be divisible by l.
    """
    _check_prime(l)
    if variant not in ("literal", "mod"):
        raise DomainError(f"unknown variant {variant!r}")
    mult = Partition(p).multiplicities()
    for q in _powers(l, max(mult, default=0)):
        k = mult.get(q, 0)
        if not k:
            continue
        if variant == "literal" and l % k:
            return False
        if variant == "mod" and k % l:
            return False
    return True


# -- generator tables ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Bidegree:
    s: int
    p: int
    q: int


@dataclass(frozen=True)
class E2Generator:
    name: str
    bidegree: Bidegree

    @property
    def weight(self) -> int:
        return self.bidegree.q


@dataclass(frozen=True)
class GeneratorTable:
    theory: str
    l: int
    max_weight: int
    generators: tuple[E2Generator, ...]

    def positive_weights(self) -> list[int]:
        return sorted(g.weight for g in self.generators if g.weight > 0)

    def to_rows(self) -> list[dict]:
        return [{"name": g.name, "s": g.bidegree.s, "p": g.bidegree.p, "q": g.bidegree.q}
                for g in self.generators]


def steenrod_bidegrees(l: int, r: int) -> dict[str, tuple[int, int]]:
    """(p, q) bidegrees of Q_r and of the Milnor primitive P^{e_r}."""
    _check_prime(l)
    return {"Q": (2 * l ** r - 1, l ** r - 1), "P": (2 * (l ** r - 1), l ** r - 1)}


def cohomology_vanishes(p: int, q: int, dim: int) -> bool:
    """H^{p,q} of a smooth variety of dimension dim vanishes for p > q + dim or p > 2q."""
    return p > q + dim or p > 2 * q


def e2_generators(theory: str, l: int, max_weight: int) -> GeneratorTable:
    theory = theory.upper()
    _check_prime(l)
    if max_weight < 0:
        raise DomainError("max_weight must be >= 0")
    hs = []
    r = 0
    while l ** r - 1 <= max_weight:
        w = l ** r - 1
        hs.append(E2Generator(f"h'_{r}", Bidegree(1, 2 * l ** r - 1, w)))
        r += 1
    h_weights = {l ** r - 1 for r in range(1, r + 1)}
    gens: list[E2Generator] = []
    if theory == "MGL":
        gens = list(hs)
        for k in range(1, max_weight + 1):
            if k not in h_weights:
                gens.append(E2Generator(f"z_({2 * k})", Bidegree(0, 2 * k, k)))
    elif theory == "MSL":
        lpows = set(_powers(l, max_weight))
        gens = list(hs)
        for k in range(1, max_weight + 1):
            if k not in lpows and k not in h_weights:
                gens.append(E2Generator(f"z_({k})", Bidegree(0, 2 * k, k)))
        r = 0
        while l ** (r + 1) <= max_weight:
            w = l ** (r + 1)
            gens.append(E2Generator(f"z_(ю_{r})", Bidegree(0, 2 * w, w)))
            r += 1
    else:
        raise DomainError(f"unknown theory {theory!r}")
    gens.sort(key=lambda g: (g.weight, g.bidegree.s, g.name))
    return GeneratorTable(theory, l, max_weight, tuple(gens))


def _count_monomials(weights: Sequence[int], u: int) -> int:
    ways = [1] + [0] * u
    for w in weights:
        for k in range(w, u + 1):
            ways[k] += ways[k - w]
    return ways[u]


def poincare_count(t: GeneratorTable, u: int) -> int:
    """Monomials of total weight u in the positive-weight generators."""
    if u < 0 or u > t.max_weight:
        raise DomainError(f"u = {u} outside 0..{t.max_weight}")
    return _count_monomials([w for w in t.positive_weights() if w <= u], u)


def msl_generator_degrees(l: int, max_weight: int) -> list[int]:
    degs = e2_generators("MSL", l, max_weight).positive_weights()
    if degs != list(range(2, max_weight + 1)):
        raise StructuralDefect(f"MSL generator weights {degs} are not one per degree 2..{max_weight}")
    return degs


def partitions_with_parts_at_least(u: int, m: int) -> int:
    return sum(1 for p in partitions_of(u) if not p or p[-1] >= m)


# -- Koszul Ext ------------------------------------------------------------------------

@dataclass(frozen=True)
class KoszulComplex:
    l: int
    m: int
    max_s: int
    max_u: int
    rho_max: int = 0  # powers of rho (bidegree (1, 1)) to include; 0 ignores rho

    def __post_init__(self):
        _check_prime(self.l)
        if self.m < 0 or self.max_s < 0 or self.max_u < 0 or self.rho_max < 0:
            raise DomainError("Koszul bounds must be non-negative")

    def q_bidegrees(self) -> list[tuple[int, int]]:
        return [(2 * self.l ** r - 1, self.l ** r - 1) for r in range(self.m)]


def koszul_ext_dims(k: KoszulComplex) -> dict[Bidegree, int]:
    """dim Ext^{s,(s+t,u)}_B as {Bidegree(s, s+t, u): dim}, nonzero entries only.

    Ext is Sym^s of the span of the dual classes h'_r (the dual Koszul
    differential is zero), so a monomial of size s in weights l^r - 1
    contributes to t = 2u.  A rho^j factor shifts (p, q) by (j, j).
    """
    weights = [l_r - 1 for l_r in (k.l ** r for r in range(k.m))]
    out: dict[Bidegree, int] = {}
    # dp[s][u] = number of size-s multisets with weight u
    dp = [[0] * (k.max_u + 1) for _ in range(k.max_s + 1)]
    dp[0][0] = 1
    for w in weights:
        for s in range(1, k.max_s + 1):
            for u in range(w, k.max_u + 1):
                dp[s][u] += dp[s - 1][u - w]
    for s in range(k.max_s + 1):
        for u in range(k.max_u + 1):
            if not dp[s][u]:
                continue
            for j in range(k.rho_max + 1):
                if u + j > k.max_u:
                    break
                t = 2 * u + j
                key = Bidegree(s, s + t, u + j)
                out[key] = out.get(key, 0) + dp[s][u]
    return out


def ext_dim(k: KoszulComplex, s: int, t: int, u: int) -> int:
    return koszul_ext_dims(k).get(Bidegree(s, s + t, u), 0)


def sym_multiset_count(l: int, m: int, s: int, u: int) -> int:
    """Brute-force count of size-s multisets of Q_0..Q_{m-1} with weight u."""
    weights = [l ** r - 1 for r in range(m)]
    return sum(1 for combo in itertools.combinations_with_replacement(range(m), s)
               if sum(weights[i] for i in combo) == u)


# Explicit Koszul resolution  Gamma(V) (x) B -> Z/l  over B = Lambda(Q_0..Q_{m-1}).

def _resolution_basis(m: int, s: int):
    """Basis of Gamma^s(V) (x) B: (multiset of indices, subset of indices)."""
    for alpha in itertools.combinations_with_replacement(range(m), s):
        for size in range(m + 1):
            for subset in itertools.combinations(range(m), size):
                yield alpha, subset


def _internal_degree(l: int, alpha, subset) -> tuple[int, int]:
    p = q = 0
    for i in tuple(alpha) + tuple(subset):
        p += 2 * l ** i - 1
        q += l ** i - 1
    return p, q


def _wedge(i: int, subset: tuple[int, ...]):
    """Q_i * e_subset as (sign, new subset) or None if zero."""
    if i in subset:
        return None
    pos = sum(1 for j in subset if j < i)
    return (-1) ** pos, tuple(sorted(subset + (i,)))


def _differential(alpha, subset):
    """d(gamma_alpha (x) e_S) = sum over distinct i in alpha of gamma_{alpha - i} (x) Q_i e_S."""
    out = {}
    for i in sorted(set(alpha)):
        w = _wedge(i, subset)
        if w is None:
            continue
        sign, new = w
        rest = list(alpha)
        rest.remove(i)
        key = (tuple(rest), new)
        out[key] = out.get(key, 0) + sign
    return out


def _rank_mod(rows: list[list[int]], l: int) -> int:
    rows = [[x % l for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], l - 2, l)
        rows[rank] = [(x * inv) % l for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % l for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def koszul_resolution_check(l: int, m: int, max_s: int) -> dict[str, bool]:
    """Verify d^2 = 0 and exactness (homology Z/l in degree 0 only) bidegree by bidegree.

    Checked for resolution degrees s <= max_s; homology at s is computed
    from the maps out of s and s+1.
    """
    _check_prime(l)
    bases = {s: list(_resolution_basis(m, s)) for s in range(max_s + 2)}
    d_sq_zero = True
    for s in range(2, max_s + 2):
        for a, sub in bases[s]:
            total = {}
            for (a1, s1), c1 in _differential(a, sub).items():
                for key, c2 in _differential(a1, s1).items():
                    total[key] = total.get(key, 0) + c1 * c2
            if any(v % l for v in total.values()):
                d_sq_zero = False
    exact = True
    for s in range(0, max_s + 1):
        by_deg: dict[tuple[int, int], list] = {}
        for b in bases[s]:
            by_deg.setdefault(_internal_degree(l, *b), []).append(b)
        up: dict[tuple[int, int], list] = {}
        for b in bases[s + 1]:
            up.setdefault(_internal_degree(l, *b), []).append(b)
        for deg, basis in by_deg.items():
            idx = {b: i for i, b in enumerate(basis)}
            # rank of d: C_s -> C_{s-1} (augmentation for s = 0)
            if s == 0:
                rank_out = 1 if deg == (0, 0) else 0
            else:
                lower = {}
                rows = []
                for b in basis:
                    img = _differential(*b)
                    for key in img:
                        lower.setdefault(key, len(lower))
                    rows.append(img)
                mat = [[0] * len(lower) for _ in rows]
                for r, img in zip(mat, rows):
                    for key, c in img.items():
                        r[lower[key]] = c
                rank_out = _rank_mod(mat, l) if lower else 0
            # rank of d: C_{s+1} -> C_s in this degree
            mat = []
            for b in up.get(deg, []):
                row = [0] * len(basis)
                for key, c in _differential(*b).items():
                    row[idx[key]] += c
                mat.append(row)
            rank_in = _rank_mod(mat, l) if mat else 0
            if len(basis) - rank_out - rank_in != 0:
                exact = False
    return {"d_squared_zero": d_sq_zero, "exact": exact}


def dual_differential_is_zero(l: int, m: int, max_s: int) -> bool:
    """Hom_B(Gamma^s(V) (x) B, Z/l) has zero differential: every term of d lands in B^+."""
    for s in range(1, max_s + 1):
        for alpha in itertools.combinations_with_replacement(range(m), s):
            for (_, subset), c in _differential(alpha, ()).items():
                if not subset and c % l:
                    return False
    return True


# -- coproduct -------------------------------------------------------------------------

def coproduct_partition(p: Partition | Sequence[int]) -> dict[tuple[Partition, Partition], int]:
    """Sum over ordered splittings p = A u B of A (x) B, each with coefficient 1.

    Unordered splittings appear in both orders; the diagonal A = B once.
    """
    p = Partition(p)
    mult = sorted(p.multiplicities().items(), reverse=True)
    out = {}
    for choice in itertools.product(*[range(k + 1) for _, k in mult]):
        a = Partition([part for (part, _), c in zip(mult, choice) for _ in range(c)])
        b = Partition([part for (part, k), c in zip(mult, choice) for _ in range(k - c)])
        out[(a, b)] = 1
    return out


def iterated_coproduct(p: Partition, left: bool = True) -> dict[tuple[Partition, ...], int]:
    """(Delta (x) 1) Delta if ``left`` else (1 (x) Delta) Delta."""
    out: dict[tuple[Partition, ...], int] = {}
    for (a, b), c in coproduct_partition(p).items():
        inner = coproduct_partition(a if left else b)
        for (x, y), d in inner.items():
            key = (x, y, b) if left else (a, x, y)
            out[key] = out.get(key, 0) + c * d
    return out
