"""Batch verification suites driven by ``slcob verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import adams, chern, flops, genus, lazard
from .exactalg import Context, Partition, partition_count


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **detail):
        self.checks += 1
        if not ok:
            self.failures.append(detail)

    def to_json(self) -> dict:
        out = {"suite": self.name, "passed": self.passed, "checks": self.checks,
               "failures": self.failures}
        if self.info:
            out["info"] = self.info
        return out


def genus_anchors(cfg) -> SuiteResult:
    res = SuiteResult("genus-anchors")
    g = genus.curve_log(N=max(cfg.N, 4), cache_dir=cfg.cache_dir)
    for n, (got, want, ok) in sorted(genus.check_anchors(g).items()):
        res.check(ok, dimension=n, got=got, expected=want)
    return res


def flops_suite(cfg) -> SuiteResult:
    res = SuiteResult("flops")
    g = genus.curve_log(N=max(cfg.N, 7), cache_dir=cfg.cache_dir)
    data = flops.grid_data() + flops.random_data(20, cfg.seed)
    for d in data:
        a, b = flops.s_n_flop_formula(d), flops.s_n_flop_geometric(d)
        res.check(a == b, datum=d.to_json(), formula=str(a), geometric=str(b))
        if d.dimension <= 7:
            diff = flops.flop_ideal_probe(d, g, raise_on_defect=False)
            res.check(diff.is_zero(), datum=d.to_json(), genus_difference=str(diff))
    res.info["s_n_gcd_by_dimension"] = {str(n): g for n, g in flops.s_n_gcds(data).items()}
    return res


def star_suite(cfg) -> SuiteResult:
    res = SuiteResult("star")
    refs = {2: -48, 3: 6, 4: -20}
    for n, nums in genus.REFERENCE_NUMBERS.items():
        cls = {Partition(k): v for k, v in nums.items()}
        s = lazard.s_n_from_tangent_numbers(n, cls)
        res.check(s == refs[n] and lazard.star_condition(n, s, cfg.p),
                  degree=n, s_n=str(s), expected=refs[n])
    for n in range(2, 11):
        rep = lazard.generator_search(n, cfg.p)
        res.check(rep.passes and lazard.witness_s_n(rep) == rep.s_value, degree=n,
                  report=rep.to_json())
    return res


def adams_suite(cfg) -> SuiteResult:
    res = SuiteResult("adams")
    for l in cfg.primes:
        mgl = adams.e2_generators("MGL", l, 20)
        msl = adams.e2_generators("MSL", l, 20)
        for u in range(21):
            res.check(adams.poincare_count(mgl, u) == partition_count(u), theory="MGL", l=l, u=u)
            res.check(adams.poincare_count(msl, u) == adams.partitions_with_parts_at_least(u, 2),
                      theory="MSL", l=l, u=u)
        try:
            adams.msl_generator_degrees(l, 30)
            res.check(True)
        except adams.StructuralDefect as e:
            res.check(False, l=l, error=str(e))
    return res


def koszul_suite(cfg) -> SuiteResult:
    res = SuiteResult("koszul")
    for l in cfg.primes:
        for m in range(1, 5):
            k = adams.KoszulComplex(l, m, max_s=6, max_u=30)
            dims = adams.koszul_ext_dims(k)
            for b, d in dims.items():
                res.check(b.p - b.s <= 2 * b.q, l=l, m=m, bidegree=[b.s, b.p, b.q])
            for s in range(7):
                for u in range(31):
                    want = adams.sym_multiset_count(l, m, s, u)
                    got = dims.get(adams.Bidegree(s, s + 2 * u, u), 0)
                    res.check(got == want, l=l, m=m, s=s, u=u, got=got, expected=want)
        chk = adams.koszul_resolution_check(l, 3, 3)
        res.check(all(chk.values()), l=l, resolution=chk)
    return res


def pushforward_suite(cfg) -> SuiteResult:
    res = SuiteResult("pushforward")
    rng = random.Random(cfg.seed)
    for rank in (1, 2, 3):
        ok, detail = symbolic_pushforward_agrees(rank, rank + 4)
        res.check(ok, rank=rank, **detail)
        for d in range(0, 4):
            base = chern.projective_space(d, "h")
            for _ in range(3):
                ok, detail = base_pushforward_agrees(base, rank, rng)
                res.check(ok, rank=rank, base_dim=d, **detail)
    return res


def symbolic_pushforward_agrees(rank: int, degree: int) -> tuple[bool, dict]:
    """Segre route vs root formula with symbolic roots and symbolic coefficients of f."""
    names = tuple(f"l{i}" for i in range(1, rank + 1)) + tuple(f"b{k}" for k in range(degree + 1))
    ctx = Context(names)
    lams = [ctx.var(f"l{i}") for i in range(1, rank + 1)]
    coeffs = [ctx.var(f"b{k}") for k in range(degree + 1)]
    elem = [ctx.one()]
    for lam in lams:
        elem = [a + (lam * elem[i - 1] if i else 0) for i, a in enumerate(elem + [ctx.zero()])]
    v = chern.FreeBundle(rank, tuple(elem[1:]))
    seg = chern.pushforward_proj_bundle(coeffs, v)
    roots = chern.pushforward_by_roots(coeffs, lams)
    return seg == roots, {"segre": seg.to_str(), "roots": roots.to_str()}


def base_pushforward_agrees(base: chern.VarietyData, rank: int, rng) -> tuple[bool, dict]:
    """Same comparison on P^d: roots k_i h, coefficients c_k h^{j_k}, random integers."""
    ring = base.ring
    h = ring.gen(ring.generators[0].name) if ring.generators else ring.zero()
    root_ints = [rng.randint(-2, 2) for _ in range(rank)]
    terms = [(rng.randint(-3, 3), rng.randint(0, base.dimension)) for _ in range(rank + base.dimension + 1)]
    v = chern.BundleData.from_roots(ring, [h * k for k in root_ints])
    seg = chern.pushforward_proj_bundle([h ** j * c for c, j in terms], v)
    # root formula over a free ring in l_1..l_r and t, then l_i -> k_i t, t -> h
    ctx = Context(tuple(f"l{i}" for i in range(1, rank + 1)) + ("t",))
    t = ctx.var("t")
    formula = chern.pushforward_by_roots([t ** j * c for c, j in terms],
                                         [ctx.var(f"l{i}") for i in range(1, rank + 1)])
    special = formula.subs({f"l{i}": t * k for i, k in enumerate(root_ints, start=1)})
    value = ring.zero()
    for e, c in special.terms.items():
        value = value + h ** e[-1] * c
    return seg == value, {"roots": root_ints, "f": terms, "segre": str(seg), "formula": str(value)}


SUITES: dict[str, Callable] = {
    "genus-anchors": genus_anchors,
    "flops": flops_suite,
    "star": star_suite,
    "adams": adams_suite,
    "koszul": koszul_suite,
    "pushforward": pushforward_suite,
}
