"""Krichever's elliptic genus with values in Q[a1, a2, a3, a4].

The curve is the Weierstrass cubic

    y^2 + mu1 x y + mu3 y = x^3 + mu2 x^2 + mu4 x + mu6

with mu1 = 2a1, mu2 = 3a2 - a1^2, mu3 = -a3, mu4 = -a4/2 + 3a2^2 - a1 a3,
mu6 = 0.  Completing the square gives X = x + a2, Y = 2y + mu1 x + mu3 and
Y^2 = 4X^3 - 2a4 X + (a3^2 + 2 a2 a4 - 4 a2^3), so the Weierstrass function of
the curve is wp(u) = x(u) + a2 where u is the elliptic logarithm.

The characteristic series Q of the genus is not fixed by the curve alone; it
also depends on a choice of local parameter and marked point.  Candidates are
tried in a fixed order and the first one reproducing the reference values
phi(W2) = 24a2, phi(W3) = a3, phi(W4) = 6a2^2 - a4 is selected:

* ``naive``: Q(u) = u / f(u), f the inverse of the curve logarithm in t.
* ``ba``: the Baker-Akhiezer form  (log Q)'' = wp(u) - 1/u^2 - wp(z - u),
  (log Q)'(0) = sign * mu1/2, with z the elliptic coordinate of a point P with
  x(P) = 0.  The derivative wp'(z) is Y(P) up to the orientation ``sign``.

On the curve exactly as written, completing the square gives
g2 = 2a4 + 8a1a3, while the reference values force g2 = 2a4 for every genus of
Baker-Akhiezer type.  The candidates are therefore run first on the curve as
written and then on the curve with the sign of the a1a3 term of mu4 flipped
(``mu4 = -a4/2 + 3a2^2 + a1a3``), which has g2 = 2a4.  The selected pair is
recorded in :meth:`GenusSeries.metadata`.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from .chern import VarietyData, chern_monomial_numbers, conner_floyd_numbers
from .errors import CalibrationError, DegreeError, DomainError
from .exactalg import (DEFAULT_ORDER, Context, MultiPoly, Partition, TruncSeries,
                       parse_poly, partitions_of, power_sums_from_elementary,
                       series_reverse)

ELL = Context(("a1", "a2", "a3", "a4"), (1, 2, 3, 4))

# Chern numbers of the reference manifolds W2, W3, W4 (tangent, monomial basis).
REFERENCE_NUMBERS: dict[int, dict[Partition, int]] = {
    2: {Partition([1, 1]): 0, Partition([2]): 24},
    3: {Partition([1, 1, 1]): 0, Partition([2, 1]): 0, Partition([3]): 2},
    4: {Partition([1, 1, 1, 1]): 0, Partition([2, 1, 1]): 0, Partition([2, 2]): 2,
        Partition([3, 1]): 0, Partition([4]): 6},
}
REFERENCE_VALUES = {2: "24*a2", 3: "a3", 4: "6*a2^2 - a4"}


@dataclass(frozen=True)
class WeierstrassCurve:
    mu1: MultiPoly
    mu2: MultiPoly
    mu3: MultiPoly
    mu4: MultiPoly
    mu6: MultiPoly

    def coefficients(self) -> dict[str, MultiPoly]:
        return {"mu1": self.mu1, "mu2": self.mu2, "mu3": self.mu3, "mu4": self.mu4, "mu6": self.mu6}

    def equation(self) -> str:
        c = self.coefficients()
        return ("y^2 + ({mu1})*x*y + ({mu3})*y = x^3 + ({mu2})*x^2 + ({mu4})*x + ({mu6})"
                .format(**{k: v.to_str() for k, v in c.items()}))


def krichever_curve() -> WeierstrassCurve:
    a1, a2, a3, a4 = ELL.gens()
    return WeierstrassCurve(
        mu1=2 * a1,
        mu2=3 * a2 - a1 ** 2,
        mu3=-a3,
        mu4=-a4 / 2 + 3 * a2 ** 2 - a1 * a3,
        mu6=ELL.zero(),
    )


def corrected_curve() -> WeierstrassCurve:
    """The curve with the a1*a3 term of mu4 sign-flipped (g2 = 2a4)."""
    a1, a3 = ELL.var("a1"), ELL.var("a3")
    c = krichever_curve()
    return WeierstrassCurve(c.mu1, c.mu2, c.mu3, c.mu4 + 2 * a1 * a3, c.mu6)


CURVES = {"as-written": krichever_curve, "mu4-corrected": corrected_curve}


def weierstrass_invariants(curve: WeierstrassCurve) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """(shift, g2, g3) with X = x + shift and Y^2 = 4X^3 - g2 X - g3, Y = 2y + mu1 x + mu3."""
    b2 = curve.mu1 ** 2 + 4 * curve.mu2
    b4 = 2 * curve.mu4 + curve.mu1 * curve.mu3
    b6 = curve.mu3 ** 2 + 4 * curve.mu6
    r = b2 / 12
    # 4(X - r)^3 + b2 (X - r)^2 + 2 b4 (X - r) + b6
    lin = 12 * r ** 2 - 2 * b2 * r + 2 * b4
    const = -4 * r ** 3 + b2 * r ** 2 - 2 * b4 * r + b6
    return r, -lin, -const


@dataclass(frozen=True)
class EllElement:
    """Homogeneous element of Q[a1..a4] of degree -weight (deg a_i = -i)."""

    value: MultiPoly
    degree: int

    def __post_init__(self):
        if self.value and not self.value.is_homogeneous(-self.degree):
            raise DegreeError(f"{self.value} is not homogeneous of degree {self.degree}")

    def __str__(self):
        return self.value.to_str()

    def __mul__(self, other: "EllElement") -> "EllElement":
        return EllElement(self.value * other.value, self.degree + other.degree)

    def __add__(self, other: "EllElement") -> "EllElement":
        if self.value and other.value and self.degree != other.degree:
            raise DegreeError("adding elements of different degree")
        return EllElement(self.value + other.value, self.degree if self.value else other.degree)

    def __sub__(self, other: "EllElement") -> "EllElement":
        return self + EllElement(-other.value, other.degree)

    def is_zero(self) -> bool:
        return not self.value


@dataclass(frozen=True)
class Convention:
    name: str
    kind: str  # "naive" | "ba"
    sign: int
    point: str = ""  # for "ba": "origin" = (0, 0) or "mu3" = (0, -mu3)
    curve: str = "as-written"

    @property
    def id(self) -> str:
        return f"{self.curve}/{self.name}"

    def make_curve(self) -> WeierstrassCurve:
        return CURVES[self.curve]()

    def describe(self) -> str:
        if self.kind == "naive":
            param = "-x/y" if self.sign > 0 else "x/y"
            text = f"Q(u) = u/f(u), f inverse to the curve logarithm in t = {param}"
        else:
            pt = "(0, 0)" if self.point == "origin" else "(0, -mu3)"
            text = f"Baker-Akhiezer form, marked point {pt}, orientation {self.sign:+d}"
        return f"{text}; curve {self.curve}"


_BASE = (
    ("naive-minus-x-over-y", "naive", +1, ""),
    ("naive-x-over-y", "naive", -1, ""),
    ("ba-plus-origin", "ba", +1, "origin"),
    ("ba-plus-mu3", "ba", +1, "mu3"),
    ("ba-minus-origin", "ba", -1, "origin"),
    ("ba-minus-mu3", "ba", -1, "mu3"),
)
CONVENTIONS: tuple[Convention, ...] = tuple(
    Convention(name, kind, sign, point, curve)
    for curve in CURVES for name, kind, sign, point in _BASE
)


def convention_by_id(cid: str) -> Convention:
    for c in CONVENTIONS:
        if c.id == cid:
            return c
    raise DomainError(f"unknown convention {cid!r}")


# -- curve expansions ----------------------------------------------------------

def _w_over_t3(curve: WeierstrassCurve, order: int) -> TruncSeries:
    """W = w/t^3 for t = -x/y, w = -1/y.

    w = t^3 + mu1 t w + mu2 t^2 w + mu3 w^2 + mu4 t w^2 + mu6 w^3 becomes
    W = 1 + mu1 t W + mu2 t^2 W + mu3 t^3 W^2 + mu4 t^4 W^2 + mu6 t^6 W^3,
    solved coefficient by coefficient (W_k only needs W_j for j < k).
    """
    zero = ELL.zero()
    W, W2, W3 = [ELL.one()], [ELL.one()], [ELL.one()]
    for k in range(1, order + 1):
        c = curve.mu1 * W[k - 1]
        if k >= 2:
            c = c + curve.mu2 * W[k - 2]
        if k >= 3:
            c = c + curve.mu3 * W2[k - 3]
        if k >= 4:
            c = c + curve.mu4 * W2[k - 4]
        if k >= 6 and curve.mu6:
            c = c + curve.mu6 * W3[k - 6]
        W.append(c)
        W2.append(sum((W[i] * W[k - i] for i in range(k + 1)), zero))
        W3.append(sum((W2[i] * W[k - i] for i in range(k + 1)), zero))
    return TruncSeries(ELL, W, order)


def curve_log_series(curve: WeierstrassCurve, order: int = DEFAULT_ORDER, sign: int = 1) -> TruncSeries:
    """Logarithm of the curve's formal group, integrating dx/(2y + mu1 x + mu3).

    ``sign = +1`` uses t = -x/y, ``sign = -1`` uses t = x/y.
    """
    W = _w_over_t3(curve, order + 1)
    t = TruncSeries.variable(ELL, order + 1)
    num = -2 - t * W.derivative() / W
    den = TruncSeries(ELL, [-2], order + 1) + t * curve.mu1 + (t ** 3) * W * curve.mu3
    omega = (num / den).with_order(order)
    log = omega.integral()
    if sign < 0:
        log = TruncSeries(ELL, [c if k % 2 else -c for k, c in enumerate(log.coeffs)], order)
    return log


def weierstrass_p(curve: WeierstrassCurve, order: int = DEFAULT_ORDER) -> tuple[TruncSeries, MultiPoly]:
    """(u^2 x(u), kappa) where u is the elliptic logarithm and wp(u) = x(u) + kappa."""
    big = order + 2
    W = _w_over_t3(curve, big)
    tu = series_reverse(curve_log_series(curve, big))  # t as a series in u
    ratio = tu.shift_down(1)  # t/u, exact only through u^(big-1)
    X2 = (ratio * ratio * W.compose(tu)).reciprocal()  # u^2 / (t^2 W) = u^2 x
    if any(X2[k] for k in range(1, order + 1, 2)):
        raise CalibrationError("x(u) is not even in the elliptic logarithm")
    kappa = -X2[2]
    return X2.with_order(order), kappa


def _characteristic_log(curve: WeierstrassCurve, conv: Convention, order: int) -> TruncSeries:
    """log Q(u) as a series with zero constant term."""
    if conv.kind == "naive":
        ell = curve_log_series(curve, order + 1, conv.sign)
        f = series_reverse(ell)
        Q = f.shift_down(1).reciprocal().with_order(order)
        return Q.log()
    X2, kappa = weierstrass_p(curve, order + 2)
    P = (X2 + TruncSeries.variable(ELL, X2.order) * TruncSeries.variable(ELL, X2.order) * kappa
         - 1).shift_down(2)  # wp(u) - 1/u^2
    P = P.with_order(order)
    g2 = 20 * P[2]
    if conv.point == "origin":
        xP, yP = ELL.zero(), ELL.zero()
    else:
        xP, yP = ELL.zero(), -curve.mu3
    wpz = xP + kappa
    dwpz = conv.sign * (2 * yP + curve.mu1 * xP + curve.mu3)
    # F(v) = wp(z - v): F'' = 6 F^2 - g2/2, F(0) = wp(z), F'(0) = -wp'(z)
    F = [wpz, -dwpz]
    for k in range(0, order - 1):
        sq = sum((F[i] * F[k - i] for i in range(k + 1)), ELL.zero())
        rhs = 6 * sq - (g2 / 2 if k == 0 else 0)
        F.append(rhs / ((k + 2) * (k + 1)))
    Fs = TruncSeries(ELL, F, order)
    alpha = conv.sign * curve.mu1 / 2
    return (P - Fs).integral().integral() + TruncSeries.variable(ELL, order) * alpha


# -- genus series ----------------------------------------------------------------

def chern_context(n: int) -> Context:
    return Context(("a1", "a2", "a3", "a4") + tuple(f"c{i}" for i in range(1, n + 1)),
                   (0, 0, 0, 0) + tuple(range(1, n + 1)))


@dataclass
class GenusSeries:
    """Characteristic data of the genus for one convention, up to order N."""

    order: int
    convention: Convention
    log_q: TruncSeries            # log Q(u)
    char_series: TruncSeries      # Q(u)
    exp: TruncSeries              # f(u) = u / Q(u)
    log: TruncSeries              # inverse of f
    curve_log: TruncSeries        # logarithm of the curve's formal group (t = -x/y)
    _K: dict[int, MultiPoly] = field(default_factory=dict, repr=False)

    @property
    def cctx(self) -> Context:
        return chern_context(self.order)

    def K(self, n: int) -> MultiPoly:
        """Multiplicative-sequence polynomial K_n in c1..cn (coefficients in a's)."""
        if n < 0 or n > self.order:
            raise DomainError(f"K_{n} outside the truncation 0..{self.order}")
        if n not in self._K:
            self._build_K(n)
        return self._K[n]

    def _build_K(self, upto: int):
        ctx = self.cctx
        cs = [ctx.var(f"c{i}") for i in range(1, self.order + 1)]
        # S_k = l_k p_k(c), E = exp(sum S_k) graded by c-weight
        S = [ctx.zero()]
        for k in range(1, upto + 1):
            lk = self.log_q[k].embed(ctx)
            S.append(power_sums_from_elementary(cs[:k], k) * lk if lk else ctx.zero())
        E = [ctx.one()]
        for n in range(1, upto + 1):
            acc = ctx.zero()
            for k in range(1, n + 1):
                if S[k]:
                    acc = acc + S[k] * E[n - k] * k
            E.append(acc / n)
        for n, e in enumerate(E):
            self._K.setdefault(n, e)

    def q_coeff(self, k: int) -> MultiPoly:
        return self.char_series[k]

    def metadata(self) -> dict:
        return {"convention": self.convention.id, "description": self.convention.describe(),
                "order": self.order}


def build_genus_series(curve: WeierstrassCurve, order: int, conv: Convention) -> GenusSeries:
    log_q = _characteristic_log(curve, conv, order)
    Q = log_q.exp()
    f = (TruncSeries.variable(ELL, order) * Q.reciprocal())
    return GenusSeries(order, conv, log_q, Q, f, series_reverse(f),
                       curve_log_series(curve, order))


def genus_of_chern_numbers(dim: int, numbers: Mapping[Partition, Fraction], g: GenusSeries,
                           basis: str = "monomial") -> EllElement:
    """phi from tangent Chern numbers of a dim-dimensional class.

    ``basis="monomial"`` expects c_{i1}...c_{ik}[X]; ``"conner_floyd"`` expects
    c_I(T)[X], paired with prod_j q_{i_j} where Q = sum q_k u^k.
    """
    numbers = {Partition(k): Fraction(v) for k, v in numbers.items()}
    for p in numbers:
        if p.weight != dim:
            raise DegreeError(f"partition {tuple(p)} does not have weight {dim}")
    out = ELL.zero()
    if basis == "monomial":
        K = g.K(dim)
        cctx = g.cctx
        na = 4
        by_mono: dict[tuple, MultiPoly] = {}
        for e, c in K.terms.items():
            by_mono.setdefault(e[na:], {})[e[:na]] = c
        for ce, aterms in by_mono.items():
            parts = []
            for i, k in enumerate(ce):
                parts += [i + 1] * k
            val = numbers.get(Partition(parts), 0)
            if val:
                out = out + MultiPoly(ELL, aterms).scale(val)
    elif basis == "conner_floyd":
        for lam, val in numbers.items():
            if val:
                term = ELL.one()
                for part in lam:
                    term = term * g.q_coeff(part)
                out = out + term.scale(val)
    else:
        raise DomainError(f"unknown basis {basis!r}")
    return EllElement(out, -dim)


def genus_of_variety(x: VarietyData, g: GenusSeries) -> EllElement:
    if x.dimension == 0:
        return EllElement(MultiPoly.const(ELL, x.integrate(1)), 0)
    return genus_of_chern_numbers(x.dimension, chern_monomial_numbers(x), g)


def genus_of_variety_cf(x: VarietyData, g: GenusSeries) -> EllElement:
    """Same value through Conner-Floyd tangent numbers (independent route)."""
    if x.dimension == 0:
        return EllElement(MultiPoly.const(ELL, x.integrate(1)), 0)
    return genus_of_chern_numbers(x.dimension, conner_floyd_numbers(x, virtual=False), g,
                                  basis="conner_floyd")


def check_anchors(g: GenusSeries) -> dict[int, tuple[str, str, bool]]:
    out = {}
    for n, nums in REFERENCE_NUMBERS.items():
        got = genus_of_chern_numbers(n, nums, g).value
        want = parse_poly(REFERENCE_VALUES[n], ELL)
        out[n] = (got.to_str(), want.to_str(), got == want)
    return out


# -- calibration and cache ---------------------------------------------------------

def _cache_file(cache_dir, order: int, conv_id: str) -> Path:
    return Path(cache_dir) / f"genus-N{order}-{conv_id.replace('/', '__')}.json"


def _save(g: GenusSeries, cache_dir):
    path = _cache_file(cache_dir, g.order, g.convention.id)
    path.parent.mkdir(parents=True, exist_ok=True)
    for n in range(g.order + 1):
        g.K(n)
    data = {
        "order": g.order,
        "convention": g.convention.id,
        "log_q": [c.to_str() for c in g.log_q.coeffs],
        "K": {str(n): g._K[n].to_str() for n in range(g.order + 1)},
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True, indent=1))
    os.replace(tmp, path)


def _load(cache_dir, order: int, conv: Convention) -> GenusSeries | None:
    path = _cache_file(cache_dir, order, conv.id)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
        if data["convention"] != conv.id or data["order"] != order:
            return None
        log_q = TruncSeries(ELL, [parse_poly(s, ELL) for s in data["log_q"]], order)
        Q = log_q.exp()
        f = TruncSeries.variable(ELL, order) * Q.reciprocal()
        g = GenusSeries(order, conv, log_q, Q, f, series_reverse(f),
                        curve_log_series(conv.make_curve(), order))
        cctx = g.cctx
        for n, text in data.get("K", {}).items():
            g._K[int(n)] = parse_poly(text, cctx)
    except (ValueError, KeyError, TypeError):
        return None
    return g


def calibrate(curve: WeierstrassCurve | None = None) -> tuple[Convention, list[dict]]:
    """First candidate reproducing the three reference values, plus the trial log.

    With ``curve`` given, only the six parameter conventions on that curve are
    tried; otherwise every entry of CONVENTIONS in order.
    """
    if curve is None:
        candidates = [(c, c.make_curve()) for c in CONVENTIONS]
    else:
        candidates = [(Convention(n, k, sg, pt, "custom"), curve) for n, k, sg, pt in _BASE]
    trials = []
    for conv, crv in candidates:
        g = build_genus_series(crv, 4, conv)
        res = check_anchors(g)
        ok = all(r[2] for r in res.values())
        trials.append({"convention": conv.id, "values": {n: r[0] for n, r in res.items()}, "ok": ok})
        if ok:
            return conv, trials
    raise CalibrationError("no convention reproduces the reference genus values: "
                           + json.dumps(trials, sort_keys=True))


@lru_cache(maxsize=None)
def _calibration() -> tuple[Convention, tuple]:
    conv, trials = calibrate()
    return conv, tuple(json.dumps(t, sort_keys=True) for t in trials)


def calibration_report() -> dict:
    conv, trials = _calibration()
    return {"selected": conv.id, "description": conv.describe(),
            "trials": [json.loads(t) for t in trials]}


@lru_cache(maxsize=None)
def _calibrated(order: int) -> GenusSeries:
    conv, _ = _calibration()
    return build_genus_series(conv.make_curve(), order, conv)


def curve_log(curve: WeierstrassCurve | None = None, N: int = DEFAULT_ORDER,
              cache_dir: str | os.PathLike | None = None) -> GenusSeries:
    """Calibrated genus series up to order N (cached in memory, optionally on disk)."""
    if N < 4:
        raise DomainError("truncation order must be >= 4")
    if curve is not None:
        conv, _ = calibrate(curve)
        return build_genus_series(curve, N, conv)
    if cache_dir is not None:
        conv, _ = _calibration()
        g = _load(cache_dir, N, conv)
        if g is None:
            g = build_genus_series(conv.make_curve(), N, conv)
            _save(g, cache_dir)
        return g
    return _calibrated(N)


# -- image ring -----------------------------------------------------------------

IMAGE_CTX = Context(("(3a2)", "a3", "a4"), (2, 3, 4))
# generators 3a2, a3 and phi(W4) = 6a2^2 - a4, the ring the three reference values span
ANCHOR_CTX = Context(("(3a2)", "a3", "(6a2^2-a4)"), (2, 3, 4))
IMAGE_RINGS = ("stated", "anchor")


def _allowed_denominator(den: int, p: int) -> bool:
    for q in (2, p):
        if q > 1:
            while den % q == 0:
                den //= q
    return den == 1


def image_form(e: EllElement | MultiPoly, ring: str = "stated") -> MultiPoly | None:
    """Rewrite in the image-ring generators; None if a1 occurs.

    ``ring="stated"`` uses (3a2), a3, a4.  ``ring="anchor"`` uses (3a2), a3 and
    (6a2^2-a4), i.e. a2 = A/3 and a4 = 2A^2/3 - C.
    """
    if ring not in IMAGE_RINGS:
        raise DomainError(f"unknown image ring {ring!r}")
    v = e.value if isinstance(e, EllElement) else e
    if any(k[0] for k in v.terms):
        return None
    if ring == "stated":
        return MultiPoly(IMAGE_CTX, {(k2, k3, k4): c / Fraction(3) ** k2
                                     for (_, k2, k3, k4), c in v.terms.items()})
    a, b, c = ANCHOR_CTX.gens()
    a2, a4 = a / 3, a * a * Fraction(2, 3) - c
    out = ANCHOR_CTX.zero()
    for (_, k2, k3, k4), coeff in v.terms.items():
        out = out + a2 ** k2 * b ** k3 * a4 ** k4 * coeff
    return out


def image_membership(e: EllElement | MultiPoly, p: int = 1, ring: str = "stated") -> bool:
    """e lies in Z[1/2p][3a2, a3, a4] (or Z[1/2p][3a2, a3, 6a2^2 - a4] for ring="anchor")."""
    form = image_form(e, ring)
    if form is None:
        return False
    return all(_allowed_denominator(c.denominator, p) for c in form.terms.values())
