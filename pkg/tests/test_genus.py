import pytest
from hypothesis import given, settings, strategies as st

from slcob import chern, genus
from slcob.chern import multiproj_hypersurface, point, product, projective_space
from slcob.errors import CalibrationError, DegreeError, DomainError
from slcob.exactalg import parse_poly
from slcob.genus import ELL, EllElement


def val(text):
    return parse_poly(text, ELL)


def test_anchor_values(g12):
    for n, (got, want, ok) in genus.check_anchors(g12).items():
        assert ok, (n, got, want)


def test_selected_convention_is_reported(g12):
    meta = g12.metadata()
    assert meta["convention"] == "mu4-corrected/ba-plus-mu3"
    assert meta["order"] == 12


def test_printed_curve_does_not_calibrate():
    # g2 picks up 8*a1*a3, which shifts phi(W4) by -4*a1*a3 in every convention
    with pytest.raises(CalibrationError):
        genus.calibrate(genus.krichever_curve())


def test_invariants_of_the_two_curves():
    _, g2, _ = genus.weierstrass_invariants(genus.krichever_curve())
    assert g2 == val("2*a4 + 8*a1*a3")
    _, g2, g3 = genus.weierstrass_invariants(genus.corrected_curve())
    assert g2 == val("2*a4")
    assert g3 == val("4*a2^3 - 2*a2*a4 - a3^2")


def test_characteristic_log_coefficients(g12):
    assert [g12.log_q[k] for k in range(1, 5)] == [
        val("a1"), val("-1/2*a2"), val("1/6*a3"), val("-1/4*a2^2 + 1/20*a4")]


@pytest.mark.parametrize("x,expected", [
    (point(), "1"),
    (projective_space(1), "2*a1"),
    (projective_space(2), "9/2*a1^2 - 3/2*a2"),
    (multiproj_hypersurface([3], [4]), "24*a2"),
    (multiproj_hypersurface([4], [5]), "-100*a3"),
    (multiproj_hypersurface([5], [6]), "2610*a2^2 - 387*a4"),
])
def test_genus_values(g12, x, expected):
    e = genus.genus_of_variety(x, g12)
    assert e.value == val(expected)
    assert e.degree == -x.dimension


def test_monomial_and_conner_floyd_routes_agree(g12):
    for x in (projective_space(3), multiproj_hypersurface([2, 2], [1, 2]),
              product(projective_space(1, "x"), projective_space(2, "y"))):
        assert genus.genus_of_variety(x, g12) == genus.genus_of_variety_cf(x, g12)


SMALL = [("P1", lambda v: projective_space(1, v)), ("P2", lambda v: projective_space(2, v)),
         ("Q", lambda v: multiproj_hypersurface([3], [2], [v]))]


@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
@settings(max_examples=9, deadline=None)
def test_genus_is_multiplicative(g8, a, b):
    x, y = a[1]("u"), b[1]("v")
    lhs = genus.genus_of_variety(product(x, y), g8)
    assert lhs == genus.genus_of_variety(x, g8) * genus.genus_of_variety(y, g8)


@given(st.integers(1, 5))
@settings(max_examples=5, deadline=None)
def test_output_is_homogeneous(g8, n):
    e = genus.genus_of_variety(projective_space(n), g8)
    assert e.value.is_homogeneous(n)
    assert e.degree == -n


def test_ell_element_degree_checks():
    with pytest.raises(DegreeError):
        EllElement(val("a1 + a2"), -1)
    with pytest.raises(DegreeError):
        EllElement(val("a1"), -1) + EllElement(val("a2"), -2)


def test_truncation_bound():
    with pytest.raises(DomainError):
        genus.curve_log(N=3)
    with pytest.raises(DomainError):
        genus.curve_log(N=4).K(5)


def test_disk_cache_hit_equals_miss(tmp_path):
    first = genus.curve_log(N=5, cache_dir=tmp_path)
    files = list(tmp_path.glob("genus-N5-*.json"))
    assert len(files) == 1
    second = genus.curve_log(N=5, cache_dir=tmp_path)
    assert all(first.K(n) == second.K(n) for n in range(6))
    assert first.log_q == second.log_q


def test_corrupt_cache_is_rebuilt(tmp_path):
    genus.curve_log(N=5, cache_dir=tmp_path)
    path = next(tmp_path.glob("genus-N5-*.json"))
    path.write_text("{not json")
    g = genus.curve_log(N=5, cache_dir=tmp_path)
    assert genus.check_anchors(g)[4][2]


@pytest.mark.parametrize("x,member", [
    (multiproj_hypersurface([3], [4]), True),
    (multiproj_hypersurface([4], [5]), True),
    (multiproj_hypersurface([5], [6]), True),
    (projective_space(1), False),
])
def test_image_membership(g12, x, member):
    assert genus.image_membership(genus.genus_of_variety(x, g12)) is member


def test_image_form_rewrites_in_3a2(g12):
    e = genus.genus_of_variety(multiproj_hypersurface([3], [4]), g12)
    assert genus.image_form(e).to_str() == "8*(3a2)"


def test_reference_w4_value_needs_a_third():
    # 6*a2^2 = 2/3*(3a2)^2, so the anchor class itself is outside the image ring
    assert not genus.image_membership(val("6*a2^2 - a4"))
    assert genus.image_membership(val("6*a2^2 - a4"), p=3)


def test_stated_ring_misses_a_calabi_yau_sevenfold(g12):
    # bidegree (5,5) in P4 x P4: the a2^2*a3 coefficient is not divisible by 9
    e = genus.genus_of_variety(multiproj_hypersurface([4, 4], [5, 5]), g12)
    assert e.value == val("-4809750*a2^2*a3 + 421825*a3*a4")
    assert not genus.image_membership(e)
    assert genus.image_membership(e, ring="anchor")
    assert genus.image_form(e, "anchor").to_str() == "-253200*(3a2)^2*a3 - 421825*a3*(6a2^2-a4)"


def test_anchor_ring_contains_reference_values():
    for text in genus.REFERENCE_VALUES.values():
        assert genus.image_membership(val(text), ring="anchor")
    assert not genus.image_membership(val("a4"), ring="anchor")
    with pytest.raises(DomainError):
        genus.image_form(val("a3"), ring="other")


@pytest.mark.parametrize("name", sorted(genus.CURVES))
def test_w_series_solves_its_equation(name):
    from slcob.exactalg import TruncSeries
    c = genus.CURVES[name]()
    N = 9
    W = genus._w_over_t3(c, N)
    t = TruncSeries.variable(ELL, N)
    one = TruncSeries(ELL, [1], N)
    rhs = (one + t * W * c.mu1 + t * t * W * c.mu2 + (t ** 3) * W * W * c.mu3
           + (t ** 4) * W * W * c.mu4 + (t ** 6) * W * W * W * c.mu6)
    assert rhs == W


def test_curve_log_is_inverse_of_exp(g12):
    from slcob.exactalg import TruncSeries
    assert g12.log.compose(g12.exp) == TruncSeries.variable(ELL, 12)
    assert g12.char_series[0] == 1 and g12.K(0) == genus.chern_context(12).one()


def test_cuspidal_degeneration_is_additive():
    zero = ELL.zero()
    cusp = genus.WeierstrassCurve(zero, zero, zero, zero, zero)
    from slcob.exactalg import TruncSeries
    assert genus.curve_log_series(cusp, 10) == TruncSeries.variable(ELL, 10)
