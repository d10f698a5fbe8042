import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from slcob import chern
from slcob.chern import (BundleData, multiproj_hypersurface, point, product, projective_bundle,
                         projective_space)
from slcob.errors import ContextError, DegreeError, DomainError
from slcob.exactalg import Partition


def test_point():
    x = point()
    assert x.dimension == 0
    assert x.integrate(1) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_projective_space_euler_and_top_class(n):
    x = projective_space(n)
    assert chern.euler_characteristic(x) == n + 1
    # c_1^n = (n+1)^n
    assert chern.tangent_chern_number(x, [1] * n) == (n + 1) ** n


def test_p2_numbers():
    x = projective_space(2)
    assert chern.chern_monomial_numbers(x) == {Partition([1, 1]): 9, Partition([2]): 3}
    assert chern.s_n(x) == 3


def test_p1_b_class_sign():
    # normal-bundle convention: c_1(-T) integrates to -2
    assert chern.chern_number(projective_space(1), [1]) == -2


def test_quartic_surface_is_k3():
    k3 = multiproj_hypersurface([3], [4])
    nums = chern.chern_monomial_numbers(k3)
    assert nums[Partition([2])] == 24
    assert nums[Partition([1, 1])] == 0
    assert chern.s_n(k3) == -48
    assert chern.is_calabi_yau(k3)


def test_quintic_threefold():
    q = multiproj_hypersurface([4], [5])
    assert chern.euler_characteristic(q) == -200
    assert chern.s_n(q) == -600
    assert chern.is_calabi_yau(q)


def test_sextic_fourfold_numbers():
    x = multiproj_hypersurface([5], [6])
    nums = chern.chern_monomial_numbers(x)
    assert nums[Partition([4])] == 2610
    assert nums[Partition([2, 2])] == 1350


def test_projectivized_tangent_of_p2():
    p2 = projective_space(2, "h")
    t = p2.tangent
    x = projective_bundle(p2, t)
    assert x.dimension == 3
    assert chern.euler_characteristic(x) == 6
    assert chern.tangent_chern_number(x, [1, 1, 1]) == 48


def test_degree_mismatch():
    with pytest.raises(DegreeError):
        chern.chern_number(projective_space(2), [1])


def test_product_name_clash():
    with pytest.raises(ContextError):
        product(projective_space(1, "x"), projective_space(1, "x"))


def test_bad_hypersurface():
    with pytest.raises(DomainError):
        multiproj_hypersurface([2, 1], [3])


def test_descriptor_round_trip():
    p2 = projective_space(2, "h")
    x = projective_bundle(p2, BundleData.from_roots(p2.ring, [p2.ring.parse("h"),
                                                              p2.ring.parse("-2*h")]))
    y = chern.from_descriptor(x.descriptor_json())
    assert chern.chern_monomial_numbers(y) == chern.chern_monomial_numbers(x)


def test_cf_and_monomial_bases_agree_on_s_n():
    x = multiproj_hypersurface([2, 2], [1, 2])
    assert chern.s_n(x) == -chern.chern_number(x, [x.dimension]) == chern.s_n_via_log(x)


def test_tangent_number_bases():
    x = projective_space(3)
    # Conner-Floyd (n) is s_n and (1,...,1) is the top class c_n
    assert chern.tangent_chern_number(x, [3], basis="conner_floyd") == chern.s_n(x) == 4
    assert chern.tangent_chern_number(x, [1, 1, 1], basis="conner_floyd") == 4
    assert chern.tangent_chern_number(x, [1, 1, 1]) == 64


@given(st.lists(st.integers(1, 3), min_size=2, max_size=3), st.data())
@settings(max_examples=15, deadline=None)
def test_hypersurface_numbers_permutation_invariant(ns, data):
    ds = data.draw(st.lists(st.integers(0, 3), min_size=len(ns), max_size=len(ns)))
    perm = data.draw(st.permutations(range(len(ns))))
    a = multiproj_hypersurface(ns, ds)
    b = multiproj_hypersurface([ns[i] for i in perm], [ds[i] for i in perm])
    assert chern.chern_monomial_numbers(a) == chern.chern_monomial_numbers(b)


@given(st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=9, deadline=None)
def test_s_n_vanishes_on_products(m, n):
    x = product(projective_space(m, "x"), projective_space(n, "y"))
    assert chern.s_n(x) == 0


@given(st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=9, deadline=None)
def test_euler_characteristic_multiplicative(m, n):
    x, y = projective_space(m, "x"), projective_space(n, "y")
    assert chern.euler_characteristic(product(x, y)) == (
        chern.euler_characteristic(x) * chern.euler_characteristic(y))


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_symbolic_pushforward(rank):
    from slcob.suites import symbolic_pushforward_agrees
    ok, detail = symbolic_pushforward_agrees(rank, rank + 3)
    assert ok, detail


def test_pushforward_degree_one_is_one():
    # pi_*(zeta^{r-1}) = 1
    p1 = projective_space(1, "h")
    v = BundleData.from_roots(p1.ring, [p1.ring.parse("h"), p1.ring.zero()])
    zeta_powers = [p1.ring.zero(), p1.ring.one()]
    assert chern.pushforward_proj_bundle(zeta_powers, v) == p1.ring.one()


@pytest.mark.parametrize("ns", [c for r in (1, 2, 3) for c in
                                itertools.product(range(1, 5), repeat=r)][:40])
def test_calabi_yau_family_first_chern_vanishes(ns):
    x = multiproj_hypersurface(ns, [k + 1 for k in ns])
    assert not x.c(1)


def test_log_form_matches_power_sum():
    for x in (projective_space(4), multiproj_hypersurface([1, 3], [2, 2])):
        assert chern.s_n_via_log(x) == chern.s_n(x)
        assert isinstance(chern.s_n(x), (int, Fraction))
