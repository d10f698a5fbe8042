from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from slcob import chern, lazard
from slcob.chern import multiproj_hypersurface, product, projective_space
from slcob.errors import DomainError
from slcob.exactalg import Partition
from slcob.lazard import CobClass, b_class, star_condition


def test_unit_and_zero():
    x = projective_space(2)
    assert lazard.unit_class() * b_class(x) == b_class(x)
    assert (b_class(x) - b_class(x)) == lazard.zero_class()


def test_p1_b_class():
    assert b_class(projective_space(1)).entry([1]) == -2


def test_s_n_of_class_is_normal_sign():
    for x in (projective_space(3), multiproj_hypersurface([3], [4])):
        assert lazard.s_n_of_class(b_class(x), x.dimension) == -chern.s_n(x)


def test_tangent_numbers_recovered_from_b_class():
    for x in (projective_space(4), multiproj_hypersurface([1, 2], [2, 3])):
        n = x.dimension
        assert lazard.tangent_numbers(b_class(x), n) == chern.chern_monomial_numbers(x)


def test_json_round_trip():
    c = b_class(multiproj_hypersurface([4], [5])).scale(Fraction(3, 2))
    assert CobClass.from_json(c.to_json()) == c
    mixed = b_class(projective_space(1)) + b_class(projective_space(2))
    assert CobClass.from_json(mixed.to_json()) == mixed


def test_misfiled_partition_rejected():
    with pytest.raises(DomainError):
        CobClass({3: {Partition([1, 1]): 1}})


VARIETIES = [lambda v: projective_space(1, v), lambda v: projective_space(2, v),
             lambda v: multiproj_hypersurface([2], [2], [v]),
             lambda v: multiproj_hypersurface([3], [3], [v])]


@given(st.sampled_from(VARIETIES), st.sampled_from(VARIETIES))
@settings(max_examples=12, deadline=None)
def test_b_class_is_multiplicative(f, g):
    x, y = f("u"), g("v")
    assert b_class(product(x, y)) == b_class(x) * b_class(y)


@given(st.sampled_from(VARIETIES), st.sampled_from(VARIETIES))
@settings(max_examples=12, deadline=None)
def test_products_have_vanishing_s_n(f, g):
    x, y = f("u"), g("v")
    c = b_class(x) * b_class(y)
    assert lazard.s_n_of_class(c, x.dimension + y.dimension) == 0


@pytest.mark.parametrize("n,primes", [(2, [3]), (3, [3]), (4, [5]), (8, [3]), (9, [3]),
                                      (6, [7]), (24, [5]), (14, []), (26, [3])])
def test_mandated_primes(n, primes):
    assert lazard.mandated_primes(n) == primes


@pytest.mark.parametrize("n,s,ok", [(2, -48, True), (3, 6, True), (4, -20, True),
                                    (2, 16, False), (4, 15, False), (14, 64, True),
                                    (14, 3, False), (3, 0, False)])
def test_star_condition_values(n, s, ok):
    assert star_condition(n, s) is ok


def test_star_condition_with_p():
    assert not star_condition(14, 7 * 4)
    assert star_condition(14, 7 * 4, p=7)


def test_star_condition_domain():
    with pytest.raises(DomainError):
        star_condition(3, Fraction(1, 2))
    with pytest.raises(DomainError):
        star_condition(3, 6, p=4)


@given(st.integers(2, 40), st.integers(-10 ** 6, 10 ** 6).filter(bool))
@settings(max_examples=200, deadline=None)
def test_star_invariant_under_sign_and_doubling(n, s):
    base = star_condition(n, s)
    assert star_condition(n, -s) is base
    assert star_condition(n, 2 * s) is base


def test_required_form():
    assert lazard.required_form(2) == "+-3*2^a"
    assert lazard.required_form(14) == "+-2^a"
    assert lazard.required_form(14, p=7) == "+-2^a*7^b"


@pytest.mark.parametrize("ns,ds", [([3], [4]), ([4], [5]), ([1, 2], [2, 3]), ([2, 2, 1], [1, 2, 2])])
def test_hypersurface_closed_form(ns, ds):
    assert lazard.hypersurface_s_n(ns, ds) == chern.s_n(multiproj_hypersurface(ns, ds))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_search_witness(n):
    rep = lazard.generator_search(n)
    assert rep.passes
    assert star_condition(n, rep.s_value)
    assert lazard.witness_s_n(rep) == rep.s_value
    assert lazard.s_n_of_class(lazard.witness_class(rep), n) == -rep.s_value


def test_generator_search_prefers_calabi_yau():
    rep = lazard.generator_search(4)
    assert rep.calabi_yau


def test_generator_search_domain():
    with pytest.raises(DomainError):
        lazard.generator_search(1)


def test_genus_of_class_matches_variety(g8):
    from slcob import genus
    x = multiproj_hypersurface([3], [4])
    assert lazard.genus_of_class(b_class(x), g8) == genus.genus_of_variety(x, g8)
