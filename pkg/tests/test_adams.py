import pytest
from hypothesis import given, settings, strategies as st

from slcob import adams
from slcob.adams import Bidegree, KoszulComplex
from slcob.errors import DomainError
from slcob.exactalg import Partition, partition_count


def test_steenrod_bidegrees():
    assert adams.steenrod_bidegrees(3, 1) == {"Q": (5, 2), "P": (4, 2)}
    assert adams.steenrod_bidegrees(5, 2)["Q"] == (49, 24)


def test_vanishing_region():
    assert adams.cohomology_vanishes(5, 2, 0)
    assert not adams.cohomology_vanishes(2, 2, 0)
    assert not adams.cohomology_vanishes(4, 2, 2)
    assert adams.cohomology_vanishes(4, 1, 3)


def test_mgl_table_small():
    t = adams.e2_generators("MGL", 3, 8)
    names = [g.name for g in t.generators]
    assert names[:3] == ["h'_0", "z_(2)", "h'_1"]
    assert t.positive_weights() == list(range(1, 9))


def test_msl_table_small():
    t = adams.e2_generators("msl", 3, 10)
    assert t.positive_weights() == list(range(2, 11))
    by_weight = {g.weight: g.name for g in t.generators}
    assert by_weight[3] == "z_(ю_0)" and by_weight[9] == "z_(ю_1)"
    assert by_weight[2] == "h'_1" and by_weight[8] == "h'_2"


@pytest.mark.parametrize("l", [3, 5, 7])
def test_msl_one_generator_per_degree(l):
    assert adams.msl_generator_degrees(l, 30) == list(range(2, 31))


def test_table_domain_errors():
    with pytest.raises(DomainError):
        adams.e2_generators("MU", 3, 5)
    with pytest.raises(DomainError):
        adams.e2_generators("MGL", 9, 5)
    with pytest.raises(DomainError):
        adams.poincare_count(adams.e2_generators("MGL", 3, 5), 6)


@pytest.mark.parametrize("u,expected", [(5, 7), (10, 42), (20, 627)])
def test_mgl_counts(u, expected):
    assert adams.poincare_count(adams.e2_generators("MGL", 5, 20), u) == expected


def test_msl_counts():
    t = adams.e2_generators("MSL", 7, 20)
    assert [adams.poincare_count(t, u) for u in range(8)] == [1, 0, 1, 1, 2, 2, 4, 4]


@pytest.mark.parametrize("p,l,adic", [([2], 3, True), ([1, 1], 3, False), ([8, 1], 3, True),
                                      ([4], 5, True), ([4], 3, False)])
def test_l_adic(p, l, adic):
    assert adams.is_l_adic(p, l) is adic


def test_l_admissible_variants():
    assert adams.is_l_admissible([3, 3, 3], 3)
    assert not adams.is_l_admissible([3, 3], 3)
    assert adams.is_l_admissible([2, 2], 3)
    assert adams.is_l_admissible([1, 1, 1], 3, variant="mod")
    assert not adams.is_l_admissible([1], 3, variant="mod")
    assert adams.is_l_admissible([1], 3)


@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.integers(0, 5), st.integers(0, 30))
@settings(max_examples=80, deadline=None)
def test_koszul_diagonal_matches_multisets(l, m, s, u):
    k = KoszulComplex(l, m, max_s=5, max_u=30)
    assert adams.ext_dim(k, s, 2 * u, u) == adams.sym_multiset_count(l, m, s, u)


def test_koszul_vanishing_above_diagonal():
    k = KoszulComplex(3, 4, 6, 30, rho_max=3)
    for b in adams.koszul_ext_dims(k):
        assert b.p - b.s <= 2 * b.q


def test_rho_shift():
    k = KoszulComplex(3, 1, 1, 4, rho_max=2)
    dims = adams.koszul_ext_dims(k)
    assert dims[Bidegree(0, 0, 0)] == 1
    assert dims[Bidegree(0, 1, 1)] == 1
    assert dims[Bidegree(1, 1, 0)] == 1


@pytest.mark.parametrize("l", [3, 5])
def test_explicit_resolution(l):
    chk = adams.koszul_resolution_check(l, 3, 3)
    assert all(chk.values()), chk
    assert adams.dual_differential_is_zero(l, 3, 3)


def test_coproduct_small():
    out = adams.coproduct_partition([2, 1])
    assert set(out) == {(Partition(), Partition([2, 1])), (Partition([1]), Partition([2])),
                        (Partition([2]), Partition([1])), (Partition([2, 1]), Partition())}


@given(st.lists(st.integers(1, 4), max_size=5))
@settings(max_examples=50, deadline=None)
def test_coproduct_coassociative(parts):
    p = Partition(parts)
    assert adams.iterated_coproduct(p, left=True) == adams.iterated_coproduct(p, left=False)


@given(st.lists(st.integers(1, 4), max_size=5))
@settings(max_examples=50, deadline=None)
def test_coproduct_counitality(parts):
    p = Partition(parts)
    out = adams.coproduct_partition(p)
    assert out[(Partition(), p)] == out[(p, Partition())] == 1


@given(st.integers(0, 20))
@settings(max_examples=21, deadline=None)
def test_poincare_equals_partitions(u):
    assert adams.poincare_count(adams.e2_generators("MGL", 3, 20), u) == partition_count(u)
