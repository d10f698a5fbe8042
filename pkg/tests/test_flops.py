import pytest
from hypothesis import given, settings, strategies as st

from slcob import flops
from slcob.errors import DegreeError, DomainError, FlopDefect
from slcob.flops import FlopDatum, base_variety


def datum(base, a, b):
    z = base_variety(base)
    return FlopDatum(z, tuple(z.ring.parse(r) for r in a), tuple(z.ring.parse(r) for r in b))


def test_point_base():
    d = datum("pt", ["0", "0"], ["0", "0"])
    assert d.dimension == 3
    assert flops.s_n_flop_formula(d) == flops.s_n_flop_geometric(d) == 0


def test_formula_matches_geometry_on_p1():
    d = datum("P1", ["h", "-h"], ["2*h", "0"])
    assert flops.s_n_flop_formula(d) == flops.s_n_flop_geometric(d)


def test_nonzero_example():
    # a nontrivial difference, so the comparison is not vacuous
    d = datum("P2", ["h", "0"], ["-2*h", "h"])
    s = flops.s_n_flop_formula(d)
    assert s != 0
    assert s == flops.s_n_flop_geometric(d)


def test_bracket_weights():
    n = 4
    assert flops.flop_bracket((0, 0, 0, 0), n) == 0
    assert flops.flop_bracket((1, 0, 0, 0), n) == 1 * 3 - 1 + 1 - 3


def test_rank_and_degree_validation():
    z = base_variety("P1")
    h = z.ring.parse("h")
    with pytest.raises(DomainError):
        FlopDatum(z, (h,), (h, h))
    with pytest.raises(DegreeError):
        FlopDatum(z, (h, z.ring.one()), (h, h))
    with pytest.raises(DegreeError):
        flops.s_n_flop_formula(datum("P1", ["h", "0"], ["0", "0"]), n=3)


def test_json_round_trip():
    d = datum("P1xP1", ["x + y", "-x"], ["2*y", "0"])
    again = FlopDatum.from_json(d.to_json())
    assert again.to_json() == d.to_json()


def test_grid_sizes():
    grid = flops.grid_data()
    assert len(grid) == 1 + 3 * 225


ROOTS = st.integers(-2, 2)


@given(st.sampled_from(["P1", "P2"]), st.lists(ROOTS, min_size=4, max_size=4))
@settings(max_examples=20, deadline=None)
def test_swap_antisymmetry(base, ks):
    d = datum(base, [f"{ks[0]}*h", f"{ks[1]}*h"], [f"{ks[2]}*h", f"{ks[3]}*h"])
    assert flops.s_n_flop_formula(d.swapped()) == -flops.s_n_flop_formula(d)


@given(st.lists(ROOTS, min_size=4, max_size=4))
@settings(max_examples=10, deadline=None)
def test_formula_against_geometry_random(ks):
    d = datum("P1xP1", [f"{ks[0]}*x", f"{ks[1]}*y"], [f"{ks[2]}*x + y", f"{ks[3]}*y"])
    assert flops.s_n_flop_formula(d) == flops.s_n_flop_geometric(d)


def test_random_data_is_seeded():
    a = [d.to_json() for d in flops.random_data(5, seed=7)]
    b = [d.to_json() for d in flops.random_data(5, seed=7)]
    assert a == b


def test_genus_kills_flops(g8):
    for d in (datum("P1", ["h", "-h"], ["2*h", "0"]), datum("P2", ["h", "0"], ["-2*h", "h"])):
        assert flops.flop_ideal_probe(d, g8).is_zero()


def test_flop_defect_carries_difference():
    err = FlopDefect("a1")
    assert err.difference == "a1"


def test_s_n_gcds_over_grid():
    # dimension 5 differences are divisible by 5, dimension 6 by 7 (= n + 1)
    gcds = flops.s_n_gcds(flops.grid_data())
    assert gcds[3] == 0 and gcds[4] == 0
    assert gcds[5] % 5 == 0 and gcds[5] != 0
