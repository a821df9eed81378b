from fractions import Fraction

import pytest
import sympy

from hopfish.enumeration import SearchConfig, search_tensors
from hopfish.exactlin import ROOT_WIDTH
from hopfish.fusion import (
    check_multiplicative,
    format_fusion_rule,
    fp_dimension,
    fp_dimensions,
    multiplication_matrix,
    quasi_hopf_obstruction,
    representation_ring_table,
)
from hopfish.hypergroupoid import (
    cyclic_group_tensor,
    discrete_groupoid_tensor,
    is_groupoid,
    pair_groupoid_tensor,
    validate,
    yang_lee_tensor,
)

GOLDEN = (1 + sympy.sqrt(5)) / 2


def test_multiplication_matrix_convention():
    N = multiplication_matrix(yang_lee_tensor(1), 1)
    # columns are images: g*e = g, g*g = e + g
    assert N.tolist() == [[0, 1], [1, 1]]


def test_yang_lee_fp_dimension():
    f = fp_dimension(yang_lee_tensor(1), 1)
    assert str(f.charpoly) == "x^2 - x - 1"
    assert f.lo < GOLDEN < f.hi
    assert f.hi - f.lo < ROOT_WIDTH
    assert f.integer_value is None


@pytest.mark.parametrize("m", range(0, 5))
def test_yang_lee_family(m):
    f = fp_dimension(yang_lee_tensor(m), 1)
    exact = (m + sympy.sqrt(m * m + 4)) / 2
    assert f.lo <= exact <= f.hi
    # m = 0 is Z/2, whose FP dimension is 1
    assert (f.integer_value is not None) == (m == 0)


def test_unit_has_dimension_one():
    assert fp_dimension(yang_lee_tensor(3), 0).integer_value == 1


def test_obstruction_verdicts():
    o = quasi_hopf_obstruction(yang_lee_tensor(1))
    assert o["verdict"] == "obstructed" and o["witnesses"] == [1]
    assert quasi_hopf_obstruction(cyclic_group_tensor(3))["verdict"] == "unobstructed"


@pytest.mark.parametrize("t", [cyclic_group_tensor(4), discrete_groupoid_tensor(3)])
def test_groupoids_have_unit_dimensions(t):
    rep = fp_dimensions(t)
    assert all(f.integer_value == 1 for f in rep.dims)
    assert not rep.obstructed
    assert quasi_hopf_obstruction(t)["verdict"] == "unobstructed"


def test_arrows_between_objects_are_nilpotent():
    # spectral radius of left multiplication: 1 on loops, 0 on arrows i -> j, i != j
    t = pair_groupoid_tensor(2)
    h = validate(t)
    rep = fp_dimensions(t)
    assert [f.integer_value for f in rep.dims] == [1 if h.l[g] == h.r[g] else 0 for g in range(t.n)]
    assert quasi_hopf_obstruction(t)["verdict"] == "unobstructed"


def test_fusion_table_and_format():
    t = yang_lee_tensor(1)
    table = dict(representation_ring_table(t))
    assert table[(1, 1)] == [(0, 1), (1, 1)]
    assert format_fusion_rule(1, 1, table[(1, 1)], {0: "e", 1: "g"}) == "g * g = e + g"
    assert format_fusion_rule(0, 0, [], {}) == "0 * 0 = 0"
    assert format_fusion_rule(1, 1, [(1, 2)]) == "1 * 1 = 2*1"


CENSUS = search_tensors(SearchConfig(2, 3, "hyper"))[0] + search_tensors(SearchConfig(3, 2, "hyper"))[0]


@pytest.mark.parametrize("t", CENSUS, ids=lambda t: str(t.flat()))
def test_census_fusion_properties(t):
    h = validate(t)
    table = representation_ring_table(t)
    for (g, x), terms in table:
        assert dict(terms) == {k: c for k, c in enumerate(t.d[g][x]) if c}
    rep = fp_dimensions(t)
    for f in rep.dims:
        assert f.hi - f.lo < ROOT_WIDTH or f.lo == f.hi
    if len(h.units) == 1:
        assert check_multiplicative(t, rep)
    if is_groupoid(h):
        assert all(f.integer_value == 1 for f in rep.dims)


def test_multiplicativity_detects_wrong_dimensions():
    from hopfish.exactlin import DominantRoot
    from hopfish.fusion import FpDim, FpReport

    t = cyclic_group_tensor(2)
    rep = fp_dimensions(t)
    fake = FpReport((rep.dims[0], FpDim(1, rep.dims[1].charpoly, DominantRoot(Fraction(2), Fraction(2), 2))),
                    rep.matrices)
    assert not check_multiplicative(t, fake)
