import dataclasses
import itertools

import pytest

from hopfish.algebra import function_algebra, matrix_algebra
from hopfish.bimodule import Bimodule, bimodule_iso, direct_sum, morita_invertible, regular
from hopfish.exactlin import RationalMatrix
from hopfish.hopf import check_hopfish, duality_check, function_algebra_hopf, hopf_to_hopfish
from hopfish.morita import (
    MoritaPair,
    MoritaRefusal,
    block_dims,
    build_z3_example,
    central_block_idempotents,
    check_pair,
    compose_pairs,
    dual_module,
    hopfish_morita_equivalent,
    identity_pair,
    matrix_pair,
    self_conjugate,
    transport,
    z3_report,
)

TRIPLES = list(itertools.product(range(1, 4), repeat=3))
KZ2 = hopf_to_hopfish(function_algebra_hopf(2))
KZ3 = hopf_to_hopfish(function_algebra_hopf(3))


def _trace_dims(M, idempotents):
    # for an idempotent acting on M, rank = trace
    return tuple(M.left_action_by(z).trace() for z in idempotents)


@pytest.fixture(scope="module")
def z3_sweep():
    out = {}
    for rst in TRIPLES:
        pair, expected = build_z3_example(*rst)
        res = transport(KZ3, pair, check=False)
        out[rst] = (pair, expected, res)
    return out


@pytest.mark.parametrize("rst", TRIPLES, ids=lambda x: "".join(map(str, x)))
def test_z3_transport(z3_sweep, rst):
    r, s, t = rst
    pair, expected, res = z3_sweep[rst]
    zs = central_block_idempotents(pair)
    assert block_dims(regular(pair.B), zs) == (r * r, s * s, t * t) == expected["B_block_dims"]
    dims = block_dims(res.data.S, zs)
    assert dims == (r * r, s * t, s * t) == expected["S_block_dims"]
    assert _trace_dims(res.data.S, zs) == dims
    assert res.hopfish == (s == t)
    # B is semisimple, so left modules are classified by block dimensions;
    # compare that fast path with the general intertwiner search
    reg = regular(pair.B)
    by_blocks = dims == block_dims(reg, zs)
    by_maps = bimodule_iso(res.data.S.left_module(), reg.left_module(), method="intertwiner")[0]
    assert by_blocks == by_maps == res.hopfish
    assert self_conjugate(KZ3.S, pair.Q) == (s == t)
    assert duality_check(res.data.delta, res.data.eps, res.data.S).ok


@pytest.mark.parametrize("rst", [(1, 1, 1), (1, 2, 1), (2, 1, 3)], ids=lambda x: "".join(map(str, x)))
def test_z3_pair_is_valid(rst):
    pair, _ = build_z3_example(*rst)
    assert check_pair(pair).ok
    assert morita_invertible(pair.Q) and morita_invertible(pair.P)


def test_z3_report_fields():
    out = z3_report(1, 2, 1)
    assert out["S_block_dims"] == out["predicted_S_block_dims"] == [1, 2, 2]
    assert out["B_block_dims"] == [1, 4, 1]
    assert out["hopfish"] is False and out["self_conjugate"] is False
    assert out["morita_invertible_Q"] is True


@pytest.mark.parametrize("rst", [(0, 1, 1), (1, 0, 2), (0, 0, 0), (-1, 1, 1)])
def test_z3_refusals(rst):
    with pytest.raises(MoritaRefusal):
        build_z3_example(*rst)


def test_self_conjugate_with_regular_q():
    # Q = A itself: the dual of A is A, and S (x) A = S
    assert self_conjugate(KZ3.S, regular(KZ3.algebra))


def test_self_conjugate_intertwiner_and_character_agree():
    for rst in [(1, 1, 2), (2, 3, 3), (1, 2, 1)]:
        pair, _ = build_z3_example(*rst)
        assert self_conjugate(KZ3.S, pair.Q, "intertwiner") == self_conjugate(KZ3.S, pair.Q, "character")


def test_dual_module_of_regular_is_regular():
    A = function_algebra(2)
    D = dual_module(regular(A))
    assert D.dim == 2 and D.check() is None
    assert bimodule_iso(D, regular(A))[0]


# ---------------------------------------------------------------------------
# matrix examples


@pytest.fixture(scope="module")
def m2_pair():
    return matrix_pair(2, KZ2.algebra)


def test_matrix_pair_is_valid(m2_pair):
    assert m2_pair.B == matrix_algebra(2, KZ2.algebra)
    assert check_pair(m2_pair).ok
    assert m2_pair.P.check() is None and m2_pair.Q.check() is None


def test_matrix_example_passes_full_suite(m2_pair):
    res = transport(KZ2, m2_pair)
    assert res.hopfish
    d = res.data
    assert (d.delta.dim, d.eps.dim, d.S.dim) == (32, 2, 8)
    full = check_hopfish(d)
    assert full.ok, full.failed
    assert block_dims(d.S, central_block_idempotents(m2_pair)) == (4, 4)


def test_transport_is_equivalence(m2_pair):
    moved = transport(KZ2, m2_pair).data
    assert hopfish_morita_equivalent(KZ2, moved, m2_pair).ok


def test_identity_pair_changes_nothing():
    pair = identity_pair(KZ2.algebra)
    assert check_pair(pair).ok
    assert hopfish_morita_equivalent(KZ2, KZ2, pair).ok


def test_equivalence_detects_wrong_target(m2_pair):
    moved = transport(KZ2, m2_pair).data
    wrong = dataclasses.replace(moved, eps=direct_sum(moved.eps, moved.eps))
    res = hopfish_morita_equivalent(KZ2, wrong, m2_pair)
    assert not res.checks["counit"]
    assert res.checks["coproduct"] and res.checks["antipode"]


def test_composed_pairs_transport_functorially(m2_pair):
    second = matrix_pair(2, m2_pair.B)
    composed = compose_pairs(m2_pair, second)
    assert check_pair(composed).ok
    direct = transport(KZ2, composed, check=False)
    stepwise = transport(transport(KZ2, m2_pair, check=False).data, second, check=False)
    assert direct.hopfish and stepwise.hopfish
    for name in ("eps", "delta", "S"):
        assert bimodule_iso(getattr(direct.data, name), getattr(stepwise.data, name))[0], name


def test_compose_rejects_mismatch(m2_pair):
    with pytest.raises(ValueError):
        compose_pairs(m2_pair, identity_pair(KZ3.algebra))


def test_invalid_pair_refused():
    A2, A3 = KZ2.algebra, KZ3.algebra
    one, zero = RationalMatrix.identity(1), RationalMatrix.zeros(1, 1)
    # a one-dimensional piece of the regular bimodule cannot invert it
    piece = Bimodule(A2, A2, 1, [[one, zero]], [[one, zero]])
    bad = MoritaPair(A2, A2, regular(A2), piece)
    assert not check_pair(bad).ok
    with pytest.raises(MoritaRefusal):
        transport(KZ2, bad)
    with pytest.raises(MoritaRefusal):
        hopfish_morita_equivalent(KZ2, KZ2, bad)
    mixed = MoritaPair(A2, A3, regular(A2), regular(A3))
    assert check_pair(mixed).failed == ["bimodule_shapes"]
    with pytest.raises(MoritaRefusal):
        transport(KZ2, mixed)
