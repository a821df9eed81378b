import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfish.exactlin import (
    ROOT_WIDTH,
    Echelon,
    IntPolynomial,
    RationalMatrix,
    block_diagonal,
    charpoly,
    decimal_str,
    det,
    dominant_root,
    inverse,
    is_invertible,
    is_invertible_generic,
    kernel_basis,
    linear_combination,
    max_row_sum,
    quotient_basis,
    rank,
    solve,
    sparse,
    square_free_part,
    sturm_sequence,
)

small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return RationalMatrix.from_rows([[draw(small) for _ in range(c)] for _ in range(r)], c)


@st.composite
def square(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return RationalMatrix.from_rows([[draw(small) for _ in range(n)] for _ in range(n)], n)


def to_sympy(m: RationalMatrix):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j]))


# ---------------------------------------------------------------------------
# matrices


def test_basic_arithmetic():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    b = RationalMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).tolist() == [[2, 1], [4, 3]]
    assert (a + b).tolist() == [[1, 3], [4, 4]]
    assert (a - a).is_zero()
    assert a.T.tolist() == [[1, 3], [2, 4]]
    assert a.scale(Fraction(1, 2))[1, 1] == 2
    assert a.trace() == 5
    assert a @ (1, 1) == (3, 7)
    assert RationalMatrix.identity(3).is_identity()


def test_kron_matches_sympy():
    a = RationalMatrix.from_rows([[1, 2], [0, -1]])
    b = RationalMatrix.from_rows([[3, 0, 1]])
    expected = sympy.kronecker_product(to_sympy(a), to_sympy(b))
    assert to_sympy(a.kron(b)) == expected


def test_stacking_and_blocks():
    a = RationalMatrix.identity(2)
    b = RationalMatrix.from_rows([[5]])
    assert block_diagonal([a, b]).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 5]]
    assert a.hstack(a).shape == (2, 4)
    assert a.vstack(a).shape == (4, 2)


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        RationalMatrix.identity(2) @ RationalMatrix.identity(3)


def test_rank_det_inverse_examples():
    m = RationalMatrix.from_rows([[2, 1], [1, 1]])
    assert rank(m) == 2
    assert det(m) == 1
    assert (inverse(m) @ m).is_identity()
    sing = RationalMatrix.from_rows([[1, 2], [2, 4]])
    assert rank(sing) == 1
    assert det(sing) == 0
    with pytest.raises(ZeroDivisionError):
        inverse(sing)
    assert kernel_basis(sing) == [(-2, 1)]


def test_solve():
    m = RationalMatrix.from_rows([[1, 1], [1, -1]])
    assert solve(m, (3, 1)) == (2, 1)
    assert solve(RationalMatrix.from_rows([[1, 1], [1, 1]]), (1, 2)) is None


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols


@given(matrices())
def test_rank_and_kernel_match_sympy(m):
    sm = to_sympy(m)
    assert rank(m) == sm.rank()
    for v in kernel_basis(m):
        assert all(x == 0 for x in m @ v)


@given(square())
def test_det_and_inverse_match_sympy(m):
    sm = to_sympy(m)
    assert det(m) == sm.det()
    if sm.det() != 0:
        inv = inverse(m)
        assert to_sympy(inv) == sm.inv()
        assert (m @ inv).is_identity()
    assert is_invertible(m) == (sm.det() != 0)


@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=4))
def test_quotient_properties(rels):
    q = quotient_basis(4, rels)
    assert (q.projection @ q.section).is_identity()
    for r in rels:
        assert all(x == 0 for x in q.projection @ r)
    assert q.dim == 4 - (rank(RationalMatrix.from_rows(rels, 4)) if rels else 0)


def test_echelon_express_and_kernel():
    ech = Echelon(track=True)
    assert ech.add(sparse((1, 2, 0)))
    assert ech.add(sparse((0, 1, 1)))
    assert not ech.add(sparse((1, 3, 1)))
    assert ech.kernel  # the dependency found
    combo = ech.express(sparse((2, 5, 1)))
    assert combo == {0: 2, 1: 1}
    assert ech.express(sparse((0, 0, 1))) is None


# ---------------------------------------------------------------------------
# generic invertibility


def test_generic_invertibility_examples():
    e11 = RationalMatrix.from_rows([[1, 0], [0, 0]])
    e22 = RationalMatrix.from_rows([[0, 0], [0, 1]])
    ok, c = is_invertible_generic([e11, e22])
    assert ok and is_invertible(linear_combination(c, [e11, e22]))
    # span of nilpotents: never invertible
    e12 = RationalMatrix.from_rows([[0, 1], [0, 0]])
    assert is_invertible_generic([e12, e11 @ e12]) == (False, None)
    assert is_invertible_generic([]) == (False, None)


def test_generic_invertibility_degenerate_det_polynomial():
    # all rank-deficient but the sum is invertible
    a = RationalMatrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    b = RationalMatrix.from_rows([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    c = RationalMatrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert is_invertible_generic([a, b, c])[0]
    assert not is_invertible_generic([a, b])[0]


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_generic_invertibility_against_grid_oracle(D, k, data):
    entries = st.integers(-1, 1)
    fam = [RationalMatrix.from_rows([[data.draw(entries) for _ in range(D)] for _ in range(D)], D) for _ in range(k)]
    ok, c = is_invertible_generic(fam)
    brute = any(is_invertible(linear_combination(cs, fam))
                for cs in itertools.product(range(-2, 3), repeat=k))
    if brute:
        assert ok
    if ok:
        assert is_invertible(linear_combination(c, fam))


# ---------------------------------------------------------------------------
# polynomials and roots


@given(square(max_n=4))
def test_charpoly_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = sympy.Poly(to_sympy(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    assert list(charpoly(m).coeffs) == [int(c) for c in expected]


def test_charpoly_rejects_non_integral():
    with pytest.raises(ValueError):
        charpoly(RationalMatrix.from_rows([[Fraction(1, 2)]]))


def test_square_free_part():
    # (x-1)^2 (x+2)
    p = IntPolynomial([2, -3, 0, 1])
    assert square_free_part(p) == IntPolynomial([-2, 1, 1])


def test_sturm_counts_roots():
    seq = sturm_sequence(IntPolynomial([-2, 0, 1]))
    assert len(seq) >= 2


def test_golden_ratio_interval():
    r = dominant_root(IntPolynomial([-1, -1, 1]), 2)
    golden = (1 + sympy.sqrt(5)) / 2
    assert r.lo < golden < r.hi
    assert r.width < ROOT_WIDTH
    assert r.integer_value is None
    assert decimal_str(r.lo) == "1.618033988750"


def test_integer_root_detected():
    # (x - 2)^2 (x + 1)
    r = dominant_root(IntPolynomial([4, 0, -3, 1]), 5)
    assert r.integer_value == 2
    assert r.lo <= 2 <= r.hi


def test_dominant_root_errors():
    with pytest.raises(ValueError, match="degenerate"):
        dominant_root(IntPolynomial([3]), 1)
    with pytest.raises(ValueError):
        dominant_root(IntPolynomial([-9, 0, 1]), 1)  # largest root 3 > bound
    with pytest.raises(ValueError):
        dominant_root(IntPolynomial([1, 0, 1]), 2)  # no real root


@settings(max_examples=60)
@given(square(max_n=3))
def test_dominant_root_brackets_sympy_root(m):
    m = RationalMatrix.from_rows([[abs(x) for x in row] for row in m.tolist()], m.cols)
    p = charpoly(m)
    real = [r for r in sympy.Poly(list(reversed(p.coeffs)), sympy.Symbol("x")).real_roots()]
    if not real:
        return
    top = max(real)
    r = dominant_root(p, max_row_sum(m))
    assert r.width < ROOT_WIDTH
    assert r.lo <= top <= r.hi
    sf = square_free_part(p)
    if r.lo != r.hi:
        assert sympy.sign(sf(r.lo)) != sympy.sign(sf(r.hi)) or sf(r.lo) == 0 or sf(r.hi) == 0


def test_decimal_str():
    assert decimal_str(Fraction(1, 3)) == "0.333333333333"
    assert decimal_str(Fraction(-2, 3), 3) == "-0.667"
    assert decimal_str(Fraction(2, 3), 3, rounding="down") == "0.666"
    assert decimal_str(Fraction(1, 3), 3, rounding="up") == "0.334"
    assert decimal_str(Fraction(-1, 3), 3, rounding="down") == "-0.334"
    with pytest.raises(ValueError):
        decimal_str(1, rounding="sideways")
