"""Exact rational linear algebra and real-root isolation.

Everything here works over Q with ``fractions.Fraction`` (integers are kept
as plain ``int`` whenever arithmetic allows it, which is most of the time for
the 0/1 matrices that structure maps produce).  Matrices are stored sparsely,
row by row, because the action matrices of bimodules over k^G and matrix
algebras are overwhelmingly zero.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

def q(x) -> int | Fraction:
    """Coerce ``x`` to an exact rational, preferring ``int`` when integral."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point values are not exact rationals")
    if isinstance(x, str):
        x = Fraction(x)
    else:
        x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _div(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    r = Fraction(a) / b
    return r.numerator if r.denominator == 1 else r


def _axpy(v: dict, a, w: dict) -> None:
    """v += a*w in place, dropping zeros."""
    for j, x in w.items():
        nv = v.get(j, 0) + a * x
        if nv:
            v[j] = nv
        else:
            v.pop(j, None)


def sparse(vec: Iterable) -> dict:
    return {i: q(x) for i, x in enumerate(vec) if x}


def dense(v: dict, n: int) -> tuple:
    out = [0] * n
    for i, x in v.items():
        out[i] = x
    return tuple(out)


class RationalMatrix:
    """An immutable rows x cols matrix of exact rationals, stored as sparse rows."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Sequence[dict] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [{} for _ in range(rows)]
        if len(data) != rows:
            raise ValueError(f"expected {rows} rows, got {len(data)}")
        self._data = tuple(data)
        self._hash = None

    # construction
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ValueError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, [sparse(r) for r in rows])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        data = [{} for _ in range(rows)]
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, x in items:
                if x:
                    data[i][j] = q(x)
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> "RationalMatrix":
        n = len(diag)
        return cls(n, n, [({i: q(x)} if x else {}) for i, x in enumerate(diag)])

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major tuple of all entries."""
        out = []
        for r in self._data:
            out.extend(r.get(j, 0) for j in range(self.cols))
        return tuple(out)

    def row(self, i: int) -> dict:
        return self._data[i]

    def sparse_rows(self) -> tuple:
        return self._data

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i].get(j, 0)

    def tolist(self) -> list[list]:
        return [[r.get(j, 0) for j in range(self.cols)] for r in self._data]

    def column(self, j: int) -> tuple:
        return tuple(r.get(j, 0) for r in self._data)

    def columns_sparse(self) -> list[dict]:
        out = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, x in r.items():
                out[j][i] = x
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def is_zero(self) -> bool:
        return all(not r for r in self._data)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(r == {i: 1} for i, r in enumerate(self._data))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, {self.tolist()!r})"

    # arithmetic
    @property
    def T(self) -> "RationalMatrix":
        data = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, x in r.items():
                data[j][i] = x
        return RationalMatrix(self.cols, self.rows, data)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        data = []
        for a, b in zip(self._data, other._data):
            r = dict(a)
            _axpy(r, 1, b)
            data.append(r)
        return RationalMatrix(self.rows, self.cols, data)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [{j: -x for j, x in r.items()} for r in self._data])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = q(c)
        if not c:
            return RationalMatrix.zeros(self.rows, self.cols)
        return RationalMatrix(self.rows, self.cols, [{j: c * x for j, x in r.items()} for r in self._data])

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            od = other._data
            data = []
            for r in self._data:
                acc: dict = {}
                for k, a in r.items():
                    _axpy(acc, a, od[k])
                data.append(acc)
            return RationalMatrix(self.rows, other.cols, data)
        return self.apply(other)

    def apply(self, vec) -> tuple:
        """Matrix times a dense vector."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols}")
        out = []
        for r in self._data:
            s = 0
            for j, a in r.items():
                x = vec[j]
                if x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def apply_sparse(self, v: dict) -> dict:
        out: dict = {}
        for i, r in enumerate(self._data):
            s = 0
            if len(v) < len(r):
                for j, x in v.items():
                    a = r.get(j)
                    if a:
                        s += a * x
            else:
                for j, a in r.items():
                    x = v.get(j)
                    if x:
                        s += a * x
            if s:
                out[i] = s
        return out

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """Kronecker product, index (i, k) -> i*other.rows + k."""
        data = []
        for r in self._data:
            for s in other._data:
                row = {}
                for j, a in r.items():
                    base = j * other.cols
                    for l, b in s.items():
                        row[base + l] = a * b
                data.append(row)
        return RationalMatrix(self.rows * other.rows, self.cols * other.cols, data)

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum(r.get(i, 0) for i, r in enumerate(self._data))

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        data = []
        for a, b in zip(self._data, other._data):
            r = dict(a)
            r.update({j + self.cols: x for j, x in b.items()})
            data.append(r)
        return RationalMatrix(self.rows, self.cols + other.cols, data)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RationalMatrix(self.rows + other.rows, self.cols, list(self._data) + list(other._data))


def block_diagonal(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    data = []
    r0 = c0 = 0
    for b in blocks:
        for row in b.sparse_rows():
            data.append({j + c0: x for j, x in row.items()})
        r0 += b.rows
        c0 += b.cols
    return RationalMatrix(r0, c0, data)


def linear_combination(coeffs: Sequence, mats: Sequence[RationalMatrix]) -> RationalMatrix:
    if not mats:
        raise ValueError("empty family")
    rows, cols = mats[0].shape
    data = [{} for _ in range(rows)]
    for c, m in zip(coeffs, mats):
        c = q(c)
        if not c:
            continue
        for acc, r in zip(data, m.sparse_rows()):
            _axpy(acc, c, r)
    return RationalMatrix(rows, cols, data)


class Echelon:
    """Incremental reduced row echelon form of a growing set of sparse vectors.

    With ``track=True`` every pivot row also records its expression in terms
    of the inserted vectors, so dependent insertions yield kernel vectors and
    ``express`` can write a vector of the span in terms of the inputs.
    """

    def __init__(self, track: bool = False):
        self.pivots: dict[int, dict] = {}
        self.track = track
        self.combos: dict[int, dict] = {}
        self.kernel: list[dict] = []
        self.count = 0

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: dict) -> tuple[dict, dict]:
        """Return (remainder, coefficients on pivot rows)."""
        v = dict(v)
        coeffs = {}
        for p in [c for c in v if c in self.pivots]:
            a = v.get(p)
            if not a:
                continue
            _axpy(v, -a, self.pivots[p])
            coeffs[p] = a
        return v, coeffs

    def contains(self, v: dict) -> bool:
        rem, _ = self.reduce(v)
        return not rem

    def add(self, v: dict) -> bool:
        """Insert v; return True if it enlarged the span."""
        idx = self.count
        self.count += 1
        rem, coeffs = self.reduce(v)
        combo = None
        if self.track:
            combo = {idx: 1}
            for p, a in coeffs.items():
                _axpy(combo, -a, self.combos[p])
        if not rem:
            if self.track:
                self.kernel.append(combo)
            return False
        p = min(rem)
        pv = rem[p]
        if pv != 1:
            rem = {j: _div(x, pv) for j, x in rem.items()}
            if self.track:
                combo = {j: _div(x, pv) for j, x in combo.items()}
        for c, row in self.pivots.items():
            a = row.get(p)
            if a:
                _axpy(row, -a, rem)
                if self.track:
                    _axpy(self.combos[c], -a, combo)
        self.pivots[p] = rem
        if self.track:
            self.combos[p] = combo
        return True

    def express(self, v: dict) -> dict | None:
        """Coefficients c with v = sum c[i] * (i-th inserted vector), or None."""
        if not self.track:
            raise ValueError("express needs track=True")
        rem, coeffs = self.reduce(v)
        if rem:
            return None
        out: dict = {}
        for p, a in coeffs.items():
            _axpy(out, a, self.combos[p])
        return out


def rank(m: RationalMatrix) -> int:
    """Rank over Q by exact elimination."""
    ech = Echelon()
    for r in m.sparse_rows():
        if r:
            ech.add(r)
            if len(ech) == m.cols:
                break
    return len(ech)


def _rref_rows(m: RationalMatrix) -> Echelon:
    ech = Echelon()
    for r in m.sparse_rows():
        if r:
            ech.add(r)
    return ech


def kernel_basis(m: RationalMatrix) -> list[tuple]:
    """Basis of the right null space {v : m v = 0}; one vector per free column."""
    ech = _rref_rows(m)
    free = [j for j in range(m.cols) if j not in ech.pivots]
    basis = []
    for f in free:
        v = {f: 1}
        for p, row in ech.pivots.items():
            a = row.get(f)
            if a:
                v[p] = -a
        basis.append(dense(v, m.cols))
    return basis


def kernel_sparse(m: RationalMatrix) -> list[dict]:
    ech = _rref_rows(m)
    out = []
    for f in range(m.cols):
        if f in ech.pivots:
            continue
        v = {f: 1}
        for p, row in ech.pivots.items():
            a = row.get(f)
            if a:
                v[p] = -a
        out.append(v)
    return out


class Quotient(NamedTuple):
    projection: RationalMatrix
    section: RationalMatrix

    @property
    def dim(self) -> int:
        return self.projection.rows


def quotient_basis(ambient_dim: int, relations: Iterable) -> Quotient:
    """Coordinates on ambient / span(relations).

    The quotient basis is the set of non-pivot coordinates of the reduced
    relation matrix, so ``section`` sends quotient coordinate i to a standard
    basis vector and ``projection @ section`` is the identity.
    """
    ech = Echelon()
    for r in relations:
        v = r if isinstance(r, dict) else sparse(r)
        if any(j >= ambient_dim or j < 0 for j in v):
            raise ValueError("relation vector longer than ambient dimension")
        if v:
            ech.add(v)
    return _quotient_from_echelon(ambient_dim, ech)


def _quotient_from_echelon(ambient_dim: int, ech: Echelon) -> Quotient:
    free = [j for j in range(ambient_dim) if j not in ech.pivots]
    pos = {f: i for i, f in enumerate(free)}
    proj = [{f: 1} for f in free]
    for p, row in ech.pivots.items():
        for j, x in row.items():
            if j in pos:
                proj[pos[j]][p] = -x
    section = [{} for _ in range(ambient_dim)]
    for i, f in enumerate(free):
        section[f][i] = 1
    return Quotient(
        RationalMatrix(len(free), ambient_dim, proj),
        RationalMatrix(ambient_dim, len(free), section),
    )


def det(m: RationalMatrix):
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = [dict(r) for r in m.sparse_rows()]
    d = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i].get(c):
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        pv = rows[c][c]
        d *= pv
        for i in range(c + 1, n):
            a = rows[i].get(c)
            if a:
                _axpy(rows[i], -Fraction(a) / pv, rows[c])
    return q(d)


def inverse(m: RationalMatrix) -> RationalMatrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    ech = Echelon(track=True)
    for r in m.sparse_rows():
        ech.add(r)
    if len(ech) != n:
        raise ZeroDivisionError("matrix is singular")
    # pivot row p = e_p = sum combos[p][i] * row_i  =>  inverse[p][i] = combos[p][i]
    data = [dict(ech.combos[p]) for p in range(n)]
    return RationalMatrix(n, n, data)


def solve(m: RationalMatrix, b: Sequence) -> tuple | None:
    """One solution x of m x = b, or None if inconsistent."""
    ech = Echelon(track=True)
    for c in m.columns_sparse():
        ech.add(c)
    coeffs = ech.express(sparse(b))
    if coeffs is None:
        return None
    return dense(coeffs, m.cols)


def is_invertible(m: RationalMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


RANDOM_PROBES = 4


def is_invertible_generic(family: Sequence[RationalMatrix]) -> tuple[bool, tuple | None]:
    """Decide whether some linear combination of ``family`` is invertible.

    Searches the grid {1, ..., D+1}^k (D the matrix size, k the family size).
    det(sum c_i M_i) has degree at most D in each c_i, so if it is not the
    zero polynomial it cannot vanish on the whole grid: a False answer is
    exact.  Worst case is (D+1)^k determinant evaluations; two rank bounds
    settle most negative cases before the grid is touched, and a few seeded
    random points (which succeed with high probability when the answer is
    yes) are tried first.
    """
    family = list(family)
    if not family:
        return False, None
    D = family[0].rows
    for m in family:
        if m.shape != (D, D):
            raise ValueError("family must consist of square matrices of equal size")
    if D == 0:
        return True, tuple(1 for _ in family)
    k = len(family)
    # column / row spaces of any combination sit inside those of the family
    wide = family[0]
    for m in family[1:]:
        wide = wide.hstack(m)
    if rank(wide) < D:
        return False, None
    tall = family[0]
    for m in family[1:]:
        tall = tall.vstack(m)
    if rank(tall) < D:
        return False, None
    rng = random.Random(0)
    for _ in range(RANDOM_PROBES):
        c = tuple(rng.randint(1, 64 * (D + 1)) for _ in range(k))
        if is_invertible(linear_combination(c, family)):
            return True, c
    for c in itertools.product(range(1, D + 2), repeat=k):
        if is_invertible(linear_combination(c, family)):
            return True, tuple(c)
    return False, None


# ---------------------------------------------------------------------------
# polynomials and root isolation


class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mon and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{mon}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# Rational polynomial helpers: lists of Fractions, ascending, no trailing zeros.

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: list) -> list:
    return _trim([i * p[i] for i in range(1, len(p))])


def _polyrem(a: list, b: list) -> list:
    a = [Fraction(x) for x in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    while len(a) - 1 >= db and a:
        c = a[-1] / lb
        shift = len(a) - 1 - db
        for i, x in enumerate(b):
            a[shift + i] -= c * x
        a.pop()
        _trim(a)
    return a


def _polydiv(a: list, b: list) -> list:
    a = [Fraction(x) for x in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    out = [Fraction(0)] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        c = a[-1] / lb
        shift = len(a) - 1 - db
        out[shift] = c
        for i, x in enumerate(b):
            a[shift + i] -= c * x
        a.pop()
        _trim(a)
    if a:
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polyrem(a, b)
    return a


def _primitive(p: list) -> IntPolynomial:
    den = 1
    for x in p:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in p]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return IntPolynomial(x // g for x in ints)


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), made primitive with positive leading coefficient."""
    cs = list(p.coeffs)
    g = _gcd(cs, _deriv(cs))
    if len(g) <= 1:
        return _primitive(cs)
    return _primitive(_polydiv(cs, g))


def sturm_sequence(p: IntPolynomial) -> list[list]:
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in _deriv(list(p.coeffs))]]
    while seq[-1] and len(seq[-1]) > 1:
        r = _polyrem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return [s for s in seq if s]


def _eval(p: list, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(seq, x) -> int:
    return _sign_changes([_eval(s, x) for s in seq])


def _variations_at_inf(seq) -> int:
    return _sign_changes([s[-1] for s in seq])


def charpoly(m: RationalMatrix) -> IntPolynomial:
    """det(x I - m) by the Faddeev-LeVerrier recurrence (exact)."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = RationalMatrix.identity(n)
    M = RationalMatrix.zeros(n, n)
    for k in range(1, n + 1):
        M = m @ M + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -Fraction((m @ M).trace()) / k
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("characteristic polynomial is not integral")
    return IntPolynomial(int(c) for c in coeffs)


class DominantRoot(NamedTuple):
    lo: Fraction
    hi: Fraction
    integer_value: int | None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


ROOT_WIDTH = Fraction(1, 10**12)


def dominant_root(p: IntPolynomial, radius_bound, width=ROOT_WIDTH) -> DominantRoot:
    """Isolate the largest real root of ``p`` in an interval narrower than ``width``.

    ``radius_bound`` must bound every real root from above (for a characteristic
    polynomial of a nonnegative matrix the max row sum does).  Repeated roots are
    removed first, so the final interval brackets a sign change of the
    square-free part, or is a single point when a bisection midpoint hits the
    root exactly.
    """
    if p.degree < 1:
        raise ValueError("degenerate")
    bound = Fraction(q(radius_bound))
    sf = square_free_part(p)
    seq = sturm_sequence(sf)
    f = [Fraction(c) for c in sf.coeffs]
    if _variations_at(seq, bound) - _variations_at_inf(seq) != 0:
        raise ValueError("radius_bound is below the largest real root")
    # Cauchy bound for the lower end
    lead = abs(Fraction(sf.coeffs[-1]))
    cauchy = 1 + max(abs(Fraction(c)) / lead for c in sf.coeffs[:-1]) if sf.degree > 0 else 1
    lo = min(-cauchy, bound) - 1
    hi = bound
    if _eval(f, hi) == 0:
        return _finish(p, hi, hi)
    v_hi = _variations_at(seq, hi)
    if _variations_at(seq, lo) - v_hi == 0:
        raise ValueError("polynomial has no real root")
    # Sturm bisection until (lo, hi] isolates the largest root
    while _variations_at(seq, lo) - v_hi > 1:
        mid = (lo + hi) / 2
        v_mid = _variations_at(seq, mid)
        if v_mid - v_hi >= 1:
            lo = mid
        else:
            if _eval(f, mid) == 0:
                return _finish(p, mid, mid)
            hi, v_hi = mid, v_mid
    # sign-change bisection on the isolating interval
    f_hi = _eval(f, hi)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        f_mid = _eval(f, mid)
        if f_mid == 0:
            return _finish(p, mid, mid)
        if (f_mid > 0) == (f_hi > 0):
            hi, f_hi = mid, f_mid
        else:
            lo = mid
    return _finish(p, lo, hi)


def _finish(p: IntPolynomial, lo: Fraction, hi: Fraction) -> DominantRoot:
    integer = None
    for k in range(math.ceil(lo), math.floor(hi) + 1):
        if p(k) == 0:
            integer = k
    return DominantRoot(Fraction(lo), Fraction(hi), integer)


def max_row_sum(m: RationalMatrix):
    return max((sum(abs(x) for x in r.values()) for r in m.sparse_rows()), default=0)


def decimal_str(x, digits: int = 12, rounding: str = "nearest") -> str:
    """Render an exact rational with ``digits`` decimals.  ``rounding`` is
    "nearest" (half even), "down" (toward -inf) or "up" (toward +inf)."""
    x = Fraction(x)
    scaled = x * 10**digits
    if rounding == "nearest":
        n = round(scaled)
    elif rounding == "down":
        n = math.floor(scaled)
    elif rounding == "up":
        n = math.ceil(scaled)
    else:
        raise ValueError(f"unknown rounding {rounding!r}")
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 10**digits}.{n % 10**digits:0{digits}d}"
