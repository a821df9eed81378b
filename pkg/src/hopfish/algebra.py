"""Finite-dimensional algebras over Q given by structure constants.

Tensor products are kept factored: an Algebra remembers the tuple of atomic
algebras it is a tensor product of (``parts``), basis index i of the product
being the mixed-radix number of the factor indices, first factor most
significant (the same order as ``RationalMatrix.kron``).  Module actions of a
tensor algebra are then determined by actions of the factors, which keeps
things like (B x B x B)-bimodules over an 8-dimensional B manageable.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Sequence

from .exactlin import (
    Echelon,
    RationalMatrix,
    _axpy,
    dense,
    q,
    rank,
    sparse,
)


class Algebra:
    """Unital associative algebra over Q.

    ``mult[i][j]`` is a dict {k: c} with e_i * e_j = sum c e_k.  For a tensor
    product ``mult`` is computed on first use only.
    """

    def __init__(self, dim: int, mult=None, unit=None, name: str | None = None, parts=None):
        self.dim = dim
        self.name = name
        if parts is None:
            if mult is None or unit is None:
                raise ValueError("atomic algebra needs mult and unit")
            self._atomic = True
            self._mult = [[_clean(mult[i][j]) for j in range(dim)] for i in range(dim)]
            self.unit = tuple(q(x) for x in unit)
            if len(self.unit) != dim:
                raise ValueError("unit has wrong length")
            # the scalars have no factors, so they vanish from tensor products
            self.parts = () if _is_scalar_table(dim, self._mult, self.unit) else (self,)
        else:
            self.parts = tuple(parts)
            self._atomic = False
            self._mult = None
            u = (1,)
            for p in self.parts:
                u = tuple(a * b for a in u for b in p.unit)
            self.unit = u

    # -- identity
    @property
    def atomic(self) -> bool:
        return self._atomic

    def key(self):
        if self.atomic:
            return ("atomic", self.dim, tuple(tuple(tuple(sorted(c.items())) for c in row) for row in self._mult), self.unit)
        return ("tensor",) + tuple(p.key() for p in self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        if self is other:
            return True
        if self.dim != other.dim:
            return False
        if len(self.parts) != len(other.parts):
            return False
        if self.atomic and other.atomic:
            return self.mult == other.mult and self.unit == other.unit
        return all(a == b for a, b in zip(self.parts, other.parts))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Algebra({self.label}, dim={self.dim})"

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if not self.parts:
            return "k"
        if self.atomic:
            return f"A{self.dim}"
        return " (x) ".join(p.label for p in self.parts)

    # -- structure constants
    @property
    def mult(self) -> list:
        if self._mult is None:
            self._mult = self._tensor_mult()
        return self._mult

    def _tensor_mult(self):
        if not self.parts:
            return [[{0: 1}]]
        tables = [p.mult for p in self.parts]
        dims = [p.dim for p in self.parts]
        idx = list(itertools.product(*[range(d) for d in dims]))
        pos = {t: i for i, t in enumerate(idx)}
        out = []
        for a in idx:
            row = []
            for b in idx:
                acc = {(): 1}
                for t, i, j in zip(tables, a, b):
                    nxt = {}
                    for key, c in acc.items():
                        for k, c2 in t[i][j].items():
                            nxt[key + (k,)] = c * c2
                    acc = nxt
                row.append({pos[k]: c for k, c in acc.items() if c})
            out.append(row)
        return out

    def split_index(self, i: int) -> tuple:
        """Factor indices of tensor basis index i."""
        out = []
        for p in reversed(self.parts):
            i, r = divmod(i, p.dim)
            out.append(r)
        return tuple(reversed(out))

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        acc: dict = {}
        m = self.mult
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    _axpy(acc, a * b, m[i][j])
        return dense(acc, self.dim)

    def basis(self, i: int) -> tuple:
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def zero(self) -> tuple:
        return (0,) * self.dim

    def left_mult(self, i: int) -> RationalMatrix:
        """Matrix of x -> e_i x."""
        return self._mult_matrices[0][i]

    def right_mult(self, i: int) -> RationalMatrix:
        """Matrix of x -> x e_i."""
        return self._mult_matrices[1][i]

    @cached_property
    def _mult_matrices(self):
        if self.atomic or not self.parts:
            m = self.mult
            n = self.dim
            left, right = [], []
            for i in range(n):
                L = [{} for _ in range(n)]
                R = [{} for _ in range(n)]
                for j in range(n):
                    for k, c in m[i][j].items():
                        L[k][j] = c
                    for k, c in m[j][i].items():
                        R[k][j] = c
                left.append(RationalMatrix(n, n, L))
                right.append(RationalMatrix(n, n, R))
            return left, right
        left, right = [], []
        for i in range(self.dim):
            ix = self.split_index(i)
            L = R = None
            for p, j in zip(self.parts, ix):
                L = p.left_mult(j) if L is None else L.kron(p.left_mult(j))
                R = p.right_mult(j) if R is None else R.kron(p.right_mult(j))
            left.append(L)
            right.append(R)
        return left, right

    def left_mult_by(self, x: Sequence) -> RationalMatrix:
        return _combo(x, [self.left_mult(i) for i in range(self.dim)], self.dim)

    def right_mult_by(self, x: Sequence) -> RationalMatrix:
        return _combo(x, [self.right_mult(i) for i in range(self.dim)], self.dim)

    # -- checks
    def check(self):
        """Return None if associative and unital, else a (name, witness) pair."""
        n = self.dim
        m = self.mult
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs: dict = {}
                    for s, c in m[i][j].items():
                        _axpy(lhs, c, m[s][k])
                    rhs: dict = {}
                    for s, c in m[j][k].items():
                        _axpy(rhs, c, m[i][s])
                    if lhs != rhs:
                        return ("associativity", (i, j, k))
        for i in range(n):
            e = self.basis(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                return ("unit", (i,))
        return None

    @cached_property
    def is_commutative(self) -> bool:
        if not self.atomic:
            return all(p.is_commutative for p in self.parts)
        m = self.mult
        return all(m[i][j] == m[j][i] for i in range(self.dim) for j in range(i))

    @cached_property
    def is_semisimple(self) -> bool:
        """Nondegenerate trace form Tr(L_{xy}) (Dickson's criterion, char 0)."""
        if not self.atomic:
            return all(p.is_semisimple for p in self.parts)
        n = self.dim
        tr = [self.left_mult(k).trace() for k in range(n)]
        m = self.mult
        gram = [[sum(c * tr[k] for k, c in m[i][j].items()) for j in range(n)] for i in range(n)]
        return rank(RationalMatrix.from_rows(gram)) == n

    @cached_property
    def hh0_basis(self) -> tuple:
        """Basis indices whose classes span A/[A, A]."""
        if not self.atomic:
            raise ValueError("hh0_basis is defined per atomic factor")
        ech = Echelon()
        m = self.mult
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                v = dict(m[i][j])
                _axpy(v, -1, m[j][i])
                if v:
                    ech.add(v)
        return tuple(j for j in range(self.dim) if j not in ech.pivots)

    @cached_property
    def generators(self) -> tuple:
        """Indices of basis elements generating A as an algebra (greedy)."""
        if not self.atomic:
            raise ValueError("generators are defined per atomic factor")
        ech = Echelon()
        ech.add(sparse(self.unit))
        gens = []
        for i in range(self.dim):
            if ech.contains({i: 1}):
                continue
            gens.append(i)
            _close_span(ech, [self.left_mult(g) for g in gens], self.dim)
            if len(ech) == self.dim:
                break
        return tuple(gens)

    def opposite(self) -> "Algebra":
        if not self.atomic:
            return Algebra(self.dim, parts=[p.opposite() for p in self.parts])
        if self.is_commutative:
            return self
        n = self.dim
        m = self.mult
        name = f"{self.name}^op" if self.name else None
        return Algebra(n, [[m[j][i] for j in range(n)] for i in range(n)], self.unit, name)


def _clean(c) -> dict:
    if isinstance(c, dict):
        return {int(k): q(v) for k, v in c.items() if v}
    return sparse(c)


def _is_scalar_table(dim, mult, unit) -> bool:
    return dim == 1 and mult[0][0] == {0: 1} and unit == (1,)


def _combo(x, mats, n) -> RationalMatrix:
    data = [{} for _ in range(n)]
    for c, M in zip(x, mats):
        if c:
            for acc, r in zip(data, M.sparse_rows()):
                _axpy(acc, c, r)
    return RationalMatrix(n, n, data)


def _close_span(ech: Echelon, mats, dim) -> None:
    """Enlarge ech until its span is stable under every matrix in mats."""
    queue = [dict(v) for v in ech.pivots.values()]
    while queue:
        v = queue.pop()
        for M in mats:
            w = M.apply_sparse(v)
            if w and ech.add(w):
                queue.append(w)


SCALARS = Algebra(1, [[{0: 1}]], (1,), name="k")


def tensor(*algs: Algebra) -> Algebra:
    parts = []
    for a in algs:
        parts.extend(a.parts)
    if not parts:
        return SCALARS
    if len(parts) == 1:
        return parts[0]
    return Algebra(_prod(p.dim for p in parts), parts=parts)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def function_algebra(n: int, name: str | None = None) -> Algebra:
    """k^G for |G| = n: pointwise product of the delta functions."""
    mult = [[({i: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    return Algebra(n, mult, (1,) * n, name or f"k^{n}")


def cyclic_function_algebra(n: int) -> Algebra:
    return function_algebra(n, f"k^Z/{n}")


def group_algebra(n: int) -> Algebra:
    """Q[Z/n] with basis the group elements."""
    mult = [[{(i + j) % n: 1} for j in range(n)] for i in range(n)]
    unit = [0] * n
    unit[0] = 1
    return Algebra(n, mult, unit, f"Q[Z/{n}]")


def matrix_algebra(n: int, A: Algebra | None = None) -> Algebra:
    """M_n(A) with basis E_ij (x) a_k at index (i*n + j)*dim A + k."""
    A = A if A is not None else SCALARS
    da = A.dim
    am = A.mult
    dim = n * n * da
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j != k:
            continue
        for a in range(da):
            for b in range(da):
                row = mult[(i * n + j) * da + a]
                tgt = {(i * n + l) * da + c: x for c, x in am[a][b].items()}
                row[(k * n + l) * da + b] = tgt
    unit = [0] * dim
    for i in range(n):
        for a in range(da):
            unit[(i * n + i) * da + a] = A.unit[a]
    name = f"M{n}({A.label})" if A.parts else f"M{n}"
    return Algebra(dim, mult, unit, name)


def direct_product(algs: Sequence[Algebra], name: str | None = None) -> Algebra:
    """A_1 x ... x A_m with block basis (componentwise product)."""
    dims = [a.dim for a in algs]
    offs = [sum(dims[:i]) for i in range(len(dims))]
    dim = sum(dims)
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    unit = []
    for a, o in zip(algs, offs):
        m = a.mult
        for i in range(a.dim):
            for j in range(a.dim):
                mult[o + i][o + j] = {o + k: c for k, c in m[i][j].items()}
        unit.extend(a.unit)
    return Algebra(dim, mult, unit, name)


class Homomorphism:
    """Unital algebra map given by a target.dim x source.dim matrix."""

    def __init__(self, source: Algebra, target: Algebra, matrix):
        if not isinstance(matrix, RationalMatrix):
            matrix = RationalMatrix.from_rows(matrix)
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"matrix shape {matrix.shape} != ({target.dim}, {source.dim})")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, x: Sequence) -> tuple:
        return self.matrix.apply(x)

    def image(self, i: int) -> tuple:
        return self.matrix.column(i)

    def check(self):
        """None if multiplicative and unital, else (name, witness)."""
        S, T = self.source, self.target
        if self(S.unit) != T.unit:
            return ("unital", ())
        for i in range(S.dim):
            for j in range(S.dim):
                lhs = self(S.multiply(S.basis(i), S.basis(j)))
                rhs = T.multiply(self.image(i), self.image(j))
                if lhs != rhs:
                    return ("multiplicative", (i, j))
        return None

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """self after other."""
        if other.target != self.source:
            raise ValueError("homomorphisms are not composable")
        return Homomorphism(other.source, self.target, self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return f"Homomorphism({self.source.label} -> {self.target.label})"


def identity_hom(A: Algebra) -> Homomorphism:
    return Homomorphism(A, A, RationalMatrix.identity(A.dim))


def tensor_hom(*fs: Homomorphism) -> Homomorphism:
    M = fs[0].matrix
    for f in fs[1:]:
        M = M.kron(f.matrix)
    return Homomorphism(tensor(*[f.source for f in fs]), tensor(*[f.target for f in fs]), M)


def permutation_automorphisms(A: Algebra):
    """Coordinate permutations that are algebra automorphisms (all of them for Q^n)."""
    n = A.dim
    for perm in itertools.permutations(range(n)):
        M = RationalMatrix(n, n, [{perm.index(i): 1} for i in range(n)])
        f = Homomorphism(A, A, M)
        if f.check() is None:
            yield f
