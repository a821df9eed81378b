"""Bimodules over finite-dimensional algebras.

A bimodule stores one list of action matrices per tensor factor of each of
its algebras.  For a left factor the i-th matrix is the action of
1 (x) ... (x) e_i (x) ... (x) 1; actions of the other basis elements are
products of these.  Vectors are columns, so a right action is stored as an
anti-representation: x.b is ``R_b @ x`` and R_{bc} = R_c R_b.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Sequence

from .algebra import SCALARS, Algebra, Homomorphism, tensor
from .exactlin import (
    Echelon,
    RationalMatrix,
    _axpy,
    block_diagonal,
    dense,
    is_invertible_generic,
    kernel_sparse,
    linear_combination,
    quotient_basis,
    rank,
    sparse,
)


class Bimodule:
    """A finite-dimensional (left, right)-bimodule given by factor actions."""

    def __init__(self, left: Algebra, right: Algebra, dim: int, left_parts, right_parts, name=None):
        if len(left_parts) != len(left.parts) or len(right_parts) != len(right.parts):
            raise ValueError("one action list per tensor factor is required")
        for alg, acts in ((left, left_parts), (right, right_parts)):
            for part, mats in zip(alg.parts, acts):
                if len(mats) != part.dim:
                    raise ValueError(f"expected {part.dim} action matrices for {part.label}")
                for M in mats:
                    if M.shape != (dim, dim):
                        raise ValueError(f"action matrix of shape {M.shape}, module has dim {dim}")
        self.left = left
        self.right = right
        self.dim = dim
        self.left_parts = [list(m) for m in left_parts]
        self.right_parts = [list(m) for m in right_parts]
        self.name = name
        self._lcache: dict = {}
        self._rcache: dict = {}

    def __repr__(self) -> str:
        return f"Bimodule({self.left.label}, {self.right.label}, dim={self.dim})"

    # -- actions of basis elements and arbitrary elements
    def left_action(self, i: int) -> RationalMatrix:
        M = self._lcache.get(i)
        if M is None:
            M = _product_action(self.left, self.left_parts, i, self.dim)
            self._lcache[i] = M
        return M

    def right_action(self, i: int) -> RationalMatrix:
        M = self._rcache.get(i)
        if M is None:
            M = _product_action(self.right, self.right_parts, i, self.dim)
            self._rcache[i] = M
        return M

    def left_action_by(self, x: Sequence) -> RationalMatrix:
        return _combo_actions(x, self.left_action, self.dim)

    def right_action_by(self, x: Sequence) -> RationalMatrix:
        return _combo_actions(x, self.right_action, self.dim)

    @property
    def left_gens(self) -> list:
        return [M for mats in self.left_parts for M in mats]

    @property
    def right_gens(self) -> list:
        return [M for mats in self.right_parts for M in mats]

    def check(self):
        """None when the actions form a bimodule, else (axiom, witness)."""
        ident = RationalMatrix.identity(self.dim)
        for side, alg, acts in (("left", self.left, self.left_parts), ("right", self.right, self.right_parts)):
            for p, (part, mats) in enumerate(zip(alg.parts, acts)):
                if linear_combination(part.unit, mats) != ident:
                    return (f"{side}_unital", (p,))
                m = part.mult
                for i in range(part.dim):
                    for j in range(part.dim):
                        target = linear_combination(dense(m[i][j], part.dim), mats)
                        got = mats[i] @ mats[j] if side == "left" else mats[j] @ mats[i]
                        if got != target:
                            return (f"{side}_{'representation' if side == 'left' else 'antirepresentation'}", (p, i, j))
            for p1, p2 in itertools.combinations(range(len(acts)), 2):
                for M in acts[p1]:
                    for N in acts[p2]:
                        if M @ N != N @ M:
                            return (f"{side}_factors_commute", (p1, p2))
        for L in self.left_gens:
            for R in self.right_gens:
                if L @ R != R @ L:
                    return ("actions_commute", ())
        return None

    def left_module(self) -> "Bimodule":
        """Forget the right action."""
        return Bimodule(self.left, SCALARS, self.dim, self.left_parts, [])

    def right_module(self) -> "Bimodule":
        return Bimodule(SCALARS, self.right, self.dim, [], self.right_parts)


def _product_action(alg: Algebra, parts, i: int, dim: int) -> RationalMatrix:
    if not alg.parts:
        return RationalMatrix.identity(dim)
    idx = alg.split_index(i) if len(alg.parts) > 1 else (i,)
    M = None
    for mats, j in zip(parts, idx):
        M = mats[j] if M is None else M @ mats[j]
    return M


def _combo_actions(x, action, dim) -> RationalMatrix:
    data = [{} for _ in range(dim)]
    for i, c in enumerate(x):
        if c:
            for acc, r in zip(data, action(i).sparse_rows()):
                _axpy(acc, c, r)
    return RationalMatrix(dim, dim, data)


def _part_unit_vector(alg: Algebra, p: int, i: int) -> tuple:
    """Coordinates of 1 (x) ... (x) e_i (x) ... (x) 1 in the tensor basis."""
    vec = (1,)
    for k, part in enumerate(alg.parts):
        v = part.basis(i) if k == p else part.unit
        vec = tuple(a * b for a in vec for b in v)
    return vec


def factor_generator_vectors(alg: Algebra) -> list[tuple]:
    return [_part_unit_vector(alg, p, i) for p, part in enumerate(alg.parts) for i in range(part.dim)]


# ---------------------------------------------------------------------------
# constructions


def regular(A: Algebra) -> Bimodule:
    """A as an (A, A)-bimodule by multiplication."""
    n = A.dim
    left, right = [], []
    for p, part in enumerate(A.parts):
        left.append([A.left_mult_by(_part_unit_vector(A, p, i)) for i in range(part.dim)])
        right.append([A.right_mult_by(_part_unit_vector(A, p, i)) for i in range(part.dim)])
    return Bimodule(A, A, n, left, right, name=f"reg({A.label})")


def modulate(f: Homomorphism) -> Bimodule:
    """The (target, source)-bimodule target with x.b = x f(b)."""
    A, B = f.target, f.source
    reg = regular(A)
    right = []
    for p, part in enumerate(B.parts):
        right.append([A.right_mult_by(f(_part_unit_vector(B, p, i))) for i in range(part.dim)])
    return Bimodule(A, B, A.dim, reg.left_parts, right)


def outer(X: Bimodule, Y: Bimodule) -> Bimodule:
    """External tensor product, an (A (x) C, B (x) D)-bimodule."""
    IX = RationalMatrix.identity(X.dim)
    IY = RationalMatrix.identity(Y.dim)
    left = [[M.kron(IY) for M in mats] for mats in X.left_parts]
    left += [[IX.kron(M) for M in mats] for mats in Y.left_parts]
    right = [[M.kron(IY) for M in mats] for mats in X.right_parts]
    right += [[IX.kron(M) for M in mats] for mats in Y.right_parts]
    return Bimodule(tensor(X.left, Y.left), tensor(X.right, Y.right), X.dim * Y.dim, left, right)


def dual(X: Bimodule) -> Bimodule:
    """Hom_k(X, k) as a (right, left)-bimodule: (b f a)(x) = f(a x b)."""
    left = [[M.T for M in mats] for mats in X.right_parts]
    right = [[M.T for M in mats] for mats in X.left_parts]
    return Bimodule(X.right, X.left, X.dim, left, right)


def direct_sum(*Xs: Bimodule) -> Bimodule:
    X0 = Xs[0]
    for X in Xs[1:]:
        if X.left != X0.left or X.right != X0.right:
            raise ValueError("direct sum of bimodules over different algebras")
    left = [[block_diagonal([X.left_parts[p][i] for X in Xs]) for i in range(len(X0.left_parts[p]))]
            for p in range(len(X0.left_parts))]
    right = [[block_diagonal([X.right_parts[p][i] for X in Xs]) for i in range(len(X0.right_parts[p]))]
             for p in range(len(X0.right_parts))]
    return Bimodule(X0.left, X0.right, sum(X.dim for X in Xs), left, right)


def zero_module(A: Algebra, B: Algebra) -> Bimodule:
    z = RationalMatrix.zeros(0, 0)
    return Bimodule(A, B, 0, [[z] * p.dim for p in A.parts], [[z] * p.dim for p in B.parts])


def relabel(X: Bimodule, left: Algebra | None = None, right: Algebra | None = None) -> Bimodule:
    """Same actions, different but factor-compatible algebra labels."""
    left = left if left is not None else X.left
    right = right if right is not None else X.right
    return Bimodule(left, right, X.dim, X.left_parts, X.right_parts)


def to_left_module(S: Bimodule) -> Bimodule:
    """An (A, A^op)-bimodule seen as a left A (x) A-module."""
    A = S.left
    return Bimodule(tensor(A, A), SCALARS, S.dim, S.left_parts + S.right_parts, [])


def from_left_module(M: Bimodule, A: Algebra) -> Bimodule:
    """A left A (x) A-module seen as an (A, A^op)-bimodule."""
    k = len(A.parts)
    return Bimodule(A, A.opposite(), M.dim, M.left_parts[:k], M.left_parts[k:])


def transform(X: Bimodule, P: RationalMatrix, Pinv: RationalMatrix) -> Bimodule:
    """Change of basis x -> P x."""
    left = [[P @ M @ Pinv for M in mats] for mats in X.left_parts]
    right = [[P @ M @ Pinv for M in mats] for mats in X.right_parts]
    return Bimodule(X.left, X.right, X.dim, left, right)


# ---------------------------------------------------------------------------
# submodules


def _spin(ech: Echelon, ops, seeds) -> None:
    queue = [s for s in seeds if s and ech.add(s)]
    while queue:
        v = queue.pop()
        for M in ops:
            w = M.apply_sparse(v)
            if w and ech.add(w):
                queue.append(w)


def _copy_echelon(ech: Echelon) -> Echelon:
    out = Echelon()
    out.pivots = {p: dict(r) for p, r in ech.pivots.items()}
    return out


def module_generators(ops, spanning) -> list[dict]:
    """A short list of vectors whose submodule (under ``ops``) contains ``spanning``.

    Greedy: each vector not yet covered is merged into the last generator when
    the sum still generates everything, and becomes a new generator otherwise.
    """
    gens: list[dict] = []
    before = Echelon()
    cur = Echelon()
    for v in spanning:
        if not v or cur.contains(v):
            continue
        if gens:
            w = dict(gens[-1])
            _axpy(w, 1, v)
            trial = _copy_echelon(before)
            _spin(trial, ops, [w])
            if trial.contains(v):
                gens[-1] = w
                cur = trial
                continue
        before = _copy_echelon(cur)
        gens.append(dict(v))
        _spin(cur, ops, [v])
    return gens


def submodule_span(ops, seeds) -> Echelon:
    ech = Echelon()
    _spin(ech, ops, seeds)
    return ech


# ---------------------------------------------------------------------------
# relative tensor product


def _block_apply(M: RationalMatrix, v: dict, n: int, d: int) -> dict:
    """Apply diag(M, ..., M) (n blocks of size d) to a sparse vector."""
    blocks: dict = {}
    for i, x in v.items():
        blocks.setdefault(i // d, {})[i % d] = x
    out = {}
    for b, w in blocks.items():
        for i, x in M.apply_sparse(w).items():
            out[b * d + i] = x
    return out


def _transport(q, M: RationalMatrix) -> RationalMatrix:
    return q.projection @ (M @ q.section)


def tensor_over(X: Bimodule, Y: Bimodule) -> Bimodule:
    """X (x)_B Y for an (A, B)-bimodule X and a (B, C)-bimodule Y.

    Y is presented as a quotient of a free module B^n -> Y with kernel K, and
    right exactness gives X (x)_B Y = X^n / X.K.  Only generators of K as a
    left submodule are needed, which keeps the relation count far below the
    dim X * dim Y * dim B of the defining presentation.
    """
    B = X.right
    if B != Y.left:
        raise ValueError(f"middle algebras differ: {B.label} vs {Y.left.label}")
    if not B.parts:
        return outer(X, Y)
    dB, dX = B.dim, X.dim
    if Y.dim == 0 or dX == 0:
        return zero_module(X.left, Y.right)
    ys = module_generators(Y.left_gens, [{i: 1} for i in range(Y.dim)])
    n = len(ys)
    # presentation B^n -> Y, column j*dB + b is b.y_j
    phi = Echelon(track=True)
    for y in ys:
        for b in range(dB):
            phi.add(Y.left_action(b).apply_sparse(y))
    regB = regular(B)
    ops = [_BlockOp(M, n, dB) for M in regB.left_gens]
    kgens = module_generators(ops, phi.kernel)

    RX = [X.right_action(b) for b in range(dB)]

    def rx(beta: dict) -> RationalMatrix:
        return linear_combination(dense(beta, dB), RX) if beta else RationalMatrix.zeros(dX, dX)

    relations = []
    for k in kgens:
        comps = _split_blocks(k, n, dB)
        stack = [rx(comps.get(l, {})) for l in range(n)]
        # relation for basis x of X: (R(k_1) x, ..., R(k_n) x)
        cols = [{} for _ in range(dX)]
        for l, M in enumerate(stack):
            for i, row in enumerate(M.sparse_rows()):
                for x, c in row.items():
                    cols[x][l * dX + i] = c
        relations.extend(c for c in cols if c)
    quo = quotient_basis(n * dX, relations)

    left = [[_transport(quo, block_diagonal([M] * n)) for M in mats] for mats in X.left_parts]
    right = []
    for mats in Y.right_parts:
        acts = []
        for M in mats:
            blocks = [[None] * n for _ in range(n)]
            for j, y in enumerate(ys):
                beta = phi.express(M.apply_sparse(y))
                comps = _split_blocks(beta, n, dB)
                for l in range(n):
                    blocks[l][j] = rx(comps.get(l, {}))
            acts.append(_transport(quo, _assemble(blocks, n, dX)))
        right.append(acts)
    return Bimodule(X.left, Y.right, quo.dim, left, right)


class _BlockOp:
    """diag(M, ..., M) acting on sparse vectors."""

    def __init__(self, M, n, d):
        self.M, self.n, self.d = M, n, d

    def apply_sparse(self, v):
        return _block_apply(self.M, v, self.n, self.d)


def _split_blocks(v: dict, n: int, d: int) -> dict:
    out: dict = {}
    for i, x in v.items():
        out.setdefault(i // d, {})[i % d] = x
    return out


def _assemble(blocks, n, d) -> RationalMatrix:
    data = [{} for _ in range(n * d)]
    for l in range(n):
        for j in range(n):
            M = blocks[l][j]
            for i, row in enumerate(M.sparse_rows()):
                tgt = data[l * d + i]
                for c, x in row.items():
                    tgt[j * d + c] = x
    return RationalMatrix(n * d, n * d, data)


def tensor_over_naive(X: Bimodule, Y: Bimodule) -> Bimodule:
    """X (x)_B Y straight from the definition: relations x.b (x) y - x (x) b.y
    for every basis triple.  Slow; used to check ``tensor_over``."""
    B = X.right
    if B != Y.left:
        raise ValueError("middle algebras differ")
    dX, dY = X.dim, Y.dim
    relations = []
    for b in range(B.dim):
        RXb = X.right_action(b).columns_sparse()
        LYb = Y.left_action(b).columns_sparse()
        for x in range(dX):
            for y in range(dY):
                v: dict = {}
                for i, c in RXb[x].items():
                    v[i * dY + y] = v.get(i * dY + y, 0) + c
                for j, c in LYb[y].items():
                    key = x * dY + j
                    nv = v.get(key, 0) - c
                    if nv:
                        v[key] = nv
                    else:
                        v.pop(key, None)
                v = {k: c for k, c in v.items() if c}
                if v:
                    relations.append(v)
    quo = quotient_basis(dX * dY, relations)
    IX, IY = RationalMatrix.identity(dX), RationalMatrix.identity(dY)
    left = [[_transport(quo, M.kron(IY)) for M in mats] for mats in X.left_parts]
    right = [[_transport(quo, IX.kron(M)) for M in mats] for mats in Y.right_parts]
    return Bimodule(X.left, Y.right, quo.dim, left, right)


# ---------------------------------------------------------------------------
# homomorphisms and isomorphism


def intertwiner_equations(pairs, dX: int, dY: int) -> list[dict]:
    """Linear equations on T (dY x dX, variable i*dX + j) for T MX = MY T."""
    eqs = []
    for MX, MY in pairs:
        colsX = MX.columns_sparse()
        for i in range(dY):
            rowY = MY.row(i)
            for j in range(dX):
                e: dict = {}
                for k, c in colsX[j].items():
                    e[i * dX + k] = c
                for k, c in rowY.items():
                    key = k * dX + j
                    nv = e.get(key, 0) - c
                    if nv:
                        e[key] = nv
                    else:
                        e.pop(key, None)
                if e:
                    eqs.append(e)
    return eqs


def hom_space(X: Bimodule, Y: Bimodule) -> list[RationalMatrix]:
    """Basis of the bimodule maps X -> Y, each a dim Y x dim X matrix."""
    if X.left != Y.left or X.right != Y.right:
        raise ValueError("bimodules over different algebras")
    pairs = list(zip(X.left_gens, Y.left_gens)) + list(zip(X.right_gens, Y.right_gens))
    return _solve_intertwiners(pairs, X.dim, Y.dim)


def _solve_intertwiners(pairs, dX, dY) -> list[RationalMatrix]:
    nvars = dX * dY
    if nvars == 0:
        return []
    eqs = intertwiner_equations(pairs, dX, dY)
    ech = Echelon()
    for e in eqs:
        ech.add(e)
        if len(ech) == nvars:
            return []
    out = []
    for f in range(nvars):
        if f in ech.pivots:
            continue
        v = {f: 1}
        for p, row in ech.pivots.items():
            a = row.get(f)
            if a:
                v[p] = -a
        data = [{} for _ in range(dY)]
        for idx, c in v.items():
            data[idx // dX][idx % dX] = c
        out.append(RationalMatrix(dY, dX, data))
    return out


def commutant(mats: Sequence[RationalMatrix], dim: int) -> list[RationalMatrix]:
    return _solve_intertwiners([(M, M) for M in mats], dim, dim)


def _semisimple(X: Bimodule) -> bool:
    return all(p.is_semisimple for p in X.left.parts) and all(p.is_semisimple for p in X.right.parts)


def character(X: Bimodule) -> tuple:
    """Traces of a x b on X for a, b running over products of commutator-quotient
    representatives of the factors.  Over a semisimple algebra in characteristic
    zero these numbers determine X up to isomorphism."""
    factors = [(mats, part.hh0_basis) for part, mats in zip(X.left.parts, X.left_parts)]
    factors += [(mats, part.hh0_basis) for part, mats in zip(X.right.parts, X.right_parts)]
    out = []

    def walk(k, M):
        if k == len(factors):
            out.append(M.trace() if M is not None else X.dim)
            return
        mats, reps = factors[k]
        for i in reps:
            walk(k + 1, mats[i] if M is None else M @ mats[i])

    walk(0, None)
    return tuple(out)


def _same_actions(X: Bimodule, Y: Bimodule) -> bool:
    return X.dim == Y.dim and X.left_gens == Y.left_gens and X.right_gens == Y.right_gens


def bimodule_iso(X: Bimodule, Y: Bimodule, method: str = "auto"):
    """Decide X = Y as bimodules.  Returns (bool, witness matrix or None).

    method "character" (semisimple algebras only) compares traces and gives
    no witness; "intertwiner" searches the space of bimodule maps for an
    invertible element; "auto" takes the character route when it applies.
    """
    if X.left != Y.left or X.right != Y.right:
        raise ValueError("bimodules over different algebras")
    if X.dim != Y.dim:
        return False, None
    if _same_actions(X, Y):
        return True, RationalMatrix.identity(X.dim)
    if method == "character" or (method == "auto" and _semisimple(X)):
        if not _semisimple(X):
            raise ValueError("character test needs semisimple algebras")
        return character(X) == character(Y), None
    H = hom_space(X, Y)
    if not H:
        return False, None
    if len(hom_space(X, X)) != len(H) or len(hom_space(Y, Y)) != len(H):
        return False, None
    ok, coeffs = is_invertible_generic(H)
    if not ok:
        return False, None
    return True, linear_combination(coeffs, H)


def is_bimodule_map(T: RationalMatrix, X: Bimodule, Y: Bimodule) -> bool:
    return all(T @ a == b @ T for a, b in zip(X.left_gens, Y.left_gens)) and all(
        T @ a == b @ T for a, b in zip(X.right_gens, Y.right_gens)
    )


def action_map(X: Bimodule, v: Sequence, side: str = "left") -> RationalMatrix:
    """Matrix of a -> a.v (left) or b -> v.b (right), columns indexed by basis."""
    alg = X.left if side == "left" else X.right
    act = X.left_action if side == "left" else X.right_action
    cols = [act(i).apply(v) for i in range(alg.dim)]
    return RationalMatrix.from_columns(cols, X.dim)


def free_rank_one(X: Bimodule, side: str = "left", hint: Sequence | None = None, grid_limit: int = 20000):
    """Is X free of rank 1 as a one-sided module?  Returns (bool, generator or None).

    Tries ``hint``, then coordinate vectors, then a deterministic grid over
    combinations of coordinate vectors.  For a semisimple algebra a character
    comparison with the regular module settles the answer first, and the
    grid is only used to look for a generator.
    """
    alg = X.left if side == "left" else X.right
    if X.dim != alg.dim:
        return False, None
    n = X.dim
    candidates = []
    if hint is not None:
        candidates.append(tuple(hint))
    candidates += [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    candidates.append(tuple(1 for _ in range(n)))
    for v in candidates:
        if rank(action_map(X, v, side)) == n:
            return True, v
    known = None
    if all(p.is_semisimple for p in alg.parts):
        one = X.left_module() if side == "left" else X.right_module()
        reg = regular(alg)
        ref = reg.left_module() if side == "left" else reg.right_module()
        known = character(one) == character(ref)
        if not known:
            return False, None
    family = [action_map(X, tuple(1 if j == i else 0 for j in range(n)), side) for i in range(n)]
    ok, coeffs = _grid_search(family, grid_limit if known else None)
    if ok:
        return True, tuple(coeffs)
    return bool(known), None


def _grid_search(family, limit):
    if limit is None:
        return is_invertible_generic(family)
    D = family[0].rows
    for count, c in enumerate(itertools.product(range(1, D + 2), repeat=len(family))):
        if count >= limit:
            break
        if rank(linear_combination(c, family)) == D:
            return True, c
    return False, None


def morita_invertible(X: Bimodule) -> bool:
    """A -> End_B(X) and B^op -> End_A(X) both bijective."""
    for alg, act, other in ((X.left, X.left_action, X.right_gens), (X.right, X.right_action, X.left_gens)):
        mats = [act(i) for i in range(alg.dim)]
        flat = RationalMatrix.from_rows([M.entries for M in mats], X.dim * X.dim) if mats else None
        if flat is None or rank(flat) != alg.dim:
            return False
        if len(commutant(other, X.dim)) != alg.dim:
            return False
    return True


# ---------------------------------------------------------------------------
# preantipode duality


def hom_to_counit(delta: Bimodule, eps: Bimodule):
    """Right-module maps delta -> eps with the right A (x) A action (T.c)(u) = T(c.u).

    Returns (basis of maps, action matrices per left factor generator of delta)
    where the action is written as column-vector coordinates.
    """
    pairs = list(zip(delta.right_gens, eps.right_gens))
    basis = _solve_intertwiners(pairs, delta.dim, eps.dim)
    m = len(basis)
    ech = Echelon(track=True)
    for T in basis:
        ech.add(sparse(T.entries))
    acts = []
    for mats in delta.left_parts:
        part_acts = []
        for L in mats:
            cols = []
            for T in basis:
                c = ech.express(sparse((T @ L).entries))
                if c is None:
                    raise ArithmeticError("hom space not stable under the coproduct action")
                cols.append(dense(c, m))
            part_acts.append(RationalMatrix.from_columns(cols, m))
        acts.append(part_acts)
    return basis, acts


def hom_to_counit_dual(delta: Bimodule, eps: Bimodule) -> Bimodule:
    """k-dual of ``hom_to_counit`` as a left A (x) A-module."""
    basis, acts = hom_to_counit(delta, eps)
    left = [[M.T for M in mats] for mats in acts]
    return Bimodule(delta.left, SCALARS, len(basis), left, [])


def hom_from_counit_dim(delta: Bimodule, eps: Bimodule) -> int:
    """dim of right-module maps eps -> delta (the other reading of the Hom)."""
    pairs = list(zip(eps.right_gens, delta.right_gens))
    return len(_solve_intertwiners(pairs, eps.dim, delta.dim))


def preantipode_quotient(delta: Bimodule, eps: Bimodule) -> Bimodule:
    """delta (x)_A eps^*: the quotient construction of a preantipode, as a left A (x) A-module."""
    return tensor_over(delta, dual(eps))
