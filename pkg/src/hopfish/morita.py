"""Transport of hopfish structures along Morita equivalences."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SCALARS, Algebra, direct_product, matrix_algebra
from .bimodule import (
    Bimodule,
    _solve_intertwiners,
    bimodule_iso,
    free_rank_one,
    from_left_module,
    morita_invertible,
    outer,
    regular,
    tensor_over,
    to_left_module,
)
from .exactlin import Echelon, RationalMatrix, dense, rank, sparse
from .hopf import CheckResult, HopfishData, function_algebra_hopf, hopf_to_hopfish


class MoritaRefusal(ValueError):
    """The supplied pair is not a Morita equivalence."""


@dataclass
class MoritaPair:
    A: Algebra
    B: Algebra
    P: Bimodule  # (A, B)
    Q: Bimodule  # (B, A)
    # basis indices of the blocks of B, when known; the block idempotent is
    # the unit of B restricted to those indices
    blocks: tuple | None = None


def check_pair(pair: MoritaPair) -> CheckResult:
    res = CheckResult()
    P, Q = pair.P, pair.Q
    shapes = (P.left == pair.A and P.right == pair.B and Q.left == pair.B and Q.right == pair.A)
    res.record("bimodule_shapes", shapes)
    if not shapes:
        return res
    PQ = tensor_over(P, Q)
    res.record("P_tensor_Q_is_A", bimodule_iso(PQ, regular(pair.A))[0], {"dim": PQ.dim})
    QP = tensor_over(Q, P)
    res.record("Q_tensor_P_is_B", bimodule_iso(QP, regular(pair.B))[0], {"dim": QP.dim})
    return res


def require_pair(pair: MoritaPair) -> None:
    res = check_pair(pair)
    if not res.ok:
        raise MoritaRefusal(f"not a Morita pair: {', '.join(res.failed)}")


def identity_pair(A: Algebra) -> MoritaPair:
    R = regular(A)
    return MoritaPair(A, A, R, R)


def compose_pairs(first: MoritaPair, second: MoritaPair) -> MoritaPair:
    """A ~ B ~ C gives A ~ C with P = P1 (x)_B P2 and Q = Q2 (x)_B Q1."""
    if first.B != second.A:
        raise ValueError("pairs are not composable")
    return MoritaPair(first.A, second.B, tensor_over(first.P, second.P), tensor_over(second.Q, first.Q),
                      second.blocks)


def matrix_pair(n: int, A: Algebra) -> MoritaPair:
    """B = M_n(A), Q = columns A^n as a (B, A)-bimodule, P = rows as an (A, B)-bimodule."""
    B = matrix_algebra(n, A)
    da = A.dim
    dim = n * da

    def idx(i, a):
        return i * da + a

    # B basis E_ij (x) b at (i*n + j)*da + b
    qleft, pright = [], []
    for i in range(n):
        for j in range(n):
            for b in range(da):
                Lb = A.left_mult(b)
                Rb = A.right_mult(b)
                ql = [{} for _ in range(dim)]
                pr = [{} for _ in range(dim)]
                # column vector: (E_ij b) sends slot j to slot i after left multiplying by b
                for a in range(da):
                    for c, x in Lb.columns_sparse()[a].items():
                        ql[idx(i, c)][idx(j, a)] = x
                    # row vector: slot i goes to slot j after right multiplying by b
                    for c, x in Rb.columns_sparse()[a].items():
                        pr[idx(j, c)][idx(i, a)] = x
                qleft.append(RationalMatrix(dim, dim, ql))
                pright.append(RationalMatrix(dim, dim, pr))
    I = RationalMatrix.identity(n)
    aparts_left = [[I.kron(_part_left(A, p, i)) for i in range(part.dim)] for p, part in enumerate(A.parts)]
    aparts_right = [[I.kron(_part_right(A, p, i)) for i in range(part.dim)] for p, part in enumerate(A.parts)]
    Q = Bimodule(B, A, dim, [qleft], aparts_right, name=f"cols({B.label})")
    P = Bimodule(A, B, dim, aparts_left, [pright], name=f"rows({B.label})")
    blocks = None
    if _idempotent_basis(A):
        blocks = tuple(tuple((i * n + j) * da + b for i in range(n) for j in range(n)) for b in range(da))
    return MoritaPair(A, B, P, Q, blocks)


def _idempotent_basis(A: Algebra) -> bool:
    """Basis of orthogonal idempotents summing to 1, as in a function algebra."""
    if any(x != 1 for x in A.unit):
        return False
    return all(A.mult[i][j] == ({i: 1} if i == j else {}) for i in range(A.dim) for j in range(A.dim))


def _part_left(A, p, i):
    return regular(A).left_parts[p][i]


def _part_right(A, p, i):
    return regular(A).right_parts[p][i]


def z3_algebra() -> Algebra:
    return hopf_to_hopfish(function_algebra_hopf(3)).algebra


def build_z3_example(r: int, s: int, t: int):
    """Q = A_0^r + A_1^s + A_2^t over A = k^{Z/3}, B = End_A(Q).

    Returns the pair and the predicted block dimensions of B and of the
    transported antipode bimodule.
    """
    mult = (r, s, t)
    if min(mult) < 0 or not any(mult):
        raise MoritaRefusal("multiplicities must be nonnegative and not all zero")
    if min(mult) == 0:
        raise MoritaRefusal("Q needs every A_i to occur for a Morita equivalence")
    A = z3_algebra()
    B = direct_product([matrix_algebra(m) for m in mult], name=f"End(Q[{r},{s},{t}])")
    dim = r + s + t
    offs = (0, r, r + s)
    boffs = (0, r * r, r * r + s * s)
    qleft = []
    for i, m in enumerate(mult):
        for a in range(m):
            for b in range(m):
                data = [{} for _ in range(dim)]
                data[offs[i] + a][offs[i] + b] = 1
                qleft.append(RationalMatrix(dim, dim, data))
    qright = []
    for j in range(3):
        data = [({v: 1} if offs[j] <= v < offs[j] + mult[j] else {}) for v in range(dim)]
        qright.append(RationalMatrix(dim, dim, data))
    Q = Bimodule(B, A, dim, [qleft], [qright], name="Q")
    P = dual_module(Q)
    blocks = tuple(range(boffs[i], boffs[i] + mult[i] ** 2) for i in range(3))
    pair = MoritaPair(A, B, P, Q, blocks)
    expected = {"B_block_dims": (r * r, s * s, t * t), "S_block_dims": (r * r, s * t, s * t)}
    return pair, expected


def dual_module(Q: Bimodule) -> Bimodule:
    """Hom_A(Q, A) for a (B, A)-bimodule Q, as an (A, B)-bimodule:
    (a f b)(x) = a f(b x)."""
    A = Q.right
    reg = regular(A)
    basis = _solve_intertwiners(list(zip(Q.right_gens, reg.right_gens)), Q.dim, A.dim)
    ech = Echelon(track=True)
    for T in basis:
        ech.add(sparse(T.entries))
    m = len(basis)

    def act(f):
        cols = []
        for T in basis:
            c = ech.express(sparse(f(T).entries))
            if c is None:
                raise ArithmeticError("dual module not closed under the action")
            cols.append(dense(c, m))
        return RationalMatrix.from_columns(cols, m)

    left = [[act(lambda T, L=L: L @ T) for L in mats] for mats in reg.left_parts]
    right = [[act(lambda T, L=L: T @ L) for L in mats] for mats in Q.left_parts]
    return Bimodule(A, Q.left, m, left, right)


def central_block_idempotents(pair: MoritaPair) -> list[tuple]:
    B = pair.B
    out = []
    for blk in pair.blocks or ():
        v = [0] * B.dim
        for i in blk:
            v[i] = B.unit[i]
        out.append(tuple(v))
    return out


def block_dims(M: Bimodule, idempotents) -> tuple:
    """dim z M for each central idempotent z, acting on the left."""
    return tuple(rank(M.left_action_by(z)) for z in idempotents)


@dataclass
class TransportResult:
    data: HopfishData
    hopfish: bool
    generator: tuple | None


def transport(src: HopfishData, pair: MoritaPair, check: bool = True) -> TransportResult:
    """eps^B = eps (x)_A P, delta^B = (Q(x)Q) (x)_{A(x)A} delta (x)_A P,
    S^B = (Q(x)Q) (x)_{A(x)A} S; hopfish iff S^B is free of rank one on the left."""
    if check:
        require_pair(pair)
    QQ = outer(pair.Q, pair.Q)
    eps = tensor_over(src.eps, pair.P)
    delta = tensor_over(tensor_over(QQ, src.delta), pair.P)
    SB_left = tensor_over(QQ, to_left_module(src.S))
    SB = from_left_module(SB_left, pair.B)
    ok, gen = free_rank_one(SB, "left")
    return TransportResult(HopfishData(pair.B, delta, eps, SB), ok, gen)


def self_conjugate(S: Bimodule, Q: Bimodule, method: str = "intertwiner") -> bool:
    """Hom_A(Q, A) against S (x)_{A^op} Q as left A-modules; Q is used only
    through its right A-action."""
    A = S.left
    Qr = Bimodule(SCALARS, Q.right, Q.dim, [], Q.right_parts)
    dualQ = dual_module(Qr).left_module()
    Qop = Bimodule(A.opposite(), SCALARS, Q.dim, Q.right_parts, [])
    twisted = tensor_over(S, Qop)
    return bimodule_iso(dualQ, twisted, method)[0]


def hopfish_morita_equivalent(X: HopfishData, Y: HopfishData, pair: MoritaPair) -> CheckResult:
    """The four conditions: P, Q mutually inverse, and eps, delta, S of Y
    isomorphic to the transports of those of X."""
    res = check_pair(pair)
    if not res.ok:
        raise MoritaRefusal(f"not a Morita pair: {', '.join(res.failed)}")
    moved = transport(X, pair, check=False).data
    res.record("counit", bimodule_iso(moved.eps, Y.eps)[0])
    res.record("coproduct", bimodule_iso(moved.delta, Y.delta)[0])
    res.record("antipode", bimodule_iso(moved.S, Y.S)[0])
    return res


def z3_report(r: int, s: int, t: int) -> dict:
    pair, expected = build_z3_example(r, s, t)
    src = hopf_to_hopfish(function_algebra_hopf(3))
    res = transport(src, pair)
    zs = central_block_idempotents(pair)
    out = {
        "r": r, "s": s, "t": t,
        "B_block_dims": list(block_dims(regular(pair.B), zs)),
        "S_block_dims": list(block_dims(res.data.S, zs)),
        "predicted_S_block_dims": list(expected["S_block_dims"]),
        "hopfish": res.hopfish,
        "self_conjugate": self_conjugate(src.S, pair.Q),
        "morita_invertible_Q": morita_invertible(pair.Q),
    }
    return out
