"""Sesquialgebra, preantipode, Hopf and quasi-Hopf checks.

Hopf-type data is given by honest algebra maps (coproduct, counit, antipode
as a map out of the opposite algebra); hopfish data by bimodules.  The
functions here turn the former into the latter and test the axioms of both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    SCALARS,
    Algebra,
    Homomorphism,
    cyclic_function_algebra,
    function_algebra,
    group_algebra,
    identity_hom,
    tensor,
    tensor_hom,
)
from .bimodule import (
    Bimodule,
    action_map,
    bimodule_iso,
    free_rank_one,
    from_left_module,
    hom_from_counit_dim,
    hom_to_counit_dual,
    modulate,
    outer,
    preantipode_quotient,
    regular,
    tensor_over,
    to_left_module,
)
from .exactlin import (
    Echelon,
    RationalMatrix,
    _axpy,
    dense,
    kernel_basis,
    quotient_basis,
    rank,
    sparse,
)
from .hypergroupoid import StructureTensor, antipode_row


@dataclass
class CheckResult:
    """Ordered named checks; ``ok`` is their conjunction.  ``info`` holds
    reported facts that do not enter the verdict."""

    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail=None) -> bool:
        self.checks[name] = bool(ok)
        if detail is not None:
            self.details[name] = detail
        return bool(ok)

    def merge(self, other: "CheckResult", prefix: str = "") -> None:
        for k, v in other.checks.items():
            self.checks[prefix + k] = v
        for k, v in other.details.items():
            self.details[prefix + k] = v
        for k, v in other.info.items():
            self.info[prefix + k] = v

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list:
        return [k for k, v in self.checks.items() if not v]

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# bimodule-level (hopfish) data


@dataclass
class HopfishData:
    algebra: Algebra
    delta: Bimodule
    eps: Bimodule
    S: Bimodule
    # vector of S to try first in the freeness test
    hint: tuple | None = None


def check_sesquialgebra(A: Algebra, delta: Bimodule, eps: Bimodule, method: str = "auto") -> CheckResult:
    """Coassociativity and both counit laws, each up to bimodule isomorphism."""
    res = CheckResult()
    reg = regular(A)
    lhs = tensor_over(outer(reg, delta), delta)
    rhs = tensor_over(outer(delta, reg), delta)
    res.record("coassociativity", bimodule_iso(lhs, rhs, method)[0], {"dims": [lhs.dim, rhs.dim]})
    left = tensor_over(outer(eps, reg), delta)
    res.record("left_counit", bimodule_iso(left, reg, method)[0], {"dim": left.dim})
    right = tensor_over(outer(reg, eps), delta)
    res.record("right_counit", bimodule_iso(right, reg, method)[0], {"dim": right.dim})
    return res


def duality_check(delta: Bimodule, eps: Bimodule, S: Bimodule, quotient: Bimodule | None = None) -> CheckResult:
    """The k-dual of the right-module maps delta -> eps against S, by two routes:
    the intertwiner space itself, and a quotient construction (delta (x)_A eps^*
    unless ``quotient`` is supplied)."""
    res = CheckResult()
    Sl = to_left_module(S)
    hom_dual = hom_to_counit_dual(delta, eps)
    quo = quotient if quotient is not None else preantipode_quotient(delta, eps)
    quo = _as_left_module(quo, Sl.left)
    res.record("dual_dim_intertwiner", hom_dual.dim == S.dim, {"hom": hom_dual.dim, "S": S.dim})
    res.record("dual_dim_quotient", quo.dim == S.dim, {"quotient": quo.dim, "S": S.dim})
    hom_dual = _as_left_module(hom_dual, Sl.left)
    res.record("dual_iso_intertwiner", bimodule_iso(hom_dual, Sl)[0])
    res.record("dual_iso_quotient", bimodule_iso(quo, Sl)[0])
    res.info["hom_from_counit_dim"] = hom_from_counit_dim(delta, eps)
    return res


def _as_left_module(M: Bimodule, AA: Algebra) -> Bimodule:
    if M.right.parts:
        raise ValueError("expected a left module")
    return Bimodule(AA, SCALARS, M.dim, M.left_parts, [])


def antipode_test(S: Bimodule, hint=None) -> CheckResult:
    res = CheckResult()
    ok, v = free_rank_one(S, "left", hint)
    res.record("antipode_free_rank_one", ok, {"generator": list(v) if v is not None else None})
    right_ok, _ = free_rank_one(S, "right", hint)
    res.info["right_free_rank_one"] = right_ok
    return res


def check_hopfish(h: HopfishData, quotient: Bimodule | None = None) -> CheckResult:
    res = check_sesquialgebra(h.algebra, h.delta, h.eps)
    res.merge(duality_check(h.delta, h.eps, h.S, quotient))
    res.merge(antipode_test(h.S, h.hint))
    return res


def _diag_module(dim, left_alg, right_alg, left_labels, right_labels) -> Bimodule:
    """Bimodule over products of k^G-type factors whose basis vectors carry a
    point label per factor; delta_a acts as the projection onto label a."""
    def projections(labels_by_vec, size):
        mats = []
        for a in range(size):
            data = [({i: 1} if labels_by_vec[i] == a else {}) for i in range(dim)]
            mats.append(RationalMatrix(dim, dim, data))
        return mats

    left = [projections([lab[p] for lab in left_labels], part.dim) for p, part in enumerate(left_alg.parts)]
    right = [projections([lab[p] for lab in right_labels], part.dim) for p, part in enumerate(right_alg.parts)]
    return Bimodule(left_alg, right_alg, dim, left, right)


def structure_hopfish_data(t: StructureTensor) -> HopfishData:
    """Finite-free-type hopfish candidate on k^G from a structure tensor.

    The coproduct has a d[g][h][k]-dimensional block supported at
    (delta_g (x) delta_h, delta_k), the counit an e[g]-dimensional block at
    delta_g, and S a block of dimension sum_t e^t d[g][h][t] at (g, h).
    """
    n = t.n
    A = function_algebra(n)
    AA = tensor(A, A)
    dl, dr = [], []
    for g in range(n):
        for h in range(n):
            for k in range(n):
                for _ in range(t.d[g][h][k]):
                    dl.append((g, h))
                    dr.append((k,))
    delta = _diag_module(len(dl), AA, A, dl, dr)
    el, er = [], []
    for g in range(n):
        for _ in range(t.e[g]):
            el.append(())
            er.append((g,))
    eps = _diag_module(len(el), SCALARS, A, el, er)
    sl, sr = [], []
    for g in range(n):
        row = antipode_row(t, g)
        for h in range(n):
            for _ in range(row[h]):
                sl.append((g,))
                sr.append((h,))
    S = _diag_module(len(sl), A, A.opposite(), sl, sr)
    return HopfishData(A, delta, eps, S)


# ---------------------------------------------------------------------------
# Hopf algebras given by maps


@dataclass
class HopfData:
    algebra: Algebra
    coproduct: Homomorphism
    counit: Homomorphism
    antipode: Homomorphism  # out of the opposite algebra


def antipode_hom(A: Algebra, matrix) -> Homomorphism:
    return Homomorphism(A.opposite(), A, matrix)


def function_algebra_hopf(n: int, antipode: str = "inverse") -> HopfData:
    """k^{Z/n}: delta_g -> sum_{h+k=g} delta_h (x) delta_k, eps = evaluation at 0."""
    A = cyclic_function_algebra(n)
    AA = tensor(A, A)
    cols = []
    for g in range(n):
        v = [0] * (n * n)
        for h in range(n):
            v[h * n + (g - h) % n] = 1
        cols.append(v)
    D = Homomorphism(A, AA, RationalMatrix.from_columns(cols, n * n))
    E = Homomorphism(A, SCALARS, [[1 if g == 0 else 0 for g in range(n)]])
    if antipode == "inverse":
        perm = [(-g) % n for g in range(n)]
    elif antipode == "identity":
        perm = list(range(n))
    else:
        raise ValueError(antipode)
    S = antipode_hom(A, RationalMatrix.from_columns([[1 if i == perm[g] else 0 for i in range(n)] for g in range(n)], n))
    return HopfData(A, D, E, S)


def group_algebra_hopf(n: int) -> HopfData:
    """Q[Z/n]: g -> g (x) g, eps(g) = 1, S(g) = g^-1."""
    A = group_algebra(n)
    AA = tensor(A, A)
    cols = []
    for g in range(n):
        v = [0] * (n * n)
        v[g * n + g] = 1
        cols.append(v)
    D = Homomorphism(A, AA, RationalMatrix.from_columns(cols, n * n))
    E = Homomorphism(A, SCALARS, [[1] * n])
    S = antipode_hom(A, RationalMatrix.from_columns([[1 if i == (-g) % n else 0 for i in range(n)] for g in range(n)], n))
    return HopfData(A, D, E, S)


def _hom_ok(res: CheckResult, name: str, f: Homomorphism) -> None:
    bad = f.check()
    res.record(name, bad is None, None if bad is None else {"axiom": bad[0], "witness": list(bad[1])})


def _first_bad(pairs):
    for i, (a, b) in enumerate(pairs):
        if a != b:
            return i
    return None


def _record_identity(res, name, pairs):
    bad = _first_bad(pairs)
    res.record(name, bad is None, None if bad is None else {"basis_element": bad})


def hopf_axioms(h: HopfData) -> CheckResult:
    A, D, E, S = h.algebra, h.coproduct, h.counit, h.antipode
    n = A.dim
    res = CheckResult()
    _hom_ok(res, "coproduct_homomorphism", D)
    _hom_ok(res, "counit_homomorphism", E)
    _hom_ok(res, "antipode_antihomomorphism", S)
    I = identity_hom(A)
    DI = tensor_hom(D, I).matrix @ D.matrix
    ID = tensor_hom(I, D).matrix @ D.matrix
    _record_identity(res, "coassociativity", [(DI.column(a), ID.column(a)) for a in range(n)])
    EI = tensor_hom(E, I).matrix @ D.matrix
    IE = tensor_hom(I, E).matrix @ D.matrix
    _record_identity(res, "counit", [(EI.column(a), A.basis(a)) for a in range(n)]
                     + [(IE.column(a), A.basis(a)) for a in range(n)])
    pairs = []
    for a in range(n):
        unit_eps = tuple(E.matrix[0, a] * u for u in A.unit)
        pairs.append((_mu_twisted(A, S, D.image(a), left=True), unit_eps))
        pairs.append((_mu_twisted(A, S, D.image(a), left=False), unit_eps))
    _record_identity(res, "antipode_axiom", pairs)
    return res


def _mu_twisted(A, S, x2, left=True):
    """mu (S (x) id)(x2) or mu (id (x) S)(x2) for x2 in A (x) A."""
    n = A.dim
    acc = [0] * n
    for idx, c in enumerate(x2):
        if not c:
            continue
        a, b = divmod(idx, n)
        if left:
            v = A.multiply(S.image(a), A.basis(b))
        else:
            v = A.multiply(A.basis(a), S.image(b))
        for i, x in enumerate(v):
            acc[i] += c * x
    return tuple(acc)


def coideal_span(A: Algebra, D: Homomorphism, E: Homomorphism) -> Echelon:
    """Span of (c (x) d)(eps(a) 1(x)1 - delta(a)) over basis triples."""
    AA = tensor(A, A)
    ech = Echelon()
    for a in range(A.dim):
        v = sparse([E.matrix[0, a] * u for u in AA.unit])
        _axpy(v, -1, sparse(D.image(a)))
        if not v:
            continue
        for cd in range(AA.dim):
            w = AA.left_mult(cd).apply_sparse(v)
            if w:
                ech.add(w)
    return ech


def kernel_ideal_span(A: Algebra, D: Homomorphism, E: Homomorphism) -> Echelon:
    """Left ideal generated by delta(ker eps)."""
    AA = tensor(A, A)
    ech = Echelon()
    for k in kernel_basis(E.matrix):
        v = sparse(D(k))
        for cd in range(AA.dim):
            w = AA.left_mult(cd).apply_sparse(v)
            if w:
                ech.add(w)
    return ech


def _same_span(a: Echelon, b: Echelon) -> bool:
    return len(a) == len(b) and all(b.contains(r) for r in a.pivots.values())


def preantipode(A: Algebra, D: Homomorphism, E: Homomorphism):
    """(A (x) A)/W as an (A, A^op)-bimodule, plus the quotient map data."""
    W = coideal_span(A, D, E)
    if not _same_span(W, kernel_ideal_span(A, D, E)):
        raise ArithmeticError("the two constructions of W disagree; input is not a bialgebra")
    AA = tensor(A, A)
    quo = quotient_basis(AA.dim, list(W.pivots.values()))
    reg = regular(AA)
    left = [[quo.projection @ (M @ quo.section) for M in mats] for mats in reg.left_parts]
    Q = Bimodule(AA, SCALARS, quo.dim, left, [])
    return from_left_module(Q, A), quo, W


def hopf_verify(h: HopfData) -> CheckResult:
    """Axioms of h, then that a (x) b -> a S(b) induces a bimodule isomorphism
    from (A (x) A)/W onto the modulation of S."""
    A, D, E, S = h.algebra, h.coproduct, h.counit, h.antipode
    n = A.dim
    res = hopf_axioms(h)
    Q, quo, W = preantipode(A, D, E)
    res.info["preantipode_dim"] = Q.dim
    # phi(a (x) b) = a S(b)
    phi = RationalMatrix.from_columns(
        [A.multiply(A.basis(a), S.image(b)) for a in range(n) for b in range(n)], n)
    bad = [r for r in W.pivots.values() if phi.apply_sparse(r)]
    res.record("phi_well_defined", not bad)
    induced = phi @ quo.section
    res.record("phi_bijective", quo.dim == n and rank(induced) == n, {"quotient_dim": quo.dim, "rank": rank(induced)})
    target = modulate(S)
    ok = all(induced @ a == b @ induced for a, b in zip(Q.left_gens, target.left_gens)) and all(
        induced @ a == b @ induced for a, b in zip(Q.right_gens, target.right_gens))
    res.record("phi_bimodule_map", ok and not bad)
    member = []
    for a in range(n):
        v = sparse(A.unit[i] * (1 if j == a else 0) for i in range(n) for j in range(n))
        _axpy(v, -1, sparse(x * u for x in S.image(a) for u in A.unit))
        member.append(W.contains(v))
    res.record("antipode_membership", all(member))
    one = quo.projection.apply(tensor(A, A).unit)
    res.record("one_tensor_one_generates", rank(action_map(Q, one, "left")) == n)
    res.info["right_free_rank_one"] = free_rank_one(Q, "right")[0]
    return res


def hopf_to_hopfish(h: HopfData) -> HopfishData:
    # 1 (x) 1 goes to 1 S(1) = 1, the expected free generator
    A = h.algebra
    return HopfishData(A, modulate(h.coproduct), modulate(h.counit), modulate(h.antipode), tuple(A.unit))


# ---------------------------------------------------------------------------
# quasi-Hopf


@dataclass
class QuasiHopfData:
    algebra: Algebra
    coproduct: Homomorphism
    counit: Homomorphism
    antipode: Homomorphism
    phi: tuple
    phi_inv: tuple
    alpha: tuple
    beta: tuple


def _terms(x, dims):
    """Nonzero coordinates of a tensor as (indices, coefficient)."""
    out = []
    for idx, c in enumerate(x):
        if not c:
            continue
        ix = []
        for d in reversed(dims):
            idx, r = divmod(idx, d)
            ix.append(r)
        out.append((tuple(reversed(ix)), c))
    return out


def _kron_vec(*vs):
    out = (1,)
    for v in vs:
        out = tuple(a * b for a in out for b in v)
    return out


def _add(acc, v, c=1):
    for i, x in enumerate(v):
        if x:
            acc[i] += c * x


def quasi_hopf_axioms(q: QuasiHopfData) -> CheckResult:
    A, D, E, S = q.algebra, q.coproduct, q.counit, q.antipode
    n = A.dim
    A3 = tensor(A, A, A)
    A4 = tensor(A, A, A, A)
    I = identity_hom(A)
    res = CheckResult()
    _hom_ok(res, "coproduct_homomorphism", D)
    _hom_ok(res, "counit_homomorphism", E)
    _hom_ok(res, "antipode_antihomomorphism", S)
    EI = tensor_hom(E, I).matrix @ D.matrix
    IE = tensor_hom(I, E).matrix @ D.matrix
    _record_identity(res, "counit", [(EI.column(a), A.basis(a)) for a in range(n)]
                     + [(IE.column(a), A.basis(a)) for a in range(n)])
    phi, phi_inv = tuple(q.phi), tuple(q.phi_inv)
    res.record("associator_invertible",
               A3.multiply(phi, phi_inv) == A3.unit and A3.multiply(phi_inv, phi) == A3.unit)
    DI = tensor_hom(D, I).matrix @ D.matrix
    ID = tensor_hom(I, D).matrix @ D.matrix
    _record_identity(res, "twisted_coassociativity",
                     [(A3.multiply(ID.column(a), phi), A3.multiply(phi, DI.column(a))) for a in range(n)])
    IID = tensor_hom(I, I, D).matrix.apply(phi)
    DII = tensor_hom(D, I, I).matrix.apply(phi)
    IDI = tensor_hom(I, D, I).matrix.apply(phi)
    one = A.unit
    lhs = A4.multiply(IID, DII)
    rhs = A4.multiply(A4.multiply(_kron_vec(one, phi), IDI), _kron_vec(phi, one))
    res.record("pentagon", lhs == rhs)
    mid = tensor_hom(I, E, I).matrix.apply(phi)
    res.record("associator_counit", mid == tensor(A, A).unit)
    alpha, beta = tuple(q.alpha), tuple(q.beta)
    pa, pb = [], []
    for a in range(n):
        acc_a = [0] * n
        acc_b = [0] * n
        for (i, j), c in _terms(D.image(a), (n, n)):
            _add(acc_a, A.multiply(A.multiply(S.image(i), alpha), A.basis(j)), c)
            _add(acc_b, A.multiply(A.multiply(A.basis(i), beta), S.image(j)), c)
        ea = E.matrix[0, a]
        pa.append((tuple(acc_a), tuple(ea * x for x in alpha)))
        pb.append((tuple(acc_b), tuple(ea * x for x in beta)))
    _record_identity(res, "quasi_antipode_alpha", pa)
    _record_identity(res, "quasi_antipode_beta", pb)
    acc = [0] * n
    for (x, y, z), c in _terms(phi, (n, n, n)):
        v = A.multiply(A.multiply(A.multiply(A.multiply(A.basis(x), beta), S.image(y)), alpha), A.basis(z))
        _add(acc, v, c)
    res.record("quasi_antipode_unit", tuple(acc) == one, {"value": [str(x) for x in acc]})
    acc = [0] * n
    for (x, y, z), c in _terms(phi_inv, (n, n, n)):
        v = A.multiply(A.multiply(A.multiply(A.multiply(S.image(x), alpha), A.basis(y)), beta), S.image(z))
        _add(acc, v, c)
    res.info["companion_unit"] = tuple(acc) == one
    return res


def omega(q: QuasiHopfData) -> tuple:
    """sum_j S(P_j) alpha Q_j (x) R_j."""
    A, S = q.algebra, q.antipode
    n = A.dim
    acc = [0] * (n * n)
    for (x, y, z), c in _terms(q.phi_inv, (n, n, n)):
        left = A.multiply(A.multiply(S.image(x), q.alpha), A.basis(y))
        _add(acc, _kron_vec(left, A.basis(z)), c)
    return tuple(acc)


def phi_psi_matrices(q: QuasiHopfData):
    A, D, S = q.algebra, q.coproduct, q.antipode
    n = A.dim
    AA = tensor(A, A)
    w = omega(q)
    phi_cols, psi_cols = [], []
    for a in range(n):
        for b in range(n):
            v = AA.multiply(AA.multiply(_kron_vec(A.basis(a), A.unit), w), D.image(b))
            phi_cols.append(v)
            acc = [0] * (n * n)
            for (b1, b2), cb in _terms(D.image(b), (n, n)):
                for (x, y, z), c in _terms(q.phi, (n, n, n)):
                    left = A.multiply(A.multiply(A.multiply(A.multiply(A.basis(a), A.basis(x)), q.beta),
                                                 S.image(y)), S.image(b1))
                    right = A.multiply(A.basis(b2), A.basis(z))
                    _add(acc, _kron_vec(left, right), c * cb)
            psi_cols.append(tuple(acc))
    return (RationalMatrix.from_columns(phi_cols, n * n), RationalMatrix.from_columns(psi_cols, n * n))


def quasi_hopf_verify(q: QuasiHopfData) -> CheckResult:
    A, D, E, S = q.algebra, q.coproduct, q.counit, q.antipode
    n = A.dim
    res = quasi_hopf_axioms(q)
    Phi, Psi = phi_psi_matrices(q)
    res.record("phi_psi_identity", (Phi @ Psi).is_identity())
    res.record("psi_phi_identity", (Psi @ Phi).is_identity())
    IE = RationalMatrix.identity(n).kron(E.matrix)
    induced = IE @ Psi
    expected = RationalMatrix.from_columns(
        [A.multiply(A.multiply(A.basis(a), q.beta), S.image(b)) for a in range(n) for b in range(n)], n)
    res.record("counit_of_inverse", induced == expected)
    W = kernel_ideal_span(A, D, E)
    quo = quotient_basis(n * n, list(W.pivots.values()))
    kills = all(not induced.apply_sparse(r) for r in W.pivots.values())
    res.record("quotient_bijection", kills and quo.dim == n and rank(induced @ quo.section) == n,
               {"quotient_dim": quo.dim})
    return res


def quasi_from_hopf(h: HopfData) -> QuasiHopfData:
    A = h.algebra
    one3 = tensor(A, A, A).unit
    return QuasiHopfData(A, h.coproduct, h.counit, h.antipode, one3, one3, A.unit, A.unit)


def z2_cocycle_quasi(alpha=(1, 1), beta=(1, -1)) -> QuasiHopfData:
    """k^{Z/2} with associator sum (-1)^{abc} delta_a (x) delta_b (x) delta_c."""
    h = function_algebra_hopf(2)
    phi = tuple((-1) ** (a * b * c) for a in range(2) for b in range(2) for c in range(2))
    return QuasiHopfData(h.algebra, h.coproduct, h.counit, h.antipode, phi, phi, tuple(alpha), tuple(beta))


def z2_sign_search() -> list:
    """All (alpha, beta) in {+-delta_0 +- delta_1}^2 passing the quasi-Hopf axioms."""
    signs = [(s0, s1) for s0 in (1, -1) for s1 in (1, -1)]
    return [(a, b) for a in signs for b in signs if quasi_hopf_axioms(z2_cocycle_quasi(a, b)).ok]


def quasi_to_hopfish(q: QuasiHopfData) -> HopfishData:
    """Modulated coproduct and counit with the quotient (A (x) A)/W as S."""
    Q, _, _ = preantipode(q.algebra, q.coproduct, q.counit)
    return HopfishData(q.algebra, modulate(q.coproduct), modulate(q.counit), Q)
