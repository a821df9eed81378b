"""Structure tensors on a finite set G and the hypergroupoid axioms.

Index convention used everywhere: ``d[g][h][k]`` is the multiplicity of k in
the product g*h, and ``e[g]`` is the counit dimension at g.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra


class AxiomFailure(Exception):
    """A structure tensor failed a named axiom at the given witness indices."""

    stage = "input"

    def __init__(self, axiom: str, witness=(), message: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"{axiom} fails at {self.witness}")


class NotSesquialgebra(AxiomFailure):
    stage = "sesquialgebra"


class NotHopfish(AxiomFailure):
    stage = "hopfish"


@dataclass(frozen=True)
class StructureTensor:
    n: int
    d: tuple
    e: tuple

    def __post_init__(self):
        n = self.n
        d = tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in self.d)
        e = tuple(int(x) for x in self.e)
        if len(e) != n or len(d) != n or any(len(p) != n or any(len(r) != n for r in p) for p in d):
            raise ValueError(f"structure tensor must be {n}x{n}x{n} with an e vector of length {n}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "e", e)

    @classmethod
    def from_lists(cls, d: Sequence, e: Sequence) -> "StructureTensor":
        return cls(len(e), d, e)

    def product(self, g: int, h: int) -> tuple:
        return self.d[g][h]

    def flat(self) -> tuple:
        return tuple(x for p in self.d for r in p for x in r)

    def relabel(self, perm: Sequence[int]) -> "StructureTensor":
        """Apply the bijection i -> perm[i] to all indices."""
        n = self.n
        d = [[[0] * n for _ in range(n)] for _ in range(n)]
        e = [0] * n
        for g in range(n):
            e[perm[g]] = self.e[g]
            for h in range(n):
                for k in range(n):
                    d[perm[g]][perm[h]][perm[k]] = self.d[g][h][k]
        return StructureTensor(n, d, e)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.flat()) and all(x >= 0 for x in self.e)


def group_tensor(table: Sequence[Sequence[int]], unit: int = 0) -> StructureTensor:
    """Structure tensor of a group (or any unital magma) from its Cayley table."""
    n = len(table)
    d = [[[1 if table[g][h] == k else 0 for k in range(n)] for h in range(n)] for g in range(n)]
    e = [1 if g == unit else 0 for g in range(n)]
    return StructureTensor(n, d, e)


def cyclic_group_tensor(n: int) -> StructureTensor:
    return group_tensor([[(g + h) % n for h in range(n)] for g in range(n)])


def yang_lee_tensor(m: int = 1) -> StructureTensor:
    """G = {e, g} with g*g = e + m g."""
    d = [[[1, 0], [0, 1]], [[0, 1], [1, m]]]
    return StructureTensor(2, d, [1, 0])


def discrete_groupoid_tensor(n: int) -> StructureTensor:
    """n objects, identity arrows only."""
    d = [[[1 if g == h == k else 0 for k in range(n)] for h in range(n)] for g in range(n)]
    return StructureTensor(n, d, [1] * n)


def pair_groupoid_tensor(n: int) -> StructureTensor:
    """All arrows (i, j) between n objects; index i*n + j, units at i*n + i."""
    N = n * n
    d = [[[0] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                d[i * n + j][j * n + l][i * n + l] = 1
    e = [1 if a // n == a % n else 0 for a in range(N)]
    return StructureTensor(N, d, e)


# ---------------------------------------------------------------------------
# axiom checks


def check_associativity(t: StructureTensor):
    """(True, None) or (False, (g, h, k, m)) for the first violated quadruple."""
    n, d = t.n, t.d
    R = range(n)
    for g in R:
        for h in R:
            gh = d[g][h]
            for k in R:
                hk = d[h][k]
                for m in R:
                    lhs = sum(gh[s] * d[s][k][m] for s in R if gh[s])
                    rhs = sum(hk[s] * d[g][s][m] for s in R if hk[s])
                    if lhs != rhs:
                        return False, (g, h, k, m)
    return True, None


def check_counit(t: StructureTensor):
    """(True, None) or (False, (side, g, k))."""
    n, d, e = t.n, t.d, t.e
    for g in range(n):
        for k in range(n):
            want = 1 if g == k else 0
            if sum(e[h] * d[h][g][k] for h in range(n)) != want:
                return False, ("left", g, k)
            if sum(e[h] * d[g][h][k] for h in range(n)) != want:
                return False, ("right", g, k)
    return True, None


def derive_units_l_r(t: StructureTensor):
    """Units, and the maps l, r sending g to its left and right unit."""
    ok, w = check_associativity(t)
    if not ok:
        raise NotSesquialgebra("associativity", w, "not a sesquialgebra: associativity fails")
    ok, w = check_counit(t)
    if not ok:
        raise NotSesquialgebra("counit", w, "not a sesquialgebra: counit fails")
    for g, x in enumerate(t.e):
        if x not in (0, 1):
            raise NotSesquialgebra("counit_values", (g,), "not a sesquialgebra: counit dimension not 0 or 1")
    units = tuple(g for g in range(t.n) if t.e[g] == 1)
    l, r = [], []
    for g in range(t.n):
        left = [u for u in units if t.d[u][g][g] == 1]
        right = [u for u in units if t.d[g][u][g] == 1]
        if len(left) != 1:
            raise NotSesquialgebra("units_l_r", (g,), f"not a sesquialgebra: {len(left)} left units for {g}")
        if len(right) != 1:
            raise NotSesquialgebra("units_l_r", (g,), f"not a sesquialgebra: {len(right)} right units for {g}")
        l.append(left[0])
        r.append(right[0])
    return units, tuple(l), tuple(r)


def antipode_row(t: StructureTensor, g: int) -> tuple:
    """sum_t e^t d[g][h][t] for every h."""
    return tuple(sum(t.e[s] * t.d[g][h][s] for s in range(t.n)) for h in range(t.n))


def derive_inversion(t: StructureTensor) -> tuple:
    """sigma with sum_t e^t d[g][h][t] = [h == sigma(g)]; raises NotHopfish otherwise."""
    sigma = []
    for g in range(t.n):
        row = antipode_row(t, g)
        for h, v in enumerate(row):
            if v > 1:
                raise NotHopfish("inversion", (g, h), f"not hopfish: sum_t e^t d[{g}][{h}][t] = {v} > 1")
        hits = [h for h, v in enumerate(row) if v == 1]
        if len(hits) != 1:
            raise NotHopfish("inversion", (g,), f"not hopfish: {len(hits)} inverse candidates for {g}")
        sigma.append(hits[0])
    return tuple(sigma)


@dataclass(frozen=True)
class Hypergroupoid:
    base: StructureTensor
    units: tuple
    l: tuple
    r: tuple
    sigma: tuple

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def d(self):
        return self.base.d

    @property
    def e(self):
        return self.base.e


def validate(t: StructureTensor) -> Hypergroupoid:
    """Run every axiom in order; return the hypergroupoid or raise AxiomFailure."""
    if not t.is_nonnegative():
        raise AxiomFailure("nonnegative", (), "negative structure constant")
    units, l, r = derive_units_l_r(t)
    sigma = derive_inversion(t)
    for g in range(t.n):
        for h in range(t.n):
            nonzero = any(t.d[g][h])
            if nonzero != (r[g] == l[h]):
                raise NotHopfish("composability", (g, h),
                                 f"product {g}*{h} is {'nonzero' if nonzero else 'zero'} but r({g})={r[g]}, l({h})={l[h]}")
    return Hypergroupoid(t, units, l, r, sigma)


def is_groupoid(h: Hypergroupoid) -> bool:
    n = h.n
    return all(sum(h.d[g][k]) == 1 for g in range(n) for k in range(n) if h.r[g] == h.l[k])


def is_group(h: Hypergroupoid) -> bool:
    return len(h.units) == 1 and is_groupoid(h)


def involution_scan(h: Hypergroupoid) -> bool:
    return all(h.sigma[h.sigma[g]] == g for g in range(h.n))


def to_algebra(h: Hypergroupoid) -> Algebra:
    """The based ring Q^G with product constants d and unit sum e^g g."""
    n = h.n
    mult = [[{k: c for k, c in enumerate(h.d[g][x]) if c} for x in range(n)] for g in range(n)]
    return Algebra(n, mult, h.e, name=f"Z^{n}")
