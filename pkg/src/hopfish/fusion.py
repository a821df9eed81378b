"""Frobenius-Perron dimensions of the based ring of a structure tensor."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import DominantRoot, IntPolynomial, RationalMatrix, charpoly, dominant_root, max_row_sum
from .hypergroupoid import Hypergroupoid, StructureTensor


def _tensor(h) -> StructureTensor:
    return h.base if isinstance(h, Hypergroupoid) else h


def multiplication_matrix(h, g: int) -> RationalMatrix:
    """Left multiplication by g on Z^G: entry (k, x) is d[g][x][k]."""
    t = _tensor(h)
    n = t.n
    return RationalMatrix(n, n, [{x: t.d[g][x][k] for x in range(n) if t.d[g][x][k]} for k in range(n)])


@dataclass(frozen=True)
class FpDim:
    element: int
    charpoly: IntPolynomial
    root: DominantRoot

    @property
    def lo(self) -> Fraction:
        return self.root.lo

    @property
    def hi(self) -> Fraction:
        return self.root.hi

    @property
    def integer_value(self):
        return self.root.integer_value


@dataclass(frozen=True)
class FpReport:
    dims: tuple
    matrices: tuple

    @property
    def obstructed(self) -> bool:
        return any(f.integer_value is None for f in self.dims)


def fp_dimension(h, g: int) -> FpDim:
    N = multiplication_matrix(h, g)
    p = charpoly(N)
    return FpDim(g, p, dominant_root(p, max_row_sum(N)))


def fp_dimensions(h) -> FpReport:
    t = _tensor(h)
    dims = tuple(fp_dimension(t, g) for g in range(t.n))
    return FpReport(dims, tuple(multiplication_matrix(t, g) for g in range(t.n)))


def quasi_hopf_obstruction(h) -> dict:
    """"obstructed" when some FP dimension is irrational.  "unobstructed" only
    means this test found nothing; it does not certify a quasi-Hopf structure."""
    rep = fp_dimensions(h)
    witnesses = [f.element for f in rep.dims if f.integer_value is None]
    return {
        "verdict": "obstructed" if witnesses else "unobstructed",
        "witnesses": witnesses,
        "meaning": ("not Morita equivalent to a quasi-Hopf algebra" if witnesses else "no FP obstruction"),
    }


def representation_ring_table(h) -> list:
    """Fusion rules: for each (g, x) the simples k in g (x) x with multiplicity d[g][x][k]."""
    t = _tensor(h)
    table = []
    for g in range(t.n):
        for x in range(t.n):
            terms = [(k, t.d[g][x][k]) for k in range(t.n) if t.d[g][x][k]]
            table.append(((g, x), terms))
    return table


def format_fusion_rule(g: int, x: int, terms, names=None) -> str:
    names = names or {}
    nm = lambda i: names.get(i, str(i))
    if not terms:
        rhs = "0"
    else:
        rhs = " + ".join(nm(k) if m == 1 else f"{m}*{nm(k)}" for k, m in terms)
    return f"{nm(g)} * {nm(x)} = {rhs}"


def check_multiplicative(h, report: FpReport | None = None) -> bool:
    """FPdim(g) FPdim(x) = sum_k d[g][x][k] FPdim(k), exactly for integral dims,
    by interval overlap otherwise.  Only meaningful with a single unit."""
    t = _tensor(h)
    report = report or fp_dimensions(t)
    dims = report.dims
    exact = all(f.integer_value is not None for f in dims)
    for g in range(t.n):
        for x in range(t.n):
            row = t.d[g][x]
            if exact:
                lhs = dims[g].integer_value * dims[x].integer_value
                rhs = sum(c * dims[k].integer_value for k, c in enumerate(row))
                if lhs != rhs:
                    return False
            else:
                lo = dims[g].lo * dims[x].lo
                hi = dims[g].hi * dims[x].hi
                rlo = sum(c * dims[k].lo for k, c in enumerate(row))
                rhi = sum(c * dims[k].hi for k, c in enumerate(row))
                if hi < rlo or rhi < lo:
                    return False
    return True
