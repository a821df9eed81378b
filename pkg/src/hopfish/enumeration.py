"""Exhaustive search for structure tensors on small sets, up to relabeling."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .fusion import fp_dimensions
from .hypergroupoid import (
    AxiomFailure,
    StructureTensor,
    check_associativity,
    check_counit,
    involution_scan,
    is_group,
    is_groupoid,
    validate,
)

MODES = ("sesqui", "hyper")


@dataclass(frozen=True)
class SearchConfig:
    n: int
    max_mult: int
    mode: str = "hyper"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.max_mult < 1:
            raise ValueError("max_mult must be at least 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


def canonical_key(t: StructureTensor) -> tuple:
    """Sort key: units first (e negated), then the flattened d."""
    return (tuple(-x for x in t.e), t.flat())


def canonicalize(t: StructureTensor) -> StructureTensor:
    best = None
    best_key = None
    for perm in itertools.permutations(range(t.n)):
        c = t.relabel(perm)
        k = canonical_key(c)
        if best_key is None or k < best_key:
            best, best_key = c, k
    return best


def is_sesquialgebra(t: StructureTensor) -> bool:
    if not t.is_nonnegative() or any(x not in (0, 1) for x in t.e):
        return False
    return check_associativity(t)[0] and check_counit(t)[0]


def accepts(t: StructureTensor, mode: str) -> bool:
    if mode == "sesqui":
        return is_sesquialgebra(t)
    try:
        validate(t)
        return True
    except AxiomFailure:
        return False


# ---------------------------------------------------------------------------
# pruned backtracking


class _Search:
    def __init__(self, n, M, mode, e, node_limit=None):
        self.n, self.M, self.mode, self.e = n, M, mode, e
        self.node_limit = node_limit
        self.nodes = 0
        self.complete = True
        self.found: dict = {}

    def run(self):
        n, e = self.n, self.e
        units = [g for g in range(n) if e[g]]
        others = [g for g in range(n) if not e[g]]
        if not units:
            return
        for lchoice in itertools.product(units, repeat=len(others)):
            for rchoice in itertools.product(units, repeat=len(others)):
                l = list(range(n))
                r = list(range(n))
                for g, a, b in zip(others, lchoice, rchoice):
                    l[g], r[g] = a, b
                self._branch(units, others, l, r)
                if not self.complete:
                    return

    def _branch(self, units, others, l, r):
        n = self.n
        d = [[[0] * n for _ in range(n)] for _ in range(n)]
        assigned = [[True] * n for _ in range(n)]
        for u in units:
            for g in range(n):
                if l[g] == u:
                    d[u][g][g] = 1
                if r[g] == u:
                    d[g][u][g] = 1
        blocks = []
        for g in others:
            for h in others:
                if r[g] == l[h]:
                    outs = [k for k in range(n) if l[k] == l[g] and r[k] == r[h]]
                    blocks.append((g, h, outs))
                    assigned[g][h] = False
        self.d, self.assigned, self.l, self.r = d, assigned, l, r
        self.units = set(units)
        # triples that involve no free block hold already (units act trivially)
        self._assign(blocks, 0, {g: 0 for g in others})

    def _options(self, outs):
        hyper = self.mode == "hyper"
        for vec in itertools.product(range(self.M + 1), repeat=len(outs)):
            if hyper:
                if not any(vec):
                    continue
                if sum(v for k, v in zip(outs, vec) if k in self.units) > 1:
                    continue
            yield vec

    def _assign(self, blocks, i, unit_hits):
        if not self.complete:
            return
        if i == len(blocks):
            self._leaf(unit_hits)
            return
        g, h, outs = blocks[i]
        last_in_row = i + 1 == len(blocks) or blocks[i + 1][0] != g
        d = self.d
        for vec in self._options(outs):
            self.nodes += 1
            if self.node_limit is not None and self.nodes > self.node_limit:
                self.complete = False
                return
            hit = sum(v for k, v in zip(outs, vec) if k in self.units)
            if self.mode == "hyper":
                total = unit_hits[g] + hit
                if total > 1 or (last_in_row and total != 1):
                    continue
            for k, v in zip(outs, vec):
                d[g][h][k] = v
            self.assigned[g][h] = True
            if self._consistent(g, h):
                unit_hits[g] += hit
                self._assign(blocks, i + 1, unit_hits)
                unit_hits[g] -= hit
            self.assigned[g][h] = False
            for k in outs:
                d[g][h][k] = 0

    def _ready(self, g, h, k):
        a, d = self.assigned, self.d
        if not (a[g][h] and a[h][k]):
            return False
        gh, hk = d[g][h], d[h][k]
        n = self.n
        return all(a[s][k] for s in range(n) if gh[s]) and all(a[g][s] for s in range(n) if hk[s])

    def _involves(self, g, h, k, x, y):
        if (g, h) == (x, y) or (h, k) == (x, y):
            return True
        d = self.d
        if k == y and d[g][h][x]:
            return True
        if g == x and d[h][k][y]:
            return True
        return False

    def _consistent(self, x, y) -> bool:
        n, d = self.n, self.d
        R = range(n)
        for g in R:
            for h in R:
                for k in R:
                    if not self._involves(g, h, k, x, y) or not self._ready(g, h, k):
                        continue
                    gh, hk = d[g][h], d[h][k]
                    for m in R:
                        lhs = sum(gh[s] * d[s][k][m] for s in R if gh[s])
                        rhs = sum(hk[s] * d[g][s][m] for s in R if hk[s])
                        if lhs != rhs:
                            return False
        return True

    def _leaf(self, unit_hits):
        t = StructureTensor(self.n, [[list(r) for r in p] for p in self.d], self.e)
        if not accepts(t, self.mode):
            return
        c = canonicalize(t)
        self.found[canonical_key(c)] = c


def _search_one(args):
    n, M, mode, e, node_limit = args
    s = _Search(n, M, mode, e, node_limit)
    s.run()
    return list(s.found.items()), s.complete, s.nodes


@dataclass
class CensusEntry:
    tensor: StructureTensor
    is_hypergroupoid: bool
    is_groupoid: bool
    is_group: bool
    sigma_involutive: bool | None
    fp_dims: tuple = field(default=())


@dataclass
class Census:
    config: SearchConfig
    entries: list
    complete: bool

    def __len__(self) -> int:
        return len(self.entries)


def describe(t: StructureTensor) -> CensusEntry:
    try:
        h = validate(t)
    except AxiomFailure:
        h = None
    fp = fp_dimensions(t).dims
    if h is None:
        return CensusEntry(t, False, False, False, None, fp)
    return CensusEntry(t, True, is_groupoid(h), is_group(h), involution_scan(h), fp)


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("HOPFISH_WORKERS")
        workers = int(env) if env else 1
    return max(1, workers)


def search_tensors(cfg: SearchConfig, workers: int | None = 1, node_limit: int | None = None):
    """Canonical tensors found by the pruned search, plus a completeness flag."""
    jobs = [(cfg.n, cfg.max_mult, cfg.mode, e, node_limit)
            for e in itertools.product((0, 1), repeat=cfg.n) if any(e)]
    workers = resolve_workers(workers)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_search_one, jobs))
    else:
        results = [_search_one(j) for j in jobs]
    merged: dict = {}
    complete = True
    for items, ok, _ in results:
        complete = complete and ok
        merged.update(items)
    return [merged[k] for k in sorted(merged)], complete


def enumerate_census(cfg: SearchConfig, workers: int | None = 1, node_limit: int | None = None) -> Census:
    tensors, complete = search_tensors(cfg, workers, node_limit)
    return Census(cfg, [describe(t) for t in tensors], complete)


ORACLE_MAX_N = 2
ORACLE_MAX_MULT = 3


def brute_force_oracle(cfg: SearchConfig) -> int:
    """Class count by scanning every raw tensor with no pruning at all."""
    if cfg.n > ORACLE_MAX_N or cfg.max_mult > ORACLE_MAX_MULT:
        raise ValueError(f"oracle refuses n > {ORACLE_MAX_N} or max_mult > {ORACLE_MAX_MULT}")
    n = cfg.n
    seen = set()
    for e in itertools.product((0, 1), repeat=n):
        for flat in itertools.product(range(cfg.max_mult + 1), repeat=n ** 3):
            d = [[list(flat[(g * n + h) * n:(g * n + h + 1) * n]) for h in range(n)] for g in range(n)]
            t = StructureTensor(n, d, e)
            if accepts(t, cfg.mode):
                seen.add(canonical_key(canonicalize(t)))
    return len(seen)
