"""Constraint-propagating enumeration of the natural solutions of a geodetic system.

The common sum ``s`` of the equal-sum cycles is fixed in an outer loop, which
turns every equal-sum constraint into a fixed-sum one. Variables are visited
hexagon by hexagon, always picking next the constraint with the fewest free
variables, so constraints close early: the last free variable of a fixed-sum
constraint is forced, the last free variable of a parity constraint has its
parity forced, and partial sums are kept within reach of ``s``.
"""

from __future__ import annotations

import time

from geodetic_lab.errors import BudgetExceeded
from geodetic_lab.diophantine.checkpoint import Checkpoint
from geodetic_lab.diophantine.runner import Budget, run_units
from geodetic_lab.diophantine.system import GeodeticSystem
from geodetic_lab.homeomorph import LengthVector, check_c1, realize
from geodetic_lab.paths import distance_data
from geodetic_lab.predicates import is_geodetic

PREFIX_DEPTH = 3


def variable_order(system: GeodeticSystem) -> list[int]:
    m = system.num_vars
    placed = [False] * m
    order: list[int] = []
    for family in (system.equal_sum, system.parity):
        free = [len(c) for c in family]
        containing = [[] for _ in range(m)]
        for ci, c in enumerate(family):
            for e in c:
                containing[e].append(ci)
        for ci, c in enumerate(family):
            free[ci] = sum(1 for e in c if not placed[e])
        while True:
            best = min(((f, ci) for ci, f in enumerate(free) if f > 0), default=None)
            if best is None:
                break
            for e in sorted(family[best[1]]):
                if not placed[e]:
                    placed[e] = True
                    order.append(e)
                    for cj in containing[e]:
                        free[cj] -= 1
    order.extend(e for e in range(m) if not placed[e])
    return order


class Search:
    """Depth-first search state for one system; reusable across values of ``s``."""

    def __init__(self, system: GeodeticSystem):
        self.system = system
        m = system.num_vars
        self.m = m
        self.order = variable_order(system)
        pos = [0] * m
        for i, e in enumerate(self.order):
            pos[e] = i
        self.lo = min(lo for lo, _ in system.bounds)
        self.hi = max(hi for _, hi in system.bounds)
        self.eq = system.equal_sum
        self.par = system.parity
        self.eq_close = [[] for _ in range(m)]
        self.par_close = [[] for _ in range(m)]
        self.var_eq = [[] for _ in range(m)]
        self.var_par = [[] for _ in range(m)]
        for ci, c in enumerate(self.eq):
            self.eq_close[max(pos[e] for e in c)].append(ci)
            for e in c:
                self.var_eq[e].append(ci)
        for ci, c in enumerate(self.par):
            self.par_close[max(pos[e] for e in c)].append(ci)
            for e in c:
                self.var_par[e].append(ci)
        self.nodes = 0

    def _reset(self):
        self.values = [0] * self.m
        self.eq_sum = [0] * len(self.eq)
        self.eq_free = [len(c) for c in self.eq]
        self.par_sum = [0] * len(self.par)

    def _assign(self, e: int, v: int, s: int | None) -> bool:
        self.values[e] = v
        ok = True
        for c in self.var_eq[e]:
            self.eq_sum[c] += v
            self.eq_free[c] -= 1
            if s is not None:
                p, r = self.eq_sum[c], self.eq_free[c]
                if p + r * self.lo > s or p + r * self.hi < s:
                    ok = False
        for c in self.var_par[e]:
            self.par_sum[c] += v
        return ok

    def _unassign(self, e: int, v: int) -> None:
        self.values[e] = 0
        for c in self.var_eq[e]:
            self.eq_sum[c] -= v
            self.eq_free[c] += 1
        for c in self.var_par[e]:
            self.par_sum[c] -= v

    def _candidates(self, i: int, s: int | None):
        e = self.order[i]
        lo, hi = self.system.bounds[e]
        forced = None
        if s is not None:
            for c in self.eq_close[i]:
                v = s - self.eq_sum[c]
                if forced is None:
                    forced = v
                elif forced != v:
                    return ()
        parity = None
        for c in self.par_close[i]:
            need = (1 - self.par_sum[c]) % 2
            if parity is None:
                parity = need
            elif parity != need:
                return ()
        if forced is not None:
            vals = (forced,) if lo <= forced <= hi else ()
        else:
            vals = range(lo, hi + 1)
        if parity is not None:
            vals = tuple(v for v in vals if v % 2 == parity)
        return vals

    def _dfs(self, i: int, stop: int, s: int | None, deadline, max_nodes):
        self.nodes += 1
        if self.nodes & 0xFFF == 0:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("time budget exhausted inside a search unit")
        if max_nodes is not None and self.nodes > max_nodes:
            raise BudgetExceeded(f"node budget {max_nodes} exhausted inside a search unit")
        if i == stop:
            yield tuple(self.values[e] for e in self.order[:stop]) if stop < self.m else tuple(self.values)
            return
        e = self.order[i]
        for v in self._candidates(i, s):
            if self._assign(e, v, s):
                yield from self._dfs(i + 1, stop, s, deadline, max_nodes)
            self._unassign(e, v)

    def prefixes(self, s: int | None, depth: int):
        self._reset()
        yield from self._dfs(0, depth, s, None, None)

    def complete(self, s: int | None, prefix: tuple[int, ...], deadline=None, max_nodes=None):
        """All full assignments extending ``prefix`` (values for the first variables in search order)."""
        self._reset()
        self.nodes = 0
        for i, v in enumerate(prefix):
            if v not in self._candidates(i, s) or not self._assign(self.order[i], v, s):
                return
        yield from self._dfs(len(prefix), self.m, s, deadline, max_nodes)


def sum_values(system: GeodeticSystem) -> list[int | None]:
    if not system.equal_sum:
        return [None]
    lo, hi = system.s_range
    return list(range(lo, hi + 1))


def work_units(system: GeodeticSystem, depth: int = PREFIX_DEPTH) -> list[tuple[str, tuple]]:
    """Partition of the search by ``(s, first variables)``; independent of worker count."""
    search = Search(system)
    depth = min(depth, system.num_vars)
    units = []
    for s in sum_values(system):
        for prefix in search.prefixes(s, depth):
            key = f"{'-' if s is None else s}|{','.join(map(str, prefix))}"
            units.append((key, (s, prefix)))
    return units


def passes_gates(system: GeodeticSystem, lengths: tuple[int, ...]) -> bool:
    """Realization-time checks: segment paths are shortest, diameter is the target, graph is geodetic."""
    lv = LengthVector(lengths)
    g = realize(system.skeleton, lv)
    dd = distance_data(g)
    if dd.max_distance() != system.target_d:
        return False
    if not check_c1(system.skeleton, lv, g).passed:
        return False
    return is_geodetic(g, dd).geodetic


def _solve_unit(payload, s, prefix, deadline, max_nodes):
    system, gated = payload
    search = Search(system)
    out = []
    for sol in search.complete(s, prefix, deadline, max_nodes):
        if not gated or passes_gates(system, sol):
            out.append(sol)
    return out


def _run(system, gated, workers, budget, checkpoint, mode):
    cp = None
    if checkpoint is not None:
        cp = Checkpoint.open(checkpoint, system.base_name, system.target_d, system.upper, mode)
    sols = run_units(_solve_unit, (system, gated), work_units(system), workers, cp, budget)
    return [LengthVector(s) for s in sorted(sols)]


def solve_constraints(system: GeodeticSystem, workers: int = 1, budget: Budget | None = None,
                      checkpoint=None) -> list[LengthVector]:
    """Every in-bounds vector satisfying the parity and equal-sum constraints (no realization gates)."""
    return _run(system, False, workers, budget, checkpoint, "constraints")


def solve_conditions(system: GeodeticSystem, workers: int = 1, budget: Budget | None = None,
                     checkpoint=None) -> list[LengthVector]:
    """Constraint solutions whose realization also passes :func:`passes_gates`, sorted."""
    return _run(system, True, workers, budget, checkpoint, "conditions")


def iter_solutions(system: GeodeticSystem, gated: bool = True):
    """Lazy single-process stream of solutions, in search order."""
    search = Search(system)
    for s in sum_values(system):
        for sol in search.complete(s, ()):
            if not gated or passes_gates(system, sol):
                yield LengthVector(sol)

