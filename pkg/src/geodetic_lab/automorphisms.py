"""Automorphism groups of small base graphs and canonical length vectors."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from geodetic_lab.errors import TooLarge
from geodetic_lab.graph import Graph
from geodetic_lab.paths import distance_data

MAX_VERTICES = 60
MAX_ORDER = 5_000_000


@dataclass(frozen=True)
class AutomorphismGroup:
    """All vertex automorphisms (``perms[g][v]`` is the image of ``v``) and the induced edge action."""

    perms: np.ndarray
    edge_action: np.ndarray

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    def __len__(self):
        return self.order


def _search(g: Graph, limit: int) -> list[tuple[int, ...]]:
    dist = distance_data(g).dist
    # distance profile refines degree: automorphisms preserve every distance
    profile = [tuple(np.bincount(np.where(row < 0, g.n, row), minlength=g.n + 1)) for row in dist]
    order: list[int] = []
    seen = set()
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        while frontier:
            order.extend(frontier)
            nxt = []
            for u in frontier:
                for v in g.adjacency[u]:
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
    classes: dict[tuple, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(profile[v], []).append(v)
    candidates = [classes[profile[v]] for v in order]
    dist_rows = [list(map(int, row)) for row in dist]

    found: list[tuple[int, ...]] = []
    image = [-1] * g.n
    used = [False] * g.n

    def assign(i):
        if i == len(order):
            found.append(tuple(image))
            if len(found) > limit:
                raise TooLarge(f"automorphism group exceeds {limit} elements")
            return
        v = order[i]
        dv = dist_rows[v]
        for w in candidates[i]:
            if used[w]:
                continue
            dw = dist_rows[w]
            if all(dv[order[j]] == dw[image[order[j]]] for j in range(i)):
                image[v] = w
                used[w] = True
                assign(i + 1)
                used[w] = False
                image[v] = -1

    assign(0)
    found.sort()
    return found


def automorphisms(base: Graph, limit: int = MAX_ORDER) -> AutomorphismGroup:
    """Complete automorphism group by backtracking with distance-profile pruning.

    Raises :class:`TooLarge` for bases above ``MAX_VERTICES`` vertices or
    groups above ``limit`` elements.
    """
    if base.n > MAX_VERTICES:
        raise TooLarge(f"base has {base.n} vertices; limit is {MAX_VERTICES}")
    perms = np.array(_search(base, limit), dtype=np.int64).reshape(-1, base.n)
    eidx = base.edge_index
    edge_action = np.array(
        [[eidx[(int(p[u]), int(p[v]))] for u, v in base.edges] for p in perms],
        dtype=np.int64,
    ).reshape(len(perms), base.edge_count)
    group = AutomorphismGroup(perms, edge_action)
    _verify(base, group)
    return group


def _verify(base: Graph, group: AutomorphismGroup) -> None:
    keys = {tuple(p) for p in group.perms.tolist()}
    if tuple(range(base.n)) not in keys:
        raise AssertionError("automorphism group lacks the identity")
    for p in group.perms[: min(len(group.perms), 200)]:
        for u, v in base.edges:
            if not base.has_edge(int(p[u]), int(p[v])):
                raise AssertionError("permutation does not preserve adjacency")
    rng = random.Random(0)
    m = group.order
    pairs = (
        [(a, b) for a in range(m) for b in range(m)]
        if m <= 150
        else [(rng.randrange(m), rng.randrange(m)) for _ in range(5000)]
    )
    for a, b in pairs:
        composed = tuple(group.perms[a][group.perms[b]].tolist())
        if composed not in keys:
            raise AssertionError("automorphism set not closed under composition")


def _images(lv, group: AutomorphismGroup) -> np.ndarray:
    """Row ``g`` is ``lv`` transported by group element ``g``."""
    vec = np.asarray(tuple(lv), dtype=np.int64)
    out = np.empty(group.edge_action.shape, dtype=np.int64)
    rows = np.arange(group.order)[:, None]
    out[rows, group.edge_action] = vec[None, :]
    return out


def _lexmin_row(arr: np.ndarray) -> np.ndarray:
    cand = np.arange(arr.shape[0])
    for col in range(arr.shape[1]):
        column = arr[cand, col]
        cand = cand[column == column.min()]
        if len(cand) == 1:
            break
    return arr[cand[0]]


def canonical_lengths(base: Graph, lv, group: AutomorphismGroup):
    """Lexicographically smallest image of ``lv`` under the group's edge action."""
    from geodetic_lab.homeomorph import LengthVector

    if len(tuple(lv)) != base.edge_count:
        from geodetic_lab.errors import DomainMismatch

        raise DomainMismatch("length vector does not match base edges")
    return LengthVector(tuple(int(x) for x in _lexmin_row(_images(lv, group))))


def orbit_size(lv, group: AutomorphismGroup) -> int:
    imgs = _images(lv, group)
    stab = int((imgs == np.asarray(tuple(lv))[None, :]).all(axis=1).sum())
    return group.order // stab
