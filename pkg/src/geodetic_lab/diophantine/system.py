"""The segment-length constraint system attached to a Moore base and a target diameter."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from geodetic_lab.errors import NotMooreBase
from geodetic_lab.homeomorph import Skeleton


@dataclass(frozen=True)
class GeodeticSystem:
    """Integer variables ``x_e >= 1`` (one per base edge) plus a common sum ``s``.

    * ``parity``: each tuple of edge indices must sum to an odd number
      (cycles of ``2*d0 + 1`` segments);
    * ``equal_sum``: each tuple must sum to ``s`` (cycles of ``2*d0 + 2``
      segments);
    * ``bounds``: inclusive range per variable; ``s_range`` for ``s``.
    """

    skeleton: Skeleton
    target_d: int
    bounds: tuple[tuple[int, int], ...]
    parity: tuple[tuple[int, ...], ...]
    equal_sum: tuple[tuple[int, ...], ...]
    s_range: tuple[int, int]

    @property
    def num_vars(self) -> int:
        return len(self.bounds)

    @property
    def upper(self) -> int:
        return max(hi for _, hi in self.bounds)

    @property
    def base_name(self) -> str:
        return self.skeleton.name or "custom"


def segment_upper_bound(d0: int, target_d: int) -> int:
    """Longest admissible segment.

    A segment extends to a ``d0``-segment path that must be a geodesic of
    length at most ``target_d``; the other ``d0 - 1`` segments take at least
    one edge each.
    """
    return target_d - d0 + 1


def build_system(skeleton: Skeleton, target_d: int, upper: int | None = None) -> GeodeticSystem:
    """Assemble the constraint system; ``upper`` overrides the per-segment bound."""
    if not skeleton.is_moore():
        raise NotMooreBase(f"{skeleton!r} is not a Moore base of diameter {skeleton.d0}")
    d0 = skeleton.d0
    if target_d < d0:
        raise ValueError(f"target diameter {target_d} is below the base diameter {d0}")
    hi = segment_upper_bound(d0, target_d) if upper is None else upper
    if hi < 1:
        raise ValueError("segment bound must be at least 1")
    m = skeleton.edge_count
    hexlen = 2 * d0 + 2
    return GeodeticSystem(
        skeleton=skeleton,
        target_d=target_d,
        bounds=((1, hi),) * m,
        parity=tuple(c.edges for c in skeleton.cycles(2 * d0 + 1)),
        equal_sum=tuple(c.edges for c in skeleton.cycles(hexlen)),
        s_range=(hexlen, hexlen * max(target_d, hi)),
    )


def membership_counts(system: GeodeticSystem) -> dict[str, list[int]]:
    par = [0] * system.num_vars
    eq = [0] * system.num_vars
    for c in system.parity:
        for e in c:
            par[e] += 1
    for c in system.equal_sum:
        for e in c:
            eq[e] += 1
    return {"parity": par, "equal_sum": eq}


def dump_system(system: GeodeticSystem) -> dict:
    """JSON-ready description of variables, bounds, constraints and per-variable membership."""
    base = system.skeleton.base
    return {
        "base": system.base_name,
        "d0": system.skeleton.d0,
        "target_d": system.target_d,
        "vars": [{"index": i, "edge": list(e)} for i, e in enumerate(base.edges)],
        "bounds": [list(b) for b in system.bounds],
        "s_range": list(system.s_range),
        "constraints": (
            [{"type": "parity", "edges": list(c)} for c in system.parity]
            + [{"type": "equal_sum", "edges": list(c)} for c in system.equal_sum]
        ),
        "membership_counts": membership_counts(system),
    }


def conjectured_count(d: int) -> int:
    """``C(d + 3, 5)``: conjectured number of geodetic Petersen homeomorphs of diameter ``d``."""
    if d < 2:
        raise ValueError("the count is stated for d >= 2")
    return comb(d + 3, 5)
