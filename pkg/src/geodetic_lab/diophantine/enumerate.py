"""Counting geodetic homeomorphs of a Moore base, with orbit classes and the C(d+3, 5) comparison."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from geodetic_lab.automorphisms import AutomorphismGroup, automorphisms, canonical_lengths, orbit_size
from geodetic_lab.diophantine.oracle import scan_vectors
from geodetic_lab.diophantine.runner import Budget
from geodetic_lab.diophantine.solver import solve_conditions
from geodetic_lab.diophantine.system import build_system, conjectured_count, segment_upper_bound
from geodetic_lab.homeomorph import LengthVector, Skeleton, realize
from geodetic_lab.paths import distance_data
from geodetic_lab.predicates import is_geodetic, moore_params

MODES = ("conditions", "exhaustive")


@dataclass
class EnumerationReport:
    """Outcome of one enumeration run.

    ``raw_solution_count`` counts length vectors on the labelled base;
    ``class_count`` counts them up to base automorphisms. ``formula_value`` is
    only filled for the Petersen base and is compared with the raw count.
    ``elapsed`` stays ``None`` unless timing was requested, which keeps
    serialized reports byte-identical between runs.
    """

    base: str
    target_d: int
    mode: str
    bound: int
    raw_solution_count: int
    class_count: int
    formula_value: int | None
    formula_match: bool | None
    witnesses: list[list[int]]
    orbit_sizes: list[int]
    all_realizations_geodetic: bool
    candidates: int | None = None
    caveat: str | None = None
    elapsed: float | None = None
    witnesses_truncated: bool = False
    raw_solutions: list[list[int]] = field(default_factory=list, repr=False)

    def to_dict(self, include_raw: bool = False) -> dict:
        d = asdict(self)
        if not include_raw:
            d.pop("raw_solutions")
        return d

    def to_json(self, include_raw: bool = False) -> str:
        return json.dumps(self.to_dict(include_raw), indent=2, sort_keys=True) + "\n"


def is_petersen_base(skeleton: Skeleton) -> bool:
    params = moore_params(skeleton.base)
    return params is not None and (params.k, params.d) == (3, 2)


def verify_realization(skeleton: Skeleton, lv: LengthVector, target_d: int) -> bool:
    g = realize(skeleton, lv)
    dd = distance_data(g)
    return is_geodetic(g, dd).geodetic and dd.max_distance() == target_d


def summarize(skeleton: Skeleton, target_d: int, mode: str, bound: int, solutions,
              group: AutomorphismGroup | None = None, max_witnesses: int | None = None) -> EnumerationReport:
    """Canonicalize ``solutions`` under the base automorphisms and build the report."""
    group = group if group is not None else automorphisms(skeleton.base)
    classes: dict[tuple[int, ...], int] = {}
    for sol in solutions:
        key = canonical_lengths(skeleton.base, sol, group).lengths
        classes[key] = classes.get(key, 0) + 1
    ordered = sorted(classes)
    orbits = [orbit_size(c, group) for c in ordered]
    raw = len(solutions)
    if sum(orbits) != raw:
        raise AssertionError(f"orbit sizes sum to {sum(orbits)} but {raw} solutions were found")
    formula = None
    if is_petersen_base(skeleton) and target_d >= 2:
        formula = conjectured_count(target_d)
    shown = ordered if max_witnesses is None else ordered[:max_witnesses]
    return EnumerationReport(
        base=skeleton.name or "custom",
        target_d=target_d,
        mode=mode,
        bound=bound,
        raw_solution_count=raw,
        class_count=len(ordered),
        formula_value=formula,
        formula_match=None if formula is None else raw == formula,
        witnesses=[list(c) for c in shown],
        orbit_sizes=orbits[: len(shown)],
        all_realizations_geodetic=all(verify_realization(skeleton, LengthVector(tuple(s)), target_d)
                                      for s in solutions),
        witnesses_truncated=len(shown) < len(ordered),
        raw_solutions=[list(s) for s in solutions],
    )


def exhaustive_oracle(skeleton: Skeleton, target_d: int, bound: int | None = None, sound: bool = False,
                      workers: int = 1, budget: Budget | None = None, checkpoint=None,
                      max_candidates: int | None = None, max_witnesses: int | None = None,
                      group: AutomorphismGroup | None = None) -> EnumerationReport:
    """Realize and test every vector in ``[1, bound]^E``.

    The default bound is the longest segment allowed when every ``d0``-segment
    path is a geodesic; ``sound=True`` raises it to ``2*target_d + 1``.
    """
    if bound is None:
        bound = 2 * target_d + 1 if sound else segment_upper_bound(skeleton.d0, target_d)
    kwargs = {} if max_candidates is None else {"max_candidates": max_candidates}
    sols = scan_vectors(skeleton.base, target_d, bound, workers, budget, checkpoint,
                        base_name=skeleton.name or "custom", **kwargs)
    report = summarize(skeleton, target_d, "exhaustive", bound, [LengthVector(s) for s in sols],
                       group, max_witnesses)
    report.candidates = bound ** skeleton.edge_count
    if sound:
        report.caveat = f"sound mode: every segment length up to {bound} examined"
    elif bound < 2 * target_d + 1:
        report.caveat = (
            f"segments longer than {bound} were not examined; completeness relies on every "
            f"{skeleton.d0}-segment path being a geodesic in any geodetic homeomorph"
        )
    return report


def enumerate_classes(skeleton: Skeleton, target_d: int, mode: str = "conditions", workers: int = 1,
                      budget: Budget | None = None, checkpoint=None, bound: int | None = None,
                      timing: bool = False, max_witnesses: int | None = None,
                      group: AutomorphismGroup | None = None) -> EnumerationReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    start = time.perf_counter()
    if mode == "conditions":
        system = build_system(skeleton, target_d, bound)
        sols = solve_conditions(system, workers, budget, checkpoint)
        report = summarize(skeleton, target_d, mode, system.upper, sols, group, max_witnesses)
    else:
        report = exhaustive_oracle(skeleton, target_d, bound, workers=workers, budget=budget,
                                   checkpoint=checkpoint, max_witnesses=max_witnesses, group=group)
    if timing:
        report.elapsed = round(time.perf_counter() - start, 3)
    return report


def count_at_most(skeleton: Skeleton, target_d: int, **kwargs) -> dict[int, int]:
    """Raw counts for every diameter from ``d0`` to ``target_d`` (summing gives the at-most count)."""
    return {d: enumerate_classes(skeleton, d, **kwargs).raw_solution_count
            for d in range(skeleton.d0, target_d + 1)}
