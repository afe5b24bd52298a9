"""Finite checks for the embedded-cycle conjecture and the strongly-regular geodetic hunt.

Cycle conjecture, as checked here: in a geodetic graph, among embedded cycles
whose diameter (host distances between cycle vertices) exceeds ``t``, every
one of minimal length contains ``t + 1`` consecutive edges whose endpoints are
exactly ``t + 1`` apart in the host.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from geodetic_lab.errors import BudgetExceeded, FormatError, GeodeticLabError, NotGeodetic
from geodetic_lab.formats import from_graph6, to_graph6
from geodetic_lab.graph import Graph
from geodetic_lab.homeomorph import simple_cycles
from geodetic_lab.paths import DistanceData, distance_data, require_connected
from geodetic_lab.predicates import classify, is_geodetic

log = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 2_000_000

READING_NOTES = {
    "cycle_diameter": "maximum host-graph distance between two vertices of the cycle",
    "minimality": "minimal length among cycles (the statement says 'paths') of diameter > t",
    "geodesic_subpath": "t+1 consecutive cycle edges whose endpoints are at host distance t+1",
}


@dataclass(frozen=True)
class CycleInstance:
    vertices: tuple[int, ...]
    length: int
    g_diameter: int


@dataclass
class ConjectureVerdict:
    """``status`` is ``pass``, ``fail`` or ``vacuous`` (no qualifying cycle up to ``max_len``)."""

    status: str
    t: int
    minimal_cycle_length: int | None = None
    cycles_checked: int = 0
    witnesses: list[dict] = field(default_factory=list)
    max_len: int = 0
    readings: dict = field(default_factory=lambda: dict(READING_NOTES))

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "t": self.t,
            "minimal_cycle_length": self.minimal_cycle_length,
            "cycles_checked": self.cycles_checked,
            "max_len": self.max_len,
            "witnesses": self.witnesses,
            "readings": self.readings,
        }


def _instance(verts: tuple[int, ...], dd: DistanceData) -> CycleInstance:
    sub = dd.dist[list(verts)][:, list(verts)]
    return CycleInstance(verts, len(verts), int(sub.max()))


def enumerate_cycles(g: Graph, max_len: int, dd: DistanceData | None = None,
                     cap: int = DEFAULT_CYCLE_CAP, min_len: int = 3) -> Iterator[CycleInstance]:
    """Simple cycles of length ``min_len..max_len`` in increasing length, once each up to rotation and reflection."""
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    dd = dd if dd is not None else distance_data(g)
    emitted = 0
    for length in range(max(3, min_len), min(max_len, g.n) + 1):
        for c in simple_cycles(g, length):
            emitted += 1
            if emitted > cap:
                raise BudgetExceeded(f"more than {cap} cycles up to length {max_len}")
            yield _instance(c.vertices, dd)


def arc_table(cycle: CycleInstance, dd: DistanceData, span: int) -> list[dict]:
    """For every start position, the host distance across ``span`` consecutive cycle edges."""
    n = cycle.length
    rows = []
    for i in range(n):
        a, b = cycle.vertices[i], cycle.vertices[(i + span) % n]
        rows.append({"start": a, "end": b, "arc_length": span, "host_distance": int(dd.dist[a, b])})
    return rows


def has_geodesic_arc(cycle: CycleInstance, dd: DistanceData, span: int) -> bool:
    if span > cycle.length:
        return False
    return any(row["host_distance"] == span for row in arc_table(cycle, dd, span))


def check_cycle_conjecture(g: Graph, t: int, max_len: int | None = None,
                           cap: int = DEFAULT_CYCLE_CAP) -> ConjectureVerdict:
    if t < 1:
        raise ValueError("t must be at least 1")
    dd = distance_data(g)
    require_connected(dd)
    verdict = is_geodetic(g, dd)
    if not verdict.geodetic:
        raise NotGeodetic(f"host has two geodesics between {verdict.witness}")
    max_len = g.n if max_len is None else max_len
    out = ConjectureVerdict("vacuous", t, max_len=max_len)
    if max_len < 3:
        return out
    host_diameter = dd.max_distance()
    if t >= host_diameter:
        # no vertex pair, on a cycle or not, is more than t apart
        return out
    best = None
    for c in enumerate_cycles(g, max_len, dd, cap):
        if best is not None and c.length > best:
            break
        if c.g_diameter <= t:
            continue
        best = c.length
        out.cycles_checked += 1
        if not has_geodesic_arc(c, dd, t + 1):
            out.witnesses.append({
                "cycle": list(c.vertices),
                "g_diameter": c.g_diameter,
                "arcs": arc_table(c, dd, t + 1),
            })
    if best is None:
        return out
    out.minimal_cycle_length = best
    out.status = "fail" if out.witnesses else "pass"
    return out


def counterexample_artifact(g: Graph, verdict: ConjectureVerdict) -> dict:
    """Machine-readable record of a failed check, for human review."""
    return {
        "host_graph6": to_graph6(g),
        "t": verdict.t,
        "minimal_cycle_length": verdict.minimal_cycle_length,
        "cycles": [{"vertices": w["cycle"], "arc_distances": w["arcs"]} for w in verdict.witnesses],
        "readings": verdict.readings,
    }


# -- strongly regular geodetic hunt -------------------------------------------

PREDICATES = ("geodetic", "srg", "moore", "block", "connected")


def parse_predicate(expr: str):
    """``geodetic&srg&!moore`` style conjunctions (``,`` also separates terms)."""
    terms = []
    for raw in expr.replace(",", "&").split("&"):
        tok = raw.strip().lower()
        if not tok:
            continue
        neg = tok.startswith("!") or tok.startswith("not-")
        name = tok.lstrip("!").removeprefix("not-")
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}; choose from {PREDICATES}")
        terms.append((name, neg))
    if not terms:
        raise ValueError("empty predicate expression")
    keys = {"srg": "strongly_regular"}

    def pred(record: dict) -> bool:
        return all(bool(record[keys.get(n, n)]) != neg for n, neg in terms)

    return pred


@dataclass
class FilterStats:
    scanned: int = 0
    malformed: int = 0
    geodetic: int = 0
    strongly_regular: int = 0
    both: int = 0
    both_non_moore: int = 0
    survivors: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "malformed": self.malformed,
            "geodetic": self.geodetic,
            "strongly_regular": self.strongly_regular,
            "both": self.both,
            "both_non_moore": self.both_non_moore,
            "survivors": list(self.survivors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _classify_record(item):
    ident, payload = item
    try:
        g = payload if isinstance(payload, Graph) else from_graph6(payload)
    except (FormatError, GeodeticLabError, ValueError) as exc:
        return ident, None, str(exc)
    return ident, (to_graph6(g), classify(g)), None


def classify_stream(records: Iterable, predicate: str = "geodetic&srg", workers: int = 1):
    """Classify every record and collect those matching ``predicate``.

    ``records`` yields graph6 strings, :class:`Graph` objects, or
    ``(identifier, graph-or-graph6)`` pairs. Returns ``(stats, survivors)``
    where survivors is a list of ``(identifier, graph6, classification)`` in
    input order. Malformed records are counted and skipped.
    """
    pred = parse_predicate(predicate)
    items = []
    for i, rec in enumerate(records):
        items.append(rec if isinstance(rec, tuple) else (str(i), rec))
    if workers > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_classify_record, items, chunksize=16))
    else:
        results = [_classify_record(it) for it in items]
    stats = FilterStats()
    survivors = []
    for ident, parsed, error in results:
        stats.scanned += 1
        if parsed is None:
            stats.malformed += 1
            log.warning("skipping malformed record %s: %s", ident, error)
            continue
        g6, rec = parsed
        stats.geodetic += rec["geodetic"]
        stats.strongly_regular += rec["strongly_regular"]
        if rec["geodetic"] and rec["strongly_regular"]:
            stats.both += 1
            if not rec["moore"]:
                stats.both_non_moore += 1
        if pred(rec):
            stats.survivors.append(ident)
            survivors.append((ident, g6, rec))
    return stats, survivors
