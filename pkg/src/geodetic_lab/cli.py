"""``geodetic-lab`` command line.

Exit codes: 0 success, 1 a yes/no question answered "no", 2 usage or input
error, 3 budget exhausted. Reports go to stdout (or ``--out``), logs to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from geodetic_lab import formats
from geodetic_lab.conjectures import check_cycle_conjecture, classify_stream, counterexample_artifact
from geodetic_lab.diophantine.enumerate import MODES, count_at_most, enumerate_classes, exhaustive_oracle
from geodetic_lab.diophantine.runner import Budget
from geodetic_lab.diophantine.system import build_system, dump_system
from geodetic_lab.errors import BudgetExceeded, GeodeticLabError
from geodetic_lab.graph import Graph, by_name
from geodetic_lab.homeomorph import (
    LengthVector,
    Skeleton,
    check_all_conditions,
    format_lengths,
    lengths_from_json,
    lengths_to_json,
    parse_lengths,
    realize,
    skeletonize,
)
from geodetic_lab.paths import distance_data
from geodetic_lab.predicates import is_block, is_geodetic, moore_params, strongly_regular_params

log = logging.getLogger("geodetic_lab")

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    graph: str | None = None
    file: str | None = None
    graph6: str | None = None
    base: str | None = None
    d: int | None = None
    mode: str = "conditions"
    bound: int | None = None
    budget: Budget = field(default_factory=Budget)
    workers: int = 1
    out: str | None = None
    fmt: str = "json"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")


def _input_graph(cfg: CommandConfig) -> Graph:
    given = [x for x in (cfg.graph, cfg.file, cfg.graph6) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph, --file, --graph6")
    if cfg.graph is not None:
        try:
            return by_name(cfg.graph)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if cfg.file is not None:
        return formats.load_graph(cfg.file)
    return formats.from_graph6(cfg.graph6)


def _skeleton(name: str | None) -> Skeleton:
    if not name:
        raise UsageError("--base is required")
    try:
        return Skeleton.named(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _lengths(cfg: CommandConfig, skeleton: Skeleton) -> LengthVector:
    given = cfg.extra.get("lengths")
    if not given:
        raise UsageError("--lengths is required (comma list, 'u v length' file, or JSON file)")
    p = Path(given)
    if p.exists():
        text = p.read_text()
        if text.lstrip().startswith("{"):
            base, _, lv = lengths_from_json(text)
            if base != skeleton.base:
                raise UsageError("JSON length vector names a different base")
            return lv
        return parse_lengths(text, skeleton.base)[1]
    try:
        return LengthVector(tuple(int(x) for x in given.split(",")))
    except ValueError as exc:
        raise UsageError(f"bad --lengths value: {exc}") from None


def _text(doc) -> str:
    if isinstance(doc, dict):
        return "".join(f"{k}: {json.dumps(v, sort_keys=True)}\n" for k, v in sorted(doc.items()))
    return str(doc)


def _graph_out(g: Graph, fmt: str) -> str:
    return formats.format_edge_list(g) if fmt == "edgelist" else formats.to_graph6(g) + "\n"


def cmd_check(cfg: CommandConfig):
    g = _input_graph(cfg)
    wanted = [k for k in ("geodetic", "srg", "moore", "block", "diameter") if cfg.extra.get(k)]
    asked = bool(wanted)
    wanted = wanted or ["geodetic", "srg", "moore", "block", "diameter"]
    dd = distance_data(g)
    report: dict = {"n": g.n, "edges": g.edge_count, "connected": dd.connected}
    negative = False
    for key in wanted:
        if key == "block":
            report["block"] = is_block(g)
            negative |= not report["block"]
        elif key == "srg":
            p = strongly_regular_params(g)
            report["srg"] = list(p.as_tuple()) if p else None
            negative |= p is None
        elif not dd.connected:
            report[key] = None
            negative = True
        elif key == "geodetic":
            v = is_geodetic(g, dd)
            report["geodetic"] = v.geodetic
            report["witness"] = list(v.witness) if v.witness else None
            negative |= not v.geodetic
        elif key == "moore":
            p = moore_params(g, dd)
            report["moore"] = [p.k, p.d] if p else None
            negative |= p is None
        elif key == "diameter":
            report["diameter"] = dd.max_distance()
    return report, EXIT_NO if asked and negative else EXIT_OK


def cmd_gen(cfg: CommandConfig):
    return _graph_out(_input_graph(cfg), cfg.extra.get("graph_format", "graph6")), EXIT_OK


def cmd_realize(cfg: CommandConfig):
    sk = _skeleton(cfg.base)
    return _graph_out(realize(sk, _lengths(cfg, sk)), cfg.extra.get("graph_format", "graph6")), EXIT_OK


def cmd_skeletonize(cfg: CommandConfig):
    base, lv = skeletonize(_input_graph(cfg))
    if cfg.fmt == "text":
        return format_lengths(base, lv), EXIT_OK
    return json.loads(lengths_to_json(None, base, lv)), EXIT_OK


def cmd_conditions(cfg: CommandConfig):
    sk = _skeleton(cfg.base)
    lv = _lengths(cfg, sk)
    report = check_all_conditions(sk, lv).to_dict()
    report.update(base=sk.name, d0=sk.d0, lengths=list(lv.lengths))
    return report, EXIT_OK


def cmd_enumerate(cfg: CommandConfig):
    sk = _skeleton(cfg.base)
    if cfg.d is None:
        raise UsageError("--d is required")
    if cfg.extra.get("sound"):
        report = exhaustive_oracle(sk, cfg.d, sound=True, workers=cfg.workers, budget=cfg.budget,
                                   checkpoint=cfg.extra.get("checkpoint"))
    else:
        report = enumerate_classes(sk, cfg.d, cfg.mode, cfg.workers, cfg.budget, cfg.extra.get("checkpoint"),
                                   cfg.bound, timing=cfg.extra.get("timing", False),
                                   max_witnesses=cfg.extra.get("max_witnesses"))
    doc = report.to_dict()
    if cfg.extra.get("at_most"):
        counts = count_at_most(sk, cfg.d, mode=cfg.mode, workers=cfg.workers, budget=cfg.budget)
        doc["at_most"] = {"per_diameter": {str(k): v for k, v in counts.items()},
                          "total": sum(counts.values())}
    if report.formula_match is False:
        log.warning("raw count %d differs from C(d+3,5) = %d; full canonical witness list is in the report",
                    report.raw_solution_count, report.formula_value)
    return doc, EXIT_OK


def cmd_system(cfg: CommandConfig):
    sk = _skeleton(cfg.base)
    if cfg.d is None:
        raise UsageError("--d is required")
    return dump_system(build_system(sk, cfg.d, cfg.bound)), EXIT_OK


def cmd_conjecture_cycle(cfg: CommandConfig):
    g = _input_graph(cfg)
    dd = distance_data(g)
    if not dd.connected:
        raise UsageError("host graph must be connected")
    t_values = [cfg.extra["t"]] if cfg.extra.get("t") else list(range(1, max(dd.max_distance(), 1) + 1))
    verdicts = [check_cycle_conjecture(g, t, cfg.extra.get("max_len")) for t in t_values]
    failed = [v for v in verdicts if v.status == "fail"]
    artifact_path = cfg.extra.get("artifact")
    if failed and artifact_path:
        Path(artifact_path).write_text(
            json.dumps([counterexample_artifact(g, v) for v in failed], indent=2, sort_keys=True) + "\n"
        )
    return {"graph6": formats.to_graph6(g), "verdicts": [v.to_dict() for v in verdicts]}, (
        EXIT_NO if failed else EXIT_OK
    )


def _stream_records(paths):
    for p in paths:
        path = Path(p)
        if path.suffix in (".g6", ".graph6") or path.name == "-":
            lines = sys.stdin if path.name == "-" else path.read_text().splitlines()
            for i, line in enumerate(formats.read_graph6_lines(lines)):
                yield (f"{path.name}:{i}", line)
        else:
            try:
                yield (path.name, formats.load_graph(path))
            except GeodeticLabError as exc:
                yield (path.name, f"!malformed {exc}")


def cmd_filter(cfg: CommandConfig):
    paths = cfg.extra.get("inputs") or []
    if not paths:
        raise UsageError("filter needs at least one --input")
    for p in paths:
        if p != "-" and not Path(p).exists():
            raise UsageError(f"cannot read {p}")
    stats, survivors = classify_stream(_stream_records(paths), cfg.extra.get("predicate", "geodetic&srg"),
                                       cfg.workers)
    surv_path = cfg.extra.get("survivors")
    if surv_path:
        Path(surv_path).write_text("".join(g6 + "\n" for _, g6, _ in survivors))
        Path(str(surv_path) + ".json").write_text(json.dumps(
            [{"id": i, "graph6": g6, "classification": rec} for i, g6, rec in survivors],
            indent=2, sort_keys=True) + "\n")
    return stats.to_dict(), EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "gen": cmd_gen,
    "realize": cmd_realize,
    "skeletonize": cmd_skeletonize,
    "conditions": cmd_conditions,
    "enumerate": cmd_enumerate,
    "system": cmd_system,
    "conjecture-cycle": cmd_conjecture_cycle,
    "filter": cmd_filter,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geodetic-lab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--budget-ms", type=int, default=None,
                        help="wall-clock budget (default: $GEODETIC_LAB_BUDGET_MS)")
    common.add_argument("--max-nodes", type=int, default=None, help="search-node cap per work unit")
    common.add_argument("-v", "--verbose", action="store_true")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--graph", help="built-in: c5, petersen, hoffman-singleton, k<n>, cycle<n>, path<n>")
    graph_in.add_argument("--file", help="edge-list file, or .g6 file with one graph")
    graph_in.add_argument("--graph6", help="graph6 string")

    base_in = argparse.ArgumentParser(add_help=False)
    base_in.add_argument("--base", required=True, help="Moore base: petersen, k4, hoffman-singleton, ...")

    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", parents=[common, graph_in], help="graph predicates")
    for flag in ("geodetic", "srg", "moore", "block", "diameter"):
        p.add_argument(f"--{flag}", action="store_true")

    p = sub.add_parser("gen", parents=[common, graph_in], help="emit a graph")
    p.add_argument("--graph-format", choices=("graph6", "edgelist"), default="graph6")

    p = sub.add_parser("realize", parents=[common, base_in], help="subdivide a base by a length vector")
    p.add_argument("--lengths", required=True)
    p.add_argument("--graph-format", choices=("graph6", "edgelist"), default="graph6")

    sub.add_parser("skeletonize", parents=[common, graph_in], help="smooth degree-2 vertices")

    p = sub.add_parser("conditions", parents=[common, base_in], help="segment conditions for one vector")
    p.add_argument("--lengths", required=True)

    p = sub.add_parser("enumerate", parents=[common, base_in], help="count geodetic homeomorphs")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="conditions")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--sound", action="store_true", help="exhaustive with segment bound 2d+1")
    p.add_argument("--checkpoint")
    p.add_argument("--timing", action="store_true", help="record elapsed seconds (breaks byte-identity)")
    p.add_argument("--max-witnesses", type=int, default=None)
    p.add_argument("--at-most", action="store_true", help="also report counts for every smaller diameter")

    p = sub.add_parser("system", parents=[common, base_in], help="dump the constraint system")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("conjecture-cycle", parents=[common, graph_in], help="embedded-cycle conjecture")
    p.add_argument("--t", type=int, default=None, help="default: every t from 1 to the diameter")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--artifact", help="where to write a counterexample record")

    p = sub.add_parser("filter", parents=[common], help="classify a graph corpus")
    p.add_argument("--input", dest="inputs", action="append", help="graph6 lines (.g6/.txt/-) or edge-list file")
    p.add_argument("--predicate", default="geodetic&srg", help="e.g. geodetic&srg&!moore")
    p.add_argument("--survivors", help="graph6 output path; a .json sidecar is written next to it")
    return parser


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    base_fields = {"subcommand", "graph", "file", "graph6", "base", "d", "mode", "bound", "workers", "out",
                   "fmt"}
    values = vars(ns)
    budget = Budget.from_env(values.get("max_nodes"))
    if values.get("budget_ms") is not None:
        budget = Budget(values["budget_ms"], values.get("max_nodes"))
    extra = {k: v for k, v in values.items()
             if k not in base_fields | {"budget_ms", "max_nodes", "verbose"}}
    return CommandConfig(budget=budget, extra=extra, **{k: values[k] for k in base_fields if k in values})


def run(cfg: CommandConfig) -> tuple[int, str]:
    doc, status = COMMANDS[cfg.subcommand](cfg)
    if isinstance(doc, str):
        text = doc
    elif cfg.fmt == "text":
        text = _text(doc)
    else:
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return status, text


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(ns)
        status, text = run(cfg)
    except UsageError as exc:
        print(f"geodetic-lab {ns.subcommand}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"geodetic-lab {ns.subcommand}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GeodeticLabError, ValueError, OSError) as exc:
        print(f"geodetic-lab {ns.subcommand}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
