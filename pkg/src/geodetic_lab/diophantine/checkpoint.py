"""Resumable progress files for partitioned searches.

Layout (plain text)::

    # geodetic-lab checkpoint
    # base=<name> d=<target_d> bound=<upper> mode=<mode>
    <unit key>\t<solution>;<solution>;...

Each solution is a comma-separated length vector in canonical edge order. A
unit line is appended only after the unit has been searched completely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

MAGIC = "# geodetic-lab checkpoint"


@dataclass
class Checkpoint:
    path: Path
    header: str
    done: dict[str, list[tuple[int, ...]]] = field(default_factory=dict)

    @classmethod
    def open(cls, path, base: str, d: int, bound: int, mode: str) -> "Checkpoint":
        path = Path(path)
        header = f"# base={base} d={d} bound={bound} mode={mode}"
        cp = cls(path, header)
        if path.exists() and path.stat().st_size:
            lines = path.read_text().splitlines()
            if len(lines) < 2 or lines[0] != MAGIC or lines[1] != header:
                raise ValueError(f"{path} belongs to a different search: {lines[1:2]}")
            for line in lines[2:]:
                if not line.strip():
                    continue
                key, _, sols = line.partition("\t")
                cp.done[key] = [tuple(int(x) for x in s.split(",")) for s in sols.split(";") if s]
        else:
            path.write_text(f"{MAGIC}\n{header}\n")
        return cp

    def record(self, key: str, solutions) -> None:
        self.done[key] = [tuple(s) for s in solutions]
        body = ";".join(",".join(map(str, s)) for s in solutions)
        with self.path.open("a") as fh:
            fh.write(f"{key}\t{body}\n")
