"""Certify every graph file in a directory and tabulate the results.

Each file is handled on its own and its certificate is written next to it as
``<stem>.<claim>.cert.json``.  Rows come back sorted by file name whatever the
number of worker processes.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .coxeter import class_profile
from .engine import CLAIM_FUNCTIONS, DEFAULT, RuleConfig
from .graph import GraphError, parse_graph, parse_json_graph

GRAPH_SUFFIXES = (".artin", ".json")


@dataclass(frozen=True)
class Row:
    name: str
    vertices: int | None
    flags: tuple[str, ...]
    verdict: str
    rule: str
    error: str = ""


def graph_files(directory: Path) -> list[Path]:
    return sorted((p for p in directory.iterdir()
                   if p.is_file() and p.suffix in GRAPH_SUFFIXES and not p.name.endswith(".cert.json")),
                  key=lambda p: p.name)


def certificate_path(path: Path, claim: str) -> Path:
    return path.with_name(f"{path.stem}.{claim}.cert.json")


def _certify_file(path: Path, claim: str, config: RuleConfig, write: bool) -> Row:
    try:
        text = path.read_text()
        G = parse_json_graph(text) if path.suffix == ".json" else parse_graph(text)
        if not len(G):
            raise GraphError("empty graph")
        verdict, cert = CLAIM_FUNCTIONS[claim](G, config)
    except (OSError, UnicodeDecodeError, GraphError) as exc:
        return Row(path.name, None, (), "error", "-", str(exc))
    if write:
        certificate_path(path, claim).write_text(cert.to_json())
    return Row(path.name, len(G), tuple(class_profile(G).flags()), verdict.value, cert.rule)


def batch_certify(directory: str | Path, claim: str = "ah", config: RuleConfig = DEFAULT,
                  jobs: int = 1, write_certificates: bool = True) -> list[Row]:
    directory = Path(directory)
    if claim not in CLAIM_FUNCTIONS:
        raise ValueError(f"unknown claim {claim!r}")
    files = graph_files(directory)
    args = [(p, claim, config, write_certificates) for p in files]
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_certify_file, *zip(*args)))
    else:
        rows = [_certify_file(*a) for a in args]
    return rows


def rows_to_json(rows: list[Row]) -> str:
    return json.dumps([{**asdict(r), "flags": list(r.flags)} for r in rows], indent=2) + "\n"


def rows_to_text(rows: list[Row]) -> str:
    header = ("file", "|V|", "verdict", "rule", "flags")
    body = [(r.name, "-" if r.vertices is None else str(r.vertices), r.verdict, r.rule,
             r.error if r.error else " ".join(r.flags) or "-") for r in rows]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header) - 1)]
    out = []
    for line in [header, *body]:
        cells = [c.ljust(w) for c, w in zip(line, widths)] + [line[-1]]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"
