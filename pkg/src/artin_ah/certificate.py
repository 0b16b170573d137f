"""Claims, verdicts and certificate trees, with deterministic JSON serialization."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any

from .graph import PresentationGraph, graph_to_dict
from .structure import Splitting

SCHEMA_VERSION = "artin-ah-certificate/1"

CLAIM_KINDS = ("AH", "WMConjecture", "WMSubgroup", "IC", "EdgeIntersectionsParabolic", "Check")


class Verdict(enum.Enum):
    PROVEN = "Proven"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Citation:
    anchor: str
    statement: str

    def to_dict(self) -> dict:
        return {"anchor": self.anchor, "statement": self.statement}


@dataclass(frozen=True)
class Claim:
    kind: str
    graph: PresentationGraph
    subset: frozenset[str] | None = None
    splitting: Splitting | None = None
    statement: str = ""

    def __post_init__(self):
        if self.kind not in CLAIM_KINDS:
            raise ValueError(f"unknown claim kind {self.kind!r}")
        if self.subset is not None and not self.subset <= self.graph.vertex_set:
            raise ValueError("claim subset is not inside the graph")
        if self.splitting is not None:
            self.splitting.validate(self.graph)

    def describe(self) -> str:
        if self.kind == "Check":
            return self.statement
        args = ["G=" + ",".join(self.graph.vertices)]
        if self.subset is not None:
            args.append("S=" + ",".join(sorted(self.subset)))
        if self.splitting is not None:
            args.append("Omega=" + ",".join(sorted(self.splitting.omega)))
        return f"{self.kind}({'; '.join(args)})"

    def to_dict(self) -> dict:
        doc: dict[str, Any] = {"kind": self.kind, "graph": graph_to_dict(self.graph)}
        if self.subset is not None:
            doc["subset"] = sorted(self.subset)
        if self.splitting is not None:
            doc["splitting"] = self.splitting.to_dict()
        if self.statement:
            doc["statement"] = self.statement
        return doc


@dataclass(frozen=True, eq=False)
class Certificate:
    """One node of a certificate tree.

    Nodes without a citation are computation nodes: graph checks this package
    performed itself.
    """

    claim: Claim
    verdict: Verdict
    rule: str
    citation: Citation | None = None
    premises: tuple[Certificate, ...] = ()
    witnesses: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def computation(self) -> bool:
        return self.citation is None

    def walk(self):
        yield self
        for p in self.premises:
            yield from p.walk()

    def depth(self) -> int:
        return 1 + max((p.depth() for p in self.premises), default=0)

    def to_dict(self, root: bool = True) -> dict:
        doc: dict[str, Any] = {}
        if root:
            doc["schema_version"] = SCHEMA_VERSION
        doc["claim"] = self.claim.to_dict()
        doc["verdict"] = self.verdict.value
        doc["rule"] = self.rule
        doc["computation"] = self.computation
        doc["citation"] = self.citation.to_dict() if self.citation else None
        doc["witnesses"] = self.witnesses
        doc["notes"] = list(self.notes)
        doc["premises"] = [p.to_dict(root=False) for p in self.premises]
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def render(self, indent: int = 0) -> str:
        """Indented human-readable tree."""
        pad = "  " * indent
        head = f"{pad}[{self.verdict}] {self.claim.describe()}  <- {self.rule}"
        lines = [head]
        if self.citation:
            lines.append(f"{pad}    cite: {self.citation.anchor}: {self.citation.statement}")
        for key, value in self.witnesses.items():
            lines.append(f"{pad}    {key}: {json.dumps(value, ensure_ascii=False)}")
        for note in self.notes:
            lines.append(f"{pad}    note: {note}")
        for p in self.premises:
            lines.append(p.render(indent + 1))
        return "\n".join(lines)
