"""Scenario reports: one outcome per expected fact."""

from __future__ import annotations

import operator
from dataclasses import dataclass, field

OPS = {
    "==": operator.eq,
    "!=": operator.ne,
    "<=": operator.le,
    "<": operator.lt,
    ">=": operator.ge,
    ">": operator.gt,
}


@dataclass
class Fact:
    name: str
    status: str  # PASS | FAIL | SKIP
    expected: object = None
    computed: object = None
    op: str = "=="
    provenance: dict = field(default_factory=dict)
    reason: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status, "op": self.op,
               "expected": self.expected, "computed": self.computed, "provenance": self.provenance}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class Report:
    scenario: str
    parameters: dict
    seed: int
    facts: list[Fact] = field(default_factory=list)
    seconds: float = 0.0
    values: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(f.status == "FAIL" for f in self.facts)

    @property
    def status(self) -> str:
        if self.failed:
            return "FAIL"
        if self.facts and all(f.status == "SKIP" for f in self.facts):
            return "SKIP"
        return "PASS"

    def to_json(self) -> dict:
        return {"scenario": self.scenario, "parameters": self.parameters, "seed": self.seed,
                "status": self.status, "seconds": round(self.seconds, 3),
                "facts": [f.to_json() for f in self.facts]}

    def pretty(self) -> str:
        lines = [f"{self.scenario} {self.parameters} -> {self.status} ({self.seconds:.2f}s)"]
        for f in self.facts:
            detail = f.reason if f.status == "SKIP" else f"computed {f.computed!r} {f.op} {f.expected!r}"
            lines.append(f"  [{f.status}] {f.name}: {detail}")
        return "\n".join(lines)


def judge(spec: dict, values: dict) -> Fact:
    """Compare one expected-fact record against computed values."""
    name = spec["name"]
    prov = spec.get("provenance", {})
    if "skip" in spec:
        return Fact(name, "SKIP", provenance=prov, reason=spec["skip"])
    op = spec.get("op", "==")
    if name not in values:
        return Fact(name, "FAIL", spec.get("value"), None, op, prov, "value not computed")
    computed = values[name]
    expected = values[spec["ref"]] if "ref" in spec else spec.get("value")
    try:
        ok = OPS[op](computed, expected)
    except TypeError:
        ok = False
    return Fact(name, "PASS" if ok else "FAIL", expected, computed, op, prov)
