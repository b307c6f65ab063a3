"""Verification reports and their JSON / text rendering."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

REPORT_VERSION = "1"

PASS, FAIL, SKIPPED, ERROR = "PASS", "FAIL", "SKIPPED", "ERROR"


@dataclass
class SampleRecord:
    index: int
    attempt: int
    equal: bool

    def to_dict(self):
        return {"index": self.index, "attempt": self.attempt, "equal": self.equal}


@dataclass
class VerificationReport:
    identity: str
    anchor: str = ""
    flavor: str | None = None
    instance: dict = field(default_factory=dict)
    seed: int = 0
    samples: list = field(default_factory=list)
    status: str = FAIL
    counterexample: dict | None = None
    note: str = ""
    duration: float = 0.0

    def finish(self):
        if self.status in (ERROR, SKIPPED):
            return self
        self.status = PASS if self.samples and all(s.equal for s in self.samples) else FAIL
        return self

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self, durations=True):
        d = {
            "identity": self.identity,
            "anchor": self.anchor,
            "flavor": self.flavor,
            "instance": self.instance,
            "seed": self.seed,
            "status": self.status,
            "samples": [s.to_dict() for s in self.samples],
            "counterexample": self.counterexample,
            "note": self.note,
        }
        if durations:
            d["duration_s"] = round(self.duration, 6)
        return d


def render_json(reports, durations=True) -> str:
    doc = {"report_version": REPORT_VERSION, "reports": [r.to_dict(durations) for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_text(reports, durations=True) -> str:
    lines = []
    for r in reports:
        inst = ", ".join(f"{k}={v}" for k, v in r.instance.items())
        line = f"{r.status:5} {r.identity}"
        if r.flavor:
            line += f" [{r.flavor}]"
        if inst:
            line += f" ({inst})"
        line += f" samples={len(r.samples)}"
        if durations:
            line += f" {r.duration:.3f}s"
        lines.append(line)
        if r.counterexample:
            lines.append("      counterexample: " + ", ".join(f"{k}={v}" for k, v in r.counterexample.items()))
        if r.note and r.status != PASS:
            lines.append("      " + r.note)
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def strip_durations(doc: dict) -> dict:
    """Copy of a parsed JSON report with the timing fields removed."""
    out = dict(doc)
    out["reports"] = [{k: v for k, v in r.items() if k != "duration_s"} for r in doc.get("reports", [])]
    return out


def load_schema() -> dict:
    """The JSON schema that every rendered report document satisfies."""
    from importlib.resources import files

    return json.loads(files("multicomm").joinpath("report_schema.json").read_text(encoding="utf-8"))
