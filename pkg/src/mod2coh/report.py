"""Verdict records and report rendering (TSV / JSON)."""

import json
from dataclasses import dataclass, replace

__all__ = ["Verdict", "COLUMNS", "render_tsv", "render_json", "summarize"]

COLUMNS = ("task-id", "kind", "map/ring", "parameter", "status", "witness-lhs", "witness-rhs")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check.  ``at``/``lhs``/``rhs`` describe the first difference on failure.

    ``status`` is ``pass``, ``fail`` or ``error``; errors carry a diagnostic in ``message``.
    """

    status: str
    at: str = ""
    lhs: str = ""
    rhs: str = ""
    message: str = ""
    task: object = None

    @classmethod
    def ok(cls):
        return cls("pass")

    @classmethod
    def fail(cls, at, lhs, rhs):
        lhs, rhs = str(lhs), str(rhs)
        if lhs == rhs:
            raise ValueError(f"a failing verdict needs distinct sides, got {lhs!r} twice")
        return cls("fail", at=at, lhs=lhs, rhs=rhs)

    @classmethod
    def error(cls, message):
        return cls("error", message=message)

    @property
    def passed(self):
        return self.status == "pass"

    def for_task(self, task):
        return replace(self, task=task)

    def row(self):
        t = self.task
        lhs = self.lhs if self.status != "error" else self.message
        # the location of a failure rides along in the parameter column
        parameter = "; ".join(p for p in (t.parameter if t else "", f"at {self.at}" if self.at else "") if p)
        return {
            "task-id": t.id if t else "",
            "kind": t.kind if t else "",
            "map/ring": t.target if t else "",
            "parameter": parameter,
            "status": self.status,
            "witness-lhs": lhs,
            "witness-rhs": self.rhs,
        }


def summarize(verdicts):
    counts = {"pass": 0, "fail": 0, "error": 0}
    for v in verdicts:
        counts[v.status] += 1
    return counts


def _clean(field):
    return str(field).replace("\t", " ").replace("\n", " ")


def render_tsv(verdicts):
    lines = ["\t".join(COLUMNS)]
    for v in verdicts:
        row = v.row()
        lines.append("\t".join(_clean(row[c]) for c in COLUMNS))
    s = summarize(verdicts)
    lines.append(f"# pass={s['pass']} fail={s['fail']} error={s['error']}")
    return "\n".join(lines) + "\n"


def render_json(verdicts):
    doc = {"rows": [v.row() for v in verdicts], "summary": summarize(verdicts)}
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
