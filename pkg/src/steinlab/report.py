"""Verification reports: a list of checks with expected and actual values."""

import json
import re
from dataclasses import dataclass, field


def _plain(v):
    """Make values JSON friendly and deterministic (tuples -> lists, sets sorted)."""
    if isinstance(v, (set, frozenset)):
        return sorted(_plain(x) for x in v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if hasattr(v, "denominator"):
        return int(v) if v.denominator == 1 else str(v)
    return str(v)


@dataclass
class CheckItem:
    check_id: str
    anchor: str
    expected: object
    actual: object
    passed: bool

    def as_dict(self):
        return {"check_id": self.check_id, "anchor": self.anchor,
                "expected": _plain(self.expected), "actual": _plain(self.actual),
                "pass": bool(self.passed)}


@dataclass
class VerificationReport:
    suite: str
    items: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    wall_time: float = None

    def check(self, check_id, anchor, expected, actual, passed=None):
        """Record a check; ``passed`` defaults to ``expected == actual``."""
        if passed is None:
            passed = expected == actual
        self.items.append(CheckItem(check_id, anchor, expected, actual, bool(passed)))
        return passed

    def note(self, text):
        self.notes.append(text)

    @property
    def passed(self):
        return all(i.passed for i in self.items)

    def as_dict(self):
        out = {"suite": self.suite,
               "items": [i.as_dict() for i in sorted(self.items, key=lambda i: _id_key(i.check_id))],
               "notes": list(self.notes),
               "pass": self.passed}
        if self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        items = [CheckItem(i["check_id"], i["anchor"], i["expected"], i["actual"], i["pass"])
                 for i in d["items"]]
        return cls(d["suite"], items, d.get("notes", []), d.get("wall_time"))

    def to_markdown(self):
        lines = [f"## {self.suite}: {'PASS' if self.passed else 'FAIL'}", "",
                 "| check | what | expected | actual | result |",
                 "|---|---|---|---|---|"]
        for i in sorted(self.items, key=lambda i: _id_key(i.check_id)):
            d = i.as_dict()
            lines.append(f"| {d['check_id']} | {d['anchor']} | {_cell(d['expected'])} | "
                         f"{_cell(d['actual'])} | {'pass' if d['pass'] else 'FAIL'} |")
        if self.notes:
            lines += ["", "Notes:", ""] + [f"- {n}" for n in self.notes]
        if self.wall_time is not None:
            lines += ["", f"wall time: {self.wall_time:.3f} s"]
        return "\n".join(lines)


def _cell(v):
    return json.dumps(v, sort_keys=True).replace("|", "\\|")


def _id_key(check_id):
    # C2.10 sorts after C2.9
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.findall(r"\d+|\D+", check_id)]


def merge(suite, reports):
    out = VerificationReport(suite)
    for r in reports:
        out.items += r.items
        out.notes += [f"{r.suite}: {n}" for n in r.notes]
    return out
