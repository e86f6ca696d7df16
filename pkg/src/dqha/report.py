"""Pass/fail reports for the exhaustive identity checkers.

Every checker evaluates both sides of an identity on all basis tuples and
records the failing tuples together with both sides, serialized exactly.
"""

import json
from dataclasses import dataclass, field as dc_field

from .linalg import sparse_clean

MAX_RECORDED_FAILURES = 16


@dataclass
class Failure:
    at: tuple
    lhs: str
    rhs: str

    def to_dict(self):
        return {"at": list(self.at), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    failures: list = dc_field(default_factory=list)
    n_failures: int = 0
    note: str = ""
    # informational checks are reported but never make a report fail
    informational: bool = False

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def failing_tuples(self):
        return [f.at for f in self.failures]

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed, "checked": self.checked,
             "n_failures": self.n_failures,
             "failures": [f.to_dict() for f in self.failures]}
        if self.note:
            d["note"] = self.note
        if self.informational:
            d["informational"] = True
        return d

    def to_text(self):
        status = "pass" if self.passed else "FAIL"
        tag = " (informational)" if self.informational else ""
        line = "%-40s %s  [%d tuples]%s" % (self.name, status, self.checked, tag)
        lines = [line]
        if self.note:
            lines.append("    note: " + self.note)
        for f in self.failures[:3]:
            lines.append("    at (%s): lhs = %s, rhs = %s" % (", ".join(map(str, f.at)), f.lhs, f.rhs))
        if self.n_failures > 3:
            lines.append("    ... %d failing tuples in total" % self.n_failures)
        return "\n".join(lines)


class Report:
    def __init__(self, title, checks=None):
        self.title = title
        self.checks = list(checks or [])

    def add(self, check):
        if isinstance(check, Report):
            self.checks.extend(check.checks)
        else:
            self.checks.append(check)
        return check

    def extend(self, checks):
        for c in checks:
            self.add(c)
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks if not c.informational)

    def failed_names(self):
        return [c.name for c in self.checks if not c.passed and not c.informational]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def names(self):
        return [c.name for c in self.checks]

    def to_dict(self):
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self):
        head = "%s: %s" % (self.title, "pass" if self.passed else "FAIL")
        return "\n".join([head] + ["  " + line for c in self.checks for line in c.to_text().split("\n")])

    def __repr__(self):
        return "Report(%r, passed=%s, failed=%s)" % (self.title, self.passed, self.failed_names())


# --- formatting helpers ---------------------------------------------------

def fmt_scalar(field, x):
    return field.format(x)


def fmt_sparse(field, names, vec):
    """'{g: -1, e: 1}' style exact rendering, in basis order."""
    vec = sparse_clean(vec)
    if not vec:
        return "0"
    parts = []
    for k in sorted(vec):
        label = names(k) if callable(names) else names[k]
        parts.append("%s: %s" % (label, field.format(vec[k])))
    return "{" + ", ".join(parts) + "}"


def _equal(a, b):
    if isinstance(a, tuple) and isinstance(b, tuple):
        return len(a) == len(b) and all(_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, dict) or isinstance(b, dict):
        return sparse_clean(a) == sparse_clean(b)
    return a == b


def run_check(name, tuples, lhs, rhs, render, label=None, note="", informational=False):
    """Compare ``lhs(*t)`` with ``rhs(*t)`` for every tuple ``t``.

    ``render`` turns a side's value into a string; ``label`` turns a basis
    tuple into the reported ``at`` tuple.
    """
    checked = 0
    failures = []
    n_fail = 0
    for t in tuples:
        checked += 1
        a, b = lhs(*t), rhs(*t)
        if not _equal(a, b):
            n_fail += 1
            if len(failures) < MAX_RECORDED_FAILURES:
                at = label(t) if label else tuple(t)
                failures.append(Failure(tuple(at), render(a), render(b)))
    return CheckResult(name, n_fail == 0, checked, failures, n_fail, note, informational)


def single_check(name, ok, note="", lhs="", rhs="", informational=False):
    failures = [] if ok else [Failure((), lhs, rhs)]
    return CheckResult(name, bool(ok), 1, failures, 0 if ok else 1, note, informational)
