"""Pass/fail reports for exhaustive structure verification.

A report is an ordered list of named checks; a failed check carries a
witness (a counterexample, or whatever identifies the violation).  Reports
are deterministic for a fixed input: check order is fixed and witnesses use
the library's canonical enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: object = None


@dataclass
class VerificationReport:
    title: str
    checks: list[Check] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def add(self, name, passed, witness=None):
        self.checks.append(Check(name, bool(passed), witness))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def lines(self):
        out = [self.title]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = "" if c.witness is None else f"  [{c.witness}]"
            out.append(f"  {mark} {c.name}{extra}")
        for k, v in self.stats.items():
            out.append(f"  {k}: {v}")
        return out

    def __str__(self):
        return "\n".join(self.lines())
