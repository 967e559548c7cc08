"""Structured pass/fail reports shared by every verifier.

A :class:`Report` is a list of named :class:`Check` entries.  Each check counts
the cases it evaluated and keeps the first few failures with their witness
(basis indices, objects, group triples, ...) and both sides of the identity, so
that any failure can be replayed by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import Cyc8, Matrix, format_scalar

MAX_KEPT_FAILURES = 5
MAX_SERIALIZED_NNZ = 256


@dataclass(frozen=True)
class Failure:
    witness: tuple
    lhs: object = None
    rhs: object = None


@dataclass
class Check:
    identity: str
    cases: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    skipped: str = ""

    def record(self, ok: bool, witness=(), lhs=None, rhs=None) -> bool:
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_KEPT_FAILURES:
                self.failures.append(Failure(tuple(witness), lhs, rhs))
        return ok

    @property
    def ok(self) -> bool:
        return not self.skipped and self.failure_count == 0

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "ok": self.ok, "cases": self.cases, "failures": self.failure_count}
        if self.skipped:
            out["skipped"] = self.skipped
        if self.failures:
            out["witnesses"] = [
                {"witness": jsonable(f.witness), "lhs": jsonable(f.lhs), "rhs": jsonable(f.rhs)} for f in self.failures
            ]
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, identity: str) -> Check:
        for c in self.checks:
            if c.identity == identity:
                return c
        c = Check(identity)
        self.checks.append(c)
        return c

    def __getitem__(self, identity: str) -> Check:
        for c in self.checks:
            if c.identity == identity:
                return c
        raise KeyError(identity)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            c.identity = prefix + c.identity
            self.checks.append(c)
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failed(self) -> list:
        return [c for c in self.checks if not c.ok]

    def first_failure(self):
        """(identity, Failure or None) of the first failing check, or None."""
        for c in self.checks:
            if not c.ok:
                return c.identity, (c.failures[0] if c.failures else None)
        return None

    def to_dict(self) -> dict:
        out = {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def render_text(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            status = "skipped" if c.skipped else ("ok" if c.ok else f"FAILED {c.failure_count}/{c.cases}")
            lines.append(f"  {c.identity:<40} {status}")
            for f in c.failures[:1]:
                lines.append(f"    witness {jsonable(f.witness)}")
            if c.skipped:
                lines.append(f"    {c.skipped}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def jsonable(x):
    """Convert exact scalars, matrices and containers into JSON-ready values."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, Cyc8)):
        return format_scalar(x)
    if isinstance(x, Matrix):
        out = {"shape": [x.rows, x.cols], "nnz": x.nnz}
        if x.nnz <= MAX_SERIALIZED_NNZ:
            out["entries"] = [[i, j, format_scalar(v)] for i, j, v in x.items()]
        return out
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else ",".join(map(str, k)) if isinstance(k, tuple) else str(k)): jsonable(v)
                for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)
