"""Pass/fail reports for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"CHECK {self.id} {'PASS' if self.passed else 'FAIL'} {self.detail}".rstrip()


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, passed: bool, detail: str = "") -> Check:
        check = Check(id, bool(passed), detail)
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.passed, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_text(self) -> str:
        return "\n".join(c.line() for c in self.checks) + "\n"

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [{"id": c.id, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }
