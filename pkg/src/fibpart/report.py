"""Pass/fail reports returned by the structural verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    vacuous: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = ""
        if self.vacuous:
            suffix = " [vacuous]"
        if self.detail:
            suffix += f" ({self.detail})"
        return f"{status} {self.name}{suffix}"


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "", vacuous: bool = False):
        self.checks.append(CheckResult(name, passed, detail, vacuous))

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                    "vacuous": c.vacuous,
                }
                for c in self.checks
            ],
        }
