from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class CheckResult:
    """
    Outcome of one identity check.

    Attributes
    ----------
    name: str
        Check name, unique within a suite.

    ok: bool

    checked: int = 0
        Number of instances evaluated.

    counterexample: dict = None
        JSON payload of the first failing instance; enough to replay it.

    details: dict
        Extra JSON facts (modes, counts).
    """

    name: str
    ok: bool
    checked: int = 0
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @classmethod
    def passed(cls, name: str, checked: int = 1, **details: Any) -> "CheckResult":

        return cls(name, True, checked, None, details)

    @classmethod
    def failed(
        cls, name: str, counterexample: dict, checked: int = 1, **details: Any
    ) -> "CheckResult":

        return cls(name, False, checked, counterexample, details)

    def __bool__(self) -> bool:

        return self.ok

    def to_dict(self) -> dict:

        data = {"name": self.name, "ok": self.ok, "checked": self.checked}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        if self.details:
            data["details"] = self.details
        return data


def combine(name: str, results) -> CheckResult:
    """Conjunction of sub-results; the first failure supplies the counterexample."""

    checked = 0
    for result in results:
        checked += result.checked
        if not result.ok:
            return CheckResult(
                name,
                False,
                checked,
                dict(result.counterexample or {}, check=result.name),
                result.details,
            )
    return CheckResult.passed(name, checked)
