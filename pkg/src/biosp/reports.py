"""Verification reports and their JSON form."""

import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class Report:
    """Outcome of checking one identity.

    ``residual`` is the canonical string of lhs - rhs after reduction; it is
    ``"0"`` exactly when ``passed`` is true.
    """

    identity: str
    passed: bool
    residual: str = "0"
    rule_applications: int = 0
    details: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "identity": self.identity,
            "pass": self.passed,
            "residual": self.residual,
            "rule_applications": self.rule_applications,
        }
        if self.details:
            out["details"] = self.details
        return out


@dataclass(frozen=True)
class Suite:
    name: str
    reports: tuple
    meta: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.reports)

    def failures(self):
        return [r for r in self.reports if not r.passed]

    def to_dict(self):
        return {
            "suite": self.name,
            "pass": self.passed,
            **({"meta": self.meta} if self.meta else {}),
            "reports": [r.to_dict() for r in self.reports],
        }


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)


__all__ = ["Report", "Suite", "dumps", "asdict"]
