"""
Verification reports.

A ``Report`` records one relation checked over one space. Reports merge
associatively, so per-ket or per-class checks can be split and combined.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

# Failures kept per report; the count is always exact.
MAX_RECORDED_FAILURES = 20


@dataclass
class Report:
    relation: str
    space: str
    cases: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    failure_count: int = 0
    max_residual: Optional[float] = None
    tol: Optional[float] = None
    explained: bool = False
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self):
        if self.failure_count:
            return False
        if self.max_residual is not None and self.tol is not None:
            return self.max_residual <= self.tol
        return True

    @property
    def ok(self):
        """Pass, or a failure backed by passing evidence."""
        return self.passed or self.explained

    def record_case(self, residual=None):
        self.cases += 1
        if residual is not None:
            if self.max_residual is None or residual > self.max_residual:
                self.max_residual = residual

    def record_failure(self, **failure):
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(failure)

    def merge(self, other):
        if (self.relation, self.space) != (other.relation, other.space):
            raise ValueError(
                f"Cannot merge {other.relation}/{other.space} into {self.relation}/{self.space}"
            )
        residuals = [r for r in (self.max_residual, other.max_residual) if r is not None]
        merged = Report(
            relation=self.relation,
            space=self.space,
            cases=self.cases + other.cases,
            failures=(self.failures + other.failures)[:MAX_RECORDED_FAILURES],
            failure_count=self.failure_count + other.failure_count,
            max_residual=max(residuals) if residuals else None,
            tol=self.tol if self.tol is not None else other.tol,
            explained=self.explained and other.explained,
            details={**self.details, **other.details},
        )
        return merged

    def summary(self):
        status = 'PASS' if self.passed else ('EXPLAINED' if self.explained else 'FAIL')
        residual = '' if self.max_residual is None else f" max_residual={self.max_residual:.3e}"
        return f"{status} {self.relation} [{self.space}] cases={self.cases}{residual}"


def all_ok(reports):
    return all(report.ok for report in reports)
