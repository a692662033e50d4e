"""
weightkit 校验报告

Verification reports shared by every verifier
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .exceptions import VerificationError
from .logging import BilingualLogger


@dataclass(frozen=True)
class CheckResult:
    """
    单项检查的结果与见证

    Outcome of a single check together with its witness
    """

    name: str
    subject: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "subject": self.subject, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    """
    按固定顺序累积的检查列表

    Check list accumulated in a fixed order
    """

    title: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, subject: str, passed: bool, **detail: Any) -> CheckResult:
        result = CheckResult(name, subject, bool(passed), detail)
        self.checks.append(result)
        return result

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def log_summary(self, logger: BilingualLogger) -> None:
        """
        INFO 记录汇总，WARNING 记录每个违例

        Summary at INFO, every violation at WARNING
        """
        for failure in self.failures:
            logger.warning(
                f"{self.title}: 检查 {failure.name} 在 {failure.subject} 上失败",
                f"{self.title}: check {failure.name} failed on {failure.subject}"
            )
        logger.info(
            f"{self.title}: {len(self.checks)} 项检查，{len(self.failures)} 项失败",
            f"{self.title}: {len(self.checks)} checks, {len(self.failures)} failed"
        )

    def raise_on_failure(self) -> None:
        """
        Raises:
            VerificationError: 存在失败的检查 | Some check failed
        """
        failures = self.failures
        if failures:
            first = failures[0]
            raise VerificationError(
                cn=f"{self.title}: {len(failures)} 项检查失败，首个为 {first.name} ({first.subject})",
                en=f"{self.title}: {len(failures)} checks failed, first {first.name} ({first.subject})"
            )

    def to_dict(self, limit: Optional[int] = None) -> Dict[str, Any]:
        checks = self.checks if limit is None else self.failures[:limit]
        return {
            "title": self.title,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [check.to_dict() for check in checks],
            "notes": list(self.notes),
        }
