"""
weightkit 报告

Reports

报告首先是结构化数据：命令回显、判定、证书、引擎版本、约定块与计时。
除计时外，相同的输入文档给出逐字节相同的报告。

Reports are structured data first: command echo, verdicts, certificates,
engine version, convention block and timing. Apart from the timing,
identical input documents give byte-identical reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .document import Command
from ..common.checks import VerificationReport
from ..common.language import get_message

ENGINE = "weightkit"

# 报告中声明的约定 | Conventions stated in every report
CONVENTIONS: Dict[str, str] = {
    "grading": "cohomological; d_i: M^i → M^{i+1}",
    "matrices": "act on column vectors; R^a → R^b is b×a",
    "relations": "a×b, one relation per row",
    "shift": "(M[k])^i = M^{i+k}, differential (−1)^k d",
    "cone": "cone(f)^i = T^i ⊕ S^{i+1}, d = [[d_T, f], [0, −d_S]]",
    "weight": "brutal truncation; w≤n lives in degrees ≥ −n",
    "t-structure": "homological; t≥n has cohomology in degrees ≤ −n",
    "snf": "D = U·A·V, diagonal canonical and divisibility-chained",
    "pd(0)": "-inf",
    "completion": "s-adic completion of finitely presented modules",
}


@dataclass
class Outcome:
    """
    处理器的返回值 | What a verb handler returns

    verdict 为 None 表示纯计算命令。
    A verdict of None marks a pure computation.
    """

    result: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[bool] = None
    certificates: List[Dict[str, Any]] = field(default_factory=list)
    checks: Optional[VerificationReport] = None


@dataclass
class Report:
    """
    一次命令执行的报告

    Report of one command run
    """

    command: Command
    ring: str
    version: str
    outcome: Outcome
    seconds: float = 0.0

    @property
    def expected(self) -> Optional[bool]:
        if self.command.expect is not None:
            return self.command.expect
        # 校验类命令默认断言全部通过 | Verifier verbs assert that everything passes by default
        return True if self.outcome.checks is not None else None

    @property
    def satisfied(self) -> bool:
        """所有判定都如断言 | Every verdict is as asserted"""
        if self.outcome.verdict is None or self.expected is None:
            return True
        return self.outcome.verdict == self.expected

    @property
    def exit_code(self) -> int:
        return 0 if self.satisfied else 1

    def to_dict(self, timing: bool = True, check_limit: Optional[int] = None) -> Dict[str, Any]:
        """
        Args:
            timing: 是否包含计时（比较确定性时关闭） | Include timing (turn off to compare for determinism)
            check_limit: 只列出前若干个失败的检查 | List only the first failing checks
        """
        data: Dict[str, Any] = {
            "command": self.command.to_dict(),
            "ring": self.ring,
            "engine": {"name": ENGINE, "version": self.version},
            "conventions": dict(CONVENTIONS),
            "verdict": self.outcome.verdict,
            "expected": self.expected,
            "satisfied": self.satisfied,
            "result": self.outcome.result,
            "certificates": self.outcome.certificates,
        }
        if self.outcome.checks is not None:
            data["checks"] = self.outcome.checks.to_dict(limit=check_limit)
        if timing:
            data["timing"] = {"seconds": round(self.seconds, 6)}
        return data

    def render(self) -> str:
        """人类可读的摘要 | Human-readable summary"""
        lines = [f"{ENGINE} {self.version} · {self.command.verb} · {self.ring}"]
        if self.outcome.verdict is not None:
            lines.append(get_message(cn=f"判定: {self.outcome.verdict}", en=f"Verdict: {self.outcome.verdict}"))
        checks = self.outcome.checks
        if checks is not None:
            lines.append(get_message(
                cn=f"检查: {len(checks.checks)} 项，失败 {len(checks.failures)} 项",
                en=f"Checks: {len(checks.checks)}, failed {len(checks.failures)}"
            ))
            for failure in checks.failures[:10]:
                lines.append(f"  ✗ {failure.name}: {failure.subject}")
        lines.append(get_message(
            cn="结果符合断言" if self.satisfied else "结果与断言不符",
            en="Result as asserted" if self.satisfied else "Result differs from the assertion"
        ))
        return "\n".join(lines)
