"""
weightkit 命令行入口

Console entry point

    weightkit <verb> --in <file> [--out <file>] [--level N_max] [--seed S]
                     [--jobs J] [--language CN|EN] [--verbose]

退出码 | Exit codes: 0 = 所有判定如断言 | all verdicts as asserted,
1 = 有检查失败或内部交叉验证失败 | some check or internal cross-check failed,
2 = 输入错误 | input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .dispatcher import run
from .document import VERBS, parse
from ..utils import DocumentCoder
from ..common.exceptions import VerificationError, WeightKitError
from ..common.language import Language, get_message
from ..common.logging import WeightKitLogger

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

# verify-all 报告中逐条列出的失败检查数 | Failing checks listed one by one in verify-all reports
VERIFY_ALL_CHECK_LIMIT = 50


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightkit",
        description="Exact weight-structure, contramodule and heart computations over Euclidean domains.",
    )
    parser.add_argument("verb", choices=VERBS, help="Operation to run")
    parser.add_argument("--in", dest="input", required=True,
                        help="Input document (JSON); '-' reads standard input")
    parser.add_argument("--out", dest="output", default=None,
                        help="Report file (JSON); the report goes to standard output when omitted")
    parser.add_argument("--level", type=int, default=6, help="Highest reduction level N_max (default: 6)")
    parser.add_argument("--seed", type=int, default=0, help="Seed for generated samples (default: 0)")
    parser.add_argument("--jobs", type=int, default=1, help="Worker threads for verify-all (default: 1)")
    parser.add_argument("--language", type=Language.parse, default=Language.CN, help="CN or EN (default: CN)")
    parser.add_argument("--verbose", action="store_true", help="Log kernel details at DEBUG")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    WeightKitLogger.setup_logging(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        enable_debug=args.verbose,
        language=args.language,
    )
    if args.verbose:
        WeightKitLogger.enable_kernel_debug()

    try:
        document = parse(_read(args.input), verb=args.verb)
        report = run(document, level=args.level, seed=args.seed, jobs=args.jobs)
    except OSError as exc:
        print(get_message(cn=f"[错误] 无法读取输入: {exc}", en=f"[error] cannot read input: {exc}"), file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(get_message(cn=f"[内部错误] {exc}", en=f"[internal error] {exc}"), file=sys.stderr)
        return EXIT_FAILED
    except WeightKitError as exc:
        print(get_message(cn=f"[错误] {exc}", en=f"[error] {exc}"), file=sys.stderr)
        return EXIT_INPUT

    limit = VERIFY_ALL_CHECK_LIMIT if args.verb == "verify-all" else None
    text = DocumentCoder.dumps(report.to_dict(check_limit=limit))
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        print(report.render())
    else:
        print(text)
    return EXIT_OK if report.exit_code == 0 else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
