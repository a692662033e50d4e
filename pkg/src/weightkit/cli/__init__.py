"""
weightkit 命令行模块

weightkit CLI Module: documents, dispatcher, reports and the acceptance battery
"""

from .document import VERBS, Command, Declaration, InputDocument, parse, serialize
from .report import CONVENTIONS, Outcome, Report
from .battery import CRITERIA, BatteryConfig, run_battery, run_criteria
from .dispatcher import HANDLERS, CommandContext, run
from .main import main

__all__ = [
    "VERBS",
    "Command",
    "Declaration",
    "InputDocument",
    "parse",
    "serialize",
    "CONVENTIONS",
    "Outcome",
    "Report",
    "CRITERIA",
    "BatteryConfig",
    "run_battery",
    "run_criteria",
    "HANDLERS",
    "CommandContext",
    "run",
    "main",
]
