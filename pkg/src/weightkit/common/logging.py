"""
weightkit 日志系统

weightkit Logging System
"""

import sys
import logging
from typing import Optional, Union

from .language import Language, set_language, get_message


class BilingualLogger:
    """
    双语日志适配器

    Bilingual log adapter
    """

    def __init__(self, name: str) -> None:
        self._logger = logging.getLogger(name)

    @property
    def name(self) -> str:
        return self._logger.name

    def debug(self, cn: str, en: str, *args, **kwargs) -> None:
        if self._logger.isEnabledFor(logging.DEBUG):
            self._logger.debug(get_message(cn, en), *args, stacklevel=2, **kwargs)

    def info(self, cn: str, en: str, *args, **kwargs) -> None:
        if self._logger.isEnabledFor(logging.INFO):
            self._logger.info(get_message(cn, en), *args, stacklevel=2, **kwargs)

    def warning(self, cn: str, en: str, *args, **kwargs) -> None:
        if self._logger.isEnabledFor(logging.WARNING):
            self._logger.warning(get_message(cn, en), *args, stacklevel=2, **kwargs)

    def error(self, cn: str, en: str, *args, **kwargs) -> None:
        if self._logger.isEnabledFor(logging.ERROR):
            self._logger.error(get_message(cn, en), *args, stacklevel=2, **kwargs)

    def exception(self, cn: str, en: str, *args, **kwargs) -> None:
        # 等价于 error(..., exc_info=True) | Same as error(..., exc_info=True)
        self._logger.exception(get_message(cn, en), *args, stacklevel=2, **kwargs)

    def set_level(self, level: Union[int, str]) -> None:
        self._logger.setLevel(level)


class WeightKitLogger:
    """
    weightkit 日志管理器

    weightkit Log Manager
    """

    DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    DEBUG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"

    # 计算内核子日志器 | Kernel sub-loggers
    KERNEL_LOGGERS = ("weightkit.ring", "weightkit.complexes", "weightkit.contra")

    @staticmethod
    def setup_logging(
            level: int = logging.INFO,
            format_string: Optional[str] = None,
            enable_debug: bool = False,
            log_file: Optional[str] = None,
            language: Union[str, Language] = Language.CN,
            stream=None
    ) -> None:
        """
        设置 weightkit 的日志配置

        Setup weightkit logging configuration

        Args:
            level: 日志级别，默认INFO | Log level, default INFO
            format_string: 自定义日志格式 | Custom log format
            enable_debug: 是否使用带文件位置的调试格式 | Use the debug format with file positions
            log_file: 日志文件路径，如果提供则同时输出到文件 | Log file path, also log there if given
            language: 语言设置 | Language setting
            stream: 控制台输出流，默认 stderr（stdout 留给报告） | Console stream, stderr by default (stdout carries reports)
        """
        set_language(language)

        if format_string is None:
            format_string = WeightKitLogger.DEBUG_FORMAT if enable_debug else WeightKitLogger.DEFAULT_FORMAT
        formatter = logging.Formatter(format_string)

        root_logger = logging.getLogger("weightkit")
        root_logger.setLevel(level)
        root_logger.handlers.clear()

        console_handler = logging.StreamHandler(stream or sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setLevel(level)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)

        root_logger.propagate = False

        root_logger.debug(get_message(
            cn=f"weightkit日志系统已初始化 - Level: {logging.getLevelName(level)}",
            en=f"weightkit logging system initialized - Level: {logging.getLevelName(level)}"
        ))

    @staticmethod
    def get_logger(name: str) -> BilingualLogger:
        """
        获取指定名称的日志器（自动加上 weightkit. 前缀）

        Get logger with specified name (the "weightkit." prefix is added)
        """
        return BilingualLogger(f"weightkit.{name}")

    @staticmethod
    def enable_kernel_debug() -> None:
        """
        启用计算内核的调试日志（消元步数、稳定深度等）

        Enable debug logging of the computational kernels (elimination steps, stabilization depths, ...)
        """
        for name in WeightKitLogger.KERNEL_LOGGERS:
            logging.getLogger(name).setLevel(logging.DEBUG)
        logging.getLogger("weightkit").info(get_message("内核调试模式已启用", "Kernel debug mode enabled"))

    @staticmethod
    def disable_kernel_debug() -> None:
        """
        禁用计算内核的调试日志

        Disable debug logging of the computational kernels
        """
        for name in WeightKitLogger.KERNEL_LOGGERS:
            logging.getLogger(name).setLevel(logging.INFO)
        logging.getLogger("weightkit").info(get_message("内核调试模式已禁用", "Kernel debug mode disabled"))


def get_logger(name: str) -> BilingualLogger:
    """
    便捷函数：获取 weightkit 日志器

    Convenience function: get a weightkit logger
    """
    return WeightKitLogger.get_logger(name)


logging.getLogger("weightkit").addHandler(logging.NullHandler())
