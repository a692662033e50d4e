"""
weightkit 语言配置模块

weightkit language configuration module
"""
from enum import Enum
from typing import Iterator, Union
from contextvars import ContextVar
from contextlib import contextmanager


class Language(str, Enum):
    """
    报告与日志使用的语言

    Language used for reports and log lines
    """
    CN = "CN"
    EN = "EN"

    @classmethod
    def parse(cls, value: Union[str, "Language"]) -> "Language":
        """
        解析语言名称（不区分大小写）

        Parse a language name (case-insensitive)

        Raises:
            ValueError: 未知语言 | Unknown language
        """
        if isinstance(value, Language):
            return value
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise ValueError(get_message(
                cn=f"语言必须为 CN 或 EN，收到: {value!r}",
                en=f"Language must be CN or EN, got: {value!r}"
            ))


# 当前上下文的语言，默认为中文 | Language of the current context, Chinese by default
_ACTIVE_LANGUAGE: ContextVar[Language] = ContextVar("weightkit_language", default=Language.CN)


def set_language(lang: Union[str, Language]) -> None:
    """
    设置当前上下文的语言

    Set the language of the current context

    Args:
        lang: Language.CN / Language.EN 或其名称 | Language.CN / Language.EN or its name
    """
    _ACTIVE_LANGUAGE.set(Language.parse(lang))


def get_language() -> Language:
    """
    获取当前语言

    Get the current language
    """
    return _ACTIVE_LANGUAGE.get()


@contextmanager
def use_language(lang: Union[str, Language]) -> Iterator[None]:
    """
    临时切换语言的上下文管理器

    Context manager for a temporary language switch
    """
    token = _ACTIVE_LANGUAGE.set(Language.parse(lang))
    try:
        yield
    finally:
        _ACTIVE_LANGUAGE.reset(token)


def get_message(cn: str = "", en: str = "") -> str:
    """
    按当前语言选择消息

    Pick the message for the current language

    Args:
        cn: 中文消息 | Chinese message
        en: 英文消息 | English message
    """
    return cn if get_language() == Language.CN else en
