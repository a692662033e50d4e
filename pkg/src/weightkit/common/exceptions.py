"""
weightkit 异常定义模块

Exception Definition Module
"""

from typing import Optional

from .language import get_message


class WeightKitError(Exception):
    """
    weightkit 的基础异常类

    所有 weightkit 相关的异常都继承自这个基类。

    Base exception class for weightkit

    All weightkit-related exceptions inherit from this base class.
    """

    def __init__(self, cn: str = "", en: str = "") -> None:
        self.cn = cn
        self.en = en
        super().__init__(get_message(cn=cn, en=en))

    def __str__(self) -> str:
        return get_message(cn=self.cn, en=self.en)


# =========================================================================
# Level 2: 中间层基类 | Intermediate Base Classes
# =========================================================================

class InputError(WeightKitError):
    """
    输入错误基类

    用户提供的文档或参数无法解析、引用了未声明的名称等。CLI 以退出码 2 报告。

    Input error base class

    The user-supplied document or arguments cannot be parsed, reference
    undeclared names, and so on. The CLI reports these with exit code 2.
    """
    pass


class ValidationError(WeightKitError):
    """
    数据校验错误基类

    构造的值违反了其类型不变量（例如 d∘d ≠ 0、矩阵维数不匹配、环不一致）。

    Data validation error base class

    A constructed value violates its type invariants (e.g. d∘d ≠ 0,
    mismatched matrix dimensions, mixed rings).
    """
    pass


class PreconditionError(WeightKitError):
    """
    前置条件错误

    操作在其前置条件之外被调用。

    Precondition error

    An operation was called outside its precondition.
    """
    pass


class VerificationError(WeightKitError):
    """
    验证失败异常

    验证器发现了被违反的性质，并被要求抛出而不是报告。

    Verification failure

    A verifier found a violated property and was asked to raise instead of report.
    """
    pass


# =========================================================================
# Level 3: 具体实现类 | Concrete Implementation Classes
# =========================================================================

# --- Input Errors ---

class DocumentSyntaxError(InputError):
    """
    输入文档语法错误，带有行号与列号

    Input document syntax error carrying line and column
    """

    def __init__(self, line: int, column: int, detail: str) -> None:
        self.line = line
        self.column = column
        self.detail = detail
        super().__init__(
            cn=f"文档语法错误 (第 {line} 行, 第 {column} 列): {detail}",
            en=f"Document syntax error (line {line}, column {column}): {detail}"
        )


class DeclarationError(InputError):
    """
    声明错误：某个声明无法通过加载时的检查

    Declaration error: a declaration fails its load-time checks

    Attributes:
        name: 出错的声明名称 | Name of the offending declaration
    """

    def __init__(self, name: str, cn: str, en: str) -> None:
        self.name = name
        super().__init__(
            cn=f"声明 '{name}' 无效: {cn}",
            en=f"Declaration '{name}' is invalid: {en}"
        )


# --- Validation Errors ---

class RingMismatchError(ValidationError):
    """
    参与同一运算的对象属于不同的环

    Objects taking part in one operation live over different rings
    """
    pass


class DimensionError(ValidationError):
    """
    矩阵或模的维数不兼容

    Incompatible matrix or module dimensions
    """
    pass


class ComplexError(ValidationError):
    """
    链复形或链映射的不变量不成立

    A chain complex or chain map invariant fails

    Attributes:
        degree: 出错的上同调次数 | Cohomological degree at fault
    """

    def __init__(self, cn: str, en: str, degree: Optional[int] = None) -> None:
        self.degree = degree
        super().__init__(cn=cn, en=en)


class ModuleHomError(ValidationError):
    """
    矩阵不能定义有限表现模之间的同态

    The matrix does not define a homomorphism of finitely presented modules
    """
    pass


class LocalizationError(ValidationError):
    """
    局部化数据不合法（例如奇异矩阵、空生成元列表）

    Invalid localization data (e.g. a singular matrix, an empty generator list)
    """
    pass


class SequenceError(ValidationError):
    """
    短正合列在某个位置不正合

    A short exact sequence fails exactness at some position

    Attributes:
        position: 'injective' / 'composite' / 'middle' / 'surjective'
    """

    def __init__(self, position: str, cn: str, en: str) -> None:
        self.position = position
        super().__init__(cn=cn, en=en)


# --- Precondition Errors ---

class NotContramoduleError(PreconditionError):
    """
    需要 s-反模但给出的模不是

    An s-contramodule was required but the module is not one
    """
    pass
