"""
exceptions.py
计算模块自定义异常
"""

from typing import Any, Optional


class NormExtError(Exception):
    """计算基础异常，kind 用于命令行 JSON 错误输出"""
    kind = "error"

class InputError(NormExtError):
    """输入异常（非素数 p、父域不一致、空自同构列表等）"""
    kind = "input"

class ParseError(InputError):
    """文本或描述文件解析异常"""
    kind = "parse"

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (位置 {position})"
        super().__init__(message)
        self.position = position

class DomainError(NormExtError):
    """数学定义域异常"""
    kind = "domain"

class CertificateError(DomainError):
    """不可约性证书验证失败"""
    kind = "certificate"

class ValidationError(DomainError):
    """对象构造时的验证失败（自同构、取值表）"""
    kind = "validation"

class PreconditionError(DomainError):
    """半范数构造的前提条件不成立，witness 为反例"""
    kind = "precondition"

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness

class ResourceError(NormExtError):
    """精确比较超出配置的指数上限"""
    kind = "resource"
