"""
descriptors.py
扩张与半范数的 JSON/YAML 描述文件模型（pydantic），以及到运行时对象的构造
"""

import logging
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError, field_validator, model_validator

from src.modules.exceptions import InputError, ParseError
from src.modules.extension import Automorphism, ExtensionField, mk_extension
from src.modules.magnitude import magnitude_from_json, require_prime
from src.modules.poly import IrredCertificate, parse_polynomial
from src.modules.seminorm_lab import (
    BasisSeminorm, ExtensionCarrier, GaloisSupSeminorm, MaxPowSeminorm, PadicSeminorm,
    ScaledSeminorm, Seminorm, SpectralSeminorm, TableSeminorm,
)

logger = logging.getLogger(__name__)


class CertificateModel(BaseModel):
    """不可约性证书"""
    kind: Literal["eisenstein", "eisenstein_shift", "mod_p", "asserted"]
    shift: Optional[str] = None
    note: str = ""

    @field_validator('shift', mode='before')
    @classmethod
    def coerce_shift(cls, v):
        return str(v) if isinstance(v, int) and not isinstance(v, bool) else v

    @model_validator(mode='after')
    def check_fields(self):
        if self.kind == "eisenstein_shift" and self.shift is None:
            raise ValueError("eisenstein_shift 证书需要 shift")
        return self

    def to_certificate(self) -> IrredCertificate:
        if self.kind == "eisenstein":
            return IrredCertificate.eisenstein()
        if self.kind == "eisenstein_shift":
            return IrredCertificate.eisenstein_shift(self.shift)
        if self.kind == "mod_p":
            return IrredCertificate.mod_p()
        return IrredCertificate.asserted(self.note)


class ExtensionDescriptor(BaseModel):
    """扩张描述：素数、定义多项式系数文本（低次在前）、证书"""
    p: int = Field(..., ge=2)
    modulus: str
    certificate: CertificateModel

    @field_validator('p')
    @classmethod
    def check_prime(cls, v):
        # pydantic 只把 ValueError 收集为校验错误
        try:
            require_prime(v)
        except InputError as e:
            raise ValueError(str(e))
        return v

    def build(self) -> ExtensionField:
        return mk_extension(self.p, parse_polynomial(self.modulus), self.certificate.to_certificate())


class SeminormDescriptor(BaseModel):
    """
    半范数描述。按 kind 使用不同字段：
    padic(p) / scaled(c, p) / max_pow(p, k) / basis(ext) / spectral(ext) /
    table(n, values) / galois(inner, auts)
    """
    kind: Literal["padic", "scaled", "max_pow", "basis", "spectral", "table", "galois"]
    p: Optional[int] = None
    c: Optional[str] = None
    k: Optional[int] = None
    ext: Optional[ExtensionDescriptor] = None
    n: Optional[int] = Field(default=None, ge=2)
    values: Optional[Dict[str, Any]] = None
    inner: Optional["SeminormDescriptor"] = None
    auts: List[str] = Field(default_factory=list)

    @field_validator('c', mode='before')
    @classmethod
    def coerce_scale(cls, v):
        return str(v) if isinstance(v, int) and not isinstance(v, bool) else v

    @model_validator(mode='after')
    def check_fields(self):
        required = {
            "padic": ["p"],
            "scaled": ["p", "c"],
            "max_pow": ["p", "k"],
            "basis": ["ext"],
            "spectral": ["ext"],
            "table": ["n", "values"],
            "galois": ["inner"],
        }[self.kind]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.kind} 半范数缺少字段: {', '.join(missing)}")
        if self.kind == "galois" and not self.auts:
            raise ValueError("galois 半范数需要非空的 auts")
        return self

    def build(self) -> Seminorm:
        if self.kind == "padic":
            return PadicSeminorm(self.p)
        if self.kind == "scaled":
            return ScaledSeminorm(self.c, self.p)
        if self.kind == "max_pow":
            return MaxPowSeminorm(self.p, self.k)
        if self.kind == "basis":
            return BasisSeminorm(self.ext.build())
        if self.kind == "spectral":
            return SpectralSeminorm(self.ext.build())
        if self.kind == "table":
            try:
                values = {int(r): magnitude_from_json(v) for r, v in self.values.items()}
            except ValueError as e:
                raise ParseError(f"取值表的键必须是整数: {e}")
            return TableSeminorm(self.n, values)
        inner = self.inner.build()
        if not isinstance(inner.carrier, ExtensionCarrier):
            raise ParseError("galois 的内层半范数必须定义在扩张上")
        return GaloisSupSeminorm(inner, parse_automorphisms(inner.carrier.ext, self.auts))


SeminormDescriptor.model_rebuild()


def parse_automorphisms(ext: ExtensionField, texts: List[str]) -> List[Automorphism]:
    """每个文本是生成元像的系数（如 "0,-1" 表示 α ↦ -α）"""
    carrier = ExtensionCarrier(ext)
    return [Automorphism(ext, carrier.parse(text)) for text in texts]


def _validate(model_cls, data: Any, what: str):
    if not isinstance(data, dict):
        raise ParseError(f"{what}描述必须是对象，实际为 {type(data).__name__}")
    try:
        return model_cls.model_validate(data)
    except PydanticValidationError as e:
        raise ParseError(f"{what}描述无效: {e.errors()[0].get('msg', e)}")


def extension_from_data(data: Any) -> ExtensionField:
    """
    由描述字典构造扩张

    Args:
        data: 已加载的 JSON/YAML 字典

    Returns:
        ExtensionField
    """
    return _validate(ExtensionDescriptor, data, "扩张").build()


def seminorm_from_data(data: Any) -> Seminorm:
    """由描述字典构造半范数"""
    seminorm = _validate(SeminormDescriptor, data, "半范数").build()
    logger.debug(f"已构造半范数 {seminorm.kind}")
    return seminorm
