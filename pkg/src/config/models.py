"""
models.py
配置数据模型定义（基于Pydantic）
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, ValidationInfo
from typing import List, Optional


class ArithmeticConfig(BaseModel):
    """精确算术配置"""
    # mag_compare 交叉乘方时允许的最大整数指数
    exponent_bound: int = Field(10**6, ge=1, le=10**9)


class PolyConfig(BaseModel):
    """多项式与不可约性证书配置"""
    irreducibility_max_degree: int = Field(8, ge=1, le=64)
    irreducibility_max_prime: int = Field(997, ge=2)
    # 枚举候选因子的数量上限，超过后改用 X^(p^i) - X 的 gcd 判定
    brute_force_limit: int = Field(200000, ge=1)


class LimitConfig(BaseModel):
    """极限估计配置"""
    window: int = Field(4, ge=1, le=64)
    max_n: int = Field(1024, ge=1, le=2**20)
    const_max_n: int = Field(32, ge=1, le=4096)


class CheckConfig(BaseModel):
    """公理检查配置"""
    pow_exponents: List[int] = [2, 3, 5]
    workers: int = Field(1, ge=1, le=64)
    sample_seed: int = 0
    sample_count: int = Field(20, ge=1, le=10000)

    @field_validator('pow_exponents')
    def exponents_at_least_two(cls, v: List[int]):
        if not v or any(n < 2 for n in v):
            raise ValueError('pow_exponents 必须非空且每个指数 >= 2')
        return v


class LoggingConfig(BaseModel):
    """日志配置"""
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    max_log_size: int = Field(10485760, ge=102400, le=1073741824)  # 100KB到1GB
    backup_count: int = Field(5, ge=1, le=100)
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @field_validator('log_level')
    def normalize_level(cls, v: str, info: ValidationInfo):
        return v.upper()


class AppConfig(BaseModel):
    """应用程序主配置"""
    model_config = ConfigDict(extra="ignore")

    version: str = "1.0.0"
    environment: str = "development"
    debug: bool = False

    arithmetic: ArithmeticConfig = Field(default_factory=ArithmeticConfig)
    poly: PolyConfig = Field(default_factory=PolyConfig)
    limits: LimitConfig = Field(default_factory=LimitConfig)
    check: CheckConfig = Field(default_factory=CheckConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
