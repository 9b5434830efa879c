"""
magnitude.py
p进赋值与乘法值群 ∏ p^ℚ ∪ {0} 的精确算术，以及范数与赋值之间的对应
"""

import math
import re
import logging
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Tuple, Union

import sympy

from src.config.manager import get_setting
from src.modules.exceptions import DomainError, InputError, ParseError, ResourceError

logger = logging.getLogger(__name__)

Rational = Fraction

DEFAULT_EXPONENT_BOUND = 10**6

_RATIONAL_RE = re.compile(r'^([+-]?\d+)(?:\s*/\s*([+-]?\d+))?$')


def parse_rational(text: str, position: int = None) -> Fraction:
    """
    解析 "n" 或 "n/d" 形式的有理数

    Args:
        text: 文本
        position: 出错时报告的位置

    Returns:
        约分后的 Fraction
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"无法解析的有理数: {text!r}", position)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"分母为零: {text!r}", position)
    return Fraction(num, den)


def to_rational(value: Union[int, str, Fraction]) -> Fraction:
    """把 int / str / Fraction 统一转换为 Fraction"""
    if isinstance(value, bool):
        raise InputError(f"不是有理数: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"不是有理数: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q)


def require_prime(p: Any) -> int:
    """p 必须是素数，否则抛出输入异常"""
    if isinstance(p, bool) or not isinstance(p, int) or not sympy.isprime(p):
        raise InputError(f"p 必须是素数: {p!r}")
    return p


class ValInfinity:
    """赋值的无穷值：加法吸收元，大于任何有理数"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ValInfinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = ValInfinity()

ValExp = Union[Fraction, ValInfinity]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Magnitude:
    """
    值群 ∏ p^ℚ ∪ {0} 的元素。

    zero 为 True 时表示 0；否则 factors 是按素数排序的 (p, e_p) 元组，
    不含零指数，空元组表示 1。所有范数取值都落在这里。
    """
    zero: bool = False
    factors: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_factors(cls, factors: Mapping[int, Any]) -> "Magnitude":
        """由 {素数: 指数} 构造，自动去掉零指数"""
        items = []
        for p, e in factors.items():
            require_prime(p)
            e = to_rational(e)
            if e != 0:
                items.append((p, e))
        return cls(False, tuple(sorted(items)))

    @classmethod
    def prime_power(cls, p: int, e: Any) -> "Magnitude":
        return cls.from_factors({p: e})

    @classmethod
    def from_rational(cls, q: Any) -> "Magnitude":
        """正有理数 q 作为值群元素（素因子分解）；q = 0 给出 ZERO"""
        q = to_rational(q)
        if q == 0:
            return ZERO
        if q < 0:
            raise DomainError(f"值群元素必须非负: {q}")
        exps: Dict[int, int] = {}
        for p, k in sympy.factorint(q.numerator).items():
            exps[int(p)] = exps.get(int(p), 0) + int(k)
        for p, k in sympy.factorint(q.denominator).items():
            exps[int(p)] = exps.get(int(p), 0) - int(k)
        return cls.from_factors(exps)

    @property
    def is_zero(self) -> bool:
        return self.zero

    def factor_map(self) -> Dict[int, Fraction]:
        return dict(self.factors)

    def support(self) -> frozenset:
        return frozenset(p for p, _ in self.factors)

    def as_rational(self):
        """所有指数为整数时返回精确有理值，否则返回 None"""
        if self.zero:
            return Fraction(0)
        value = Fraction(1)
        for p, e in self.factors:
            if e.denominator != 1:
                return None
            value *= Fraction(p) ** int(e)
        return value

    def __mul__(self, other):
        if not isinstance(other, Magnitude):
            return NotImplemented
        return mag_mul(self, other)

    def __truediv__(self, other):
        if not isinstance(other, Magnitude):
            return NotImplemented
        return mag_div(self, other)

    def __pow__(self, q):
        return mag_pow(self, q)

    def __lt__(self, other):
        if not isinstance(other, Magnitude):
            return NotImplemented
        return mag_compare(self, other) is Ordering.LESS

    def __le__(self, other):
        if not isinstance(other, Magnitude):
            return NotImplemented
        return mag_compare(self, other) is not Ordering.GREATER

    def __gt__(self, other):
        if not isinstance(other, Magnitude):
            return NotImplemented
        return mag_compare(self, other) is Ordering.GREATER

    def __ge__(self, other):
        if not isinstance(other, Magnitude):
            return NotImplemented
        return mag_compare(self, other) is not Ordering.LESS

    def __float__(self):
        return mag_to_float(self)

    def __str__(self):
        if self.zero:
            return "0"
        if not self.factors:
            return "1"
        return "·".join(f"{p}^({e})" if e.denominator != 1 else f"{p}^{e}"
                        for p, e in self.factors)


ZERO = Magnitude(zero=True)
ONE = Magnitude()


def vp(x: Any, p: int) -> ValExp:
    """
    有理数的 p 进赋值，v_p(r/s) = v_p(r) - v_p(s)，v_p(0) = INFINITY

    Args:
        x: 有理数
        p: 素数

    Returns:
        精确赋值
    """
    require_prime(p)
    x = to_rational(x)
    if x == 0:
        return INFINITY
    return Fraction(int(sympy.multiplicity(p, abs(x.numerator)))
                    - int(sympy.multiplicity(p, x.denominator)))


def padic_magnitude(x: Any, p: int) -> Magnitude:
    """|x|_p = p^(-v_p(x))"""
    v = vp(x, p)
    if v is INFINITY:
        return ZERO
    return Magnitude.prime_power(p, -v)


def mag_mul(a: Magnitude, b: Magnitude) -> Magnitude:
    if a.zero or b.zero:
        return ZERO
    exps = a.factor_map()
    for p, e in b.factors:
        exps[p] = exps.get(p, 0) + e
    return Magnitude(False, tuple(sorted((p, e) for p, e in exps.items() if e != 0)))


def mag_div(a: Magnitude, b: Magnitude) -> Magnitude:
    if b.zero:
        raise DomainError("除以零值")
    if a.zero:
        return ZERO
    return mag_mul(a, mag_pow(b, -1))


def mag_pow(m: Magnitude, q: Any) -> Magnitude:
    """指数整体乘以 q；ZERO 只允许 q > 0"""
    q = to_rational(q)
    if m.zero:
        if q <= 0:
            raise DomainError(f"ZERO 的 {q} 次幂无定义")
        return ZERO
    if q == 0:
        return ONE
    return Magnitude(False, tuple((p, e * q) for p, e in m.factors))


def mag_compare(a: Magnitude, b: Magnitude, bound: int = None) -> Ordering:
    """
    精确全序比较。

    对非零的 a, b 取 a/b 的指数，乘以所有分母的最小公倍数 N 化为整数，
    再比较正指数部分与负指数部分两个大整数乘积。

    Args:
        a, b: 待比较的值
        bound: 整数指数上限，默认读取配置 arithmetic.exponent_bound

    Returns:
        Ordering
    """
    if a.zero or b.zero:
        if a.zero and b.zero:
            return Ordering.EQUAL
        return Ordering.LESS if a.zero else Ordering.GREATER
    if a == b:
        return Ordering.EQUAL

    if bound is None:
        bound = get_setting('arithmetic.exponent_bound', DEFAULT_EXPONENT_BOUND)

    diff = mag_div(a, b).factors
    n = math.lcm(*(e.denominator for _, e in diff))
    lhs, rhs = 1, 1
    for p, e in diff:
        k = int(e * n)
        if abs(k) > bound:
            raise ResourceError(f"比较 {a} 与 {b} 需要指数 {abs(k)}，超过上限 {bound}")
        if k > 0:
            lhs *= p ** k
        else:
            rhs *= p ** (-k)
    logger.debug(f"交叉乘方比较: N={n}, 位数 {lhs.bit_length()} / {rhs.bit_length()}")
    if lhs > rhs:
        return Ordering.GREATER
    if lhs < rhs:
        return Ordering.LESS
    return Ordering.EQUAL


def mag_max(values: Iterable[Magnitude]) -> Magnitude:
    """最大值；空序列返回 ZERO（所有值都 >= ZERO）"""
    best = ZERO
    for m in values:
        if mag_compare(m, best) is Ordering.GREATER:
            best = m
    return best


def magnitude_of_valuation(v: ValExp, p: int) -> Magnitude:
    """赋值 → 范数：v ↦ p^(-v)，INFINITY ↦ ZERO"""
    require_prime(p)
    if v is INFINITY:
        return ZERO
    return Magnitude.prime_power(p, -to_rational(v))


def valuation_of_magnitude(m: Magnitude, p: int) -> ValExp:
    """范数 → 赋值，要求 m 只支撑在素数 p 上"""
    require_prime(p)
    if m.zero:
        return INFINITY
    if not m.support() <= {p}:
        raise DomainError(f"{m} 不是单一素数 {p} 的幂")
    return -m.factor_map().get(p, Fraction(0))


def mag_to_float(m: Magnitude) -> float:
    """exp(Σ e_p ln p)；指数过大时按对数的符号溢出为 inf 或下溢为 0.0"""
    if m.zero:
        return 0.0
    try:
        return math.exp(math.fsum(float(e) * math.log(p) for p, e in m.factors))
    except OverflowError:
        pass
    # 指数本身超出浮点范围：按最大指数缩放后只看对数的符号
    scale = max(abs(e) for _, e in m.factors)
    sign = math.fsum(float(e / scale) * math.log(p) for p, e in m.factors)
    if sign == 0:
        logger.warning(f"{m} 的浮点近似无法确定，返回 1.0")
        return 1.0
    return math.inf if sign > 0 else 0.0


def magnitude_to_json(m: Magnitude) -> Dict[str, Any]:
    if m.zero:
        return {"zero": True}
    return {"factors": {str(p): format_rational(e) for p, e in m.factors}}


def magnitude_from_json(obj: Any) -> Magnitude:
    """
    解析 {"zero": true} / {"factors": {...}}；为方便取值表，也接受非负有理数字符串
    """
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        return Magnitude.from_rational(obj)
    if not isinstance(obj, dict):
        raise ParseError(f"无法解析的 Magnitude: {obj!r}")
    if obj.get("zero") is True:
        return ZERO
    factors = obj.get("factors")
    if not isinstance(factors, dict):
        raise ParseError(f"无法解析的 Magnitude: {obj!r}")
    try:
        return Magnitude.from_factors({int(p): parse_rational(str(e)) for p, e in factors.items()})
    except ValueError as e:
        raise ParseError(f"无法解析的素数键: {e}")


def valexp_to_json(v: ValExp) -> str:
    return "inf" if v is INFINITY else format_rational(v)


def valexp_from_json(text: str) -> ValExp:
    if text.strip() == "inf":
        return INFINITY
    return parse_rational(text)
