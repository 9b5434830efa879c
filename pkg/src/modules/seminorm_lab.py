"""
seminorm_lab.py
半范数的三种光滑化构造，以及把定义和定理结论变成可执行判定的公理检查器
"""

import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.config.manager import get_setting
from src.modules.exceptions import DomainError, InputError, ParseError, PreconditionError, ValidationError
from src.modules.extension import (
    Automorphism, ExtensionField, FieldElement, alg_norm_of_galois, apply_automorphism,
    basis_norm, elem_pow, spectral_norm,
)
from src.modules.magnitude import (
    INFINITY, Magnitude, ONE, ZERO, Ordering,
    format_rational, mag_compare, mag_max, mag_pow, mag_to_float, magnitude_to_json,
    padic_magnitude, require_prime, to_rational, valuation_of_magnitude,
)
from src.modules.poly import parse_polynomial

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 载体：ℚ、扩张 L、有限环 ℤ/n
# ---------------------------------------------------------------------------

class Carrier(ABC):
    """半范数的定义域，只提供环运算，与范数解耦"""
    name = "carrier"
    finite = False

    @abstractmethod
    def add(self, x, y): ...

    @abstractmethod
    def mul(self, x, y): ...

    @abstractmethod
    def neg(self, x): ...

    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def embed(self, q: Fraction): ...

    @abstractmethod
    def parse(self, value: Any): ...

    @abstractmethod
    def to_json(self, x) -> Any: ...

    def pow(self, x, n: int):
        result = self.one()
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, x) -> bool:
        return x == self.zero()

    def rational_shadow(self, x) -> Optional[Fraction]:
        """元素的有理部分；有限环没有"""
        return None

    def elements(self) -> List[Any]:
        raise DomainError(f"{self.name} 不是有限载体")


class RationalCarrier(Carrier):
    name = "rational"

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def pow(self, x, n: int):
        return x ** n

    def embed(self, q: Fraction):
        return to_rational(q)

    def parse(self, value: Any):
        if isinstance(value, (int, str, Fraction)) and not isinstance(value, bool):
            return to_rational(value)
        raise ParseError(f"无法解析的有理数样本: {value!r}")

    def to_json(self, x) -> Any:
        return format_rational(x)

    def rational_shadow(self, x) -> Optional[Fraction]:
        return x

    def __eq__(self, other):
        return isinstance(other, RationalCarrier)

    def __hash__(self):
        return hash(self.name)


class ExtensionCarrier(Carrier):
    name = "extension"

    def __init__(self, ext: ExtensionField):
        self.ext = ext

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def zero(self):
        return self.ext.zero()

    def one(self):
        return self.ext.one()

    def pow(self, x, n: int):
        return elem_pow(x, n)

    def embed(self, q: Fraction):
        return self.ext.embed(q)

    def parse(self, value: Any):
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, str):
            return self.ext.from_poly(parse_polynomial(value))
        if isinstance(value, (list, tuple)):
            try:
                return self.ext.element(to_rational(v) for v in value)
            except InputError as e:
                raise ParseError(f"无法解析的扩张元素: {value!r}: {e}")
        if isinstance(value, int) and not isinstance(value, bool):
            return self.ext.embed(value)
        raise ParseError(f"无法解析的扩张元素: {value!r}")

    def to_json(self, x) -> Any:
        return x.to_json()

    def rational_shadow(self, x) -> Optional[Fraction]:
        return x.coords[0]

    def __eq__(self, other):
        return isinstance(other, ExtensionCarrier) and other.ext == self.ext

    def __hash__(self):
        return hash((self.name, self.ext))


class ResidueCarrier(Carrier):
    """ℤ/n"""
    name = "residue"
    finite = True

    def __init__(self, n: int):
        if n < 2:
            raise InputError(f"模数必须 >= 2: {n}")
        self.n = n

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def embed(self, q: Fraction):
        q = to_rational(q)
        if q.denominator != 1:
            raise InputError(f"{q} 不能嵌入 ℤ/{self.n}")
        return int(q) % self.n

    def parse(self, value: Any):
        try:
            return int(value) % self.n
        except (TypeError, ValueError):
            raise ParseError(f"无法解析的剩余类: {value!r}")

    def to_json(self, x) -> Any:
        return x

    def elements(self) -> List[int]:
        return list(range(self.n))

    def __eq__(self, other):
        return isinstance(other, ResidueCarrier) and other.n == self.n

    def __hash__(self):
        return hash((self.name, self.n))


# ---------------------------------------------------------------------------
# 半范数
# ---------------------------------------------------------------------------

class Seminorm(ABC):
    """
    可求值的半范数。prime 用于 EXTENDS / VALUATION 检查，
    multiplicative 表示理论上已知可乘（用于 seminorm_from_bounded 的闭式）。
    """
    kind = "seminorm"
    carrier: Carrier
    prime: Optional[int] = None
    multiplicative = False

    @abstractmethod
    def evaluate(self, x) -> Magnitude:
        ...

    def evaluate_power(self, x, n: int) -> Magnitude:
        """f(x^n)"""
        return self.evaluate(self.carrier.pow(x, n))

    def __call__(self, x) -> Magnitude:
        return self.evaluate(x)

    @abstractmethod
    def to_json(self) -> dict:
        ...


class PadicSeminorm(Seminorm):
    kind = "padic"
    multiplicative = True

    def __init__(self, p: int):
        self.prime = require_prime(p)
        self.carrier = RationalCarrier()

    def evaluate(self, x) -> Magnitude:
        return padic_magnitude(x, self.prime)

    def evaluate_power(self, x, n: int) -> Magnitude:
        # |x^n|_p = |x|_p^n 在 ℚ 上精确成立，避免构造巨大的分子分母
        return mag_pow(padic_magnitude(x, self.prime), n)

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.prime}


class ScaledSeminorm(Seminorm):
    """x ↦ c·|x|_p"""
    kind = "scaled"

    def __init__(self, c: Any, p: int):
        self.c = to_rational(c)
        if self.c <= 0:
            raise ValidationError(f"缩放常数必须为正: {self.c}")
        self.prime = require_prime(p)
        self.carrier = RationalCarrier()
        self._scale = Magnitude.from_rational(self.c)
        self.multiplicative = self.c == 1

    def evaluate(self, x) -> Magnitude:
        return self._scale * padic_magnitude(x, self.prime)

    def evaluate_power(self, x, n: int) -> Magnitude:
        return self._scale * mag_pow(padic_magnitude(x, self.prime), n)

    def to_json(self) -> dict:
        return {"kind": self.kind, "c": format_rational(self.c), "p": self.prime}


class MaxPowSeminorm(Seminorm):
    """
    x ↦ max(|x|_p, |x|_p^k)：|x| <= 1 时取 |x|，否则取 |x|^k。
    幂乘但不可乘。
    """
    kind = "max_pow"

    def __init__(self, p: int, k: int):
        self.prime = require_prime(p)
        if isinstance(k, bool) or not isinstance(k, int) or k < 2:
            raise ValidationError(f"k 必须是 >= 2 的整数: {k!r}")
        self.k = k
        self.carrier = RationalCarrier()

    def _branch(self, m: Magnitude) -> Magnitude:
        return m if m <= ONE else mag_pow(m, self.k)

    def evaluate(self, x) -> Magnitude:
        return self._branch(padic_magnitude(x, self.prime))

    def evaluate_power(self, x, n: int) -> Magnitude:
        return self._branch(mag_pow(padic_magnitude(x, self.prime), n))

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.prime, "k": self.k}


class BasisSeminorm(Seminorm):
    """幂基范数 ‖Σ a_i α^i‖ = max |a_i|_p"""
    kind = "basis"

    def __init__(self, ext: ExtensionField):
        self.ext = ext
        self.prime = ext.p
        self.carrier = ExtensionCarrier(ext)

    def evaluate(self, x) -> Magnitude:
        return basis_norm(x)

    def to_json(self) -> dict:
        return {"kind": self.kind, "ext": self.ext.to_json()}


class SpectralSeminorm(Seminorm):
    kind = "spectral"
    multiplicative = True

    def __init__(self, ext: ExtensionField):
        self.ext = ext
        self.prime = ext.p
        self.carrier = ExtensionCarrier(ext)

    def evaluate(self, x) -> Magnitude:
        return spectral_norm(x)

    def to_json(self) -> dict:
        return {"kind": self.kind, "ext": self.ext.to_json()}


class TableSeminorm(Seminorm):
    """ℤ/n 上由取值表给出的函数，要求 f(0) = 0 且 f(-x) = f(x)"""
    kind = "table"

    def __init__(self, n: int, values: Mapping[int, Magnitude]):
        self.carrier = ResidueCarrier(n)
        self.n = n
        table = {int(r) % n: v for r, v in values.items()}
        missing = [r for r in range(n) if r not in table]
        if missing:
            raise ValidationError(f"取值表缺少剩余类: {missing}")
        if table[0] != ZERO:
            raise ValidationError(f"取值表要求 f(0) = 0，实际为 {table[0]}")
        for r in range(n):
            if table[r] != table[(-r) % n]:
                raise ValidationError(f"取值表要求 f(-x) = f(x)，x = {r} 处不成立")
        self.values = table

    def evaluate(self, x) -> Magnitude:
        return self.values[int(x) % self.n]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "values": {str(r): magnitude_to_json(v) for r, v in sorted(self.values.items())},
        }


class GaloisSupSeminorm(Seminorm):
    """|x|_G = max_σ ‖σ(x)‖，内层半范数定义在同一扩张上"""
    kind = "galois"

    def __init__(self, inner: Seminorm, auts: Sequence[Automorphism]):
        if not isinstance(inner.carrier, ExtensionCarrier):
            raise InputError("Galois 上确界需要定义在扩张上的内层半范数")
        if not auts:
            raise InputError("自同构列表为空")
        for sigma in auts:
            if sigma.parent != inner.carrier.ext:
                raise InputError("自同构与内层半范数属于不同的扩张")
        self.inner = inner
        self.auts = list(auts)
        self.prime = inner.prime
        self.carrier = inner.carrier

    def evaluate(self, x) -> Magnitude:
        return alg_norm_of_galois(self.inner, self.auts, x)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "inner": self.inner.to_json(),
            "auts": [",".join(sigma.to_json()) for sigma in self.auts],
        }


# ---------------------------------------------------------------------------
# 比较工具
# ---------------------------------------------------------------------------

def mag_min(values: Iterable[Magnitude]) -> Magnitude:
    best = None
    for m in values:
        if best is None or mag_compare(m, best) is Ordering.LESS:
            best = m
    if best is None:
        raise InputError("空序列没有最小值")
    return best


def le_sum(c: Magnitude, a: Magnitude, b: Magnitude) -> bool:
    """
    判断 c <= a + b。值群对加法不封闭：先试 c <= max(a, b)，
    再在三者都是有理数时精确比较，最后退回浮点。
    """
    if c <= mag_max([a, b]):
        return True
    ra, rb, rc = a.as_rational(), b.as_rational(), c.as_rational()
    if ra is not None and rb is not None and rc is not None:
        return rc <= ra + rb
    fa, fb, fc = mag_to_float(a), mag_to_float(b), mag_to_float(c)
    logger.warning(f"次可加性改用浮点比较: {c} <= {a} + {b}")
    return fc <= (fa + fb) * (1 + 1e-12)


def _warn_unit_bound(f: Seminorm) -> None:
    value = f.evaluate(f.carrier.one())
    if value > ONE:
        logger.warning(f"f(1) = {value} > 1，光滑化的极限不一定是半范数")


def _require_positive(n: Any, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"{name} 必须是正整数: {n!r}")
    return n


# ---------------------------------------------------------------------------
# 第一步光滑化：seminorm_from_bounded
# ---------------------------------------------------------------------------

def check_bounded_hypotheses(f: Seminorm) -> None:
    """
    在有限载体上穷举验证 f(0) = 0、f(-x) = f(x)、存在 c 使 f(xy) <= c f(x) f(y)、
    次可加性。不成立时抛出 PreconditionError，消息写明假设，witness 为反例。
    """
    carrier = f.carrier
    elems = carrier.elements()
    values = {x: f.evaluate(x) for x in elems}

    if values[carrier.zero()] != ZERO:
        raise PreconditionError("f(0) = 0 不成立", witness=carrier.zero())
    for x in elems:
        if values[carrier.neg(x)] != values[x]:
            raise PreconditionError("f(-x) = f(x) 不成立", witness=x)
    for x in elems:
        for y in elems:
            if (values[x].is_zero or values[y].is_zero) and not values[carrier.mul(x, y)].is_zero:
                raise PreconditionError("有界乘性 f(xy) <= c·f(x)·f(y) 不成立", witness=(x, y))
    for x in elems:
        for y in elems:
            if not le_sum(values[carrier.add(x, y)], values[x], values[y]):
                raise PreconditionError("次可加性 f(x+y) <= f(x) + f(y) 不成立", witness=(x, y))


def _from_bounded_value(f: Seminorm, x, elems: Sequence, values: Mapping) -> Magnitude:
    carrier = f.carrier
    ratios = []
    for y in elems:
        fy = values[y]
        # f(y) = 0 时比值按约定为 0
        ratios.append(ZERO if fy.is_zero else values[carrier.mul(x, y)] / fy)
    return mag_max(ratios)


def seminorm_from_bounded(f: Seminorm, x) -> Magnitude:
    """
    x ↦ sup_y f(xy)/f(y)

    可乘的 f 在任何载体上直接返回 f(x)；否则只支持有限载体上的穷举上确界，
    计算前先穷举验证全部假设。

    Args:
        f: 半范数
        x: 载体元素

    Returns:
        精确的 Magnitude
    """
    carrier = f.carrier
    x = carrier.parse(x)
    if f.multiplicative:
        return f.evaluate(x)
    if not carrier.finite:
        raise DomainError(f"{f.kind} 在无限载体上的上确界不可计算")
    check_bounded_hypotheses(f)
    elems = carrier.elements()
    values = {y: f.evaluate(y) for y in elems}
    return _from_bounded_value(f, x, elems, values)


def seminorm_from_bounded_table(f: Seminorm) -> TableSeminorm:
    """有限载体上整个输出半范数，作为取值表返回"""
    carrier = f.carrier
    if not isinstance(carrier, ResidueCarrier):
        raise DomainError("只有 ℤ/n 上的取值表可以整体计算")
    check_bounded_hypotheses(f)
    elems = carrier.elements()
    values = {y: f.evaluate(y) for y in elems}
    table = {x: _from_bounded_value(f, x, elems, values) for x in elems}
    logger.debug(f"seminorm_from_bounded 输出表: { {x: str(v) for x, v in table.items()} }")
    return TableSeminorm(carrier.n, table)


# ---------------------------------------------------------------------------
# 第二步光滑化：smoothing，以及 seminorm_from_const
# ---------------------------------------------------------------------------

@dataclass
class LimitEstimate:
    """
    序列极限的估计。stabilized 为真时 last_term 就是精确极限，
    否则只断言浮点区间 float_bracket：上端是已算项的下确界；
    只有末三项恰好符合 L·c^(1/n) 时下端才外推，否则下端等于上端。
    """
    terms_evaluated: int
    last_term: Magnitude
    stabilized: bool
    float_bracket: Tuple[float, float]
    infimum: Magnitude
    schedule: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def limit(self) -> Optional[Magnitude]:
        return self.last_term if self.stabilized else None

    def to_json(self) -> dict:
        return {
            "terms_evaluated": self.terms_evaluated,
            "last_term": magnitude_to_json(self.last_term),
            "stabilized": self.stabilized,
            "float_bracket": list(self.float_bracket),
            "infimum": magnitude_to_json(self.infimum),
            "schedule": list(self.schedule),
        }


def _summarize(schedule: Sequence[int], terms: Sequence[Magnitude], window: int) -> LimitEstimate:
    window = _require_positive(window, "window")
    infimum = mag_min(terms)
    last = terms[-1]
    stabilized = len(terms) >= window and all(t == last for t in terms[-window:])

    high = mag_to_float(infimum)
    if stabilized:
        low = mag_to_float(last)
    else:
        # 对形如 L·c^(1/n) 的序列，t_n² / t_(n/2) 恰为 L；用 t_(n/4) 复核形状
        by_n = dict(zip(schedule, terms))
        half = by_n.get(schedule[-1] // 2)
        quarter = by_n.get(schedule[-1] // 4)
        low = high
        if half is not None and quarter is not None and not half.is_zero and not quarter.is_zero:
            limit = mag_pow(last, 2) / half
            if limit == mag_pow(half, 2) / quarter:
                low = mag_to_float(mag_min([infimum, limit]))
    return LimitEstimate(
        terms_evaluated=len(terms),
        last_term=last,
        stabilized=stabilized,
        float_bracket=(min(low, high), max(low, high)),
        infimum=infimum,
        schedule=tuple(schedule),
    )


def smoothing_term(f: Seminorm, x, n: int) -> Magnitude:
    """f(x^n)^(1/n)"""
    n = _require_positive(n)
    _warn_unit_bound(f)
    return mag_pow(f.evaluate_power(f.carrier.parse(x), n), Fraction(1, n))


def doubling_schedule(max_n: int) -> List[int]:
    max_n = _require_positive(max_n, "max_n")
    schedule = [1]
    while schedule[-1] * 2 <= max_n:
        schedule.append(schedule[-1] * 2)
    return schedule


def smoothing_estimate(f: Seminorm, x, max_n: int = None, window: int = None) -> LimitEstimate:
    """
    在 n = 1, 2, 4, …, max_n 处计算 f(x^n)^(1/n)，报告下确界、是否稳定与浮点区间

    Args:
        f: 满足 f(1) <= 1 的半范数
        x: 载体元素
        max_n: 最大的 n，默认读取 limits.max_n
        window: 稳定窗口，默认读取 limits.window

    Returns:
        LimitEstimate
    """
    if max_n is None:
        max_n = get_setting('limits.max_n', 1024)
    if window is None:
        window = get_setting('limits.window', 4)
    _warn_unit_bound(f)
    x = f.carrier.parse(x)
    schedule = doubling_schedule(max_n)
    terms = [mag_pow(f.evaluate_power(x, n), Fraction(1, n)) for n in schedule]
    estimate = _summarize(schedule, terms, window)
    logger.debug(f"smoothing {f.kind}: {len(terms)} 项, 稳定={estimate.stabilized}")
    return estimate


def check_power_multiplicative(f: Seminorm, samples: Sequence, exponents: Sequence[int] = None) -> None:
    """在样本上检查 f(x^n) = f(x)^n，不成立时抛出 PreconditionError"""
    if exponents is None:
        exponents = get_setting('check.pow_exponents', [2, 3, 5])
    verdict = _check_pow_mul(f, samples, exponents)
    if not verdict.passed:
        raise PreconditionError(f"f 不是幂乘的: {verdict.detail}", witness=verdict.witness)


def _const_term(f: Seminorm, y, x, n: int, fy: Magnitude) -> Magnitude:
    carrier = f.carrier
    return f.evaluate(carrier.mul(x, carrier.pow(y, n))) / mag_pow(fy, n)


def _const_prepare(f: Seminorm, y, x):
    y, x = f.carrier.parse(y), f.carrier.parse(x)
    fy = f.evaluate(y)
    if fy.is_zero:
        raise DomainError(f"需要 f(y) ≠ 0，y = {y}")
    check_power_multiplicative(f, [y, x])
    return y, x, fy


def seminorm_from_const_term(f: Seminorm, y, x, n: int) -> Magnitude:
    """f(x·y^n) / f(y)^n"""
    n = _require_positive(n)
    y, x, fy = _const_prepare(f, y, x)
    return _const_term(f, y, x, n, fy)


def seminorm_from_const_estimate(f: Seminorm, y, x, max_n: int = None, window: int = None) -> LimitEstimate:
    """
    在 n = 1..max_n 处计算 f(x·y^n)/f(y)^n，逐项断言序列单调不增

    Args:
        f: 幂乘且 f(1) <= 1 的半范数
        y: f(y) ≠ 0 的元素
        x: 求值点
        max_n: 默认读取 limits.const_max_n
        window: 默认读取 limits.window

    Returns:
        LimitEstimate
    """
    if max_n is None:
        max_n = get_setting('limits.const_max_n', 32)
    if window is None:
        window = get_setting('limits.window', 4)
    max_n = _require_positive(max_n, "max_n")
    y, x, fy = _const_prepare(f, y, x)
    schedule = list(range(1, max_n + 1))
    terms: List[Magnitude] = []
    for n in schedule:
        term = _const_term(f, y, x, n, fy)
        if terms and term > terms[-1]:
            raise PreconditionError(f"序列在 n = {n} 处上升: {terms[-1]} -> {term}", witness=n)
        terms.append(term)
    return _summarize(schedule, terms, window)


# ---------------------------------------------------------------------------
# 公理检查
# ---------------------------------------------------------------------------

class Axiom(str, Enum):
    SEMINORM = "SEMINORM"
    NORM = "NORM"
    NONARCH = "NONARCH"
    POW_MUL = "POW_MUL"
    MULT = "MULT"
    EXTENDS = "EXTENDS"
    BOUNDED_MULT = "BOUNDED_MULT"
    ISOMETRY = "ISOMETRY"
    UNIT_BOUND = "UNIT_BOUND"
    BOUNDED_BY_SPECTRAL = "BOUNDED_BY_SPECTRAL"
    VALUATION = "VALUATION"


@dataclass
class AxiomVerdict:
    axiom: Axiom
    passed: bool
    witness: Any = None
    detail: str = ""
    constant: Optional[Magnitude] = None


@dataclass
class AxiomReport:
    verdicts: List[AxiomVerdict]
    sample_count: int

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def verdict(self, axiom: Axiom) -> AxiomVerdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    def to_json(self, carrier: Carrier) -> dict:
        def encode(w):
            if isinstance(w, tuple):
                return [encode(part) for part in w]
            if isinstance(w, (FieldElement, Fraction)) or (isinstance(w, int) and carrier.finite):
                return carrier.to_json(w)
            return w

        out = {}
        for v in self.verdicts:
            entry: Dict[str, Any] = {"passed": v.passed}
            if v.witness is not None:
                entry["witness"] = encode(v.witness)
            if v.detail:
                entry["detail"] = v.detail
            if v.constant is not None:
                entry["constant"] = magnitude_to_json(v.constant)
            out[v.axiom.value] = entry
        return {"passed": self.passed, "samples": self.sample_count, "axioms": out}


PairPredicate = Callable[[Any, Any], Optional[str]]


def _first_pair_failure(samples: Sequence, predicate: PairPredicate, workers: int):
    """按样本顺序返回第一个不满足的 (x, y, 说明)；可按 x 分片到线程池"""
    def scan(x):
        for y in samples:
            detail = predicate(x, y)
            if detail is not None:
                return (x, y, detail)
        return None

    if workers > 1 and len(samples) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, samples))
    else:
        results = []
        for x in samples:
            results.append(scan(x))
            if results[-1] is not None:
                break
    for r in results:
        if r is not None:
            return r
    return None


def _pair_verdict(axiom: Axiom, samples, predicate: PairPredicate, workers: int) -> AxiomVerdict:
    failure = _first_pair_failure(samples, predicate, workers)
    if failure is None:
        return AxiomVerdict(axiom, True)
    x, y, detail = failure
    return AxiomVerdict(axiom, False, witness=(x, y), detail=detail)


def _check_seminorm(f: Seminorm, samples, workers: int) -> AxiomVerdict:
    c = f.carrier
    f0 = f.evaluate(c.zero())
    if f0 != ZERO:
        return AxiomVerdict(Axiom.SEMINORM, False, witness=c.zero(), detail=f"f(0) = {f0}")
    for x in samples:
        if f.evaluate(c.neg(x)) != f.evaluate(x):
            return AxiomVerdict(Axiom.SEMINORM, False, witness=x, detail="f(-x) ≠ f(x)")

    def add_le(x, y):
        if not le_sum(f.evaluate(c.add(x, y)), f.evaluate(x), f.evaluate(y)):
            return "f(x+y) > f(x) + f(y)"
        return None

    def mul_le(x, y):
        lhs, rhs = f.evaluate(c.mul(x, y)), f.evaluate(x) * f.evaluate(y)
        if lhs > rhs:
            return f"f(xy) = {lhs} > f(x)f(y) = {rhs}"
        return None

    verdict = _pair_verdict(Axiom.SEMINORM, samples, add_le, workers)
    if not verdict.passed:
        return verdict
    return _pair_verdict(Axiom.SEMINORM, samples, mul_le, workers)


def _check_norm(f: Seminorm, samples, workers: int) -> AxiomVerdict:
    verdict = _check_seminorm(f, samples, workers)
    if not verdict.passed:
        return AxiomVerdict(Axiom.NORM, False, verdict.witness, verdict.detail)
    for x in samples:
        if f.evaluate(x).is_zero and not f.carrier.is_zero(x):
            return AxiomVerdict(Axiom.NORM, False, witness=x, detail="f(x) = 0 但 x ≠ 0")
    return AxiomVerdict(Axiom.NORM, True)


def _check_nonarch(f: Seminorm, samples, workers: int) -> AxiomVerdict:
    c = f.carrier

    def strong(x, y):
        lhs = f.evaluate(c.add(x, y))
        rhs = mag_max([f.evaluate(x), f.evaluate(y)])
        if lhs > rhs:
            return f"f(x+y) = {lhs} > max = {rhs}"
        return None

    return _pair_verdict(Axiom.NONARCH, samples, strong, workers)


def _check_pow_mul(f: Seminorm, samples, exponents) -> AxiomVerdict:
    for x in samples:
        fx = f.evaluate(x)
        for n in exponents:
            lhs = f.evaluate(f.carrier.pow(x, n))
            rhs = ZERO if fx.is_zero else mag_pow(fx, n)
            if lhs != rhs:
                return AxiomVerdict(Axiom.POW_MUL, False, witness=(x, n),
                                    detail=f"f(x^{n}) = {lhs} ≠ f(x)^{n} = {rhs}")
    return AxiomVerdict(Axiom.POW_MUL, True)


def _check_mult(f: Seminorm, samples, workers: int) -> AxiomVerdict:
    c = f.carrier

    def mult(x, y):
        lhs, rhs = f.evaluate(c.mul(x, y)), f.evaluate(x) * f.evaluate(y)
        if lhs != rhs:
            return f"f(xy) = {lhs} ≠ f(x)f(y) = {rhs}"
        return None

    return _pair_verdict(Axiom.MULT, samples, mult, workers)


def _check_extends(f: Seminorm, samples) -> AxiomVerdict:
    if f.prime is None or f.carrier.finite:
        raise InputError(f"{f.kind} 半范数不能检查 EXTENDS")
    for x in samples:
        q = f.carrier.rational_shadow(x)
        lhs, rhs = f.evaluate(f.carrier.embed(q)), padic_magnitude(q, f.prime)
        if lhs != rhs:
            return AxiomVerdict(Axiom.EXTENDS, False, witness=q, detail=f"f(q) = {lhs} ≠ |q|_p = {rhs}")
    return AxiomVerdict(Axiom.EXTENDS, True)


def _check_bounded_mult(f: Seminorm, samples) -> AxiomVerdict:
    c = f.carrier
    constant = ZERO
    for x in samples:
        for y in samples:
            lhs, rhs = f.evaluate(c.mul(x, y)), f.evaluate(x) * f.evaluate(y)
            if rhs.is_zero:
                if not lhs.is_zero:
                    return AxiomVerdict(Axiom.BOUNDED_MULT, False, witness=(x, y),
                                        detail="f(x)f(y) = 0 但 f(xy) ≠ 0")
                continue
            constant = mag_max([constant, lhs / rhs])
    return AxiomVerdict(Axiom.BOUNDED_MULT, True, constant=constant)


def _check_isometry(f: Seminorm, samples, auts: Sequence[Automorphism]) -> AxiomVerdict:
    if not isinstance(f.carrier, ExtensionCarrier):
        raise InputError("ISOMETRY 需要定义在扩张上的半范数")
    if not auts:
        raise InputError("ISOMETRY 需要至少一个已验证的自同构")
    for index, sigma in enumerate(auts):
        if sigma.parent != f.carrier.ext:
            raise InputError("自同构与半范数属于不同的扩张")
        for x in samples:
            lhs, rhs = f.evaluate(apply_automorphism(sigma, x)), f.evaluate(x)
            if lhs != rhs:
                return AxiomVerdict(Axiom.ISOMETRY, False, witness=(index, x),
                                    detail=f"f(σ(x)) = {lhs} ≠ f(x) = {rhs}")
    return AxiomVerdict(Axiom.ISOMETRY, True)


def _check_unit_bound(f: Seminorm) -> AxiomVerdict:
    value = f.evaluate(f.carrier.one())
    if value > ONE:
        return AxiomVerdict(Axiom.UNIT_BOUND, False, witness=f.carrier.one(), detail=f"f(1) = {value}")
    return AxiomVerdict(Axiom.UNIT_BOUND, True)


def _check_bounded_by_spectral(f: Seminorm, samples) -> AxiomVerdict:
    if not isinstance(f.carrier, ExtensionCarrier):
        raise InputError("BOUNDED_BY_SPECTRAL 需要定义在扩张上的半范数")
    for x in samples:
        lhs, rhs = f.evaluate(x), spectral_norm(x)
        if lhs > rhs:
            return AxiomVerdict(Axiom.BOUNDED_BY_SPECTRAL, False, witness=x,
                                detail=f"f(x) = {lhs} > |x|_sp = {rhs}")
    return AxiomVerdict(Axiom.BOUNDED_BY_SPECTRAL, True)


def _check_valuation(f: Seminorm, samples, workers: int) -> AxiomVerdict:
    if f.prime is None:
        raise InputError(f"{f.kind} 半范数没有对应的素数，不能检查 VALUATION")
    c, p = f.carrier, f.prime

    def v(x):
        return valuation_of_magnitude(f.evaluate(x), p)

    try:
        if v(c.zero()) is not INFINITY:
            return AxiomVerdict(Axiom.VALUATION, False, witness=c.zero(), detail="v(0) ≠ ∞")
        if v(c.one()) != 0:
            return AxiomVerdict(Axiom.VALUATION, False, witness=c.one(), detail="v(1) ≠ 0")

        def axioms(x, y):
            if v(c.mul(x, y)) != v(x) + v(y):
                return "v(xy) ≠ v(x) + v(y)"
            if v(c.add(x, y)) < min(v(x), v(y)):
                return "v(x+y) < min(v(x), v(y))"
            return None

        return _pair_verdict(Axiom.VALUATION, samples, axioms, workers)
    except DomainError as e:
        return AxiomVerdict(Axiom.VALUATION, False, detail=str(e))


def check_axioms(f: Seminorm, samples: Sequence, profile: Iterable[Any],
                 automorphisms: Sequence[Automorphism] = (), workers: int = None) -> AxiomReport:
    """
    按 profile 逐条检查公理，每条给出 PASS 或带精确值的反例

    Args:
        f: 半范数
        samples: 非空的载体元素列表（也接受可解析的文本/JSON 值）
        profile: Axiom 或其名称
        automorphisms: ISOMETRY 使用的自同构
        workers: 成对检查的线程数，默认读取 check.workers

    Returns:
        AxiomReport
    """
    samples = [f.carrier.parse(s) for s in samples]
    if not samples:
        raise InputError("样本列表为空")
    if workers is None:
        workers = get_setting('check.workers', 1)
    exponents = get_setting('check.pow_exponents', [2, 3, 5])
    try:
        axioms = [Axiom(a) if not isinstance(a, Axiom) else a for a in profile]
    except ValueError as e:
        raise InputError(f"未知的公理: {e}")

    verdicts = []
    for axiom in axioms:
        if axiom is Axiom.SEMINORM:
            verdicts.append(_check_seminorm(f, samples, workers))
        elif axiom is Axiom.NORM:
            verdicts.append(_check_norm(f, samples, workers))
        elif axiom is Axiom.NONARCH:
            verdicts.append(_check_nonarch(f, samples, workers))
        elif axiom is Axiom.POW_MUL:
            verdicts.append(_check_pow_mul(f, samples, exponents))
        elif axiom is Axiom.MULT:
            verdicts.append(_check_mult(f, samples, workers))
        elif axiom is Axiom.EXTENDS:
            verdicts.append(_check_extends(f, samples))
        elif axiom is Axiom.BOUNDED_MULT:
            verdicts.append(_check_bounded_mult(f, samples))
        elif axiom is Axiom.ISOMETRY:
            verdicts.append(_check_isometry(f, samples, automorphisms))
        elif axiom is Axiom.UNIT_BOUND:
            verdicts.append(_check_unit_bound(f))
        elif axiom is Axiom.BOUNDED_BY_SPECTRAL:
            verdicts.append(_check_bounded_by_spectral(f, samples))
        elif axiom is Axiom.VALUATION:
            verdicts.append(_check_valuation(f, samples, workers))
    for v in verdicts:
        if not v.passed:
            logger.info(f"{f.kind} 未通过 {v.axiom.value}: {v.detail}")
    return AxiomReport(verdicts=verdicts, sample_count=len(samples))


def check_axioms_exhaustive(f: Seminorm, profile: Iterable[Any]) -> AxiomReport:
    """有限载体上以全部元素为样本"""
    return check_axioms(f, f.carrier.elements(), profile)
