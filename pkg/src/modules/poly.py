"""
poly.py
有理系数多项式、谱值、Newton 多边形与 ℚ_p 上的不可约性证书
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm, gcd
from typing import Any, Iterable, List, Optional, Tuple

from src.config.manager import get_setting
from src.modules.exceptions import CertificateError, DomainError, InputError, ParseError
from src.modules.finite_field import (
    FpPoly, candidate_count, fp_trim, is_irreducible_brute, is_irreducible_gcd,
)
from src.modules.magnitude import (
    INFINITY, ValExp, Magnitude, ZERO,
    format_rational, mag_max, mag_pow, padic_magnitude, parse_rational, require_prime,
    to_rational, valexp_to_json, vp,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Poly:
    """
    稠密有理系数多项式，coeffs 低次在前，没有末尾零；零多项式为空元组
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, 'coeffs', tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Any]) -> "Poly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Any) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Any, k: int) -> "Poly":
        return cls(tuple([0] * k + [c]))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """次数；零多项式为 -1"""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("多项式不支持负幂")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise DomainError("除以零多项式")
        r = list(self.coeffs)
        db = other.degree
        q = [Fraction(0)] * max(len(r) - db, 0)
        lc = other.leading
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            c = r[-1] / lc
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                r[shift + i] -= c * b
            while r and r[-1] == 0:
                r.pop()
        return Poly(tuple(q)), Poly(tuple(r))

    def __floordiv__(self, other: "Poly"):
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly"):
        return divmod(self, other)[1]

    def __call__(self, x: Any) -> Fraction:
        """在有理数处求值（Horner）"""
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.leading
        return Poly(tuple(c / lc for c in self.coeffs))

    def shift(self, a: Any) -> "Poly":
        """P(X + a)"""
        a = to_rational(a)
        result = Poly()
        linear = Poly((a, 1))
        for c in reversed(self.coeffs):
            result = result * linear + c
        return result

    def primitive_part(self) -> "Poly":
        """清除分母与整数内容，首项系数为正"""
        if self.is_zero:
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        content = 0
        for v in ints:
            content = gcd(content, v)
        if ints[-1] < 0:
            content = -content
        return Poly(tuple(Fraction(v, content) for v in ints))

    def to_text(self) -> str:
        return ",".join(format_rational(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = format_rational(abs(c))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                body = mono if abs(c) == 1 else f"{format_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def parse_polynomial(text: str) -> Poly:
    """
    解析逗号分隔的有理系数（低次在前），如 "5,-7,1" 表示 X^2 - 7X + 5

    Args:
        text: 系数文本

    Returns:
        Poly（去掉末尾零）
    """
    if text is None or not text.strip():
        raise ParseError("多项式文本为空", 0)
    text = text.replace("−", "-")
    coeffs: List[Fraction] = []
    offset = 0
    for piece in text.split(","):
        if not piece.strip():
            raise ParseError(f"缺少系数: {text!r}", offset)
        coeffs.append(parse_rational(piece, offset))
        offset += len(piece) + 1
    return Poly(tuple(coeffs))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    ℚ 上的首一 gcd。先清除内容控制系数增长，每步余式化为首一。
    """
    a, b = a.primitive_part(), b.primitive_part()
    while not b.is_zero:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """
    扩展欧几里得：返回 (g, s, t)，s*a + t*b = g 且 g 首一
    """
    r0, r1 = a, b
    s0, s1 = Poly.constant(1), Poly()
    t0, t1 = Poly(), Poly.constant(1)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lc = r0.leading
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


def spectral_value_terms(P: Poly, p: int, n: int) -> Magnitude:
    """
    谱值上确界的第 n 项：n < deg P 时为 |a_n|^(1/(deg P - n))，否则为 ZERO
    """
    require_prime(p)
    if n < 0:
        raise InputError(f"项的下标必须非负: {n}")
    m = P.degree
    if n >= m:
        return ZERO
    return mag_pow(padic_magnitude(P.coeff(n), p), Fraction(1, m - n))


def spectral_value(P: Poly, p: int) -> Magnitude:
    """
    谱值 σ(P)。对全体 n 的上确界等于 n < deg P 的有限最大值，
    因为补齐的项都是 ZERO。只对首一多项式有意义，非首一输入按同一公式计算。

    Args:
        P: 非零多项式
        p: 素数

    Returns:
        精确的 Magnitude；0 次多项式为 ZERO
    """
    require_prime(p)
    if P.is_zero:
        raise DomainError("零多项式没有谱值")
    return mag_max(spectral_value_terms(P, p, n) for n in range(P.degree))


@dataclass(frozen=True)
class NewtonPolygon:
    """下凸包的顶点与线段（斜率, 水平长度），斜率严格递增"""
    prime: int
    vertices: Tuple[Tuple[int, ValExp], ...]
    segments: Tuple[Tuple[Fraction, int], ...]

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "vertices": [[i, valexp_to_json(v)] for i, v in self.vertices],
            "segments": [[format_rational(s), length] for s, length in self.segments],
        }


def _require_monic(P: Poly) -> None:
    if P.degree < 1:
        raise DomainError(f"需要次数 >= 1 的多项式: {P}")
    if not P.is_monic:
        raise DomainError(f"需要首一多项式: {P}")


def newton_polygon(P: Poly, p: int) -> NewtonPolygon:
    """
    点集 {(i, v_p(a_i)) : a_i ≠ 0} ∪ {(deg P, 0)} 的下凸包
    """
    require_prime(p)
    _require_monic(P)
    m = P.degree
    points = [(i, vp(c, p)) for i, c in enumerate(P.coeffs[:m]) if c != 0]
    points.append((m, Fraction(0)))

    hull: List[Tuple[int, Fraction]] = []
    for pt in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            cross = (x1 - x0) * (pt[1] - y0) - (y1 - y0) * (pt[0] - x0)
            if cross > 0:
                break
            hull.pop()
        hull.append(pt)

    segments = tuple(
        (Fraction(y1 - y0) / (x1 - x0), x1 - x0)
        for (x0, y0), (x1, y1) in zip(hull, hull[1:])
    )
    return NewtonPolygon(prime=p, vertices=tuple(hull), segments=segments)


def root_magnitudes(P: Poly, p: int) -> List[Magnitude]:
    """
    根的绝对值（多重集，升序）：斜率 s、长度 ℓ 的线段贡献 ℓ 个 p^s，
    根 0 的重数 k 贡献 k 个 ZERO
    """
    polygon = newton_polygon(P, p)
    k = polygon.vertices[0][0]
    result = [ZERO] * k
    for slope, length in polygon.segments:
        result.extend([Magnitude.prime_power(p, slope)] * length)
    return result


def squarefree_part(P: Poly) -> Poly:
    """P / gcd(P, P')，化为首一"""
    if P.is_zero:
        raise DomainError("零多项式没有无平方部分")
    return (P // poly_gcd(P, P.derivative())).monic()


def eisenstein_failure(P: Poly, p: int, shift: Any = None) -> Optional[str]:
    """
    检查 Eisenstein 条件；满足时返回 None，否则返回不满足的条件描述
    """
    require_prime(p)
    _require_monic(P)
    Q = P if shift is None else P.shift(shift)
    m = Q.degree
    for i in range(m):
        v = vp(Q.coeff(i), p)
        if v is not INFINITY and v < 1:
            return f"v_{p}(a_{i}) = {v} < 1"
    v0 = vp(Q.coeff(0), p)
    if v0 != 1:
        return f"v_{p}(a_0) = {v0} ≠ 1"
    return None


def eisenstein_check(P: Poly, p: int, shift: Any = None) -> bool:
    """P（或 P(X + shift)）是否为 p 处的 Eisenstein 多项式"""
    return eisenstein_failure(P, p, shift) is None


def reduce_mod_p(P: Poly, p: int) -> FpPoly:
    """p 整系数多项式模 p 约化"""
    out = []
    for c in P.coeffs:
        if c.denominator % p == 0:
            raise DomainError(f"系数 {c} 不是 {p} 整的")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return fp_trim(out)


def irreducible_mod_p(P: Poly, p: int) -> bool:
    """
    首一 p 整多项式模 p 是否不可约（模 p 不可约蕴含在 ℚ_p 上不可约）。

    候选因子数量不超过 poly.brute_force_limit 时逐个试除，
    否则改用等价的 gcd(f, X^(p^i) - X) 判定。
    """
    require_prime(p)
    _require_monic(P)
    max_degree = get_setting('poly.irreducibility_max_degree', 8)
    max_prime = get_setting('poly.irreducibility_max_prime', 997)
    if P.degree > max_degree or p > max_prime:
        raise DomainError(f"超出穷举范围: deg={P.degree} (<= {max_degree}), p={p} (<= {max_prime})")
    f = reduce_mod_p(P, p)
    count = candidate_count(p, P.degree)
    limit = get_setting('poly.brute_force_limit', 200000)
    logger.debug(f"mod {p} 不可约判定: 候选因子 {count} 个")
    if count <= limit:
        return is_irreducible_brute(f, p)
    return is_irreducible_gcd(f, p)


class CertificateKind(str, Enum):
    EISENSTEIN = "eisenstein"
    EISENSTEIN_SHIFT = "eisenstein_shift"
    MOD_P_IRREDUCIBLE = "mod_p"
    ASSERTED = "asserted"


@dataclass(frozen=True)
class IrredCertificate:
    """f 在 ℚ_p 上不可约的证书；ASSERTED 只记录说明，不做验证"""
    kind: CertificateKind
    shift: Optional[Fraction] = None
    note: str = ""

    @classmethod
    def eisenstein(cls) -> "IrredCertificate":
        return cls(CertificateKind.EISENSTEIN)

    @classmethod
    def eisenstein_shift(cls, shift: Any) -> "IrredCertificate":
        return cls(CertificateKind.EISENSTEIN_SHIFT, shift=to_rational(shift))

    @classmethod
    def mod_p(cls) -> "IrredCertificate":
        return cls(CertificateKind.MOD_P_IRREDUCIBLE)

    @classmethod
    def asserted(cls, note: str) -> "IrredCertificate":
        return cls(CertificateKind.ASSERTED, note=note)

    def validate(self, f: Poly, p: int) -> None:
        """验证失败时抛出 CertificateError，消息说明不满足的条件"""
        if self.kind is CertificateKind.EISENSTEIN:
            failure = eisenstein_failure(f, p)
            if failure:
                raise CertificateError(f"{f} 在 p={p} 处不满足 Eisenstein 条件: {failure}")
        elif self.kind is CertificateKind.EISENSTEIN_SHIFT:
            failure = eisenstein_failure(f, p, self.shift)
            if failure:
                raise CertificateError(
                    f"{f}(X + {self.shift}) 在 p={p} 处不满足 Eisenstein 条件: {failure}")
        elif self.kind is CertificateKind.MOD_P_IRREDUCIBLE:
            if not irreducible_mod_p(f, p):
                raise CertificateError(f"{f} 模 {p} 可约")
        else:
            logger.warning(f"未验证的不可约性假设: {f}, p={p}, 说明: {self.note!r}")

    def to_json(self) -> dict:
        data = {"kind": self.kind.value}
        if self.kind is CertificateKind.EISENSTEIN_SHIFT:
            data["shift"] = format_rational(self.shift)
        if self.kind is CertificateKind.ASSERTED:
            data["note"] = self.note
        return data
