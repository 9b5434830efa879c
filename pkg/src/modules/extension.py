"""
extension.py
有限扩张 ℚ[X]/(f)（视为 ℚ_p^alg 的子域）中的算术、最小多项式、谱范数、
幂基范数与 Galois 上确界范数
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Protocol, Sequence, Tuple

from src.modules.exceptions import DomainError, InputError, ValidationError
from src.modules.magnitude import (
    Magnitude, ONE, format_rational, mag_max, mag_pow, padic_magnitude, require_prime,
    to_rational,
)
from src.modules.poly import IrredCertificate, Poly, poly_xgcd, spectral_value, squarefree_part

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


class ExtensionField:
    """
    L = ℚ[X]/(f)，p 给出基域 K = ℚ_p。构造后不可变。

    幂基 e_i = α^i 的结构常数 c[i][j][k] 满足 e_i·e_j = Σ_k c[i][j][k] e_k，
    在构造时预先计算。
    """

    def __init__(self, p: int, modulus: Poly, certificate: IrredCertificate):
        self.p = p
        self.modulus = modulus
        self.certificate = certificate
        self.degree = modulus.degree
        n = self.degree
        # α^s mod f，s = 0..2n-2
        powers = [self._reduce(Poly.monomial(1, s)) for s in range(2 * n - 1)]
        self._constants: Tuple[Tuple[Tuple[Fraction, ...], ...], ...] = tuple(
            tuple(powers[i + j] for j in range(n)) for i in range(n)
        )
        self._bound = None

    def _reduce(self, poly: Poly) -> Tuple[Fraction, ...]:
        r = poly % self.modulus
        return tuple(r.coeff(k) for k in range(self.degree))

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._constants[i][j][k]

    def element(self, coords: Iterable[Any]) -> "FieldElement":
        """由幂基坐标构造元素；坐标多于 n 个时按 f 约化"""
        return self.from_poly(Poly.from_coeffs(coords))

    def from_poly(self, poly: Poly) -> "FieldElement":
        return FieldElement(self, self._reduce(poly))

    def embed(self, q: Any) -> "FieldElement":
        return self.from_poly(Poly.constant(to_rational(q)))

    def gen(self) -> "FieldElement":
        return self.from_poly(Poly.x())

    def zero(self) -> "FieldElement":
        return self.embed(0)

    def one(self) -> "FieldElement":
        return self.embed(1)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "modulus": self.modulus.to_text(),
            "certificate": self.certificate.to_json(),
        }

    def __eq__(self, other):
        if not isinstance(other, ExtensionField):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, modulus={self.modulus})"


def mk_extension(p: int, f: Poly, cert: IrredCertificate) -> ExtensionField:
    """
    构造扩张并验证不可约性证书

    Args:
        p: 素数
        f: 首一定义多项式，次数 >= 1
        cert: 证书

    Returns:
        ExtensionField
    """
    require_prime(p)
    if f.degree < 1 or not f.is_monic:
        raise DomainError(f"定义多项式必须首一且次数 >= 1: {f}")
    cert.validate(f, p)
    ext = ExtensionField(p, f, cert)
    logger.info(f"已构造扩张 ℚ[X]/({f})，p={p}，证书 {cert.kind.value}")
    return ext


@dataclass(frozen=True, eq=False)
class FieldElement:
    """L 中的元素：幂基坐标"""
    parent: ExtensionField
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.parent.degree:
            raise InputError(f"坐标个数 {len(self.coords)} 与扩张次数 {self.parent.degree} 不符")

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_poly(self) -> Poly:
        return Poly.from_coeffs(self.coords)

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coords]

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.parent.embed(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return elem_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.parent, tuple(-c for c in self.coords))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return elem_add(self, -other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return elem_add(other, -self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return elem_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return elem_mul(self, elem_inv(other))

    def __pow__(self, n: int):
        return elem_pow(self, n)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def __hash__(self):
        return hash((self.parent, self.coords))

    def __str__(self):
        return f"[{self.to_poly()}]".replace("X", "α")

    def __repr__(self):
        return f"FieldElement({self.to_json()})"


def _same_parent(x: FieldElement, y: FieldElement) -> ExtensionField:
    if x.parent != y.parent:
        raise InputError(f"元素属于不同的扩张: {x.parent} / {y.parent}")
    return x.parent


def elem_add(x: FieldElement, y: FieldElement) -> FieldElement:
    ext = _same_parent(x, y)
    return FieldElement(ext, tuple(a + b for a, b in zip(x.coords, y.coords)))


def elem_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    """经结构常数相乘"""
    ext = _same_parent(x, y)
    n = ext.degree
    out = [Fraction(0)] * n
    for i, a in enumerate(x.coords):
        if not a:
            continue
        for j, b in enumerate(y.coords):
            if not b:
                continue
            ab = a * b
            row = ext._constants[i][j]
            for k in range(n):
                if row[k]:
                    out[k] += ab * row[k]
    return FieldElement(ext, tuple(out))


def elem_inv(x: FieldElement) -> FieldElement:
    """扩展欧几里得：s·rep(x) + t·f = 1"""
    if x.is_zero:
        raise DomainError("零元不可逆")
    ext = x.parent
    g, s, _ = poly_xgcd(x.to_poly(), ext.modulus)
    if g != Poly.constant(1):
        raise DomainError(f"{x} 与定义多项式不互素，f 在 ℚ 上可约: gcd = {g}")
    return ext.from_poly(s)


def elem_pow(x: FieldElement, n: int) -> FieldElement:
    if n < 0:
        return elem_pow(elem_inv(x), -n)
    result = x.parent.one()
    base = x
    while n:
        if n & 1:
            result = elem_mul(result, base)
        base = elem_mul(base, base)
        n >>= 1
    return result


def evaluate(P: Poly, x: FieldElement) -> FieldElement:
    """在扩张中对多项式求值（Horner）"""
    acc = x.parent.zero()
    for c in reversed(P.coeffs):
        acc = elem_add(elem_mul(acc, x), x.parent.embed(c))
    return acc


def multiplication_matrix(x: FieldElement) -> Matrix:
    """乘 x 映射在幂基下的矩阵，第 j 列为 x·e_j 的坐标"""
    ext = x.parent
    n = ext.degree
    columns = [elem_mul(x, ext.from_poly(Poly.monomial(1, j))).coords for j in range(n)]
    return [[columns[j][k] for j in range(n)] for k in range(n)]


def berkowitz(M: Matrix) -> List[Fraction]:
    """
    Berkowitz 无除法算法，返回 det(XI - M) 的系数（高次在前）。

    M = [[a, R], [C, A1]]，Toeplitz 列为 1, -a, -RC, -R·A1·C, ..., -R·A1^(n-2)·C，
    与 A1 的特征多项式相乘。
    """
    n = len(M)
    if n == 0:
        return [Fraction(1)]
    a = M[0][0]
    R = M[0][1:]
    A1 = [row[1:] for row in M[1:]]
    t = [Fraction(1), -a]
    v = [M[i][0] for i in range(1, n)]
    for _ in range(n - 1):
        t.append(-sum((r * c for r, c in zip(R, v)), Fraction(0)))
        v = [sum((A1[i][j] * v[j] for j in range(n - 1)), Fraction(0)) for i in range(n - 1)]
    sub = berkowitz(A1)
    return [
        sum((t[i - j] * sub[j] for j in range(min(i, n - 1) + 1)), Fraction(0))
        for i in range(n + 1)
    ]


def char_poly(x: FieldElement) -> Poly:
    """乘 x 矩阵在 ℚ 上的特征多项式（首一，次数 n）"""
    coeffs = berkowitz(multiplication_matrix(x))
    logger.debug(f"特征多项式 {x}: {list(reversed(coeffs))}")
    return Poly.from_coeffs(reversed(coeffs))


def min_poly(x: FieldElement) -> Poly:
    """
    最小多项式。证书保证 f 在 ℚ_p 上不可约，于是特征多项式是
    最小多项式的幂，其无平方部分就是 ℚ_p 上的最小多项式，系数仍为有理数。
    """
    return squarefree_part(char_poly(x))


def spectral_norm(x: FieldElement) -> Magnitude:
    """|x|_sp = σ(minpoly(x))"""
    return spectral_value(min_poly(x), x.parent.p)


def norm_const_coeff_oracle(x: FieldElement) -> Magnitude:
    """
    |a_0|^(1/m)，a_0、m 为最小多项式的常数项与次数。
    所有共轭有相同的绝对值，故应等于 spectral_norm(x)。
    """
    if x.is_zero:
        raise DomainError("零元没有常数项判据")
    mp = min_poly(x)
    return mag_pow(padic_magnitude(mp.coeff(0), x.parent.p), Fraction(1, mp.degree))


def basis_norm(x: FieldElement) -> Magnitude:
    """幂基范数 max_i |a_i|_p"""
    return mag_max(padic_magnitude(c, x.parent.p) for c in x.coords)


def basis_norm_bound(ext: ExtensionField) -> Magnitude:
    """
    c = max(1, max |c_ijk|_p)，满足 ‖xy‖ <= c‖x‖‖y‖
    """
    if ext._bound is None:
        values = (padic_magnitude(c, ext.p)
                  for row in ext._constants for col in row for c in col)
        ext._bound = mag_max([ONE, mag_max(values)])
    return ext._bound


@dataclass(frozen=True, eq=False)
class Automorphism:
    """K-代数自同构，由生成元的像给出，构造时验证 f(像) = 0"""
    parent: ExtensionField
    gen_image: FieldElement

    def __post_init__(self):
        if self.gen_image.parent != self.parent:
            raise InputError("生成元的像不在该扩张中")
        residue = evaluate(self.parent.modulus, self.gen_image)
        if not residue.is_zero:
            raise ValidationError(
                f"{self.gen_image} 不是 {self.parent.modulus} 的根: f(像) = {residue}")

    @classmethod
    def identity(cls, ext: ExtensionField) -> "Automorphism":
        return cls(ext, ext.gen())

    def __call__(self, x: FieldElement) -> FieldElement:
        return apply_automorphism(self, x)

    def to_json(self) -> List[str]:
        return self.gen_image.to_json()


def apply_automorphism(sigma: Automorphism, x: FieldElement) -> FieldElement:
    """把 x 的代表多项式中的 α 替换为生成元的像"""
    if x.parent != sigma.parent:
        raise InputError("自同构与元素属于不同的扩张")
    return evaluate(x.to_poly(), sigma.gen_image)


class ElementNorm(Protocol):
    def evaluate(self, x: Any) -> Magnitude:
        ...


def alg_norm_of_auto(norm: ElementNorm, sigma: Automorphism, x: FieldElement) -> Magnitude:
    """x ↦ ‖σ(x)‖"""
    return norm.evaluate(apply_automorphism(sigma, x))


def alg_norm_of_galois(norm: ElementNorm, auts: Sequence[Automorphism], x: FieldElement) -> Magnitude:
    """
    |x|_G = max_σ ‖σ(x)‖

    Args:
        norm: 可在扩张元素上求值的半范数
        auts: 非空的自同构列表
        x: 元素

    Returns:
        Magnitude
    """
    if not auts:
        raise InputError("自同构列表为空")
    return mag_max(alg_norm_of_auto(norm, sigma, x) for sigma in auts)
