"""
sampling.py
公理检查与性质测试使用的可复现随机样本（numpy Generator）
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.config.manager import get_setting
from src.modules.extension import ExtensionField, FieldElement
from src.modules.poly import Poly
from src.modules.seminorm_lab import Carrier, ExtensionCarrier, RationalCarrier, ResidueCarrier

logger = logging.getLogger(__name__)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """种子默认读取 check.sample_seed"""
    if seed is None:
        seed = get_setting('check.sample_seed', 0)
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, p: int = None, max_abs: int = 10**6,
                    nonzero: bool = False) -> Fraction:
    """
    随机有理数。给出 p 时乘上 p 的随机整数次幂（-3..3），让赋值覆盖正负两侧。
    """
    while True:
        num = int(rng.integers(-max_abs, max_abs + 1))
        den = int(rng.integers(1, 1000))
        q = Fraction(num, den)
        if p is not None:
            q *= Fraction(p) ** int(rng.integers(-3, 4))
        if q != 0 or not nonzero:
            return q


def random_rationals(rng: np.random.Generator, count: int, p: int = None,
                     max_abs: int = 10**6, nonzero: bool = False) -> List[Fraction]:
    return [random_rational(rng, p, max_abs, nonzero) for _ in range(count)]


def random_element(rng: np.random.Generator, ext: ExtensionField, max_abs: int = 50,
                   nonzero: bool = False) -> FieldElement:
    """坐标为小有理数的扩张元素，分母取 p 的 0..2 次幂"""
    while True:
        coords = []
        for _ in range(ext.degree):
            num = int(rng.integers(-max_abs, max_abs + 1))
            coords.append(Fraction(num, ext.p ** int(rng.integers(0, 3))))
        x = ext.element(coords)
        if not (nonzero and x.is_zero):
            return x


def random_samples(rng: np.random.Generator, carrier: Carrier, count: int = None, p: int = None) -> list:
    """
    按载体生成样本：ℚ 上为有理数，扩张上为元素，ℤ/n 上为全部剩余类

    Args:
        rng: numpy 随机数生成器
        carrier: 载体
        count: 样本个数，默认读取 check.sample_count
        p: ℚ 上用于扰动赋值的素数

    Returns:
        样本列表，总是包含 0 和 1
    """
    if count is None:
        count = get_setting('check.sample_count', 20)
    if isinstance(carrier, ResidueCarrier):
        return carrier.elements()
    if isinstance(carrier, ExtensionCarrier):
        drawn = [random_element(rng, carrier.ext) for _ in range(count)]
    elif isinstance(carrier, RationalCarrier):
        drawn = random_rationals(rng, count, p)
    else:
        raise TypeError(f"不支持的载体: {carrier.name}")
    return [carrier.zero(), carrier.one()] + drawn


def random_split_poly(rng: np.random.Generator, p: int, degree: int,
                      max_abs: int = 30) -> Tuple[Poly, List[Fraction]]:
    """∏ (X - r_i)，根为随机非零有理数，返回多项式与根"""
    roots = random_rationals(rng, degree, p, max_abs=max_abs, nonzero=True)
    return split_poly_from_roots(roots), roots


def split_poly_from_roots(roots: Sequence[Fraction]) -> Poly:
    P = Poly.constant(1)
    for r in roots:
        P = P * Poly.from_coeffs([-r, 1])
    return P
