"""
finite_field.py
𝔽_p 上的多项式运算（系数为 0..p-1 的整数列表，低次在前）
"""

import itertools
import logging
from typing import Iterator, List, Tuple

logger = logging.getLogger(__name__)

FpPoly = List[int]


def fp_trim(a: FpPoly) -> FpPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_deg(a: FpPoly) -> int:
    return len(a) - 1


def fp_sub(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return fp_trim(out)


def fp_mul(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return fp_trim(out)


def fp_divmod(a: FpPoly, b: FpPoly, p: int) -> Tuple[FpPoly, FpPoly]:
    """带余除法，b 非零"""
    if not b:
        raise ZeroDivisionError("除以零多项式")
    r = list(a)
    db = fp_deg(b)
    inv_lc = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = (r[-1] * inv_lc) % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        fp_trim(r)
    return fp_trim(q), r


def fp_mod(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    return fp_divmod(a, b, p)[1]


def fp_monic(a: FpPoly, p: int) -> FpPoly:
    if not a:
        return []
    inv_lc = pow(a[-1], -1, p)
    return [(c * inv_lc) % p for c in a]


def fp_gcd(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    while b:
        a, b = b, fp_mod(a, b, p)
    return fp_monic(a, p)


def fp_powmod(a: FpPoly, n: int, modulus: FpPoly, p: int) -> FpPoly:
    """a^n mod modulus，平方-乘法"""
    result: FpPoly = [1]
    base = fp_mod(list(a), modulus, p)
    while n:
        if n & 1:
            result = fp_mod(fp_mul(result, base, p), modulus, p)
        base = fp_mod(fp_mul(base, base, p), modulus, p)
        n >>= 1
    return result


def monic_polys(p: int, d: int) -> Iterator[FpPoly]:
    """枚举 𝔽_p 上全部 d 次首一多项式"""
    for lower in itertools.product(range(p), repeat=d):
        yield list(lower) + [1]


def is_irreducible_brute(f: FpPoly, p: int) -> bool:
    """逐个尝试 1..deg/2 次的首一多项式能否整除 f"""
    n = fp_deg(f)
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not fp_mod(f, g, p):
                logger.debug(f"mod {p} 找到因子 {g}")
                return False
    return True


def is_irreducible_gcd(f: FpPoly, p: int) -> bool:
    """
    f 不可约当且仅当对 i = 1..deg/2 都有 gcd(f, X^(p^i) - X) = 1
    """
    n = fp_deg(f)
    x = [0, 1]
    b = x
    for _ in range(n // 2):
        b = fp_powmod(b, p, f, p)
        if fp_gcd(fp_sub(b, x, p), f, p) != [1]:
            return False
    return True


def candidate_count(p: int, n: int) -> int:
    """穷举法需要尝试的候选因子个数"""
    return sum(p ** d for d in range(1, n // 2 + 1))
