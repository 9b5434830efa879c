from fractions import Fraction

from src.config import init_config, get_config
from src.modules import (IrredCertificate, PadicSeminorm, ScaledSeminorm, SpectralSeminorm, mk_extension,
                         parse_polynomial, smoothing_estimate, spectral_norm, spectral_value)

init_config()
config = get_config()

# ℚ(√5)，p = 5，Eisenstein 证书
ext = mk_extension(5, parse_polynomial("-5,0,1"), IrredCertificate.eisenstein())
alpha = ext.gen()

print("|√5|_sp =", spectral_norm(alpha))
print("spectral_value(X^2 - 7X + 5) =", spectral_value(parse_polynomial("5,-7,1"), 5))

f = ScaledSeminorm(2, 5)
estimate = smoothing_estimate(f, Fraction(75, 8), max_n=config.limits.max_n)
print("smoothing(2|·|_5)(75/8):", estimate.float_bracket, "精确 |75/8|_5 =", PadicSeminorm(5)(Fraction(75, 8)))

estimate = smoothing_estimate(SpectralSeminorm(ext), 1 + alpha)
print("smoothing(|·|_sp)(1+√5): 稳定 =", estimate.stabilized, "极限 =", estimate.limit)
