from src.modules.exceptions import (NormExtError, InputError, ParseError, DomainError, CertificateError,
                                    ValidationError, PreconditionError, ResourceError)
from src.modules.magnitude import (Magnitude, ZERO, ONE, INFINITY, Ordering, vp, padic_magnitude,
                                   mag_mul, mag_div, mag_pow, mag_compare, mag_max, mag_to_float)
from src.modules.poly import (Poly, parse_polynomial, spectral_value, newton_polygon, root_magnitudes,
                              squarefree_part, eisenstein_check, irreducible_mod_p, IrredCertificate)
from src.modules.extension import (ExtensionField, FieldElement, Automorphism, mk_extension, char_poly,
                                   min_poly, spectral_norm, basis_norm, basis_norm_bound, alg_norm_of_galois)
from src.modules.seminorm_lab import (Axiom, AxiomReport, LimitEstimate, Seminorm, PadicSeminorm, ScaledSeminorm,
                                      MaxPowSeminorm, BasisSeminorm, SpectralSeminorm, TableSeminorm,
                                      GaloisSupSeminorm, seminorm_from_bounded, seminorm_from_bounded_table,
                                      smoothing_term, smoothing_estimate, seminorm_from_const_term,
                                      seminorm_from_const_estimate, check_axioms, check_axioms_exhaustive)

__all__ = [
    'NormExtError', 'InputError', 'ParseError', 'DomainError', 'CertificateError',
    'ValidationError', 'PreconditionError', 'ResourceError',
    'Magnitude', 'ZERO', 'ONE', 'INFINITY', 'Ordering', 'vp', 'padic_magnitude',
    'mag_mul', 'mag_div', 'mag_pow', 'mag_compare', 'mag_max', 'mag_to_float',
    'Poly', 'parse_polynomial', 'spectral_value', 'newton_polygon', 'root_magnitudes',
    'squarefree_part', 'eisenstein_check', 'irreducible_mod_p', 'IrredCertificate',
    'ExtensionField', 'FieldElement', 'Automorphism', 'mk_extension', 'char_poly',
    'min_poly', 'spectral_norm', 'basis_norm', 'basis_norm_bound', 'alg_norm_of_galois',
    'Axiom', 'AxiomReport', 'LimitEstimate', 'Seminorm', 'PadicSeminorm', 'ScaledSeminorm',
    'MaxPowSeminorm', 'BasisSeminorm', 'SpectralSeminorm', 'TableSeminorm',
    'GaloisSupSeminorm', 'seminorm_from_bounded', 'seminorm_from_bounded_table',
    'smoothing_term', 'smoothing_estimate', 'seminorm_from_const_term',
    'seminorm_from_const_estimate', 'check_axioms', 'check_axioms_exhaustive',
]
