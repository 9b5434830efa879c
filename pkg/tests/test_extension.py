from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from src.modules.exceptions import CertificateError, DomainError, InputError, ValidationError
from src.modules.extension import (
    Automorphism, alg_norm_of_auto, alg_norm_of_galois, apply_automorphism, basis_norm, basis_norm_bound,
    berkowitz, char_poly, elem_inv, elem_mul, evaluate, min_poly, mk_extension, multiplication_matrix,
    norm_const_coeff_oracle, spectral_norm,
)
from src.modules.magnitude import ONE, ZERO, Magnitude, mag_max, mag_mul, mag_pow, padic_magnitude
from src.modules.poly import IrredCertificate, Poly, parse_polynomial
from src.modules.seminorm_lab import BasisSeminorm, SpectralSeminorm
from tests.strategies import (
    biquadratic_field, cbrt5_field, cyclotomic5_field, elements, inv_sqrt5_field, rationals, sqrt5_field,
)

FIELDS = [sqrt5_field(), cbrt5_field(), cyclotomic5_field()]
FIELD_IDS = ["sqrt5", "cbrt5", "cyclotomic5"]


def pp(p, e):
    return Magnitude.prime_power(p, Fraction(e))


class TestConstruction:
    def test_mk_extension(self, sqrt5):
        assert sqrt5.degree == 2
        assert sqrt5.structure_constant(1, 1, 0) == 5
        with pytest.raises(CertificateError):
            mk_extension(5, parse_polynomial("-6,0,1"), IrredCertificate.eisenstein())
        with pytest.raises(CertificateError):
            mk_extension(5, parse_polynomial("5,-7,1"), IrredCertificate.mod_p())
        with pytest.raises(DomainError):
            mk_extension(5, parse_polynomial("-5,0,2"), IrredCertificate.asserted("not monic"))
        with pytest.raises(InputError):
            mk_extension(6, parse_polynomial("-5,0,1"), IrredCertificate.eisenstein())

    def test_structure_constants_symmetric(self, cyclotomic5):
        n = cyclotomic5.degree
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert cyclotomic5.structure_constant(i, j, k) == cyclotomic5.structure_constant(j, i, k)

    def test_degree_one(self):
        ext = mk_extension(5, parse_polynomial("-3,1"), IrredCertificate.asserted("linear"))
        assert ext.element([7]).coords == (7,)
        assert basis_norm_bound(ext) == ONE
        assert spectral_norm(ext.embed(10)) == pp(5, -1)


class TestArithmetic:
    def test_examples(self, sqrt5):
        alpha = sqrt5.gen()
        assert (1 + alpha) * (1 - alpha) == sqrt5.embed(-4)
        assert elem_inv(alpha) == alpha / 5
        assert alpha * elem_inv(alpha) == sqrt5.one()
        with pytest.raises(DomainError):
            elem_inv(sqrt5.zero())

    def test_parent_mismatch(self, sqrt5, cbrt5):
        with pytest.raises(InputError):
            elem_mul(sqrt5.gen(), cbrt5.gen())

    def test_pow_and_evaluate(self, sqrt5):
        alpha = sqrt5.gen()
        assert alpha ** 4 == sqrt5.embed(25)
        assert alpha ** -2 == sqrt5.embed(Fraction(1, 5))
        assert evaluate(sqrt5.modulus, alpha).is_zero


class TestCharPoly:
    def test_examples(self, sqrt5):
        alpha = sqrt5.gen()
        assert char_poly(alpha) == parse_polynomial("-5,0,1")
        assert char_poly(1 + alpha) == parse_polynomial("-4,-2,1")
        assert char_poly(sqrt5.embed(2)) == parse_polynomial("4,-4,1")
        assert multiplication_matrix(1 + alpha) == [[1, 5], [1, 1]]

    def test_berkowitz_small(self):
        assert berkowitz([]) == [1]
        assert berkowitz([[Fraction(3)]]) == [1, -3]

    @pytest.mark.parametrize("ext", FIELDS, ids=FIELD_IDS)
    def test_against_sympy(self, ext):
        x = ext.element([Fraction(1, 2), 3, -1, 7][:ext.degree])
        M = multiplication_matrix(x)
        X = sympy.Symbol('X')
        expected = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in M]).charpoly(X)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())]
        assert char_poly(x) == Poly.from_coeffs(coeffs)

    def test_min_poly(self, sqrt5, biquadratic):
        alpha = sqrt5.gen()
        assert min_poly(sqrt5.embed(2)) == parse_polynomial("-2,1")
        assert min_poly(1 + alpha) == parse_polynomial("-4,-2,1")
        gamma = biquadratic.gen()
        root5 = (17 * gamma - gamma ** 3) / 6
        assert root5.coords == (0, Fraction(17, 6), 0, Fraction(-1, 6))
        assert char_poly(root5) == parse_polynomial("-5,0,1") ** 2
        assert min_poly(root5) == parse_polynomial("-5,0,1")

    @settings(max_examples=30, deadline=None)
    @given(elements(cyclotomic5_field()))
    def test_min_poly_divides_char_poly(self, x):
        mp = min_poly(x)
        assert (char_poly(x) % mp).is_zero
        assert evaluate(mp, x).is_zero


class TestSpectralNorm:
    def test_examples(self, sqrt5):
        alpha = sqrt5.gen()
        assert spectral_norm(sqrt5.embed(10)) == pp(5, -1)
        assert spectral_norm(alpha) == pp(5, Fraction(-1, 2))
        assert spectral_norm(1 + alpha) == ONE
        assert spectral_norm(sqrt5.zero()) is ZERO

    def test_oracle_examples(self, sqrt5):
        alpha = sqrt5.gen()
        assert norm_const_coeff_oracle(alpha) == pp(5, Fraction(-1, 2))
        assert norm_const_coeff_oracle(1 + alpha) == ONE
        assert norm_const_coeff_oracle(sqrt5.embed(10)) == pp(5, -1)
        with pytest.raises(DomainError):
            norm_const_coeff_oracle(sqrt5.zero())

    def test_embedding_invariance(self, sqrt5, biquadratic):
        gamma = biquadratic.gen()
        assert spectral_norm(sqrt5.gen()) == spectral_norm((17 * gamma - gamma ** 3) / 6) == pp(5, Fraction(-1, 2))

    @settings(max_examples=100, deadline=None)
    @given(rationals())
    def test_extends_padic(self, q):
        assert spectral_norm(sqrt5_field().embed(q)) == padic_magnitude(q, 5)

    @pytest.mark.parametrize("ext", FIELDS, ids=FIELD_IDS)
    def test_multiplicative_and_nonarchimedean(self, ext):
        @settings(max_examples=40, deadline=None)
        @given(elements(ext), elements(ext))
        def check(x, y):
            nx, ny = spectral_norm(x), spectral_norm(y)
            assert spectral_norm(x * y) == mag_mul(nx, ny)
            assert spectral_norm(x + y) <= mag_max([nx, ny])

        check()

    @settings(max_examples=40, deadline=None)
    @given(elements(cbrt5_field()))
    def test_power_multiplicative(self, x):
        nx = spectral_norm(x)
        for n in (2, 3, 5):
            assert spectral_norm(x ** n) == (ZERO if nx.is_zero else mag_pow(nx, n))

    @settings(max_examples=40, deadline=None)
    @given(elements(cyclotomic5_field(), nonzero=True))
    def test_oracle_agrees(self, x):
        assert norm_const_coeff_oracle(x) == spectral_norm(x)


class TestBasisNorm:
    def test_examples(self, sqrt5, inv_sqrt5):
        alpha = sqrt5.gen()
        assert basis_norm(3 + 5 * alpha) == ONE
        assert basis_norm(sqrt5.zero()) is ZERO
        assert basis_norm(Fraction(1, 5) + alpha) == pp(5, 1)
        assert basis_norm_bound(sqrt5) == ONE
        assert basis_norm_bound(inv_sqrt5) == pp(5, 1)

    @pytest.mark.parametrize("ext", [sqrt5_field(), inv_sqrt5_field()], ids=["sqrt5", "inv_sqrt5"])
    def test_bound_holds(self, ext):
        c = basis_norm_bound(ext)

        @settings(max_examples=60, deadline=None)
        @given(elements(ext), elements(ext))
        def check(x, y):
            assert basis_norm(x * y) <= c * basis_norm(x) * basis_norm(y)

        check()


class TestAutomorphism:
    def test_examples(self, sqrt5):
        alpha = sqrt5.gen()
        sigma = Automorphism(sqrt5, -alpha)
        assert apply_automorphism(sigma, 3 + 5 * alpha) == 3 - 5 * alpha
        assert sigma(alpha) == -alpha
        x = 3 + 5 * alpha
        assert Automorphism.identity(sqrt5)(x) == x
        with pytest.raises(ValidationError):
            Automorphism(sqrt5, 1 + alpha)

    def test_galois_norm(self, sqrt5):
        alpha = sqrt5.gen()
        auts = [Automorphism.identity(sqrt5), Automorphism(sqrt5, -alpha)]
        assert alg_norm_of_galois(SpectralSeminorm(sqrt5), auts, alpha) == pp(5, Fraction(-1, 2))
        assert alg_norm_of_galois(BasisSeminorm(sqrt5), auts, 3 + 5 * alpha) == ONE
        assert alg_norm_of_auto(BasisSeminorm(sqrt5), auts[1], 1 + 5 * alpha) == ONE
        with pytest.raises(InputError):
            alg_norm_of_galois(SpectralSeminorm(sqrt5), [], alpha)

    @settings(max_examples=50, deadline=None)
    @given(elements(sqrt5_field()))
    def test_isometry(self, x):
        ext = sqrt5_field()
        sigma = Automorphism(ext, -ext.gen())
        auts = [Automorphism.identity(ext), sigma]
        assert spectral_norm(sigma(x)) == spectral_norm(x)
        assert alg_norm_of_galois(SpectralSeminorm(ext), auts, x) == spectral_norm(x)

    @settings(max_examples=20, deadline=None)
    @given(elements(cyclotomic5_field()))
    def test_isometry_cyclotomic(self, x):
        ext = cyclotomic5_field()
        sigma = Automorphism(ext, ext.gen() ** 2)
        assert spectral_norm(sigma(x)) == spectral_norm(x)
