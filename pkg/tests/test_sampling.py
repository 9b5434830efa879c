from fractions import Fraction

from src.config.manager import init_config
from src.modules.magnitude import vp
from src.modules.sampling import (
    make_rng, random_element, random_rational, random_samples, random_split_poly,
)
from src.modules.seminorm_lab import ExtensionCarrier, RationalCarrier, ResidueCarrier


def test_seeded_rng_is_reproducible():
    assert make_rng(7).integers(0, 10**9) == make_rng(7).integers(0, 10**9)
    a = [random_rational(make_rng(3), 5) for _ in range(3)]
    b = [random_rational(make_rng(3), 5) for _ in range(3)]
    assert a == b


def test_seed_from_config(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("check:\n  sample_seed: 42\n", encoding="utf-8")
    init_config(str(path))
    assert make_rng().integers(0, 10**9) == make_rng(42).integers(0, 10**9)


def test_nonzero_rationals():
    rng = make_rng(1)
    assert all(random_rational(rng, 5, max_abs=2, nonzero=True) != 0 for _ in range(200))


def test_samples_by_carrier(sqrt5):
    rng = make_rng(0)
    samples = random_samples(rng, RationalCarrier(), 10, p=5)
    assert samples[:2] == [0, 1] and len(samples) == 12
    assert all(isinstance(q, Fraction) for q in samples[2:])
    assert random_samples(rng, ResidueCarrier(6), 3) == list(range(6))
    elems = random_samples(rng, ExtensionCarrier(sqrt5), 5)
    assert elems[0].is_zero and elems[1] == sqrt5.one()
    assert all(x.parent == sqrt5 for x in elems)


def test_random_element_denominators(cbrt5):
    x = random_element(make_rng(2), cbrt5, nonzero=True)
    assert not x.is_zero
    assert all(c == 0 or vp(c, 5) >= -2 for c in x.coords)


def test_random_split_poly():
    f, roots = random_split_poly(make_rng(5), 5, 4)
    assert f.degree == 4 and len(roots) == 4
    assert all(f(r) == 0 for r in roots)
