import random

import pytest

from diagcat import (
    Cobordism,
    Spectrum,
    compose_cobordism,
    compose_deformed,
    compose_labeled,
    fiber_product_oracle,
    identity_partition,
    make_cobordism,
    make_partition,
    rho,
    sigma,
    star_cobordism,
    star_deformed,
    star_labeled,
    to_deformed,
    to_labeled,
    vin,
    vout,
)
from diagcat.errors import BaseMismatch, NegativeLabel, NotRegular
from diagcat.sampling import random_cobordism, random_deformed

H = make_partition(2, 2, [[vin(1), vin(2)], [vout(1), vout(2)]])


def test_spectrum_basics():
    s = Spectrum({0: 2, 3: 1})
    assert s == Spectrum(((0, 2), (3, 1)))
    assert (s + Spectrum({0: 1})) == Spectrum({0: 3, 3: 1})
    assert s.negate() == Spectrum({0: -2, 3: -1})
    assert s.total() == 3
    assert not Spectrum({1: 0}).pairs  # zero counts are dropped


def test_make_cobordism_validates():
    with pytest.raises(BaseMismatch):
        make_cobordism(H, (1,), (), True)
    with pytest.raises(NegativeLabel):
        make_cobordism(H, (-1, 0), (), False)
    with pytest.raises(NegativeLabel):
        make_cobordism(H, (0, 0), {1: -1}, False)
    # the regular tower allows both
    make_cobordism(H, (-1, 0), {1: -1}, True)


def test_compose_merges_labels_and_spectra():
    x = make_cobordism(H, (1, 2), (), True)
    assert compose_cobordism(x, x) == Cobordism(H, (1, 2), Spectrum({4: 1}), True)


def test_star_cobordism_frozen_value():
    x = make_cobordism(H, (1, 2), (), True)
    assert star_cobordism(x) == Cobordism(H, (-2, -1), Spectrum({1: -2}), True)


def test_star_requires_regular():
    x = make_cobordism(H, (1, 2), (), False)
    with pytest.raises(NotRegular):
        star_cobordism(x)


def test_star_laws_random():
    rng = random.Random(1)
    for _ in range(300):
        x = random_cobordism(rng, rng.randint(0, 3), rng.randint(0, 3), regular=True)
        xs = star_cobordism(x)
        assert star_cobordism(xs) == x
        assert compose_cobordism(compose_cobordism(x, xs), x) == x
        y = random_deformed(rng, rng.randint(0, 3), rng.randint(0, 3), regular=True)
        assert star_deformed(star_deformed(y)) == y
        assert compose_deformed(compose_deformed(y, star_deformed(y)), y) == y


def test_quotients_are_homomorphisms():
    rng = random.Random(2)
    for _ in range(300):
        m, k, n = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        x = random_cobordism(rng, m, k)
        y = random_cobordism(rng, k, n)
        xy = compose_cobordism(x, y)
        assert to_labeled(xy) == compose_labeled(to_labeled(x), to_labeled(y))
        assert to_deformed(xy) == compose_deformed(to_deformed(x), to_deformed(y))


def test_labeled_star_reverses_products():
    rng = random.Random(3)
    for _ in range(300):
        m, k, n = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        x = to_labeled(random_cobordism(rng, m, k, regular=True))
        y = to_labeled(random_cobordism(rng, k, n, regular=True))
        assert star_labeled(compose_labeled(x, y)) == compose_labeled(
            star_labeled(y), star_labeled(x)
        )


def test_involutions_on_cobordisms():
    rng = random.Random(4)
    for _ in range(200):
        x = random_cobordism(rng, rng.randint(0, 3), rng.randint(0, 3))
        for inv in (sigma, rho):
            assert inv(inv(x)) == x


def test_fiber_oracle_matches_iteration():
    e = identity_partition(1)
    rng = random.Random(5)
    for _ in range(200):
        xs = [
            make_cobordism(e, (rng.randint(0, 3),), {0: rng.randint(0, 2)}, False)
            for _ in range(rng.randint(1, 5))
        ]
        direct = xs[0]
        for x in xs[1:]:
            direct = compose_cobordism(direct, x)
        assert fiber_product_oracle(e, xs) == direct


def test_fiber_oracle_on_rank_zero_base():
    e = make_partition(1, 1, [[vin(1)], [vout(1)]])
    xs = [make_cobordism(e, (1, 2), (), False), make_cobordism(e, (0, 1), (), False)]
    direct = compose_cobordism(xs[0], xs[1])
    assert fiber_product_oracle(e, xs) == direct
