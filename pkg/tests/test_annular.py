import random

import pytest

from diagcat import (
    affine_identity,
    affine_power,
    build_ann_monoid,
    compose_affine,
    compose_pair,
    compose_triple,
    cup_cap,
    enumerate_affine,
    lambda_pow,
    make_affine,
    make_pair,
    make_triple,
    project_to_ann,
    rho_affine,
    shift_gap,
    sigma_affine,
    zeta,
)
from diagcat.annular import IN, OUT
from diagcat.errors import (
    CrossingError,
    NegativeLabel,
    RangeError,
    RankZero,
    UnmatchedPoint,
)
from diagcat.sampling import random_affine, random_pair, random_triple


def test_generators_have_expected_shapes():
    z = zeta(3)
    assert (z.m, z.n, z.rank) == (3, 3, 3)
    assert affine_identity(3) != z
    cc = cup_cap(3, 2)
    assert cc.rank == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rotation_power_is_full_shift(n):
    assert affine_power(zeta(n), n) == lambda_pow(n)


def test_full_shift_slides_across_everything():
    rng = random.Random(0)
    for _ in range(100):
        a = random_affine(rng, rng.randint(1, 3))
        assert (
            compose_affine(lambda_pow(a.m), a).product
            == compose_affine(a, lambda_pow(a.n)).product
        )


def test_make_affine_rejects_crossings():
    with pytest.raises(CrossingError):
        make_affine(2, 2, {
            (IN, 1): (0, OUT, 2), (IN, 2): (0, OUT, 1),
            (OUT, 1): (0, IN, 2), (OUT, 2): (0, IN, 1),
        })


def test_make_affine_rejects_unmatched():
    with pytest.raises(UnmatchedPoint):
        make_affine(2, 0, {(IN, 1): (0, IN, 2)})


@pytest.mark.parametrize(
    "m, n, count", [(1, 1, 5), (2, 2, 13), (3, 3, 58), (1, 3, 15)]
)
def test_enumerate_affine_counts(m, n, count):
    diagrams = list(enumerate_affine(m, n, 2))
    assert len(diagrams) == count
    assert len(set(diagrams)) == count


def test_circle_counts_on_cup_caps():
    cc1, cc2 = cup_cap(2, 1), cup_cap(2, 2)
    r = compose_affine(cc1, cc1)
    assert r.product == cc1 and (r.b0, r.bw) == (1, 0)
    w = compose_affine(cc1, cc2)
    assert (w.b0, w.bw) == (0, 1)


def test_shift_gap_frozen_cases():
    z = zeta(2)
    assert shift_gap(z, affine_power(z, 3)) == 1
    assert shift_gap(z, sigma_affine(z)) == -1
    assert shift_gap(z, affine_identity(2)) is None


def test_shift_gap_requires_positive_rank():
    wrap = compose_affine(cup_cap(2, 1), cup_cap(2, 2)).product
    with pytest.raises(RankZero):
        shift_gap(wrap, cup_cap(2, 1))


def test_shadow_collapses_exactly_the_shift():
    z = zeta(3)
    shifted = compose_affine(lambda_pow(3), z).product
    assert shifted != z
    assert project_to_ann(shifted) == project_to_ann(z)


def test_pair_wrap_counter():
    wrap = compose_affine(cup_cap(2, 1), cup_cap(2, 2)).product
    p = make_pair(wrap, 2, False)
    q = compose_pair(p, p)
    assert q.k == 5  # 2 + 2 + one new wrap circle
    with pytest.raises(RangeError):
        make_pair(zeta(2), 1, False)  # positive rank forces k = 0
    with pytest.raises(NegativeLabel):
        make_pair(wrap, -1, False)  # negative count needs the regular tower


def test_pair_and_triple_associativity():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 3)
        x, y, z = (random_pair(rng, n) for _ in range(3))
        assert compose_pair(compose_pair(x, y), z) == compose_pair(x, compose_pair(y, z))
        t, u, v = (random_triple(rng, n) for _ in range(3))
        assert compose_triple(compose_triple(t, u), v) == compose_triple(
            t, compose_triple(u, v)
        )


def test_triple_counts_contractible_circles():
    cc = cup_cap(2, 1)
    t = make_triple(cc, 0, 0, False)
    r = compose_triple(t, t)
    assert r.k0 == 1 and r.k == 0 and r.skeleton == cc


def test_involutions_on_affine_families():
    rng = random.Random(2)
    for _ in range(100):
        a = random_affine(rng, rng.randint(1, 3))
        b = random_affine(rng, a.n)
        for inv in (sigma_affine, rho_affine):
            assert inv(inv(a)) == a
            assert (
                inv(compose_affine(a, b).product)
                == compose_affine(inv(b), inv(a)).product
            )


def test_ann3_monoid_structure():
    annm = build_ann_monoid(3)
    fm = annm.monoid
    assert fm.size == 12
    assert len(fm.units()) == 3
    assert len(fm.idempotents()) == 10
    band = [i for i, e in enumerate(annm.elements) if e.rank == 1]
    assert len(band) == 9
    assert all(fm.table[i][i] == i for i in band)


def test_rank_one_idempotent_census():
    idems = [
        d
        for d in enumerate_affine(3, 3, 2)
        if d.rank == 1 and compose_affine(d, d).product == d
    ]
    assert len(idems) == 9
