import pytest

from xorclique.constructions import (
    affine_construction,
    best_known_lower,
    best_known_lower_provenance,
    big_n_construction,
    stacked_affine,
    weighted_pk_construction,
)
from xorclique.errors import NotPrimePower, NTooSmall, PTooLarge, TooManyCopies
from xorclique.family import trivial_construction, verify_semiintersecting
from xorclique.field import prime_powers_upto

PP9 = prime_powers_upto(9)


def valid(fam):
    rep = verify_semiintersecting(fam)
    assert rep.valid, rep.violations[:3]
    return True


@pytest.mark.parametrize("p", PP9)
def test_affine(p):
    fam = affine_construction(p)
    assert (fam.k, fam.N, len(fam)) == (p, p * p, p * p)
    assert valid(fam)


def test_affine_rejects_composite():
    with pytest.raises(NotPrimePower):
        affine_construction(6)


@pytest.mark.parametrize("p,l", [(p, l) for p in PP9 for l in range(1, p + 2)])
def test_stacked(p, l):
    fam = stacked_affine(p, l)
    assert (fam.k, fam.N, len(fam)) == (p, l * p * p, l * p * p)
    assert valid(fam)


def test_stacked_examples():
    assert len(stacked_affine(2, 3)) == 12
    assert len(stacked_affine(5, 1)) == len(affine_construction(5))
    with pytest.raises(TooManyCopies):
        stacked_affine(2, 4)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_big_n(p):
    for N in range(p ** 3, p ** 3 + 3 * p + 2):
        fam = big_n_construction(p, N)
        assert len(fam) == N // p - p * p + p ** 3
        assert len(fam) - len(trivial_construction(p, N)) == p ** 3 - p * p
        assert valid(fam)


def test_big_n_examples():
    assert len(big_n_construction(2, 8)) == 8
    assert len(big_n_construction(2, 12)) == 10
    assert len(big_n_construction(3, 27)) == 27
    with pytest.raises(NTooSmall):
        big_n_construction(2, 7)


@pytest.mark.parametrize("k,p", [(k, p) for k in range(2, 10) for p in PP9 if p <= k])
def test_weighted(k, p):
    fam = weighted_pk_construction(k, p)
    assert (fam.k, fam.N, len(fam)) == (k, p * k, p * p)
    assert valid(fam)


def test_weighted_examples():
    assert len(weighted_pk_construction(5, 3)) == 9
    assert [(m.a, m.b) for m in weighted_pk_construction(3, 3)] == \
        [(m.a, m.b) for m in affine_construction(3)]
    with pytest.raises(PTooLarge):
        weighted_pk_construction(2, 3)


def test_best_known_examples():
    assert best_known_lower(2, 100)[0] == 54
    assert best_known_lower(6, 36)[0] >= 25
    assert best_known_lower(1, 5)[0] == 5
    value, prov = best_known_lower_provenance(5, 15)
    assert value == 9 and prov.startswith("weighted")


def test_best_known_witnesses_and_monotone():
    for k in range(1, 7):
        prev = 0
        for N in range(k, 41):
            value, fam = best_known_lower(k, N)
            assert value >= prev
            prev = value
            assert (fam.k, fam.N, len(fam)) == (k, N, value)
            assert valid(fam)
            assert best_known_lower(k, N, witness=False) == (value, None)
