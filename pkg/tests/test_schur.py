import pytest

from polyinj.characters import Character
from polyinj.schur import (
    compositions,
    h_character,
    partitions,
    pieri_expand,
    schur_character,
    schur_character_jt,
    sym_tensor_nabla_mult,
)
from polyinj.weights import Weight


def test_h_character():
    assert h_character(2, 2) == Character(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert h_character(0, 3) == Character.one(3)
    chi = h_character(3, 3)
    assert len(chi) == 10 and all(m == 1 for _, m in chi.items())
    with pytest.raises(ValueError):
        h_character(-1, 2)


def test_schur_examples():
    assert schur_character(Weight((2, 1))) == Character(2, {(2, 1): 1, (1, 2): 1})
    assert schur_character(Weight((1, 1, 1))) == Character.monomial((1, 1, 1))
    for r in range(7):
        assert schur_character(Weight((r, 0))) == h_character(r, 2)
    with pytest.raises(ValueError):
        schur_character(Weight((1, 2)))


def test_jacobi_trudi_examples():
    assert schur_character_jt(Weight((2, 1))) == h_character(2, 2) * h_character(1, 2) - h_character(3, 2)
    assert schur_character_jt(Weight((2, 2))) == Character.monomial((2, 2))
    for r in range(7):
        assert schur_character_jt(Weight((r, 0))) == h_character(r, 2)


def test_schur_routes_agree_small():
    for n in (1, 2, 3):
        for r in range(7):
            for lam in partitions(r, n):
                assert schur_character(lam) == schur_character_jt(lam)


def test_schur_stability_under_variable_deletion():
    """A Schur character with empty last row restricts, by keeping the
    exponents whose last entry is zero, to the same Schur character in one
    variable fewer."""
    for n in (2, 3, 4):
        for r in range(7):
            for lam in partitions(r, n - 1):
                padded = Weight(tuple(lam) + (0,))
                chi = schur_character(padded)
                restricted = Character(
                    n - 1, {exp[:-1]: m for exp, m in chi.items() if exp[-1] == 0}
                )
                assert restricted == schur_character(lam)


@pytest.mark.parametrize(
    "lam, r, expected",
    [
        ((1, 0), 1, [(2, 0), (1, 1)]),
        ((0, 0, 0), 4, [(4, 0, 0)]),
        ((2, 1), 2, [(4, 1), (3, 2)]),
        ((2, 2), 1, [(3, 2)]),
    ],
)
def test_pieri_examples(lam, r, expected):
    assert pieri_expand(Weight(lam), r) == [Weight(mu) for mu in expected]


def test_pieri_matches_character_product():
    for n in (2, 3):
        for d in range(6):
            for lam in partitions(d, n):
                for r in range(6 - d):
                    total = Character.zero(n)
                    for mu in pieri_expand(lam, r):
                        total = total + schur_character(mu)
                    assert total == schur_character(lam) * h_character(r, n)


@pytest.mark.parametrize(
    "alpha, lam, expected",
    [
        ((1, 1), (1, 1), 1),
        ((2, 1), (2, 1), 1),
        ((3,), (2, 1), 0),
        ((2, 1, 0, 0), (2, 1), 1),  # trailing zeros are ignored
        ((1, 2), (2, 1), 1),  # order of the composition does not matter
    ],
)
def test_sym_tensor_nabla_mult(alpha, lam, expected):
    assert sym_tensor_nabla_mult(alpha, Weight(lam)) == expected


def test_sym_tensor_nabla_mult_degree_mismatch():
    with pytest.raises(ValueError):
        sym_tensor_nabla_mult((2, 2), Weight((2, 1)))
    with pytest.raises(ValueError):
        sym_tensor_nabla_mult((-1, 4), Weight((2, 1)))


def test_partitions_enumeration():
    assert partitions(4, 2) == (Weight((4, 0)), Weight((3, 1)), Weight((2, 2)))
    assert partitions(0, 3) == (Weight((0, 0, 0)),)
    assert partitions(3, 1) == (Weight((3,)),)
    # lex-descending
    for r in range(8):
        ps = partitions(r, 4)
        assert list(ps) == sorted(ps, reverse=True)
        assert all(p.is_dominant() and p.degree() == r for p in ps)


def test_compositions_enumeration():
    assert compositions(0, 0) == ((),)
    assert compositions(1, 0) == ()
    assert len(compositions(8, 4)) == 165  # stars and bars: C(11, 3)
    assert all(sum(c) == 8 for c in compositions(8, 4))


def test_pieri_full_grid():
    from polyinj.checks import check_pieri_products

    result = check_pieri_products(10, 4)
    assert result.ok, result.failures
