import itertools
from functools import lru_cache

import pytest

from polyinj.checks import check_digit_expansion, check_dominance_order, check_eadic_roundtrip
from polyinj.weights import (
    GroupParams,
    Weight,
    delta,
    digit_expansion,
    dominance_leq,
    eadic_split,
    is_column_regular,
    omega,
)


def test_weight_basics():
    w = Weight((5, 2))
    assert w.n == 2 and w.degree() == 7
    assert w.is_dominant() and w.is_polynomial()
    assert not Weight((1, 2)).is_dominant()
    assert not Weight((1, -1)).is_polynomial()
    assert Weight((3, 1, 0)).reversed() == Weight((0, 1, 3))
    assert w + Weight((1, 1)) == (6, 3)
    assert w - Weight((1, 1)) == (4, 1)
    assert 3 * Weight((1, 0)) == (3, 0)
    assert -Weight((1, -2)) == (-1, 2)


def test_weight_rank_mismatch():
    with pytest.raises(ValueError):
        Weight((1, 0)) + Weight((1, 0, 0))
    with pytest.raises(ValueError):
        dominance_leq((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        Weight(())


def test_standard_weights():
    assert omega(3) == (1, 1, 1)
    assert delta(4) == (3, 2, 1, 0)
    assert delta(1) == (0,)


@pytest.mark.parametrize(
    "lam, e, expected",
    [((2, 1), 2, True), ((2, 0), 2, False), ((4, 2, 1), 3, True), ((0, 0), 5, True)],
)
def test_is_column_regular(lam, e, expected):
    assert is_column_regular(Weight(lam), e) is expected


@pytest.mark.parametrize(
    "lam, e, lam0, lbar",
    [
        ((2, 1), 2, (2, 1), (0, 0)),
        ((5, 2), 3, (2, 2), (1, 0)),
        ((0, 0), 5, (0, 0), (0, 0)),
        ((3, 1, 0), 2, (1, 1, 0), (1, 0, 0)),
    ],
)
def test_eadic_split_examples(lam, e, lam0, lbar):
    a, b = eadic_split(Weight(lam), e)
    assert (a, b) == (Weight(lam0), Weight(lbar))


def test_eadic_split_not_entrywise_reduction():
    # (2,1) base 2 keeps the 2 in front: only differences and the last entry
    # are bounded by the base
    lam0, lbar = eadic_split(Weight((2, 1)), 2)
    assert lam0 == (2, 1) and lbar == (0, 0)


def test_eadic_split_inherits_shape():
    for n in (2, 3):
        for entries in itertools.product(range(-3, 6), repeat=n):
            lam = Weight(entries)
            for e in (2, 3):
                lam0, lbar = eadic_split(lam, e)
                assert lam0 + e * lbar == lam
                assert is_column_regular(lam0, e)
                if lam.is_dominant():
                    assert lbar.is_dominant()
                if lam.is_dominant() and lam.is_polynomial():
                    assert lbar.is_polynomial()


def test_eadic_roundtrip_against_exhaustive_candidates():
    result = check_eadic_roundtrip(deg_max=30, n_max=4, bases=(2, 3, 5))
    assert result.ok, result.failures


@pytest.mark.parametrize(
    "lam, mu, expected",
    [
        ((1, 1), (2, 0), True),
        ((2, 0), (1, 1), False),
        ((2, 1, 0), (3, 0, 0), True),
        ((3, 0, 0), (2, 1, 0), False),
        # degrees differ, so incomparable either way
        ((2, 2, 0), (3, 0, 0), False),
        ((3, 0, 0), (2, 2, 0), False),
        ((1, 0), (0, 1), False),
        ((2, 1), (2, 1), True),
        ((2, 1), (3, 1), False),
    ],
)
def test_dominance_examples(lam, mu, expected):
    assert dominance_leq(Weight(lam), Weight(mu)) is expected


def _positive_roots(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            root = [0] * n
            root[i], root[j] = 1, -1
            out.append(tuple(root))
    return out


def test_dominance_against_root_sum_decomposition():
    """Brute-force oracle: mu - lam must decompose as a nonnegative sum of
    positive roots.  Subtracting a root strictly lowers sum((n-i)*v_i)."""
    for n in (2, 3):
        roots = _positive_roots(n)

        @lru_cache(maxsize=None)
        def decomposes(v):
            if all(a == 0 for a in v):
                return True
            return any(
                decomposes(tuple(a - b for a, b in zip(v, root)))
                for root in roots
                if sum((len(v) - i) * (a - b) for i, (a, b) in enumerate(zip(v, root))) >= 0
            )

        for lam in itertools.product(range(4), repeat=n):
            for mu in itertools.product(range(4), repeat=n):
                diff = tuple(b - a for a, b in zip(lam, mu))
                assert dominance_leq(Weight(lam), Weight(mu)) == decomposes(diff)


def test_dominance_partial_order_and_lex_refinement():
    result = check_dominance_order(deg_max=12, n_max=4)
    assert result.ok, result.failures


def test_group_params():
    assert GroupParams(1, 2).e == 2
    assert GroupParams(2, 3).e == 2
    assert GroupParams(3, 0).e == 3
    assert GroupParams(1, 5).classical() == GroupParams(1, 5)
    assert GroupParams(2, 3).classical() == GroupParams(1, 3)
    with pytest.raises(ValueError):
        GroupParams(1, 0)
    with pytest.raises(ValueError):
        GroupParams(1, 4)
    with pytest.raises(ValueError):
        GroupParams(0, 2)
    with pytest.raises(ValueError):
        GroupParams(2, 0).classical()


@pytest.mark.parametrize(
    "lam, l, p, quantum, classical",
    [
        ((6, 1), 2, 2, (2, 1), ((0, 0), (1, 0))),
        ((3, 1), 1, 2, (1, 1), ((1, 0),)),
        ((1, 0), 1, 2, (1, 0), ()),
        ((1, 0), 3, 2, (1, 0), ()),
        ((1, 0), 2, 0, (1, 0), ((0, 0),)),
        ((2, 2), 2, 0, (0, 0), ((1, 1),)),
    ],
)
def test_digit_expansion_examples(lam, l, p, quantum, classical):
    exp = digit_expansion(Weight(lam), GroupParams(l, p))
    assert exp.quantum_digit == Weight(quantum)
    assert exp.classical_digits == tuple(Weight(d) for d in classical)
    assert exp.reconstruct() == Weight(lam)


def test_digit_expansion_rejects_bad_weights():
    with pytest.raises(ValueError):
        digit_expansion(Weight((1, 2)), GroupParams(1, 2))
    with pytest.raises(ValueError):
        digit_expansion(Weight((1, -1)), GroupParams(1, 2))


def test_digit_expansion_properties():
    result = check_digit_expansion(deg_max=30, n_max=4)
    assert result.ok, result.failures


def test_base_p_digits():
    exp = digit_expansion(Weight((6, 1)), GroupParams(1, 2))
    assert exp.base_p_digits() == (Weight((2, 1)), Weight((0, 0)), Weight((1, 0)))
    assert sum((2 ** i) * d[0] for i, d in enumerate(exp.base_p_digits())) == 6
    assert sum((2 ** i) * d[1] for i, d in enumerate(exp.base_p_digits())) == 1
    with pytest.raises(ValueError):
        digit_expansion(Weight((6, 1)), GroupParams(2, 2)).base_p_digits()
