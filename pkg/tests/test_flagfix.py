import itertools

import pytest

from torusfix.boards import iter_wj_leq_tau
from torusfix.dellac import enumerate_dc
from torusfix.errors import DomainError, NotRealizableError
from torusfix.flagfix import (
    FixedPointChain,
    FlagSupportChain,
    alpha,
    alpha_inverse,
    beta,
    check_feigin_cases,
    enumerate_fixed_chains,
    feigin_map,
)
from torusfix.genocchi_poly import h_value
from torusfix.perm_core import Permutation

P = Permutation.from_string


def _chains_brute(n):
    """Oracle: every tuple of k-subsets, filtered by the chain condition."""
    levels = [list(itertools.combinations(range(1, n + 2), k)) for k in range(1, n + 1)]
    out = []
    for chain in itertools.product(*levels):
        if all(set(chain[k]) - {k + 2} <= set(chain[k + 1]) for k in range(n - 1)):
            out.append(chain)
    return sorted(out)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_enumeration_matches_brute_force(n):
    assert [c.subsets for c in enumerate_fixed_chains(n)] == _chains_brute(n)


def test_chain_counts():
    assert [sum(1 for _ in enumerate_fixed_chains(n)) for n in (1, 2, 3)] == [2, 7, 38]


def test_chain_validation():
    with pytest.raises(DomainError):
        FixedPointChain(2, ((1,), (2, 3)))
    with pytest.raises(DomainError):
        FixedPointChain(2, ((1,), (1,)))
    chain = FixedPointChain(2, ((1,), (1, 3)))
    assert chain.subset(0) == frozenset()
    assert chain.subset(3) == {1, 2, 3}


def test_support_validation():
    with pytest.raises(DomainError):
        FlagSupportChain(2, ((1,), (2, 3, 4)))
    with pytest.raises(DomainError):
        FlagSupportChain(2, ((1, 2), (1, 2, 3)))


@pytest.mark.parametrize(
    "subsets, expected",
    [
        (((1,), (1, 3)), ((3,), (1, 2, 3))),
        (((1,), (1, 2)), ((3,), (1, 3, 4))),
        (((2,), (1, 2)), ((1,), (1, 3, 4))),
    ],
)
def test_beta_examples(subsets, expected):
    assert beta(FixedPointChain(2, subsets)).supports == expected


@pytest.mark.parametrize(
    "sigma, expected",
    [
        ("142536", ((3,), (1, 3, 4))),
        ("124536", ((1,), (1, 3, 4))),
        ("123456", ((1,), (1, 2, 3))),
    ],
)
def test_alpha_examples(sigma, expected):
    assert alpha(P(sigma)).supports == expected


def test_alpha_domain():
    with pytest.raises(DomainError):
        alpha(P("214356"))
    with pytest.raises(DomainError):
        alpha(P("12"))


def test_alpha_inverse_examples():
    assert alpha_inverse(FlagSupportChain(2, ((3,), (1, 3, 4)))) == P("142536")
    with pytest.raises(NotRealizableError):
        alpha_inverse(FlagSupportChain(2, ((4,), (1, 2, 4))))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_alpha_round_trips(n):
    for sigma in iter_wj_leq_tau(n + 1):
        assert alpha_inverse(alpha(sigma)) == sigma


@pytest.mark.parametrize(
    "subsets, rows",
    [
        (((1,), (1, 3)), ((1, 4), (2, 3), (5, 6))),
        (((1,), (1, 2)), ((1, 4), (2, 5), (3, 6))),
    ],
)
def test_feigin_map_examples(subsets, rows):
    assert feigin_map(FixedPointChain(2, subsets)).rows == rows


@pytest.mark.parametrize("n", range(1, 6))
def test_feigin_map_is_a_bijection(n):
    chains = list(enumerate_fixed_chains(n))
    for chain in chains:
        supports = beta(chain).supports
        for l, s in enumerate(supports, start=1):
            assert len(s) == 2 * l - 1
        assert all(set(a) < set(b) for a, b in zip(supports, supports[1:]))
    images = [feigin_map(c) for c in chains]
    assert len(set(images)) == len(images) == h_value(n + 1)
    assert set(images) == set(enumerate_dc(n + 1))


def test_case_check_examples():
    checks = check_feigin_cases(FixedPointChain(2, ((1,), (1, 3))))
    row2 = checks[1]
    assert (row2.case, row2.status) == ("1", "pass")
    assert row2.actual_row == (2, 3) and row2.actual_step == (1, 2)
    checks = check_feigin_cases(FixedPointChain(2, ((1,), (1, 2))))
    assert (checks[1].case, checks[1].status) == ("1 (j=l)", "unchecked")


@pytest.mark.parametrize("n", range(1, 6))
def test_stated_cases_never_fail(n):
    for chain in enumerate_fixed_chains(n):
        checks = check_feigin_cases(chain)
        assert len(checks) == n + 1
        for c in checks:
            assert c.status != "fail", c
            if c.status == "unchecked":
                assert "(" in c.case
            else:
                assert c.case in ("1", "2", "3")
