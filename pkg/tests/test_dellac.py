import itertools

import pytest

from torusfix.boards import RookArrangement, enumerate_rooks_on_board, hull_contains, right_hull, rook_of_perm
from torusfix.dellac import (
    DellacConfig,
    SpDellacConfig,
    blow,
    enumerate_dc,
    enumerate_spdc,
    is_symplectic,
    melt,
    mirror,
)
from torusfix.errors import DomainError, PreconditionError
from torusfix.perm_core import Permutation, iota, tau


def _dc_brute(n):
    """Oracle: try every choice of a column pair per row and keep the valid boards."""
    found = []
    choices = [list(itertools.combinations(range(i, n + i + 1), 2)) for i in range(1, n + 1)]
    for rows in itertools.product(*choices):
        cols = sorted(c for row in rows for c in row)
        if cols == list(range(1, 2 * n + 1)):
            found.append(rows)
    return sorted(found)


def test_config_validation():
    DellacConfig(2, ((1, 2), (3, 4)))
    with pytest.raises(DomainError):
        DellacConfig(2, ((1, 4), (2, 3)))  # (1, 4) is out of reach
    with pytest.raises(DomainError):
        DellacConfig(2, ((1, 2), (2, 4)))
    with pytest.raises(DomainError):
        DellacConfig(2, ((1, 2),))


def test_render():
    assert DellacConfig(2, ((1, 3), (2, 4))).render() == "x.x.\n.x.x"


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 7)])
def test_small_counts(n, count):
    assert sum(1 for _ in enumerate_dc(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_dc_matches_brute_force(n):
    assert [c.rows for c in enumerate_dc(n)] == _dc_brute(n)


def test_melt_blow_examples():
    rook = rook_of_perm(Permutation.from_string("142536"))
    assert melt(rook).rows == ((1, 4), (2, 5), (3, 6))
    assert blow(DellacConfig(3, ((1, 4), (2, 5), (3, 6)))).marks == (1, 4, 2, 5, 3, 6)
    assert melt(RookArrangement((1, 2, 3, 4))).rows == ((1, 2), (3, 4))


def test_melt_precondition():
    with pytest.raises(PreconditionError):
        melt(rook_of_perm(Permutation.from_string("214365")))
    with pytest.raises(DomainError):
        melt(RookArrangement((1, 2, 3)))


@pytest.mark.parametrize("n", range(1, 7))
def test_melt_after_blow_is_identity(n):
    for config in enumerate_dc(n):
        assert melt(blow(config)) == config


@pytest.mark.parametrize("n", range(1, 6))
def test_melt_image_is_every_configuration(n):
    board = right_hull(tau(n))
    ascending = [
        r for r in enumerate_rooks_on_board(board)
        if all(r.marks[2 * k] < r.marks[2 * k + 1] for k in range(n))
    ]
    image = [melt(r) for r in ascending]
    assert len(set(image)) == len(image)
    assert set(image) == set(enumerate_dc(n))
    for config in enumerate_dc(n):
        assert hull_contains(board, blow(config))


def test_is_symplectic_examples():
    assert is_symplectic(DellacConfig(2, ((1, 3), (2, 4))))
    assert is_symplectic(DellacConfig(2, ((1, 2), (3, 4))))
    # the plain block diagonal board is itself a half-turn symmetric
    assert is_symplectic(DellacConfig(4, ((1, 2), (3, 4), (5, 6), (7, 8))))
    assert not is_symplectic(DellacConfig(4, ((1, 3), (2, 4), (5, 6), (7, 8))))
    with pytest.raises(DomainError):
        is_symplectic(DellacConfig(1, ((1, 2),)))


def test_mirror_is_involution():
    for config in enumerate_dc(4):
        assert mirror(mirror(config.rows)) == config.rows


@pytest.mark.parametrize("half", [1, 2, 3])
def test_symmetry_is_iota_fixed_blow(half):
    for config in enumerate_dc(2 * half):
        p = Permutation(blow(config).marks)
        assert is_symplectic(config) == (iota(p) == p)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_spdc_matches_filter(n):
    fast = [c.rows for c in enumerate_spdc(n)]
    slow = [c.rows for c in enumerate_dc(2 * n) if is_symplectic(c)]
    assert fast == slow
    assert all(mirror(rows) == rows for rows in fast)


def test_spdc_first_values():
    assert sum(1 for _ in enumerate_spdc(1)) == 2
    assert sum(1 for _ in enumerate_spdc(2)) == 10


def test_spdc_validation():
    SpDellacConfig(2, ((1, 3), (2, 4)))
    with pytest.raises(DomainError):
        SpDellacConfig(4, ((1, 3), (2, 4), (5, 6), (7, 8)))
    assert SpDellacConfig(2, ((1, 3), (2, 4))).half == 1
