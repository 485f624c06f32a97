"""
The type-C Weyl group of ``Sp_{4n}`` seen through its embedding ``kappa``
into ``S_{4n}``: ``r_i -> s_i s_{4n-i}`` for ``i < 2n`` and
``r_{2n} -> s_{2n}``. Its image is the set of ``iota``-fixed permutations.

Elements are never stored as signed permutations; everything lives in
``S_{4n}``.

>>> tau_bar_word(2).letters
(4, 3, 4, 2)
>>> str(kappa_expand(tau_bar_word(2)))
'15263748'
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .boards import right_hull
from .errors import DomainError, RankError
from .perm_core import Permutation, evaluate_word, is_min_coset_rep, length, subword_products, tau

__all__ = [
    "TypeCWord",
    "count_wj_leq_taubar",
    "iter_wj_leq_taubar",
    "kappa_expand",
    "kappa_letters",
    "tau_bar_word",
    "type_c_length",
    "wj_leq_taubar_by_subwords",
]


@dataclass(frozen=True)
class TypeCWord:
    """A word in ``r_1 .. r_{2n}``."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        for a in self.letters:
            if not 1 <= a <= 2 * self.n:
                raise RankError(f"letter r_{a} outside r_1..r_{2 * self.n}")

    def __len__(self) -> int:
        return len(self.letters)


def tau_bar_word(n: int) -> TypeCWord:
    """Descending blocks ``(r_2n .. r_{n+j})`` for ``j = 1..n``, then
    ascending blocks ``(r_k .. r_{2k-2})`` for ``k = n..2``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    letters: list[int] = []
    for j in range(1, n + 1):
        letters.extend(range(2 * n, n + j - 1, -1))
    for k in range(n, 1, -1):
        letters.extend(range(k, 2 * k - 1))
    return TypeCWord(n, tuple(letters))


def kappa_letters(word: TypeCWord) -> list[tuple[int, ...]]:
    """Images of the letters as groups of commuting ``S_{4n}`` generators."""
    n2 = 2 * word.n
    return [(a,) if a == n2 else (a, 2 * n2 - a) for a in word.letters]


def kappa_expand(word: TypeCWord) -> Permutation:
    flat = [s for group in kappa_letters(word) for s in group]
    return evaluate_word(flat, 4 * word.n)


def type_c_length(p: Sequence[int]) -> int:
    """Length in the type-C group of an ``iota``-fixed ``p`` in ``S_{4n}``.

    Half of the inversion count plus the number of values crossing the
    middle from the left half.
    """
    half = len(p) // 2
    crossing = sum(1 for v in p[:half] if v > half)
    total = length(p) + crossing
    if len(p) % 4 or total % 2:
        raise DomainError(f"{tuple(p)} is not in the image of kappa")
    return total // 2


def iter_wj_leq_taubar(n: int) -> Iterator[Permutation]:
    """``iota``-fixed minimal coset representatives inside the hull of ``tau_{2n}``.

    Backtracks rows ``1..2n``; row ``4n+1-i`` is forced to column
    ``4n+1-w(i)`` and must itself lie in the hull. Output is lexicographic.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    m = 4 * n
    half = 2 * n
    ivs = right_hull(tau(2 * n)).intervals
    used = [False] * (m + 2)
    marks = [0] * m

    def place(i: int) -> Iterator[Permutation]:
        if i == half:
            yield Permutation._trusted(marks)
            return
        a, b = ivs[i]
        for c in range(ivs[i - 1][0] if i else 1, a):
            if not used[c]:
                return
        lo = a
        if i % 2:
            lo = max(lo, marks[i - 1] + 1)
        r = m - 1 - i  # 0-based mirror row
        ra, rb = ivs[r]
        for c in range(lo, b + 1):
            mc = m + 1 - c
            if used[c] or used[mc] or c == mc or not ra <= mc <= rb:
                continue
            used[c] = used[mc] = True
            marks[i], marks[r] = c, mc
            yield from place(i + 1)
            used[c] = used[mc] = False

    yield from place(0)


def count_wj_leq_taubar(n: int) -> int:
    return sum(1 for _ in iter_wj_leq_taubar(n))


def wj_leq_taubar_by_subwords(n: int) -> set[Permutation]:
    """Independent route: ``kappa`` of every subword product of the reduced
    word of ``tau_bar``, kept when ``w(2k-1) < w(2k)`` for all ``k``."""
    interval = subword_products(kappa_letters(tau_bar_word(n)), 4 * n)
    return {w for w in interval if is_min_coset_rep(w)}
