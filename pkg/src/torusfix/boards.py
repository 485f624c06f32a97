"""
Rook arrangements, right hulls and hull-restricted enumeration.

A rook arrangement on an ``m x m`` board is stored row by row: ``marks[i-1]``
is the column of the mark in row ``i``. Reading the marks as a one-line
word gives the permutation of the arrangement.

The right hull of a permutation ``w`` is the smallest right-aligned skew
Ferrers board holding every mark of ``w``. Row ``i`` of it spans columns
``min(w(i..m))`` through ``max(w(1..i))``. For ``w`` avoiding 4231, 35142,
42513 and 351624 (in particular every ``tau_n``) an arrangement lies in
the hull of ``w`` exactly when its permutation is below ``w`` in Bruhat
order, so intervals below ``tau_n`` can be enumerated on the board alone.

>>> right_hull(tau(3)).intervals
((1, 1), (2, 4), (2, 4), (3, 5), (3, 5), (6, 6))
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import DomainError
from .perm_core import Permutation, tau

__all__ = [
    "RookArrangement",
    "SkewBoard",
    "enumerate_rooks_on_board",
    "hull_contains",
    "iter_wj_leq_tau",
    "count_wj_leq_tau",
    "leq_tau_via_hull",
    "perm_of_rook",
    "right_hull",
    "rook_of_perm",
]


@dataclass(frozen=True, order=True)
class RookArrangement:
    marks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(self.marks))
        m = len(self.marks)
        if m == 0 or sorted(self.marks) != list(range(1, m + 1)):
            raise DomainError(f"{self.marks} is not one mark per row and column")

    @property
    def size(self) -> int:
        return len(self.marks)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.marks, start=1)]

    def render(self) -> str:
        return "\n".join(
            "".join("x" if j == c else "." for c in range(1, self.size + 1))
            for j in self.marks
        )


@dataclass(frozen=True)
class SkewBoard:
    """Per-row column intervals ``(a_i, b_i)`` with both ends weakly increasing."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ivs = tuple((int(a), int(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        m = len(ivs)
        if m == 0:
            raise DomainError("empty board")
        for i, (a, b) in enumerate(ivs):
            if not 1 <= a <= b <= m:
                raise DomainError(f"row {i + 1}: bad interval [{a},{b}] for size {m}")
            if i and (a < ivs[i - 1][0] or b < ivs[i - 1][1]):
                raise DomainError(f"row {i + 1}: interval ends must weakly increase")

    @property
    def size(self) -> int:
        return len(self.intervals)

    def render(self, marks: Sequence[int] | None = None) -> str:
        lines = []
        for i, (a, b) in enumerate(self.intervals):
            row = []
            for c in range(1, self.size + 1):
                if marks is not None and marks[i] == c:
                    row.append("x")
                else:
                    row.append("#" if a <= c <= b else ".")
            lines.append("".join(row))
        return "\n".join(lines)


def rook_of_perm(sigma: Sequence[int]) -> RookArrangement:
    return RookArrangement(tuple(sigma))


def perm_of_rook(rook: RookArrangement) -> Permutation:
    return Permutation._trusted(rook.marks)


def right_hull(w: Sequence[int]) -> SkewBoard:
    m = len(w)
    upper = []
    top = 0
    for v in w:
        top = max(top, v)
        upper.append(top)
    lower = [0] * m
    low = m + 1
    for i in range(m - 1, -1, -1):
        low = min(low, w[i])
        lower[i] = low
    return SkewBoard(tuple(zip(lower, upper)))


def hull_contains(board: SkewBoard, rook: RookArrangement) -> bool:
    if board.size != rook.size:
        raise DomainError(f"board size {board.size} vs arrangement size {rook.size}")
    return all(a <= j <= b for (a, b), j in zip(board.intervals, rook.marks))


def _backtrack(board: SkewBoard, ascending_pairs: bool) -> Iterator[tuple[int, ...]]:
    m = board.size
    ivs = board.intervals
    used = [False] * (m + 2)
    marks = [0] * m

    def place(i: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(marks)
            return
        a, b = ivs[i]
        # columns left of a_i are unreachable from every later row
        for c in range(ivs[i - 1][0] if i else 1, a):
            if not used[c]:
                return
        lo = a
        if ascending_pairs and i % 2:
            lo = max(lo, marks[i - 1] + 1)
        for c in range(lo, b + 1):
            if not used[c]:
                used[c] = True
                marks[i] = c
                yield from place(i + 1)
                used[c] = False

    yield from place(0)


def enumerate_rooks_on_board(board: SkewBoard) -> Iterator[RookArrangement]:
    """All rook arrangements inside ``board``, lexicographic in ``marks``."""
    for marks in _backtrack(board, ascending_pairs=False):
        yield RookArrangement(marks)


def leq_tau_via_hull(u: Sequence[int], n: int) -> bool:
    """Bruhat comparison ``u <= tau_n`` decided on the right hull of ``tau_n``."""
    if len(u) != 2 * n:
        raise DomainError(f"expected a permutation of size {2 * n}, got {len(u)}")
    return hull_contains(right_hull(tau(n)), rook_of_perm(u))


def iter_wj_leq_tau(n: int) -> Iterator[Permutation]:
    """Minimal coset representatives below ``tau_n``, lexicographically.

    Runs the hull backtracking with the extra pruning ``w(2k-1) < w(2k)``.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    for marks in _backtrack(right_hull(tau(n)), ascending_pairs=True):
        yield Permutation._trusted(marks)


def count_wj_leq_tau(n: int) -> int:
    return sum(1 for _ in iter_wj_leq_tau(n))
