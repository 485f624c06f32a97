"""
Dellac configurations and their symplectic variant, with the melt and
blow maps to rook arrangements restricted by ``tau_n``.

A Dellac configuration of size ``n`` is a board with ``n`` rows and ``2n``
columns; each row holds two marks, each column one, and a mark ``(i, j)``
needs ``i <= j <= n + i``. Rows are stored as ascending column pairs.

>>> [c.rows for c in enumerate_dc(2)]
[((1, 2), (3, 4)), ((1, 3), (2, 4))]
>>> melt(rook_of_perm((1, 2, 4, 5, 3, 6))).rows
((1, 2), (4, 5), (3, 6))
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .boards import RookArrangement, hull_contains, right_hull, rook_of_perm
from .errors import DomainError, PreconditionError
from .perm_core import tau

__all__ = [
    "DellacConfig",
    "SpDellacConfig",
    "blow",
    "enumerate_dc",
    "enumerate_spdc",
    "is_symplectic",
    "melt",
    "mirror",
]


@dataclass(frozen=True, order=True)
class DellacConfig:
    n: int
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple(tuple(sorted(r)) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.n
        if n < 1 or len(rows) != n:
            raise DomainError(f"expected {n} rows, got {len(rows)}")
        seen = []
        for i, row in enumerate(rows, start=1):
            if len(row) != 2 or row[0] == row[1]:
                raise DomainError(f"row {i} must hold two distinct marks: {row}")
            for j in row:
                if not i <= j <= n + i:
                    raise DomainError(f"mark ({i},{j}) violates i <= j <= n+i")
            seen.extend(row)
        if sorted(seen) != list(range(1, 2 * n + 1)):
            raise DomainError("every column must hold exactly one mark")

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows, start=1) for j in row]

    def render(self) -> str:
        return "\n".join(
            "".join("x" if c in row else "." for c in range(1, 2 * self.n + 1))
            for row in self.rows
        )


class SpDellacConfig(DellacConfig):
    """A Dellac configuration with ``2 * half`` rows fixed by :func:`mirror`."""

    def __post_init__(self):
        super().__post_init__()
        if self.n % 2 or mirror(self.rows) != self.rows:
            raise DomainError("configuration is not mirror symmetric")

    @property
    def half(self) -> int:
        return self.n // 2


def mirror(
    rows: tuple[tuple[int, int], ...], width: int | None = None
) -> tuple[tuple[int, int], ...]:
    """Rotate a board by a half turn: ``(i, j) -> (N-i+1, 2N-j+1)``.

    ``width`` defaults to ``2 * len(rows)``; pass it explicitly to mirror
    a partial board.
    """
    top = (2 * len(rows) if width is None else width) + 1
    return tuple(tuple(sorted(top - j for j in row)) for row in reversed(rows))


def is_symplectic(config: DellacConfig) -> bool:
    if config.n % 2:
        raise DomainError(f"odd number of rows: {config.n}")
    return mirror(config.rows) == config.rows


def melt(rook: RookArrangement) -> DellacConfig:
    """Merge rows ``2k-1`` and ``2k`` of an arrangement restricted by ``tau_n``."""
    if rook.size % 2:
        raise DomainError(f"odd board size {rook.size}")
    n = rook.size // 2
    if not hull_contains(right_hull(tau(n)), rook):
        raise PreconditionError(f"{rook.marks} leaves the right hull of tau_{n}")
    m = rook.marks
    return DellacConfig(n, tuple((m[2 * k], m[2 * k + 1]) for k in range(n)))


def blow(config: DellacConfig) -> RookArrangement:
    """Split row ``i`` into rows ``2i-1`` (smaller mark) and ``2i`` (larger)."""
    return RookArrangement(tuple(j for row in config.rows for j in row))


def _dc_rows(n: int, used: list[bool]) -> Iterator[list[tuple[int, int]]]:
    """Backtrack the rows of a size-``n`` board in lexicographic order.

    Column ``c`` can only be marked from rows ``c-n .. c``, so by row ``i``
    every column below ``i`` must already be taken and column ``i`` must be
    taken now at the latest.
    """
    rows: list[tuple[int, int]] = []

    def place(i: int) -> Iterator[list[tuple[int, int]]]:
        if i > n:
            yield rows
            return
        if i > 1 and not used[i - 1]:
            return
        free = [c for c in range(i, n + i + 1) if not used[c]]
        must = None if used[i] else i
        for x, a in enumerate(free):
            if must is not None and a != must:
                break
            for b in free[x + 1:]:
                used[a] = used[b] = True
                rows.append((a, b))
                yield from place(i + 1)
                rows.pop()
                used[a] = used[b] = False

    yield from place(1)


def enumerate_dc(n: int) -> Iterator[DellacConfig]:
    """Every Dellac configuration of size ``n``, lexicographic in its rows."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    used = [False] * (2 * n + 2)
    for rows in _dc_rows(n, used):
        yield DellacConfig(n, tuple(rows))


def enumerate_spdc(n: int) -> Iterator[SpDellacConfig]:
    """Every symplectic Dellac configuration with ``2n`` rows and ``4n`` columns.

    Only rows ``1..n`` are searched; rows ``n+1..2n`` are their mirror
    images, and the assembled board is revalidated on construction.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    size = 2 * n
    top = 2 * size + 1
    used = [False] * (2 * size + 2)

    # mirror images of the chosen marks are reserved as soon as a row is placed
    def search(i: int, rows: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
        if i > n:
            yield tuple(rows) + mirror(tuple(rows), 2 * size)
            return
        if i > 1 and not used[i - 1]:
            return
        free = [c for c in range(i, size + i + 1) if not used[c]]
        must = None if used[i] else i
        for x, a in enumerate(free):
            if must is not None and a != must:
                break
            for b in free[x + 1:]:
                ma, mb = top - a, top - b
                if ma in (a, b) or mb in (a, b) or used[ma] or used[mb]:
                    continue
                for c in (a, b, ma, mb):
                    used[c] = True
                rows.append((a, b))
                yield from search(i + 1, rows)
                rows.pop()
                for c in (a, b, ma, mb):
                    used[c] = False

    for rows in search(1, []):
        yield SpDellacConfig(size, rows)
