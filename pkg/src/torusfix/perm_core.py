"""
Permutations in one-line notation, Coxeter words in the simple
transpositions, Bruhat order, pattern containment and the involution iota.

Positions and values are 1-based throughout: ``Permutation((1, 4, 2, 5, 3, 6))``
sends 1 to 1, 2 to 4, and so on.

>>> str(tau(3))
'142536'
>>> str(evaluate_word([3, 4, 2], 6))
'142536'
>>> bruhat_leq(Permutation.from_string("124536"), tau(3))
True
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import DomainError, RankError, RestrictionError

__all__ = [
    "Permutation",
    "CoxeterWord",
    "all_permutations",
    "bruhat_leq",
    "contains_pattern",
    "evaluate_word",
    "extend",
    "iota",
    "is_min_coset_rep",
    "length",
    "restrict",
    "subword_products",
    "tau",
    "tau_word",
]


class Permutation(tuple):
    """A bijection of ``{1..m}`` stored as its one-line notation.

    Being a tuple, a permutation is immutable, hashable and orders
    lexicographically. ``u * v`` is composition, ``(u * v)(i) = u(v(i))``,
    so right multiplication by ``s_i`` swaps positions ``i`` and ``i+1``.
    """

    __slots__ = ()

    def __new__(cls, image: Iterable[int]) -> Permutation:
        self = super().__new__(cls, image)
        m = len(self)
        if m == 0:
            raise DomainError("a permutation needs at least one point")
        if sorted(self) != list(range(1, m + 1)):
            raise DomainError(f"{tuple(self)} is not a permutation of 1..{m}")
        return self

    @classmethod
    def _trusted(cls, image: Iterable[int]) -> Permutation:
        # skips validation; callers guarantee a bijection
        return tuple.__new__(cls, image)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls._trusted(range(1, m + 1))

    @classmethod
    def from_string(cls, text: str) -> Permutation:
        """Parse ``"142536"`` (single digits) or ``"1 4 2 5 3 6"`` / ``"1,4,2"``."""
        text = text.strip()
        if any(c in text for c in " ,"):
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise DomainError(f"cannot parse permutation {text!r}") from exc

    @property
    def size(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise DomainError("cannot compose permutations of different sizes")
        return Permutation._trusted(self[j - 1] for j in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation._trusted(inv)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


@dataclass(frozen=True)
class CoxeterWord:
    """A word in the generators ``s_1 .. s_rank``."""

    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.rank < 1:
            raise RankError(f"rank must be positive, got {self.rank}")
        for a in self.letters:
            if not 1 <= a <= self.rank:
                raise RankError(f"letter {a} outside 1..{self.rank}")

    def __len__(self) -> int:
        return len(self.letters)


def evaluate_word(word: CoxeterWord | Sequence[int], m: int) -> Permutation:
    """Multiply out a word in ``S_m``: letter ``i`` swaps positions ``i, i+1``.

    >>> str(evaluate_word([], 4)), str(evaluate_word([2], 4))
    ('1234', '1324')
    """
    letters = word.letters if isinstance(word, CoxeterWord) else tuple(word)
    if m < 1:
        raise DomainError(f"group size must be positive, got {m}")
    image = list(range(1, m + 1))
    for a in letters:
        if not 1 <= a <= m - 1:
            raise RankError(f"letter {a} outside 1..{m - 1}")
        image[a - 1], image[a] = image[a], image[a - 1]
    return Permutation._trusted(image)


def tau_word(n: int) -> CoxeterWord:
    """The word ``(s_n .. s_{2n-2}) ... (s_k .. s_{2k-2}) ... (s_3 s_4) s_2``.

    >>> tau_word(3).letters
    (3, 4, 2)
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    letters: list[int] = []
    for k in range(n, 1, -1):
        letters.extend(range(k, 2 * k - 1))
    return CoxeterWord(max(2 * n - 1, 1), tuple(letters))


def tau(n: int) -> Permutation:
    """``tau_n`` in ``S_{2n}``: ``2k-1 -> k`` and ``2k -> n+k``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    image = []
    for k in range(1, n + 1):
        image += [k, n + k]
    return Permutation._trusted(image)


def length(p: Sequence[int]) -> int:
    """Number of inversions."""
    m = len(p)
    return sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Tableau criterion: every sorted prefix of ``u`` is dominated by ``w``'s."""
    if len(u) != len(w):
        raise DomainError(f"sizes differ: {len(u)} vs {len(w)}")
    su: list[int] = []
    sw: list[int] = []
    for k in range(len(u) - 1):
        su.append(u[k])
        sw.append(w[k])
        su.sort()
        sw.sort()
        for a, b in zip(su, sw):
            if a > b:
                return False
    return True


def iota(p: Permutation) -> Permutation:
    """``iota(p)(k) = 4n+1 - p(4n+1-k)`` on ``S_{4n}``."""
    m = len(p)
    if m % 4:
        raise DomainError(f"iota is defined on S_(4n), got size {m}")
    return Permutation._trusted(m + 1 - v for v in reversed(p))


def is_min_coset_rep(p: Sequence[int]) -> bool:
    """Whether ``p(2k-1) < p(2k)`` for every ``k``."""
    if len(p) % 2:
        raise DomainError(f"odd size {len(p)}")
    return all(p[i] < p[i + 1] for i in range(0, len(p), 2))


def contains_pattern(p: Sequence[int], q: Sequence[int]) -> bool:
    """Whether some subsequence of ``p`` is order-isomorphic to ``q``.

    >>> contains_pattern(tau(4), (4, 2, 3, 1))
    False
    """
    k, m = len(q), len(p)
    if k == 0:
        return True
    if k > m:
        return False
    chosen: list[int] = []

    def extend_match(start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for i in range(start, m - (k - t) + 1):
            v = p[i]
            if all((v > c) == (q[t] > q[s]) for s, c in enumerate(chosen)):
                chosen.append(v)
                if extend_match(i + 1):
                    return True
                chosen.pop()
        return False

    return extend_match(0)


def restrict(p: Sequence[int]) -> Permutation:
    """Drop the fixed endpoints of ``p`` in ``S_{2n+2}`` and shift down.

    >>> str(restrict(tau(3)))
    '3142'
    """
    m = len(p)
    if m < 3 or p[0] != 1 or p[-1] != m:
        raise RestrictionError(f"{tuple(p)} does not fix 1 and {m}")
    return Permutation._trusted(v - 1 for v in p[1:-1])


def extend(p: Sequence[int]) -> Permutation:
    """Inverse of :func:`restrict`."""
    m = len(p)
    return Permutation._trusted((1, *(v + 1 for v in p), m + 2))


def all_permutations(m: int) -> Iterator[Permutation]:
    """Every element of ``S_m`` in lexicographic order."""
    for image in itertools.permutations(range(1, m + 1)):
        yield Permutation._trusted(image)


def subword_products(letters: Iterable[int | Sequence[int]], m: int) -> set[Permutation]:
    """All products of subwords of a word in ``S_m``.

    For a reduced word of ``w`` this is the Bruhat interval below ``w``.
    A letter may be a tuple of commuting generators that must be taken
    together (used for the folded type-C generators).
    """
    current = {Permutation.identity(m)}
    for letter in letters:
        group = (letter,) if isinstance(letter, int) else tuple(letter)
        new = set()
        for w in current:
            image = list(w)
            for a in group:
                image[a - 1], image[a] = image[a], image[a - 1]
            new.add(Permutation._trusted(image))
        current |= new
    return current
