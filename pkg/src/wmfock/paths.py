"""Motzkin and Riordan paths as words over {Up, Level, Down}.

A word is a tuple of :class:`Step` values.  Position 1 is the first step of
the lattice path, and an Up at position i is matched by the first Down after
it that brings the height back to the level before i.
"""

from __future__ import annotations

import enum
from typing import Iterator, Sequence

from wmfock.algebra import LambdaPoly, poly_sum

#: enumeration refuses sizes above this unless told otherwise
ENUMERATION_CAP = 18


class Step(enum.IntEnum):
    # values give the lexicographic order Up < Level < Down
    UP = 0
    LEVEL = 1
    DOWN = 2

    @property
    def letter(self) -> str:
        return "ULD"[self.value]

    @property
    def delta(self) -> int:
        return (1, 0, -1)[self.value]


UP, LEVEL, DOWN = Step.UP, Step.LEVEL, Step.DOWN

PathWord = tuple  # tuple[Step, ...]


class SizeError(ValueError):
    """Raised when an enumeration is asked for more than its cap allows."""


def word_from_string(s: str) -> PathWord:
    table = {"U": UP, "L": LEVEL, "D": DOWN}
    try:
        return tuple(table[ch] for ch in s.upper())
    except KeyError as exc:
        raise ValueError(f"bad step letter {exc.args[0]!r}; use U, L, D") from None


def word_to_string(w: Sequence[Step]) -> str:
    return "".join(Step(s).letter for s in w)


def heights(w: Sequence[Step]) -> list[int]:
    """Heights after each prefix, starting with the empty prefix."""
    h = [0]
    for s in w:
        h.append(h[-1] + Step(s).delta)
    return h


def is_motzkin(w: Sequence[Step]) -> bool:
    h = heights(w)
    return min(h) >= 0 and h[-1] == 0


def is_riordan(w: Sequence[Step]) -> bool:
    if not is_motzkin(w):
        return False
    h = heights(w)
    return all(not (h[i] == 0 and w[i] == LEVEL) for i in range(len(w)))


def count_level(w: Sequence[Step]) -> int:
    return sum(1 for s in w if s == LEVEL)


def _check_cap(n: int, cap: int):
    if n < 0:
        raise ValueError("size must be >= 0")
    if n > cap:
        raise SizeError(f"refusing to enumerate size {n} > cap {cap}")


def _dfs(n: int, ground_level: bool) -> Iterator[PathWord]:
    word: list[Step] = []

    def rec(h: int):
        rest = n - len(word)
        if rest == 0:
            if h == 0:
                yield tuple(word)
            return
        for s in (UP, LEVEL, DOWN):
            nh = h + s.delta
            if nh < 0 or nh > rest - 1:
                continue
            if s == LEVEL and h == 0 and not ground_level:
                continue
            word.append(s)
            yield from rec(nh)
            word.pop()

    yield from rec(0)


def enumerate_motzkin(n: int, cap: int = ENUMERATION_CAP) -> list[PathWord]:
    """All Motzkin words of size ``n`` in lexicographic order (Up < Level < Down)."""
    _check_cap(n, cap)
    return list(_dfs(n, ground_level=True))


def enumerate_riordan(n: int, cap: int = ENUMERATION_CAP) -> list[PathWord]:
    """Motzkin words with no Level step on the ground.  The empty word counts."""
    _check_cap(n, cap)
    return list(_dfs(n, ground_level=False))


def _weighted_dp(n: int, ground_level: bool) -> LambdaPoly:
    # row[h] = weighted count of prefixes ending at height h
    row = [LambdaPoly.one()]
    for i in range(n):
        rest = n - i - 1
        new = [LambdaPoly.zero()] * min(len(row) + 1, rest + 1)
        for h, c in enumerate(row):
            if not c:
                continue
            if h + 1 < len(new):
                new[h + 1] = new[h + 1] + c
            if h < len(new) and (h > 0 or ground_level):
                new[h] = new[h] + c.shift(1)
            if h >= 1 and h - 1 < len(new):
                new[h - 1] = new[h - 1] + c
        row = new
    return row[0] if row else LambdaPoly.zero()


def weighted_count_motzkin(n: int) -> LambdaPoly:
    """Sum over Motzkin words of size n of l**(number of Level steps)."""
    return _weighted_dp(n, ground_level=True)


def weighted_count_riordan(n: int) -> LambdaPoly:
    """Same as :func:`weighted_count_motzkin` but restricted to Riordan words."""
    return _weighted_dp(n, ground_level=False)


def weighted_enumeration(words: Sequence[PathWord]) -> LambdaPoly:
    return poly_sum(LambdaPoly.monomial(count_level(w)) for w in words)


def motzkin_number(n: int) -> int:
    return weighted_count_motzkin(n)(1)


def riordan_number(n: int) -> int:
    return weighted_count_riordan(n)(1)


def decompose_irreducible(w: Sequence[Step]) -> list[PathWord]:
    """Split a Motzkin word at each return to the ground.

    Ground-level Level steps come out as one-step factors of their own.
    """
    if not is_motzkin(w):
        raise ValueError("not a Motzkin word")
    out = []
    start = 0
    h = 0
    for i, s in enumerate(w):
        h += Step(s).delta
        if h == 0:
            out.append(tuple(w[start : i + 1]))
            start = i + 1
    return out


def is_irreducible(w: Sequence[Step]) -> bool:
    return len(w) > 0 and len(decompose_irreducible(w)) == 1


def word_to_partition(w: Sequence[Step]):
    """Blocks of the noncrossing partition encoded by a Motzkin word: each Up
    pairs with its matching Down and each Level is a singleton.  Positions are
    1-based."""
    from wmfock.partitions import Partition

    stack: list[int] = []
    blocks = []
    for pos, s in enumerate(w, start=1):
        s = Step(s)
        if s == UP:
            stack.append(pos)
        elif s == DOWN:
            if not stack:
                raise ValueError("unbalanced word: Down below the ground")
            blocks.append((stack.pop(), pos))
        else:
            blocks.append((pos,))
    if stack:
        raise ValueError("unbalanced word: unmatched Up")
    return Partition(blocks)


def path_to_pair_partition(w: Sequence[Step]):
    """Noncrossing pair partition of a word without Level steps."""
    if any(Step(s) == LEVEL for s in w):
        raise ValueError("pair partition needs a word without Level steps")
    return word_to_partition(w)
