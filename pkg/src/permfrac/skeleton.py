"""Skeletons of 321-avoiding permutations and the marked-path words over
``{h, u, d, m}`` that encode them.

A 321-avoider with ``n`` left-to-right maxima ``m_1 < ... < m_n`` places each
remaining entry in a cell ``(i, j)``, ``1 <= i <= j <= n``: ``i`` is its value
band (between ``m_{i-1}`` and ``m_i``) and ``j`` its position band (after the
``j``-th maximum).  Occupied cells never form a pair with ``i < i'`` and
``j > j'``.  The skeleton is the set of occupied cells.

Cell ``(i, j)`` sits at lattice point ``(i + j - 2, j - i)``.  The word walks
from cell ``(1, 1)`` to ``(n, n)`` through the occupied cells in order of
``(j, i)``; each leg is ``h`` steps (``i+1, j+1``) followed by ``u`` steps
(``j+1``) or ``d`` steps (``i+1``), and ``m`` marks each occupied cell.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .perm import Permutation, avoids_321

__all__ = [
    "GRAMMAR", "Skeleton", "SkeletonWord", "word_recognize", "grammar_words",
    "enumerate_words", "skeleton_of", "skeleton_encode", "skeleton_decode",
    "all_skeletons",
]

# nonterminals are upper case; "" is the empty production
GRAMMAR: dict[str, tuple[str, ...]] = {
    "S": ("", "hS", "uUdD", "mM"),
    "U": ("mM", "uUdD"),
    "D": ("", "mM"),
    "M": ("", "hS", "uUdD"),
}


def _conflict(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return (a[0] < b[0] and a[1] > b[1]) or (b[0] < a[0] and b[1] > a[1])


@dataclass(frozen=True)
class Skeleton:
    maxima_count: int
    marked_cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.maxima_count
        if n < 1:
            raise ValueError("a skeleton needs at least one left-to-right maximum")
        for i, j in self.marked_cells:
            if not 1 <= i <= j <= n:
                raise ValueError(f"cell ({i},{j}) outside the {n}-maxima grid")
        for a, b in combinations(self.marked_cells, 2):
            if _conflict(a, b):
                raise ValueError(f"cells {a} and {b} lie on a negative slope")

    @staticmethod
    def cells(n: int) -> list[tuple[int, int]]:
        """All ``n(n+1)/2`` cells of the grid, ordered by ``(j, i)``."""
        return [(i, j) for j in range(1, n + 1) for i in range(1, j + 1)]

    def path_order(self) -> list[tuple[int, int]]:
        return sorted(self.marked_cells, key=lambda c: (c[1], c[0]))


@dataclass(frozen=True)
class SkeletonWord:
    word: str
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(v) for v in self.labels))
        if not word_recognize(self.word):
            raise ValueError(f"{self.word!r} is not a marked-path word")
        if len(self.labels) != self.word.count("m"):
            raise ValueError(f"{self.word.count('m')} marks but {len(self.labels)} labels")
        if any(v < 1 for v in self.labels):
            raise ValueError("labels must be positive")

    @classmethod
    def parse(cls, text: str) -> "SkeletonWord":
        """Read ``"mhm [2,1]"``; labels may be omitted when there are no marks."""
        m = re.fullmatch(r"\s*([hudm]*)\s*(?:\[\s*([\d\s,]*)\])?\s*", text)
        if not m:
            raise ValueError(f"cannot parse skeleton word {text!r}")
        labels = [int(t) for t in re.split(r"[\s,]+", m.group(2) or "") if t]
        return cls(m.group(1), tuple(labels))

    @property
    def maxima_count(self) -> int:
        return 1 + self.word.count("h") + self.word.count("u")

    def __str__(self) -> str:
        return f"{self.word} [{','.join(map(str, self.labels))}]"


def _run(w: str, state: str = "S", depth: int = 0) -> tuple[str, int] | None:
    """Advance the recognizer over ``w``; ``None`` once it rejects.

    The state is the nonterminal being expanded plus ``depth``, the number of
    pending ``d D`` suffixes pushed by ``u U d D`` productions.  ``S``, ``D``
    and ``M`` may vanish, in which case the next letter must be a pending
    ``d``.
    """
    for c in w:
        if c == "u" and state != "D":
            state, depth = "U", depth + 1
        elif c == "m" and state != "M":
            state = "M"
        elif c == "h" and state in ("S", "M"):
            state = "S"
        elif c == "d" and state != "U" and depth:
            state, depth = "D", depth - 1
        else:
            return None
    return state, depth


def word_recognize(w: str) -> bool:
    """Membership in the language of ``S``, in one left-to-right pass."""
    end = _run(w)
    return end is not None and end[1] == 0 and end[0] != "U"


def grammar_words(max_length: int) -> set[str]:
    """Every word of length <= ``max_length`` derivable from ``S``, by
    leftmost expansion of sentential forms."""
    out = set()
    stack = ["S"]
    seen = set()
    while stack:
        form = stack.pop()
        if form in seen:
            continue
        seen.add(form)
        k = next((i for i, c in enumerate(form) if c.isupper()), None)
        if k is None:
            out.add(form)
            continue
        # every nonterminal other than S, D, M derives at least one letter
        if sum(1 for c in form if c.islower() or c == "U") > max_length:
            continue
        for rhs in GRAMMAR[form[k]]:
            stack.append(form[:k] + rhs + form[k + 1:])
    return {w for w in out if len(w) <= max_length}


def _accepted_words(max_segments: int) -> Iterator[str]:
    """All accepted words with ``#h + #u <= max_segments``, generated letter
    by letter.  Every prefix the recognizer has not rejected can still be
    completed (by ``m`` if needed, then the pending ``d``'s), so pruning on
    rejection loses nothing."""

    def extend(prefix: str, state: str, depth: int, segments: int):
        if depth == 0 and state != "U":
            yield prefix
        for c in "hudm":
            nxt = segments + (c in "hu")
            if nxt > max_segments:
                continue
            after = _run(c, state, depth)
            if after is not None:
                yield from extend(prefix + c, after[0], after[1], nxt)

    yield from extend("", "S", 0, 0)


def enumerate_words(max_segments: int) -> dict[tuple[int, int], int]:
    """Count accepted words by ``(#h + #u, #m)`` for ``#h + #u <= max_segments``."""
    if max_segments > 12:
        raise ValueError("max_segments above 12 is impractical")
    table: dict[tuple[int, int], int] = {}
    for w in _accepted_words(max_segments):
        key = (w.count("h") + w.count("u"), w.count("m"))
        table[key] = table.get(key, 0) + 1
    return dict(sorted(table.items()))


def skeleton_of(p: Sequence[int]) -> tuple[Skeleton, dict[tuple[int, int], int]]:
    """Skeleton and cell occupancies of a non-empty 321-avoider."""
    if not p:
        raise ValueError("the empty permutation has no skeleton")
    if not avoids_321(p):
        raise ValueError(f"a skeleton needs a 321-avoiding permutation; {Permutation(p)} contains 321")
    maxima: list[int] = []
    occupancy: dict[tuple[int, int], int] = {}
    for v in p:
        if not maxima or v > maxima[-1]:
            maxima.append(v)
            continue
        j = len(maxima)
        i = 1 + sum(1 for m in maxima if m < v)
        occupancy[(i, j)] = occupancy.get((i, j), 0) + 1
    return Skeleton(len(maxima), frozenset(occupancy)), occupancy


def _leg(a: tuple[int, int], b: tuple[int, int]) -> str:
    di, dj = b[0] - a[0], b[1] - a[1]
    flat = min(di, dj)
    return "h" * flat + ("u" * (dj - di) if dj > di else "d" * (di - dj))


def skeleton_encode(p: Sequence[int]) -> SkeletonWord:
    skeleton, occupancy = skeleton_of(p)
    n = skeleton.maxima_count
    here = (1, 1)
    word = []
    labels = []
    for cell in skeleton.path_order():
        word.append(_leg(here, cell) + "m")
        labels.append(occupancy[cell])
        here = cell
    word.append(_leg(here, (n, n)))
    return SkeletonWord("".join(word), tuple(labels))


def _cells_of_word(word: str) -> tuple[int, list[tuple[int, int]]]:
    i = j = 1
    cells = []
    for c in word:
        if c == "h":
            i, j = i + 1, j + 1
        elif c == "u":
            j += 1
        elif c == "d":
            i += 1
        else:
            cells.append((i, j))
    n = 1 + word.count("h") + word.count("u")
    if (i, j) != (n, n):
        raise ValueError(f"{word!r} does not end at cell ({n},{n})")
    return n, cells


def skeleton_decode(sw: SkeletonWord | str) -> Permutation:
    """The unique 321-avoider with the given skeleton word and occupancies."""
    if isinstance(sw, str):
        sw = SkeletonWord.parse(sw)
    n, cells = _cells_of_word(sw.word)
    Skeleton(n, frozenset(cells))
    occupancy = dict(zip(cells, sw.labels))
    band = [0] * (n + 1)
    for (i, _), k in occupancy.items():
        band[i] += k
    maxima = [0] * (n + 1)
    for i in range(1, n + 1):
        maxima[i] = maxima[i - 1] + band[i] + 1
    next_value = [maxima[i - 1] + 1 for i in range(n + 1)]
    out = []
    for j in range(1, n + 1):
        out.append(maxima[j])
        for i in range(1, j + 1):
            for _ in range(occupancy.get((i, j), 0)):
                out.append(next_value[i])
                next_value[i] += 1
    return Permutation(out)


def all_skeletons(n: int) -> Iterator[Skeleton]:
    """Every skeleton with ``n`` maxima, by backtracking over cells."""
    cells = Skeleton.cells(n)

    def grow(k: int, chosen: list[tuple[int, int]]):
        if k == len(cells):
            yield Skeleton(n, frozenset(chosen))
            return
        yield from grow(k + 1, chosen)
        c = cells[k]
        if not any(_conflict(c, o) for o in chosen):
            chosen.append(c)
            yield from grow(k + 1, chosen)
            chosen.pop()

    yield from grow(0, [])
