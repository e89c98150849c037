"""Permutations in one-line notation, pattern containment, structural
predicates, block decomposition and inflation.

Values are 1-based.  :class:`Permutation` is a validated ``tuple``, so every
function here also accepts a plain tuple of values, which the hot loops of
the oracle and the basis search rely on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "Classification", "Decomposition",
    "normalize", "contains_pattern", "avoids", "avoids_321",
    "left_to_right_maxima", "is_plus_irreducible", "is_minus_irreducible",
    "is_plus_indecomposable", "is_minus_indecomposable",
    "is_absolutely_irreducible", "classify", "sum_blocks", "skew_blocks",
    "simple_blocks", "split", "block_pattern", "decompose", "inflate", "one_point_deletions",
]


class Permutation(tuple):
    """A permutation of ``{1..n}`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        return super().__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"4 5 1 2"``, ``"4,5,1,2"`` or the compact ``"4512"`` (n <= 9)."""
        text = text.strip()
        if not text:
            return cls()
        if re.fullmatch(r"\d+", text):
            digits = [int(c) for c in text]
            if len(digits) > 9:
                raise ValueError("compact digit form is only accepted for n <= 9")
            return cls(digits)
        parts = [t for t in re.split(r"[\s,]+", text) if t]
        if not all(t.isdigit() for t in parts):
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(int(t) for t in parts)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def decreasing(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def normalize(values: Sequence[int]) -> tuple[int, ...]:
    """Order-isomorphic pattern of a sequence of distinct integers."""
    rank = {v: i for i, v in enumerate(sorted(values), 1)}
    return tuple(rank[v] for v in values)


def avoids_321(p: Sequence[int]) -> bool:
    # 321-avoiding iff the entries that are not left-to-right maxima increase.
    top = 0
    last = 0
    for v in p:
        if v > top:
            top = v
        elif v < last:
            return False
        else:
            last = v
    return True


def contains_pattern(host: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``."""
    k = len(pattern)
    if k > len(host):
        return False
    if k == 0:
        return True
    if tuple(pattern) == (3, 2, 1):
        return not avoids_321(host)
    target = tuple(pattern)
    for positions in combinations(range(len(host)), k):
        if normalize([host[i] for i in positions]) == target:
            return True
    return False


def avoids(host: Sequence[int], pattern: Sequence[int]) -> bool:
    return not contains_pattern(host, pattern)


def left_to_right_maxima(p: Sequence[int]) -> list[int]:
    """1-based positions of the left-to-right maxima, in increasing order."""
    positions = []
    top = 0
    for i, v in enumerate(p, 1):
        if v > top:
            top = v
            positions.append(i)
    return positions


def is_plus_irreducible(p: Sequence[int]) -> bool:
    return all(b != a + 1 for a, b in zip(p, p[1:]))


def is_minus_irreducible(p: Sequence[int]) -> bool:
    return all(b != a - 1 for a, b in zip(p, p[1:]))


def is_plus_indecomposable(p: Sequence[int]) -> bool:
    top = 0
    for i in range(len(p) - 1):
        top = max(top, p[i])
        if top == i + 1:
            return False
    return True


def is_minus_indecomposable(p: Sequence[int]) -> bool:
    # a proper final segment holding the values 1..k
    top = 0
    n = len(p)
    for i in range(n - 1, 0, -1):
        top = max(top, p[i])
        if top == n - i:
            return False
    return True


def _proper_intervals(p: Sequence[int]):
    """Yield ``(start, stop)`` for every contiguous factor of length in
    ``[2, n-1]`` whose values form an interval (0-based, stop exclusive)."""
    n = len(p)
    for a in range(n - 1):
        lo = hi = p[a]
        for b in range(a + 1, n):
            v = p[b]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == b - a and b - a + 1 < n:
                yield a, b + 1


def is_absolutely_irreducible(p: Sequence[int]) -> bool:
    """No contiguous factor of length in ``[2, n-1]`` has interval values.

    Vacuously true for n <= 2, so 12 and 21 qualify.
    """
    return next(_proper_intervals(p), None) is None


@dataclass(frozen=True)
class Classification:
    plus_irreducible: bool
    minus_irreducible: bool
    plus_indecomposable: bool
    minus_indecomposable: bool
    absolutely_irreducible: bool
    avoids_321: bool
    lr_maxima_count: int


def classify(p: Sequence[int]) -> Classification:
    return Classification(
        plus_irreducible=is_plus_irreducible(p),
        minus_irreducible=is_minus_irreducible(p),
        plus_indecomposable=is_plus_indecomposable(p),
        minus_indecomposable=is_minus_indecomposable(p),
        absolutely_irreducible=is_absolutely_irreducible(p),
        avoids_321=avoids_321(p),
        lr_maxima_count=len(left_to_right_maxima(p)),
    )


@dataclass(frozen=True)
class Decomposition:
    """``kind`` is ``"Sum"``, ``"Skew"`` or ``"Simple"``; ``blocks`` are
    normalized and listed in position order."""

    kind: str
    quotient: Permutation
    blocks: tuple[Permutation, ...]

    def __str__(self) -> str:
        blocks = "|".join(str(b) for b in self.blocks)
        if self.kind == "Simple":
            return f"Simple θ={self.quotient} blocks={blocks}"
        return f"{self.kind} blocks={blocks}"


def _cut(p: Sequence[int], cuts: list[int]) -> list[tuple[int, ...]]:
    bounds = [0, *cuts, len(p)]
    return [tuple(p[a:b]) for a, b in zip(bounds, bounds[1:])]


def sum_blocks(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Finest split into plus-indecomposable factors (raw, not normalized)."""
    cuts = []
    top = 0
    for i in range(len(p) - 1):
        top = max(top, p[i])
        if top == i + 1:
            cuts.append(i + 1)
    return _cut(p, cuts)


def skew_blocks(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Finest split into minus-indecomposable factors (raw, not normalized)."""
    n = len(p)
    cuts = []
    low = n + 1
    for i in range(n - 1):
        low = min(low, p[i])
        if low == n - i:
            cuts.append(i + 1)
    return _cut(p, cuts)


def simple_blocks(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Maximal proper interval factors, for p neither sum- nor
    skew-decomposable.  These partition p, so a greedy left-to-right scan
    taking the longest proper interval starting at each block start finds
    them."""
    n = len(p)
    blocks = []
    a = 0
    while a < n:
        stop = a + 1
        lo = hi = p[a]
        for b in range(a + 1, n):
            v = p[b]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == b - a and b - a + 1 < n:
                stop = b + 1
        blocks.append(tuple(p[a:stop]))
        a = stop
    return blocks


def split(p: Sequence[int]) -> tuple[str, list[tuple[int, ...]]]:
    """Kind and raw (un-normalized) blocks of the decomposition of ``p``."""
    blocks = sum_blocks(p)
    if len(blocks) > 1:
        return "Sum", blocks
    blocks = skew_blocks(p)
    if len(blocks) > 1:
        return "Skew", blocks
    return "Simple", simple_blocks(p)


def block_pattern(block: Sequence[int]) -> tuple[int, ...]:
    """Normalize a block whose values form an interval."""
    shift = min(block) - 1
    return tuple(v - shift for v in block)


def decompose(p: Sequence[int]) -> Decomposition:
    """Sum, skew or simple-quotient decomposition of ``p`` (length >= 2).

    Sum and skew decompositions are returned at their finest; otherwise the
    quotient is the unique absolutely irreducible permutation of length >= 4
    over the maximal proper interval blocks.
    """
    if len(p) < 2:
        raise ValueError("decompose needs a permutation of length >= 2")
    kind, raw = split(p)
    if kind == "Sum":
        quotient = Permutation.identity(len(raw))
    elif kind == "Skew":
        quotient = Permutation.decreasing(len(raw))
    else:
        quotient = Permutation(normalize([b[0] for b in raw]))
    blocks = tuple(Permutation(block_pattern(b)) for b in raw)
    return Decomposition(kind, quotient, blocks)


def inflate(quotient: Sequence[int], blocks: Sequence[Sequence[int]]) -> Permutation:
    """Replace entry ``i`` of ``quotient`` by a copy of ``blocks[i]``."""
    if len(quotient) != len(blocks):
        raise ValueError(f"quotient has length {len(quotient)} but {len(blocks)} blocks given")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("blocks must be non-empty")
    sizes = [0] * (len(quotient) + 1)
    for q, b in zip(quotient, blocks):
        sizes[q] = len(b)
    offsets = [0] * (len(quotient) + 1)
    for v in range(2, len(quotient) + 1):
        offsets[v] = offsets[v - 1] + sizes[v - 1]
    out: list[int] = []
    for q, b in zip(quotient, blocks):
        out.extend(offsets[q] + v for v in b)
    return Permutation(out)


def one_point_deletions(p: Sequence[int]) -> set[Permutation]:
    """Distinct patterns obtained by deleting one entry and renormalizing."""
    out = set()
    for i, v in enumerate(p):
        out.add(Permutation(w - (w > v) for w in p[:i] + p[i + 1:]))
    return out
