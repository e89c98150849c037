"""Brute-force ground truth: exhaustive permutation counts, independent sets
of the skeleton conflict graphs, and non-crossing graphs on a convex polygon.

Nothing here uses a generating function.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations, permutations
from typing import Callable, Mapping, Sequence

from . import perm
from .fractal import dn_member, is_f321_member
from .series import TruncatedSeries

__all__ = [
    "MAX_COUNT_LENGTH", "MAX_GRAPH_VERTICES", "PREDICATES", "TABLE1_ROWS",
    "predicate", "count_where", "count_many", "count_by_maxima", "table1_counts",
    "ConflictGraph", "independent_set_polynomial", "noncrossing_graph_counts",
    "chords_cross",
]

MAX_COUNT_LENGTH = 11
MAX_GRAPH_VERTICES = 24


def _always(p: Sequence[int]) -> bool:
    return True


def _separable(p: Sequence[int]) -> bool:
    return perm.avoids(p, (2, 4, 1, 3)) and perm.avoids(p, (3, 1, 4, 2))


def _and_321(test: Callable[[Sequence[int]], bool], p: Sequence[int]) -> bool:
    return perm.avoids_321(p) and test(p)


# rows of the subset-size table: subsets of the 321-avoiders
TABLE1_ROWS: dict[str, Callable[[Sequence[int]], bool]] = {
    "all": _always,
    "plus irr.": perm.is_plus_irreducible,
    "minus irr.": perm.is_minus_irreducible,
    "abs. irr.": perm.is_absolutely_irreducible,
}

PREDICATES: dict[str, Callable[[Sequence[int]], bool]] = {
    "any": _always,
    "avoids_321": perm.avoids_321,
    "plus_irr": partial(_and_321, perm.is_plus_irreducible),
    "minus_irr": partial(_and_321, perm.is_minus_irreducible),
    "plus_ind": partial(_and_321, perm.is_plus_indecomposable),
    "minus_ind": partial(_and_321, perm.is_minus_indecomposable),
    "abs_irr": partial(_and_321, perm.is_absolutely_irreducible),
    "simple": perm.is_absolutely_irreducible,
    "separable": _separable,
    "f321": is_f321_member,
}


def predicate(name: str) -> Callable[[Sequence[int]], bool]:
    """Look up a named predicate; ``d<k>`` gives membership in ``D_k``."""
    m = re.fullmatch(r"d(\d+)", name)
    if m:
        return dn_member(int(m.group(1)))
    try:
        return PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}; expected one of {', '.join(PREDICATES)} or d<k>") from None


def _prefix_tasks(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(1, n + 1), min(2, n)))


def _count_prefix(preds: tuple, gate, n: int, prefix: tuple[int, ...]) -> list[int]:
    counts = [0] * len(preds)
    rest = sorted(set(range(1, n + 1)) - set(prefix))
    for tail in permutations(rest):
        p = prefix + tail
        if gate is not None and not gate(p):
            continue
        for k, pred in enumerate(preds):
            if pred(p):
                counts[k] += 1
    return counts


def count_many(n: int, preds: Mapping[str, Callable[[Sequence[int]], bool]], *,
               gate: Callable[[Sequence[int]], bool] | None = None, jobs: int = 1) -> dict[str, int]:
    """Count the permutations of length ``n`` satisfying each predicate, in
    one pass over all ``n!`` of them.  Permutations failing ``gate`` are
    skipped before any predicate runs."""
    if n > MAX_COUNT_LENGTH:
        raise ValueError(f"exhaustive counts are limited to n <= {MAX_COUNT_LENGTH}")
    names = list(preds)
    task = partial(_count_prefix, tuple(preds[k] for k in names), gate, n)
    prefixes = _prefix_tasks(n)
    if jobs > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(task, prefixes))
    else:
        parts = [task(pre) for pre in prefixes]
    return {name: sum(part[k] for part in parts) for k, name in enumerate(names)}


def count_where(n: int, pred: Callable[[Sequence[int]], bool], *,
                gate: Callable[[Sequence[int]], bool] | None = None, jobs: int = 1) -> int:
    return count_many(n, {"count": pred}, gate=gate, jobs=jobs)["count"]


def count_by_maxima(n: int, pred: Callable[[Sequence[int]], bool]) -> dict[int, int]:
    """Counts of length-``n`` permutations satisfying ``pred``, keyed by the
    number of left-to-right maxima."""
    out: dict[int, int] = {}
    for p in permutations(range(1, n + 1)):
        if pred(p):
            k = len(perm.left_to_right_maxima(p))
            out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


def table1_counts(n_max: int = 10, jobs: int = 1) -> dict[str, list[int]]:
    """The four subset-size rows by exhaustive enumeration, lengths ``0..n_max``."""
    rows: dict[str, list[int]] = {name: [] for name in TABLE1_ROWS}
    for n in range(n_max + 1):
        counts = count_many(n, TABLE1_ROWS, gate=perm.avoids_321, jobs=jobs)
        for name in TABLE1_ROWS:
            rows[name].append(counts[name])
    return rows


@dataclass(frozen=True)
class ConflictGraph:
    """A graph given by vertex labels and edges between conflicting ones."""

    n: int
    vertices: tuple
    edges: frozenset

    @classmethod
    def skeleton_cells(cls, n: int) -> "ConflictGraph":
        """``T_n``: cells ``(i, j)``, ``1 <= i <= j <= n``, adjacent when one
        lies strictly below and strictly right of the other."""
        cells = tuple((i, j) for j in range(1, n + 1) for i in range(1, j + 1))
        edges = frozenset(
            frozenset((a, b)) for a, b in combinations(cells, 2)
            if (a[0] < b[0] and a[1] > b[1]) or (b[0] < a[0] and b[1] > a[1])
        )
        return cls(n, cells, edges)

    @classmethod
    def chords(cls, m: int) -> "ConflictGraph":
        """``NC_m``: the chords of a convex ``m``-gon, adjacent when they cross."""
        chords = tuple(combinations(range(1, m + 1), 2))
        edges = frozenset(frozenset((a, b)) for a, b in combinations(chords, 2) if chords_cross(a, b))
        return cls(m, chords, edges)

    def degree_sequence(self) -> list[int]:
        deg = {v: 0 for v in self.vertices}
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return sorted(deg.values(), reverse=True)

    def isolated_vertices(self) -> list:
        touched = {v for e in self.edges for v in e}
        return [v for v in self.vertices if v not in touched]


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Chords with endpoints in cyclic order cross at an interior point."""
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


def independent_set_polynomial(g: ConflictGraph) -> TruncatedSeries:
    """Coefficient of ``y^k`` is the number of independent sets of size ``k``."""
    size = len(g.vertices)
    if size > MAX_GRAPH_VERTICES:
        raise ValueError(f"graph has {size} vertices; the limit is {MAX_GRAPH_VERTICES}")
    index = {v: k for k, v in enumerate(g.vertices)}
    # neighbours with a smaller index, as bit masks
    earlier = [0] * size
    for e in g.edges:
        a, b = sorted(index[v] for v in e)
        earlier[b] |= 1 << a
    counts = [0] * (size + 1)

    def grow(k: int, chosen: int, count: int):
        if k == size:
            counts[count] += 1
            return
        grow(k + 1, chosen, count)
        if not earlier[k] & chosen:
            grow(k + 1, chosen | (1 << k), count + 1)

    grow(0, 0, 0)
    return TruncatedSeries(counts)


def noncrossing_graph_counts(m: int) -> tuple[TruncatedSeries, int]:
    """Non-crossing graphs on ``m`` labelled vertices in convex position,
    counted by number of edges, and their total."""
    if m > 7:
        raise ValueError("noncrossing_graph_counts is limited to m <= 7")
    chords = list(combinations(range(1, m + 1), 2))
    counts = [0] * (len(chords) + 1)

    def grow(k: int, chosen: list):
        if k == len(chords):
            counts[len(chosen)] += 1
            return
        grow(k + 1, chosen)
        c = chords[k]
        if not any(chords_cross(c, o) for o in chosen):
            chosen.append(c)
            grow(k + 1, chosen)
            chosen.pop()

    grow(0, [])
    return TruncatedSeries(counts), sum(counts)
