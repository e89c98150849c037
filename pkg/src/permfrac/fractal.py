"""Membership in the fractal class F(321) and in the classes D_n, and the
search for minimal forbidden patterns of a permutation class.

Both memberships recurse on the block decomposition: a sum or skew
decomposition only needs its blocks to be members (chains regroup into
nested pairs 12 / 21), while a simple quotient must itself pass the class
test (avoid 321, or have length <= n).
"""

from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .perm import Permutation, avoids_321, block_pattern, normalize, split

__all__ = [
    "CACHE_MAX_LENGTH", "is_f321_member", "is_dn_member", "dn_member",
    "BasisReport", "basis_search", "minimal_forbidden", "F321_BASIS",
]

log = logging.getLogger(__name__)

# patterns up to this length are memoized: at most sum(k!) <= 46233 entries per class
CACHE_MAX_LENGTH = 8

F321_BASIS = tuple(Permutation.parse(s) for s in ("42513", "35142", "41352", "362514", "531642"))

_f_cache: dict[tuple[int, ...], bool] = {}
_d_cache: dict[int, dict[tuple[int, ...], bool]] = {}


def _f321(p: tuple[int, ...]) -> bool:
    n = len(p)
    if n <= 2 or avoids_321(p):
        return True
    if n <= CACHE_MAX_LENGTH:
        hit = _f_cache.get(p)
        if hit is not None:
            return hit
    kind, blocks = split(p)
    if kind == "Simple" and not avoids_321(normalize([b[0] for b in blocks])):
        result = False
    else:
        result = all(len(b) <= 2 or _f321(block_pattern(b)) for b in blocks)
    if n <= CACHE_MAX_LENGTH:
        _f_cache[p] = result
    return result


def is_f321_member(p: Sequence[int]) -> bool:
    return _f321(tuple(p))


def _dn(p: tuple[int, ...], n: int, cache: dict) -> bool:
    size = len(p)
    if size <= n or size <= 2:
        return True
    if size <= CACHE_MAX_LENGTH:
        hit = cache.get(p)
        if hit is not None:
            return hit
    kind, blocks = split(p)
    if kind == "Simple" and len(blocks) > n:
        result = False
    else:
        result = all(_dn(block_pattern(b), n, cache) for b in blocks)
    if size <= CACHE_MAX_LENGTH:
        cache[p] = result
    return result


def is_dn_member(p: Sequence[int], n: int) -> bool:
    """Whether ``p`` fractally has at most ``n`` elements.

    ``D_1`` is just ``{empty, 1}``; ``n < 1`` is rejected.
    """
    if n < 1:
        raise ValueError("D_n needs n >= 1")
    if n == 1:
        return len(p) <= 1
    return _dn(tuple(p), n, _d_cache.setdefault(n, {}))


def dn_member(n: int) -> Callable[[Sequence[int]], bool]:
    """Picklable membership predicate for ``D_n``."""
    return partial(_dn_predicate, n=n)


def _dn_predicate(p: Sequence[int], n: int) -> bool:
    return is_dn_member(p, n)


def minimal_forbidden(p: Sequence[int], member: Callable[[Sequence[int]], bool]) -> bool:
    """``p`` is outside the class while every one-point deletion is inside."""
    if member(p):
        return False
    for i, v in enumerate(p):
        q = tuple(w - (w > v) for w in p[:i] + p[i + 1:])
        if not member(q):
            return False
    return True


@dataclass
class BasisReport:
    searched_max_length: int
    minimal_patterns: tuple[Permutation, ...] = ()
    timings: dict[int, float] = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [str(p) for p in self.minimal_patterns]
        out.append(f"# searched lengths 1..{self.searched_max_length}")
        for length, seconds in sorted(self.timings.items()):
            found = sum(1 for p in self.minimal_patterns if len(p) == length)
            out.append(f"# length {length}: {found} minimal patterns, {seconds:.2f}s")
        out.append(f"# total {len(self.minimal_patterns)}")
        return out


def _prefixes(length: int) -> list[tuple[int, ...]]:
    return list(permutations(range(1, length + 1), math.ceil(length / 3)))


def _search_prefix(member: Callable, length: int, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    rest = sorted(set(range(1, length + 1)) - set(prefix))
    found = []
    for tail in permutations(rest):
        p = prefix + tail
        if minimal_forbidden(p, member):
            found.append(p)
    return found


def _read_checkpoint(path: str | None) -> dict[tuple[int, tuple[int, ...]], list[tuple[int, ...]]]:
    done: dict = {}
    if not path or not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if len(parts) < 3 or parts[0] != "done":
                continue
            length = int(parts[1])
            prefix = tuple(int(t) for t in parts[2].split(","))
            done[(length, prefix)] = [tuple(int(t) for t in s.split(",")) for s in parts[3:]]
    return done


def _checkpoint_line(length: int, prefix: tuple[int, ...], found: Iterable[tuple[int, ...]]) -> str:
    patterns = " ".join(",".join(map(str, p)) for p in found)
    return f"done {length} {','.join(map(str, prefix))} {patterns}".rstrip() + "\n"


def basis_search(member: Callable[[Sequence[int]], bool], max_length: int, *,
                 min_length: int = 1, jobs: int = 1, long_run: bool = False,
                 checkpoint: str | None = None) -> BasisReport:
    """Minimal forbidden patterns of the class ``member`` of every length in
    ``[min_length, max_length]``.

    Each length is split into tasks by the first ``ceil(L/3)`` entries;
    results are merged in prefix order, so they do not depend on ``jobs``.
    Lengths above 10 need ``long_run=True``.  With ``checkpoint``, every
    finished prefix is appended to that file and skipped on a rerun.
    """
    if max_length > 12:
        raise ValueError("basis_search is capped at length 12")
    if max_length > 10 and not long_run:
        raise ValueError("lengths above 10 need the long-run flag")
    done = _read_checkpoint(checkpoint)
    sink = open(checkpoint, "a") if checkpoint else None
    report = BasisReport(max_length)
    found_all: list[tuple[int, ...]] = []
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for length in range(min_length, max_length + 1):
            start = time.perf_counter()
            todo = [pre for pre in _prefixes(length) if (length, pre) not in done]
            task = partial(_search_prefix, member, length)
            results = dict(zip(todo, pool.map(task, todo, chunksize=8) if pool else map(task, todo)))
            for pre in _prefixes(length):
                found = done[(length, pre)] if (length, pre) in done else results[pre]
                if pre in results and sink:
                    sink.write(_checkpoint_line(length, pre, found))
                found_all.extend(found)
            if sink:
                sink.flush()
            report.timings[length] = time.perf_counter() - start
            log.info("length %d searched in %.2fs", length, report.timings[length])
    finally:
        if pool:
            pool.shutdown()
        if sink:
            sink.close()
    report.minimal_patterns = tuple(sorted({Permutation(p) for p in found_all}, key=lambda p: (len(p), p)))
    return report

