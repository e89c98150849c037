"""Batch command line: ``permfrac <verb> ...``.

Exit status is 0 on success, 2 on a usage error and 1 when the input
violates a precondition (for example a 321-containing permutation given to
``skeleton encode``).  ``--format machine`` switches every verb to stable
line-oriented output.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction
from typing import Mapping, Sequence, TextIO

from . import gf, oracle
from .equations import EQUATIONS, growth_constant
from .fractal import basis_search, dn_member, is_dn_member, is_f321_member
from .perm import Permutation, classify, decompose, split
from .skeleton import skeleton_decode, skeleton_encode

__all__ = ["TABLE1", "TABLE1_SERIES", "table1_report", "main", "run"]

TABLE1: dict[str, tuple[int, ...]] = {
    "all": (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796),
    "plus irr.": (1, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835),
    "minus irr.": (1, 1, 1, 3, 10, 31, 98, 321, 1078, 3686, 12789),
    "abs. irr.": (1, 1, 2, 0, 2, 2, 7, 14, 37, 90, 233),
}

TABLE1_SERIES = {"all": "A_x", "plus irr.": "A_plus_irr", "minus irr.": "A_minus_irr", "abs. irr.": "A_abs_irr"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def table1_report(expected: Mapping[str, Sequence[int]] | None = None, n_max: int = 10, jobs: int = 1,
                  machine: bool = False) -> tuple[list[str], bool]:
    """Series, oracle and expected value for every cell of the subset-size table; ``expected``
    defaults to :data:`TABLE1`."""
    if expected is None:
        expected = TABLE1
    counted = oracle.table1_counts(n_max, jobs=jobs)
    lines = [] if machine else [f"{'row':<11}{'n':>3}{'series':>8}{'oracle':>8}{'table':>8}  result"]
    ok = True
    for row, kind in TABLE1_SERIES.items():
        series = gf.build(kind, n_max).integers()
        for n in range(n_max + 1):
            want = expected[row][n] if n < len(expected[row]) else None
            good = series[n] == counted[row][n] == want
            ok &= good
            verdict = "PASS" if good else "FAIL"
            if machine:
                lines.append(f"{row.replace(' ', '_')} {n} {series[n]} {counted[row][n]} {want} {verdict}")
            else:
                lines.append(f"{row:<11}{n:>3}{series[n]:>8}{counted[row][n]:>8}{str(want):>8}  {verdict}")
    lines.append(f"table1 {'PASS' if ok else 'FAIL'}")
    return lines, ok


def _env_int(name: str, default: int | None) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else str(v)


def _parser() -> _Parser:
    p = _Parser(prog="permfrac", description="321-avoiders, skeletons and fractal permutation classes.")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    verbs = p.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)
    verbs.required = True

    v = verbs.add_parser("classify", help="structural flags of a permutation")
    v.add_argument("perm")
    v = verbs.add_parser("decompose", help="sum, skew or simple-quotient decomposition")
    v.add_argument("perm")
    v = verbs.add_parser("skeleton", help="marked-path word of a 321-avoider and back")
    v.add_argument("action", choices=("encode", "decode"))
    v.add_argument("arg")
    v = verbs.add_parser("series", help="truncated generating function")
    v.add_argument("kind", choices=gf.KINDS)
    v.add_argument("--n", type=int)
    v.add_argument("--bivariate", action="store_true")
    v = verbs.add_parser("count", help="brute-force count of permutations of length n")
    v.add_argument("predicate")
    v.add_argument("--n", type=int)
    v.add_argument("--jobs", type=int)
    v = verbs.add_parser("member", help="membership in F(321) or D_k")
    v.add_argument("cls", metavar="f321|d<k>")
    v.add_argument("perm")
    v = verbs.add_parser("basis", help="minimal forbidden patterns of F(321)")
    v.add_argument("--max-len", type=int, required=True)
    v.add_argument("--class", dest="cls", default="f321", metavar="f321|d<k>")
    v.add_argument("--long-run", action="store_true")
    v.add_argument("--checkpoint")
    v.add_argument("--jobs", type=int)
    v = verbs.add_parser("growth", help="growth constant from the discriminant")
    v.add_argument("equation", choices=sorted(EQUATIONS))
    v = verbs.add_parser("table1", help="series vs oracle vs published table")
    v.add_argument("--n", type=int, default=10)
    v.add_argument("--jobs", type=int)
    return p


def _perm(text: str) -> Permutation:
    return Permutation.parse(text)


def _member(name: str):
    if name == "f321":
        return is_f321_member
    m = re.fullmatch(r"d(\d+)", name)
    if not m:
        raise UsageError(f"class must be f321 or d<k>, got {name!r}")
    k = int(m.group(1))
    is_dn_member((), k)  # rejects k < 1
    return dn_member(k)


def _classify(a, machine, out):
    c = classify(_perm(a.perm))
    flags = {
        "plus_irreducible": c.plus_irreducible,
        "minus_irreducible": c.minus_irreducible,
        "plus_indecomposable": c.plus_indecomposable,
        "minus_indecomposable": c.minus_indecomposable,
        "absolutely_irreducible": c.absolutely_irreducible,
        "avoids_321": c.avoids_321,
    }
    for name, value in flags.items():
        print(f"{name} {int(value)}" if machine else f"{name}: {str(value).lower()}", file=out)
    print(f"lr_maxima {c.lr_maxima_count}" if machine else f"lr_maxima: {c.lr_maxima_count}", file=out)


def _decompose(a, machine, out):
    p = _perm(a.perm)
    d = decompose(p)
    sep = "" if len(p) <= 9 else " "
    raw = "|".join(sep.join(map(str, b)) for b in _raw_blocks(p))
    if machine:
        print(f"kind {d.kind}", file=out)
        print(f"quotient {' '.join(map(str, d.quotient))}", file=out)
        for block in _raw_blocks(p):
            print(f"block {' '.join(map(str, block))}", file=out)
    elif d.kind == "Simple":
        print(f"Simple θ={d.quotient} blocks={raw}", file=out)
    else:
        print(f"{d.kind} blocks={raw}", file=out)


def _raw_blocks(p):
    return split(p)[1]


def _skeleton(a, machine, out):
    if a.action == "encode":
        sw = skeleton_encode(_perm(a.arg))
        if machine:
            print(f"word {sw.word}", file=out)
            print(f"labels {' '.join(map(str, sw.labels))}".rstrip(), file=out)
        else:
            print(sw, file=out)
    else:
        p = skeleton_decode(a.arg)
        print(" ".join(map(str, p)) if machine else p, file=out)


def _series(a, machine, out):
    order = a.n if a.n is not None else _env_int("PERMFRAC_N", 10)
    s = gf.build(a.kind, order, a.bivariate)
    if hasattr(s, "items"):
        if machine:
            for (i, j), v in s.items():
                print(f"{i} {j} {_fmt(v)}", file=out)
        else:
            for i in range(order + 1):
                print(f"x^{i}: " + ", ".join(_fmt(s[i, j]) for j in range(order + 1 - i)), file=out)
    elif machine:
        print(s.machine(), file=out)
    else:
        print(", ".join(_fmt(c) for c in s.coefficients), file=out)


def _count(a, machine, out):
    n = a.n if a.n is not None else _env_int("PERMFRAC_N", None)
    if n is None:
        raise UsageError("count needs --n (or PERMFRAC_N)")
    jobs = a.jobs if a.jobs is not None else _env_int("PERMFRAC_JOBS", 1)
    try:
        pred = oracle.predicate(a.predicate)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    total = oracle.count_where(n, pred, jobs=jobs)
    print(f"{n} {total}" if machine else f"{a.predicate} n={n}: {total}", file=out)


def _member_verb(a, machine, out):
    result = _member(a.cls)(_perm(a.perm))
    print(int(result) if machine else ("member" if result else "not a member"), file=out)


def _basis(a, machine, out):
    jobs = a.jobs if a.jobs is not None else _env_int("PERMFRAC_JOBS", 1)
    report = basis_search(_member(a.cls), a.max_len, jobs=jobs, long_run=a.long_run, checkpoint=a.checkpoint)
    if machine:
        for p in report.minimal_patterns:
            print(f"{len(p)} {' '.join(map(str, p))}", file=out)
    else:
        print("\n".join(report.lines()), file=out)


def _growth(a, machine, out):
    g = growth_constant(EQUATIONS[a.equation])
    if machine:
        print(f"discriminant {' '.join(map(str, g.discriminant))}", file=out)
        print(f"root_interval {g.root_low} {g.root_high}", file=out)
        print(f"growth {g.growth:.9f}", file=out)
    else:
        exact = "" if g.exact_growth is None else f" (exactly {g.exact_growth})"
        print(f"{a.equation}: least positive discriminant root {g.root:.12f}, growth {g.growth:.9f}{exact}",
              file=out)


def _table1(a, machine, out):
    jobs = a.jobs if a.jobs is not None else _env_int("PERMFRAC_JOBS", 1)
    lines, ok = table1_report(n_max=a.n, jobs=jobs, machine=machine)
    print("\n".join(lines), file=out)
    return 0 if ok else 1


_VERBS = {
    "classify": _classify, "decompose": _decompose, "skeleton": _skeleton, "series": _series,
    "count": _count, "member": _member_verb, "basis": _basis, "growth": _growth, "table1": _table1,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
        return _VERBS[args.verb](args, args.format == "machine", out) or 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        print(f"valid verbs: {', '.join(_VERBS)}", file=err)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())
