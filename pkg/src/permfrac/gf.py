"""Generating functions for skeletons, 321-avoiders and their subsets, and
the fractal classes built from them.

Bivariate series count by (left-to-right maxima, other entries) in ``x`` and
``y``; :meth:`BivariateSeries.regrade` turns them into (length, left-to-right
maxima).  ``A_am`` is built directly in the (length, left-to-right maxima)
grading.  Skeleton series count marked cells in ``y``, so their univariate
form is ``y = 1`` rather than the diagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .equations import EQUATIONS, X, AlgebraicEquation, Poly, solve_algebraic
from .series import BivariateSeries, TruncatedSeries

__all__ = [
    "MAX_ORDER", "KINDS", "Builder", "builder", "build", "catalan", "narayana",
    "little_schroder", "schroder_check", "radical_abs_irr", "simple_part",
    "solve_wreath_fixed_point",
]

MAX_ORDER = 64


@dataclass(frozen=True)
class Builder:
    """A series is ``solve(equation, seed) + shift``."""

    equation: AlgebraicEquation
    seed: int
    shift: Poly = Poly()


_UNIVARIATE = {
    "S_x": Builder(EQUATIONS["S_x"], 1),
    "A_x": Builder(EQUATIONS["catalan"], 1),
    "A_plus_irr": Builder(EQUATIONS["A_plus_irr_x"], 1),
    "A_minus_irr": Builder(EQUATIONS["A_minus_irr_x"], 1),
    "A_plus_ind": Builder(EQUATIONS["A_plus_ind_x"], 0),
    "S_plus_ind": Builder(EQUATIONS["S_plus_ind_x"], 0),
    # the quadratic misses the empty permutation, 1 and 12
    "A_abs_irr": Builder(EQUATIONS["A_irr_x"], 0, 1 + X + X ** 2),
    "F": Builder(EQUATIONS["eqFrac2"], 0),
}

_BIVARIATE = {
    "S_xy": Builder(EQUATIONS["eqS"], 1),
    "A_xy": Builder(EQUATIONS["eqA1"], 1),
    "A_am": Builder(EQUATIONS["eqA2"], 1),
    "A_plus_irr": Builder(EQUATIONS["eqAPIrr"], 1),
    "A_minus_irr": Builder(EQUATIONS["eqAMIrr"], 1),
    "A_plus_ind": Builder(EQUATIONS["A_plus_ind"], 0),
    "S_plus_ind": Builder(EQUATIONS["S_plus_ind"], 0),
    "A_abs_irr": Builder(EQUATIONS["eqAind"], 0, 1 + X + X ** 2),
}

KINDS = ("S_xy", "S_x", "A_xy", "A_am", "A_x", "A_plus_irr", "A_minus_irr",
         "A_plus_ind", "S_plus_ind", "A_abs_irr", "F")


def builder(kind: str, bivariate: bool = False) -> Builder:
    if kind in ("S_xy", "A_xy", "A_am"):
        return _BIVARIATE[kind]
    if kind in ("S_x", "A_x", "F"):
        if bivariate:
            raise ValueError(f"{kind} has no bivariate form")
        return _UNIVARIATE[kind]
    if kind not in _UNIVARIATE:
        raise ValueError(f"unknown series kind {kind!r}; expected one of {', '.join(KINDS)}")
    return (_BIVARIATE if bivariate else _UNIVARIATE)[kind]


def build(kind: str, order: int, bivariate: bool = False):
    """Series ``kind`` truncated at ``order`` (total degree, if bivariate)."""
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"order must lie in [0, {MAX_ORDER}]")
    b = builder(kind, bivariate)
    two_vars = bivariate or kind in ("S_xy", "A_xy", "A_am")
    w = solve_algebraic(b.equation, b.seed, order, bivariate=two_vars)
    if b.shift.terms:
        w = w + b.shift.to_series(w)
    return w


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Number of 321-avoiders of length ``n`` with ``k`` left-to-right maxima."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"narayana({n}, {k}) needs 1 <= k <= n")
    return math.comb(n, k) * math.comb(n, k - 1) // n


def little_schroder(order: int) -> TruncatedSeries:
    return solve_algebraic(EQUATIONS["schroder"], 1, order)


def schroder_check(order: int) -> bool:
    """``[x^n] S(x) = 2^(n+1) s(n-1)`` for ``2 <= n <= order``, with
    ``S(x) = 1 + 2x + ...``."""
    if order > 20:
        raise ValueError("schroder_check is limited to order <= 20")
    s = build("S_x", order).integers()
    little = little_schroder(order).integers()
    if s[:2] != [1, 2][: order + 1]:
        return False
    return all(s[n] == 2 ** (n + 1) * little[n - 1] for n in range(2, order + 1))


def radical_abs_irr(order: int) -> TruncatedSeries:
    """``(1 - x - sqrt(1 - 2x - 3x^2)) / (2(1 + x)) - x^2``: absolutely
    irreducible 321-avoiders of length at least 3."""
    x = TruncatedSeries.x(order)
    root = (1 - 2 * x - 3 * x * x).sqrt()
    return (1 - x - root) / (2 * (1 + x)) - x * x


def simple_part(series: TruncatedSeries, min_degree: int = 4) -> TruncatedSeries:
    """``series`` with every term of degree below ``min_degree`` removed."""
    return TruncatedSeries([0] * min_degree + list(series.coefficients[min_degree:]), series.order)


def solve_wreath_fixed_point(simple_gf: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Generating function (constant term 0) of the fixed point of
    ``X = C wr X``, where ``simple_gf`` counts the simple members of ``C``
    of length >= 4 and ``C`` contains 12 and 21.

    Iterates ``F = x + F+ F + F- F + s(F)``, ``F+ = x + F- F + s(F)``,
    ``F- = x + F+ F + s(F)``; each pass fixes at least one more coefficient.
    """
    if order is None:
        order = simple_gf.order
    simple_gf = simple_gf.truncate(order)
    if any(simple_gf.coefficients[:4]):
        raise ValueError("simple_gf must vanish below degree 4")
    x = TruncatedSeries.x(order)
    f = fp = fm = TruncatedSeries.zero(order)
    for _ in range(order + 2):
        s = simple_gf.compose(f)
        nf = x + fp * f + fm * f + s
        nfp = x + fm * f + s
        nfm = x + fp * f + s
        if (nf, nfp, nfm) == (f, fp, fm):
            return f
        f, fp, fm = nf, nfp, nfm
    raise ArithmeticError("wreath fixed point did not stabilise; malformed simple_gf?")

