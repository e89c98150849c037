"""Polynomial equations in an unknown series ``W`` and their series solutions.

An :class:`AlgebraicEquation` is ``sum_k c_k(x, y) W^k = 0`` with polynomial
coefficients ``c_k``.  :func:`solve_algebraic` picks the branch with a given
constant term and runs Newton iteration in the (x, y)-adic filtration.
:func:`growth_constant` locates the dominant singularity of a univariate
equation through its discriminant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .series import BivariateSeries, TruncatedSeries

__all__ = [
    "Poly", "X", "Y", "AlgebraicEquation", "SingularBranchError",
    "InconsistentSeedError", "NoPositiveRootError", "solve_algebraic",
    "residual", "resultant", "discriminant", "GrowthResult", "growth_constant",
    "least_positive_root", "EQUATIONS",
]

Series = Union[TruncatedSeries, BivariateSeries]


class SingularBranchError(ValueError):
    """The W-derivative vanishes at the seed, so the branch is not simple."""


class InconsistentSeedError(ValueError):
    """The seed does not satisfy the equation at order 0."""


class NoPositiveRootError(ValueError):
    pass


class Poly:
    """Polynomial in ``x`` and ``y`` with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int | Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @staticmethod
    def _lift(v) -> "Poly":
        if isinstance(v, Poly):
            return v
        if isinstance(v, (int, Fraction)):
            return Poly({(0, 0): v})
        raise TypeError(f"cannot treat {v!r} as a polynomial")

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly({(0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            return self.terms == self._lift(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def has_y(self) -> bool:
        return any(j for _, j in self.terms)

    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    def at_origin(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def x_coefficients(self) -> list[Fraction]:
        """Low-to-high coefficient list in ``x``; the polynomial must not involve ``y``."""
        if self.has_y:
            raise ValueError("polynomial involves y")
        out = [Fraction(0)] * (self.x_degree() + 1)
        for (i, _), v in self.terms.items():
            out[i] = v
        return out

    def to_series(self, like: Series) -> Series:
        if isinstance(like, TruncatedSeries):
            return TruncatedSeries(self.x_coefficients(), like.order)
        return BivariateSeries(self.terms, like.order)

    def __str__(self) -> str:
        parts = []
        for (i, j), v in sorted(self.terms.items()):
            mono = "*".join(m for m in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
            ) if m)
            parts.append(str(v) if not mono else (mono if v == 1 else f"{v}*{mono}"))
        return " + ".join(parts) or "0"


X = Poly({(1, 0): 1})
Y = Poly({(0, 1): 1})


@dataclass(frozen=True)
class AlgebraicEquation:
    """``sum(coefficients[k] * W**k) = 0``."""

    name: str
    coefficients: tuple[Poly, ...]

    def __init__(self, name: str, coefficients: Sequence[Poly | int]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "coefficients", tuple(Poly._lift(c) for c in coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def bivariate(self) -> bool:
        return any(c.has_y for c in self.coefficients)

    def derivative(self) -> "AlgebraicEquation":
        return AlgebraicEquation(self.name + "'", [k * c for k, c in enumerate(self.coefficients) if k])

    def evaluate(self, w: Series) -> Series:
        """Horner evaluation of the left-hand side at the series ``w``."""
        value = self.coefficients[-1].to_series(w)
        for c in reversed(self.coefficients[:-1]):
            value = value * w + c.to_series(w)
        return value

    def at_origin(self, w0: Fraction) -> Fraction:
        return sum((c.at_origin() * w0 ** k for k, c in enumerate(self.coefficients)), Fraction(0))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c.terms:
                w = "" if k == 0 else ("*W" if k == 1 else f"*W^{k}")
                terms.append(f"({c}){w}")
        return " + ".join(terms) + " = 0"


def residual(eq: AlgebraicEquation, w: Series) -> Series:
    return eq.evaluate(w)


def solve_algebraic(eq: AlgebraicEquation, seed: int | Fraction, order: int,
                    bivariate: bool | None = None) -> Series:
    """The unique series root of ``eq`` with constant term ``seed``.

    Returns a :class:`TruncatedSeries` for equations in ``x`` alone, and a
    :class:`BivariateSeries` when the equation involves ``y`` or
    ``bivariate=True``.
    """
    seed = Fraction(seed)
    if eq.at_origin(seed) != 0:
        raise InconsistentSeedError(f"{eq.name}: seed {seed} does not solve the equation at order 0")
    if eq.derivative().at_origin(seed) == 0:
        raise SingularBranchError(f"{eq.name}: W-derivative vanishes at seed {seed}")
    if bivariate is None:
        bivariate = eq.bivariate
    if eq.bivariate and not bivariate:
        raise ValueError(f"{eq.name} involves y; solve it as a bivariate series")
    w: Series = BivariateSeries.constant(seed, order) if bivariate else TruncatedSeries([seed], order)
    deq = eq.derivative()
    # Newton doubles the number of correct terms each step
    for _ in range(math.ceil(math.log2(order + 1)) + 3):
        r = eq.evaluate(w)
        if r.is_zero():
            return w
        w = w - r / deq.evaluate(w)
    if not eq.evaluate(w).is_zero():
        raise ArithmeticError(f"{eq.name}: Newton iteration did not reach a zero residual")
    return w


# ---------------------------------------------------------------------------
# univariate polynomial helpers (low-to-high Fraction lists)

def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _peval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def _pdivmod(a, b):
    a, b = _trim(a), _trim(b)
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and r != [0]:
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, v in enumerate(b):
            r[i + shift] -= f * v
        r = _trim(r[:-1]) if len(r) > 1 else [Fraction(0)]
    return _trim(q), _trim(r)


def _pderiv(p):
    return _trim([k * c for k, c in enumerate(p)][1:] or [Fraction(0)])


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b != [0]:
        a, b = b, _pdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def _sylvester(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[list[Fraction]]:
    # p, q high-to-low in W
    dp, dq = len(p) - 1, len(q) - 1
    size = dp + dq
    rows = []
    for i in range(dq):
        rows.append([Fraction(0)] * i + list(p) + [Fraction(0)] * (size - dp - 1 - i))
    for i in range(dp):
        rows.append([Fraction(0)] * i + list(q) + [Fraction(0)] * (size - dq - 1 - i))
    return rows


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients of the polynomial through the points (Newton form)."""
    n = len(xs)
    dd = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        poly = _pmul(poly, [Fraction(-xs[i]), Fraction(1)]) if poly != [0] else [Fraction(0)]
        poly[0] += dd[i]
        poly = _trim(poly)
    return poly


def resultant(p: AlgebraicEquation, q: AlgebraicEquation) -> list[Fraction]:
    """Resultant in ``W`` of two equations in ``x`` alone, as a polynomial in ``x``.

    The Sylvester determinant is evaluated at integer points and interpolated,
    which is exact because its x-degree is bounded a priori.
    """
    if p.bivariate or q.bivariate:
        raise ValueError("resultant is only implemented for equations in x alone")
    pc = [c.x_coefficients() for c in p.coefficients]
    qc = [c.x_coefficients() for c in q.coefficients]
    bound = q.degree * max(len(c) - 1 for c in pc) + p.degree * max(len(c) - 1 for c in qc)
    xs = list(range(bound + 1))
    ys = []
    for x in xs:
        pv = [_peval(c, Fraction(x)) for c in reversed(pc)]
        qv = [_peval(c, Fraction(x)) for c in reversed(qc)]
        ys.append(_det(_sylvester(pv, qv)))
    return _interpolate(xs, ys)


def discriminant(eq: AlgebraicEquation) -> list[int]:
    """Discriminant in ``W``, low-to-high integer coefficients in ``x``.

    Integer coefficients in the equation give an integer discriminant; a
    rational one is cleared of denominators, which leaves its roots alone.
    """
    d = eq.degree
    res = resultant(eq, eq.derivative())
    lead = eq.coefficients[-1].x_coefficients()
    disc, rem = _pdivmod(res, lead)
    if rem != [0]:
        raise ArithmeticError("leading coefficient does not divide the resultant")
    if (d * (d - 1) // 2) % 2:
        disc = [-c for c in disc]
    lcm = 1
    for c in disc:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in disc]


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [p, _pderiv(p)]
    while chain[-1] != [0] and len(chain[-1]) > 1:
        r = _pdivmod(chain[-2], chain[-1])[1]
        if r == [0]:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = [v for v in (_peval(p, x) for p in chain) if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def least_positive_root(poly: Sequence[int | Fraction], tolerance: Fraction = Fraction(1, 10 ** 9)
                        ) -> tuple[Fraction, Fraction, Fraction | None]:
    """Bracket ``(lo, hi]`` of width < ``tolerance`` around the least positive
    real root, plus the root itself when it was hit exactly."""
    p = _trim([Fraction(c) for c in poly])
    if len(p) < 2:
        raise NoPositiveRootError("constant polynomial has no roots")
    g = _pgcd(p, _pderiv(p))
    p = _pdivmod(p, g)[0]
    while p[0] == 0:
        p = p[1:]
    if len(p) < 2:
        raise NoPositiveRootError("no positive real root")
    bound = 1 + max(abs(c / p[-1]) for c in p[:-1])
    hi = Fraction(1)
    while hi < bound:
        hi *= 2
    chain = _sturm_chain(p)
    v0 = _sign_changes(chain, Fraction(0))
    if v0 - _sign_changes(chain, hi) == 0:
        raise NoPositiveRootError("no positive real root")
    lo = Fraction(0)
    while hi - lo >= tolerance:
        mid = (lo + hi) / 2
        if v0 - _sign_changes(chain, mid) >= 1:
            hi = mid
        else:
            lo = mid
    exact = hi if _peval(p, hi) == 0 else None
    return lo, hi, exact


@dataclass(frozen=True)
class GrowthResult:
    discriminant: tuple[int, ...]
    root_low: Fraction
    root_high: Fraction
    exact_root: Fraction | None

    @property
    def root(self) -> float:
        if self.exact_root is not None:
            return float(self.exact_root)
        return float((self.root_low + self.root_high) / 2)

    @property
    def growth(self) -> float:
        return 1.0 / self.root

    @property
    def exact_growth(self) -> Fraction | None:
        return None if self.exact_root is None else 1 / self.exact_root


def growth_constant(eq: AlgebraicEquation, tolerance: Fraction = Fraction(1, 10 ** 9)) -> GrowthResult:
    """Reciprocal of the least positive root of the discriminant of ``eq``."""
    disc = discriminant(eq)
    lo, hi, exact = least_positive_root(disc, tolerance)
    return GrowthResult(tuple(disc), lo, hi, exact)


# ---------------------------------------------------------------------------
# Named equations.  Bivariate ones use x for left-to-right maxima and y for
# the remaining entries (marked cells, for skeleton series), except eqA2
# whose x is length and y is left-to-right maxima.

EQUATIONS: dict[str, AlgebraicEquation] = {
    eq.name: eq for eq in [
        # skeletons
        AlgebraicEquation("eqS", [1 + Y, X * Y + X - 2 * Y - 1, Y]),
        AlgebraicEquation("S_x", [2, 2 * X - 3, 1]),
        AlgebraicEquation("S1", [1, X * Y + X - 1, X * Y + X * Y ** 2]),
        # all 321-avoiders
        AlgebraicEquation("eqA1", [1, X - Y - 1, Y]),
        AlgebraicEquation("eqA2", [1, X * Y - X - 1, X]),
        AlgebraicEquation("catalan", [1, -1, X]),
        # plus irreducible
        AlgebraicEquation("eqAPIrr", [(X + 1) * (Y + 1), -(X * Y + 2 * Y + 1), Y * (X + 1)]),
        AlgebraicEquation("A_plus_irr_x", [(X + 1) ** 2, -(X + 1) ** 2, X * (X + 1)]),
        # minus irreducible
        AlgebraicEquation("eqAMIrr", [1, X - Y - 2 * X * Y - 1, Y + X * Y + X * Y ** 2 - X ** 2 * Y + X ** 2 * Y ** 2]),
        AlgebraicEquation("A_minus_irr_x", [1, -(1 + 2 * X ** 2), X ** 4 + X ** 2 + X]),
        # plus indecomposable (non-empty)
        AlgebraicEquation("A_plus_ind", [X, Y - X - 1, 1]),
        AlgebraicEquation("A_plus_ind_x", [X, -1, 1]),
        AlgebraicEquation("S_plus_ind", [X * Y + X, -(1 + X + X * Y), 1 + Y]),
        AlgebraicEquation("S_plus_ind_x", [2 * X, -(1 + 2 * X), 2]),
        # absolutely irreducible, without 1, 12 and the empty permutation
        AlgebraicEquation("eqAind", [X * Y, X * Y - 1, (1 + X) * (1 + Y)]),
        AlgebraicEquation("A_irr_x", [X ** 2, X ** 2 - 1, (X + 1) ** 2]),
        # fractal classes
        AlgebraicEquation("eqFrac2", [X + X ** 2, 2 * X ** 2 - 1 - 2 * X, X ** 2 - 3 * X + 3, -2 * X - 1, -2 * X + 3, 0, 1]),
        AlgebraicEquation("separable", [X, X - 1, 1]),
        # little Schroeder numbers 1, 1, 3, 11, 45, ...
        AlgebraicEquation("schroder", [1, -(1 + X), 2 * X]),
    ]
}
