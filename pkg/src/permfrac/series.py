"""Exact truncated power series in one variable (``x``) or two (``x``, ``y``).

Coefficients are :class:`fractions.Fraction`.  A univariate series of order
``N`` stores ``c0..cN``; a bivariate series of order ``N`` stores every
``c[i][j]`` with ``i + j <= N`` (total-degree truncation).  Binary operations
on mismatched orders truncate to the smaller one, so a result never claims
more precision than its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

__all__ = ["TruncatedSeries", "BivariateSeries", "Scalar"]

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else str(c)


class TruncatedSeries:
    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Scalar], order: int | None = None):
        c = [_frac(v) for v in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a series needs at least its constant term")
        self._c = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: Scalar = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if degree <= order:
            c[degree] = coefficient
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self._c[: order + 1])

    def integers(self) -> list[int]:
        """Coefficients as ints; raises if any is not integral."""
        out = []
        for n, c in enumerate(self._c):
            if c.denominator != 1:
                raise ValueError(f"coefficient {n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def is_counting(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    def valuation(self) -> int | None:
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    # arithmetic

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self._c[: n + 1], other._c[: n + 1]))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(a * other for a in self._c)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(a / other for a in self._c)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other._c[0] == 0:
            raise ZeroDivisionError("division by a series with zero constant term")
        n = min(self.order, other.order)
        a, b = self._c, other._c
        q = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            s = a[i] - sum(b[k] * q[i - k] for k in range(1, i + 1) if b[k])
            q[i] = s / b[0]
        return TruncatedSeries(q)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return TruncatedSeries.one(self.order) / self ** (-k)
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner._c[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncatedSeries([self._c[n] if n <= self.order else 0], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self._c[k]
        return result

    __call__ = compose

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1, by Newton iteration."""
        if self._c[0] != 1:
            raise ValueError("sqrt needs constant term 1")
        root = TruncatedSeries.one(self.order)
        precision = 1
        while precision <= self.order:
            precision *= 2
            root = (root + self / root) / 2
        return root

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries([0])
        return TruncatedSeries(k * c for k, c in enumerate(self._c) if k)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    # output

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self._c):
            if not c and (terms or n < self.order):
                continue
            if n == 0:
                terms.append(_fmt(c))
            elif n == 1:
                terms.append(f"{_fmt(c)}*x")
            else:
                terms.append(f"{_fmt(c)}*x^{n}")
        return " + ".join(terms) + f" + O(x^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(map(_fmt, self._c))}])"

    def machine(self) -> str:
        """One ``n coefficient`` line per coefficient."""
        return "\n".join(f"{n} {_fmt(c)}" for n, c in enumerate(self._c))


class BivariateSeries:
    """Series in ``x`` and ``y`` truncated at total degree ``order``."""

    __slots__ = ("_c", "_n")

    def __init__(self, coefficients: dict[tuple[int, int], Scalar] | None = None, order: int = 0):
        if order < 0:
            raise ValueError("order must be non-negative")
        self._n = order
        rows = [[Fraction(0)] * (order + 1 - i) for i in range(order + 1)]
        for (i, j), v in (coefficients or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if i + j <= order:
                rows[i][j] = _frac(v)
        self._c = rows

    @classmethod
    def _from_rows(cls, rows: list[list[Fraction]], order: int) -> "BivariateSeries":
        s = cls.__new__(cls)
        s._n = order
        s._c = rows
        return s

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "BivariateSeries":
        return cls({(0, 0): value}, order)

    @classmethod
    def x(cls, order: int) -> "BivariateSeries":
        return cls({(1, 0): 1}, order)

    @classmethod
    def y(cls, order: int) -> "BivariateSeries":
        return cls({(0, 1): 1}, order)

    @classmethod
    def from_univariate(cls, s: TruncatedSeries, variable: str = "x") -> "BivariateSeries":
        if variable == "x":
            return cls({(n, 0): c for n, c in enumerate(s.coefficients)}, s.order)
        return cls({(0, n): c for n, c in enumerate(s.coefficients)}, s.order)

    @property
    def order(self) -> int:
        return self._n

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if i < 0 or j < 0 or i + j > self._n:
            raise IndexError(f"({i},{j}) is beyond the total-degree truncation {self._n}")
        return self._c[i][j]

    def items(self):
        """Non-zero ``((i, j), coefficient)`` pairs in order of ``i`` then ``j``."""
        for i, row in enumerate(self._c):
            for j, v in enumerate(row):
                if v:
                    yield (i, j), v

    def truncate(self, order: int) -> "BivariateSeries":
        if order > self._n:
            raise ValueError("cannot extend a truncated series")
        return BivariateSeries._from_rows([row[: order + 1 - i] for i, row in enumerate(self._c[: order + 1])], order)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._c)

    def is_counting(self) -> bool:
        return all(v.denominator == 1 and v >= 0 for row in self._c for v in row)

    def _coerce(self, other):
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariateSeries.constant(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self._n, other._n)
        rows = [[a + b for a, b in zip(self._c[i][: n + 1 - i], other._c[i][: n + 1 - i])] for i in range(n + 1)]
        return BivariateSeries._from_rows(rows, n)

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries._from_rows([[-v for v in row] for row in self._c], self._n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariateSeries._from_rows([[v * other for v in row] for row in self._c], self._n)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self._n, other._n)
        rows = [[Fraction(0)] * (n + 1 - i) for i in range(n + 1)]
        b_terms = [(i, j, v) for (i, j), v in other.items() if i + j <= n]
        for (i1, j1), a in self.items():
            d1 = i1 + j1
            if d1 > n:
                continue
            for i2, j2, b in b_terms:
                if d1 + i2 + j2 <= n:
                    rows[i1 + i2][j1 + j2] += a * b
        return BivariateSeries._from_rows(rows, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _frac(other))
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        b00 = other._c[0][0]
        if b00 == 0:
            raise ZeroDivisionError("division by a series with zero constant term")
        n = min(self._n, other._n)
        b_terms = [(i, j, v) for (i, j), v in other.items() if (i, j) != (0, 0) and i + j <= n]
        q = [[Fraction(0)] * (n + 1 - i) for i in range(n + 1)]
        for d in range(n + 1):
            for i in range(d + 1):
                j = d - i
                s = self._c[i][j]
                for bi, bj, bv in b_terms:
                    if bi <= i and bj <= j:
                        qv = q[i - bi][j - bj]
                        if qv:
                            s -= bv * qv
                q[i][j] = s / b00
        return BivariateSeries._from_rows(q, n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return BivariateSeries.constant(1, self._n) / self ** (-k)
        result = BivariateSeries.constant(1, self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, x_series: "BivariateSeries", y_series: "BivariateSeries") -> "BivariateSeries":
        """``self(x_series, y_series)``; both substitutes need zero constant term."""
        if x_series._c[0][0] or y_series._c[0][0]:
            raise ValueError("substituted series must have zero constant term")
        n = min(self._n, x_series._n, y_series._n)
        y_powers = [BivariateSeries.constant(1, n)]
        for _ in range(n):
            y_powers.append(y_powers[-1] * y_series)
        # Horner in x over rows that are polynomials in y
        result = BivariateSeries.constant(0, n)
        for i in range(n, -1, -1):
            row = BivariateSeries.constant(0, n)
            for j, v in enumerate(self._c[i][: n + 1 - i]):
                if v:
                    row = row + y_powers[j] * v
            result = result * x_series + row
        return result

    def diagonal(self) -> TruncatedSeries:
        """Univariate series ``f(t, t)``; exact through ``t^order``."""
        return TruncatedSeries(sum(self._c[i][d - i] for i in range(d + 1)) for d in range(self._n + 1))

    def regrade(self) -> "BivariateSeries":
        """Substitute ``x -> x*y``, ``y -> x``: an (LR-maxima, others) series
        becomes a (length, LR-maxima) series."""
        return self.substitute(BivariateSeries({(1, 1): 1}, self._n), BivariateSeries.x(self._n))

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariateSeries):
            return self._n == other._n and self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n, tuple(map(tuple, self._c))))

    def __str__(self) -> str:
        terms = []
        for (i, j), v in self.items():
            mono = "*".join(p for p in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
            ) if p)
            terms.append(_fmt(v) if not mono else f"{_fmt(v)}*{mono}")
        return " + ".join(terms or ["0"]) + f" + O(deg {self._n + 1})"

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self._n}, terms={sum(1 for _ in self.items())})"

    def machine(self) -> str:
        """One ``(i,j) coefficient`` line per non-zero coefficient."""
        return "\n".join(f"({i},{j}) {_fmt(v)}" for (i, j), v in self.items())
