import math
from fractions import Fraction

import pytest
import sympy

from permfrac.equations import (
    EQUATIONS, AlgebraicEquation, InconsistentSeedError, NoPositiveRootError, SingularBranchError,
    X, Y, discriminant, growth_constant, least_positive_root, residual, solve_algebraic,
)
from permfrac.oracle import PREDICATES, count_by_maxima
from permfrac.skeleton import enumerate_words


def sympy_discriminant(eq):
    x, w = sympy.symbols("x w")
    poly = sum(sympy.Poly(sympy.sympify(0), x).as_expr() + _to_sympy(c, x) * w ** k
               for k, c in enumerate(eq.coefficients))
    d = sympy.Poly(sympy.discriminant(poly, w), x)
    return [int(v) for v in reversed(d.all_coeffs())]


def _to_sympy(poly, x):
    return sum(sympy.Rational(v.numerator, v.denominator) * x ** i for (i, _), v in poly.terms.items())


class TestSolve:
    def test_catalan(self):
        s = solve_algebraic(EQUATIONS["catalan"], 1, 10)
        assert s.integers() == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]

    def test_skeletons(self):
        assert solve_algebraic(EQUATIONS["S_x"], 1, 4).integers() == [1, 2, 8, 48, 352]

    def test_skeletons_match_word_totals(self):
        s = solve_algebraic(EQUATIONS["S_x"], 1, 6).integers()
        words = enumerate_words(5)
        for segments in range(6):
            assert sum(c for (h, _), c in words.items() if h == segments) == s[segments + 1]

    def test_fractal(self):
        s = solve_algebraic(EQUATIONS["eqFrac2"], 0, 10)
        assert s.integers() == [0, 1, 2, 6, 24, 116, 625, 3580, 21297, 130084, 810737]

    def test_residual_zero(self):
        for name in ("catalan", "S_x", "eqFrac2", "separable"):
            eq = EQUATIONS[name]
            seed = 0 if name in ("eqFrac2", "separable") else 1
            assert residual(eq, solve_algebraic(eq, seed, 12)).is_zero()

    def test_bad_seed(self):
        with pytest.raises(InconsistentSeedError):
            solve_algebraic(EQUATIONS["catalan"], 0, 5)

    def test_singular_branch(self):
        # (W - 1)^2 = 0 has a double root at the seed
        eq = AlgebraicEquation("double", [1, -2, 1])
        with pytest.raises(SingularBranchError):
            solve_algebraic(eq, 1, 5)

    def test_bivariate_needs_flag(self):
        with pytest.raises(ValueError):
            solve_algebraic(EQUATIONS["eqS"], 1, 5, bivariate=False)


class TestPrintedForms:
    """The forms as typeset do not reproduce the counts; the corrected ones do."""

    def test_skeleton_equation(self):
        printed = AlgebraicEquation("printed eqS", [1 + Y, X * Y + X - 2 * Y - 1, X])
        words = enumerate_words(3)
        fixed = solve_algebraic(EQUATIONS["eqS"], 1, 12, bivariate=True)
        assert all(fixed[s + 1, k] == c for (s, k), c in words.items())
        bad = solve_algebraic(printed, 1, 12, bivariate=True)
        assert any(bad[s + 1, k] != c for (s, k), c in words.items())

    def test_plus_irreducible_equation(self):
        printed = AlgebraicEquation("printed eqAPIrr", [(X + 1) * (Y + 1), -(X * Y + 2 * Y + 1), X * (Y + 1)])
        bad = solve_algebraic(printed, 1, 8, bivariate=True)
        good = solve_algebraic(EQUATIONS["eqAPIrr"], 1, 8, bivariate=True)
        for n in range(1, 7):
            # x marks left-to-right maxima, y the other entries
            by_maxima = count_by_maxima(n, PREDICATES["plus_irr"])
            assert all(good[k, n - k] == by_maxima.get(k, 0) for k in range(1, n + 1))
        assert not bad.is_counting()

    def test_minus_irreducible_univariate(self):
        printed = AlgebraicEquation("printed", [1, 1 - 2 * X ** 2, X ** 4 + X ** 2 + X])
        with pytest.raises(InconsistentSeedError):
            solve_algebraic(printed, 1, 5)


class TestDiscriminant:
    @pytest.mark.parametrize("name", ["catalan", "S_x", "eqFrac2", "separable", "A_irr_x", "A_minus_irr_x"])
    def test_matches_sympy(self, name):
        got = discriminant(EQUATIONS[name])
        want = sympy_discriminant(EQUATIONS[name])
        # both are exact; they may differ by a positive rational content factor
        ratio = Fraction(want[-1], got[-1])
        assert ratio > 0 and [Fraction(c) * ratio for c in got] == want

    def test_catalan(self):
        assert discriminant(EQUATIONS["catalan"]) == [1, -4]

    def test_skeletons(self):
        assert discriminant(EQUATIONS["S_x"]) == [1, -12, 4]


class TestRoots:
    def test_exact_rational_root(self):
        lo, hi, exact = least_positive_root([1, -4])
        assert exact == Fraction(1, 4)

    def test_bracket(self):
        lo, hi, exact = least_positive_root([-2, 0, 1])
        assert exact is None and lo < math.sqrt(2) <= hi and hi - lo < 1e-9

    def test_repeated_and_zero_roots(self):
        # x^2 (x - 3)^2 (x - 5): least positive root 3 despite the double root
        poly = [0, 0, -45, 39, -11, 1]
        assert least_positive_root(poly)[2] == 3

    def test_no_positive_root(self):
        with pytest.raises(NoPositiveRootError):
            least_positive_root([1, 1])
        with pytest.raises(NoPositiveRootError):
            least_positive_root([5])


class TestGrowth:
    def test_fractal(self):
        g = growth_constant(EQUATIONS["eqFrac2"])
        assert abs(g.growth - 7.346751) < 5e-6

    def test_catalan(self):
        g = growth_constant(EQUATIONS["catalan"])
        assert g.exact_growth == 4

    def test_skeletons(self):
        # least root (3 - 2 sqrt 2) / 2 of 4x^2 - 12x + 1
        g = growth_constant(EQUATIONS["S_x"])
        assert abs(g.root - (3 - 2 * math.sqrt(2)) / 2) < 1e-9
        assert abs(g.growth - (6 + 4 * math.sqrt(2))) < 1e-6

    def test_skeleton_ratios_approach_growth(self):
        s = solve_algebraic(EQUATIONS["S_x"], 1, 40).integers()
        assert abs(s[40] / s[39] - (6 + 4 * math.sqrt(2))) < 0.5
