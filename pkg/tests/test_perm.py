import math
from itertools import combinations, permutations

import pytest
from hypothesis import given

from conftest import permutations_of
from permfrac.perm import (
    Permutation, avoids, avoids_321, classify, contains_pattern, decompose, inflate,
    is_absolutely_irreducible, is_minus_indecomposable, is_plus_indecomposable,
    left_to_right_maxima, normalize, one_point_deletions, split,
)

FIG2 = Permutation.parse("4 5 1 2 7 3 6 10 8 9")


def brute_contains(host, pattern):
    k = len(pattern)
    return any(normalize([host[i] for i in pos]) == tuple(pattern) for pos in combinations(range(len(host)), k))


def interval_factors(p):
    """All (a, b) with p[a:b] an interval, 2 <= b - a < len(p)."""
    n = len(p)
    return [(a, b) for a in range(n) for b in range(a + 2, n + 1)
            if b - a < n and max(p[a:b]) - min(p[a:b]) == b - a - 1]


class TestParsing:
    def test_formats_agree(self):
        assert Permutation.parse("4512 3".replace(" ", "")) == Permutation.parse("4 5 1 2 3") == Permutation.parse("4,5,1,2,3")

    def test_long_needs_separators(self):
        assert len(FIG2) == 10
        with pytest.raises(ValueError):
            Permutation.parse("1234567891")

    @pytest.mark.parametrize("bad", ["1 1 2", "0 1", "2 3", "a b"])
    def test_rejects_non_permutations(self, bad):
        with pytest.raises(ValueError):
            Permutation.parse(bad)

    def test_str(self):
        assert str(Permutation.parse("312")) == "312"
        assert str(FIG2) == "4 5 1 2 7 3 6 10 8 9"
        assert Permutation.parse("") == ()


class TestContainment:
    def test_examples(self):
        assert not contains_pattern(FIG2, (3, 2, 1))
        assert contains_pattern((3, 2, 1), (3, 2, 1))
        assert contains_pattern((4, 2, 5, 1, 3), (3, 2, 1))

    def test_fast_321_matches_brute_force(self):
        for n in range(7):
            for p in permutations(range(1, n + 1)):
                assert avoids_321(p) == (not brute_contains(p, (3, 2, 1)))

    def test_321_avoiders_are_catalan(self):
        for n in range(9):
            assert sum(avoids_321(p) for p in permutations(range(1, n + 1))) == math.comb(2 * n, n) // (n + 1)

    @given(permutations_of(0, 8), permutations_of(0, 4))
    def test_generic_matches_definition(self, host, pattern):
        assert contains_pattern(host, pattern) == brute_contains(host, pattern)
        assert avoids(host, pattern) != contains_pattern(host, pattern)


class TestMaxima:
    def test_fig2(self):
        pos = left_to_right_maxima(FIG2)
        assert [FIG2[i - 1] for i in pos] == [4, 5, 7, 10]

    def test_trivial(self):
        assert left_to_right_maxima(Permutation.identity(6)) == list(range(1, 7))
        assert left_to_right_maxima(Permutation.decreasing(6)) == [1]


class TestPredicates:
    def test_examples(self):
        assert classify((2, 4, 1, 3)).absolutely_irreducible
        assert not classify((3, 4, 1, 2)).minus_indecomposable
        c = classify((1, 2, 3))
        assert not c.plus_irreducible and not c.plus_indecomposable

    def test_one_is_everything(self):
        c = classify((1,))
        assert all([c.plus_irreducible, c.minus_irreducible, c.plus_indecomposable,
                    c.minus_indecomposable, c.absolutely_irreducible, c.avoids_321])
        assert c.lr_maxima_count == 1

    @given(permutations_of(3, 10))
    def test_simple_implies_weaker_flags(self, p):
        c = classify(p)
        if c.absolutely_irreducible:
            assert c.plus_irreducible and c.minus_irreducible
            assert c.plus_indecomposable and c.minus_indecomposable

    @given(permutations_of(0, 10))
    def test_simple_has_no_interval_factor(self, p):
        assert is_absolutely_irreducible(p) == (not interval_factors(p))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_minus_decomposable_avoiders(self, n):
        found = [p for p in permutations(range(1, n + 1)) if avoids_321(p) and not is_minus_indecomposable(p)]
        expected = [tuple(range(k + 1, n + 1)) + tuple(range(1, k + 1)) for k in range(1, n)]
        assert sorted(found) == sorted(expected)


class TestDecompose:
    def test_worked_examples(self):
        d = decompose(Permutation.parse("423615"))
        assert (d.kind, d.quotient) == ("Simple", (2, 4, 1, 3))
        assert split((4, 2, 3, 6, 1, 5))[1] == [(4, 2, 3), (6,), (1,), (5,)]
        d = decompose(Permutation.parse("724513986"))
        assert (d.kind, d.quotient) == ("Simple", (3, 1, 4, 2))
        assert split((7, 2, 4, 5, 1, 3, 9, 8, 6))[1] == [(7,), (2, 4, 5, 1, 3), (9, 8), (6,)]
        d = decompose((1, 2, 3))
        assert d.kind == "Sum" and d.blocks == ((1,), (1,), (1,))

    def test_text(self):
        assert str(decompose((4, 2, 3, 6, 1, 5))) == "Simple θ=2413 blocks=312|1|1|1"
        assert str(decompose((3, 4, 1, 2))) == "Skew blocks=12|12"

    def test_too_short(self):
        with pytest.raises(ValueError):
            decompose((1,))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_exhaustive_round_trip(self, n):
        for p in permutations(range(1, n + 1)):
            d = decompose(p)
            assert inflate(d.quotient, d.blocks) == p

    @given(permutations_of(2, 12))
    def test_structure(self, p):
        d = decompose(p)
        assert len(d.quotient) == len(d.blocks) >= 2
        if d.kind == "Sum":
            assert all(is_plus_indecomposable(b) for b in d.blocks)
            assert len(split(p)[1]) == len(d.blocks)
        elif d.kind == "Skew":
            assert all(is_minus_indecomposable(b) for b in d.blocks)
            assert is_plus_indecomposable(p)
        else:
            assert len(d.quotient) >= 4 and is_absolutely_irreducible(d.quotient)
            assert is_plus_indecomposable(p) and is_minus_indecomposable(p)
            # no proper interval strictly contains a block
            bounds, start = [], 0
            for b in d.blocks:
                bounds.append((start, start + len(b)))
                start += len(b)
            for a, b in interval_factors(p):
                assert any(lo <= a and b <= hi for lo, hi in bounds)

    def test_sum_and_skew_exclusive(self):
        for n in range(2, 8):
            for p in permutations(range(1, n + 1)):
                assert is_plus_indecomposable(p) or is_minus_indecomposable(p)


class TestInflate:
    def test_examples(self):
        assert inflate((2, 4, 1, 3), [(3, 1, 2), (1,), (1,), (1,)]) == (4, 2, 3, 6, 1, 5)
        assert inflate((1,), [FIG2]) == FIG2
        assert inflate((2, 1), [(1, 2), (1, 2)]) == (3, 4, 1, 2)
        assert decompose((3, 4, 1, 2)).blocks == ((1, 2), (1, 2))

    def test_errors(self):
        with pytest.raises(ValueError):
            inflate((1, 2), [(1,)])
        with pytest.raises(ValueError):
            inflate((1, 2), [(1,), ()])


class TestDeletions:
    def test_examples(self):
        assert one_point_deletions((1, 2)) == {(1,)}
        assert one_point_deletions(tuple(range(1, 7))) == {tuple(range(1, 6))}

    def test_42513(self):
        p = (4, 2, 5, 1, 3)
        got = one_point_deletions(p)
        assert len(got) <= 5
        assert got == {normalize(p[:i] + p[i + 1:]) for i in range(5)}
        # deleting the 5 gives 4213 -> 4213 normalized
        assert (4, 2, 1, 3) in got
