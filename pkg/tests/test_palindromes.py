import pytest

from sturmian import (
    NotAPalindrome,
    Representation,
    central_word,
    classify_central,
    enumerate_repr_pairs,
    is_palindrome_occurrence,
    is_valid,
    maximal_extension,
    ostrowski,
    palindrome_repr_pair,
    value,
    z_profile,
)
from sturmian.palindromes import (
    _pipeline_label,
    occurrence_to_json,
    pair_fits,
    z_profiles_agree_off_m,
)

from conftest import family

R = Representation.parse


class TestOccurrenceCheck:
    def test_paper_examples(self, fib):
        assert is_palindrome_occurrence(fib, 12, 13)  # b
        assert is_palindrome_occurrence(fib, 7, 9)  # aa
        assert not is_palindrome_occurrence(fib, 0, 2)  # ab

    def test_empty_factor(self, fib):
        for k in (0, 3, 17):
            assert is_palindrome_occurrence(fib, k, k)

    def test_rejects_bad_interval(self, fib):
        with pytest.raises(ValueError):
            is_palindrome_occurrence(fib, 5, 4)


def naive_extension(fam, p1, p2):
    """Independent two-pointer oracle on the materialized word."""
    w = fam.prefix(p1 + p2 + 2)
    d = 0
    while p1 - d - 1 >= 0 and w[p1 - d - 1] == w[p2 + d]:
        d += 1
    return p1 - d, p2 + d


class TestMaximalExtension:
    def test_12_13(self, fib):
        occ = maximal_extension(fib, 12, 13)
        assert (occ.ext_left, occ.ext_right) == (11, 14)
        assert not occ.reached_prefix
        assert (occ.central_n, occ.central_j) == (2, 0)
        word = fib.prefix(14)[11:]
        assert word == word[::-1]
        assert word == central_word(fib, 2, 0)

    def test_7_9(self, fib):
        occ = maximal_extension(fib, 7, 9)
        assert (occ.ext_left, occ.ext_right) == (5, 11)
        assert fib.prefix(11)[5:] == central_word(fib, occ.central_n, occ.central_j)

    def test_prefix_palindrome_stops_at_start(self, fib):
        occ = maximal_extension(fib, 0, 1)
        assert occ.reached_prefix and occ.ext_left == 0

    def test_rejects_non_palindrome(self, fib):
        with pytest.raises(NotAPalindrome):
            maximal_extension(fib, 0, 2)

    def test_against_naive_oracle(self):
        for text in ["fib", "(2,3,1,4)"]:
            fam = family(text)
            w = fam.prefix(160)
            for p2 in range(1, 120):
                for p1 in range(p2):
                    f = w[p1:p2]
                    if f != f[::-1]:
                        continue
                    occ = maximal_extension(fam, p1, p2)
                    assert (occ.ext_left, occ.ext_right) == naive_extension(fam, p1, p2)
                    ext = fam.prefix(occ.ext_right)[occ.ext_left :]
                    assert ext == ext[::-1]
                    assert ext == central_word(fam, occ.central_n, occ.central_j)
                    if not occ.reached_prefix:
                        around = fam.prefix(occ.ext_right + 1)
                        assert around[occ.ext_left - 1] != around[occ.ext_right]


class TestClassifyCentral:
    def test_paper_examples(self, fib):
        assert classify_central(fib, b"aba") == (2, 0)
        assert classify_central(fib, b"a") == (1, 0)
        assert classify_central(fib, b"ab") is None
        assert classify_central(fib, b"") == (0, 0)

    def test_alternate_label_for_a_power(self):
        fam = family("(3,2)")
        # a^{d_0} carries labels (1, 0) and (0, d_0); the larger n wins
        assert classify_central(fam, b"aaa") == (1, 0)
        assert central_word(fam, 0, 3) == b"aaa"

    def test_roundtrip_over_grid(self):
        for text in ["fib", "(2,1)", "(2,3,1,4)"]:
            fam = family(text)
            for n in range(0, 5):
                for j in range(0, fam.d(n) + 1):
                    c = central_word(fam, n, j)
                    got = classify_central(fam, c)
                    assert got is not None
                    assert central_word(fam, *got) == c
                    # boundary words resolve to the larger order
                    if j == fam.d(n):
                        assert got == (n + 1, 0)
                    elif j > 0:
                        assert got == (n, j)

    def test_non_central_words(self, fib):
        assert classify_central(fib, b"bb") is None
        assert classify_central(fib, b"abba") is None
        # palindrome of central length but not a prefix of w
        assert classify_central(fib, b"bab") is None


class TestBispecial:
    def test_central_words_are_bispecial(self):
        # left- and right-extendable by both letters inside a long prefix
        for text in ["fib", "(2,1)"]:
            fam = family(text)
            w = fam.prefix(3000)
            for n in range(0, 5):
                for j in range(0, fam.d(n) + 1):
                    c = central_word(fam, n, j)
                    if len(c) > 200:
                        continue
                    lefts, rights = set(), set()
                    start = 0
                    while True:
                        at = w.find(c, start)
                        if at < 0:
                            break
                        if at > 0:
                            lefts.add(w[at - 1])
                        end = at + len(c)
                        if end < len(w):
                            rights.add(w[end])
                        start = at + 1
                    assert lefts == {ord("a"), ord("b")}, (text, n, j)
                    assert rights == {ord("a"), ord("b")}, (text, n, j)


class TestReprPair:
    def test_paper_12_13(self, fib):
        pair = palindrome_repr_pair(fib, 12, 13)
        assert (pair.r1, pair.r2, pair.m) == (R("1201"), R("1210"), 1)

    def test_paper_7_9(self, fib):
        pair = palindrome_repr_pair(fib, 7, 9)
        assert (pair.r1, pair.r2, pair.m) in {
            (R("1010"), R("1012"), 0),
            (R("1010"), R("1101"), 2),
        }

    def test_single_letter_at_origin(self, fib):
        pair = palindrome_repr_pair(fib, 0, 1)
        assert pair.r1 == Representation(())
        assert pair.r2 == R("1")
        assert pair.m == 0

    def test_rejects_empty(self, fib):
        with pytest.raises(NotAPalindrome):
            palindrome_repr_pair(fib, 4, 4)

    def test_invariants_over_horizon(self):
        for text in ["fib", "(2,3,1,4)"]:
            fam = family(text)
            w = fam.prefix(300)
            seen = 0
            for p2 in range(1, 150):
                for p1 in range(p2):
                    f = w[p1:p2]
                    if f != f[::-1]:
                        continue
                    pair = palindrome_repr_pair(fam, p1, p2)
                    assert value(fam, pair.r1) == p1
                    assert value(fam, pair.r2) == p2
                    assert is_valid(fam, pair.r1) and is_valid(fam, pair.r2)
                    assert pair_fits(fam, pair.r1, pair.r2, pair.m)
                    assert z_profiles_agree_off_m(fam, pair)
                    seen += 1
            assert seen > 100

    def test_extension_split_identity(self):
        # the two halves of the maximal extension spell the block products
        # the construction claims, checked by direct concatenation
        fam = family("fib")
        w = fam.prefix(260)
        occurrences = [
            (p1, p2)
            for p2 in range(1, 60)
            for p1 in range(p2)
            if w[p1:p2] == w[p1:p2][::-1]
        ]
        assert {(12, 13), (7, 9), (3, 8)} <= set(occurrences)
        for p1, p2 in occurrences:
            occ = maximal_extension(fam, p1, p2)
            e = occ.ext_left
            d = p1 - e
            m, j = _pipeline_label(fam, occ.ext_right - e)
            l_m = d // fam.q(m)
            low = ostrowski(fam, d - l_m * fam.q(m))
            left = fam.standard(m) * l_m + b"".join(
                fam.standard(i) * low.digit(i) for i in range(m - 1, -1, -1)
            )
            assert left == w[e:p1]
            right = fam.standard(m) * (j - l_m) + b"".join(
                fam.standard(i) * (fam.d(i) - low.digit(i))
                for i in range(m - 1, -1, -1)
            )
            assert right == w[e:p2]

    def test_enumerate_contains_both_paper_pairs(self, fib):
        pairs = {
            (p.r1, p.r2, p.m) for p in enumerate_repr_pairs(fib, 7, 9)
        }
        assert (R("1010"), R("1012"), 0) in pairs
        assert (R("1010"), R("1101"), 2) in pairs

    def test_enumerate_members_satisfy_invariants(self, fib):
        for pair in enumerate_repr_pairs(fib, 12, 13):
            assert value(fib, pair.r1) == 12 and value(fib, pair.r2) == 13
            assert is_valid(fib, pair.r1) and is_valid(fib, pair.r2)
            assert z_profiles_agree_off_m(fib, pair)

    def test_json_schema(self, fib):
        occ = maximal_extension(fib, 12, 13)
        pair = palindrome_repr_pair(fib, 12, 13)
        doc = occurrence_to_json(fib, occ, pair)
        assert doc["p1"] == 12 and doc["p2"] == 13
        assert doc["ext"] == [11, 14]
        assert doc["central"] == {"n": 2, "j": 0}
        assert doc["pair"]["r1"] == {"digits_msf": [1, 2, 0, 1], "value": 12}
        assert doc["pair"]["r2"] == {"digits_msf": [1, 2, 1, 0], "value": 13}
        assert doc["pair"]["m"] == 1

    def test_z_corollary_on_pairs(self, fib):
        # z-profiles of the two ends agree except at one index
        w = fib.prefix(200)
        for p2 in range(1, 100):
            for p1 in range(p2):
                f = w[p1:p2]
                if f != f[::-1]:
                    continue
                pair = palindrome_repr_pair(fib, p1, p2)
                z1, z2 = z_profile(fib, pair.r1), z_profile(fib, pair.r2)
                top = max(len(z1), len(z2))
                diffs = [
                    i
                    for i in range(top)
                    if (z1[i] if i < len(z1) else 0) != (z2[i] if i < len(z2) else 0)
                ]
                assert diffs in ([], [pair.m])
