"""Palindrome occurrences in the characteristic word and their
representation pairs.

Every occurrence w(p1..p2] of a palindrome extends symmetrically to a
maximal palindrome, which is always a central word c_{n,j}.  From that
extension one constructs valid representations r1 of p1 and r2 of p2 that
agree above a distinguished position m, complement each other to d_i
below m, and have equal z-profiles off m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionFailed, NotAPalindrome
from .numeration import Representation, is_valid, ostrowski, value
from .transforms import z_profile
from .words import WordFamily, central_word, decompose_prefix_at_occurrence


@dataclass(frozen=True)
class PalindromeOccurrence:
    """An occurrence w(p1..p2] with its maximal-extension metadata.

    The extension w(ext_left..ext_right] is the maximal palindrome around
    the occurrence; it either reaches the start of w or is blocked by a
    mismatch, and it always equals the central word c_{central_n, central_j}.
    """

    p1: int
    p2: int
    ext_left: int
    ext_right: int
    reached_prefix: bool
    central_n: int
    central_j: int

    def to_json(self) -> dict:
        return {
            "p1": self.p1,
            "p2": self.p2,
            "ext": [self.ext_left, self.ext_right],
            "central": {"n": self.central_n, "j": self.central_j},
        }


@dataclass(frozen=True)
class ReprPair:
    """Valid representations of the two ends of a palindrome occurrence.

    Digits agree above m; below m they complement each other to d_i; the
    z-profiles agree everywhere except possibly at m.
    """

    r1: Representation
    r2: Representation
    m: int


def is_palindrome_occurrence(family: WordFamily, p1: int, p2: int) -> bool:
    """True iff w(p1..p2] reads the same reversed (empty factors count)."""
    if p1 < 0 or p2 < p1:
        raise ValueError("need 0 <= p1 <= p2")
    factor = family.prefix(p2)[p1:]
    return factor == factor[::-1]


def maximal_extension(family: WordFamily, p1: int, p2: int) -> PalindromeOccurrence:
    """Extend w(p1..p2] symmetrically as far as it stays a palindrome.

    Stops after p1 steps at the word start, or at the first mismatch
    w[p1-d] != w[p2+d+1]; the result is classified as a central word.
    """
    if not is_palindrome_occurrence(family, p1, p2):
        raise NotAPalindrome(f"w({p1}..{p2}] is not a palindrome")
    w = family.prefix(p1 + p2)
    d = 0
    while d < p1 and w[p1 - d - 1] == w[p2 + d]:
        d += 1
    left, right = p1 - d, p2 + d
    label = classify_central(family, w[left:right])
    if label is None:
        raise ConstructionFailed(
            f"maximal extension w({left}..{right}] is not a central word"
        )
    return PalindromeOccurrence(
        p1=p1,
        p2=p2,
        ext_left=left,
        ext_right=right,
        reached_prefix=(left == 0),
        central_n=label[0],
        central_j=label[1],
    )


def _central_labels(family: WordFamily, length: int) -> list[tuple[int, int]]:
    """All (n, j) with 0 <= j <= d_n and |c_{n,j}| = length, ascending n.

    |c_{n,j}| = (j+1) q_n + q_{n-1} - 2, so the length pins down at most
    two labels: boundary words satisfy c_{n, d_n} = c_{n+1, 0}.
    """
    labels = []
    n = 0
    while True:
        base = family.q(n) + family.q(n - 1) - 2  # |c_{n,0}|
        if base > length:
            break
        rem = length - base
        j, off = divmod(rem, family.q(n))
        if off == 0 and j <= family.d(n):
            labels.append((n, j))
        n += 1
    return labels


def classify_central(family: WordFamily, word: bytes) -> tuple[int, int] | None:
    """The (n, j) with word = c_{n,j} and 0 <= j <= d_n, or None.

    Candidate labels are pinned down by length arithmetic and confirmed by
    comparison.  Boundary words carry two labels (c_{n,d_n} = c_{n+1,0});
    the one with larger n is returned.
    """
    for n, j in reversed(_central_labels(family, len(word))):
        if central_word(family, n, j) == word:
            return (n, j)
    return None


def _pipeline_label(family: WordFamily, length: int) -> tuple[int, int]:
    """The unique label (m, j) with j >= 1 for a nonempty central word of
    the given length.  This is the form whose word starts with s_m, as the
    representation-pair construction requires; in particular a^{d_0} is
    taken as c_{0, d_0} rather than c_{1, 0}."""
    for n, j in _central_labels(family, length):
        if j >= 1:
            return (n, j)
    raise ConstructionFailed(f"no central label with j >= 1 for length {length}")


def palindrome_repr_pair(family: WordFamily, p1: int, p2: int) -> ReprPair:
    """Construct the representation pair for a nonempty palindrome w(p1..p2].

    Pipeline: take the maximal extension c_{m,j} starting at e = p1 - d;
    decompose w(0..e] as s_n^{k_n} ... s_m^{k_m}; split the extension
    distance d = l_m q_m + ... + l_0 q_0 with l_m = d div q_m and the rest
    the Ostrowski digits of the remainder.  Then

        r1 = (k_n, ..., k_{m+1}, k_m + l_m,     l_{m-1}, ..., l_0)
        r2 = (k_n, ..., k_{m+1}, k_m + j - l_m, d_{m-1} - l_{m-1}, ..., d_0 - l_0)

    are valid representations of p1 and p2.
    """
    if p1 == p2:
        raise NotAPalindrome("empty palindromes have no representation pair")
    occ = maximal_extension(family, p1, p2)
    e = occ.ext_left
    d = p1 - e
    m, j = _pipeline_label(family, occ.ext_right - e)

    ks_msf = decompose_prefix_at_occurrence(family, e, m)
    ks = list(reversed(ks_msf))  # ks[0] = k_m

    l_m = d // family.q(m)
    if l_m > j:
        raise ConstructionFailed(f"extension split l_{m} = {l_m} exceeds j = {j}")
    low = ostrowski(family, d - l_m * family.q(m))
    if low.width > m:
        raise ConstructionFailed("extension remainder is not shorter than s_m")

    x = [low.digit(i) for i in range(m)]
    x.append(ks[0] + l_m)
    x.extend(ks[1:])
    r1 = Representation(tuple(x))

    y = [family.d(i) - low.digit(i) for i in range(m)]
    y.append(ks[0] + (j - l_m))
    y.extend(ks[1:])
    r2 = Representation(tuple(y))

    if value(family, r1) != p1 or value(family, r2) != p2:
        raise ConstructionFailed(f"pair for w({p1}..{p2}] has wrong values")
    if not (is_valid(family, r1) and is_valid(family, r2)):
        raise ConstructionFailed(f"pair for w({p1}..{p2}] is not valid")
    return ReprPair(r1, r2, m)


def pair_fits(
    family: WordFamily, r1: Representation, r2: Representation, m: int
) -> bool:
    """Check the shape constraints of a representation pair at position m:
    digits equal above m, r1 within d_i below m and r2 complementary there."""
    top = max(r1.width, r2.width)
    if any(r1.digit(i) != r2.digit(i) for i in range(m + 1, top)):
        return False
    for i in range(m):
        x = r1.digit(i)
        if x > family.d(i) or r2.digit(i) != family.d(i) - x:
            return False
    return True


def enumerate_repr_pairs(
    family: WordFamily, p1: int, p2: int
) -> list[ReprPair]:
    """All pairs (r1, r2, m) of valid representations of p1 and p2 fitting
    the pair shape.  Exhaustive over the valid representations of both
    ends; intended for tests and small inputs."""
    from .numeration import enumerate_valid

    if not is_palindrome_occurrence(family, p1, p2):
        raise NotAPalindrome(f"w({p1}..{p2}] is not a palindrome")
    reps1 = sorted(enumerate_valid(family, p1), key=lambda r: r.digits)
    reps2 = sorted(enumerate_valid(family, p2), key=lambda r: r.digits)
    pairs = []
    for r1 in reps1:
        for r2 in reps2:
            top = max(r1.width, r2.width)
            for m in range(top + 1):
                if pair_fits(family, r1, r2, m):
                    pairs.append(ReprPair(r1, r2, m))
    return pairs


def occurrence_to_json(family: WordFamily, occ: PalindromeOccurrence, pair: ReprPair | None) -> dict:
    from .numeration import to_json as repr_json

    out = occ.to_json()
    if pair is not None:
        out["pair"] = {
            "r1": repr_json(family, pair.r1),
            "r2": repr_json(family, pair.r2),
            "m": pair.m,
        }
    return out


def z_profiles_agree_off_m(
    family: WordFamily, pair: ReprPair
) -> bool:
    """True iff the z-profiles of the pair agree at every position != m."""
    z1 = z_profile(family, pair.r1)
    z2 = z_profile(family, pair.r2)
    top = max(len(z1), len(z2))
    pad = lambda z, i: z[i] if i < len(z) else 0
    return all(
        pad(z1, i) == pad(z2, i) for i in range(top) if i != pair.m
    )
