"""Integer representations over the lengths q_i of standard words.

A digit vector (k_i) denotes N = sum k_i q_i.  Three nested notions:

* Ostrowski: 0 <= k_i <= d_i and k_i = d_i forces k_{i-1} = 0 (unique);
* legal: 0 <= k_i <= d_i only;
* valid: the block product s_n^{k_n} ... s_0^{k_0} equals w(0..N].

Digits are stored least-significant-position-first and rendered
most-significant-first; equality ignores leading (high-position) zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import BudgetExceeded, ParseError
from .words import WordFamily

DEFAULT_CANDIDATE_CAP = 10**7


@dataclass(frozen=True)
class Representation:
    """A digit vector against a word family; carries no validity claim."""

    digits: tuple[int, ...] = field(default=())  # digits[i] multiplies q_i

    def __post_init__(self):
        for k in self.digits:
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"digits must be integers >= 0, got {k!r}")
        # normalize away leading (high-position) zeros
        ds = self.digits
        top = len(ds)
        while top > 0 and ds[top - 1] == 0:
            top -= 1
        if top != len(ds):
            object.__setattr__(self, "digits", ds[:top])

    @classmethod
    def from_msf(cls, digits: Iterable[int]) -> "Representation":
        """Build from most-significant-first digits, e.g. (1,3,0,0)."""
        return cls(tuple(reversed(tuple(digits))))

    @classmethod
    def parse(cls, text: str) -> "Representation":
        """Parse the text form: single-token decimal digits (``100001``)
        or dot-separated for digits above 9 (``7.0.7``)."""
        text = text.strip()
        if not text:
            raise ParseError("empty representation text")
        try:
            if "." in text:
                msf = [int(t) for t in text.split(".")]
            else:
                msf = [int(ch) for ch in text]
        except ValueError:
            raise ParseError(f"cannot parse representation {text!r}") from None
        if any(k < 0 for k in msf):
            raise ParseError(f"cannot parse representation {text!r}")
        return cls.from_msf(msf)

    @property
    def width(self) -> int:
        """Number of stored positions (top position + 1)."""
        return len(self.digits)

    def digit(self, i: int) -> int:
        """Digit at position i (0 beyond the stored width)."""
        return self.digits[i] if 0 <= i < len(self.digits) else 0

    def msf(self) -> tuple[int, ...]:
        return tuple(reversed(self.digits))

    def text(self) -> str:
        if not self.digits:
            return "0"
        msf = self.msf()
        if all(k <= 9 for k in msf):
            return "".join(str(k) for k in msf)
        return ".".join(str(k) for k in msf)

    def __str__(self) -> str:
        return self.text()

    def replace(self, i: int, k: int) -> "Representation":
        """Copy with digit i set to k (extending the width if needed)."""
        ds = list(self.digits)
        if i >= len(ds):
            ds.extend([0] * (i + 1 - len(ds)))
        ds[i] = k
        return Representation(tuple(ds))


def value(family: WordFamily, r: Representation) -> int:
    """N = sum digits[i] * q_i."""
    return sum(k * family.q(i) for i, k in enumerate(r.digits) if k)


def to_json(family: WordFamily, r: Representation) -> dict:
    return {"digits_msf": list(r.msf()), "value": value(family, r)}


def ostrowski(family: WordFamily, N: int) -> Representation:
    """Greedy Ostrowski representation of N (unique up to leading zeros)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if N == 0:
        return Representation(())
    top = 0
    while family.q(top + 1) <= N:
        top += 1
    digits = [0] * (top + 1)
    rem = N
    for i in range(top, -1, -1):
        digits[i], rem = divmod(rem, family.q(i))
    assert rem == 0
    return Representation(tuple(digits))


def is_legal(family: WordFamily, r: Representation) -> bool:
    """True iff every digit satisfies 0 <= k_i <= d_i."""
    return all(k <= family.d(i) for i, k in enumerate(r.digits))


def is_ostrowski(family: WordFamily, r: Representation) -> bool:
    """True iff legal and k_i = d_i forces k_{i-1} = 0 (i >= 1)."""
    if not is_legal(family, r):
        return False
    return all(
        not (r.digit(i) == family.d(i) and r.digit(i - 1) > 0)
        for i in range(1, r.width)
    )


def is_valid(family: WordFamily, r: Representation) -> bool:
    """True iff s_n^{k_n} ... s_0^{k_0} equals w(0..N], streaming the
    comparison block by block with early exit."""
    N = value(family, r)
    w = family.prefix(N)
    pos = 0
    for i in range(r.width - 1, -1, -1):
        k = r.digits[i]
        if not k:
            continue
        block = family.standard(i)
        q = len(block)
        for _ in range(k):
            if w[pos : pos + q] != block:
                return False
            pos += q
    return pos == N


def enumerate_valid(
    family: WordFamily,
    N: int,
    digit_bound_slack: int = 0,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
) -> set[Representation]:
    """All valid representations of N, by bounded exhaustive search.

    Digits at position i range over [0, B_i] with B_0 = d_0 + 1,
    B_1 = d_1 + 1 and B_i = d_i + 2 for i >= 2 (no valid representation
    exceeds these bounds); ``digit_bound_slack`` widens every bound, which
    must not change the result.  The search walks positions top-down,
    pruning branches whose partial block product already fails to match w
    and whose remaining positions cannot absorb the remaining value.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if N == 0:
        return {Representation(())}
    w = family.prefix(N)
    top = 0
    while family.q(top + 1) <= N:
        top += 1
    bounds = []
    for i in range(top + 1):
        extra = 1 if i <= 1 else 2
        bounds.append(family.d(i) + extra + digit_bound_slack)
    qs = [family.q(i) for i in range(top + 1)]
    # capacity[i]: max value positions 0..i can contribute
    capacity = [0] * (top + 1)
    acc = 0
    for i in range(top + 1):
        acc += bounds[i] * qs[i]
        capacity[i] = acc
    standards = [family.standard(i) for i in range(top + 1)]

    out: set[Representation] = set()
    digits = [0] * (top + 1)
    visited = 0

    def descend(i: int, rem: int, pos: int) -> None:
        nonlocal visited
        visited += 1
        if visited > candidate_cap:
            raise BudgetExceeded(
                f"enumeration visited more than {candidate_cap} candidates"
            )
        if i < 0:
            if rem == 0:
                out.add(Representation(tuple(digits)))
            return
        if rem > capacity[i]:
            return
        block, q = standards[i], qs[i]
        k_max = min(bounds[i], rem // q)
        p = pos
        for k in range(k_max + 1):
            if k:
                # one more copy of s_i must match w at the current offset
                if w[p : p + q] != block:
                    break
                p += q
            digits[i] = k
            descend(i - 1, rem - k * q, p)
        digits[i] = 0

    descend(top, N, 0)
    return out
