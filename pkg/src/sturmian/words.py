"""Directive sequences, standard words and the characteristic word.

A directive sequence (d_0, d_1, ...) with d_i >= 1 drives the recurrence

    s_{-1} = b,  s_0 = a,  s_{n+1} = s_n^{d_n} s_{n-1}

whose limit is the characteristic Sturmian word w.  Everything else in the
package is built against a :class:`WordFamily`, which materializes the
standard words, their lengths q_n and a prefix of w on demand, under a
configurable symbol budget.

Words are immutable byte strings over the two-letter alphabet ``b"ab"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BudgetExceeded,
    ConstructionFailed,
    DirectiveExhausted,
    NotABoundary,
    NotAnOccurrence,
    ParseError,
)

A = ord("a")
B = ord("b")

DEFAULT_BUDGET = 10**8

_DIRECTIVE_RE = re.compile(
    r"^\s*(?P<head>\d+(\s*,\s*\d+)*)?\s*(,?\s*\(\s*(?P<tail>\d+(\s*,\s*\d+)*)\s*\))?\s*$"
)


@dataclass(frozen=True)
class DirectiveSequence:
    """Eventually periodic description of (d_i): a finite head followed by an
    optional tail repeated forever.

    Without a tail the sequence is only defined up to ``len(head)``;
    reading past it raises :class:`DirectiveExhausted`.
    """

    head: tuple[int, ...]
    tail: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.tail is not None and not self.tail:
            raise ValueError("periodic tail must be non-empty")
        if not self.head and self.tail is None:
            raise ValueError("directive sequence must have at least one entry")
        for x in self.head + (self.tail or ()):
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"directive entries must be integers >= 1, got {x!r}")

    def d(self, i: int) -> int:
        """Entry d_i, for any i >= 0 when a periodic tail is present."""
        if i < 0:
            raise IndexError("directive index must be >= 0")
        if i < len(self.head):
            return self.head[i]
        if self.tail is None:
            raise DirectiveExhausted(
                f"finite directive sequence has no entry at index {i}"
            )
        return self.tail[(i - len(self.head)) % len(self.tail)]

    def shift(self, m: int) -> "DirectiveSequence":
        """The sequence (d_m, d_{m+1}, ...)."""
        if m <= len(self.head):
            return DirectiveSequence(self.head[m:], self.tail)
        if self.tail is None:
            raise DirectiveExhausted(
                f"cannot shift finite directive sequence by {m}"
            )
        r = (m - len(self.head)) % len(self.tail)
        return DirectiveSequence((), self.tail[r:] + self.tail[:r])

    @classmethod
    def parse(cls, text: str) -> "DirectiveSequence":
        """Parse ``"d0,d1,...,dk"`` or ``"d0,...,dj,(p0,...,pm)"``.

        The parenthesized tail repeats forever; ``"fib"`` is an alias
        for ``"(1)"``.
        """
        if text.strip().lower() == "fib":
            return cls((), (1,))
        m = _DIRECTIVE_RE.match(text)
        if m is None or (m.group("head") is None and m.group("tail") is None):
            raise ParseError(f"cannot parse directive sequence {text!r}")
        head = tuple(int(t) for t in m.group("head").split(",")) if m.group("head") else ()
        tail = tuple(int(t) for t in m.group("tail").split(",")) if m.group("tail") else None
        try:
            return cls(head, tail)
        except ValueError as e:
            raise ParseError(str(e)) from None

    def __str__(self) -> str:
        head = ",".join(str(x) for x in self.head)
        if self.tail is None:
            return head
        tail = "(" + ",".join(str(x) for x in self.tail) + ")"
        return f"{head},{tail}" if head else tail


class BlockTag(Enum):
    """Block kind in an m-partition: Big is s_m, Small is s_{m-1}."""

    BIG = "big"
    SMALL = "small"


@dataclass(frozen=True)
class BlockPartition:
    """The m-partition of a prefix of w into blocks s_m and s_{m-1}."""

    order: int
    blocks: tuple[BlockTag, ...]
    covered_length: int


class WordFamily:
    """Standard words, lengths and a characteristic-word prefix for one
    directive sequence.

    All materialized state only grows: ``standard(n)`` and ``prefix(L)``
    extend the family as needed, rejecting requests past ``budget`` total
    symbols.  Concurrent readers are safe; growth requires exclusive access.
    """

    def __init__(self, directive: DirectiveSequence, budget: int = DEFAULT_BUDGET):
        if budget <= 0:
            raise ValueError("budget must be positive")
        self.directive = directive
        self.budget = budget
        # index n+1 holds s_n, so s_{-1} sits at 0
        self._standards: list[bytes] = [b"b", b"a"]
        self._lengths: list[int] = [1, 1]
        self._prefix: bytes = b""
        self._shifted: dict[int, WordFamily] = {}

    @property
    def depth(self) -> int:
        """Largest n with s_n materialized."""
        return len(self._standards) - 2

    def d(self, i: int) -> int:
        return self.directive.d(i)

    def q(self, n: int) -> int:
        """Length q_n = |s_n|, for n >= -1.

        Lengths are plain integer arithmetic and are never budgeted; only
        materializing the words themselves is.
        """
        if n < -1:
            raise IndexError("standard words start at order -1")
        while len(self._lengths) - 2 < n:
            k = len(self._lengths) - 2
            self._lengths.append(self.d(k) * self._lengths[k + 1] + self._lengths[k])
        return self._lengths[n + 1]

    def standard(self, n: int) -> bytes:
        """The standard word s_n, for n >= -1."""
        self.ensure_depth(n)
        return self._standards[n + 1]

    def ensure_depth(self, n: int) -> None:
        if n < -1:
            raise IndexError("standard words start at order -1")
        self.q(n)
        while self.depth < n:
            k = self.depth
            nq = self._lengths[k + 2]
            if nq > self.budget:
                raise BudgetExceeded(
                    f"q_{k + 1} = {nq} exceeds the symbol budget {self.budget}"
                )
            self._standards.append(
                self._standards[k + 1] * self.d(k) + self._standards[k]
            )

    def prefix(self, length: int) -> bytes:
        """The first ``length`` symbols of the characteristic word w."""
        if length < 0:
            raise ValueError("prefix length must be >= 0")
        if length > self.budget:
            raise BudgetExceeded(
                f"prefix length {length} exceeds the symbol budget {self.budget}"
            )
        if length <= len(self._prefix):
            return self._prefix[:length]
        # Grow standard words until one covers the request.  If the next
        # standard word would be wildly longer than needed (huge d_n), tile
        # copies of the current one instead: w(0..L] is a prefix of
        # s_n^{d_n} s_{n-1}, hence of s_n^{d_n + 1}.
        while self.q(self.depth) < length:
            k = self.depth
            nq = self.q(k + 1)
            if nq <= min(self.budget, 4 * length):
                self.ensure_depth(k + 1)
                continue
            if k == 0:
                # length < q_1 = d_0 + 1, so the prefix is all a's
                self._prefix = b"a" * length
                return self._prefix
            reps = -(-length // self.q(k))
            self._prefix = (self.standard(k) * reps)[:length]
            return self._prefix
        if len(self._standards[-1]) > len(self._prefix):
            self._prefix = self._standards[-1]
        return self._prefix[:length]

    def shifted(self, m: int) -> "WordFamily":
        """Family of the shifted directive (d_m, d_{m+1}, ...); its
        characteristic word spells out the m-partition of w."""
        if m == 0:
            return self
        fam = self._shifted.get(m)
        if fam is None:
            fam = WordFamily(self.directive.shift(m), budget=self.budget)
            self._shifted[m] = fam
        return fam


def build_family(
    directive: DirectiveSequence, depth: int, budget: int = DEFAULT_BUDGET
) -> WordFamily:
    """Materialize standard words s_{-1}..s_depth for a directive sequence."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    family = WordFamily(directive, budget=budget)
    family.ensure_depth(depth)
    return family


def characteristic_prefix(family: WordFamily, length: int) -> bytes:
    """w(0..length], extending the family's buffer as needed."""
    return family.prefix(length)


def central_word(family: WordFamily, n: int, j: int) -> bytes:
    """The central word c_{n,j}: s_n^{j+1} s_{n-1} with the last two symbols
    erased.

    Central words are palindromes; for j <= d_n they are exactly the
    palindromic (bispecial) prefixes of w.
    """
    if n < 0 or j < 0:
        raise ValueError("central word indices must be >= 0")
    size = (j + 1) * family.q(n) + family.q(n - 1)
    if size > family.budget:
        raise BudgetExceeded(f"central word of length {size - 2} exceeds budget")
    return (family.standard(n) * (j + 1) + family.standard(n - 1))[:-2]


def n_partition(family: WordFamily, m: int, prefix_length: int) -> BlockPartition:
    """Partition w(0..prefix_length] into full blocks s_m / s_{m-1}.

    The block sequence is read off the characteristic word of the shifted
    directive (d_m, d_{m+1}, ...) under a -> s_m, b -> s_{m-1}.  Raises
    :class:`NotABoundary` when the requested length cuts a block.
    """
    if m < 0:
        raise ValueError("partition order must be >= 0")
    if prefix_length < 0:
        raise ValueError("prefix length must be >= 0")
    if prefix_length == 0:
        return BlockPartition(m, (), 0)
    big, small = family.q(m), family.q(m - 1)
    if m == 0:
        # blocks are single letters; the word itself is the guide
        guide_prefix = family.prefix(prefix_length)
    else:
        guide = family.shifted(m)
        # enough guide symbols to cover the prefix even with all-small blocks
        guide_prefix = guide.prefix(prefix_length // small + 1)
    blocks: list[BlockTag] = []
    covered = 0
    for sym in guide_prefix:
        if sym == A:
            blocks.append(BlockTag.BIG)
            covered += big
        else:
            blocks.append(BlockTag.SMALL)
            covered += small
        if covered >= prefix_length:
            break
    if covered != prefix_length:
        raise NotABoundary(
            f"{prefix_length} is not a block boundary of the {m}-partition"
        )
    return BlockPartition(m, tuple(blocks), covered)


def decompose_prefix_at_occurrence(
    family: WordFamily, r: int, m: int
) -> tuple[int, ...]:
    """Exponents (k_n, ..., k_m) with w(0..r] = s_n^{k_n} ... s_m^{k_m},
    given that an occurrence of s_m starts right after position r.

    Iterative re-partitioning: peel the trailing s_m blocks of the
    m-partition of w(0..r], then fold to the (m+1)-partition of the
    remainder, and repeat until the remainder is empty.
    """
    if r < 0 or m < 0:
        raise ValueError("arguments must be >= 0")
    qm = family.q(m)
    if family.prefix(r + qm)[r:] != family.standard(m):
        raise NotAnOccurrence(f"s_{m} does not occur at w({r}..{r + qm}]")
    exponents: list[int] = []  # k_m first
    cur, level = r, m
    while cur > 0:
        try:
            part = n_partition(family, level, cur)
        except NotABoundary as e:
            raise ConstructionFailed(
                f"re-partitioning broke at level {level}: {e}"
            ) from e
        k = 0
        for tag in reversed(part.blocks):
            if tag is not BlockTag.BIG:
                break
            k += 1
        exponents.append(k)
        cur -= k * family.q(level)
        level += 1
    if not exponents:
        exponents.append(0)
    return tuple(reversed(exponents))
