"""Palindromic length: engines, unboundedness witnesses, and the
counting audit.

The palindromic length of a word is the minimal number of nonempty
palindromes whose concatenation is the word.  Two engines compute it:

* :func:`pal_length_oracle`, a quadratic dynamic program over palindromic
  suffixes with O(1) palindrome queries after Manacher preprocessing,
  kept deliberately simple and independent;
* :func:`pal_length_fast`, the eertree kernel (compiled extension when
  built, pure-Python twin otherwise).

For directive sequences with large enough entries, prefixes whose
representation has Q+1 digits 3Q+1 at positions with d >= 6Q+2 have
palindromic length exceeding Q; :func:`build_witness` constructs such a
prefix length and :func:`verify_witness` checks it by direct computation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceeded, InsufficientDirective, InvalidCuts, InvalidInput
from .numeration import Representation, is_legal, is_valid, ostrowski, value
from .palindromes import palindrome_repr_pair
from .transforms import z_profile
from .words import WordFamily

try:
    from . import _palengine as _default_kernel
except ImportError:  # extension not built; fall back to the pure twin
    from . import _palengine_py as _default_kernel
from . import _palengine_py

ENGINE = _default_kernel.KERNEL

DEFAULT_ORACLE_CAP = 5000


def available_kernels() -> dict[str, object]:
    """Importable kernels by name; 'compiled' is present only when built."""
    kernels = {_palengine_py.KERNEL: _palengine_py}
    kernels[_default_kernel.KERNEL] = _default_kernel
    return kernels


@dataclass(frozen=True)
class FactorizationResult:
    """A minimal palindromic factorization: the count and one cut sequence
    0 = p_0 <= ... <= p_Q = length with every part a nonempty palindrome."""

    length: int
    pal_len: int
    witness_cuts: tuple[int, ...]

    def parts(self, word: bytes) -> list[bytes]:
        return [
            word[self.witness_cuts[k] : self.witness_cuts[k + 1]]
            for k in range(len(self.witness_cuts) - 1)
        ]

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "pal_len": self.pal_len,
            "witness_cuts": list(self.witness_cuts),
        }


def _as_bytes(word) -> bytes:
    if isinstance(word, str):
        return word.encode("ascii")
    return bytes(word)


def _manacher(s: bytes) -> tuple[list[int], list[int]]:
    """Classic linear Manacher: d1[i] odd-radius (including the center),
    d2[i] even-radius (palindromes centered between i-1 and i)."""
    n = len(s)
    d1 = [0] * n
    l, r = 0, -1
    for i in range(n):
        k = 1 if i > r else min(d1[l + r - i], r - i + 1)
        while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
            k += 1
        d1[i] = k
        if i + k - 1 > r:
            l, r = i - k + 1, i + k - 1
    d2 = [0] * n
    l, r = 0, -1
    for i in range(n):
        k = 0 if i > r else min(d2[l + r - i + 1], r - i + 1)
        while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
            k += 1
        d2[i] = k
        if i + k - 1 > r:
            l, r = i - k, i + k - 1
    return d1, d2


def pal_length_oracle(word, cap: int = DEFAULT_ORACLE_CAP) -> FactorizationResult:
    """Exact palindromic length by the quadratic reference DP.

    PL[i] = min over palindromic suffixes w(j..i] of PL[j] + 1.  Among
    optimal factorizations the returned cuts take the longest possible
    last palindrome at every level (leftmost j), for reproducibility.
    """
    s = _as_bytes(word)
    n = len(s)
    if n > cap:
        raise BudgetExceeded(f"oracle input of length {n} exceeds cap {cap}")
    if n == 0:
        return FactorizationResult(0, 0, (0,))
    d1, d2 = _manacher(s)

    def is_pal(i: int, j: int) -> bool:
        # s[i:j] nonempty
        size = j - i
        mid = (i + j) // 2
        if size & 1:
            return d1[mid] >= (size + 1) // 2
        return d2[mid] >= size // 2

    inf = n + 1
    pl = [inf] * (n + 1)
    pl[0] = 0
    prev = [0] * (n + 1)
    for i in range(1, n + 1):
        best, bestj = inf, 0
        for j in range(i):
            if pl[j] + 1 < best and is_pal(j, i):
                best = pl[j] + 1
                bestj = j
        pl[i] = best
        prev[i] = bestj
    cuts = [n]
    p = n
    while p > 0:
        p = prev[p]
        cuts.append(p)
    cuts.reverse()
    return FactorizationResult(n, pl[n], tuple(cuts))


def pal_length_fast(word, kernel: str | None = None) -> FactorizationResult:
    """Exact palindromic length by the eertree kernel (near-linear time).

    ``kernel`` forces 'compiled' or 'python'; by default the compiled
    extension is used when built.
    """
    s = _as_bytes(word)
    if kernel is None:
        mod = _default_kernel
    else:
        try:
            mod = available_kernels()[kernel]
        except KeyError:
            raise ValueError(f"unknown kernel {kernel!r}") from None
    pal_len, cuts = mod.factorize(s)
    return FactorizationResult(len(s), pal_len, tuple(cuts))


@dataclass(frozen=True)
class WitnessSpec:
    """A prefix length N whose palindromic length must exceed Q.

    The representation places digit 3Q+1 at Q+1 positions whose directive
    entries are at least 6Q+2 and zero elsewhere; it is legal, hence
    valid, and each occupied position has z = 3Q+1.
    """

    Q: int
    positions: tuple[int, ...]
    N: int
    representation: Representation

    def to_json(self) -> dict:
        return {
            "Q": self.Q,
            "positions": list(self.positions),
            "N": self.N,
            "digits_msf": list(self.representation.msf()),
        }


def build_witness(family: WordFamily, Q: int, scan_horizon: int = 10**4) -> WitnessSpec:
    """Pick the Q+1 smallest positions with d >= 6Q+2 (minimizing N) and
    assemble the witness representation with digits 3Q+1 there."""
    if Q < 1:
        raise ValueError("Q must be >= 1")
    need = 6 * Q + 2
    directive = family.directive
    positions: list[int] = []
    # qualifying positions repeat with the tail period, so scanning Q+1
    # periods past the head decides the outcome
    head_len = len(directive.head)
    if directive.tail is None:
        limit = head_len
    else:
        limit = head_len + (Q + 1) * len(directive.tail)
    for i in range(min(limit, scan_horizon)):
        if directive.d(i) >= need:
            positions.append(i)
            if len(positions) == Q + 1:
                break
    if len(positions) < Q + 1:
        raise InsufficientDirective(
            f"need {Q + 1} directive entries >= {need}, found {len(positions)}"
        )
    digit = 3 * Q + 1
    rep = Representation(
        tuple(digit if i in set(positions) else 0 for i in range(positions[-1] + 1))
    )
    N = value(family, rep)
    if not is_legal(family, rep):
        raise InsufficientDirective(f"witness digits {digit} are not legal")
    return WitnessSpec(Q=Q, positions=tuple(positions), N=N, representation=rep)


@dataclass(frozen=True)
class WitnessReport:
    spec: WitnessSpec
    pal_len: int
    z_at_positions: tuple[int, ...]
    runtime_ms: float
    factorization: FactorizationResult

    def to_json(self) -> dict:
        return {
            **self.spec.to_json(),
            "pal_len": self.pal_len,
            "z_at_positions": list(self.z_at_positions),
            "runtime_ms": self.runtime_ms,
            "factorization": self.factorization.to_json(),
        }


def verify_witness(family: WordFamily, spec: WitnessSpec, kernel: str | None = None) -> WitnessReport:
    """Compute the palindromic length of w(0..N] and check it exceeds Q.

    A violation would contradict the unboundedness theorem and is raised
    as a hard assertion failure.
    """
    if not is_valid(family, spec.representation):
        raise InvalidInput(f"witness representation {spec.representation} is not valid")
    word = family.prefix(spec.N)
    t0 = time.perf_counter()
    result = pal_length_fast(word, kernel=kernel)
    elapsed = (time.perf_counter() - t0) * 1000.0
    if result.pal_len <= spec.Q:
        raise AssertionError(
            f"witness N = {spec.N} factored into {result.pal_len} <= Q = {spec.Q} "
            "palindromes; this contradicts the unboundedness theorem"
        )
    z = z_profile(family, spec.representation)
    return WitnessReport(
        spec=spec,
        pal_len=result.pal_len,
        z_at_positions=tuple(z[m] for m in spec.positions),
        runtime_ms=elapsed,
        factorization=result,
    )


@dataclass(frozen=True)
class AuditStep:
    index: int
    p_from: int
    p_to: int
    free_position: int
    free_change: int  # |z shift| at the free position, recorded unbounded
    drift: int  # max |z difference| between this step's end and the next start


@dataclass(frozen=True)
class AuditReport:
    N: int
    cuts: tuple[int, ...]
    steps: tuple[AuditStep, ...]
    free_positions: tuple[int, ...]
    bound: int  # 3 * number of parts, valid off the free positions
    reference: Representation
    contradictions: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return not self.contradictions

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "cuts": list(self.cuts),
            "steps": [
                {
                    "index": s.index,
                    "from": s.p_from,
                    "to": s.p_to,
                    "free_position": s.free_position,
                    "free_change": s.free_change,
                    "drift": s.drift,
                }
                for s in self.steps
            ],
            "free_positions": list(self.free_positions),
            "bound": self.bound,
            "reference_digits_msf": list(self.reference.msf()),
            "contradictions": list(self.contradictions),
        }


def _z_at(z: tuple[int, ...], i: int) -> int:
    return z[i] if i < len(z) else 0


def counting_audit(
    family: WordFamily,
    N: int,
    cuts: list[int] | tuple[int, ...],
    reference: Representation | None = None,
) -> AuditReport:
    """Replay the z-distance bookkeeping over a palindromic factorization.

    For each part, the representation pair of its ends changes the
    z-profile freely at one position only; between consecutive parts (two
    representations of the same number) every z moves by at most 3.  After
    K parts a representation of N can therefore show z above 3K only at
    the K free positions.  The report lists the per-step ledger and every
    position of ``reference`` (default: the Ostrowski representation of N)
    that exceeds the replayed bound; such contradictions prove that no
    factorization with these many parts exists.
    """
    cuts = tuple(cuts)
    if not cuts or cuts[0] != 0 or cuts[-1] != N or list(cuts) != sorted(cuts):
        raise InvalidCuts(f"cuts must climb from 0 to {N}")
    word = family.prefix(N)
    for k in range(len(cuts) - 1):
        part = word[cuts[k] : cuts[k + 1]]
        if not part or part != part[::-1]:
            raise InvalidCuts(
                f"part w({cuts[k]}..{cuts[k + 1]}] is not a nonempty palindrome"
            )
    if reference is None:
        reference = ostrowski(family, N)
    elif value(family, reference) != N:
        raise InvalidCuts(f"reference representation denotes {value(family, reference)}, not {N}")

    steps: list[AuditStep] = []
    free_positions: list[int] = []
    prev_end_z: tuple[int, ...] = ()  # z of the zero representation of cuts[0] = 0
    for k in range(len(cuts) - 1):
        pair = palindrome_repr_pair(family, cuts[k], cuts[k + 1])
        z1 = z_profile(family, pair.r1)
        z2 = z_profile(family, pair.r2)
        top = max(len(prev_end_z), len(z1))
        drift = max(
            (abs(_z_at(prev_end_z, i) - _z_at(z1, i)) for i in range(top)),
            default=0,
        )
        free_change = abs(_z_at(z1, pair.m) - _z_at(z2, pair.m))
        steps.append(
            AuditStep(
                index=k,
                p_from=cuts[k],
                p_to=cuts[k + 1],
                free_position=pair.m,
                free_change=free_change,
                drift=drift,
            )
        )
        free_positions.append(pair.m)
        prev_end_z = z2

    K = len(cuts) - 1
    bound = 3 * K
    zr = z_profile(family, reference)
    free = set(free_positions)
    contradictions = tuple(
        i for i, zi in enumerate(zr) if zi > bound and i not in free
    )
    return AuditReport(
        N=N,
        cuts=cuts,
        steps=tuple(steps),
        free_positions=tuple(free_positions),
        bound=bound,
        reference=reference,
        contradictions=contradictions,
    )
