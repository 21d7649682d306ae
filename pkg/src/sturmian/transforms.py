"""Local digit rewrites on representations and their closure.

Unbending at position m >= 1 rewrites (k_{m+1}, d_m, k_{m-1}) to
(k_{m+1}+1, 0, k_{m-1}-1); bending is its inverse.  Both preserve the
value and, on valid representations, validity.  ``normalize`` drives any
valid representation to the Ostrowski one with a recorded trace;
``reachable_set`` computes the full rewrite closure, which coincides with
the set of all valid representations of the value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BudgetExceeded,
    ConstructionFailed,
    InternalNontermination,
    InvalidInput,
    NotApplicable,
)
from .numeration import Representation, is_valid, ostrowski, value
from .words import WordFamily

DEFAULT_FRONTIER_CAP = 10**6


class StepKind(Enum):
    UNBEND = "rho"
    BEND = "beta"


@dataclass(frozen=True)
class TransformStep:
    kind: StepKind
    position: int  # m >= 1; both rewrites are defined only there

    def __post_init__(self):
        if self.position < 1:
            raise ValueError("transform position must be >= 1")

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "m": self.position}


@dataclass(frozen=True)
class TransformTrace:
    """A replayable chain of rewrite steps; the value is constant along it."""

    start: Representation
    steps: tuple[TransformStep, ...]
    end: Representation

    def __len__(self) -> int:
        return len(self.steps)


def apply_step(family: WordFamily, r: Representation, step: TransformStep) -> Representation:
    if step.kind is StepKind.UNBEND:
        return unbend(family, r, step.position)
    return bend(family, r, step.position)


def unbend(family: WordFamily, r: Representation, m: int) -> Representation:
    """(..., k_{m+1}, d_m, k_{m-1}, ...) -> (..., k_{m+1}+1, 0, k_{m-1}-1, ...).

    Requires k_m = d_m and k_{m-1} > 0; at the top position a new leading
    digit 1 appears.  Raises :class:`NotApplicable` otherwise.
    """
    if m < 1:
        raise NotApplicable("unbending is defined only for positions m >= 1")
    if r.digit(m) != family.d(m):
        raise NotApplicable(f"digit {m} is {r.digit(m)}, not d_{m} = {family.d(m)}")
    if r.digit(m - 1) <= 0:
        raise NotApplicable(f"digit {m - 1} must be positive")
    ds = list(r.digits) + [0] * (m + 2 - r.width)
    ds[m + 1] += 1
    ds[m] = 0
    ds[m - 1] -= 1
    return Representation(tuple(ds))


def bend(family: WordFamily, r: Representation, m: int) -> Representation:
    """(..., k_{m+1}, 0, k_{m-1}, ...) -> (..., k_{m+1}-1, d_m, k_{m-1}+1, ...).

    Requires k_{m+1} > 0 and k_m = 0; inverse of :func:`unbend` at m.
    """
    if m < 1:
        raise NotApplicable("bending is defined only for positions m >= 1")
    if r.digit(m + 1) <= 0:
        raise NotApplicable(f"digit {m + 1} must be positive")
    if r.digit(m) != 0:
        raise NotApplicable(f"digit {m} must be 0")
    ds = list(r.digits) + [0] * (m + 2 - r.width)
    ds[m + 1] -= 1
    ds[m] = family.d(m)
    ds[m - 1] += 1
    return Representation(tuple(ds))


def _greatest_offence(family: WordFamily, r: Representation) -> int | None:
    """Greatest m with k_m = d_m and k_{m-1} > 0, or k_m > d_m."""
    for m in range(r.width - 1, -1, -1):
        k, d = r.digits[m], family.d(m)
        if k > d:
            return m
        if k == d and m >= 1 and r.digit(m - 1) > 0:
            return m
    return None


def normalize(family: WordFamily, r: Representation) -> TransformTrace:
    """Drive a valid representation to the Ostrowski one.

    Repeatedly locates the greatest offending position m and applies
    rho_m, or beta_{m-1} followed by rho_m when k_m = d_m + 1 (which on a
    valid representation entails m >= 2 and k_{m-1} = 0).  Termination is
    guaranteed: the offending position, then the digit sum, strictly
    decrease.  The step cap only converts an implementation bug into a
    loud failure.
    """
    if not is_valid(family, r):
        raise InvalidInput(f"{r} is not a valid representation")
    cap = 10 * (sum(r.digits) + r.width) ** 2
    steps: list[TransformStep] = []
    cur = r
    while True:
        m = _greatest_offence(family, cur)
        if m is None:
            break
        if len(steps) >= cap:
            raise InternalNontermination(
                f"normalization exceeded {cap} steps from {r}"
            )
        k, d = cur.digit(m), family.d(m)
        if k == d and m >= 1 and cur.digit(m - 1) > 0:
            cur = unbend(family, cur, m)
            steps.append(TransformStep(StepKind.UNBEND, m))
        elif k == d + 1 and m >= 2 and cur.digit(m - 1) == 0:
            cur = bend(family, cur, m - 1)
            steps.append(TransformStep(StepKind.BEND, m - 1))
            cur = unbend(family, cur, m)
            steps.append(TransformStep(StepKind.UNBEND, m))
        else:
            raise ConstructionFailed(
                f"offending digit k_{m} = {k} with d_{m} = {d} in {cur}; "
                "input cannot have been valid"
            )
    expected = ostrowski(family, value(family, r))
    if cur != expected:
        raise ConstructionFailed(f"normalization of {r} ended at {cur}, not {expected}")
    return TransformTrace(r, tuple(steps), cur)


def neighbours(family: WordFamily, r: Representation) -> list[tuple[TransformStep, Representation]]:
    """All single-step rewrites applicable to r."""
    out = []
    for m in range(1, r.width + 1):
        if r.digit(m) == family.d(m) and r.digit(m - 1) > 0:
            out.append(
                (TransformStep(StepKind.UNBEND, m), unbend(family, r, m))
            )
        if r.digit(m + 1) > 0 and r.digit(m) == 0:
            out.append((TransformStep(StepKind.BEND, m), bend(family, r, m)))
    return out


def reachable_set(
    family: WordFamily,
    r: Representation,
    frontier_cap: int = DEFAULT_FRONTIER_CAP,
) -> set[Representation]:
    """BFS closure of r under all applicable bend/unbend steps.

    Starting from a valid representation this is exactly the set of all
    valid representations of the same number.
    """
    if not is_valid(family, r):
        raise InvalidInput(f"{r} is not a valid representation")
    seen = {r}
    frontier = [r]
    while frontier:
        nxt = []
        for cur in frontier:
            for _, nb in neighbours(family, cur):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        if len(seen) > frontier_cap:
            raise BudgetExceeded(
                f"rewrite closure exceeded {frontier_cap} representations"
            )
        frontier = nxt
    return seen


def trace_between(
    family: WordFamily, start: Representation, end: Representation
) -> TransformTrace:
    """A shortest rewrite chain from start to end (both valid, same value)."""
    if value(family, start) != value(family, end):
        raise InvalidInput("representations denote different numbers")
    if not is_valid(family, start):
        raise InvalidInput(f"{start} is not a valid representation")
    parent: dict[Representation, tuple[Representation, TransformStep]] = {}
    seen = {start}
    frontier = [start]
    while frontier and end not in seen:
        nxt = []
        for cur in frontier:
            for step, nb in neighbours(family, cur):
                if nb not in seen:
                    seen.add(nb)
                    parent[nb] = (cur, step)
                    nxt.append(nb)
        frontier = nxt
    if end not in seen:
        raise ConstructionFailed(f"{end} is not reachable from {start}")
    steps: list[TransformStep] = []
    cur = end
    while cur != start:
        cur, step = parent[cur]
        steps.append(step)
    steps.reverse()
    return TransformTrace(start, tuple(steps), end)


def z_profile(family: WordFamily, r: Representation) -> tuple[int, ...]:
    """z[m] = min(k_m, |d_m - k_m|), the digit's distance to the two
    rewrite-enabled values 0 and d_m, for each stored position."""
    return tuple(
        min(k, abs(family.d(m) - k)) for m, k in enumerate(r.digits)
    )


def trace_to_json(family: WordFamily, trace: TransformTrace) -> dict:
    from .numeration import to_json as repr_json

    return {
        "start": repr_json(family, trace.start),
        "steps": [s.to_json() for s in trace.steps],
        "end": repr_json(family, trace.end),
    }
