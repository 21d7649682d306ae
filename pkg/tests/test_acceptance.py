"""Acceptance suite: every criterion as one test, each printing a
pass/fail line with its runtime (run with -s to see them inline).

The family list for the exhaustive representation criteria is fixed by a
frozen seed so reruns check the identical instances.
"""

import itertools
import random
import time

import pytest

from sturmian import (
    Representation,
    StepKind,
    enumerate_valid,
    is_legal,
    is_ostrowski,
    is_valid,
    normalize,
    ostrowski,
    pal_length_fast,
    pal_length_oracle,
    palindrome_repr_pair,
    reachable_set,
    unbend,
    value,
    verify_witness,
    build_witness,
    z_profile,
)
from sturmian.pal_length import available_kernels
from sturmian.palindromes import pair_fits, z_profiles_agree_off_m
from sturmian.transforms import apply_step

from conftest import family

R = Representation.parse


def _report(name: str, started: float, detail: str = "") -> None:
    elapsed = time.perf_counter() - started
    print(f"PASS {name} ({elapsed:.2f}s) {detail}".rstrip())


def _sweep_families() -> list[str]:
    rng = random.Random(20260810)
    out = ["(1)", "(2,1)", "(3)"]
    for _ in range(20):
        head = ",".join(str(rng.randint(1, 4)) for _ in range(8))
        tail = str(rng.randint(1, 4))
        out.append(f"{head},({tail})")
    return out


def _padded(z: tuple[int, ...], i: int) -> int:
    return z[i] if i < len(z) else 0


def test_criterion_1_paper_golden_suite(capsys):
    t0 = time.perf_counter()
    fib = family("fib")

    assert ostrowski(fib, 14) == R("100001")
    assert is_valid(fib, R("1300")) and not is_legal(fib, R("1300"))

    chain = ["1300", "10200", "10111", "11001", "100001"]
    forward = [
        (StepKind.UNBEND, 3),
        (StepKind.BEND, 1),
        (StepKind.UNBEND, 2),
        (StepKind.UNBEND, 4),
    ]
    cur = R(chain[0])
    from sturmian import TransformStep

    for (kind, m), nxt in zip(forward, chain[1:]):
        cur = apply_step(fib, cur, TransformStep(kind, m))
        assert cur == R(nxt)
    backward = [
        (StepKind.BEND, 4),
        (StepKind.BEND, 2),
        (StepKind.UNBEND, 1),
        (StepKind.BEND, 3),
    ]
    for (kind, m), nxt in zip(backward, reversed(chain[:-1])):
        cur = apply_step(fib, cur, TransformStep(kind, m))
        assert cur == R(nxt)
    trace = normalize(fib, R("1300"))
    assert [r.text() for r in _replay(fib, trace)] == chain

    assert ostrowski(fib, 12) == R("10101")
    assert ostrowski(fib, 13) == R("100000")

    pair = palindrome_repr_pair(fib, 12, 13)
    assert (pair.r1, pair.r2, pair.m) == (R("1201"), R("1210"), 1)

    valid9 = enumerate_valid(fib, 9)
    assert {R("1012"), R("1101")} <= valid9
    assert palindrome_repr_pair(fib, 7, 9).r2 in valid9

    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    with capsys.disabled():
        _report("criterion 1 (paper golden suite)", t0)


def _replay(fam, trace):
    out = [trace.start]
    cur = trace.start
    for step in trace.steps:
        cur = apply_step(fam, cur, step)
        out.append(cur)
    return out


def test_criterion_2_legal_implies_valid(capsys):
    t0 = time.perf_counter()
    checked = 0
    for text in _sweep_families():
        fam = family(text)
        q6 = fam.q(6)
        bounds = [fam.d(i) for i in range(6)]
        for digits in itertools.product(*(range(b + 1) for b in bounds)):
            r = Representation(digits)
            if value(fam, r) >= q6:
                continue
            assert is_valid(fam, r), (text, digits)
            checked += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    with capsys.disabled():
        _report("criterion 2 (legal => valid)", t0, f"[{checked} representations]")


def test_criterion_3_and_4_completeness_and_normalization(capsys):
    t0 = time.perf_counter()
    total = 0
    for text in _sweep_families():
        fam = family(text)
        for N in range(0, 401):
            ev = enumerate_valid(fam, N)
            assert ev == enumerate_valid(fam, N, digit_bound_slack=1), (text, N)
            assert ev == reachable_set(fam, ostrowski(fam, N)), (text, N)
            for r in ev:
                trace = normalize(fam, r)
                assert trace.end == ostrowski(fam, N)
                guard = 10 * (sum(r.digits) + r.width) ** 2
                assert len(trace.steps) < guard or not trace.steps
            total += len(ev)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    with capsys.disabled():
        _report(
            "criteria 3+4 (bounds, completeness, normalization)",
            t0,
            f"[{total} representations]",
        )


def test_criterion_5_z_stability(capsys):
    t0 = time.perf_counter()
    for text in _sweep_families():
        fam = family(text)
        for N in range(0, 401):
            zs = [z_profile(fam, r) for r in enumerate_valid(fam, N)]
            for za, zb in itertools.combinations(zs, 2):
                top = max(len(za), len(zb))
                for m in range(top):
                    assert abs(_padded(za, m) - _padded(zb, m)) <= 3, (text, N)

    # the digit-stability bound 3 is attained between the two valid
    # representations from the worked rewrite chain
    fam = family("1,1,1,1,5,(1)")
    r1, r2 = R("140000"), R("1011221")
    assert is_valid(fam, r1) and is_valid(fam, r2)
    assert value(fam, r1) == value(fam, r2)
    assert r1.digit(4) == 4 and r2.digit(4) == 1 and abs(4 - 1) == 3
    with capsys.disabled():
        _report("criterion 5 (z-stability, bound attained)", t0)


def test_criterion_6_palindrome_pairs(capsys):
    t0 = time.perf_counter()
    count = 0
    for text in ["fib", "(2,3,1,4)"]:
        fam = family(text)
        w = fam.prefix(650)
        for p2 in range(1, 301):
            for p1 in range(p2):
                f = w[p1:p2]
                if f != f[::-1]:
                    continue
                pair = palindrome_repr_pair(fam, p1, p2)
                assert is_valid(fam, pair.r1) and is_valid(fam, pair.r2)
                assert value(fam, pair.r1) == p1 and value(fam, pair.r2) == p2
                assert pair_fits(fam, pair.r1, pair.r2, pair.m)
                assert z_profiles_agree_off_m(fam, pair)
                count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    with capsys.disabled():
        _report("criterion 6 (palindrome pairs)", t0, f"[{count} occurrences]")


def test_criterion_7_engine_equivalence(capsys):
    t0 = time.perf_counter()
    kernels = sorted(available_kernels())
    words = 0
    for n in range(0, 15):
        for bits in itertools.product(b"ab", repeat=n):
            word = bytes(bits)
            expected = pal_length_oracle(word).pal_len
            for kernel in kernels:
                assert pal_length_fast(word, kernel=kernel).pal_len == expected, word
            words += 1
    for text in ["fib", "(2,1)", "(3)", "(2,3,1,4)", "1,2,(3,1)"]:
        fam = family(text)
        for length in (100, 500, 2000):
            word = fam.prefix(length)
            expected = pal_length_oracle(word).pal_len
            for kernel in kernels:
                assert pal_length_fast(word, kernel=kernel).pal_len == expected
    with capsys.disabled():
        _report(
            "criterion 7 (engine equivalence)",
            t0,
            f"[{words} exhaustive words, kernels: {', '.join(kernels)}]",
        )


def test_criterion_8_theorem_witnesses(capsys):
    t0 = time.perf_counter()
    fam_a = family("8,8,(1)")
    spec_a = build_witness(fam_a, 1)
    assert spec_a.N == 40
    report_a = verify_witness(fam_a, spec_a)
    assert report_a.pal_len >= 2
    assert pal_length_oracle(fam_a.prefix(40)).pal_len == report_a.pal_len

    fam_b = family("(14)")
    spec_b = build_witness(fam_b, 2)
    q = [fam_b.q(i) for i in range(3)]
    assert spec_b.N == 7 * sum(q)
    report_b = verify_witness(fam_b, spec_b)
    assert report_b.pal_len >= 3

    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    with capsys.disabled():
        _report(
            "criterion 8 (theorem witnesses)",
            t0,
            f"[Q=1: pal_len {report_a.pal_len}; Q=2: pal_len {report_b.pal_len}]",
        )


def test_criterion_9_performance(capsys):
    t0 = time.perf_counter()
    fam = family("fib")
    word = fam.prefix(10**6)
    start = time.perf_counter()
    result = pal_length_fast(word)
    engine_time = time.perf_counter() - start
    assert result.pal_len >= 1
    assert engine_time < 5.0, f"engine took {engine_time:.2f}s"

    fam2 = family("(2,3,1,4)")
    start = time.perf_counter()
    prefix = fam2.prefix(10**7)
    prefix_time = time.perf_counter() - start
    assert len(prefix) == 10**7
    assert prefix_time < 2.0, f"prefix took {prefix_time:.2f}s"
    with capsys.disabled():
        _report(
            "criterion 9 (performance)",
            t0,
            f"[engine {engine_time:.2f}s on 1e6; prefix {prefix_time:.2f}s on 1e7]",
        )
