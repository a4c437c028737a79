"""Acceptance gate: every criterion the package must meet, one test each.

Each test prints a single ``[criterion N] PASS`` line (visible with
``pytest -s``); a failing criterion fails its test, so the pytest
report itself carries the pass/fail verdict per criterion.  All
comparisons are exact; the stated runtime ceilings are asserted too.
"""

from __future__ import annotations

import json
import random
import time

from planarcount import (
    CountKey,
    MemoTable,
    binomial,
    conic_count,
    cross_check,
    kontsevich_p2,
    line_count,
    load_cache,
    planar_count,
    save_cache,
    two_component_count,
)
from planarcount.cli import main
from planarcount.quotient_ring import CONIC_RING, LINE_RING, from_terms, ring_mul
from planarcount.reference_tables import (
    CONIC_COUNTS,
    LINE_COUNTS,
    NODAL_COUNTS,
    PLANAR_COUNTS,
    REDUCIBLE_NODAL_COUNTS,
)
from ring_oracle import as_terms, random_raw_terms, random_reduced

ORACLE_SEQUENCE = [1, 1, 12, 620, 87304, 26312976, 14616808192, 13525751027392]


def _passed(number: int, message: str, elapsed: float) -> None:
    print(f"[criterion {number}] PASS {message} ({elapsed:.3f}s)")


def test_criterion_1_degree_one_base_case():
    start = time.perf_counter()
    for (r, s, theta), expected in LINE_COUNTS.items():
        assert line_count(r, s, theta) == expected
    for r in range(11):
        for s in range(11):
            for theta in range(11):
                assert line_count(r, s, theta) == LINE_COUNTS.get((r, s, theta), 0)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _passed(1, "degree 1 table exact, zero sweep over coordinates <= 10 clean", elapsed)


def test_criterion_2_degree_two_base_case():
    start = time.perf_counter()
    for (r, s, theta), expected in CONIC_COUNTS.items():
        assert conic_count(r, s, theta) == expected
    for r in range(11):
        for s in range(11):
            for theta in range(11):
                assert conic_count(r, s, theta) == CONIC_COUNTS.get((r, s, theta), 0)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _passed(2, "degree 2 table exact, zero sweep over coordinates <= 10 clean", elapsed)


def test_criterion_3_published_planar_counts():
    start = time.perf_counter()
    memo = MemoTable()
    for (d, r), expected in sorted(PLANAR_COUNTS.items()):
        assert planar_count(CountKey(d, r, 0, 0), memo) == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _passed(3, "line-condition counts for degrees 3..6 match published values", elapsed)


def test_criterion_4_oracle_cross_check():
    start = time.perf_counter()
    assert [kontsevich_p2(d) for d in range(1, 9)] == ORACLE_SEQUENCE
    rows = cross_check(8)
    assert [row.d for row in rows] == list(range(2, 9))
    for row in rows:
        assert row.planar == row.oracle, row
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _passed(4, "plane-curve oracle agrees with bridged planar counts, d = 2..8", elapsed)


def test_criterion_5_nodal_consistency():
    start = time.perf_counter()
    memo = MemoTable()
    for d in sorted(NODAL_COUNTS):
        expected = NODAL_COUNTS[d] - REDUCIBLE_NODAL_COUNTS[d]
        assert planar_count(CountKey(d, 3 * d + 2, 0, 0), memo) == expected
    elapsed = time.perf_counter() - start
    _passed(5, "published nodal counts minus reducible part equal planar counts", elapsed)


def _acceptance_keys() -> list[CountKey]:
    keys = [CountKey(1, r, s, theta) for (r, s, theta) in LINE_COUNTS]
    keys += [CountKey(2, r, s, theta) for (r, s, theta) in CONIC_COUNTS]
    keys += [CountKey(d, r, 0, 0) for (d, r) in PLANAR_COUNTS]
    keys += [CountKey(d, 3 * d - 4, 3, 0) for d in range(2, 9)]
    return keys


def test_criterion_6_property_suites():
    start = time.perf_counter()

    # Binomial identities through n = 40.
    for n in range(41):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)
        assert sum(binomial(n, k) for k in range(n + 1)) == 2**n
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    # Ring laws on 1000 random triples per ring, plus reduction
    # idempotence on raw (unreduced) random terms.
    for spec in (LINE_RING, CONIC_RING):
        rng = random.Random(424242)
        for _ in range(1000):
            x = random_reduced(rng, spec)
            y = random_reduced(rng, spec)
            z = random_reduced(rng, spec)
            xy = ring_mul(x, y, spec)
            assert xy == ring_mul(y, x, spec)
            assert ring_mul(xy, z, spec) == ring_mul(x, ring_mul(y, z, spec), spec)
        for _ in range(1000):
            once = from_terms(spec, random_raw_terms(rng, spec))
            assert from_terms(spec, as_terms(once)) == once

    # Two-component symmetry at theta = 0 for all d1 + d2 <= 5.
    memo = MemoTable()
    for d1 in range(1, 5):
        for d2 in range(1, 6 - d1):
            for r1 in range(13):
                for s1 in range(4):
                    for r2 in range(13):
                        for s2 in range(4):
                            assert two_component_count(
                                d1, r1, s1, d2, r2, s2, 0, memo
                            ) == two_component_count(d2, r2, s2, d1, r1, s1, 0, memo)

    # Vanishing sweeps for d <= 5.
    for d in range(1, 6):
        for r in range(21):
            for s in range(6):
                for theta in range(6):
                    key = CountKey(d, r, s, theta)
                    if not key.on_shell() or s > 3 or theta > 3:
                        assert planar_count(key, memo) == 0, key

    # Warm vs cold cache equality on the full acceptance key set.
    shared = MemoTable()
    warm = [planar_count(key, shared) for key in _acceptance_keys()]
    cold = [planar_count(key, MemoTable()) for key in _acceptance_keys()]
    assert warm == cold

    elapsed = time.perf_counter() - start
    _passed(6, "binomial, ring, symmetry, vanishing and cache properties hold", elapsed)


def test_criterion_7_cli_contract(capsys, tmp_path):
    start = time.perf_counter()

    # verify exits 0 on a correct build.
    assert main(["verify"]) == 0
    assert "verify: all 5 checks passed" in capsys.readouterr().out

    # Cache round-trip is lossless.
    memo = MemoTable()
    for d in range(3, 6):
        planar_count(CountKey(d, 3 * d + 2, 0, 0), memo)
    cache_path = tmp_path / "counts.cache"
    save_cache(memo, cache_path)
    assert dict(load_cache(cache_path).items()) == dict(memo.items())

    # CSV and JSON record multisets coincide.
    assert main(["table", "--max-d", "4"]) == 0
    csv_out = capsys.readouterr().out
    assert main(["table", "--max-d", "4", "--format", "json"]) == 0
    json_out = capsys.readouterr().out
    csv_rows = sorted(
        (int(d), int(r), int(s), int(theta), int(count))
        for d, r, s, theta, count in
        (line.split(",") for line in csv_out.splitlines()[1:])
    )
    json_rows = sorted(
        (obj["d"], obj["r"], obj["s"], obj["theta"], int(obj["count"]))
        for obj in json.loads(json_out)
    )
    assert csv_rows == json_rows
    assert len(csv_rows) == len(set(csv_rows))

    # Corrupted-cache load fails naming the bad key.  The first line is
    # always in the validation sample, so tampering it must be caught.
    lines = cache_path.read_text().splitlines()
    bad_key, value = lines[0].split("=")
    lines[0] = f"{bad_key}={int(value) + 1}"
    cache_path.write_text("".join(line + "\n" for line in lines))
    code = main(["compute", "--d", "3", "--r", "11", "--s", "0", "--theta", "0",
                 "--cache", str(cache_path)])
    err = capsys.readouterr().err
    assert code == 1
    assert bad_key in err

    elapsed = time.perf_counter() - start
    _passed(7, "CLI verify, cache round-trip, format agreement, tamper detection", elapsed)
