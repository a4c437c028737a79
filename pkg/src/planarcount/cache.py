"""Plain-text persistence for memoized planar counts.

Format: one ``d,r,s,theta=count`` line per entry, sorted by key, LF
endings.  Loading revalidates a sample of the entries by recomputing
them from scratch, so a stale or tampered cache fails loudly instead of
poisoning later results.
"""

from __future__ import annotations

import math
from pathlib import Path

from .recursion import CountKey, MemoIntegrityError, MemoTable, planar_count

__all__ = ["CacheError", "CacheValidationError", "load_cache", "save_cache"]


class CacheError(RuntimeError):
    """Cache file is malformed or inconsistent."""


class CacheValidationError(CacheError):
    """A sampled cache entry disagrees with a fresh recomputation."""

    def __init__(self, key: CountKey, stored: int, recomputed: int) -> None:
        self.key = key
        self.stored = stored
        self.recomputed = recomputed
        super().__init__(
            f"cache validation failed at {key.d},{key.r},{key.s},{key.theta}: "
            f"stored {stored}, recomputed {recomputed}"
        )


def save_cache(memo: MemoTable, path: Path | str) -> None:
    """Write every memo entry to ``path``, sorted by (d, r, s, theta)."""
    lines = [
        f"{key.d},{key.r},{key.s},{key.theta}={value}"
        for key, value in sorted(memo.items())
    ]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="ascii")


def _parse_line(lineno: int, line: str) -> tuple[CountKey, int]:
    key_part, sep, value_part = line.partition("=")
    fields = key_part.split(",")
    if not sep or len(fields) != 4:
        raise CacheError(f"line {lineno}: expected 'd,r,s,theta=count', got {line!r}")
    try:
        d, r, s, theta = (int(field) for field in fields)
        value = int(value_part)
    except ValueError:
        raise CacheError(f"line {lineno}: non-integer field in {line!r}") from None
    if d < 1 or r < 0 or s < 0 or theta < 0:
        raise CacheError(f"line {lineno}: invalid key {key_part}")
    return CountKey(d, r, s, theta), value


def load_cache(
    path: Path | str,
    *,
    sample_fraction: float = 0.01,
    min_sample: int = 10,
) -> MemoTable:
    """Read a cache file into a fresh MemoTable, spot-checking its entries.

    A deterministic, evenly spaced sample (at least ``min_sample``
    entries, at least ``sample_fraction`` of the file) is recomputed with
    a clean memo; any disagreement raises CacheValidationError.
    """
    memo = MemoTable()
    text = Path(path).read_text(encoding="ascii")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, value = _parse_line(lineno, line)
        try:
            memo.insert(key, value)
        except MemoIntegrityError as exc:
            raise CacheError(f"line {lineno}: {exc}") from None

    entries = sorted(memo.items())
    if entries:
        want = min(len(entries), max(min_sample, math.ceil(sample_fraction * len(entries))))
        step = len(entries) / want
        indices = sorted({int(i * step) for i in range(want)})
        scratch = MemoTable()
        for index in indices:
            key, stored = entries[index]
            recomputed = planar_count(key, scratch)
            if recomputed != stored:
                raise CacheValidationError(key, stored, recomputed)
    return memo
