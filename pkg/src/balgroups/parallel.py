"""Deterministic sharding of integer ranges over a process pool."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

SHARDS_ENV = "BALGROUPS_SHARDS"


def default_shards() -> int:
    try:
        return max(1, int(os.environ.get(SHARDS_ENV, "1")))
    except ValueError:
        return 1


def split_range(lo: int, hi: int, shards: int) -> list[tuple[int, int]]:
    """Cut [lo, hi] into at most ``shards`` consecutive closed intervals."""
    if hi < lo:
        return []
    shards = max(1, min(int(shards), hi - lo + 1))
    size, extra = divmod(hi - lo + 1, shards)
    out = []
    start = lo
    for i in range(shards):
        end = start + size + (1 if i < extra else 0) - 1
        out.append((start, end))
        start = end + 1
    return out


def map_shards(func, lo: int, hi: int, shards: int | None = None) -> list:
    """Apply ``func((a, b))`` to each shard; results come back in range order."""
    shards = default_shards() if shards is None else int(shards)
    if shards < 1:
        raise ValueError("shard count must be >= 1")
    pieces = split_range(lo, hi, shards)
    if len(pieces) <= 1:
        return [func(piece) for piece in pieces]
    with ProcessPoolExecutor(max_workers=min(len(pieces), os.cpu_count() or 1)) as pool:
        return list(pool.map(func, pieces))


def run_sharded(func, lo: int, hi: int, shards: int | None = None) -> list:
    """Like ``map_shards`` for functions returning lists; concatenates them."""
    out = []
    for part in map_shards(func, lo, hi, shards):
        out.extend(part)
    return out
