from hypothesis import given, strategies as st

from balgroups.parallel import SHARDS_ENV, default_shards, map_shards, split_range


@given(st.integers(-50, 50), st.integers(0, 300), st.integers(1, 20))
def test_split_range_partitions(lo, n, shards):
    hi = lo + n - 1
    pieces = split_range(lo, hi, shards)
    covered = [x for a, b in pieces for x in range(a, b + 1)]
    assert covered == list(range(lo, hi + 1))
    assert len(pieces) <= shards


def _sum_block(bounds):
    a, b = bounds
    return sum(range(a, b + 1))


def test_map_shards_ordered():
    assert sum(map_shards(_sum_block, 1, 1000, 4)) == 500500
    assert map_shards(_sum_block, 1, 10, 3) == map_shards(_sum_block, 1, 10, 3)


def test_default_shards_env(monkeypatch):
    monkeypatch.setenv(SHARDS_ENV, "5")
    assert default_shards() == 5
    monkeypatch.setenv(SHARDS_ENV, "junk")
    assert default_shards() == 1
    monkeypatch.delenv(SHARDS_ENV)
    assert default_shards() == 1
