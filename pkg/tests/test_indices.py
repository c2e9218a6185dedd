import math

import pytest

from mopw.indices import (
    MultiIndex,
    PathSpec,
    enumerate_indices,
    enumerate_paths,
    validate_path,
)


def test_multi_index_basics():
    n = MultiIndex.of(3, 3)
    assert n.r == 2 and n.size == 6
    assert n.step(1) == MultiIndex.of(4, 3)
    assert n.step(2) == MultiIndex.of(3, 4)
    assert MultiIndex.of(1, 2) <= MultiIndex.of(2, 2)
    assert not MultiIndex.of(3, 0) <= MultiIndex.of(2, 2)


def test_multi_index_validation():
    with pytest.raises(ValueError):
        MultiIndex(())
    with pytest.raises(ValueError):
        MultiIndex.of(-1, 0)
    with pytest.raises(ValueError):
        MultiIndex.of(1, 1).step(3)


def test_path_materialization():
    p = PathSpec(MultiIndex.of(3, 3), (1,))
    assert p.indices() == [MultiIndex.of(3, 3), MultiIndex.of(4, 3)]
    p = PathSpec(MultiIndex.of(2, 3), (1, 1, 2))
    assert p.indices() == [
        MultiIndex.of(2, 3),
        MultiIndex.of(3, 3),
        MultiIndex.of(4, 3),
        MultiIndex.of(4, 4),
    ]


def test_path_bad_direction():
    with pytest.raises(ValueError):
        validate_path(PathSpec(MultiIndex.of(0, 0), (3,)))


def test_horizontal_path():
    p = PathSpec.horizontal(MultiIndex.of(1, 0), 3, direction=2)
    assert p.steps == (2, 2)
    assert p.length == 3
    with pytest.raises(ValueError):
        PathSpec.horizontal(MultiIndex.of(1, 0), 0)


def test_path_json_round_trip():
    p = PathSpec(MultiIndex.of(2, 3), (1, 2))
    assert PathSpec.from_json(p.to_json()) == p


def test_enumerate_paths_count():
    for r, l in [(2, 3), (3, 4)]:
        start = MultiIndex((0,) * r)
        paths = list(enumerate_paths(start, l))
        assert len(paths) == r ** (l - 1)
        assert len(set(paths)) == len(paths)
        for p in paths:
            idx = p.indices()
            assert len(idx) == l
            assert all(a <= b for a, b in zip(idx, idx[1:]))


def test_enumerate_indices_count():
    for r, m in [(1, 5), (2, 4), (3, 4)]:
        idx = list(enumerate_indices(r, m))
        assert len(idx) == math.comb(m + r, r)
        assert all(n.size <= m for n in idx)
        assert len(set(idx)) == len(idx)
