"""Multi-indices and monotone unit-step paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class MultiIndex:
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValueError("multi-index needs at least one entry")
        if any(not isinstance(e, int) or e < 0 for e in self.entries):
            raise ValueError("multi-index entries must be non-negative integers")

    @staticmethod
    def of(*entries: int) -> "MultiIndex":
        return MultiIndex(tuple(entries))

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def step(self, direction: int) -> "MultiIndex":
        """Increase entry `direction` (1-based) by one."""
        if not 1 <= direction <= self.r:
            raise ValueError(f"direction {direction} out of range 1..{self.r}")
        e = list(self.entries)
        e[direction - 1] += 1
        return MultiIndex(tuple(e))

    def __le__(self, other: "MultiIndex") -> bool:
        return self.r == other.r and all(
            a <= b for a, b in zip(self.entries, other.entries)
        )

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j: int) -> int:
        return self.entries[j]


@dataclass(frozen=True)
class PathSpec:
    """A start index plus l-1 unit steps; materializes to l multi-indices."""

    start: MultiIndex
    steps: tuple[int, ...] = ()

    @staticmethod
    def horizontal(start: MultiIndex, length: int, direction: int = 1) -> "PathSpec":
        """The default path: repeated steps in one direction."""
        if length < 1:
            raise ValueError("path length must be >= 1")
        return PathSpec(start, (direction,) * (length - 1))

    @property
    def length(self) -> int:
        return len(self.steps) + 1

    def indices(self) -> list[MultiIndex]:
        out = [self.start]
        for d in self.steps:
            out.append(out[-1].step(d))
        return out

    def to_json(self) -> dict:
        return {"start": list(self.start.entries), "steps": list(self.steps)}

    @staticmethod
    def from_json(obj: dict) -> "PathSpec":
        return PathSpec(
            MultiIndex(tuple(int(e) for e in obj["start"])),
            tuple(int(s) for s in obj.get("steps", ())),
        )


def validate_path(path: PathSpec) -> list[MultiIndex]:
    """Materialize the index sequence, rejecting out-of-range directions."""
    return path.indices()


def enumerate_paths(start: MultiIndex, length: int) -> Iterator[PathSpec]:
    """All monotone unit-step paths of the given length from start."""
    if length < 1:
        raise ValueError("path length must be >= 1")

    def rec(prefix: tuple[int, ...]):
        if len(prefix) == length - 1:
            yield PathSpec(start, prefix)
            return
        for d in range(1, start.r + 1):
            yield from rec(prefix + (d,))

    yield from rec(())


def enumerate_indices(r: int, max_size: int) -> Iterator[MultiIndex]:
    """All multi-indices in N^r with size <= max_size."""

    def rec(prefix: tuple[int, ...], budget: int):
        if len(prefix) == r - 1:
            for last in range(budget + 1):
                yield MultiIndex(prefix + (last,))
            return
        for e in range(budget + 1):
            yield from rec(prefix + (e,), budget - e)

    yield from rec((), max_size)
