"""Brute-force ground truth for partitions, plane partitions and traces.

Nothing here touches generating functions.  Plane partitions are built
row by row: each row is a partition dominated entrywise by the row above
it, so the Young shape and both monotonicity constraints hold by
construction.  Full enumeration is practical up to roughly n = 20.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class PlanePartition:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, row in enumerate(rows):
            if not row:
                raise ValueError(f"row {i} is empty")
            for j, v in enumerate(row):
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"entry ({i},{j}) = {v!r} is not a positive integer")
                if j and v > row[j - 1]:
                    raise ValueError(f"row {i} increases at column {j}")
            if i:
                above = rows[i - 1]
                if len(row) > len(above):
                    raise ValueError(f"row {i} is longer than row {i - 1}")
                for j, v in enumerate(row):
                    if v > above[j]:
                        raise ValueError(f"column {j} increases at row {i}")

    @property
    def weight(self) -> int:
        return sum(sum(r) for r in self.rows)

    @property
    def trace(self) -> int:
        return sum(row[i] for i, row in enumerate(self.rows) if len(row) > i)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> PlanePartition:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("expected a JSON array of arrays")
        return cls(tuple(tuple(r) for r in data))


def weight(pp: PlanePartition) -> int:
    return pp.weight


def trace(pp: PlanePartition) -> int:
    """Diagonal sum ``n11 + n22 + ...`` over the cells that exist."""
    return pp.trace


def count_partitions(n: int) -> int:
    """p(n) by the two-index recurrence on the largest allowed part.

    ``ways[s]`` after processing parts ``1..k`` counts partitions of ``s``
    with all parts ``<= k``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for s in range(part, n + 1):
            ways[s] += ways[s - part]
    return ways[n]


def _dominated_rows(total: int, bound: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonempty weakly decreasing rows of sum ``total`` with ``row[j] <= bound[j]``.

    Generated in lexicographically decreasing order.
    """

    def rec(j: int, left: int, cap: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        if j >= len(bound):
            return
        # the remaining cells can hold at most cap each
        hi = min(left, cap, bound[j])
        for v in range(hi, 0, -1):
            for tail in rec(j + 1, left - v, v):
                yield (v,) + tail

    if total > 0:
        yield from rec(0, total, total)


def _plane_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    def rec(left: int, above: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if left == 0:
            yield ()
            return
        for s in range(min(left, sum(above)), 0, -1):
            for row in _dominated_rows(s, above):
                for rest in rec(left - s, row):
                    yield (row,) + rest

    # the first row is only bounded by n
    yield from rec(n, [n] * n)


def enumerate_plane_partitions(n: int) -> list[PlanePartition]:
    """All plane partitions of ``n`` in a fixed deterministic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [PlanePartition(rows) for rows in _plane_partitions(n)]


def count_plane_partitions(n: int) -> int:
    return sum(1 for _ in _plane_partitions(n))


def trace_histogram(n: int) -> dict[int, int]:
    """``{trace: count}`` over every plane partition of ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    hist = Counter(sum(r[i] for i, r in enumerate(rows) if len(r) > i) for rows in _plane_partitions(n))
    return dict(sorted(hist.items()))


@dataclass(frozen=True)
class TraceTable:
    """``c[i][j]`` = number of plane partitions of ``i`` with trace ``j``."""

    c: tuple[tuple[int, ...], ...]

    @property
    def i_max(self) -> int:
        return len(self.c) - 1

    @property
    def j_max(self) -> int:
        return len(self.c[0]) - 1 if self.c else -1

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.c[i]

    def row_sum(self, i: int) -> int:
        return sum(self.c[i])


def oracle_trace_table(i_max: int, j_max: int) -> TraceTable:
    rows = []
    for i in range(i_max + 1):
        hist = trace_histogram(i)
        rows.append(tuple(hist.get(j, 0) for j in range(j_max + 1)))
    return TraceTable(tuple(rows))
