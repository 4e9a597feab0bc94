"""Deterministic enumeration of pebble distributions.

Distributions of a fixed total over n vertices are generated in
colexicographic order: the last coordinate varies slowest.  The pure
generator and the vectorized array builder produce identical orders, and
all searches report the first witness under this order, which pins down
every output byte-for-byte.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np


def iter_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Yield every length-tuple of non-negative ints summing to total,
    in colexicographic order."""
    if length < 1:
        raise ValueError("length must be at least 1")
    if total < 0:
        raise ValueError("total must be non-negative")
    if length == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in iter_compositions(total - last, length - 1):
            yield head + (last,)


def compositions_array(total: int, length: int) -> np.ndarray:
    """All compositions as an int16 array, rows in colexicographic order."""
    if length < 1:
        raise ValueError("length must be at least 1")
    if total < 0:
        raise ValueError("total must be non-negative")
    level = [np.array([[j]], dtype=np.int16) for j in range(total + 1)]
    for m in range(2, length):
        nxt = []
        for j in range(total + 1):
            blocks = []
            for last in range(j + 1):
                sub = level[j - last]
                col = np.full((sub.shape[0], 1), last, dtype=np.int16)
                blocks.append(np.hstack([sub, col]))
            nxt.append(np.vstack(blocks) if len(blocks) > 1 else blocks[0])
        level = nxt
    if length == 1:
        return level[total]
    blocks = []
    for last in range(total + 1):
        sub = level[total - last]
        col = np.full((sub.shape[0], 1), last, dtype=np.int16)
        blocks.append(np.hstack([sub, col]))
    return np.vstack(blocks) if len(blocks) > 1 else blocks[0]


def is_path_canonical(counts: tuple[int, ...]) -> bool:
    """Representative of a reversal orbit: not lexicographically above its mirror."""
    return counts <= counts[::-1]


def is_cycle_canonical(counts: tuple[int, ...]) -> bool:
    """Representative of a rotation/reflection orbit: lexicographic minimum."""
    n = len(counts)
    doubled = counts + counts
    for s in range(n):
        if doubled[s:s + n] < counts:
            return False
    mirrored = counts[::-1]
    doubled = mirrored + mirrored
    for s in range(n):
        if doubled[s:s + n] < counts:
            return False
    return True
