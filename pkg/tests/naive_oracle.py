"""Independent reference implementations used only to cross-check the library.

Distances come from breadth-first search on the explicit grid graph and the
domination number from exhaustive subset enumeration. Nothing here shares a
code path with the library's closed-form arithmetic or its search.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np


def bfs_distances(m: int, n: int) -> np.ndarray:
    """All-pairs shortest-path matrix of the m x n grid graph.

    Cell index is x * n + y, matching the library's lexicographic order.
    """
    num = m * n
    dist = np.full((num, num), -1, dtype=np.int64)
    for sx in range(m):
        for sy in range(n):
            src = sx * n + sy
            dist[src, src] = 0
            queue = deque([(sx, sy)])
            while queue:
                x, y = queue.popleft()
                here = dist[src, x * n + y]
                for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if 0 <= nx < m and 0 <= ny < n and dist[src, nx * n + ny] < 0:
                        dist[src, nx * n + ny] = here + 1
                        queue.append((nx, ny))
    return dist


def coverage_matrix(m: int, n: int, t: int) -> np.ndarray:
    """coverage[tower_index, cell_index] = signal supplied, from BFS distances."""
    return np.maximum(t - bfs_distances(m, n), 0)


def naive_signal_totals(m: int, n: int, t: int, towers) -> dict[tuple[int, int], int]:
    """Per-vertex totals summed tower by tower; towers are (x, y) pairs inside the grid."""
    coverage = coverage_matrix(m, n, t)
    totals: dict[tuple[int, int], int] = {}
    for x in range(m):
        for y in range(n):
            totals[(x, y)] = int(sum(coverage[tx * n + ty, x * n + y] for tx, ty in towers))
    return totals


def naive_gamma(m: int, n: int, t: int, r: int) -> int | None:
    """Minimum broadcast size by enumerating all subsets of each size.

    Subsets of one size are checked as a single numpy batch; returns None when
    even towers on every vertex cannot reach r.
    """
    coverage = coverage_matrix(m, n, t)
    num = m * n
    if coverage.sum(axis=0).min() < r:
        return None
    for k in range(1, num + 1):
        idx = np.array(list(combinations(range(num), k)), dtype=np.int64)
        totals = coverage[idx].sum(axis=1)
        if bool((totals >= r).all(axis=1).any()):
            return k
    return None
