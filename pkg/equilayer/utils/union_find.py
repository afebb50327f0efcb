"""Disjoint-set forest over the integers ``0..size-1``."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence


class UnionFind:
    """Union by rank with path compression."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def components(self) -> list[list[int]]:
        """Return components ordered by their smallest member."""

        grouped: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            grouped.setdefault(self.find(x), []).append(x)
        return sorted(grouped.values(), key=lambda members: members[0])

    def __len__(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.parent[x] == x)


def find_orbits(
    generators: Iterable[Sequence[int] | Callable[[int], int]], size: int
) -> list[list[int]]:
    """Orbits of the group generated by ``generators`` acting on ``range(size)``.

    A generator is either an image table (``g[x]``) or a callable.
    """

    uf = UnionFind(size)
    for g in generators:
        act = g if callable(g) else g.__getitem__
        for x in range(size):
            uf.union(x, act(x))
    return uf.components()
