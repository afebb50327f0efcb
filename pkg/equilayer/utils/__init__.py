"""Utils package initialization."""

from .union_find import UnionFind, find_orbits

__all__ = ["UnionFind", "find_orbits"]
