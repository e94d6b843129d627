"""
Disjoint-set union over the integers 0..size-1.
"""

from typing import List


class DisjointSet:
    """
    Union-find with union by size and path halving.

    Examples:
        >>> ds = DisjointSet(3)
        >>> ds.union(0, 2)
        True
        >>> ds.find(0) == ds.find(2), ds.count
        (True, 2)
    """

    __slots__ = ('_parent', '_size', 'count')

    def __init__(self, size: int):
        """
        Args:
            size: Number of elements; each starts in its own set
        """
        if size < 0:
            raise ValueError(f"DisjointSet size must be non-negative, got {size}")
        self._parent: List[int] = list(range(size))
        self._size: List[int] = [1] * size
        self.count = size

    def find(self, x: int) -> int:
        """Return the representative of the set containing x."""
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """
        Merge the sets containing x and y.

        Returns:
            True if two different sets were merged
        """
        root_x = self.find(x)
        root_y = self.find(y)
        if root_x == root_y:
            return False
        if self._size[root_x] < self._size[root_y]:
            root_x, root_y = root_y, root_x
        self._parent[root_y] = root_x
        self._size[root_x] += self._size[root_y]
        self.count -= 1
        return True

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)
