"""Union-find over branch individuals, mirroring derived a:{b} facts."""
from __future__ import annotations

from collections import defaultdict


class EqualityClasses:
    """
    Disjoint sets of individual names.

    The root of every class is its member with the least creation index, so
    find() doubles as "representative in the blocking order".
    """

    def __init__(self) -> None:
        self._parent: dict[str, str] = {}
        self._index: dict[str, int] = {}

    def add(self, name: str, index: int) -> None:
        if name in self._parent:
            return
        self._parent[name] = name
        self._index[name] = index

    def find(self, name: str) -> str:
        # path halving
        parent = self._parent
        while parent[name] != name:
            parent[name] = parent[parent[name]]
            name = parent[name]
        return name

    def union(self, first: str, second: str) -> str:
        """Merge two classes and return the new representative."""
        first_root = self.find(first)
        second_root = self.find(second)
        if first_root == second_root:
            return first_root
        if self._index[second_root] < self._index[first_root]:
            first_root, second_root = second_root, first_root
        self._parent[second_root] = first_root
        return first_root

    def same(self, first: str, second: str) -> bool:
        return self.find(first) == self.find(second)

    def classes(self) -> list[list[str]]:
        """Classes ordered by representative index, members by index."""
        grouped: dict[str, list[str]] = defaultdict(list)
        for name in sorted(self._parent, key=self._index.__getitem__):
            grouped[self.find(name)].append(name)
        return [grouped[root] for root in sorted(grouped, key=self._index.__getitem__)]

    def copy(self) -> EqualityClasses:
        clone = EqualityClasses()
        clone._parent = dict(self._parent)
        clone._index = dict(self._index)
        return clone

    def __contains__(self, name: object) -> bool:
        return name in self._parent

    def __len__(self) -> int:
        return len(self._parent)
