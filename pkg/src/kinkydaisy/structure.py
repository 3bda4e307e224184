"""Inner dual, hexagon classes and the predecessor-respecting numbering."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .errors import NotCatacondensed, RootNotLeaf, UnknownHexagon
from .hexgrid import Benzenoid, HexAddr, is_catacondensed


class HexClass(str, enum.Enum):
    TERMINAL = "terminal"
    KINK = "kink"
    LINEAR = "linear"
    BRANCHED = "branched"
    ISOLATED = "isolated"  # single-hexagon system


class OrderMode(str, enum.Enum):
    DFS = "dfs"
    BFS = "bfs"


@dataclass(frozen=True)
class InnerDual:
    nodes: tuple[HexAddr, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b]

    def leaves(self) -> list[int]:
        if len(self.nodes) == 1:
            return [0]
        return [i for i, nbrs in enumerate(self.adjacency) if len(nbrs) == 1]

    def index_of(self, h: HexAddr) -> int:
        try:
            return self.nodes.index(h)
        except ValueError:
            raise UnknownHexagon(f"hexagon {h} is not part of the system") from None


@dataclass(frozen=True)
class HexOrdering:
    """Numbering h_1..h_n of the hexagons.

    ``order[i]`` is the hexagon index of h_{i+1}; ``pred[i]`` is the position
    of its predecessor in ``order`` (``None`` for the root).
    """

    order: tuple[int, ...]
    pred: tuple[int | None, ...]
    mode: OrderMode

    @property
    def n(self) -> int:
        return len(self.order)

    def position(self, hex_index: int) -> int:
        return self.order.index(hex_index)

    @property
    def root(self) -> int:
        return self.order[0]


def inner_dual(b: Benzenoid) -> InnerDual:
    if not is_catacondensed(b):
        raise NotCatacondensed("not catacondensed: inner dual is not a tree (vertex in 3 hexagons or a hole)")
    return InnerDual(b.hexes, b.hex_adjacency)


def _require_catacondensed(b: Benzenoid) -> None:
    if not is_catacondensed(b):
        raise NotCatacondensed("system is not catacondensed")


def classify_hexagon(b: Benzenoid, h: HexAddr | int) -> HexClass:
    _require_catacondensed(b)
    i = b.hex_index(h)
    nbrs = b.hex_adjacency[i]
    if not nbrs:
        return HexClass.ISOLATED
    if len(nbrs) == 1:
        return HexClass.TERMINAL
    if len(nbrs) == 3:
        return HexClass.BRANCHED
    # Two neighbours: look at the two corners no other hexagon touches.
    lonely = [p for p, v in enumerate(b.hex_corners[i]) if b.vertex_hex_count[v] == 1]
    a, c = lonely
    return HexClass.KINK if (c - a) % 6 in (1, 5) else HexClass.LINEAR


def hexagon_classes(b: Benzenoid) -> list[HexClass]:
    return [classify_hexagon(b, i) for i in range(b.n)]


def is_kinky(b: Benzenoid) -> bool:
    _require_catacondensed(b)
    return HexClass.LINEAR not in hexagon_classes(b)


def order_hexagons(
    t: InnerDual, mode: OrderMode | str = OrderMode.DFS, root: HexAddr | int | None = None
) -> HexOrdering:
    """Number the hexagons by DFS or BFS from a leaf of the inner dual.

    The default root is the leaf with the smallest address.  Children are
    visited in ascending address order, which is index order.
    """
    mode = OrderMode(mode)
    leaves = t.leaves()
    if root is None:
        start = min(leaves)
    else:
        start = t.index_of(root) if isinstance(root, HexAddr) else root
        if not 0 <= start < len(t.nodes):
            raise UnknownHexagon(f"no hexagon with index {start}")
        if start not in leaves:
            raise RootNotLeaf(f"hexagon {t.nodes[start]} is not a leaf of the inner dual")

    order: list[int] = []
    parent: dict[int, int | None] = {start: None}
    if mode is OrderMode.BFS:
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in t.adjacency[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
    else:
        stack = [start]
        while stack:
            u = stack.pop()
            order.append(u)
            for w in reversed(t.adjacency[u]):
                if w not in parent:
                    parent[w] = u
                    stack.append(w)

    pos = {h: i for i, h in enumerate(order)}
    pred = tuple(None if parent[h] is None else pos[parent[h]] for h in order)
    return HexOrdering(tuple(order), pred, mode)
