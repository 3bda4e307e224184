"""Hexagonal lattice geometry and the molecular graph of a benzenoid system.

Hexagons are addressed by axial coordinates ``(q, r)``.  The six unit
directions are listed counterclockwise in :data:`DIRECTIONS`; consecutive
directions differ by a unit direction, so hexagon ``c``, ``c + d[i-1]`` and
``c + d[i]`` meet at one lattice vertex.  That vertex is corner ``i`` of
``c``.  Working in tripled coordinates keeps every corner on an integer
point::

    corner(c, i) = 3*c + d[i-1] + d[i]

Edge ``i`` of a hexagon joins corners ``i`` and ``i+1`` and is the edge shared
with the neighbour in direction ``i``.  Around a hexagon, edge positions
``0..5`` therefore form the 6-cycle in order.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DisconnectedSystem,
    InstanceParseError,
    UnknownHexagon,
    VertexOnlyContact,
)

DIRECTIONS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1),
)


@dataclass(frozen=True, order=True)
class HexAddr:
    q: int
    r: int

    def __add__(self, other: "HexAddr") -> "HexAddr":
        return HexAddr(self.q + other.q, self.r + other.r)

    def __sub__(self, other: "HexAddr") -> "HexAddr":
        return HexAddr(self.q - other.q, self.r - other.r)

    def neighbor(self, direction: int) -> "HexAddr":
        dq, dr = DIRECTIONS[direction % 6]
        return HexAddr(self.q + dq, self.r + dr)

    def direction_to(self, other: "HexAddr") -> int | None:
        """Index of the unit direction pointing at ``other``, or None."""
        delta = (other.q - self.q, other.r - self.r)
        try:
            return DIRECTIONS.index(delta)
        except ValueError:
            return None

    def __str__(self):
        return f"{self.q},{self.r}"


def hex_distance(a: HexAddr, b: HexAddr) -> int:
    dq, dr = a.q - b.q, a.r - b.r
    return max(abs(dq), abs(dr), abs(dq + dr))


# Point symmetries of the lattice as maps on axial coordinates.  Rotation by
# 60 degrees sends direction i to direction i+1; reflection sends direction i
# to direction -i.

def rotate60(h: HexAddr) -> HexAddr:
    return HexAddr(h.q + h.r, -h.q)


def reflect(h: HexAddr) -> HexAddr:
    return HexAddr(h.q + h.r, -h.r)


def _make_symmetries():
    ops = []
    for flip in (False, True):
        for turns in range(6):
            def op(h, flip=flip, turns=turns):
                if flip:
                    h = reflect(h)
                for _ in range(turns):
                    h = rotate60(h)
                return h
            ops.append(op)
    return tuple(ops)


#: The 12 point symmetries of the hexagonal lattice fixing the origin.
SYMMETRIES = _make_symmetries()


def corner_point(h: HexAddr, i: int) -> tuple[int, int]:
    """Tripled-coordinate position of corner ``i`` of hexagon ``h``."""
    a = DIRECTIONS[(i - 1) % 6]
    b = DIRECTIONS[i % 6]
    return (3 * h.q + a[0] + b[0], 3 * h.r + a[1] + b[1])


def corner_owners(point: tuple[int, int]) -> list[tuple[int, int, int]]:
    """All ``(q, r, i)`` of the lattice naming the corner at ``point``."""
    owners = []
    for i in range(6):
        a = DIRECTIONS[(i - 1) % 6]
        b = DIRECTIONS[i]
        x, y = point[0] - a[0] - b[0], point[1] - a[1] - b[1]
        if x % 3 == 0 and y % 3 == 0:
            owners.append((x // 3, y // 3, i))
    return sorted(owners)


def canonical_corner(h: HexAddr, i: int) -> tuple[int, int, int]:
    """Lexicographically smallest ``(q, r, i)`` naming the same lattice corner."""
    return corner_owners(corner_point(h, i))[0]


@dataclass(frozen=True)
class Benzenoid:
    """Molecular graph of a set of lattice hexagons.

    Hexagons, vertices and edges are all referred to by integer indices.
    ``hexes`` is sorted; ``vertices`` holds the canonical corner ids in sorted
    order; ``edges`` holds vertex index pairs ``(u, v)`` with ``u < v`` in
    sorted order, and the position in that tuple is the edge id.
    ``hex_cycles[h][p]`` is the id of edge position ``p`` of hexagon ``h`` and
    ``hex_corners[h][p]`` the vertex at corner ``p``.
    """

    hexes: tuple[HexAddr, ...]
    vertices: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]
    hex_cycles: tuple[tuple[int, ...], ...]
    hex_corners: tuple[tuple[int, ...], ...]
    vertex_hex_count: tuple[int, ...]
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    @property
    def n(self) -> int:
        return len(self.hexes)

    def hex_index(self, h: HexAddr | int) -> int:
        if isinstance(h, int):
            if 0 <= h < len(self.hexes):
                return h
            raise UnknownHexagon(f"no hexagon with index {h}")
        try:
            return self._index[h]
        except KeyError:
            raise UnknownHexagon(f"hexagon {h} is not part of the system") from None

    @cached_property
    def hex_masks(self) -> tuple[int, ...]:
        """Edge-id bitmask of each hexagon's 6-cycle."""
        return tuple(sum(1 << e for e in cyc) for cyc in self.hex_cycles)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in self.vertices]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def hex_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """For each hexagon index, the sorted indices of edge-sharing hexagons."""
        return tuple(
            tuple(sorted(self._index[n] for n in _lattice_neighbors(h, self._index)))
            for h in self.hexes
        )

    def shared_edge_position(self, h: int, other: int) -> int | None:
        """Edge position in ``h``'s cycle shared with ``other``, if adjacent."""
        return self.hexes[h].direction_to(self.hexes[other])

    def degree(self, v: int) -> int:
        return len(self.incident_edges[v])


def _lattice_neighbors(h: HexAddr, present) -> list[HexAddr]:
    return [h.neighbor(d) for d in range(6) if h.neighbor(d) in present]


def build_benzenoid(hexes: Iterable[HexAddr | tuple[int, int]]) -> Benzenoid:
    """Realise the molecular graph of a connected set of lattice hexagons."""
    addrs = sorted({h if isinstance(h, HexAddr) else HexAddr(*h) for h in hexes})
    if not addrs:
        raise ValueError("a benzenoid needs at least one hexagon")
    index = {h: i for i, h in enumerate(addrs)}

    corner_ids = [[canonical_corner(h, i) for i in range(6)] for h in addrs]

    # Brute-force contact check: two hexagons touching in a corner must share
    # an edge, otherwise the union is not 2-connected.
    by_corner: dict[tuple, set[int]] = {}
    for hi, ids in enumerate(corner_ids):
        for c in ids:
            by_corner.setdefault(c, set()).add(hi)
    for owners in by_corner.values():
        for a in owners:
            for b in owners:
                if a < b and addrs[a].direction_to(addrs[b]) is None:
                    raise VertexOnlyContact(
                        f"hexagons {addrs[a]} and {addrs[b]} share only a vertex"
                    )

    _check_connected(addrs, index)

    vertices = tuple(sorted(by_corner))
    vindex = {c: i for i, c in enumerate(vertices)}
    hex_corners = tuple(tuple(vindex[c] for c in ids) for ids in corner_ids)

    edge_set = set()
    for corners in hex_corners:
        for p in range(6):
            u, v = corners[p], corners[(p + 1) % 6]
            edge_set.add((min(u, v), max(u, v)))
    edges = tuple(sorted(edge_set))
    eindex = {e: i for i, e in enumerate(edges)}
    hex_cycles = tuple(
        tuple(
            eindex[(min(c[p], c[(p + 1) % 6]), max(c[p], c[(p + 1) % 6]))]
            for p in range(6)
        )
        for c in hex_corners
    )
    counts = Counter(v for corners in hex_corners for v in corners)
    return Benzenoid(
        hexes=tuple(addrs),
        vertices=vertices,
        edges=edges,
        hex_cycles=hex_cycles,
        hex_corners=hex_corners,
        vertex_hex_count=tuple(counts[v] for v in range(len(vertices))),
        _index=index,
    )


def _check_connected(addrs: Sequence[HexAddr], index) -> None:
    seen = {addrs[0]}
    stack = [addrs[0]]
    while stack:
        h = stack.pop()
        for n in _lattice_neighbors(h, index):
            if n not in seen:
                seen.add(n)
                stack.append(n)
    if len(seen) != len(addrs):
        missing = min(set(addrs) - seen)
        raise DisconnectedSystem(f"hexagon {missing} is not connected to {addrs[0]}")


def hex_neighbors(b: Benzenoid, h: HexAddr) -> set[HexAddr]:
    i = b.hex_index(h)
    return {b.hexes[j] for j in b.hex_adjacency[i]}


def is_catacondensed(b: Benzenoid) -> bool:
    """No vertex lies in three hexagons and the hexagon adjacency graph is a tree.

    On the lattice the vertex condition alone would admit rings of hexagons
    around a hole; the tree condition rejects those.
    """
    if max(b.vertex_hex_count) > 2:
        return False
    adjacencies = sum(len(a) for a in b.hex_adjacency) // 2
    return adjacencies == b.n - 1


# --- instance files ---------------------------------------------------------

def parse_instance(text: str) -> list[HexAddr]:
    """Parse either the line format (``q r`` per line) or a JSON ``[[q, r], ...]``."""
    if text.lstrip().startswith("["):
        return _parse_json(text)
    return _parse_lines(text)


def _parse_lines(text: str) -> list[HexAddr]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InstanceParseError(f"expected 'q r', got {raw.strip()!r}", lineno)
        try:
            q, r = int(parts[0]), int(parts[1])
        except ValueError:
            raise InstanceParseError(
                f"coordinates must be integers, got {raw.strip()!r}", lineno
            ) from None
        out.append(HexAddr(q, r))
    if not out:
        raise InstanceParseError("instance contains no hexagons")
    return out


def _parse_json(text: str) -> list[HexAddr]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, list) or not data:
        raise InstanceParseError("expected a non-empty JSON array of [q, r] pairs")
    out = []
    for k, item in enumerate(data):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise InstanceParseError(f"item {k} is not an integer pair: {item!r}")
        out.append(HexAddr(item[0], item[1]))
    return out


def format_instance(hexes: Iterable[HexAddr], comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.extend(f"{h.q} {h.r}" for h in sorted(hexes))
    return "\n".join(lines) + "\n"
