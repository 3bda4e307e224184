"""Perfect matchings (Kekule structures), links and the binary labelling."""

from __future__ import annotations

from dataclasses import dataclass

from .cubes import BitString
from .errors import HexagonsNotAdjacent
from .hexgrid import Benzenoid
from .structure import HexOrdering

ALTERNATING_POSITIONS = ((0, 2, 4), (1, 3, 5))


@dataclass(frozen=True)
class Matching:
    """Edge subset stored as a bitmask over edge ids."""

    mask: int

    def __contains__(self, edge_id: int) -> bool:
        return bool(self.mask >> edge_id & 1)

    def edge_ids(self) -> list[int]:
        return [e for e in range(self.mask.bit_length()) if self.mask >> e & 1]

    def __len__(self):
        return bin(self.mask).count("1")

    def bitvector(self, num_edges: int) -> str:
        """Bit string indexed by edge id, edge 0 first."""
        return "".join("1" if e in self else "0" for e in range(num_edges))


def is_perfect(b: Benzenoid, m: Matching) -> bool:
    covered = [0] * len(b.vertices)
    for e in m.edge_ids():
        if e >= len(b.edges):
            return False
        u, v = b.edges[e]
        covered[u] += 1
        covered[v] += 1
    return all(c == 1 for c in covered)


def enumerate_matchings(b: Benzenoid) -> list[Matching]:
    """All perfect matchings, ordered lexicographically by edge bit vector."""
    nv = len(b.vertices)
    incident = b.incident_edges
    edges = b.edges
    found: list[int] = []
    covered = [False] * nv

    def extend(start: int, mask: int) -> None:
        v = start
        while v < nv and covered[v]:
            v += 1
        if v == nv:
            found.append(mask)
            return
        covered[v] = True
        for e in incident[v]:
            a, c = edges[e]
            w = c if a == v else a
            if not covered[w]:
                covered[w] = True
                extend(v + 1, mask | (1 << e))
                covered[w] = False
        covered[v] = False

    if nv % 2 == 0:
        extend(0, 0)
    ne = len(edges)
    # Lexicographic on the bit vector with edge 0 first: a matching holding a
    # lower edge id sorts after one that lacks it ("1" > "0").
    found.sort(key=lambda mask: Matching(mask).bitvector(ne))
    return [Matching(mask) for mask in found]


def is_alternating(b: Benzenoid, m: Matching, h: int) -> bool:
    cyc = b.hex_cycles[h]
    held = tuple(p for p in range(6) if cyc[p] in m)
    return held in ALTERNATING_POSITIONS


def alternating_mask(b: Benzenoid, m: Matching) -> int:
    """Bitmask over hexagon indices of the M-alternating hexagons."""
    return sum(1 << h for h in range(b.n) if is_alternating(b, m, h))


def link_edges(b: Benzenoid, h: int, h_from: int) -> tuple[int, int]:
    """Edge ids of ``h_from`` with exactly one end on the edge shared with ``h``."""
    p = b.shared_edge_position(h_from, h)
    if p is None:
        raise HexagonsNotAdjacent(f"hexagons {b.hexes[h_from]} and {b.hexes[h]} are not adjacent")
    cyc = b.hex_cycles[h_from]
    return cyc[(p - 1) % 6], cyc[(p + 1) % 6]


def detect_link(b: Benzenoid, m: Matching, h: int, h_from: int) -> bool:
    """True iff ``m`` contains the link from ``h_from`` to ``h``."""
    e1, e2 = link_edges(b, h, h_from)
    return e1 in m and e2 in m


def link_edge_count(b: Benzenoid, m: Matching, h: int, h_from: int) -> int:
    e1, e2 = link_edges(b, h, h_from)
    return (e1 in m) + (e2 in m)


def label_matching(b: Benzenoid, ord: HexOrdering, m: Matching) -> BitString:
    n = ord.n
    bits = []
    root = ord.order[0]
    if n == 1:
        # No h_2 to take an opposite edge from; use the lowest edge id instead.
        bits.append(min(b.hex_cycles[root]) in m)
    else:
        h2 = ord.order[1]
        p = b.shared_edge_position(root, h2)
        bits.append(b.hex_cycles[root][(p + 3) % 6] in m)
        for i in range(1, n):
            bits.append(detect_link(b, m, ord.order[ord.pred[i]], ord.order[i]))
    return BitString.from_positions([i for i, bit in enumerate(bits) if bit], n)
