"""Resonance graph, resonance digraph and the label poset."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .cubes import BitString, LabeledGraph, sort_key
from .errors import NoPerfectMatching
from .hexgrid import Benzenoid
from .matching import Matching, enumerate_matchings, label_matching
from .structure import HexOrdering


@dataclass(frozen=True)
class MatchingTable:
    matchings: tuple[Matching, ...]
    labels: tuple[BitString, ...]

    def __post_init__(self):
        if len(self.matchings) != len(self.labels):
            raise ValueError("matchings and labels differ in length")
        if len(set(self.labels)) != len(self.labels):
            dup = [str(x) for x in self.labels if self.labels.count(x) > 1]
            raise ValueError(f"labelling is not injective, repeated labels {sorted(set(dup))}")

    def __len__(self):
        return len(self.matchings)

    def index_of(self, label: BitString) -> int:
        return self.labels.index(label)


def build_matching_table(b: Benzenoid, ord: HexOrdering) -> MatchingTable:
    ms = enumerate_matchings(b)
    return MatchingTable(tuple(ms), tuple(label_matching(b, ord, m) for m in ms))


@dataclass(frozen=True)
class ResonanceGraph:
    """Resonance graph over a matching table.

    ``edges`` maps each index pair ``(i, j)`` with ``i < j`` to the ordering
    position (0-based) of the hexagon forming the symmetric difference.
    ``arcs`` holds ``(tail, head)`` index pairs once :func:`build_digraph` has
    been applied; it is empty otherwise.
    """

    table: MatchingTable
    edges: dict[tuple[int, int], int] = field(hash=False)
    arcs: tuple[tuple[int, int], ...] = ()
    n: int = 0

    @property
    def labels(self) -> tuple[BitString, ...]:
        return self.table.labels

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(len(self.table))]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def labeled_graph(self) -> LabeledGraph:
        labels = self.table.labels
        return LabeledGraph.from_pairs(labels, ((labels[i], labels[j]) for i, j in self.edges))

    def distances_from(self, source: int) -> list[int]:
        adj = self.neighbors()
        dist = [-1] * len(adj)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def arc_labels(self) -> set[tuple[BitString, BitString]]:
        labels = self.table.labels
        return {(labels[i], labels[j]) for i, j in self.arcs}


def build_resonance_graph(
    b: Benzenoid, ord: HexOrdering, table: MatchingTable | None = None
) -> ResonanceGraph:
    if table is None:
        table = build_matching_table(b, ord)
    if not len(table):
        raise NoPerfectMatching("the system has no perfect matching")
    hex_of_mask = {mask: ord.position(h) for h, mask in enumerate(b.hex_masks)}
    masks = [m.mask for m in table.matchings]
    edges = {}
    for i, j in combinations(range(len(masks)), 2):
        pos = hex_of_mask.get(masks[i] ^ masks[j])
        if pos is not None:
            edges[(i, j)] = pos
    return ResonanceGraph(table, edges, (), ord.n)


def build_digraph(rg: ResonanceGraph) -> ResonanceGraph:
    """Orient every edge from the label holding 0 to the label holding 1."""
    labels = rg.table.labels
    arcs = []
    for (i, j), _hex in sorted(rg.edges.items()):
        a, c = labels[i], labels[j]
        if a.hamming(c) != 1:
            raise ValueError(f"edge {a}-{c} does not differ in exactly one bit")
        arcs.append((i, j) if a < c else (j, i))
    return ResonanceGraph(rg.table, rg.edges, tuple(arcs), rg.n)


def hasse_diagram(labels: Iterable[BitString]) -> set[tuple[BitString, BitString]]:
    """Cover pairs ``(u, v)``: ``u < v`` with nothing strictly between."""
    xs = list(set(labels))
    covers = set()
    for u in xs:
        above = [v for v in xs if u < v]
        for v in above:
            if not any(w < v for w in above if w != v):
                covers.add((u, v))
    return covers


def hasse_equals_digraph(rg: ResonanceGraph) -> bool:
    return rg.arc_labels() == hasse_diagram(rg.table.labels)


@dataclass
class CheckResult:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def check_isometry(rg: ResonanceGraph) -> CheckResult:
    """Graph distance equals Hamming distance of labels for all pairs."""
    labels = rg.table.labels
    for s in range(len(labels)):
        dist = rg.distances_from(s)
        for t, d in enumerate(dist):
            if d != labels[s].hamming(labels[t]):
                return CheckResult(False, (str(labels[s]), str(labels[t]), d))
    return CheckResult(True)


def is_connected(rg: ResonanceGraph) -> bool:
    return min(rg.distances_from(0)) >= 0


def check_median(rg: ResonanceGraph) -> CheckResult:
    """Every triple of vertices has exactly one median (cubic in |M(G)|)."""
    size = len(rg.table)
    dist = [rg.distances_from(s) for s in range(size)]
    if any(d < 0 for row in dist for d in row):
        return CheckResult(False, "disconnected")
    labels = rg.table.labels
    for u, v, w in combinations(range(size), 3):
        duv, dvw, duw = dist[u][v], dist[v][w], dist[u][w]
        medians = [
            x for x in range(size)
            if dist[u][x] + dist[x][v] == duv
            and dist[v][x] + dist[x][w] == dvw
            and dist[u][x] + dist[x][w] == duw
        ]
        if len(medians) != 1:
            return CheckResult(False, [str(labels[u]), str(labels[v]), str(labels[w])])
    return CheckResult(True)


def max_degree(rg: ResonanceGraph) -> int:
    return max((len(a) for a in rg.neighbors()), default=0)


# --- serialisation ----------------------------------------------------------

def to_dot(rg: ResonanceGraph, digraph: bool = False) -> str:
    labels = rg.table.labels
    kind, sep = ("digraph", "->") if digraph else ("graph", "--")
    lines = [f"{kind} resonance {{"]
    for lab in sorted(labels, key=sort_key):
        lines.append(f'  "{lab}";')
    if digraph:
        pairs = [(i, j, rg.edges[(min(i, j), max(i, j))]) for i, j in rg.arcs]
    else:
        pairs = [(i, j, h) for (i, j), h in rg.edges.items()]
    rows = []
    for i, j, h in pairs:
        a, c = str(labels[i]), str(labels[j])
        if not digraph and c < a:
            a, c = c, a
        rows.append((a, c, h))
    rows.sort()
    for a, c, h in rows:
        lines.append(f'  "{a}" {sep} "{c}" [label="{h + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(rg: ResonanceGraph, b: Benzenoid | None = None, digraph: bool = False) -> dict:
    labels = rg.table.labels
    out: dict = {
        "labels": sorted((str(x) for x in labels)),
        "edges": sorted(
            [*sorted((str(labels[i]), str(labels[j]))), h + 1] for (i, j), h in rg.edges.items()
        ),
    }
    if digraph:
        out["arcs"] = sorted([str(labels[i]), str(labels[j])] for i, j in rg.arcs)
    if b is not None:
        out["matchings"] = {
            str(lab): [[list(b.vertices[u]), list(b.vertices[v])] for u, v in sorted(b.edges[e] for e in m.edge_ids())]
            for m, lab in zip(rg.table.matchings, labels)
        }
    return out
