"""Hypercube machinery: bit strings, componentwise order, daisy cubes.

A :class:`BitString` of length ``n`` stores position 1 (the leftmost
character) in the most significant bit of ``value``, so integer order and
string order agree.  Labels are limited to 63 positions so that every label
fits in one machine word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import LabelTooLong, VertexNotPresent

MAX_BITS = 63


@dataclass(frozen=True, order=False)
class BitString:
    value: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_BITS:
            raise LabelTooLong(f"bit strings are limited to {MAX_BITS} positions, got {self.n}")
        if not 0 <= self.value < (1 << self.n) or (self.n == 0 and self.value):
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def parse(cls, text: str) -> "BitString":
        text = text.strip()
        if any(c not in "01" for c in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_positions(cls, positions: Iterable[int], n: int) -> "BitString":
        """String with a 1 at every 0-based position in ``positions``."""
        value = 0
        for p in positions:
            value |= 1 << (n - 1 - p)
        return cls(value, n)

    @classmethod
    def zero(cls, n: int) -> "BitString":
        return cls(0, n)

    def __str__(self):
        return format(self.value, f"0{self.n}b") if self.n else ""

    def __repr__(self):
        return f"BitString('{self}')"

    def __getitem__(self, pos: int) -> int:
        """Bit at 0-based position ``pos`` counted from the left."""
        if not 0 <= pos < self.n:
            raise IndexError(pos)
        return (self.value >> (self.n - 1 - pos)) & 1

    def positions(self) -> list[int]:
        return [p for p in range(self.n) if self[p]]

    def flip(self, pos: int) -> "BitString":
        return BitString(self.value ^ (1 << (self.n - 1 - pos)), self.n)

    @property
    def popcount(self) -> int:
        return bin(self.value).count("1")

    def hamming(self, other: "BitString") -> int:
        return bin(self.value ^ other.value).count("1")

    # Componentwise partial order, like frozenset's subset operators.
    def __le__(self, other: "BitString") -> bool:
        return self.n == other.n and self.value & ~other.value == 0

    def __lt__(self, other: "BitString") -> bool:
        return self <= other and self.value != other.value

    def __ge__(self, other: "BitString") -> bool:
        return other <= self

    def __gt__(self, other: "BitString") -> bool:
        return other < self

    def meet(self, other: "BitString") -> "BitString":
        return BitString(self.value & other.value, self.n)


def sort_key(x: BitString) -> str:
    """Total order used for reproducible output (plain string order)."""
    return str(x)


def _uniform_length(xs) -> int | None:
    lengths = {x.n for x in xs}
    if len(lengths) > 1:
        raise ValueError(f"bit strings of mixed length: {sorted(lengths)}")
    return lengths.pop() if lengths else None


@dataclass(frozen=True)
class LabeledGraph:
    """Graph whose vertices are distinct bit strings of one length."""

    vertices: frozenset[BitString]
    edges: frozenset[frozenset[BitString]]

    def __post_init__(self):
        _uniform_length(self.vertices)
        for e in self.edges:
            if len(e) != 2 or not e <= self.vertices:
                raise ValueError(f"bad edge {sorted(map(str, e))}")

    @classmethod
    def from_pairs(cls, vertices, pairs) -> "LabeledGraph":
        return cls(frozenset(vertices), frozenset(frozenset(p) for p in pairs))

    @property
    def n(self) -> int | None:
        return _uniform_length(self.vertices)

    def adjacency(self) -> dict[BitString, list[BitString]]:
        adj: dict[BitString, list[BitString]] = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def distances_from(self, source: BitString) -> dict[BitString, int]:
        if source not in self.vertices:
            raise VertexNotPresent(f"{source} is not a vertex")
        adj = self.adjacency()
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist


def downward_closure(x_set: Iterable[BitString]) -> frozenset[BitString]:
    xs = list(x_set)
    _uniform_length(xs)
    closed: set[BitString] = set()
    stack = list(xs)
    while stack:
        u = stack.pop()
        if u in closed:
            continue
        closed.add(u)
        for p in u.positions():
            stack.append(u.flip(p))
    return frozenset(closed)


def hamming_one_pairs(vertices: Iterable[BitString]) -> frozenset[frozenset[BitString]]:
    """Edges of the subgraph of Q_n induced by ``vertices``."""
    vs = set(vertices)
    pairs = set()
    for u in vs:
        for p in u.positions():
            w = u.flip(p)
            if w in vs:
                pairs.add(frozenset((u, w)))
    return frozenset(pairs)


def build_daisy_cube(x_set: Iterable[BitString]) -> LabeledGraph:
    vertices = downward_closure(x_set)
    return LabeledGraph(vertices, hamming_one_pairs(vertices))


def maximal_elements(labels: Iterable[BitString]) -> frozenset[BitString]:
    xs = set(labels)
    _uniform_length(xs)
    return frozenset(x for x in xs if not any(x < y for y in xs))


@dataclass(frozen=True)
class DaisyVerdict:
    """Outcome of :func:`is_daisy_cube`.

    ``witness`` is set on failure: for ``reason == "not-downward-closed"`` it
    is the missing label; for ``"missing-edge"`` / ``"extra-edge"`` it is the
    offending pair.
    """

    ok: bool
    reason: str | None = None
    witness: BitString | tuple[BitString, BitString] | None = None

    def __bool__(self):
        return self.ok

    def witness_str(self) -> str | list[str] | None:
        if self.witness is None:
            return None
        if isinstance(self.witness, tuple):
            return [str(x) for x in self.witness]
        return str(self.witness)


def is_daisy_cube(g: LabeledGraph) -> DaisyVerdict:
    """Check that ``g`` is the daisy cube generated by its own label set."""
    vs = g.vertices
    # One-bit-down closure implies full downward closure by induction.
    for u in sorted(vs, key=sort_key):
        for p in u.positions():
            if u.flip(p) not in vs:
                missing = min(
                    (w for w in downward_closure([u]) if w not in vs), key=sort_key
                )
                return DaisyVerdict(False, "not-downward-closed", missing)
    expected = hamming_one_pairs(vs)
    missing_edges = expected - g.edges
    if missing_edges:
        pair = min((tuple(sorted(e, key=sort_key)) for e in missing_edges), key=lambda t: tuple(map(str, t)))
        return DaisyVerdict(False, "missing-edge", pair)
    extra = g.edges - expected
    if extra:
        pair = min((tuple(sorted(e, key=sort_key)) for e in extra), key=lambda t: tuple(map(str, t)))
        return DaisyVerdict(False, "extra-edge", pair)
    return DaisyVerdict(True)


def interval(g: LabeledGraph, u: BitString, v: BitString) -> frozenset[BitString]:
    """Vertices on shortest u,v-paths of ``g``."""
    if u not in g.vertices:
        raise VertexNotPresent(f"{u} is not a vertex")
    if v not in g.vertices:
        raise VertexNotPresent(f"{v} is not a vertex")
    du = g.distances_from(u)
    dv = g.distances_from(v)
    if v not in du:
        raise VertexNotPresent(f"{v} is not reachable from {u}")
    total = du[v]
    return frozenset(w for w in du if w in dv and du[w] + dv[w] == total)


def interval_is_kcube(g: LabeledGraph, x: BitString) -> bool:
    """Whether I(x, 0^n) is exactly the sub-cube below ``x``."""
    zero = BitString.zero(x.n)
    members = interval(g, x, zero)
    k = x.popcount
    if len(members) != 1 << k:
        return False
    if members != downward_closure([x]):
        return False
    induced = {e for e in g.edges if e <= members}
    return induced == hamming_one_pairs(members)
