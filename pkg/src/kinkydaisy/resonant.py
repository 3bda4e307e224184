"""Resonant sets and executable checks of the daisy-cube theorem and its lemmas.

Hexagons are referred to by their 0-based position in a
:class:`~kinkydaisy.structure.HexOrdering` throughout this module, so that
position ``j`` corresponds to bit ``j`` of a label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cubes import (
    BitString,
    DaisyVerdict,
    downward_closure,
    interval_is_kcube,
    is_daisy_cube,
    maximal_elements,
    sort_key,
)
from .errors import NotKinky
from .hexgrid import Benzenoid
from .matching import alternating_mask, is_alternating
from .resonance import MatchingTable, ResonanceGraph
from .structure import HexOrdering, is_kinky


@dataclass(frozen=True)
class ResonantSet:
    hexagons: frozenset[int]
    witness: int

    def sorted_members(self) -> list[int]:
        return sorted(self.hexagons)


def binary_representation(s: ResonantSet | frozenset[int], n: int) -> BitString:
    members = s.hexagons if isinstance(s, ResonantSet) else s
    if any(not 0 <= j < n for j in members):
        raise ValueError(f"hexagon positions {sorted(members)} out of range for n={n}")
    return BitString.from_positions(members, n)


def ordered_adjacency(b: Benzenoid, ord: HexOrdering) -> list[set[int]]:
    """Inner-dual adjacency re-indexed by ordering position."""
    pos = {h: i for i, h in enumerate(ord.order)}
    return [{pos[w] for w in b.hex_adjacency[h]} for h in ord.order]


def _independent_sets(adj: list[set[int]]) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []

    def grow(start: int, chosen: frozenset[int], blocked: frozenset[int]) -> None:
        out.append(chosen)
        for v in range(start, len(adj)):
            if v not in blocked:
                grow(v + 1, chosen | {v}, blocked | adj[v] | {v})

    grow(0, frozenset(), frozenset())
    return out


def enumerate_resonant_sets(
    b: Benzenoid, ord: HexOrdering, table: MatchingTable
) -> list[ResonantSet]:
    """All resonant sets of ``b``, each with one witnessing matching.

    The witness is the matching labelled b(S) if that matching makes every
    member alternating, otherwise the first such matching in table order.
    """
    adj = ordered_adjacency(b, ord)
    alt = []
    for m in table.matchings:
        hex_mask = alternating_mask(b, m)
        alt.append(sum(1 << p for p, h in enumerate(ord.order) if hex_mask >> h & 1))
    by_label = {label: k for k, label in enumerate(table.labels)}
    result = []
    for s in _independent_sets(adj):
        want = sum(1 << p for p in s)
        # Prefer the matching labelled b(S) when it witnesses S.
        k = by_label.get(binary_representation(s, ord.n))
        if k is None or alt[k] & want != want:
            k = next((k for k, have in enumerate(alt) if have & want == want), None)
        if k is not None:
            result.append(ResonantSet(s, k))
    result.sort(key=lambda rs: (len(rs.hexagons), sorted(rs.hexagons)))
    return result


def validate_witness(b: Benzenoid, ord: HexOrdering, table: MatchingTable, s: ResonantSet) -> bool:
    m = table.matchings[s.witness]
    return all(is_alternating(b, m, ord.order[p]) for p in s.hexagons)


def maximal_resonant_sets(all_sets: list[ResonantSet]) -> list[ResonantSet]:
    return [
        s for s in all_sets
        if not any(s.hexagons < other.hexagons for other in all_sets)
    ]


@dataclass
class Verdict:
    """Result of a lemma or theorem check.

    ``witness`` explains a failure; ``certificate`` carries supporting data
    for a success.
    """

    ok: bool
    witness: object = None
    certificate: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _require_kinky(b: Benzenoid, force: bool) -> None:
    if not force and not is_kinky(b):
        raise NotKinky("the system has a linear hexagon; pass force=True to check anyway")


def check_lemma1(
    b: Benzenoid, ord: HexOrdering, maximal_sets: list[ResonantSet], force: bool = False
) -> Verdict:
    """Every hexagon or one of its neighbours belongs to each maximal resonant set."""
    _require_kinky(b, force)
    adj = ordered_adjacency(b, ord)
    for s in maximal_sets:
        for h in range(ord.n):
            if h not in s.hexagons and not (adj[h] & s.hexagons):
                return Verdict(False, {"set": [p + 1 for p in s.sorted_members()], "hexagon": h + 1})
    return Verdict(True)


def check_lemma2_lemma3(
    b: Benzenoid,
    ord: HexOrdering,
    table: MatchingTable,
    maximal_sets: list[ResonantSet],
    force: bool = False,
) -> Verdict:
    """Binary representations of maximal resonant sets are the maximal labels."""
    _require_kinky(b, force)
    b_side = {binary_representation(s, ord.n) for s in maximal_sets}
    label_side = set(maximal_elements(table.labels))
    if b_side == label_side:
        return Verdict(True, certificate={"maximal_labels": sorted(map(str, label_side))})
    diff = sorted(b_side ^ label_side, key=sort_key)
    return Verdict(
        False,
        diff[0],
        {
            "resonant_side": sorted(map(str, b_side)),
            "label_side": sorted(map(str, label_side)),
        },
    )


def check_theorem(
    b: Benzenoid,
    ord: HexOrdering,
    rg: ResonanceGraph,
    maximal_sets: list[ResonantSet] | None = None,
    force: bool = False,
) -> Verdict:
    """The labelled resonance graph is the daisy cube generated by its maximal labels."""
    _require_kinky(b, force)
    labels = rg.table.labels
    top = maximal_elements(labels)
    cert = {"maximal_labels": sorted(map(str, top))}
    if maximal_sets is not None:
        cert["maximal_resonant_sets"] = [
            [p + 1 for p in s.sorted_members()] for s in maximal_sets
        ]

    verdict: DaisyVerdict = is_daisy_cube(rg.labeled_graph())
    if not verdict:
        return Verdict(False, verdict.witness, {**cert, "reason": verdict.reason})
    closure = downward_closure(top)
    if closure != frozenset(labels):
        extra = sorted(closure ^ frozenset(labels), key=sort_key)[0]
        return Verdict(False, extra, {**cert, "reason": "closure-mismatch"})
    g = rg.labeled_graph()
    for x in sorted(top, key=sort_key):
        if not interval_is_kcube(g, x):
            return Verdict(False, x, {**cert, "reason": "interval-not-cube"})
    return Verdict(True, certificate=cert)
