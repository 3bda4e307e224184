"""End-to-end analysis of one instance into a JSON-serialisable report."""

from __future__ import annotations

import time

from .cubes import BitString, is_daisy_cube, maximal_elements
from .hexgrid import Benzenoid, HexAddr
from .matching import link_edge_count
from .resonance import (
    build_digraph,
    build_matching_table,
    build_resonance_graph,
    check_isometry,
    check_median,
    hasse_equals_digraph,
    is_connected,
    max_degree,
)
from .resonant import (
    binary_representation,
    check_lemma1,
    check_lemma2_lemma3,
    check_theorem,
    enumerate_resonant_sets,
    maximal_resonant_sets,
    validate_witness,
)
from .structure import OrderMode, hexagon_classes, inner_dual, is_kinky, order_hexagons

SCHEMA = "kinkydaisy.report/1"

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _status(ok: bool, witness=None) -> dict:
    out = {"status": PASS if ok else FAIL}
    if not ok and witness is not None:
        out["witness"] = _jsonable(witness)
    return out


def _skipped(reason: str) -> dict:
    return {"status": SKIPPED, "reason": reason}


def _jsonable(x):
    if isinstance(x, BitString):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def check_links(b: Benzenoid, matchings) -> dict:
    """No matching ever holds exactly one of the two edges of a link."""
    for m in matchings:
        for h in range(b.n):
            for other in b.hex_adjacency[h]:
                if link_edge_count(b, m, other, h) == 1:
                    return _status(False, [str(b.hexes[h]), str(b.hexes[other])])
    return _status(True)


def analyze(
    b: Benzenoid,
    mode: OrderMode | str = OrderMode.DFS,
    root: HexAddr | None = None,
    force: bool = False,
    median: bool = False,
    timing: bool = False,
) -> dict:
    """Run every check on ``b`` and return a report dictionary.

    Theorem and lemma checks are skipped for non-kinky systems unless
    ``force`` is set; the daisy-cube status is then still recorded under
    ``observations``.
    """
    started = time.perf_counter()
    t = inner_dual(b)
    ord = order_hexagons(t, mode, root)
    kinky = is_kinky(b)
    table = build_matching_table(b, ord)
    rg = build_digraph(build_resonance_graph(b, ord, table))
    labels = table.labels
    classes = hexagon_classes(b)

    report: dict = {
        "schema": SCHEMA,
        "instance": {
            "n": b.n,
            "hexes": [[h.q, h.r] for h in b.hexes],
            "kinky": kinky,
            "classes": [
                {"hex": [b.hexes[h].q, b.hexes[h].r], "class": classes[h].value}
                for h in ord.order
            ],
            "order": OrderMode(mode).value,
            "root": [b.hexes[ord.root].q, b.hexes[ord.root].r],
            "predecessor": [None if p is None else p + 1 for p in ord.pred],
        },
        "counts": {
            "matchings": len(table),
            "labels": len(set(labels)),
            "resonance_edges": len(rg.edges),
        },
        "labels": sorted(str(x) for x in labels),
    }

    checks: dict = {}
    checks["link"] = check_links(b, table.matchings)
    iso = check_isometry(rg)
    checks["isometry"] = _status(iso.ok, iso.witness)
    checks["connected"] = _status(is_connected(rg))
    checks["degree_bound"] = _status(max_degree(rg) <= b.n)
    checks["hasse"] = _status(hasse_equals_digraph(rg))
    checks["zero_label"] = _status(BitString.zero(b.n) in set(labels))

    all_sets = enumerate_resonant_sets(b, ord, table)
    top_sets = maximal_resonant_sets(all_sets)
    checks["resonant_witnesses"] = _status(
        all(validate_witness(b, ord, table, s) for s in all_sets)
    )
    report["maximal_resonant_sets"] = [[p + 1 for p in s.sorted_members()] for s in top_sets]
    report["maximal_resonant_set_labels"] = sorted(
        str(binary_representation(s, b.n)) for s in top_sets
    )

    if kinky or force:
        v1 = check_lemma1(b, ord, top_sets, force=True)
        checks["lemma1"] = _status(v1.ok, v1.witness)
        v23 = check_lemma2_lemma3(b, ord, table, top_sets, force=True)
        checks["lemma2_3"] = _status(v23.ok, v23.witness)
        th = check_theorem(b, ord, rg, top_sets, force=True)
        checks["theorem"] = _status(th.ok, th.witness)
        report["maximal_labels"] = th.certificate["maximal_labels"]
        if not th.ok:
            checks["theorem"]["reason"] = th.certificate.get("reason")
    else:
        for name in ("lemma1", "lemma2_3", "theorem"):
            checks[name] = _skipped("not kinky")
        report["maximal_labels"] = sorted(str(x) for x in maximal_elements(labels))

    daisy = is_daisy_cube(rg.labeled_graph())
    report["observations"] = {"daisy_cube": daisy.ok}
    if not daisy.ok:
        report["observations"]["daisy_witness"] = daisy.witness_str()

    if median:
        med = check_median(rg)
        checks["median"] = _status(med.ok, med.witness)
    else:
        checks["median"] = _skipped("not requested")

    report["checks"] = checks
    report["ok"] = all(c["status"] != FAIL for c in checks.values())
    if timing:
        report["seconds"] = round(time.perf_counter() - started, 6)
    return report

