"""Instance generation: turn-sequence chains, exhaustive enumeration, fixtures."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SelfOverlap
from .hexgrid import SYMMETRIES, Benzenoid, HexAddr, build_benzenoid
from .structure import is_kinky

MAX_ENUMERATE = 8

_TURN = {"L": 1, "R": -1, "S": 0}


def chain_hexes(turns: str) -> list[HexAddr]:
    """Hexagon addresses of the chain described by ``turns``.

    The chain starts at the origin heading in direction 0.  Each letter
    describes one internal hexagon: ``S`` continues straight (linear
    hexagon), ``L`` / ``R`` bend by 60 degrees (kink).
    """
    bad = set(turns) - set(_TURN)
    if bad:
        raise ValueError(f"turn letters must be L, R or S, got {''.join(sorted(bad))!r}")
    heading = 0
    hexes = [HexAddr(0, 0), HexAddr(0, 0).neighbor(0)]
    for letter in turns:
        heading = (heading + _TURN[letter]) % 6
        nxt = hexes[-1].neighbor(heading)
        if nxt in hexes:
            raise SelfOverlap(f"turns {turns!r} revisit hexagon {nxt}")
        touching = [h for h in hexes[:-1] if h.direction_to(nxt) is not None]
        if touching:
            raise SelfOverlap(f"turns {turns!r} close a ring at hexagon {nxt}")
        hexes.append(nxt)
    return hexes


def chain_from_turns(turns: str) -> Benzenoid:
    return build_benzenoid(chain_hexes(turns))


def zigzag_turns(n: int) -> str:
    """Turn letters of the alternating (fibonaccene) chain with ``n`` hexagons."""
    return "".join("LR"[i % 2] for i in range(max(n - 2, 0)))


def fibonaccene(n: int) -> Benzenoid:
    if n == 1:
        return build_benzenoid([HexAddr(0, 0)])
    return chain_from_turns(zigzag_turns(n))


# --- canonical forms --------------------------------------------------------

def normalize(hexes: Iterable[HexAddr]) -> tuple[HexAddr, ...]:
    """Sorted addresses translated so the smallest sits at the origin."""
    pts = sorted(hexes)
    o = pts[0]
    return tuple(h - o for h in pts)


def canonical_form(hexes: Iterable[HexAddr]) -> tuple[HexAddr, ...]:
    """Minimum of the normalized images under the 12 lattice symmetries."""
    pts = list(hexes)
    return min(normalize(op(h) for h in pts) for op in SYMMETRIES)


def canonical_key(hexes: Iterable[HexAddr]) -> str:
    return ";".join(str(h) for h in canonical_form(hexes))


def _leaf_extensions(shape: Sequence[HexAddr]):
    """Cells adjacent to exactly one hexagon of ``shape`` (keeps the dual a tree)."""
    present = set(shape)
    seen = set()
    for h in shape:
        for d in range(6):
            c = h.neighbor(d)
            if c in present or c in seen:
                continue
            seen.add(c)
            if sum(c.neighbor(k) in present for k in range(6)) == 1:
                yield c


@lru_cache(maxsize=None)
def enumerate_shapes(n: int) -> tuple[tuple[HexAddr, ...], ...]:
    """Canonical forms of all catacondensed systems with ``n`` hexagons."""
    if not 1 <= n <= MAX_ENUMERATE:
        raise ValueError(f"n must be in 1..{MAX_ENUMERATE}, got {n}")
    level = {canonical_form([HexAddr(0, 0)])}
    for _ in range(n - 1):
        nxt = set()
        for shape in level:
            for c in _leaf_extensions(shape):
                nxt.add(canonical_form((*shape, c)))
        level = nxt
    return tuple(sorted(level))


def enumerate_catacondensed(n: int, kinky_only: bool = False) -> list[Benzenoid]:
    out = []
    for shape in enumerate_shapes(n):
        b = build_benzenoid(shape)
        if kinky_only and not is_kinky(b):
            continue
        out.append(b)
    return out


# --- named instances --------------------------------------------------------

def fixtures() -> dict[str, Benzenoid]:
    out = {
        "benzene": build_benzenoid([HexAddr(0, 0)]),
        "naphthalene": chain_from_turns(""),
        "anthracene": chain_from_turns("S"),
        "phenanthrene": chain_from_turns("L"),
        # Central hexagon with three neighbours at alternate sides.
        "triphenylene": build_benzenoid(
            [HexAddr(0, 0), HexAddr(0, 0).neighbor(0), HexAddr(0, 0).neighbor(2), HexAddr(0, 0).neighbor(4)]
        ),
        # Linear hexagon next to a kink: benz[a]anthracene.
        "linear_example": chain_from_turns("SL"),
    }
    for k in range(3, 11):
        out[f"fibonaccene_{k}"] = fibonaccene(k)
    return out
