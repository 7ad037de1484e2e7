"""Tile algebra for marked graph mosaics.

A tile is an integer code 0..12.  Connection points sit at edge midpoints,
named by the edge they lie on: T (top), R (right), B (bottom), L (left).

Code table:

    0   empty tile, no connection points
    1   arc L-B          2   arc B-R
    3   arc R-T          4   arc T-L
    5   horizontal line L-R
    6   vertical line T-B
    7   double arc, pairs (T,L) and (B,R)
    8   double arc, pairs (T,R) and (B,L)
    9   crossing, vertical strand T-B passes over horizontal L-R
    10  crossing, horizontal strand L-R passes over vertical T-B
    11  marked vertex, marker bar horizontal
    12  marked vertex, marker bar vertical

Codes 9-12 all carry the two through-strands T-B and L-R; they differ in
which strand is on top (9, 10) or in marker direction (11, 12).
"""

from __future__ import annotations

TOP, RIGHT, BOTTOM, LEFT = "T", "R", "B", "L"
EDGES = (TOP, RIGHT, BOTTOM, LEFT)

EMPTY = 0
ARC_LB, ARC_BR, ARC_RT, ARC_TL = 1, 2, 3, 4
LINE_LR, LINE_TB = 5, 6
DARC_TL_BR, DARC_TR_BL = 7, 8
CROSS_VOVER, CROSS_HOVER = 9, 10
MARK_H, MARK_V = 11, 12

ALL_TILES = tuple(range(13))
KNOT_TILES = tuple(range(11))        # unoriented knot-mosaic tile set
MARKED_TILES = (MARK_H, MARK_V)
CROSSING_TILES = (CROSS_VOVER, CROSS_HOVER)
FOURPOINT_TILES = (7, 8, 9, 10, 11, 12)

# Internal strand pairings: which connection points are joined inside the
# tile.  Crossings and marked vertices join T-B and L-R (pass-through).
_PAIRINGS = {
    0: (),
    1: (("L", "B"),),
    2: (("B", "R"),),
    3: (("R", "T"),),
    4: (("T", "L"),),
    5: (("L", "R"),),
    6: (("T", "B"),),
    7: (("T", "L"), ("B", "R")),
    8: (("T", "R"), ("B", "L")),
    9: (("T", "B"), ("L", "R")),
    10: (("T", "B"), ("L", "R")),
    11: (("T", "B"), ("L", "R")),
    12: (("T", "B"), ("L", "R")),
}

_POINTS = {code: frozenset(p for pair in pairs for p in pair)
           for code, pairs in _PAIRINGS.items()}

# Quarter-turn (counterclockwise) permutation of codes.
_ROT = {0: 0, 1: 2, 2: 3, 3: 4, 4: 1, 5: 6, 6: 5,
        7: 8, 8: 7, 9: 10, 10: 9, 11: 12, 12: 11}

# Counterclockwise image of each edge: a point on R moves to T, etc.
_ROT_EDGE = {"R": "T", "T": "L", "L": "B", "B": "R"}


class TileError(ValueError):
    """Raised for invalid tile codes."""


def check_code(code: int) -> int:
    if not isinstance(code, int) or isinstance(code, bool) or not 0 <= code <= 12:
        raise TileError(f"invalid tile code: {code!r}")
    return code


def connection_points(code: int) -> frozenset:
    """Set of edges ('T','R','B','L') carrying a connection point."""
    check_code(code)
    return _POINTS[code]


def pairings(code: int):
    """Internal strand pairings of the tile, as edge-label pairs."""
    check_code(code)
    return _PAIRINGS[code]


def rotate(code: int, quarter_turns: int) -> int:
    """Rotate a tile counterclockwise by the given number of quarter turns."""
    check_code(code)
    for _ in range(quarter_turns % 4):
        code = _ROT[code]
    return code


def rotate_edge(edge: str, quarter_turns: int = 1) -> str:
    """Counterclockwise image of an edge label under rotation."""
    for _ in range(quarter_turns % 4):
        edge = _ROT_EDGE[edge]
    return edge


def has_point(code: int, edge: str) -> bool:
    return edge in _POINTS[check_code(code)]


def is_crossing(code: int) -> bool:
    return code in CROSSING_TILES


def is_marked(code: int) -> bool:
    return code in MARKED_TILES


def over_strand(code: int):
    """The over-strand pair of a crossing tile, else None.

    Marked vertices have no over/under distinction.
    """
    if code == CROSS_VOVER:
        return ("T", "B")
    if code == CROSS_HOVER:
        return ("L", "R")
    return None
