"""Mosaic grids: parsing, validation, injection/crop, twofold closures.

A mosaic is an immutable m x n grid of tile codes, rows indexed top to
bottom, columns left to right, both 0-based.  Rows appear in the text
format top row first.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tiles
from .tiles import connection_points, has_point, rotate


class MosaicError(ValueError):
    """Raised on malformed mosaic input."""


@dataclass(frozen=True)
class Mosaic:
    grid: tuple  # tuple of tuples of tile codes

    def __post_init__(self):
        if not self.grid or not self.grid[0]:
            raise MosaicError("mosaic must have at least one row and column")
        width = len(self.grid[0])
        for row in self.grid:
            if len(row) != width:
                raise MosaicError("ragged grid")
            for code in row:
                tiles.check_code(code)

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def cols(self) -> int:
        return len(self.grid[0])

    def tile(self, i: int, j: int) -> int:
        return self.grid[i][j]

    def with_tile(self, i: int, j: int, code: int) -> "Mosaic":
        rows = [list(r) for r in self.grid]
        rows[i][j] = code
        return Mosaic(tuple(tuple(r) for r in rows))

    def __iter__(self):
        for i, row in enumerate(self.grid):
            for j, code in enumerate(row):
                yield i, j, code

    def __str__(self):
        return serialize(self)


def mosaic(rows) -> Mosaic:
    """Build a Mosaic from any nested iterable of tile codes."""
    return Mosaic(tuple(tuple(r) for r in rows))


def parse(text: str) -> Mosaic:
    """Parse the mosaic text format.

    `#` starts a comment line; other non-blank lines hold one row of
    whitespace-separated decimal tile codes.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        row = []
        for colno, token in enumerate(line.split(), start=1):
            if not token.isdigit():
                raise MosaicError(f"line {lineno}, token {colno}: bad token {token!r}")
            code = int(token)
            if code > 12:
                raise MosaicError(f"line {lineno}, token {colno}: no such tile {code}")
            row.append(code)
        rows.append(tuple(row))
    if not rows:
        raise MosaicError("empty mosaic text")
    width = len(rows[0])
    for k, row in enumerate(rows):
        if len(row) != width:
            raise MosaicError(f"row {k + 1} has {len(row)} tiles, expected {width}")
    return Mosaic(tuple(rows))


def serialize(m: Mosaic) -> str:
    """Canonical text form: single spaces, newline-terminated rows."""
    return "".join(" ".join(str(c) for c in row) + "\n" for row in m.grid)


def load(path) -> Mosaic:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def validate(m: Mosaic):
    """Check suitable connectedness.

    Returns (ok, failures) where failures lists (i, j, edge) for every
    connection point that is unmatched across its edge or lies on the
    outer boundary.
    """
    failures = []
    for i, j, code in m:
        for edge in tiles.EDGES:
            if not has_point(code, edge):
                continue
            if edge == "T":
                ni, nj, opp = i - 1, j, "B"
            elif edge == "B":
                ni, nj, opp = i + 1, j, "T"
            elif edge == "L":
                ni, nj, opp = i, j - 1, "R"
            else:
                ni, nj, opp = i, j + 1, "L"
            if not (0 <= ni < m.rows and 0 <= nj < m.cols):
                failures.append((i, j, edge))
            elif not has_point(m.tile(ni, nj), opp):
                failures.append((i, j, edge))
    return (not failures), failures


def is_suitably_connected(m: Mosaic) -> bool:
    return validate(m)[0]


def ch_index(m: Mosaic) -> int:
    """Total number of crossings and marked vertices."""
    return sum(1 for _, _, c in m if c in tiles.FOURPOINT_TILES and c >= 9)


def is_empty(m: Mosaic) -> bool:
    return all(c == 0 for _, _, c in m)


def inject(m: Mosaic) -> Mosaic:
    """Add one empty row at the bottom and one empty column at the right."""
    rows = [tuple(row) + (0,) for row in m.grid]
    rows.append((0,) * (m.cols + 1))
    return Mosaic(tuple(rows))


def crop(m: Mosaic) -> Mosaic:
    """Drop all-empty outer rows and columns; an empty mosaic becomes 1x1."""
    top, bottom = 0, m.rows - 1
    left, right = 0, m.cols - 1
    while top < bottom and all(c == 0 for c in m.grid[top]):
        top += 1
    while bottom > top and all(c == 0 for c in m.grid[bottom]):
        bottom -= 1
    while left < right and all(m.grid[i][left] == 0 for i in range(m.rows)):
        left += 1
    while right > left and all(m.grid[i][right] == 0 for i in range(m.rows)):
        right -= 1
    if is_empty(m):
        return Mosaic(((0,),))
    return Mosaic(tuple(tuple(row[left:right + 1]) for row in m.grid[top:bottom + 1]))


def rotate_mosaic(m: Mosaic, quarter_turns: int = 1) -> Mosaic:
    """Rotate the whole grid counterclockwise, rotating each tile with it."""
    out = m
    for _ in range(quarter_turns % 4):
        rows, cols = out.rows, out.cols
        new = [[0] * rows for _ in range(cols)]
        for i in range(rows):
            for j in range(cols):
                new[cols - 1 - j][i] = rotate(out.grid[i][j], 1)
        out = Mosaic(tuple(tuple(r) for r in new))
    return out


def boundary_points(m: Mosaic):
    """Connection points of m lying on its outer boundary.

    Returned in clockwise perimeter order starting at the top-left corner:
    top edge left-to-right, right edge top-to-bottom, bottom edge
    right-to-left, left edge bottom-to-top.  Each entry is (i, j, edge).
    """
    pts = []
    for j in range(m.cols):
        if has_point(m.tile(0, j), "T"):
            pts.append((0, j, "T"))
    for i in range(m.rows):
        if has_point(m.tile(i, m.cols - 1), "R"):
            pts.append((i, m.cols - 1, "R"))
    for j in reversed(range(m.cols)):
        if has_point(m.tile(m.rows - 1, j), "B"):
            pts.append((m.rows - 1, j, "B"))
    for i in reversed(range(m.rows)):
        if has_point(m.tile(i, 0), "L"):
            pts.append((i, 0, "L"))
    return pts


def _interior_ok(m: Mosaic) -> bool:
    """True if every interior shared edge of m matches (boundary ignored)."""
    _, failures = validate(m)
    for i, j, edge in failures:
        on_boundary = ((edge == "T" and i == 0) or (edge == "B" and i == m.rows - 1)
                       or (edge == "L" and j == 0) or (edge == "R" and j == m.cols - 1))
        if not on_boundary:
            return False
    return True


def twofold_closures(inner: Mosaic):
    """Close off an inner block's boundary points in the two possible ways.

    The boundary connection points, walked in cyclic perimeter order, can
    only be joined in adjacent pairs; the two alternating pairings give two
    (m+2) x (n+2) mosaics.  With no boundary points at all the two closures
    coincide (both are the plain empty-framed block).
    """
    if not _interior_ok(inner):
        raise MosaicError("inner block has mismatched interior edges")
    pts = boundary_points(inner)
    if len(pts) % 2 != 0:
        raise MosaicError("odd number of boundary connection points; no closure exists")
    if not pts:
        framed = _frame(inner, {})
        return framed, framed
    return _close(inner, 0), _close(inner, 1)


def _frame(inner: Mosaic, ring: dict) -> Mosaic:
    rows = inner.rows + 2
    cols = inner.cols + 2
    grid = [[0] * cols for _ in range(rows)]
    for i in range(inner.rows):
        for j in range(inner.cols):
            grid[i + 1][j + 1] = inner.grid[i][j]
    for (i, j), code in ring.items():
        grid[i][j] = code
    return Mosaic(tuple(tuple(r) for r in grid))


# Clockwise walk of the frame ring of an (r+2) x (c+2) mosaic.  For each
# ring cell we record the edges pointing to the previous/next ring cell and
# the edge facing the inner block (None on corners).
def _ring_walk(r: int, c: int):
    cells = []
    for j in range(c + 2):
        cells.append((0, j))
    for i in range(1, r + 2):
        cells.append((i, c + 1))
    for j in reversed(range(c + 1)):
        cells.append((r + 1, j))
    for i in reversed(range(1, r + 1)):
        cells.append((i, 0))
    walk = []
    n = len(cells)
    for k, (i, j) in enumerate(cells):
        pi, pj = cells[(k - 1) % n]
        ni, nj = cells[(k + 1) % n]

        def edge_to(ti, tj, i=i, j=j):
            if ti == i - 1:
                return "T"
            if ti == i + 1:
                return "B"
            if tj == j - 1:
                return "L"
            return "R"

        inner_edge = None
        if i == 0 and 1 <= j <= c:
            inner_edge = "B"
        elif i == r + 1 and 1 <= j <= c:
            inner_edge = "T"
        elif j == 0 and 1 <= i <= r:
            inner_edge = "R"
        elif j == c + 1 and 1 <= i <= r:
            inner_edge = "L"
        walk.append(((i, j), edge_to(pi, pj), edge_to(ni, nj), inner_edge))
    return walk


_EDGE_SETS_TO_CODE = {frozenset(connection_points(c)): c for c in (0, 1, 2, 3, 4, 5, 6)}


def _close(inner: Mosaic, phase: int) -> Mosaic:
    pts = boundary_points(inner)
    walk = _ring_walk(inner.rows, inner.cols)
    # Which ring cells face an inner boundary point.
    facing = {}
    for (i, j, edge) in pts:
        if edge == "T":
            facing[(0, j + 1)] = True
        elif edge == "B":
            facing[(inner.rows + 1, j + 1)] = True
        elif edge == "L":
            facing[(i + 1, 0)] = True
        else:
            facing[(i + 1, inner.cols + 1)] = True

    # Rotate the walk so it starts just after a facing cell; with phase 1
    # the strand initially runs along the ring (the wrap-around pairing).
    start = 0
    for k, (cell, _, _, _) in enumerate(walk):
        if cell in facing:
            start = (k + 1) % len(walk)
            break
    order = walk[start:] + walk[:start]
    carrying = bool(phase)
    ring = {}
    for cell, back_edge, fwd_edge, inner_edge in order:
        here = set()
        if carrying:
            here.add(back_edge)
        if cell in facing:
            here.add(inner_edge)
            carrying = not carrying
        if carrying:
            here.add(fwd_edge)
        code = _EDGE_SETS_TO_CODE.get(frozenset(here))
        if code is None:
            raise MosaicError(f"cannot realize ring cell {cell} with points {sorted(here)}")
        ring[cell] = code
    return _frame(inner, ring)
