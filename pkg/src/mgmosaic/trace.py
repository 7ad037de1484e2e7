"""Arc extraction and component tracing for suitably connected mosaics.

Arcs are maximal strand segments: they pass straight through crossings on
the over-strand, and terminate at marked vertices and at undercrossing
points.  Components glue straight through every 4-point tile (T-B, L-R),
matching the usual count of diagram components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import tiles
from .mosaic import Mosaic, validate


class TraceError(ValueError):
    """Raised when tracing a mosaic that is not suitably connected."""


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        p = self.parent
        while p[x] != x:
            x, p[x] = p[x], p[p[x]]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # Keep the lexicographically smaller root for determinism.
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass(frozen=True)
class Crossing:
    pos: tuple          # (i, j)
    over: int           # arc id passing over
    under_in: int       # the two under-strand arc ids; order is by edge
    under_out: int


@dataclass(frozen=True)
class MarkedVertex:
    pos: tuple          # (i, j)
    arcs: tuple         # arc ids at edges (T, R, B, L)


@dataclass(frozen=True)
class StrandStructure:
    arcs: tuple          # arc id -> sorted tuple of (i, j, edge) points
    arc_of: dict = field(hash=False, compare=False, default_factory=dict)
    crossings: tuple = ()
    marked: tuple = ()
    components: int = 0
    closed_arcs: tuple = ()   # ids of arcs with no endpoints (circles)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)


_EDGE_ORDER = {"T": 0, "R": 1, "B": 2, "L": 3}


def _glue_pairs(m: Mosaic):
    """Pairs of coincident connection points across shared edges."""
    out = []
    for i, j, code in m:
        if tiles.has_point(code, "R") and j + 1 < m.cols:
            out.append(((i, j, "R"), (i, j + 1, "L")))
        if tiles.has_point(code, "B") and i + 1 < m.rows:
            out.append(((i, j, "B"), (i + 1, j, "T")))
    return out


def _arc_pairings(code: int):
    """Within-tile joins for arc purposes: under-strands break at crossings,
    all strands break at marked vertices."""
    if code in tiles.MARKED_TILES:
        return ()
    if code == tiles.CROSS_VOVER:
        return (("T", "B"),)
    if code == tiles.CROSS_HOVER:
        return (("L", "R"),)
    return tiles.pairings(code)


def trace(m: Mosaic) -> StrandStructure:
    """Compute the strand structure of a suitably connected mosaic."""
    ok, failures = validate(m)
    if not ok:
        raise TraceError(f"mosaic is not suitably connected: {failures[:4]}")

    points = [(i, j, e) for i, j, code in m for e in tiles.EDGES
              if tiles.has_point(code, e)]
    arcs_uf = _UnionFind()
    comp_uf = _UnionFind()
    for p in points:
        arcs_uf.add(p)
        comp_uf.add(p)

    glue = _glue_pairs(m)
    for a, b in glue:
        arcs_uf.union(a, b)
        comp_uf.union(a, b)

    endpoint = set()
    for i, j, code in m:
        for e1, e2 in _arc_pairings(code):
            arcs_uf.union((i, j, e1), (i, j, e2))
        # Components pass straight through every tile, including crossings
        # and marked vertices (T-B, L-R).
        for e1, e2 in tiles.pairings(code):
            comp_uf.union((i, j, e1), (i, j, e2))
        if code in tiles.MARKED_TILES:
            endpoint.update((i, j, e) for e in tiles.EDGES)
        elif code == tiles.CROSS_VOVER:
            endpoint.add((i, j, "L"))
            endpoint.add((i, j, "R"))
        elif code == tiles.CROSS_HOVER:
            endpoint.add((i, j, "T"))
            endpoint.add((i, j, "B"))

    def sort_key(p):
        return (p[0], p[1], _EDGE_ORDER[p[2]])

    groups = {}
    for p in points:
        groups.setdefault(arcs_uf.find(p), []).append(p)
    arc_list = sorted((sorted(g, key=sort_key) for g in groups.values()),
                      key=lambda g: sort_key(g[0]))
    arc_of = {}
    for aid, group in enumerate(arc_list):
        for p in group:
            arc_of[p] = aid

    closed = tuple(aid for aid, group in enumerate(arc_list)
                   if not any(p in endpoint for p in group))

    crossings = []
    marked = []
    for i, j, code in m:
        if code in tiles.CROSSING_TILES:
            if code == tiles.CROSS_VOVER:
                over = arc_of[(i, j, "T")]
                u1, u2 = arc_of[(i, j, "L")], arc_of[(i, j, "R")]
            else:
                over = arc_of[(i, j, "L")]
                u1, u2 = arc_of[(i, j, "T")], arc_of[(i, j, "B")]
            crossings.append(Crossing((i, j), over, u1, u2))
        elif code in tiles.MARKED_TILES:
            marked.append(MarkedVertex((i, j), tuple(arc_of[(i, j, e)]
                                                     for e in tiles.EDGES)))

    comps = len({comp_uf.find(p) for p in points})
    return StrandStructure(
        arcs=tuple(tuple(g) for g in arc_list),
        arc_of=arc_of,
        crossings=tuple(crossings),
        marked=tuple(marked),
        components=comps,
        closed_arcs=closed,
    )


def component_count(m: Mosaic) -> int:
    return trace(m).components
