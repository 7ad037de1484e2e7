"""Finite kei (involutory quandles) and mosaic coloring invariants.

A kei is a set with a binary operation * satisfying
    (i)   x * x = x
    (ii)  (x * y) * y = x
    (iii) (x * y) * z = (x * z) * (y * z)

Colorings assign kei elements to the arcs of a mosaic so that passing
under a strand of color y turns x into x * y, and all arcs meeting a
marked vertex share one color.  The number of colorings is the kei
counting invariant of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .mosaic import Mosaic
from .trace import StrandStructure, trace


class KeiError(ValueError):
    """Raised for tables that fail the kei axioms or are malformed."""


@dataclass(frozen=True)
class Kei:
    table: tuple                      # table[x][y] = x * y
    names: tuple = None

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def elements(self):
        return range(self.size)


def validate_kei(table) -> Kei:
    """Check the kei axioms; raise KeiError with the first witness found.

    Witnesses are searched in lexicographic order of (x,), (x, y),
    (x, y, z) so failures are deterministic.
    """
    rows = tuple(tuple(r) for r in table)
    k = len(rows)
    if k == 0:
        raise KeiError("empty table")
    for x, row in enumerate(rows):
        if len(row) != k:
            raise KeiError(f"table is not square: row {x} has {len(row)} entries")
        for y, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < k:
                raise KeiError(f"entry ({x},{y}) out of range: {v!r}")
    for x in range(k):
        if rows[x][x] != x:
            raise KeiError(f"idempotence fails: {x}*{x} = {rows[x][x]}")
    for x in range(k):
        for y in range(k):
            if rows[rows[x][y]][y] != x:
                raise KeiError(
                    f"involution fails: ({x}*{y})*{y} = {rows[rows[x][y]][y]}")
    for x in range(k):
        for y in range(k):
            for z in range(k):
                lhs = rows[rows[x][y]][z]
                rhs = rows[rows[x][z]][rows[y][z]]
                if lhs != rhs:
                    raise KeiError(
                        f"self-distributivity fails at ({x},{y},{z}): "
                        f"{lhs} != {rhs}")
    return Kei(rows)


def core_kei(group_table) -> Kei:
    """Core kei of a finite group given by its multiplication table:
    x * y = y x^{-1} y."""
    g = tuple(tuple(r) for r in group_table)
    n = len(g)
    ident = None
    for e in range(n):
        if all(g[e][x] == x == g[x][e] for x in range(n)):
            ident = e
            break
    if ident is None:
        raise KeiError("not a group: no identity element")
    inv = [None] * n
    for x in range(n):
        for y in range(n):
            if g[x][y] == ident:
                inv[x] = y
                break
        if inv[x] is None:
            raise KeiError(f"not a group: {x} has no inverse")
    table = [[g[g[y][inv[x]]][y] for y in range(n)] for x in range(n)]
    return validate_kei(table)


def core_kei_cyclic(n: int) -> Kei:
    """Core kei of Z_n: x * y = (2y - x) mod n."""
    if n < 1:
        raise KeiError("cyclic group order must be positive")
    table = tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n))
    return Kei(table)


def subkei_generated(kei: Kei, seed) -> frozenset:
    """Smallest subset containing seed and closed under * (both slots)."""
    current = set(seed)
    frontier = list(current)
    while frontier:
        nxt = []
        for x in list(current):
            for y in frontier:
                for v in (kei.op(x, y), kei.op(y, x)):
                    if v not in current:
                        current.add(v)
                        nxt.append(v)
        frontier = nxt
    return frozenset(current)


@dataclass(frozen=True)
class Coloring:
    assignment: tuple    # arc id -> kei element

    def colors_used(self) -> frozenset:
        return frozenset(self.assignment)


def _constraints(s: StrandStructure):
    """Equations over arc ids: crossing relations and marker equalities."""
    eqs = []
    for c in s.crossings:
        eqs.append(("cross", c.under_in, c.over, c.under_out))
    for mv in s.marked:
        first = mv.arcs[0]
        for a in mv.arcs[1:]:
            if a != first:
                eqs.append(("equal", first, a))
    return eqs


def colorings(m: Mosaic, kei: Kei, structure: StrandStructure = None):
    """All kei colorings of the mosaic, in deterministic order.

    Backtracking over arcs in trace order, colors tried in ascending
    element order; a constraint is checked as soon as all its arcs are
    colored.
    """
    s = structure if structure is not None else trace(m)
    n_arcs = s.arc_count
    if n_arcs == 0:
        return []
    eqs = _constraints(s)
    by_arc = [[] for _ in range(n_arcs)]
    for eq in eqs:
        arcs = eq[1:]
        latest = max(arcs)
        by_arc[latest].append(eq)

    out = []
    assign = [None] * n_arcs

    def ok(eq) -> bool:
        if eq[0] == "cross":
            _, uin, over, uout = eq
            return kei.op(assign[uin], assign[over]) == assign[uout]
        _, a, b = eq
        return assign[a] == assign[b]

    def rec(arc: int):
        if arc == n_arcs:
            out.append(Coloring(tuple(assign)))
            return
        for color in kei.elements():
            assign[arc] = color
            if all(ok(eq) for eq in by_arc[arc]):
                rec(arc + 1)
        assign[arc] = None

    rec(0)
    return out


def counting_invariant(m: Mosaic, kei: Kei) -> int:
    return len(colorings(m, kei))


def deficiency(c: Coloring, kei: Kei) -> int:
    """|subkei generated by the used colors| - |used colors|."""
    used = c.colors_used()
    return len(subkei_generated(kei, used)) - len(used)


@dataclass(frozen=True)
class DeficiencyPolynomial:
    coeffs: tuple    # coeffs[k] = number of colorings with deficiency k

    def __str__(self):
        terms = []
        for exp, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if exp == 0:
                terms.append(str(c))
            elif exp == 1:
                terms.append(f"{c} u")
            else:
                terms.append(f"{c} u^{exp}")
        return " + ".join(terms) if terms else "0"

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def as_multiset(self):
        out = []
        for exp, c in enumerate(self.coeffs):
            out.extend([exp] * c)
        return out


def polynomial_from_deficiencies(values) -> DeficiencyPolynomial:
    if not values:
        return DeficiencyPolynomial(())
    top = max(values)
    coeffs = [0] * (top + 1)
    for v in values:
        coeffs[v] += 1
    return DeficiencyPolynomial(tuple(coeffs))


def deficiency_polynomial(m: Mosaic, kei: Kei) -> DeficiencyPolynomial:
    """Sum of u^deficiency over all colorings of this diagram.

    This is a per-diagram quantity; under the lexicographic order it is an
    upper bound for the corresponding surface-link invariant.
    """
    s = trace(m)
    vals = [deficiency(c, kei) for c in colorings(m, kei, s)]
    return polynomial_from_deficiencies(vals)


def compare_lex(p: DeficiencyPolynomial, q: DeficiencyPolynomial) -> int:
    """-1, 0, or 1: compare constant terms first, then linear, and so on."""
    n = max(len(p.coeffs), len(q.coeffs))
    for k in range(n):
        a = p.coeffs[k] if k < len(p.coeffs) else 0
        b = q.coeffs[k] if k < len(q.coeffs) else 0
        if a != b:
            return -1 if a < b else 1
    return 0


def parse_kei_file(text: str) -> Kei:
    """Kei table format: first line k, then k rows of k integers."""
    lines = [ln for ln in (l.strip() for l in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise KeiError("empty kei file")
    try:
        k = int(lines[0])
    except ValueError:
        raise KeiError(f"bad size line: {lines[0]!r}")
    if len(lines) != k + 1:
        raise KeiError(f"expected {k} table rows, found {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        row = [int(t) for t in ln.split()]
        table.append(row)
    return validate_kei(table)
