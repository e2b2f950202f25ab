"""The split Cayley hexagon of order two inside the four-qubit quadric.

Points are the 63 symmetric four-qubit classes commuting with ``YIII``
(``Y (x) antisymmetric`` and ``I (x) symmetric``).  Lines are quadric lines,
built as the orbit of one known line under the G2(2) generated by R(alpha)
and R(gamma).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .pauli import label, parse_pauli, q0, sp
from .grassmann import four_qubit_to_plane
from .spgroup import R_ALPHA, R_GAMMA, orbit

__all__ = [
    "YIII",
    "SEED_LINE",
    "IncidenceStructure",
    "HexagonReport",
    "hexagon_points",
    "quadric_lines",
    "hexagon_lines",
    "verify_generalized_hexagon",
    "classify_quadric_line",
    "pencil_line",
    "elliptic_split",
]

YIII = 0b10001000
SEED_LINE = ("IXIX", "IIZI", "IXZX")

Line = tuple[int, int, int]


@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple[int, ...]
    lines: tuple[tuple[int, int, int], ...]  # index triples into points

    @classmethod
    def from_triples(cls, points, triples) -> "IncidenceStructure":
        points = tuple(sorted(points))
        pos = {p: i for i, p in enumerate(points)}
        lines = []
        for t in triples:
            if len(set(t)) != 3:
                raise ValueError("a line needs three distinct points")
            lines.append(tuple(sorted(pos[v] for v in t)))
        return cls(points, tuple(sorted(lines)))

    def flags(self) -> list[tuple[int, int]]:
        return [(p, i) for i, line in enumerate(self.lines) for p in line]

    def line_vectors(self) -> list[Line]:
        return [tuple(self.points[i] for i in line) for line in self.lines]  # type: ignore[misc]

    def graph(self) -> nx.Graph:
        """Bipartite incidence graph; nodes ``("p", i)`` and ``("l", j)``."""
        g = nx.Graph()
        g.add_nodes_from(("p", i) for i in range(len(self.points)))
        g.add_nodes_from(("l", j) for j in range(len(self.lines)))
        g.add_edges_from((("p", p), ("l", j)) for p, j in self.flags())
        return g

    def to_dict(self) -> dict:
        return {
            "points": [label(v, 4) for v in self.points],
            "lines": [list(line) for line in self.lines],
        }


def _is_hexagon_point(v: int) -> bool:
    return v != 0 and q0(v, 4) == 0 and sp(v, YIII, 4) == 0


def hexagon_points() -> list[int]:
    return [v for v in range(1, 256) if _is_hexagon_point(v)]


def _line(vs) -> Line:
    return tuple(sorted(vs))  # type: ignore[return-value]


def quadric_lines(points=None) -> list[Line]:
    """Totally singular lines of the four-qubit quadric, optionally within ``points``."""
    pts = sorted(points) if points is not None else [v for v in range(1, 256) if q0(v, 4) == 0]
    allowed = set(pts)
    out = set()
    for u, v in combinations(pts, 2):
        w = u ^ v
        if sp(u, v, 4) == 0 and w in allowed:
            out.add(_line((u, v, w)))
    return sorted(out)


def _act(t: Line, g) -> Line:
    return _line(g.apply(v) for v in t)


@dataclass
class HexagonReport:
    points: int
    lines: int
    points_per_line: bool
    lines_per_point: bool
    connected: bool
    girth: int | None
    diameter: int | None

    @property
    def ok(self) -> bool:
        return self.failures() == []

    def failures(self) -> list[str]:
        out = []
        if self.points != 63:
            out.append(f"{self.points} points")
        if self.lines != 63:
            out.append(f"{self.lines} lines")
        if not self.points_per_line:
            out.append("a line without exactly 3 points")
        if not self.lines_per_point:
            out.append("a point not on exactly 3 lines")
        if not self.connected:
            out.append("incidence graph disconnected")
        if self.girth != 12:
            out.append(f"girth {self.girth}")
        if self.diameter != 6:
            out.append(f"diameter {self.diameter}")
        return out


def verify_generalized_hexagon(s: IncidenceStructure) -> HexagonReport:
    """Order (2, 2) generalized hexagon axioms on the incidence graph."""
    g = s.graph()
    degrees = [0] * len(s.points)
    for p, _ in s.flags():
        degrees[p] += 1
    connected = g.number_of_nodes() > 0 and nx.is_connected(g)
    girth = nx.girth(g)
    return HexagonReport(
        points=len(s.points),
        lines=len(s.lines),
        points_per_line=all(len(set(line)) == 3 for line in s.lines),
        lines_per_point=all(d == 3 for d in degrees),
        connected=connected,
        girth=None if girth == float("inf") else int(girth),
        diameter=nx.diameter(g) if connected else None,
    )


class HexagonConstructionError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def hexagon_lines() -> IncidenceStructure:
    """The 63 hexagon lines, checked against the axioms before returning."""
    pts = hexagon_points()
    seed = _line(parse_pauli(x, 4).vector for x in SEED_LINE)
    gens = [R_ALPHA, R_GAMMA]
    lines = orbit(gens, seed, _act)
    if len(lines) == 63 and set(v for t in lines for v in t) <= set(pts):
        s = IncidenceStructure.from_triples(pts, lines)
        if verify_generalized_hexagon(s).ok:
            return s
    # fall back: search the G2(2)-orbits of quadric lines on the 63 points
    remaining = set(quadric_lines(pts))
    while remaining:
        t = min(remaining)
        o = orbit(gens, t, _act)
        remaining -= set(o)
        if len(o) == 63:
            s = IncidenceStructure.from_triples(pts, o)
            if verify_generalized_hexagon(s).ok:
                return s
    raise HexagonConstructionError("no line orbit of size 63 satisfies the hexagon axioms")


def _check_quadric_line(vs: list[int]) -> None:
    if len(vs) != 3 or len(set(vs)) != 3 or 0 in vs:
        raise ValueError("a quadric line has three distinct nonzero points")
    if vs[0] ^ vs[1] ^ vs[2]:
        raise ValueError("the three points do not sum to zero")
    if any(sp(u, v, 4) for u, v in combinations(vs, 2)):
        raise ValueError("the three points do not pairwise commute")
    if any(q0(v, 4) for v in vs):
        raise ValueError("a point is off the quadric (antisymmetric)")


def _vectors(t) -> list[int]:
    return [parse_pauli(x, 4).vector if isinstance(x, str) else int(x) for x in t]


def classify_quadric_line(t) -> str:
    """``"pencil"`` if the three heptads share a line, ``"plane_star"`` if only a point."""
    vs = _vectors(t)
    _check_quadric_line(vs)
    a, b, c = (four_qubit_to_plane(v).point_set for v in vs)
    common = a & b & c
    if len(common) == 3:
        return "pencil"
    if len(common) == 1:
        return "plane_star"
    raise RuntimeError(f"three heptads of a quadric line meet in {len(common)} points")


def pencil_line(t) -> tuple[int, ...]:
    """Common points of the three heptads of a quadric line (sorted)."""
    vs = _vectors(t)
    _check_quadric_line(vs)
    a, b, c = (four_qubit_to_plane(v).point_set for v in vs)
    return tuple(sorted(a & b & c))


def elliptic_split(w: int | str = YIII) -> tuple[list[int], list[int]]:
    """Zero set of ``Q_w`` on four qubits, split into symmetric and antisymmetric classes.

    Symmetric points commute with ``w``, antisymmetric ones anticommute.
    """
    if isinstance(w, str):
        w = parse_pauli(w, 4).vector
    if w == 0 or q0(w, 4) == 0:
        raise ValueError("w must be antisymmetric; symmetric w gives a hyperbolic quadric")
    sym, anti = [], []
    for v in range(1, 256):
        if q0(v, 4) ^ sp(w, v, 4):
            continue
        (anti if q0(v, 4) else sym).append(v)
    return sym, anti
