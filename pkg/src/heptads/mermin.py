"""Mermin pentagrams in W(5,2).

An edge is an affine plane of order two: a heptad with one of its lines
removed (four pairwise commuting classes summing to zero).  A pentagram is
five edges meeting pairwise in exactly one point, with ten distinct points.
It is magic when an odd number of its edges multiply to ``-III``.

Edge signs use the Hermitian Pauli representatives by default (``sigma_y``,
not the real ``ZX``): only with those is every pentagram's parity that of the
physical observables.  ``convention="real"`` multiplies the real sign-0
representatives instead.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .gf2 import BitMatrix
from .grassmann import four_qubit_label, four_qubit_to_plane, plane_to_four_qubit
from .pauli import hermitian_product_sign, label, parse_pauli, product_sign, q0, sp
from .polar import IsotropicPlane, all_planes

__all__ = [
    "AffineEdge",
    "Pentagram",
    "PentagramCensus",
    "PentadError",
    "SymmetricPentagram",
    "affine_edges",
    "edge_sign",
    "enumerate_pentagrams",
    "pentad_to_pentagram",
    "construct_symmetric_pentagrams",
    "pentagram_from_labels",
    "klein_quadric_stabilizer",
]

Edge = tuple[int, int, int, int]


@dataclass(frozen=True, order=True)
class AffineEdge:
    points: Edge
    parent: IsotropicPlane = field(compare=False)
    removed_line: tuple[int, int, int] = field(compare=False)

    @property
    def mask(self) -> int:
        return sum(1 << (v - 1) for v in self.points)

    def labels(self) -> list[str]:
        return [label(v, 3) for v in self.points]


def edge_sign(points: Sequence[int] | AffineEdge, convention: str = "hermitian") -> int:
    """1 if the four representatives multiply to ``-III``, else 0."""
    pts = points.points if isinstance(points, AffineEdge) else tuple(points)
    if convention == "hermitian":
        s, acc = hermitian_product_sign(pts, 3)
    elif convention == "real":
        s, acc = product_sign(pts, 3)
    else:
        raise ValueError(f"unknown sign convention {convention!r}")
    if acc != 0:
        raise ValueError("edge points do not multiply to the identity class")
    return s


@lru_cache(maxsize=None)
def affine_edges() -> tuple[AffineEdge, ...]:
    """All 945 affine planes (heptad minus a line), sorted by their points."""
    out: dict[Edge, AffineEdge] = {}
    for p in all_planes():
        pts = p.point_set
        for line in p.lines():
            e = tuple(sorted(pts - set(line)))
            out.setdefault(e, AffineEdge(e, p, line))
    return tuple(out[k] for k in sorted(out))


@dataclass(frozen=True, order=True)
class Pentagram:
    """Five edges, each a sorted 4-tuple of three-qubit vectors."""

    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, edges: Iterable[Iterable[int]]) -> "Pentagram":
        es = tuple(sorted(tuple(sorted(e)) for e in edges))
        if len(es) != 5 or any(len(e) != 4 for e in es):
            raise ValueError("a pentagram has five edges of four points")
        return cls(es)

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))

    def signs(self, convention: str = "hermitian") -> tuple[int, ...]:
        return tuple(edge_sign(e, convention) for e in self.edges)

    def negative_edges(self, convention: str = "hermitian") -> int:
        return sum(self.signs(convention))

    def is_magic(self, convention: str = "hermitian") -> bool:
        return self.negative_edges(convention) % 2 == 1

    def is_symmetric(self) -> bool:
        return all(q0(v, 3) == 0 for v in self.points)

    def check_incidence(self) -> list[str]:
        """Violated incidence conditions (empty when valid)."""
        problems = []
        sets = [set(e) for e in self.edges]
        for i, j in combinations(range(5), 2):
            if len(sets[i] & sets[j]) != 1:
                problems.append(f"edges {i} and {j} share {len(sets[i] & sets[j])} points")
        if len(self.points) != 10:
            problems.append(f"{len(self.points)} distinct points instead of 10")
        for e in self.edges:
            if any(sp(u, v, 3) for u, v in combinations(e, 2)):
                problems.append(f"edge {[label(v, 3) for v in e]} is not commuting")
            if e[0] ^ e[1] ^ e[2] ^ e[3]:
                problems.append(f"edge {[label(v, 3) for v in e]} does not sum to zero")
        return problems

    def transform(self, g: BitMatrix) -> "Pentagram":
        return Pentagram.of([[g.apply(v) for v in e] for e in self.edges])

    def to_dict(self) -> dict:
        return {
            "points": [label(v, 3) for v in self.points],
            "edges": [[label(v, 3) for v in e] for e in self.edges],
            "edge_signs": list(self.signs()),
            "magic": self.is_magic(),
        }


def pentagram_from_labels(edges: Iterable[Iterable[str]]) -> Pentagram:
    return Pentagram.of([[parse_pauli(x, 3).vector for x in e] for e in edges])


@dataclass
class PentagramCensus:
    magic: list[Pentagram]
    non_magic: list[Pentagram]

    @property
    def total(self) -> int:
        return len(self.magic) + len(self.non_magic)

    def symmetric(self) -> list[Pentagram]:
        return [p for p in self.magic if p.is_symmetric()]


def _edge_index():
    edges = affine_edges()
    masks = np.array([e.mask for e in edges], dtype=np.uint64)
    through: list[list[int]] = [[] for _ in range(63)]
    for i, e in enumerate(edges):
        for v in e.points:
            through[v - 1].append(i)
    indptr = np.zeros(64, dtype=np.int64)
    indptr[1:] = np.cumsum([len(t) for t in through])
    indices = np.array([i for t in through for i in t], dtype=np.int64)
    return edges, masks, indptr, indices


def enumerate_pentagrams(threads: int = 1) -> PentagramCensus:
    """Exhaustive search over the edge graph.

    Every configuration is found once, from its smallest edge: the other four
    edges pass through distinct points of that edge.  ``threads > 1`` splits
    the first-edge range across workers; the output order does not change.
    """
    edges, masks, indptr, indices = _edge_index()
    n = len(edges)
    if threads <= 1:
        hits = kernels.pentagram_search(masks, indptr, indices, 0, n)
    else:
        bounds = np.linspace(0, n, 4 * threads + 1).astype(int)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(
                lambda ab: kernels.pentagram_search(masks, indptr, indices, ab[0], ab[1]),
                zip(bounds[:-1], bounds[1:]),
            )
            hits = np.concatenate(list(parts), axis=0)
    found = sorted(Pentagram(tuple(edges[int(k)].points for k in row)) for row in hits)
    magic = [p for p in found if p.is_magic()]
    rest = [p for p in found if not p.is_magic()]
    return PentagramCensus(magic, rest)


class PentadError(ValueError):
    """A five-operator set that cannot label a pentagram."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


def _four_qubit_vectors(ops: Iterable[int | str]) -> list[int]:
    return [parse_pauli(x, 4).vector if isinstance(x, str) else int(x) for x in ops]


def pentad_to_pentagram(ops: Iterable[int | str]) -> Pentagram:
    """Pentagram cut out by the heptads of five symmetric four-qubit classes."""
    vs = _four_qubit_vectors(ops)
    problems = []
    if len(vs) != 5 or len(set(vs)) != 5:
        raise PentadError(["need five distinct operators"])
    for v in vs:
        if v == 0 or q0(v, 4):
            problems.append(f"{label(v, 4)} is not a nonzero symmetric class")
    for u, v in combinations(vs, 2):
        if sp(u, v, 4):
            problems.append(f"{label(u, 4)} and {label(v, 4)} anticommute")
    for t in combinations(vs, 3):
        if t[0] ^ t[1] ^ t[2] == 0:
            problems.append("collinear triple " + ",".join(label(v, 4) for v in t))
    total = 0
    for v in vs:
        total ^= v
    if total:
        problems.append(f"product is {label(total, 4)}, not IIII")
    if problems:
        raise PentadError(problems)
    planes = [four_qubit_to_plane(v).point_set for v in vs]
    edges = []
    for i, p in enumerate(planes):
        pts = []
        for j, q in enumerate(planes):
            if i != j:
                common = p & q
                if len(common) != 1:
                    raise PentadError([f"heptads {i} and {j} meet in {len(common)} points"])
                pts.extend(common)
        edges.append(pts)
    pg = Pentagram.of(edges)
    bad = pg.check_incidence()
    if bad:
        raise PentadError(bad)
    return pg


@dataclass(frozen=True)
class SymmetricPentagram:
    system: str
    family: str
    pentad: tuple[str, ...]
    pentagram: Pentagram


def _fano(letter: str) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Points and lines of the Fano plane of three-qubit classes built from I and ``letter``."""
    pts = sorted(
        parse_pauli("".join(letter if (k >> (2 - i)) & 1 else "I" for i in range(3))).vector
        for k in range(1, 8)
    )
    lines = sorted({tuple(sorted((u, v, u ^ v))) for u, v in combinations(pts, 2)})
    return pts, lines


def construct_symmetric_pentagrams() -> list[SymmetricPentagram]:
    """The 2 x 168 symmetric pentagrams from anti-flags and quadrangles.

    For each letter X (one system of Klein-quadric heptads) and Z (the other),
    with ``c (x) A`` meaning first-qubit letter ``c`` and three-qubit class ``A``:

    * anti-flag (point P, line {L1, L2, L3}): ``I P, c P`` plus either ``c`` on
      all three line points or ``c`` on exactly one of them (4 pentads);
    * quadrangle {Q1..Q4} (complement of a line): ``cIII`` plus the four
      points with ``I`` on exactly one and ``c`` on the rest, or ``c`` on
      exactly one and ``I`` on the rest (8 pentads).
    """
    out = []
    for c in ("X", "Z"):
        pts, lines = _fano(c)

        def op(first: str, v: int) -> str:
            return first + label(v, 3)

        special = c + "III"
        for line in lines:
            for p in pts:
                if p in line:
                    continue
                base = [op("I", p), op(c, p)]
                pentads = [base + [op(c, x) for x in line]]
                for k in range(3):
                    pentads.append(base + [op(c if i == k else "I", x) for i, x in enumerate(line)])
                for pd in pentads:
                    out.append(SymmetricPentagram(c, "anti-flag", tuple(pd), pentad_to_pentagram(pd)))
        for line in lines:
            quad = [p for p in pts if p not in line]
            for k in range(4):
                pd = [op("I" if i == k else c, x) for i, x in enumerate(quad)] + [special]
                out.append(SymmetricPentagram(c, "quadrangle", tuple(pd), pentad_to_pentagram(pd)))
            for k in range(4):
                pd = [op(c if i == k else "I", x) for i, x in enumerate(quad)] + [special]
                out.append(SymmetricPentagram(c, "quadrangle", tuple(pd), pentad_to_pentagram(pd)))
    return out


def klein_quadric_stabilizer() -> list[BitMatrix]:
    """The 336 matrices ``diag(A, A^-T)`` and ``J diag(A, A^-T)`` for A in GL(3,2)."""
    from .spgroup import symplectic_form

    mats = []
    for rows in np.ndindex(8, 8, 8):
        a = BitMatrix([int(r) for r in rows], 3)
        try:
            d = a.inverse().T
        except ZeroDivisionError:
            continue
        mats.append(BitMatrix([r << 3 for r in a.rows] + list(d.rows), 6))
    j = symplectic_form(3)
    return mats + [j @ m for m in mats]


def pentad_of(pg: Pentagram) -> tuple[str, ...] | None:
    """Four-qubit labels of the five heptads containing the edges, if all exist."""
    out = []
    for e in pg.edges:
        p = IsotropicPlane.from_vectors(e, 3)
        if p.dim != 3:
            return None
        out.append(four_qubit_label(plane_to_four_qubit(p)))
    return tuple(sorted(out))
