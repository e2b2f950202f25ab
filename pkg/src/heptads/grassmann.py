"""Pluecker coordinates of planes and the heptad <-> four-qubit bijection.

A 3-space of GF(2)^6 maps to the 20 minors ``P[mu nu rho]`` of any 3x6 basis.
Arranged as ``(m, M, N, n)``, the minors of a totally isotropic plane have
symmetric ``M`` and ``N``; the eight coordinates

    (P123, P156, P246, P345, P456, P234, P135, P126) = (a1 a2 a3 a4 b1 b2 b3 b4)

then read as a symmetric four-qubit Pauli class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .gf2 import BitMatrix, det_adjugate3, minor, rank
from .pauli import label, parse_pauli, q0, sp
from .polar import IsotropicPlane, Spread, Subspace, all_planes, is_totally_isotropic

__all__ = [
    "TRIPLES",
    "FOUR_QUBIT_TRIPLES",
    "PluckerPoint",
    "plucker_embed",
    "check_separable",
    "check_primitive",
    "ambient_forms",
    "count_separable",
    "plane_to_four_qubit",
    "four_qubit_to_plane",
    "four_qubit_label",
    "check_equivariance",
    "spread_to_clifford9",
    "bijection_table",
]

# column triples (1-based), lexicographic; coordinate t lives in bit 19 - t
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(combinations(range(1, 7), 3))
_POS = {t: i for i, t in enumerate(TRIPLES)}

_M_LAYOUT = ((156, 256, 356), (146, 246, 346), (145, 245, 345))
_N_LAYOUT = ((234, 235, 236), (134, 135, 136), (124, 125, 126))

FOUR_QUBIT_TRIPLES = (123, 156, 246, 345, 456, 234, 135, 126)


def _triple(code: int) -> tuple[int, int, int]:
    t = tuple(sorted(int(c) for c in str(code)))
    if t not in _POS:
        raise KeyError(code)
    return t  # type: ignore[return-value]


@dataclass(frozen=True, order=True)
class PluckerPoint:
    """A trivector of GF(2)^6 given by its 20 coordinates."""

    coords: int

    def __post_init__(self):
        if not 0 <= self.coords < 1 << 20:
            raise ValueError("Pluecker coordinates need 20 bits")

    @classmethod
    def from_dict(cls, values: dict) -> "PluckerPoint":
        c = 0
        for key, bit in values.items():
            if bit & 1:
                c |= 1 << (19 - _POS[_triple(key)])
        return cls(c)

    def __getitem__(self, key) -> int:
        """Coordinate by triple, e.g. ``p[156]`` or ``p[(1, 5, 6)]``."""
        t = tuple(sorted(key)) if isinstance(key, tuple) else _triple(key)
        return (self.coords >> (19 - _POS[t])) & 1

    def four_tuple(self) -> tuple[int, BitMatrix, BitMatrix, int]:
        m = self[123]
        M = BitMatrix.from_lists([[self[x] for x in row] for row in _M_LAYOUT])
        N = BitMatrix.from_lists([[self[x] for x in row] for row in _N_LAYOUT])
        n = self[456]
        return m, M, N, n

    def four_qubit(self) -> int:
        """The eight spin-module coordinates as a four-qubit vector."""
        v = 0
        for t in FOUR_QUBIT_TRIPLES:
            v = (v << 1) | self[t]
        return v

    def __str__(self) -> str:
        return format(self.coords, "020b")


def plucker_embed(basis: BitMatrix | Subspace | Sequence[int]) -> PluckerPoint:
    """All 3x3 minors of a rank-3 basis of three 6-bit rows."""
    if isinstance(basis, Subspace):
        rows = basis.basis.rows
    elif isinstance(basis, BitMatrix):
        rows = basis.rows
    else:
        rows = tuple(basis)
    if len(rows) != 3 or rank(BitMatrix(rows, 6)) != 3:
        raise ValueError("Pluecker embedding needs three independent rows")
    c = 0
    for i, t in enumerate(TRIPLES):
        if minor(rows, 6, [x - 1 for x in t]):
            c |= 1 << (19 - i)
    return PluckerPoint(c)


def check_separable(p: PluckerPoint, three_relations: bool = False) -> bool:
    """Quadratic Pluecker relations in matrix form.

    ``mM = N#``, ``nN = M#`` and ``MN = NM = mn I``.  The relations without
    ``NM = mn I`` (``three_relations=True``) are necessary but admit 588 extra
    trivectors over GF(2).
    """
    m, M, N, n = p.four_tuple()
    _, Madj = det_adjugate3(M)
    _, Nadj = det_adjugate3(N)
    zero = BitMatrix.zeros(3, 3)
    mn = BitMatrix.identity(3) if m & n else zero
    ok = (M if m else zero) == Nadj and (N if n else zero) == Madj and mn == M @ N
    return ok if three_relations else ok and mn == N @ M


def check_primitive(p: PluckerPoint) -> bool:
    _, M, N, _ = p.four_tuple()
    return M.is_symmetric() and N.is_symmetric()


def ambient_forms(p: PluckerPoint, q: PluckerPoint) -> tuple[int, int, int]:
    """Symplectic pairing of ``p`` and ``q`` and the quadratic form of each."""
    m, M, N, n = p.four_tuple()
    m2, M2, N2, n2 = q.four_tuple()
    b = (m & n2) ^ (n & m2) ^ (M @ N2 + N @ M2).trace()
    return b, (m & n) ^ (M @ N).trace(), (m2 & n2) ^ (M2 @ N2).trace()


def count_separable(three_relations: bool = False) -> int:
    """Number of nonzero trivectors passing :func:`check_separable` (vectorised)."""
    c = np.arange(1, 1 << 20, dtype=np.uint32)

    def coord(code):
        return ((c >> np.uint32(19 - _POS[_triple(code)])) & 1).astype(np.uint8)

    m, n = coord(123), coord(456)
    M = [[coord(x) for x in row] for row in _M_LAYOUT]
    N = [[coord(x) for x in row] for row in _N_LAYOUT]

    def adj(A):
        out = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [x for x in range(3) if x != j]
                k = [x for x in range(3) if x != i]
                out[i][j] = (A[r[0]][k[0]] & A[r[1]][k[1]]) ^ (A[r[0]][k[1]] & A[r[1]][k[0]])
        return out

    Ma, Na = adj(M), adj(N)
    ok = np.ones(c.shape, dtype=bool)
    for i in range(3):
        for j in range(3):
            ok &= (m & M[i][j]) == Na[i][j]
            ok &= (n & N[i][j]) == Ma[i][j]
            diag = (m & n) if i == j else 0
            ok &= (M[i][0] & N[0][j] ^ M[i][1] & N[1][j] ^ M[i][2] & N[2][j]) == diag
            if not three_relations:
                ok &= (N[i][0] & M[0][j] ^ N[i][1] & M[1][j] ^ N[i][2] & M[2][j]) == diag
    return int(ok.sum())


def plane_to_four_qubit(p: Subspace) -> int:
    """Four-qubit vector labelling a heptad; always a symmetric class."""
    if p.dim != 3 or not is_totally_isotropic(p.basis.rows, p.width):
        raise ValueError("plane is not totally isotropic")
    return _image(p.basis.rows)


@lru_cache(maxsize=None)
def _image(rows: tuple[int, ...]) -> int:
    return plucker_embed(rows).four_qubit()


def four_qubit_label(v: int) -> str:
    return label(v, 4)


@lru_cache(maxsize=None)
def _inverse() -> dict[int, IsotropicPlane]:
    table = {plucker_embed(p).four_qubit(): p for p in all_planes()}
    if len(table) != 135:
        raise RuntimeError("four-qubit labels are not injective")
    return table


def four_qubit_to_plane(f: int | str) -> IsotropicPlane:
    """Heptad whose four-qubit label is ``f`` (a symmetric, nonzero class)."""
    v = parse_pauli(f, 4).vector if isinstance(f, str) else int(f)
    if v == 0 or v >> 8:
        raise ValueError("expected a nonzero four-qubit vector")
    if q0(v, 4):
        raise ValueError(f"{label(v, 4)} is antisymmetric; only symmetric classes label heptads")
    return _inverse()[v]


def check_equivariance(g6: BitMatrix, g8: BitMatrix) -> bool:
    """Does labelling commute with the pair of actions on all 135 heptads?"""
    for p in all_planes():
        if plane_to_four_qubit(p.transform(g6)) != g8.apply(plane_to_four_qubit(p)):
            return False
    return True


def spread_to_clifford9(s: Spread) -> list[int]:
    """Four-qubit labels of a spread: nine pairwise anticommuting symmetric classes."""
    if not isinstance(s, Spread):
        s = Spread.of(s)
    out = [plane_to_four_qubit(p) for p in s.planes]
    for u, v in combinations(out, 2):
        if sp(u, v, 4) != 1:
            raise RuntimeError("spread images do not pairwise anticommute")
    return out


def bijection_table() -> list[dict]:
    """One row per heptad: its operators, Clifford labels and four-qubit label."""
    from .clifford7 import label_of

    rows = []
    for p in all_planes():
        rows.append(
            {
                "plane": p.labels(),
                "clifford": [str(label_of(v)) for v in p.points],
                "four_qubit": four_qubit_label(plane_to_four_qubit(p)),
            }
        )
    return rows
