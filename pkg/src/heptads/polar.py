"""The symplectic polar space W(2N-1, 2) of N-qubit Pauli classes.

Points are nonzero vectors (ints), subspaces are canonical row-reduced bases.
Everything defaults to three qubits, where the maximal totally isotropic
subspaces are the 135 heptads of pairwise commuting operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .gf2 import BitMatrix, rank, rref_canonical, span
from .pauli import label, parse_pauli, q0, sp

__all__ = [
    "IsotropicPlane",
    "Subspace",
    "Spread",
    "enumerate_points",
    "enumerate_subspaces",
    "enumerate_isotropic",
    "all_planes",
    "plane_index",
    "plane_from_labels",
    "perp_set",
    "classify_subspace",
    "quadric_points",
    "quadric_kind",
    "enumerate_spreads",
    "plane_incidence",
    "is_totally_isotropic",
]


@dataclass(frozen=True, order=True)
class Subspace:
    """A linear subspace given by its canonical (row-reduced) basis.

    Ordering and equality follow the packed basis, so sorting a collection of
    subspaces is deterministic.
    """

    key: int
    basis: BitMatrix = field(compare=False)
    width: int = field(compare=False, default=3)

    @classmethod
    def from_vectors(cls, vectors: Iterable[int], width: int = 3, dim: int | None = None):
        vs = [v for v in vectors if v]
        if not vs:
            raise ValueError("no nonzero vectors given")
        m = BitMatrix(vs, 2 * width)
        r = rank(m)
        if dim is not None and r != dim:
            raise ValueError(f"vectors span dimension {r}, expected {dim}")
        red = rref_canonical(m)
        basis = BitMatrix(red.rows[:r], 2 * width)
        return cls(basis.pack(), basis, width)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def points(self) -> tuple[int, ...]:
        return _points_of(self.basis.rows)

    @property
    def point_set(self) -> frozenset[int]:
        return frozenset(self.points)

    def labels(self) -> list[str]:
        return [label(p, self.width) for p in self.points]

    def __contains__(self, v: int) -> bool:
        return v in self.point_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def transform(self, g: BitMatrix) -> "Subspace":
        """Image under right multiplication of every basis row by ``g``."""
        return type(self).from_vectors((g.apply(r) for r in self.basis.rows), self.width, self.dim)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


@lru_cache(maxsize=None)
def _points_of(rows: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(span(rows) - {0}))


class IsotropicPlane(Subspace):
    """A totally isotropic 3-space: seven pairwise commuting operators."""

    def lines(self) -> list[tuple[int, int, int]]:
        pts = self.points
        out = set()
        for u, v in combinations(pts, 2):
            out.add(tuple(sorted((u, v, u ^ v))))
        return sorted(out)


def is_totally_isotropic(vectors: Iterable[int], width: int = 3) -> bool:
    vs = list(vectors)
    return all(sp(u, v, width) == 0 for u, v in combinations(vs, 2))


def enumerate_points(width: int = 3) -> list[int]:
    return list(range(1, 1 << (2 * width)))


def _rref_bases(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Every k x n reduced row echelon basis of rank k, in a fixed order."""
    for pivots in combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n) if j not in pivots]
        for vals in product((0, 1), repeat=len(free)):
            rows = [1 << (n - 1 - p) for p in pivots]
            for (i, j), x in zip(free, vals):
                if x:
                    rows[i] |= 1 << (n - 1 - j)
            yield tuple(rows)


def enumerate_subspaces(dim: int, width: int = 3) -> list[Subspace]:
    """All ``dim``-dimensional subspaces of GF(2)^(2*width), sorted."""
    n = 2 * width
    out = [Subspace(BitMatrix(r, n).pack(), BitMatrix(r, n), width) for r in _rref_bases(n, dim)]
    out.sort()
    return out


def enumerate_isotropic(dim: int, width: int = 3) -> list:
    """Totally isotropic subspaces of the given dimension.

    ``dim=1`` returns the points as ints; higher dimensions return sorted
    :class:`Subspace` (or :class:`IsotropicPlane` for ``dim=3``) values.
    """
    if dim == 1:
        return enumerate_points(width)
    if dim < 1 or dim > width:
        raise ValueError(f"dimension must be in 1..{width}")
    n = 2 * width
    cls = IsotropicPlane if dim == 3 else Subspace
    out = []
    for rows in _rref_bases(n, dim):
        if is_totally_isotropic(rows, width):
            m = BitMatrix(rows, n)
            out.append(cls(m.pack(), m, width))
    out.sort()
    return out


@lru_cache(maxsize=None)
def all_planes() -> tuple[IsotropicPlane, ...]:
    """The 135 heptads of three-qubit W(5,2), sorted."""
    return tuple(enumerate_isotropic(3, 3))


@lru_cache(maxsize=None)
def _plane_lookup() -> dict[int, int]:
    return {p.key: i for i, p in enumerate(all_planes())}


def plane_index(p: Subspace) -> int:
    return _plane_lookup()[p.key]


def plane_from_labels(labels: Sequence[str] | str) -> IsotropicPlane:
    """Heptad spanned by the given three-qubit operator labels."""
    if isinstance(labels, str):
        labels = [x for x in labels.replace(" ", "").split(",") if x]
    vs = [parse_pauli(x, 3).vector for x in labels]
    if not is_totally_isotropic(vs):
        raise ValueError("operators do not pairwise commute")
    p = IsotropicPlane.from_vectors(vs, 3)
    if p.dim != 3:
        raise ValueError(f"operators span dimension {p.dim}, not a plane")
    return p


def as_plane(p: Subspace) -> IsotropicPlane:
    if isinstance(p, IsotropicPlane):
        return p
    if p.dim != 3 or not is_totally_isotropic(p.basis.rows, p.width):
        raise ValueError("subspace is not a totally isotropic plane")
    return IsotropicPlane(p.key, p.basis, p.width)


def perp_set(vectors: Iterable[int], width: int = 3) -> frozenset[int]:
    """Vectors (zero included) orthogonal to every element of ``vectors``."""
    vs = list(vectors)
    return frozenset(
        x for x in range(1 << (2 * width)) if all(sp(w, x, width) == 0 for w in vs)
    )


def classify_subspace(vectors: Iterable[int], width: int = 3) -> str:
    """'non-isotropic', 'isotropic' or 'totally isotropic' for the span of ``vectors``."""
    w = span(vectors)
    perp = perp_set(w, width)
    if w <= perp:
        return "totally isotropic"
    if (w & perp) - {0}:
        return "isotropic"
    return "non-isotropic"


def quadric_kind(w: int, width: int) -> str:
    return "hyperbolic" if q0(w, width) == 0 else "elliptic"


def quadric_points(w: int = 0, width: int = 3) -> frozenset[int]:
    """Nonzero zeros of ``Q_w``; see :func:`quadric_kind` for its type."""
    return frozenset(
        v for v in range(1, 1 << (2 * width)) if q0(v, width) ^ sp(w, v, width) == 0
    )


def plane_incidence(p: Subspace, q: Subspace) -> str:
    n = len(p.point_set & q.point_set)
    return {0: "disjoint", 1: "point", 3: "line", 7: "equal"}[n]


@dataclass(frozen=True, order=True)
class Spread:
    """Nine pairwise disjoint heptads covering all 63 points."""

    planes: tuple[IsotropicPlane, ...]

    def __post_init__(self):
        if len(self.planes) != 9:
            raise ValueError("a spread has nine planes")
        seen: set[int] = set()
        for p in self.planes:
            if seen & p.point_set:
                raise ValueError("spread planes are not pairwise disjoint")
            seen |= p.point_set
        if len(seen) != 63:
            raise ValueError("spread does not cover all 63 points")

    @classmethod
    def of(cls, planes: Iterable[IsotropicPlane]) -> "Spread":
        return cls(tuple(sorted(planes)))


def enumerate_spreads() -> list[Spread]:
    """All partitions of the 63 points into nine heptads (exact cover).

    Branches on the lowest uncovered point, candidates in plane order.
    """
    planes = all_planes()
    masks = [sum(1 << (v - 1) for v in p.points) for p in planes]
    by_point: list[list[int]] = [[] for _ in range(63)]
    for i, m in enumerate(masks):
        for k in range(63):
            if m >> k & 1:
                by_point[k].append(i)
    full = (1 << 63) - 1
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def search(covered: int) -> None:
        if covered == full:
            found.append(tuple(chosen))
            return
        free = ~covered & full
        k = (free & -free).bit_length() - 1
        for i in by_point[k]:
            if masks[i] & covered == 0:
                chosen.append(i)
                search(covered | masks[i])
                chosen.pop()

    search(0)
    return sorted(Spread(tuple(planes[i] for i in sorted(sol))) for sol in found)
