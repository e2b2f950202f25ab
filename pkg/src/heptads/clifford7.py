"""Cliff(7) labels for the 63 nontrivial three-qubit classes.

Each class is, up to sign, a product of at most three of the seven
anticommuting generators below.  Labels are 7-bit masks (bit ``a-1`` for
generator ``a``); the product of all seven is the identity, so a subset of size
four or more is replaced by its complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .pauli import label, parse_pauli, q0
from .polar import IsotropicPlane, Subspace, all_planes, as_plane
from .spgroup import D_ALPHA, orbit

__all__ = [
    "GENERATOR_LABELS",
    "CliffordLabel",
    "label_of",
    "from_label",
    "alpha_orbits",
    "classify_plane",
    "planes_through",
    "plane_labels",
]

GENERATOR_LABELS = ("IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ")
_GEN_VECS = tuple(parse_pauli(g).vector for g in GENERATOR_LABELS)
_FULL = 0b1111111


@dataclass(frozen=True)
class CliffordLabel:
    """A reduced subset of {1..7} of size 1, 2 or 3."""

    mask: int

    def __post_init__(self):
        if not 0 < self.mask <= _FULL or bin(self.mask).count("1") > 3:
            raise ValueError(f"not a reduced label mask: {self.mask:#09b}")

    @classmethod
    def reduce(cls, mask: int) -> "CliffordLabel":
        mask &= _FULL
        if bin(mask).count("1") > 3:
            mask ^= _FULL
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> "CliffordLabel":
        """``"127"`` -> {1, 2, 7}; digits may repeat and cancel."""
        mask = 0
        for ch in text.strip():
            if ch not in "1234567":
                raise ValueError(f"bad generator index {ch!r} in {text!r}")
            mask ^= 1 << (int(ch) - 1)
        return cls.reduce(mask)

    @property
    def subset(self) -> tuple[int, ...]:
        return tuple(a for a in range(1, 8) if self.mask >> (a - 1) & 1)

    @property
    def size(self) -> int:
        return len(self.subset)

    def __mul__(self, other: "CliffordLabel") -> "CliffordLabel":
        return CliffordLabel.reduce(self.mask ^ other.mask)

    def shifted(self, k: int = 1) -> "CliffordLabel":
        """Apply ``a -> a + k (mod 7)`` to every index."""
        return CliffordLabel(sum(1 << ((a - 1 + k) % 7) for a in self.subset))

    def __str__(self) -> str:
        return "".join(str(a) for a in self.subset)

    def __lt__(self, other: "CliffordLabel") -> bool:
        return (self.size, self.subset) < (other.size, other.subset)


def from_label(lab: CliffordLabel | str) -> int:
    """Three-qubit vector of a label."""
    if isinstance(lab, str):
        lab = CliffordLabel.parse(lab)
    v = 0
    for a in lab.subset:
        v ^= _GEN_VECS[a - 1]
    return v


@lru_cache(maxsize=None)
def _table() -> dict[int, CliffordLabel]:
    out = {}
    for k in (1, 2, 3):
        for sub in combinations(range(7), k):
            lab = CliffordLabel(sum(1 << a for a in sub))
            out[from_label(lab)] = lab
    if len(out) != 63 or 0 in out:
        raise RuntimeError("Clifford labels are not a bijection onto the 63 classes")
    return out


def label_of(v: int | str) -> CliffordLabel:
    if isinstance(v, str):
        v = parse_pauli(v, 3).vector
    if v == 0:
        raise ValueError("the identity class has no Clifford label")
    return _table()[v]


def alpha_orbits() -> list[list[int]]:
    """The nine 7-cycles of the order-seven shift on the nonzero classes.

    Each cycle starts at its smallest label and follows ``v -> v D(alpha)``;
    cycles are ordered by their first label.
    """
    seen: set[int] = set()
    out = []
    for v in sorted(_table(), key=lambda x: _table()[x]):
        if v in seen:
            continue
        cyc = [v]
        w = D_ALPHA.apply(v)
        while w != v:
            cyc.append(w)
            w = D_ALPHA.apply(w)
        seen.update(cyc)
        out.append(cyc)
    return out


def plane_labels(p: Subspace) -> list[CliffordLabel]:
    return sorted(label_of(v) for v in p.points)


def classify_plane(p: Subspace) -> str:
    """'steiner' if all seven labels are triples, else 'mixed' (4 + 3 pattern)."""
    p = as_plane(p)
    sizes = sorted(label_of(v).size for v in p.points)
    if sizes == [3] * 7:
        return "steiner"
    n_anti = sum(q0(v, 3) for v in p.points)
    if n_anti != 4:
        raise RuntimeError(f"unexpected plane type with sizes {sizes}")
    return "mixed"


def planes_through(v: int | str) -> list[IsotropicPlane]:
    if isinstance(v, str):
        v = parse_pauli(v, 3).vector
    if v == 0:
        raise ValueError("every plane contains the zero vector")
    return [p for p in all_planes() if v in p.point_set]


def plane_alpha_orbits() -> list[list[IsotropicPlane]]:
    """Orbits of the 135 heptads under the shift, each sorted."""
    seen: set[IsotropicPlane] = set()
    out = []
    for p in all_planes():
        if p in seen:
            continue
        orb = orbit([D_ALPHA], p, "plane")
        seen.update(orb)
        out.append(orb)
    return out


def describe(v: int) -> str:
    return f"{label(v, 3)}={label_of(v)}"
