"""Real N-qubit Pauli operators in the symplectic encoding.

An operator ``(-1)^s Z^a1 X^b1 (x) ... (x) Z^aN X^bN`` is stored as the sign
bit ``s`` and the 2N-bit vector ``(a1..aN, b1..bN)`` (see :mod:`heptads.gf2`
for the bit order).  ``Y`` is the real matrix ``ZX``, so ``Y^2 = -I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2 import format_bits, parity

__all__ = [
    "PauliOperator",
    "parse_pauli",
    "format_pauli",
    "label",
    "vec",
    "multiply",
    "symplectic_product",
    "sp",
    "q0",
    "quadratic_form",
    "is_symmetric",
    "product_sign",
    "hermitian_product_sign",
]

_LETTER_TO_AB = {"I": (0, 0), "X": (0, 1), "Y": (1, 1), "Z": (1, 0)}
_AB_TO_LETTER = {v: k for k, v in _LETTER_TO_AB.items()}


def _split(v: int, n: int) -> tuple[int, int]:
    mask = (1 << n) - 1
    return v >> n, v & mask


@dataclass(frozen=True, order=True)
class PauliOperator:
    width: int
    vector: int
    sign: int = 0

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        if not 0 <= self.vector < (1 << (2 * self.width)):
            raise ValueError(f"vector {self.vector} out of range for width {self.width}")
        if self.sign not in (0, 1):
            raise ValueError("sign must be 0 or 1")

    @property
    def a(self) -> int:
        return self.vector >> self.width

    @property
    def b(self) -> int:
        return self.vector & ((1 << self.width) - 1)

    def bits(self) -> str:
        return format_bits(self.vector, 2 * self.width)

    def unsigned(self) -> "PauliOperator":
        return PauliOperator(self.width, self.vector, 0)

    def __neg__(self) -> "PauliOperator":
        return PauliOperator(self.width, self.vector, self.sign ^ 1)

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


def _check_width(x: PauliOperator, y: PauliOperator) -> None:
    if x.width != y.width:
        raise ValueError(f"width mismatch: {x.width} vs {y.width}")


def parse_pauli(text: str, width: int | None = None) -> PauliOperator:
    """Parse ``"XYZ"`` or ``"-XYZ"``.

    >>> parse_pauli("XYZ").bits()
    '(011110)'
    """
    if not isinstance(text, str):
        raise TypeError("label must be a string")
    s = text.strip()
    sign = 0
    if s.startswith("-"):
        sign, s = 1, s[1:]
    elif s.startswith("+"):
        s = s[1:]
    if not s:
        raise ValueError("empty operator label")
    bad = set(s) - set(_LETTER_TO_AB)
    if bad:
        raise ValueError(f"unknown letters {sorted(bad)} in {text!r}")
    n = len(s)
    if width is not None and n != width:
        raise ValueError(f"label {text!r} has width {n}, expected {width}")
    a = b = 0
    for ch in s:
        ai, bi = _LETTER_TO_AB[ch]
        a = (a << 1) | ai
        b = (b << 1) | bi
    return PauliOperator(n, (a << n) | b, sign)


def label(v: int, width: int) -> str:
    """Letter string of an up-to-sign class given as a bare vector."""
    a, b = _split(v, width)
    return "".join(
        _AB_TO_LETTER[((a >> (width - 1 - i)) & 1, (b >> (width - 1 - i)) & 1)]
        for i in range(width)
    )


def vec(text: str, width: int | None = None) -> int:
    """Vector of a label, sign ignored."""
    return parse_pauli(text, width).vector


def format_pauli(x: PauliOperator) -> str:
    return ("-" if x.sign else "") + label(x.vector, x.width)


def multiply(x: PauliOperator, y: PauliOperator) -> PauliOperator:
    """Exact signed product ``x y``.

    Moving ``Z^a'`` left past ``X^b`` costs ``(-1)^(a' b)`` on each qubit.
    """
    _check_width(x, y)
    s = x.sign ^ y.sign ^ parity(y.a & x.b)
    return PauliOperator(x.width, x.vector ^ y.vector, s)


def sp(u: int, v: int, width: int) -> int:
    """Symplectic product of two bare vectors; 0 iff the operators commute."""
    ua, ub = _split(u, width)
    va, vb = _split(v, width)
    return parity((ua & vb) ^ (ub & va))


def symplectic_product(u: PauliOperator, v: PauliOperator) -> int:
    _check_width(u, v)
    return sp(u.vector, v.vector, u.width)


def q0(v: int, width: int) -> int:
    """Standard quadratic form: parity of the number of ``Y`` letters."""
    a, b = _split(v, width)
    return parity(a & b)


def quadratic_form(w: PauliOperator | None, v: PauliOperator) -> int:
    """``Q_w(v) = Q_0(v) + <w, v>``; ``w=None`` or the zero vector gives ``Q_0``."""
    if w is None:
        return q0(v.vector, v.width)
    _check_width(w, v)
    return q0(v.vector, v.width) ^ sp(w.vector, v.vector, v.width)


def is_symmetric(v: int, width: int) -> bool:
    return q0(v, width) == 0


def product_sign(vectors: Iterable[int], width: int) -> tuple[int, int]:
    """Multiply the sign-0 representatives in order.

    Returns ``(sign, vector)`` of the product.
    """
    mask = (1 << width) - 1
    s = 0
    acc = 0
    for v in vectors:
        s ^= parity((v >> width) & (acc & mask))
        acc ^= v
    return s, acc


def hermitian_product_sign(vectors: Iterable[int], width: int) -> tuple[int, int]:
    """Like :func:`product_sign` but for the Hermitian Pauli representatives.

    Each Hermitian letter ``sigma_y`` equals ``-i ZX``, so a representative with
    ``k`` ``Y`` letters is ``(-i)^k`` times the real one.  The product must be
    real, otherwise ``ValueError`` is raised.
    """
    vs = list(vectors)
    s, acc = product_sign(vs, width)
    mask = (1 << width) - 1
    ny = sum(bin((v >> width) & v & mask).count("1") for v in vs)
    # phase (-i)^ny * (-1)^s; the Y letters of the product contribute their own factor
    ny_out = bin((acc >> width) & acc & mask).count("1")
    k = (ny - ny_out) % 4
    if k % 2:
        raise ValueError("product is not Hermitian up to sign")
    return s ^ (k // 2), acc
