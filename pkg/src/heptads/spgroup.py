"""Sp(6,2) acting on three-qubit classes and on the four-qubit spin module.

Matrices act on row vectors from the right.  The 6x6 generators act on
``(a1 a2 a3 b1 b2 b3)``; the 8x8 generators act on the four-qubit vector
built from Pluecker coordinates (see :mod:`heptads.grassmann`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import kernels
from .gf2 import BitMatrix
from .pauli import sp

__all__ = [
    "D_ALPHA",
    "D_BETA",
    "D_GAMMA",
    "R_ALPHA",
    "R_BETA",
    "R_GAMMA",
    "GAMMA_WORD",
    "WORD_CONVENTION",
    "GAMMA_CONVENTION",
    "RELATORS",
    "MatrixGroup",
    "symplectic_form",
    "is_symplectic",
    "transvection",
    "generators",
    "parse_word",
    "evaluate_word",
    "group_closure",
    "orbit",
    "verify_presentation",
    "commutator",
]

D_ALPHA = BitMatrix.from_strings(
    "111000",
    "011000",
    "110000",
    "000111",
    "000110",
    "000011",
)

D_BETA = BitMatrix.from_strings(
    "100000",
    "010000",
    "111001",
    "110101",
    "110011",
    "000001",
)

D_GAMMA = BitMatrix.from_strings(
    "000010",
    "001110",
    "100101",
    "110100",
    "101010",
    "001000",
)

R_ALPHA = BitMatrix.from_strings(
    "10000000",
    "01110000",
    "00110000",
    "01100000",
    "00001000",
    "00000111",
    "00000110",
    "00000011",
)

R_BETA = BitMatrix.from_strings(
    "10000001",
    "01000001",
    "00100001",
    "00011110",
    "01101000",
    "10100100",
    "11000010",
    "00000001",
)

R_GAMMA = BitMatrix.from_strings(
    "00011010",
    "00000010",
    "00010110",
    "11001101",
    "10010010",
    "11101100",
    "01010010",
    "00010000",
)

GAMMA_WORD = "βα²βαβα³βα⁴β"

# A word x1 x2 ... xk means "apply x1 first"; with row vectors acted on from
# the right this is the matrix product X1 X2 ... Xk.
WORD_CONVENTION = "left-to-right"

# Neither plain reading of the gamma word gives the reference D(gamma) and
# R(gamma).  Both reference matrices are the left-to-right product of the
# transposed generators, i.e. the transpose of the right-to-left product.
GAMMA_CONVENTION = "transposed"

RELATORS = {
    "α^7": "α^7",
    "β^2": "β^2",
    "(βα)^9": "(βα)^9",
    "(βα^2)^12": "(βα^2)^12",
    "[β,α]^3": "(β^-1α^-1βα)^3",
    "[β,α^2]^2": "(β^-1α^-2βα^2)^2",
}

_GENS = {6: {"α": D_ALPHA, "β": D_BETA, "γ": D_GAMMA}, 8: {"α": R_ALPHA, "β": R_BETA, "γ": R_GAMMA}}


def symplectic_form(width: int) -> BitMatrix:
    """``J = [[0, I], [I, 0]]`` for the given number of qubits."""
    n = width
    rows = [1 << (n - 1 - i) for i in range(n)]
    return BitMatrix([r for r in rows] + [r << n for r in rows], 2 * n)


def is_symplectic(g: BitMatrix) -> bool:
    n = g.nrows
    if n != g.ncols or n % 2:
        return False
    j = symplectic_form(n // 2)
    return g @ j @ g.T == j


def transvection(w: int, width: int = 3) -> BitMatrix:
    """Matrix of ``v -> v + <v, w> w``."""
    if w == 0:
        raise ValueError("transvection needs a nonzero vector")
    n = 2 * width
    if w >> n:
        raise ValueError("vector too long for the given width")
    rows = []
    for i in range(n):
        e = 1 << (n - 1 - i)
        rows.append(e ^ (w if sp(e, w, width) else 0))
    return BitMatrix(rows, n)


def generators() -> dict[str, BitMatrix]:
    return {
        "D(α)": D_ALPHA,
        "D(β)": D_BETA,
        "D(γ)": D_GAMMA,
        "R(α)": R_ALPHA,
        "R(β)": R_BETA,
        "R(γ)": R_GAMMA,
    }


_SUP = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")
_ALIASES = {"a": "α", "alpha": "α", "b": "β", "beta": "β", "g": "γ", "gamma": "γ"}
_TOKEN = re.compile(r"\s*(alpha|beta|gamma|[αβγabg()])\s*(\^?\s*-?\d+)?")


def parse_word(word: str | Sequence[tuple[str, int]]) -> list[tuple[str, int]]:
    """Turn ``"βα²β"``, ``"b a^2 b"`` or ``"(βα)^9"`` into ``[(letter, power), ...]``.

    Parenthesised groups with an exponent are expanded.
    """
    if not isinstance(word, str):
        return [(_ALIASES.get(g, g), int(k)) for g, k in word]
    text = word.translate(_SUP).replace(",", " ")
    pos = 0
    stack: list[list[tuple[str, int]]] = [[]]
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word {word!r} at position {pos}")
        tok, exp = m.group(1), m.group(2)
        k = int(exp.replace("^", "").replace(" ", "")) if exp else 1
        pos = m.end()
        if tok == "(":
            if exp:
                raise ValueError("exponent on an opening parenthesis")
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise ValueError("unbalanced parentheses")
            inner = stack.pop()
            if k < 0:
                inner = [(g, -p) for g, p in reversed(inner)]
                k = -k
            stack[-1].extend(inner * k)
        else:
            stack[-1].append((_ALIASES.get(tok, tok), k))
    if len(stack) != 1:
        raise ValueError("unbalanced parentheses")
    return stack[0]


def evaluate_word(word, rep: int = 6, convention: str = WORD_CONVENTION) -> BitMatrix:
    """Matrix of a word in α, β (and γ) in the 6x6 or 8x8 representation.

    ``convention`` is ``"left-to-right"`` (X1 X2 ... Xk), ``"right-to-left"``
    (Xk ... X1) or ``"transposed"`` (X1^T X2^T ... Xk^T).
    """
    if rep not in _GENS:
        raise ValueError("rep must be 6 or 8")
    gens = _GENS[rep]
    factors = []
    for g, k in parse_word(word):
        if g not in gens:
            raise ValueError(f"unknown generator {g!r}")
        factors.append(gens[g] ** k)
    if convention == "right-to-left":
        factors.reverse()
    elif convention == "transposed":
        factors = [f.T for f in factors]
    elif convention != "left-to-right":
        raise ValueError(f"unknown convention {convention!r}")
    out = BitMatrix.identity(rep)
    for f in factors:
        out = out @ f
    return out


def commutator(x: BitMatrix, y: BitMatrix) -> BitMatrix:
    """``[x, y] = x^-1 y^-1 x y``."""
    return x.inverse() @ y.inverse() @ x @ y


def _row_table(g: BitMatrix) -> list[int]:
    n = g.nrows
    return [g.apply(v) for v in range(1 << n)]


@dataclass(frozen=True)
class MatrixGroup:
    """A finite matrix group stored as its sorted packed elements."""

    n: int
    elements: np.ndarray

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: BitMatrix | int) -> bool:
        key = g.pack() if isinstance(g, BitMatrix) else int(g)
        i = int(np.searchsorted(self.elements, np.uint64(key)))
        return i < self.order and int(self.elements[i]) == key

    def __iter__(self):
        for key in self.elements:
            yield BitMatrix.unpack(int(key), self.n)

    def images(self, v: int) -> np.ndarray:
        """``v @ g`` for every element ``g``, in element order."""
        n = self.n
        mask = np.uint64((1 << n) - 1)
        out = np.zeros(self.order, dtype=np.uint64)
        for k in range(n):
            if (v >> (n - 1 - k)) & 1:
                out ^= (self.elements >> np.uint64(n * (n - 1 - k))) & mask
        return out

    def stabilizer_order(self, v: int) -> int:
        return int(np.count_nonzero(self.images(v) == np.uint64(v)))


def group_closure(gens: Iterable[BitMatrix]) -> MatrixGroup:
    """Generate the group by breadth-first search from the identity."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nrows
    if n > 8:
        raise ValueError("packed closure supports matrices up to 8x8")
    for g in gens:
        if g.shape != (n, n):
            raise ValueError("generators must be square and of equal size")
        if not is_symplectic(g):
            raise ValueError("generator is not symplectic")
    tables = [_row_table(g) for g in gens]
    elements = kernels.closure(tables, n, BitMatrix.identity(n).pack())
    elements.sort()
    return MatrixGroup(n, elements)


def orbit(gens: Iterable[BitMatrix], seed, action: str | Callable = "point") -> list:
    """Closure of ``seed`` under the generators.

    ``action`` is ``"point"`` (vectors, three- or four-qubit), ``"plane"``
    (subspaces, recanonicalised after each step) or a callable
    ``action(x, g) -> x'``.  The result is sorted.
    """
    gens = list(gens)
    if action == "point" or action == "four-qubit-point":
        act = lambda x, g: g.apply(x)  # noqa: E731
    elif action == "plane":
        act = lambda x, g: x.transform(g)  # noqa: E731
    elif callable(action):
        act = action
    else:
        raise ValueError(f"unknown action {action!r}")
    seen: set[Hashable] = {seed}
    queue = [seed]
    for x in queue:
        for g in gens:
            y = act(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def verify_presentation() -> dict[str, dict[int, bool]]:
    """Evaluate each relator of the two-generator presentation in both representations."""
    report = {}
    for name, word in RELATORS.items():
        report[name] = {
            rep: evaluate_word(word, rep) == BitMatrix.identity(rep) for rep in (6, 8)
        }
    return report
