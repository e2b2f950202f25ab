
import numpy as np
import pytest
from hypothesis import given, strategies as st

from heptads.gf2 import (BitMatrix, all_minors, det3, det_adjugate3, format_bits, from_bits, rank,
                         rref_canonical, span)

# plane {7,12,34,56,127,347,567}: rows ZYZ, IZY, XIY and its (M|I) form
AB = BitMatrix.from_strings("111010", "011001", "001101")
M_I = BitMatrix.from_strings("010100", "111010", "011001")

ALL_3x3 = [BitMatrix.unpack(k, 3) for k in range(512)]

rows6 = st.lists(st.integers(0, 63), min_size=1, max_size=6)


def gl3():
    return [m for m in ALL_3x3 if det3(m)]


def test_bits_roundtrip():
    assert from_bits((0, 1, 1, 1, 1, 0)) == 0b011110
    assert format_bits(0b011110, 6) == "(011110)"


def test_rank_examples():
    assert rank(BitMatrix.zeros(3, 6)) == 0
    assert rank(BitMatrix.identity(3)) == 3
    assert rank(AB) == 3


def test_rref_examples():
    i_0 = BitMatrix.from_strings("100000", "010000", "001000")
    assert rref_canonical(i_0) == i_0
    assert rref_canonical(AB) == rref_canonical(M_I)
    swapped = BitMatrix([AB.rows[2], AB.rows[0], AB.rows[1]], 6)
    assert rref_canonical(swapped) == rref_canonical(AB)


@given(rows6)
def test_rref_idempotent_and_rowspace(rows):
    m = BitMatrix(rows, 6)
    r = rref_canonical(m)
    assert rref_canonical(r) == r
    assert span(r.rows) == span(rows)
    assert rank(r) == rank(m) <= min(m.nrows, 6)


def test_rref_constant_on_gl3_orbit():
    base = rref_canonical(AB)
    for t in gl3():
        assert rref_canonical(t @ AB) == base
    assert len(gl3()) == 168


def test_det_adjugate_examples():
    assert det_adjugate3(BitMatrix.identity(3)) == (1, BitMatrix.identity(3))
    z = BitMatrix.zeros(3, 3)
    assert det_adjugate3(z) == (0, z)
    m = BitMatrix.from_strings("010", "111", "011")
    d, adj = det_adjugate3(m)
    assert d == 1 and m @ adj == BitMatrix.identity(3)


def test_adjugate_identities_exhaustive():
    for m in ALL_3x3:
        d, ma = det_adjugate3(m)
        scalar = BitMatrix.identity(3) if d else BitMatrix.zeros(3, 3)
        assert m @ ma == scalar and ma @ m == scalar
        assert det_adjugate3(ma)[1] == (m if d else BitMatrix.zeros(3, 3))


def test_adjugate_antihomomorphism_sampled():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        m, n = (ALL_3x3[k] for k in rng.integers(0, 512, 2))
        assert det_adjugate3(m @ n)[1] == det_adjugate3(n)[1] @ det_adjugate3(m)[1]


def _tables():
    det = np.array([det3(m) for m in ALL_3x3])
    mat = np.array([m.to_lists() for m in ALL_3x3])
    adj = np.array([det_adjugate3(m)[1].to_lists() for m in ALL_3x3])
    return det, mat, adj


def _det_sum_terms():
    det, mat, adj = _tables()
    # Tr(M N#) and Tr(M# N) for every pair (M, N), indexed by packed keys
    tr_m_nadj = np.einsum("aij,bji->ab", mat, adj) % 2
    tr_madj_n = np.einsum("aij,bji->ab", adj, mat) % 2
    keys = np.arange(512)
    lhs = det[keys[:, None] ^ keys[None, :]]  # packed sum is the xor of keys
    return det, lhs, tr_m_nadj, tr_madj_n


def test_packed_sum_is_xor():
    for a, b in [(5, 300), (511, 1), (77, 77)]:
        assert (ALL_3x3[a] + ALL_3x3[b]).pack() == a ^ b


def test_determinant_of_sum_corrected_form_exhaustive():
    det, lhs, t1, t2 = _det_sum_terms()
    rhs = det[:, None] ^ t1 ^ t2 ^ det[None, :]
    assert np.array_equal(lhs, rhs)


def test_determinant_of_sum_repeated_trace_term_fails():
    # with the same trace written twice the two terms cancel, and the identity breaks
    det, lhs, t1, _ = _det_sum_terms()
    rhs = det[:, None] ^ t1 ^ t1 ^ det[None, :]
    assert (lhs != rhs).sum() > 0


def test_det_matches_integer_determinant():
    for m in ALL_3x3:
        assert det3(m) == int(round(np.linalg.det(np.array(m.to_lists())))) % 2


def test_matrix_algebra():
    m = BitMatrix.from_strings("010", "111", "011")
    assert m @ m.inverse() == BitMatrix.identity(3)
    assert m ** -1 == m.inverse()
    assert m ** 0 == BitMatrix.identity(3)
    assert m.T.T == m
    assert BitMatrix.unpack(m.pack(), 3) == m
    with pytest.raises(ZeroDivisionError):
        BitMatrix.zeros(3, 3).inverse()


def test_minors_against_integer_oracle():
    from oracles import minors_bruteforce

    for rows in ([0b111010, 0b011001, 0b001101], [0b100000, 0b010000, 0b001000], [0b110011, 0b101101, 0b011110]):
        ours = all_minors(rows, 6)
        assert ours == minors_bruteforce(rows)
