from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from heptads.clifford7 import from_label
from heptads.pauli import parse_pauli, q0, sp
from heptads.polar import (IsotropicPlane, Spread, all_planes, classify_subspace, enumerate_isotropic,
                           enumerate_points, enumerate_subspaces, perp_set, plane_from_labels,
                           plane_incidence, quadric_kind, quadric_points)
from published import BIJECTION, KLEIN_L, KLEIN_Z_SPECIAL, SPREAD_CORRECTIONS, SPREAD_TABULATED


def v(x):
    return parse_pauli(x).vector


def clifford_plane(text):
    return IsotropicPlane.from_vectors([from_label(x) for x in text.split(",")], 3)


def test_points():
    pts = enumerate_points()
    assert len(pts) == 63 and 0 not in pts
    assert 0b011110 in pts
    assert pts == sorted(pts)


def test_isotropic_counts():
    assert len(enumerate_isotropic(1)) == 63
    assert len(enumerate_isotropic(2)) == 315
    assert len(enumerate_isotropic(3)) == 135
    assert len(enumerate_subspaces(3)) == 1395


def test_example_heptad_and_its_lines():
    p = plane_from_labels("IIX,IXI,IXX,XII,XIX,XXI,XXX")
    assert p in set(all_planes())
    expected = ["IIX,IXI,IXX", "IIX,XII,XIX", "IIX,XXI,XXX", "IXI,XII,XXI",
               "XXX,XII,IXX", "XXI,XIX,IXX", "XXX,XIX,IXI"]
    assert set(p.lines()) == {tuple(sorted(v(x) for x in t.split(","))) for t in expected}


def test_perp_examples():
    assert len(perp_set([])) == 64
    p = all_planes()[17]
    assert p.point_set <= perp_set(p.points)
    for x in (1, 17, 63):
        assert len(perp_set([x])) == 32


def test_classify_subspace():
    assert classify_subspace([v("XII"), v("IXI")]) == "totally isotropic"
    assert classify_subspace([v("ZII"), v("XII")]) == "non-isotropic"
    assert classify_subspace([v("ZII"), v("XII"), v("IZI")]) == "isotropic"


def test_quadrics():
    klein = quadric_points(0, 3)
    assert len(klein) == 35 and all(q0(x, 3) == 0 for x in klein)
    four = quadric_points(0, 4)
    assert len(four) == 135 and all(q0(x, 4) == 0 for x in four)
    for w in range(1, 64):
        if q0(w, 3):
            assert quadric_kind(w, 3) == "elliptic"
            assert len(quadric_points(w, 3)) == 27
        else:
            assert quadric_kind(w, 3) == "hyperbolic"


def test_every_point_on_fifteen_planes(planes):
    for x in range(1, 64):
        assert sum(x in p for p in planes) == 15


def test_planes_are_maximal_and_fano(planes):
    for p in planes:
        assert all(sp(a, b, 3) == 0 for a, b in combinations(p.points, 2))
        assert perp_set(p.points) - {0} == p.point_set
        lines = p.lines()
        assert len(lines) == 7 and all(a ^ b ^ c == 0 for a, b, c in lines)
        assert all(sum(x in line for line in lines) == 3 for x in p.points)


def test_klein_planes_two_systems(planes):
    klein = quadric_points(0, 3)
    on = [p for p in planes if p.point_set <= klein]
    assert len(on) == 30
    x_sys = {plane_from_labels(t) for t, _ in KLEIN_L}
    swap = str.maketrans("XZ", "ZX")
    z_sys = {plane_from_labels(t.translate(swap)) for t, _ in KLEIN_L}
    assert len(x_sys) == len(z_sys) == 15 and x_sys | z_sys == set(on)
    for sys_ in (x_sys, z_sys):
        for p, q in combinations(sys_, 2):
            assert plane_incidence(p, q) == "point"
    for p in x_sys:
        for q in z_sys:
            assert plane_incidence(p, q) in ("disjoint", "line")


def test_z_special_plane_incidences():
    z = plane_from_labels(KLEIN_Z_SPECIAL[0])
    k_and_m = [plane_from_labels(t) for t, _ in KLEIN_L[:7] + KLEIN_L[14:]]
    ls = [plane_from_labels(t) for t, _ in KLEIN_L[7:14]]
    assert all(plane_incidence(z, p) == "disjoint" for p in k_and_m)
    assert all(plane_incidence(z, p) == "line" for p in ls)


def test_plane_incidence_examples():
    f = [clifford_plane(t) for t, _ in BIJECTION]
    assert plane_incidence(f[1], f[2]) == "point"
    assert plane_incidence(f[0], f[1]) == "line"
    assert plane_incidence(f[0], f[20]) == "disjoint"
    assert plane_incidence(f[0], f[0]) == "equal"


def test_spread_count_and_validity(spreads):
    assert len(spreads) == 960
    assert spreads == sorted(spreads)
    for s in spreads[:50]:
        assert sorted(x for p in s.planes for x in p.points) == list(range(1, 64))


def test_tabulated_spread_needs_corrections(spreads):
    raw = [t.split(",") for t in SPREAD_TABULATED]
    with pytest.raises(ValueError):
        Spread.of(plane_from_labels(h) for h in raw)
    for i, (old, new) in SPREAD_CORRECTIONS.items():
        raw[i] = [new if x == old else x for x in raw[i]]
    assert Spread.of(plane_from_labels(h) for h in raw) in set(spreads)


def test_spread_rejects_bad_input(planes):
    with pytest.raises(ValueError):
        Spread(planes[:9])
    with pytest.raises(ValueError):
        Spread(planes[:3])


@given(st.sampled_from(range(135)), st.sampled_from(range(168)))
def test_plane_key_independent_of_basis(i, k):
    from heptads.gf2 import BitMatrix, det3

    gl = [m for m in (BitMatrix.unpack(x, 3) for x in range(512)) if det3(m)]
    p = all_planes()[i]
    rows = (gl[k] @ p.basis).rows
    assert IsotropicPlane.from_vectors(rows, 3) == p
