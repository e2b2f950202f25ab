"""Named checks with expected values, shared by the CLI and the test suite.

Each check returns ``(observed, expected)`` metric maps.  Metrics are
integers; boolean checks are reported as 0/1.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Callable

from .pauli import q0, sp

Metrics = dict[str, int]

EXAMPLE_OVOID = ("YXZY", "YYII", "IZXX", "IZXZ", "YZIY", "IXXI", "IXYY", "ZIZI", "XIZI")


def check_space() -> tuple[Metrics, Metrics]:
    from .polar import all_planes, enumerate_isotropic, enumerate_subspaces, quadric_points

    klein = quadric_points(0, 3)
    on_klein = [p for p in all_planes() if p.point_set <= klein]
    obs = {
        "points": len(enumerate_isotropic(1)),
        "lines": len(enumerate_isotropic(2)),
        "planes": len(all_planes()),
        "three_spaces": len(enumerate_subspaces(3)),
        "klein_points": len(klein),
        "klein_planes": len(on_klein),
    }
    exp = {"points": 63, "lines": 315, "planes": 135, "three_spaces": 1395,
           "klein_points": 35, "klein_planes": 30}
    return obs, exp


def check_group() -> tuple[Metrics, Metrics]:
    from .spgroup import (D_ALPHA, D_BETA, D_GAMMA, GAMMA_CONVENTION, GAMMA_WORD, R_ALPHA,
                          R_BETA, R_GAMMA, evaluate_word, group_closure, transvection,
                          verify_presentation)

    sp_6 = group_closure([D_ALPHA, D_BETA])
    sp_8 = group_closure([R_ALPHA, R_BETA])
    pres = verify_presentation()
    obs = {
        "order_D_alpha_beta": sp_6.order,
        "order_D_alpha_gamma": group_closure([D_ALPHA, D_GAMMA]).order,
        "order_R_alpha_beta": sp_8.order,
        "order_R_alpha_gamma": group_closure([R_ALPHA, R_GAMMA]).order,
        "stabilizer_YIII": sp_8.stabilizer_order(0b10001000),
        "relators_ok": int(all(all(v.values()) for v in pres.values())),
        "gamma_word_D": int(evaluate_word(GAMMA_WORD, 6, GAMMA_CONVENTION) == D_GAMMA),
        "gamma_word_R": int(evaluate_word(GAMMA_WORD, 8, GAMMA_CONVENTION) == R_GAMMA),
        "transvection_ZZX_is_D_beta": int(transvection(0b110001) == D_BETA),
    }
    exp = {
        "order_D_alpha_beta": 1451520,
        "order_D_alpha_gamma": 12096,
        "order_R_alpha_beta": 1451520,
        "order_R_alpha_gamma": 12096,
        "stabilizer_YIII": 12096,
        "relators_ok": 1,
        "gamma_word_D": 1,
        "gamma_word_R": 1,
        "transvection_ZZX_is_D_beta": 1,
    }
    return obs, exp


def check_bijection() -> tuple[Metrics, Metrics]:
    from .grassmann import check_equivariance, count_separable, four_qubit_to_plane, plane_to_four_qubit
    from .polar import all_planes
    from .spgroup import D_ALPHA, D_BETA, D_GAMMA, R_ALPHA, R_BETA, R_GAMMA

    planes = all_planes()
    images = [plane_to_four_qubit(p) for p in planes]
    mismatch = 0
    for (p, u), (q, v) in combinations(zip(planes, images), 2):
        meet = bool(p.point_set & q.point_set)
        if meet == bool(sp(u, v, 4)):
            mismatch += 1
    obs = {
        "planes": len(planes),
        "distinct_images": len(set(images)),
        "symmetric_images": sum(1 for v in images if q0(v, 4) == 0),
        "round_trip": sum(1 for p, v in zip(planes, images) if four_qubit_to_plane(v) == p),
        "equivariant_alpha": int(check_equivariance(D_ALPHA, R_ALPHA)),
        "equivariant_beta": int(check_equivariance(D_BETA, R_BETA)),
        "equivariant_gamma": int(check_equivariance(D_GAMMA, R_GAMMA)),
        "incidence_commutation_mismatches": mismatch,
        "separable_trivectors": count_separable(),
    }
    exp = {
        "planes": 135,
        "distinct_images": 135,
        "symmetric_images": 135,
        "round_trip": 135,
        "equivariant_alpha": 1,
        "equivariant_beta": 1,
        "equivariant_gamma": 1,
        "incidence_commutation_mismatches": 0,
        "separable_trivectors": 1395,
    }
    return obs, exp


def check_pentagrams(threads: int = 1) -> tuple[Metrics, Metrics]:
    from .mermin import affine_edges, construct_symmetric_pentagrams, enumerate_pentagrams

    census = enumerate_pentagrams(threads=threads)
    built = {x.pentagram for x in construct_symmetric_pentagrams()}
    obs = {
        "edges": len(affine_edges()),
        "pentagrams": len(census.magic),
        "even_parity_configurations": len(census.non_magic),
        "symmetric_pentagrams": len(census.symmetric()),
        "constructed_match": int(built == set(census.symmetric())),
    }
    exp = {"edges": 945, "pentagrams": 12096, "even_parity_configurations": 0,
           "symmetric_pentagrams": 336, "constructed_match": 1}
    return obs, exp


def check_hexagon() -> tuple[Metrics, Metrics]:
    from .hexagon import classify_quadric_line, elliptic_split, hexagon_lines, hexagon_points, verify_generalized_hexagon

    h = hexagon_lines()
    rep = verify_generalized_hexagon(h)
    sym, anti = elliptic_split()
    obs = {
        "points": rep.points,
        "lines": rep.lines,
        "girth": rep.girth or 0,
        "diameter": rep.diameter or 0,
        "axioms_ok": int(rep.ok),
        "pencil_lines": sum(classify_quadric_line(t) == "pencil" for t in h.line_vectors()),
        "elliptic_symmetric": len(sym),
        "elliptic_antisymmetric": len(anti),
        "elliptic_matches_points": int(sym == hexagon_points()),
    }
    exp = {"points": 63, "lines": 63, "girth": 12, "diameter": 6, "axioms_ok": 1,
           "pencil_lines": 63, "elliptic_symmetric": 63, "elliptic_antisymmetric": 56,
           "elliptic_matches_points": 1}
    return obs, exp


def check_spreads() -> tuple[Metrics, Metrics]:
    from .grassmann import four_qubit_to_plane, spread_to_clifford9
    from .polar import Spread, enumerate_spreads

    spreads = enumerate_spreads()
    ovoids = {frozenset(spread_to_clifford9(s)) for s in spreads}
    target = Spread.of(four_qubit_to_plane(x) for x in EXAMPLE_OVOID)
    obs = {
        "spreads": len(spreads),
        "distinct_ovoids": len(ovoids),
        "example_ovoid_found": int(target in set(spreads)),
    }
    exp = {"spreads": 960, "distinct_ovoids": 960, "example_ovoid_found": 1}
    return obs, exp


CHECKS: dict[str, Callable[..., tuple[Metrics, Metrics]]] = {
    "space": check_space,
    "group": check_group,
    "bijection": check_bijection,
    "pentagrams": check_pentagrams,
    "hexagon": check_hexagon,
    "spreads": check_spreads,
}


def run_checks(names, threads: int = 1, timings: bool = False) -> tuple[Metrics, Metrics]:
    """Run the named checks; metric names are prefixed with the check name."""
    obs: Metrics = {}
    exp: Metrics = {}
    for name in names:
        fn = CHECKS[name]
        t0 = time.perf_counter()
        o, e = fn(threads=threads) if name == "pentagrams" else fn()
        obs.update({f"{name}.{k}": v for k, v in o.items()})
        exp.update({f"{name}.{k}": v for k, v in e.items()})
        if timings:
            obs[f"{name}.time_ms"] = int((time.perf_counter() - t0) * 1000)
    return obs, exp


def failures(obs: Metrics, exp: Metrics) -> list[str]:
    return [f"{k}: got {obs.get(k)}, expected {v}" for k, v in exp.items() if obs.get(k) != v]
