"""Exact Reid-Tai checks for Kuga families and their verification harnesses."""

import json
from fractions import Fraction

from ._kuga_sing import (
    ImprimitiveForm,
    Rep,
    RepError,
    SiegelError,
    boundary_integral,
    character_extends,
    check_transvection_relations,
    cone_membership,
    dual_character,
    enumerate_reps,
    euler_phi,
    factor_of_automorphy,
    is_primitive,
    moebius_act,
    parity_vanishes,
    petersson_flow_exponent,
    run_cli,
    snc_convergence,
    tangent_spectrum,
    weight_of,
)
from . import _kuga_sing as _core

__all__ = [
    "ImprimitiveForm",
    "Rep",
    "RepError",
    "SiegelError",
    "boundary_integral",
    "character_extends",
    "check_transvection_relations",
    "classify",
    "cone_membership",
    "dual_character",
    "enumerate_reps",
    "euler_phi",
    "factor_of_automorphy",
    "geometric_grid",
    "is_primitive",
    "kodaira_fact",
    "moebius_act",
    "parity_vanishes",
    "petersson_flow_exponent",
    "pole_model_classify",
    "reid_tai_sum",
    "run_cli",
    "scan",
    "snc_convergence",
    "symplectic_word",
    "tangent_spectrum",
    "verify_siegel",
    "weight_of",
]


def _angles(angles):
    return [str(Fraction(a)) for a in angles]


def reid_tai_sum(angles):
    """Sum of the angles in [0, 1), as an exact Fraction."""
    return Fraction(_core.reid_tai_sum(_angles(angles)))


def classify(g, n, rep, v_angles):
    if isinstance(rep, str):
        rep = Rep.parse(rep)
    case = json.loads(_core._classify(g, n, rep, _angles(v_angles)))
    case["rt"] = Fraction(case["rt"])
    return case


def scan(g_range, n_range, threads=0):
    """Every non-identity case with RT < 1 over the inclusive ranges."""
    report = json.loads(_core._scan(g_range[0], g_range[1], n_range[0], n_range[1], threads))
    for case in report["exceptions"] + report["quasi_reflections"]:
        case["rt"] = Fraction(case["rt"])
    report["exceptional_pairs"] = [tuple(p) for p in report["exceptional_pairs"]]
    return report


def symplectic_word(g, length, seed):
    return [[Fraction(x) for x in row] for row in json.loads(_core._symplectic_word(g, length, seed))]


def verify_siegel(g, trials, seed, tol=1e-9):
    return _core._verify_siegel(g, trials, seed, tol)


def geometric_grid(start, ratio, count):
    return [start * ratio**i for i in range(count)]


def pole_model_classify(nu, m, eps_grid=None, r=1.0):
    if eps_grid is None:
        eps_grid = geometric_grid(0.5, 0.5, 40)
    return _core._pole_model_classify(nu, m, list(eps_grid), r)


def kodaira_fact(g):
    return json.loads(_core._kodaira_fact(g))
