"""Exact GIT stability checks, destabilizing strata and stable-locus connectivity.

Thin Python layer over the C++ core. Functions taking or returning structured
data use plain dicts with the same schema as the command-line JSON output.
"""

import json

from . import _gitstab
from ._gitstab import (
    GitstabError,
    centralizer_dim,
    character_pairing,
    group_dim,
    orbit_dim,
    rational_rank,
    run_cli,
    unitary_pi,
)

__all__ = [
    "GitstabError",
    "analyze",
    "centralizer_dim",
    "character_pairing",
    "dag_solve_mle",
    "dag_stabilize",
    "enumerate_strata",
    "group_dim",
    "kronecker_oracle_check",
    "orbit_dim",
    "rational_rank",
    "run_cli",
    "sample_generic_points",
    "sample_path_stability",
    "status",
    "unitary_pi",
]


def enumerate_strata(family, convention=""):
    return json.loads(_gitstab.enumerate_strata_json(json.dumps(family), convention))


def analyze(family, convention="", max_q=None):
    return json.loads(_gitstab.analyze_json(json.dumps(family), convention, max_q))


def status(instance):
    return json.loads(_gitstab.status_json(json.dumps(instance)))


def dag_solve_mle(instance):
    return _gitstab.dag_solve_mle(json.dumps(instance))


def dag_stabilize(instance, epsilon="1/1000"):
    return json.loads(_gitstab.dag_stabilize_json(json.dumps(instance), epsilon))


def sample_generic_points(config):
    return json.loads(_gitstab.sample_generic_points_json(json.dumps(config)))


def sample_path_stability(config):
    return json.loads(_gitstab.sample_path_stability_json(json.dumps(config)))


def kronecker_oracle_check(grid_radius=2):
    return json.loads(_gitstab.kronecker_oracle_check_json(grid_radius))
