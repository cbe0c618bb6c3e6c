"""Constructions and certificates for equiangular lines and spherical codes."""

import json as _json

from ._equicode import (
    Code,
    EquicodeError,
    binary_kcode,
    cli,
    code_rank,
    concatenated_code,
    detect_equiangular,
    eigenvalues,
    embed_gram,
    gram,
    lemmens_seidel_code,
    load_code_file,
    odd_reciprocal_code,
    predicted_projection_angle,
    project,
    rank,
    regular_simplex,
    seven_dim_28_lines,
    validate,
    write_code_file,
)
from . import _equicode as _core


def gerzon_certificate(code):
    return _json.loads(_core.gerzon_certificate_json(code))


def negative_clique_certificate(code, alpha):
    return _json.loads(_core.negative_clique_certificate_json(code, alpha))


def dgs_bound_check(code, angle_set):
    return _json.loads(_core.dgs_bound_check_json(code, angle_set))


def multipartite_certificate(code, parts, alpha, beta):
    return _json.loads(_core.multipartite_certificate_json(code, parts, alpha, beta))


def bound_table(n, k, alpha, beta):
    return _json.loads(_core.bound_table_json(n, k, alpha, beta))


def catalog_lambda_checks(seed=0, witnesses=20):
    return _json.loads(_core.catalog_lambda_json(seed, witnesses))


def reduction_pipeline(code, t):
    return _json.loads(_core.reduce_json(code, t))
