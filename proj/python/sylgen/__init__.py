"""Sylow 2-subgroup generation engine."""

import json
from fractions import Fraction

from ._sylgen import (
    SylgenError,
    bound_ids,
    eval_bound,
    expected_order,
    group_order,
    parabolic_sigma,
    run,
    sylow_order,
)
from . import _sylgen

__all__ = [
    "SylgenError",
    "bound_ids",
    "eval_bound",
    "expected_order",
    "fraction",
    "group_order",
    "parabolic_sigma",
    "run",
    "sylow_order",
    "normalizer",
    "sigma_table",
    "count_lemma",
    "generate",
    "obstruction",
    "audit",
    "irreducible_check",
]


def fraction(s):
    """Parse a "num/den" report string."""
    return Fraction(s)


def normalizer(spec):
    return json.loads(_sylgen.normalizer_json(spec))


def sigma_table(spec):
    return json.loads(_sylgen.sigma_json(spec))


def count_lemma(spec):
    return json.loads(_sylgen.count_lemma_json(spec))


def generate(spec, samples=200, seed=1):
    return json.loads(_sylgen.generate_json(spec, samples, seed))


def obstruction(scenario, samples=1000, seed=1):
    return json.loads(_sylgen.obstruction_json(scenario, samples, seed))


def audit(bound_id, points=(), bits=64):
    return json.loads(_sylgen.audit_json(bound_id, list(points), bits))


def irreducible_check():
    return json.loads(_sylgen.irreducible_check_json())
