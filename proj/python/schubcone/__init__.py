"""Python front end for the schubcone C++ library.

Elements are passed as word strings ("1,2,1", "" for the identity, "w0"),
roots as epsilon strings ("e1-e2") or coordinate strings ("[1,0]").
"""

import json

from . import _schubcone
from ._schubcone import SchubconeError, InvariantViolation, bruhat_leq, suite_names

__all__ = [
    "SchubconeError",
    "InvariantViolation",
    "group_order",
    "reduced_word",
    "demazure_product",
    "bruhat_leq",
    "positive_roots",
    "inversion_table",
    "indecomposables",
    "cone_member",
    "weight_report",
    "character",
    "suite_names",
    "run_suite",
]


def _word(w):
    if isinstance(w, str):
        return [int(t) for t in w.replace(",", " ").split()]
    return list(w)


def group_order(type):
    return int(_schubcone.group_order(type))


def reduced_word(type, x):
    return _schubcone.reduced_word(type, x)


def demazure_product(type, word):
    return _schubcone.demazure_product(type, _word(word))


def positive_roots(type):
    return json.loads(_schubcone.positive_roots(type))


def inversion_table(type, word):
    return json.loads(_schubcone.inversion_table(type, _word(word)))


def indecomposables(type, word, kind="rational", weight="demazure"):
    return json.loads(_schubcone.indecomposables(type, _word(word), kind, weight))


def cone_member(type, gens, target, ring="Q"):
    return json.loads(_schubcone.cone_member(type, list(gens), target, ring))


def weight_report(type, x, w, levi=()):
    return json.loads(_schubcone.weight_report(type, x, w, list(levi)))


def character(type, word, w, bound):
    return json.loads(_schubcone.character(type, _word(word), w, bound))


def run_suite(name, type, seed=20240601, samples=10, jobs=1):
    return json.loads(_schubcone.run_suite(name, type, seed, samples, jobs))
