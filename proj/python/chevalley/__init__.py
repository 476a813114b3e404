"""Exact Chevalley group computations."""

import json

from . import _core

__all__ = ["roots", "smith", "determinant", "count_k", "k_formula", "nu", "witness", "verify", "run"]


def roots(type_name):
    return json.loads(_core.roots(type_name))


def smith(type_name):
    return json.loads(_core.smith(type_name))


def determinant(rows):
    return int(_core.determinant(rows))


def count_k(type_name):
    return _core.count_k(type_name)


def k_formula(type_name):
    return _core.k_formula(type_name)


def nu(x):
    return {int(p) for p in _core.nu(str(x))}


def witness(type_name, field="Q", rho="", delta="id", diag="", n=2, strategy="P", seed=0):
    return json.loads(_core.witness(type_name, field, rho, delta, diag, n, strategy, seed))


def verify(certificate):
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return _core.verify(certificate)


def run(*args):
    return _core.run([str(a) for a in args])
