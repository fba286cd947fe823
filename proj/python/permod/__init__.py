"""Membership in finitely generated invariant submodules of RW.

Vectors, decisions and instances use the same JSON layout as the permod CLI.
Every function accepts either parsed JSON (dicts and lists) or JSON text and
returns parsed JSON.
"""

import json

from . import _permod
from ._permod import VerificationError, placement_count

__all__ = [
    "decide",
    "verify",
    "omega",
    "generates_all",
    "min_support",
    "cyclic",
    "oracle_check",
    "random_instance",
    "placement_count",
    "VerificationError",
]


def _text(x):
    return x if isinstance(x, str) else json.dumps(x)


def _params(p):
    if isinstance(p, str):
        return p
    return ",".join(str(x) for x in p)


def decide(target, gens, params=None, structure="dlo", witness_budget=0, emit_certificate=True):
    return json.loads(_permod.decide(_text(target), _text(gens), _params(params or ""), structure,
                                     witness_budget, emit_certificate))


def verify(decision, target, gens):
    return _permod.verify(_text(decision), _text(target), _text(gens))


def omega(target, params):
    return json.loads(_permod.omega(_text(target), _params(params)))


def generates_all(gens, arity=0):
    return _permod.generates_all(_text(gens), arity)


def min_support(gens, k, arity=0):
    v = _permod.min_support(_text(gens), k, arity)
    return None if v is None else json.loads(v)


def cyclic(gens):
    return json.loads(_permod.cyclic(_text(gens)))


def oracle_check(target, gens, max_grid=10):
    w = _permod.oracle_check(_text(target), _text(gens), max_grid)
    return None if w is None else json.loads(w)


def random_instance(seed, arity=1, ring="Q", max_support=4, max_generators=2):
    return json.loads(_permod.random_instance(seed, arity, ring, max_support, max_generators))
