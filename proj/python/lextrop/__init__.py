"""Exact tropical geometry over lexicographically ordered value groups.

Inputs may be JSON text or plain Python objects; structured outputs are
returned as Python objects.
"""

import json

from . import _core
from ._core import (
    Disconnected,
    DomainError,
    LextropError,
    ParseError,
    PointNotInComplex,
    RankMismatch,
)

__all__ = [
    "trop", "closure", "membership", "path", "verify", "nu_mon", "lex_compare",
    "skeleton", "check", "render",
    "LextropError", "ParseError", "RankMismatch", "DomainError", "PointNotInComplex", "Disconnected",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def trop(polynomial):
    return json.loads(_core.trop(_text(polynomial)))


def closure(polynomial):
    return json.loads(_core.closure(_text(polynomial)))


def membership(polynomial, point):
    return _core.membership(_text(polynomial), _text(point))


def path(polynomial, source, target):
    return json.loads(_core.path(_text(polynomial), _text(source), _text(target)))


def verify(polynomial, certificate):
    return _core.verify(_text(polynomial), _text(certificate))


def nu_mon(series, rank):
    return _core.nu_mon(series, rank)


def lex_compare(a, b):
    return _core.lex_compare(a, b)


def skeleton(job):
    return json.loads(_core.skeleton(_text(job)))


def check(seed=7, samples=20):
    return _core.check(seed, samples)


def render(polynomial, bbox="-3,-3,3,3"):
    return _core.render(_text(polynomial), bbox)
