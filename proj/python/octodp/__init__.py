"""Exact octanomial cubic surfaces: 27 lines, p-adic tropicalization, tree arrangements."""
import json
from fractions import Fraction

from . import _octodp
from ._octodp import InvariantError, PreconditionError, newton_root_valuations, verify

__all__ = [
    "InvariantError",
    "PreconditionError",
    "blowdown",
    "build",
    "catalog",
    "classify",
    "coefficients",
    "lines",
    "newton_root_valuations",
    "sample",
    "schlafli_dot",
    "triangulations",
    "valuation",
    "verify",
    "verify_parametrization",
]


def _moduli(d):
    if isinstance(d, str):
        names = dict(_octodp.catalog())
        if d in names:
            return names[d]
        d = d.split(",")
    if len(d) != 6:
        raise PreconditionError(f"expected six moduli, got {len(d)}")
    return [str(Fraction(x)) if not isinstance(x, str) else x.strip() for x in d]


def valuation(q, p):
    """p-adic valuation of a rational; float('inf') for zero."""
    v = _octodp.valuation(str(Fraction(q)), p)
    return float("inf") if v == "inf" else int(v)


def coefficients(d):
    return dict(zip("abcdefgh", (Fraction(c) for c in _octodp.coefficients(_moduli(d)))))


def verify_parametrization(d):
    return _octodp.verify_parametrization(_moduli(d))


def catalog():
    return {name: [Fraction(x) for x in d] for name, d in _octodp.catalog()}


def build(d):
    return json.loads(_octodp.build_json(_moduli(d)))


def classify(d, p=5, trees=False):
    return json.loads(_octodp.classify_json(_moduli(d), p, trees))


def lines(d):
    return json.loads(_octodp.lines_json(_moduli(d)))


def schlafli_dot(d):
    return _octodp.schlafli_dot(_moduli(d))


def triangulations():
    return json.loads(_octodp.triangulations_json())


def blowdown(d):
    return json.loads(_octodp.blowdown_json(_moduli(d)))


def sample(target, budget, seed=1, p=5, threads=0):
    return [json.loads(s) for s in _octodp.sample_json(target, budget, seed, p, threads)]
