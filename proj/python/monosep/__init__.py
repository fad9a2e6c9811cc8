"""Finite separability of monogenic rings given by integer polynomial relations."""

import json

from . import _monosep
from ._monosep import MonosepError, format_poly, run_cli

__all__ = [
    "MonosepError",
    "basis",
    "decide",
    "format_poly",
    "invariants",
    "member",
    "normal_form",
    "parse_terms",
    "quotient",
    "run_cli",
    "separate",
    "verify",
    "witness",
]


def _rel(relators):
    if isinstance(relators, str):
        return [relators]
    return list(relators)


def decide(relators):
    return json.loads(_monosep.decide(_rel(relators)))


def invariants(relators, degree_bound=None, strict=False):
    return json.loads(_monosep.invariants(_rel(relators), degree_bound or 0, strict))


def basis(relators):
    return json.loads(_monosep.basis(_rel(relators)))


def normal_form(relators, poly):
    return json.loads(_monosep.normal_form(_rel(relators), poly))


def member(relators, poly):
    return json.loads(_monosep.member(_rel(relators), poly))


def quotient(relators, modulus):
    return json.loads(_monosep.quotient(_rel(relators), str(modulus)))


def separate(relators, target, generators=(), bound=64):
    return json.loads(_monosep.separate(_rel(relators), target, list(generators), str(bound)))


def witness(relators):
    return json.loads(_monosep.witness(_rel(relators)))


def verify(document):
    """Re-check the certificates in a document returned by any function above."""
    if not isinstance(document, str):
        document = json.dumps(document)
    ok, checks = _monosep.verify(document)
    return ok, checks


def parse_terms(text):
    return [(int(c), d) for c, d in _monosep.parse_terms(text)]
