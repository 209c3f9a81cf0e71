"""Exact two-terminal reliability for hammock (brick-wall) networks.

Thin decoding layer over the compiled ``_hammock`` module: structured results
cross the boundary as JSON strings and are turned into dicts here, with the
arbitrary-precision coefficient vectors converted to Python ints.
"""

import json
from fractions import Fraction

from . import _hammock
from ._hammock import ResourceLimitError

__all__ = [
    "ResourceLimitError",
    "build",
    "poly",
    "poly_of_network",
    "dual",
    "minpaths",
    "mincuts",
    "evaluate",
    "verify_theorem1",
    "verify_corollary1",
    "verify_suite",
]


def _decode_poly(text):
    data = json.loads(text)
    data["N"] = [int(x) for x in data["N"]]
    data["b"] = [int(x) for x in data["b"]]
    return data


def build(length, width, kind=1):
    """Network description: vertices, edges, sources, termini."""
    return json.loads(_hammock.build(length, width, kind))


def poly(length, width, kind=1, engine="auto", brute_max_edges=24, frontier_max_width=8):
    """Reliability polynomial with exact integer coefficient lists N and b."""
    return _decode_poly(
        _hammock.poly(length, width, kind, engine, brute_max_edges, frontier_max_width)
    )


def poly_of_network(network, engine="auto", brute_max_edges=24, frontier_max_width=8):
    """Like poly(), for an already-built network dict (or its JSON string)."""
    if not isinstance(network, str):
        network = json.dumps(network)
    return _decode_poly(
        _hammock.poly_of_network(network, engine, brute_max_edges, frontier_max_width)
    )


def dual(length, width, kind=1):
    """Dict with the base network, its dual, and the edge-index bijection."""
    return json.loads(_hammock.dual(length, width, kind))


def minpaths(length, width, kind=1):
    """Minimal pathsets as lists of edge indices."""
    return json.loads(_hammock.minpaths(length, width, kind))


def mincuts(length, width, kind=1, strategy="dual"):
    """Minimal cutsets as lists of edge indices."""
    return json.loads(_hammock.mincuts(length, width, kind, strategy))


def evaluate(polynomial, p):
    """Exact h(p) as a Fraction; p is a decimal literal (string, int or float repr)."""
    if not isinstance(polynomial, str):
        polynomial = json.dumps(
            {
                **polynomial,
                "N": [str(x) for x in polynomial["N"]],
                "b": [str(x) for x in polynomial["b"]],
            }
        )
    if not isinstance(p, str):
        p = str(p)
    return Fraction(_hammock.evaluate(polynomial, p))


def verify_theorem1(length, width, kind=1):
    return json.loads(_hammock.verify_theorem1(length, width, kind))


def verify_corollary1(length, width, kind=1):
    return json.loads(_hammock.verify_corollary1(length, width, kind))


def verify_suite(max_length, max_width):
    """All verification reports over the dimension grid."""
    return json.loads(_hammock.verify_suite(max_length, max_width))
