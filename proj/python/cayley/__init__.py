"""Cayley graph spectra, explicit Ramanujan constructions and searches."""

import json

from ._core import (
    BudgetExceeded,
    Graph,
    InvariantViolation,
    kloosterman,
    kloosterman_one_carlitz,
    kloosterman_one_recursive,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "Graph",
    "InvariantViolation",
    "analyze",
    "bent_hadamard",
    "circulant",
    "kloosterman",
    "kloosterman_one_carlitz",
    "kloosterman_one_recursive",
    "kloosterman_trace",
    "polar_trace",
    "search_gds",
    "search_ramanujan",
    "spectrum",
    "theorem33",
]


def _lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


def circulant(n, residues):
    """Cayley graph on Z_n with the given connection residues."""
    return Graph([n], [[r % n] for r in residues])


def analyze(graph, jobs=1):
    """Stats, spectrum, Ramanujan verdict, srg and GDS data as a dict."""
    return json.loads(_core.analyze_json(graph, jobs))


def spectrum(graph, oracle=False):
    """List of {value, multiplicity, exact}, values descending."""
    return json.loads(_core.spectrum_json(graph, oracle))


def theorem33(s, r, jobs=1):
    return json.loads(_core.theorem33_json(s, r, jobs))


def kloosterman_trace(m, jobs=1):
    return json.loads(_core.kloosterman_trace_json(m, jobs))


def polar_trace(m, jobs=1):
    return json.loads(_core.polar_trace_json(m, jobs))


def bent_hadamard(u, jobs=1):
    return json.loads(_core.bent_hadamard_json(u, jobs))


def search_ramanujan(n, min_degree=2, jobs=1):
    """Every connected Ramanujan circulant on Z_n, in encoding order."""
    return _lines(_core.search_ramanujan_json(n, min_degree, jobs))


def search_gds(n, canonical=False):
    """Every generalized difference set in Z_n, in encoding order."""
    return _lines(_core.search_gds_json(n, canonical))
