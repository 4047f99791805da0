"""Python access to the hull-resolution and Morse-matching engine.

Graphs are passed as a vertex count and a list of (u, v) pairs.
"""

import json

from ._hullmorse import (
    HullMorseError,
    betti_oracles_agree,
    betti_totals,
    complement,
    face_count,
    facets,
    mg_size,
    parse_graph6,
    two_disjoint_induced_cycles,
)
from . import _hullmorse

__all__ = [
    "HullMorseError",
    "betti_oracles_agree",
    "betti_totals",
    "complement",
    "corpus",
    "face_count",
    "facets",
    "mg_size",
    "parse_graph6",
    "two_disjoint_induced_cycles",
    "verify",
]


def verify(n, edges, field="q"):
    """Verdict for one triangle-free complement graph, as a dict."""
    return json.loads(_hullmorse.verify_json(n, edges, field))


def corpus(n_max, field="q", all=False):
    """Report over every triangle-free graph up to n_max vertices, as a dict."""
    return json.loads(_hullmorse.corpus_json(n_max, field, all))
