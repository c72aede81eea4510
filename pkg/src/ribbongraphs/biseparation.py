"""Separating vertices and biseparations.

An edge subset A defines a biseparation when the graph decomposes as a
sequence of one-point joins of pieces each lying entirely inside A or
entirely inside its complement; equivalently, no block (with every loop its
own block) has edges on both sides.  Every vertex shared by the two
restrictions is then a separating vertex, but that weaker condition alone
does not make a biseparation: a shared vertex can be separating without the
cut putting A and its complement on opposite sides.  The kind of a
biseparation looks at the Euler genera of the components of the two
restrictions: all plane, or plane except for exactly one projective-plane
component.  These kinds certify low-genus partial duals.
"""

from __future__ import annotations

import collections

import networkx as nx

from .core import RibbonGraphError, _as_edge_subset
from .pdual import partial_dual

PLANE = "plane"
RP2 = "rp2"
OTHER = "other"
NOT_A_BISEPARATION = "not-a-biseparation"

# side_a / side_b report the components of the restriction to the subset and
# to its complement as (sorted edge tuple, euler genus) pairs
BiseparationCertificate = collections.namedtuple(
    "BiseparationCertificate", "subset kind side_a side_b"
)


def _incidence_graph(graph):
    # each band subdivided twice so loops and parallel bands become plain
    # cycles; block structure (with every loop its own block) then matches
    # articulation points of a simple graph
    g = nx.Graph()
    g.add_nodes_from(("v", v) for v in graph.vertices)
    for e, (h1, h2, _tw) in graph.edges.items():
        u, w = graph.vertex_of(h1), graph.vertex_of(h2)
        g.add_edge(("v", u), ("p", e))
        g.add_edge(("p", e), ("q", e))
        g.add_edge(("q", e), ("v", w))
    return g


def separating_vertices(graph):
    """Vertices meeting at least two blocks, where each loop is its own block."""
    arts = nx.articulation_points(_incidence_graph(graph))
    return {name for kind, name in arts if kind == "v"}


def defines_biseparation(graph, subset):
    """True when no block has edges on both sides of the split.

    Two edges share a block exactly when some cycle passes through both, so
    this is the same as asking for a one-point-join decomposition whose
    pieces are each contained in one side.
    """
    sub = _as_edge_subset(graph, subset)
    for comp in nx.biconnected_components(_incidence_graph(graph)):
        block = {name for kind, name in comp if kind == "p"}
        if block & sub and block - sub:
            return False
    return True


def _component_report(graph, sub, cache=None):
    comps = []
    for c in graph.restrict(sub).components():
        edges = tuple(sorted(c.edges))
        if cache is None:
            g = c.euler_genus()
        else:
            g = cache.get(edges)
            if g is None:
                g = c.euler_genus()
                cache[edges] = g
        comps.append((edges, g))
    return tuple(sorted(comps))


def biseparation_kind(graph, subset, _cache=None):
    sub = _as_edge_subset(graph, subset)
    if not defines_biseparation(graph, sub):
        return NOT_A_BISEPARATION
    rest = frozenset(graph.edges) - sub
    genera = [g for _edges, g in _component_report(graph, sub, _cache)]
    genera += [g for _edges, g in _component_report(graph, rest, _cache)]
    nonzero = sorted(g for g in genera if g != 0)
    if not nonzero:
        return PLANE
    if nonzero == [1]:
        return RP2
    return OTHER


def find_biseparation(graph, kind, cap=16):
    """First subset (in binary counting order over sorted edges) of the asked
    kind, as a certificate, or None when no subset qualifies."""
    if kind not in (PLANE, RP2):
        raise ValueError("kind must be %r or %r" % (PLANE, RP2))
    if graph.num_edges > cap:
        raise ValueError(
            "subset scan over %d edges exceeds the cap of %d; raise cap explicitly"
            % (graph.num_edges, cap)
        )
    edges = sorted(graph.edges)
    cache = {}
    for bits in range(1 << len(edges)):
        sub = frozenset(e for i, e in enumerate(edges) if bits >> i & 1)
        if biseparation_kind(graph, sub, cache) == kind:
            rest = frozenset(graph.edges) - sub
            return BiseparationCertificate(
                sub,
                kind,
                _component_report(graph, sub, cache),
                _component_report(graph, rest, cache),
            )
    return None


def duality_biseparation_correspondence(graph, cap=16):
    """Check, for every subset A, that the partial dual's Euler genus is 0
    exactly for plane kinds and 1 exactly for projective-plane kinds."""
    if len(graph.component_vertex_sets()) != 1:
        raise RibbonGraphError("connected graph required")
    if graph.num_edges > cap:
        raise ValueError(
            "subset scan over %d edges exceeds the cap of %d; raise cap explicitly"
            % (graph.num_edges, cap)
        )
    edges = sorted(graph.edges)
    cache = {}
    for bits in range(1 << len(edges)):
        sub = frozenset(e for i, e in enumerate(edges) if bits >> i & 1)
        eg = partial_dual(graph, sub).euler_genus()
        kind = biseparation_kind(graph, sub, cache)
        if (eg == 0) != (kind == PLANE):
            return False
        if (eg == 1) != (kind == RP2):
            return False
    return True
