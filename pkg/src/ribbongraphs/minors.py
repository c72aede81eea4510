"""Ribbon graph minors: deletion, contraction, containment search, certificates.

Contraction is defined through partial duality, G/e = (G^{e}) - e.  For an
untwisted non-loop band this is the familiar endpoint merge with spliced
rotations; contracting loops can create extra vertices and components, so
deletion of isolated vertices is included as a minor step.
"""

from __future__ import annotations

import collections

from .core import (
    RibbonGraph,
    RibbonGraphError,
    _as_edge_subset,
    are_equivalent,
    find_isomorphism,
)
from .pdual import partial_dual

DELETE_EDGE = "delete_edge"
CONTRACT_EDGE = "contract_edge"
DELETE_VERTEX = "delete_vertex"

# steps are (op, name) pairs; a certificate replays its steps on a host graph
# and claims the result is equivalent to target via witness (as returned by
# find_isomorphism, or None when not recorded)
MinorCertificate = collections.namedtuple("MinorCertificate", "steps target witness")


def delete_edge(graph, e):
    """Remove the band of e; both half-edges leave the rotations, vertices stay."""
    if e not in graph.edges:
        raise RibbonGraphError("no edge %r" % (e,))
    verts = {
        v: tuple(h for h in rot if graph.edge_of(h) != e)
        for v, rot in graph.vertices.items()
    }
    edges = {f: t for f, t in graph.edges.items() if f != e}
    return RibbonGraph(verts, edges, check=False)


def contract_edge(graph, e):
    if e not in graph.edges:
        raise RibbonGraphError("no edge %r" % (e,))
    return delete_edge(partial_dual(graph, {e}), e)


def delete_vertex(graph, v):
    """Delete every edge with an end at v, then drop v itself."""
    if v not in graph.vertices:
        raise RibbonGraphError("no vertex %r" % (v,))
    g = graph
    for e in sorted({graph.edge_of(h) for h in graph.vertices[v]}):
        g = delete_edge(g, e)
    verts = {u: rot for u, rot in g.vertices.items() if u != v}
    return RibbonGraph(verts, g.edges, check=False)


def apply_step(graph, step):
    op, name = step
    if op == DELETE_EDGE:
        return delete_edge(graph, name)
    if op == CONTRACT_EDGE:
        return contract_edge(graph, name)
    if op == DELETE_VERTEX:
        return delete_vertex(graph, name)
    raise RibbonGraphError("unknown minor step %r" % (op,))


def replay(graph, steps):
    for step in steps:
        graph = apply_step(graph, step)
    return graph


def one_step_minors(graph):
    """One-step minors with their steps: deletions, contractions, then
    deletions of isolated vertices (general vertex deletion factors through
    edge deletions, so this generates the full minor relation)."""
    out = []
    for e in sorted(graph.edges):
        out.append((delete_edge(graph, e), (DELETE_EDGE, e)))
    for e in sorted(graph.edges):
        out.append((contract_edge(graph, e), (CONTRACT_EDGE, e)))
    for v in sorted(graph.vertices):
        if not graph.vertices[v]:
            out.append((delete_vertex(graph, v), (DELETE_VERTEX, v)))
    return out


def has_minor(graph, target, cap=10, target_cap=4, genus_prune=True):
    """Search for a step sequence taking graph to something equivalent to target.

    Breadth-first over one-step minors, deduplicated by canonical form, so the
    returned certificate has a minimum number of steps.  Deletions are tried
    before contractions.  Edge count never increases along a branch, and with
    genus_prune the search drops branches whose Euler genus has already fallen
    below the target's (genus is monotone under minors; the property suite
    checks this exhaustively at small scale and gates the flag).

    Returns a MinorCertificate or None.
    """
    if target.num_edges > target_cap:
        raise ValueError(
            "target has %d edges, over the cap of %d" % (target.num_edges, target_cap)
        )
    if graph.num_edges > cap:
        raise ValueError(
            "host has %d edges, over the search cap of %d; raise cap explicitly"
            % (graph.num_edges, cap)
        )
    want = target.canonical_form()
    want_genus = target.euler_genus()

    def viable(g):
        if g.num_edges < target.num_edges:
            return False
        if genus_prune and g.euler_genus() < want_genus:
            return False
        return True

    if not viable(graph):
        return None
    seen = {graph.canonical_form()}
    queue = collections.deque([(graph, ())])
    while queue:
        g, steps = queue.popleft()
        if g.num_edges == target.num_edges and g.canonical_form() == want:
            return MinorCertificate(steps, target, find_isomorphism(g, target))
        for child, step in one_step_minors(g):
            if not viable(child):
                continue
            key = child.canonical_form()
            if key in seen:
                continue
            seen.add(key)
            queue.append((child, steps + (step,)))
    return None


def verify_certificate(graph, cert):
    """Replay the certificate's steps on graph and re-check the equivalence.

    The recorded witness is not trusted; equivalence is recomputed.  Returns
    False on any replay failure (missing edges or vertices included).
    """
    try:
        got = replay(graph, cert.steps)
    except RibbonGraphError:
        return False
    return are_equivalent(got, cert.target)


def minor_closure(graph, memo=None):
    """Canonical forms of all minors of graph (graph itself included).

    memo maps canonical forms to their already-computed closures and may be
    shared across calls; closures only depend on the equivalence class.
    """
    if memo is None:
        memo = {}
    key = graph.canonical_form()
    got = memo.get(key)
    if got is not None:
        return got
    acc = {key}
    for child, _step in one_step_minors(graph):
        acc |= minor_closure(child, memo)
    out = frozenset(acc)
    memo[key] = out
    return out


def _raw_key(graph):
    verts = tuple(sorted(graph.vertices.items()))
    edges = tuple(sorted(graph.edges.items()))
    return verts, edges


def all_minors(graph):
    """Every minor of graph as a concrete labelled graph, duplicates possible
    up to equivalence (deduplicated only on exact structure)."""
    seen = {_raw_key(graph)}
    out = [graph]
    queue = collections.deque([graph])
    while queue:
        g = queue.popleft()
        for child, _step in one_step_minors(g):
            k = _raw_key(child)
            if k in seen:
                continue
            seen.add(k)
            out.append(child)
            queue.append(child)
    return out


def minor_duality_exchange_check(graph, subset, cap=5):
    """Partial duals of minors are exactly the minors of the partial dual.

    Computes {J^(A ∩ E(J)) : J minor of graph} and {minors of graph^A} as two
    sets of canonical forms, by entirely separate routes, and compares them.
    """
    if graph.num_edges > cap:
        raise ValueError(
            "graph has %d edges, over the cap of %d" % (graph.num_edges, cap)
        )
    sub = _as_edge_subset(graph, subset)
    left = set()
    for j in all_minors(graph):
        left.add(partial_dual(j, sub & set(j.edges)).canonical_form())
    right = {j.canonical_form() for j in all_minors(partial_dual(graph, sub))}
    return left == right
