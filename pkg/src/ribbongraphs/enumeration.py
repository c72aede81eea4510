"""Exhaustive generation of small ribbon graphs up to equivalence.

Bouquets come from signed double-occurrence words with labels in first-use
order.  Connected classes come from partial duals of bouquets: undoing the
spanning-tree reduction, every connected ribbon graph is a partial dual of a
bouquet on the same edge set, so sweeping all subsets over all bouquet classes
is complete (cross-checked in the tests against naive generation from raw
permutation data).  Disconnected classes are multisets of connected ones,
kept finite by budgeting max_edges total edges and max_edges + 1 total
vertices.
"""

import functools
from collections import namedtuple

from .core import RibbonGraph, bouquet, canonical_graph
from .pdual import gray_subsets, partial_dual

BOUQUET_CAP = 6
GENERAL_CAP = 4

EnumerationSpec = namedtuple(
    "EnumerationSpec", "max_edges connected_only bouquets_only"
)
EnumerationSpec.__new__.__defaults__ = (False, False)


def _matchings(positions):
    if not positions:
        yield ()
        return
    a = positions[0]
    for i in range(1, len(positions)):
        rest = positions[1:i] + positions[i + 1 :]
        for m in _matchings(rest):
            yield ((a, positions[i]),) + m


def double_occurrence_words(num_edges):
    """All double-occurrence words on 2n positions, labels in first-use order."""
    if num_edges == 0:
        yield ()
        return
    for match in _matchings(tuple(range(2 * num_edges))):
        word = [None] * (2 * num_edges)
        for lab, (i, j) in enumerate(match):
            word[i] = word[j] = "e%d" % lab
        yield tuple(word)


@functools.lru_cache(maxsize=None)
def _bouquet_reps(num_edges):
    """canonical_form -> canonical representative, exactly num_edges edges."""
    seen = {}
    labels = ["e%d" % i for i in range(num_edges)]
    for word in double_occurrence_words(num_edges):
        for mask in range(1 << num_edges):
            tw = {labels[i] for i in range(num_edges) if mask >> i & 1}
            g = bouquet(word, twisted=tw)
            key = g.canonical_form()
            if key not in seen:
                seen[key] = canonical_graph(g)
    return seen


@functools.lru_cache(maxsize=None)
def _connected_reps(max_edges):
    seen = {}
    for n in range(max_edges + 1):
        for b in _bouquet_reps(n).values():
            for sub in gray_subsets(b.edges):
                g = partial_dual(b, sub)
                key = g.canonical_form()
                if key not in seen:
                    seen[key] = canonical_graph(g)
    return seen


def disjoint_union(graphs):
    """One graph with a renamed copy of each input as its components."""
    verts = {}
    edges = {}
    for k, g in enumerate(graphs):
        names = {}
        for e, (h1, h2, tw) in sorted(g.edges.items()):
            f = "c%d_%s" % (k, e)
            names[h1] = f + ".1"
            names[h2] = f + ".2"
            edges[f] = (f + ".1", f + ".2", tw)
        for v, rot in sorted(g.vertices.items()):
            verts["c%d_%s" % (k, v)] = tuple(names[h] for h in rot)
    return RibbonGraph(verts, edges)


@functools.lru_cache(maxsize=None)
def _all_reps(max_edges):
    conn = [_connected_reps(max_edges)[k] for k in sorted(_connected_reps(max_edges))]
    seen = {}

    def emit(parts):
        g = disjoint_union(parts)
        key = g.canonical_form()
        if key not in seen:
            seen[key] = canonical_graph(g)

    def grow(idx, parts, used_e, used_v):
        emit(parts)
        for i in range(idx, len(conn)):
            c = conn[i]
            if used_e + c.num_edges > max_edges:
                continue
            if used_v + c.num_vertices > max_edges + 1:
                continue
            grow(i, parts + [c], used_e + c.num_edges, used_v + c.num_vertices)

    grow(0, [], 0, 0)
    return seen


def enumerate_classes(spec, cap=None):
    """One canonical representative per equivalence class, sorted by form."""
    if spec.max_edges < 0:
        raise ValueError("max_edges must be >= 0")
    limit = cap
    if limit is None:
        limit = BOUQUET_CAP if spec.bouquets_only else GENERAL_CAP
    if spec.max_edges > limit:
        raise ValueError(
            "enumeration over %d edges exceeds the cap of %d; pass cap explicitly"
            % (spec.max_edges, limit)
        )
    if spec.bouquets_only:
        seen = {}
        for n in range(spec.max_edges + 1):
            seen.update(_bouquet_reps(n))
    elif spec.connected_only:
        seen = _connected_reps(spec.max_edges)
    else:
        seen = _all_reps(spec.max_edges)
    for key in sorted(seen):
        yield seen[key]


def count_classes(spec, cap=None):
    return sum(1 for _ in enumerate_classes(spec, cap=cap))


def bouquet_classes(max_edges, cap=None):
    """List of bouquet class representatives with at most max_edges edges."""
    spec = EnumerationSpec(max_edges, bouquets_only=True)
    return list(enumerate_classes(spec, cap=cap))


def connected_classes(max_edges, cap=None):
    spec = EnumerationSpec(max_edges, connected_only=True)
    return list(enumerate_classes(spec, cap=cap))
