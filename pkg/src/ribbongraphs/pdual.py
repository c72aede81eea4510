"""Partial duality of ribbon graphs.

The partial dual over an edge subset A re-reads the same surface data: the
boundary circles of the spanning ribbon subgraph (V(G), A) become the vertex
disks of the dual, and every edge band is re-attached along the marks it
leaves on that boundary - an A-band along its two sides, a non-A band along
its two attachment arcs.  The trace therefore emits one directed arrow per
mark; the resulting arrow presentation is converted back to a ribbon graph.

The full dual (A = all edges) is the geometric dual: its vertices are the
boundary components of G.
"""

from __future__ import annotations

from .core import (
    ArrowPresentation,
    RibbonGraph,
    _as_edge_subset,
    _trace_boundary,
    from_arrow_presentation,
)


def partial_dual(graph, edge_subset):
    """The partial dual of graph over edge_subset.

    Edge labels are preserved; vertex and half-edge labels of the result are
    fresh, assigned in deterministic trace order.
    """
    sub = _as_edge_subset(graph, edge_subset)
    circles, lone = _trace_boundary(graph, sub)
    arrow_circles = [tuple(tokens) for _states, tokens in circles]
    arrow_circles.extend(tuple(tokens) for _v, tokens in lone)
    pres = ArrowPresentation(arrow_circles, check=False)
    dual = from_arrow_presentation(pres)
    if dual.num_edges != graph.num_edges:
        raise AssertionError("partial dual lost edges; trace is inconsistent")
    return dual


def geometric_dual(graph):
    """Dual over every edge; vertices of the result are the faces of graph."""
    return partial_dual(graph, graph.edges)


def gray_subsets(items):
    """All subsets of items in reflected Gray-code order (one flip per step)."""
    items = sorted(items)
    n = len(items)
    current = set()
    yield frozenset(current)
    for k in range(1, 1 << n):
        # bit flipped between Gray codes of k-1 and k
        bit = (k ^ (k >> 1) ^ (k - 1) ^ ((k - 1) >> 1)).bit_length() - 1
        item = items[bit]
        if item in current:
            current.discard(item)
        else:
            current.add(item)
        yield frozenset(current)


def genus_profile(graph, cap=20):
    """Euler genus counts over all partial duals of graph.

    Returns {"counts": {genus: number of subsets}, "min": least genus}.
    Subsets are enumerated in Gray-code order; each dual is recomputed from
    scratch.  Refuses graphs with more than cap edges.
    """
    if graph.num_edges > cap:
        raise ValueError(
            "genus_profile over %d edges exceeds the cap of %d; raise the cap explicitly"
            % (graph.num_edges, cap)
        )
    counts = {}
    for sub in gray_subsets(graph.edges):
        g = partial_dual(graph, sub).euler_genus()
        counts[g] = counts.get(g, 0) + 1
    return {"counts": dict(sorted(counts.items())), "min": min(counts)}
