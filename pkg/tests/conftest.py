"""Shared graph zoo and pools for the test suite."""

import functools
import itertools

from ribbongraphs import RibbonGraph, bouquet, single_vertex

import oracles


def loop(twisted=False):
    return bouquet("ee", twisted={"e"} if twisted else ())


def interlaced_pair(twisted=()):
    return bouquet("efef", twisted=twisted)


def nested_pair(twisted=()):
    return bouquet("eeff", twisted=twisted)


def x1():
    return bouquet("eeff", twisted={"e", "f"})


def x2():
    return bouquet("abcabc")


def theta(planar=True):
    w = ("c.2", "b.2", "a.2") if planar else ("a.2", "b.2", "c.2")
    return RibbonGraph(
        {"u": ("a.1", "b.1", "c.1"), "w": w},
        {e: (e + ".1", e + ".2", False) for e in "abc"},
    )


def x3():
    return theta(planar=False)


def path2(twisted=False):
    return RibbonGraph({"u": ("e.1",), "w": ("e.2",)}, {"e": ("e.1", "e.2", twisted)})


def dumbbell():
    return RibbonGraph(
        {"u": ("a.1", "c.1", "a.2"), "w": ("b.1", "c.2", "b.2")},
        {"a": ("a.1", "a.2", False), "b": ("b.1", "b.2", False), "c": ("c.1", "c.2", False)},
    )


def zoo():
    return [
        single_vertex(),
        loop(),
        loop(True),
        path2(),
        path2(True),
        interlaced_pair(),
        interlaced_pair({"e", "f"}),
        nested_pair(),
        x1(),
        x2(),
        theta(True),
        theta(False),
        dumbbell(),
        bouquet("abcabc", twisted={"b"}),
    ]


def pool_small():
    """Exhaustive rotation systems with at most 2 edges, plus the zoo."""
    graphs = [RibbonGraph({}, {})]
    for m in (1, 2):
        graphs.extend(oracles.naive_rotation_systems(m))
    graphs.extend(zoo())
    return graphs


def pool_sampled(stride=7):
    """A spread-out sample of the 3-edge rotation systems."""
    return list(itertools.islice(oracles.naive_rotation_systems(3), 0, None, stride))


def dedup_classes(graphs):
    """One representative per equivalence class, in first-seen order."""
    seen = set()
    out = []
    for g in graphs:
        key = g.canonical_form()
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


@functools.lru_cache(maxsize=None)
def small_classes(max_edges=3, connected=None):
    """Deduplicated classes from the exhaustive generators, up to max_edges."""
    graphs = [RibbonGraph({}, {})]
    for m in range(1, max_edges + 1):
        graphs.extend(oracles.naive_rotation_systems(m))
    if connected:
        graphs = [g for g in graphs if len(g.component_vertex_sets()) == 1]
    return dedup_classes(graphs)
