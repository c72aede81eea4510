"""Ribbon graphs as signed rotation systems.

A ribbon graph is a surface with boundary assembled from vertex disks and
edge bands; combinatorially it is a signed rotation system: each vertex
carries a cyclic sequence of half-edges (the order in which band ends attach
around the vertex disk) and each edge pairs two half-edges and carries a
twist flag (twisted = the band is attached with a half turn).

Conventions, fixed once and used by every module:

* Rotations are read in a fixed reference direction.  The band end of a
  half-edge ``h`` covers an arc of the vertex circle with two corners, named
  ``a(h)`` and ``b(h)``, with ``a(h)`` first in reading direction.
* An untwisted band has sides joining corners a(h)-b(h') and b(h)-a(h');
  a twisted band has sides joining a(h)-a(h') and b(h)-b(h').
* Flipping a vertex reverses its rotation and toggles the twist of every
  non-loop edge with exactly one end there; loops keep their twist.  Two
  ribbon graphs are equivalent when some relabelling composed with vertex
  flips carries one onto the other.

Half-edge ids are arbitrary strings; the file format and the constructors
here use ``<edge>.1`` / ``<edge>.2``.
"""

from __future__ import annotations

import itertools


class RibbonGraphError(ValueError):
    """Raised for structurally invalid ribbon graph data."""


_NAME_OK = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _check_name(kind, name):
    if not isinstance(name, str) or not name or not set(name) <= _NAME_OK:
        raise RibbonGraphError("%s name %r must be a nonempty [A-Za-z0-9_]+ string" % (kind, name))


class RibbonGraph:
    """Immutable signed rotation system.

    vertices: mapping vertex id -> tuple of half-edge ids (cyclic order).
    edges: mapping edge id -> (half-edge, half-edge, twisted flag).
    """

    __slots__ = ("vertices", "edges", "_vertex_of", "_pos", "_edge_of", "_partner", "_canon")

    def __init__(self, vertices, edges, check=True):
        self.vertices = {v: tuple(rot) for v, rot in vertices.items()}
        self.edges = {e: (ends[0], ends[1], bool(ends[2])) for e, ends in edges.items()}
        self._vertex_of = {}
        self._pos = {}
        for v, rot in self.vertices.items():
            for i, h in enumerate(rot):
                if h in self._vertex_of:
                    raise RibbonGraphError("duplicate occurrence of half-edge %r" % (h,))
                self._vertex_of[h] = v
                self._pos[h] = i
        self._edge_of = {}
        self._partner = {}
        for e, (h1, h2, _) in self.edges.items():
            for h in (h1, h2):
                if h in self._edge_of:
                    raise RibbonGraphError("half-edge %r used by more than one edge" % (h,))
                self._edge_of[h] = e
            if h1 == h2:
                raise RibbonGraphError("edge %r pairs a half-edge with itself" % (e,))
            self._partner[h1] = h2
            self._partner[h2] = h1
        self._canon = None
        if check:
            self.validate()

    # -- structural queries -------------------------------------------------

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def half_edges(self):
        return sorted(self._edge_of)

    def rotation(self, v):
        return self.vertices[v]

    def vertex_of(self, h):
        return self._vertex_of[h]

    def edge_of(self, h):
        return self._edge_of[h]

    def partner(self, h):
        return self._partner[h]

    def twisted(self, e):
        return self.edges[e][2]

    def ends(self, e):
        h1, h2, _ = self.edges[e]
        return self._vertex_of[h1], self._vertex_of[h2]

    def is_loop(self, e):
        u, w = self.ends(e)
        return u == w

    def degree(self, v):
        return len(self.vertices[v])

    def validate(self):
        """Check the rotation/pairing structure; raise on the first violation."""
        for v in self.vertices:
            _check_name("vertex", v)
        for e in self.edges:
            _check_name("edge", e)
        for h in sorted(self._vertex_of):
            if h not in self._edge_of:
                raise RibbonGraphError("dangling half-edge %r (in a rotation, not in any edge)" % (h,))
        for e in sorted(self.edges):
            h1, h2, _ = self.edges[e]
            for h in (h1, h2):
                if h not in self._vertex_of:
                    raise RibbonGraphError("unplaced half-edge %r of edge %r (missing from rotations)" % (h, e))

    def __repr__(self):
        return "RibbonGraph(V=%d, E=%d)" % (self.num_vertices, self.num_edges)

    # -- surface structure ---------------------------------------------------

    def boundary_components(self):
        """Boundary walks of the surface, one per boundary circle.

        Each walk is a tuple of (half-edge, corner) visits, corner in "ab";
        a visit records entering the band of that half-edge at that corner.
        Across all walks every band side is traversed exactly once.  A vertex
        with no edges contributes one empty walk (a bare disk's boundary).
        """
        circles, lone = _trace_boundary(self, frozenset(self.edges))
        walks = [tuple(states) for states, _tokens in circles]
        walks.extend(() for _v in lone)
        return walks

    def components(self):
        """Connected components as ribbon graphs, in sorted-vertex order."""
        parts = self.component_vertex_sets()
        out = []
        for vs in parts:
            verts = {v: self.vertices[v] for v in vs}
            edges = {e: t for e, t in self.edges.items() if self._vertex_of[t[0]] in vs}
            out.append(RibbonGraph(verts, edges, check=False))
        return out

    def component_vertex_sets(self):
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for h1, h2, _ in self.edges.values():
            a, b = find(self._vertex_of[h1]), find(self._vertex_of[h2])
            if a != b:
                parent[a] = b
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def euler_genus(self):
        """Euler genus of the underlying surface, summed over components."""
        ncomp = len(self.component_vertex_sets())
        nfaces = len(self.boundary_components())
        return 2 * ncomp - self.num_vertices + self.num_edges - nfaces

    def is_orientable(self):
        """True when some assignment of vertex flips clears every twist."""
        flip = {}
        for vs in self.component_vertex_sets():
            flip[vs[0]] = False
            queue = [vs[0]]
            seen = {vs[0]}
            incident = {v: [] for v in vs}
            for e, (h1, h2, tw) in self.edges.items():
                u, w = self._vertex_of[h1], self._vertex_of[h2]
                if u in incident:
                    if u == w:
                        if tw:
                            return False  # a twisted loop survives every flip
                    else:
                        incident[u].append((w, tw))
                        incident[w].append((u, tw))
            while queue:
                u = queue.pop()
                for w, tw in incident[u]:
                    want = flip[u] ^ tw
                    if w in seen:
                        if flip[w] != want:
                            return False
                    else:
                        flip[w] = want
                        seen.add(w)
                        queue.append(w)
        return True

    def restrict(self, edge_subset):
        """Ribbon subgraph on a subset of edges; vertices left bare are dropped."""
        sub = _as_edge_subset(self, edge_subset)
        verts = {}
        for v, rot in self.vertices.items():
            kept = tuple(h for h in rot if self._edge_of[h] in sub)
            if kept:
                verts[v] = kept
        edges = {e: self.edges[e] for e in sub}
        return RibbonGraph(verts, edges, check=False)

    # -- arrow presentations ---------------------------------------------------

    def to_arrow_presentation(self):
        """One circle per vertex; arrow directions encode the twists."""
        first_dir = {}
        circles = []
        for v in sorted(self.vertices):
            circ = []
            for h in self.vertices[v]:
                e = self._edge_of[h]
                if e not in first_dir:
                    first_dir[e] = True
                    circ.append((e, True))
                else:
                    circ.append((e, first_dir[e] ^ self.edges[e][2]))
            circles.append(tuple(circ))
        return ArrowPresentation(circles)

    # -- equivalence ------------------------------------------------------------

    def canonical_form(self):
        """Hashable encoding equal exactly for equivalent ribbon graphs."""
        if self._canon is None:
            comps = self.components()
            self._canon = tuple(sorted(_canonical_connected(c) for c in comps))
        return self._canon


class ArrowPresentation:
    """Circles carrying labelled directed arrows, each label on exactly two.

    Each circle is a cyclic tuple of (label, forward) arrows; ``forward``
    records whether the arrow points with the circle's reading direction.
    Equal directions on the two arrows of a label give an untwisted edge.
    """

    __slots__ = ("circles",)

    def __init__(self, circles, check=True):
        self.circles = tuple(tuple((lab, bool(fwd)) for lab, fwd in c) for c in circles)
        if check:
            self.validate()

    def validate(self):
        counts = {}
        for c in self.circles:
            for lab, _ in c:
                _check_name("label", lab)
                counts[lab] = counts.get(lab, 0) + 1
        for lab in sorted(counts):
            if counts[lab] != 2:
                raise RibbonGraphError("label %r occurs %d times, want exactly 2" % (lab, counts[lab]))

    def labels(self):
        return sorted({lab for c in self.circles for lab, _ in c})

    def __repr__(self):
        return "ArrowPresentation(circles=%d, labels=%d)" % (len(self.circles), len(self.labels()))


def from_arrow_presentation(pres):
    """Build the ribbon graph: circles become vertex disks, arrow pairs bands."""
    pres.validate()
    verts = {}
    seen = {}
    edges = {}
    for i, circ in enumerate(pres.circles):
        rot = []
        for lab, fwd in circ:
            if lab not in seen:
                h = lab + ".1"
                seen[lab] = (h, fwd)
            else:
                h1, fwd1 = seen[lab]
                h = lab + ".2"
                edges[lab] = (h1, h, fwd1 != fwd)
            rot.append(h)
        verts["v%d" % i] = tuple(rot)
    return RibbonGraph(verts, edges)


# -- boundary tracing ----------------------------------------------------------
#
# States are (half-edge, corner) pairs: "about to cross the band of h having
# arrived at corner a(h) (reading direction) or b(h) (against it)".  Crossing
# rules follow from the side conventions in the module docstring:
#   untwisted: a-entry exits at b(partner) and walks on in reading direction;
#              b-entry exits at a(partner) and walks back against it;
#   twisted:   a-entry exits at a(partner) and walks back;
#              b-entry exits at b(partner) and walks on.
# Each boundary circle appears as two mirror-image state orbits (the two
# traversal directions); _mirror pairs them and the trace emits one per pair.


def _mirror(graph, state):
    h, corner = state
    e = graph.edge_of(h)
    other = graph.partner(h)
    if graph.edges[e][2]:
        return (other, corner)
    return (other, "b" if corner == "a" else "a")


def _forward_flag(graph, h):
    # Direction induced on h's attachment arc by the band boundary orientation,
    # anchored at the edge's first-stored half-edge: True = with reading direction.
    e = graph.edge_of(h)
    h1, _h2, tw = graph.edges[e]
    if h == h1:
        return True
    return not tw


def _step(graph, in_subset, state):
    h, entry = state
    e = graph.edge_of(h)
    h1, _h2, tw = graph.edges[e]
    if h == h1:
        agree = entry == "b"
    else:
        agree = entry == ("a" if tw else "b")
    tokens = [(e, agree)]
    other = graph.partner(h)
    exit_corner = entry if tw else ("b" if entry == "a" else "a")
    v = graph.vertex_of(other)
    rot = graph.vertices[v]
    d = len(rot)
    i = graph._pos[other]
    if exit_corner == "b":  # continue in reading direction to the next subset corner
        j = (i + 1) % d
        while not in_subset[rot[j]]:
            tokens.append((graph.edge_of(rot[j]), _forward_flag(graph, rot[j])))
            j = (j + 1) % d
        return (rot[j], "a"), tokens
    j = (i - 1) % d  # walk back against reading direction
    while not in_subset[rot[j]]:
        tokens.append((graph.edge_of(rot[j]), not _forward_flag(graph, rot[j])))
        j = (j - 1) % d
    return (rot[j], "b"), tokens


def _trace_boundary(graph, subset):
    """Trace the boundary of the spanning ribbon subgraph (V, subset).

    Returns (circles, lone): circles are (states, tokens) per traced boundary
    circle, one representative orbit per mirror pair, in order of smallest
    state; lone lists (vertex, tokens) for vertices with no subset half-edge,
    whose full circle is a boundary component by itself.  Tokens record every
    subset band side traversed and every non-subset attachment arc crossed as
    (edge, direction-agrees flag).
    """
    in_subset = {h: graph.edge_of(h) in subset for h in graph._edge_of}
    states = sorted((h, c) for h in graph._edge_of if in_subset[h] for c in "ab")
    used = set()
    circles = []
    for s0 in states:
        if s0 in used:
            continue
        visits = []
        tokens = []
        s = s0
        while True:
            used.add(s)
            used.add(_mirror(graph, s))
            visits.append(s)
            s, toks = _step(graph, in_subset, s)
            tokens.extend(toks)
            if s == s0:
                break
        circles.append((visits, tokens))
    lone = []
    for v in sorted(graph.vertices):
        rot = graph.vertices[v]
        if any(in_subset[h] for h in rot):
            continue
        toks = [(graph.edge_of(h), _forward_flag(graph, h)) for h in rot]
        lone.append((v, toks))
    return circles, lone


# -- equivalence and canonical form ---------------------------------------------


def _canonical_connected(graph):
    """Minimum rooted encoding over all root darts and flip assignments."""
    if graph.num_edges == 0:
        # same shape as _encode_rooted so mixed component lists sort
        return ((0,) * graph.num_vertices, (), ())
    verts = sorted(graph.vertices)
    fwd = {v: graph.vertices[v] for v in verts}
    rev = {v: tuple(reversed(graph.vertices[v])) for v in verts}
    darts = sorted(graph._edge_of)
    best = None
    for mask in range(1 << len(verts)):
        flips = {v: bool(mask >> i & 1) for i, v in enumerate(verts)}
        rots = {v: (rev[v] if flips[v] else fwd[v]) for v in verts}
        pos = {}
        for v in verts:
            for i, h in enumerate(rots[v]):
                pos[h] = i
        for root in darts:
            enc = _encode_rooted(graph, rots, pos, flips, root)
            if best is None or enc < best:
                best = enc
    return best


def _encode_rooted(graph, rots, pos, flips, root):
    ids = {}
    dart_order = []
    vertex_order = []

    def read_vertex(start):
        v = graph.vertex_of(start)
        vertex_order.append(v)
        rot = rots[v]
        d = len(rot)
        i = pos[start]
        for k in range(d):
            h = rot[(i + k) % d]
            ids[h] = len(dart_order)
            dart_order.append(h)

    read_vertex(root)
    qi = 0
    while qi < len(dart_order):
        p = graph.partner(dart_order[qi])
        if p not in ids:
            read_vertex(p)
        qi += 1
    degrees = tuple(len(rots[v]) for v in vertex_order)
    partner_code = tuple(ids[graph.partner(h)] for h in dart_order)
    twists = []
    done = set()
    for h in dart_order:
        e = graph.edge_of(h)
        if e in done:
            continue
        done.add(e)
        h1, h2, tw = graph.edges[e]
        u, w = graph.vertex_of(h1), graph.vertex_of(h2)
        if u != w:
            tw = tw ^ flips[u] ^ flips[w]
        twists.append(tw)
    return (degrees, partner_code, tuple(twists))


def canonical_graph(graph):
    """Deterministic representative of the graph's equivalence class."""
    comps = graph.canonical_form()
    verts = {}
    edges = {}
    nv = ne = 0
    for enc in comps:
        degrees, partner_code, twists = enc
        names = {}
        k = 0
        for d in degrees:
            rot = []
            for _ in range(d):
                rot.append(k)
                k += 1
            verts["v%d" % nv] = tuple(rot)  # ids for now, renamed below
            nv += 1
        pair_no = 0
        for i, j in enumerate(partner_code):
            if i < j:
                e = "e%d" % ne
                ne += 1
                names[i] = e + ".1"
                names[j] = e + ".2"
                edges[e] = (e + ".1", e + ".2", twists[pair_no])
                pair_no += 1
        for v in list(verts):
            rot = verts[v]
            if rot and isinstance(rot[0], int):
                verts[v] = tuple(names[i] for i in rot)
    return RibbonGraph(verts, edges)


def find_isomorphism(g1, g2):
    """Equivalence witness from g1 to g2, or None.

    Returns (vertex_map, edge_map, half_edge_map, flipped) where flipped is the
    set of g2 vertices whose rotation is matched in reverse.  Independent of
    canonical_form: a direct backtracking match over root darts and flips.
    """
    if g1.num_vertices != g2.num_vertices or g1.num_edges != g2.num_edges:
        return None
    if sorted(map(len, g1.vertices.values())) != sorted(map(len, g2.vertices.values())):
        return None
    comps1 = g1.components()
    comps2 = g2.components()
    if len(comps1) != len(comps2):
        return None
    used = [False] * len(comps2)
    vmap, emap, hmap, flipped = {}, {}, {}, set()

    def place(i):
        if i == len(comps1):
            return True
        for j, c2 in enumerate(comps2):
            if used[j]:
                continue
            m = _match_connected(comps1[i], c2)
            if m is not None:
                used[j] = True
                vmap.update(m[0])
                emap.update(m[1])
                hmap.update(m[2])
                flipped.update(m[3])
                if place(i + 1):
                    return True
                used[j] = False
                for d in m[0]:
                    del vmap[d]
                for d in m[1]:
                    del emap[d]
                for d in m[2]:
                    del hmap[d]
                flipped.difference_update(m[3])
        return False

    if place(0):
        return vmap, emap, hmap, flipped
    return None


def _match_connected(g1, g2):
    if g1.num_vertices != g2.num_vertices or g1.num_edges != g2.num_edges:
        return None
    if g1.num_edges == 0:
        if g1.num_vertices != 1 or g2.num_vertices != 1:
            return None
        return ({next(iter(g1.vertices)): next(iter(g2.vertices))}, {}, {}, set())
    a0 = min(g1._edge_of)
    for b0 in sorted(g2._edge_of):
        for flip0 in (False, True):
            m = _extend_match(g1, g2, a0, b0, flip0)
            if m is not None:
                return m
    return None


def _extend_match(g1, g2, a0, b0, flip0):
    # Pair vertices by aligning rotations from anchor darts; each new vertex
    # tries both reading directions (its flip bit), backtracking on conflict.
    hmap = {}
    vmap = {}
    flips = {}

    def align(a, b, flip):
        v1, v2 = g1.vertex_of(a), g2.vertex_of(b)
        rot1 = g1.vertices[v1]
        rot2 = g2.vertices[v2]
        if len(rot1) != len(rot2):
            return None
        if flip:
            rot2 = tuple(reversed(rot2))
        d = len(rot1)
        i1 = rot1.index(a)
        i2 = rot2.index(b)
        pairs = []
        for k in range(d):
            pairs.append((rot1[(i1 + k) % d], rot2[(i2 + k) % d]))
        return v1, v2, pairs

    def check_edge(e1):
        h1, h2, tw1 = g1.edges[e1]
        if h1 not in hmap or h2 not in hmap:
            return True
        q1, q2 = hmap[h1], hmap[h2]
        if g2.partner(q1) != q2:
            return False
        e2 = g2.edge_of(q1)
        tw2 = g2.edges[e2][2]
        u2, w2 = g2.vertex_of(q1), g2.vertex_of(q2)
        if u2 == w2:
            return tw1 == tw2
        return tw1 == (tw2 ^ flips[u2] ^ flips[w2])

    def settle(a, b, flip, trail):
        got = align(a, b, flip)
        if got is None:
            return False
        v1, v2, pairs = got
        if v1 in vmap or v2 in flips:
            return vmap.get(v1) == v2  # already matched; alignment rechecked below
        vmap[v1] = v2
        flips[v2] = flip
        trail.append((v1, v2))
        for p, q in pairs:
            if p in hmap:
                if hmap[p] != q:
                    return False
            else:
                hmap[p] = q
                trail.append(p)
            if not check_edge(g1.edge_of(p)):
                return False
        return True

    def search(frontier):
        # frontier: darts of g1 whose partner's vertex may be unvisited
        for idx in range(len(frontier)):
            p = frontier[idx]
            pp = g1.partner(p)
            if pp in hmap:
                continue
            qq = g2.partner(hmap[p])
            for flip in (False, True):
                trail = []
                if settle(pp, qq, flip, trail) and search(frontier[idx + 1:] + trail_darts(trail)):
                    return True
                for item in reversed(trail):
                    if isinstance(item, tuple):
                        v1, v2 = item
                        del vmap[v1]
                        del flips[v2]
                    else:
                        del hmap[item]
            return False
        return True

    def trail_darts(trail):
        return [item for item in trail if not isinstance(item, tuple)]

    trail0 = []
    if not settle(a0, b0, flip0, trail0):
        return None
    if not search(trail_darts(trail0)):
        return None
    if len(vmap) != g1.num_vertices or len(hmap) != 2 * g1.num_edges:
        return None
    emap = {}
    for e1, (h1, _h2, _tw) in g1.edges.items():
        emap[e1] = g2.edge_of(hmap[h1])
    for e1 in g1.edges:
        if not check_edge(e1):
            return None
    flipped = {v2 for v2, f in flips.items() if f}
    return vmap, emap, hmap, flipped


def are_equivalent(g1, g2):
    """True when the graphs are isomorphic up to vertex flips."""
    return find_isomorphism(g1, g2) is not None


def flip_vertex(graph, v):
    """Reverse v's rotation; toggle twists of non-loop edges with one end at v."""
    if v not in graph.vertices:
        raise RibbonGraphError("no vertex %r" % (v,))
    verts = dict(graph.vertices)
    verts[v] = tuple(reversed(verts[v]))
    edges = {}
    for e, (h1, h2, tw) in graph.edges.items():
        u, w = graph.vertex_of(h1), graph.vertex_of(h2)
        if (u == v) != (w == v):
            tw = not tw
        edges[e] = (h1, h2, tw)
    return RibbonGraph(verts, edges, check=False)


def _as_edge_subset(graph, edge_subset):
    sub = frozenset(edge_subset)
    unknown = sub - set(graph.edges)
    if unknown:
        raise RibbonGraphError("unknown edges in subset: %s" % sorted(unknown))
    return sub


# -- small constructors used across the package and the tests -------------------


def bouquet(word, twisted=()):
    """One-vertex graph from a double-occurrence word of edge labels.

    word: iterable of edge labels, each appearing exactly twice (a string is
    split on whitespace if it has any, else taken one character per label).
    """
    if isinstance(word, str):
        word = word.split() if " " in word else list(word)
    word = list(word)
    counts = {}
    rot = []
    for lab in word:
        counts[lab] = counts.get(lab, 0) + 1
        if counts[lab] > 2:
            raise RibbonGraphError("label %r occurs more than twice" % (lab,))
        rot.append("%s.%d" % (lab, counts[lab]))
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        raise RibbonGraphError("labels %s do not occur exactly twice" % bad)
    tw = set(twisted)
    edges = {lab: (lab + ".1", lab + ".2", lab in tw) for lab in counts}
    return RibbonGraph({"v": tuple(rot)}, edges)


def single_vertex():
    return RibbonGraph({"v": ()}, {})
