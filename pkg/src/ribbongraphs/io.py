"""Text formats for ribbon graphs and arrow presentations.

.rg files::

    # comment
    vertex u : e.1 f.1 e.2 f.2
    edge e : -
    edge f : +

One ``vertex`` line per vertex with its rotation as half-edges, written
``<edge>.1`` / ``<edge>.2``; one ``edge`` line per edge giving its twist
(``+`` untwisted, ``-`` twisted).  ``#`` starts a comment.

.arrows files::

    circle : e> f< e>
    circle : f<

One line per circle; each arrow is a label followed by ``>`` (with reading
direction) or ``<`` (against it).
"""

from __future__ import annotations

from .core import ArrowPresentation, RibbonGraph, RibbonGraphError


class ParseError(RibbonGraphError):
    """Input text error; carries the 1-based line number."""

    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_ribbon_graph(text):
    """Parse .rg text; raises ParseError with the first offending line."""
    vertices = {}
    twists = {}
    placed = {}
    for lineno, line in _content_lines(text):
        if ":" not in line:
            raise ParseError(lineno, "expected 'vertex NAME : ...' or 'edge NAME : ...'")
        head, _, tail = line.partition(":")
        head = head.split()
        if len(head) != 2 or head[0] not in ("vertex", "edge"):
            raise ParseError(lineno, "expected 'vertex NAME :' or 'edge NAME :', got %r" % line)
        kind, name = head
        if kind == "vertex":
            if name in vertices:
                raise ParseError(lineno, "duplicate vertex %r" % name)
            rot = []
            for tok in tail.split():
                base, _, idx = tok.rpartition(".")
                if idx not in ("1", "2") or not base:
                    raise ParseError(lineno, "half-edge %r is not of the form <edge>.1 or <edge>.2" % tok)
                if tok in placed:
                    raise ParseError(lineno, "half-edge %r already placed" % tok)
                placed[tok] = lineno
                rot.append(tok)
            vertices[name] = tuple(rot)
        else:
            if name in twists:
                raise ParseError(lineno, "duplicate edge %r" % name)
            sign = tail.strip()
            if sign not in ("+", "-"):
                raise ParseError(lineno, "edge twist must be '+' or '-', got %r" % sign)
            twists[name] = (sign == "-", lineno)
    edges = {}
    for e, (tw, lineno) in twists.items():
        h1, h2 = e + ".1", e + ".2"
        for h in (h1, h2):
            if h not in placed:
                raise ParseError(lineno, "edge %r: half-edge %r is not in any rotation" % (e, h))
        edges[e] = (h1, h2, tw)
    for tok, lineno in placed.items():
        base = tok.rpartition(".")[0]
        if base not in twists:
            raise ParseError(lineno, "half-edge %r has no 'edge %s :' line" % (tok, base))
    try:
        return RibbonGraph(vertices, edges)
    except RibbonGraphError as err:
        raise ParseError(0, str(err))


def print_ribbon_graph(graph):
    """Deterministic .rg text for a graph; inverse of parse_ribbon_graph."""
    lines = []
    for v in sorted(graph.vertices):
        lines.append("vertex %s : %s" % (v, " ".join(graph.vertices[v])))
    for e in sorted(graph.edges):
        lines.append("edge %s : %s" % (e, "-" if graph.edges[e][2] else "+"))
    return "\n".join(lines) + "\n"


def parse_arrow_presentation(text):
    """Parse .arrows text; raises ParseError with the first offending line."""
    circles = []
    for lineno, line in _content_lines(text):
        head, _, tail = line.partition(":")
        if head.strip() != "circle":
            raise ParseError(lineno, "expected 'circle : ...', got %r" % line)
        circ = []
        for tok in tail.split():
            if len(tok) < 2 or tok[-1] not in "><":
                raise ParseError(lineno, "arrow %r must be <label>> or <label><" % tok)
            circ.append((tok[:-1], tok[-1] == ">"))
        circles.append(tuple(circ))
    try:
        return ArrowPresentation(circles)
    except RibbonGraphError as err:
        raise ParseError(0, str(err))


def print_arrow_presentation(pres):
    lines = []
    for circ in pres.circles:
        lines.append("circle : %s" % " ".join("%s%s" % (lab, ">" if fwd else "<") for lab, fwd in circ))
    return "\n".join(lines) + "\n"


def load(path):
    """Load a ribbon graph from an .rg or .arrows file by extension."""
    from .core import from_arrow_presentation

    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".arrows"):
        return from_arrow_presentation(parse_arrow_presentation(text))
    return parse_ribbon_graph(text)
