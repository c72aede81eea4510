import pathlib

import pytest

from ribbongraphs import are_equivalent
from ribbongraphs.biseparation import PLANE, RP2, biseparation_kind
from ribbongraphs.io import ParseError, parse_ribbon_graph
from ribbongraphs.knots import (
    DiagramError,
    PDCode,
    SignedGaussCode,
    all_a_ribbon_graph,
    gauss_to_pd,
    parse_gauss,
    parse_pd,
    print_gauss,
    print_pd,
    representable_in_rp3,
)
from ribbongraphs.minors import verify_certificate

import conftest as zoo

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

# circle and edge counts frozen after checking them against the union-find
# oracle below
CORPUS = {
    "unknot": (2, 1),
    "hopf": (2, 2),
    "trefoil": (2, 3),
    "figure_eight": (3, 4),
}

TREFOIL_GAUSS = "U1+ O3+ U2+ O1+ U3+ O2+"
HOPF_GAUSS = "U1+ O2+ ; U2+ O1+"
FIGURE_EIGHT_GAUSS = "O1- U4+ O3+ U1- O2- U3+ O4+ U2-"


def fixture_code(name):
    return parse_pd((FIXTURES / (name + ".pd")).read_text())


def oracle_circle_count(crossings):
    """A-state circles by union-find over crossing ports, no tracing."""
    parent = {(ci, p): (ci, p) for ci in range(len(crossings)) for p in range(4)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    by_label = {}
    for ci, cr in enumerate(crossings):
        union((ci, 0), (ci, 3))
        union((ci, 1), (ci, 2))
        for p, lab in enumerate(cr):
            by_label.setdefault(lab, []).append((ci, p))
    for a, b in by_label.values():
        union(a, b)
    return len({find(x) for x in parent})


# -- PD parsing -------------------------------------------------------------


def test_parse_pd_hopf():
    code = parse_pd("X(1,4,2,3) X(3,2,4,1)")
    assert code == PDCode(((1, 4, 2, 3), (3, 2, 4, 1)))


def test_parse_pd_trefoil_and_whitespace():
    text = "X(1, 4, 2, 5)\n  X(3,6,4,1)\tX(5,2,6,3)"
    code = parse_pd(text)
    assert len(code.crossings) == 3
    assert code == fixture_code("trefoil")


def test_parse_pd_arity_error():
    with pytest.raises(ParseError, match="3 labels"):
        parse_pd("X(1,2,3)")


def test_parse_pd_unknown_token():
    with pytest.raises(ParseError, match="offset 11"):
        parse_pd("X(1,2,2,1) Y(3,4,4,3)")


def test_parse_pd_label_frequency():
    with pytest.raises(ParseError, match="label 1 occurs 3"):
        parse_pd("X(1,1,1,2) X(2,3,3,4) X(4,5,5,6) X(6,7,7,8) X(8,9,9,10)")
    with pytest.raises(ParseError, match="occurs 1"):
        parse_pd("X(1,2,2,3)")


def test_parse_pd_rejects_empty_and_non_integer():
    with pytest.raises(ParseError, match="no crossings"):
        parse_pd("   ")
    with pytest.raises(ParseError, match="non-integer"):
        parse_pd("X(1,2,3,x)")


def test_pd_round_trip():
    for name in CORPUS:
        code = fixture_code(name)
        assert parse_pd(print_pd(code)) == code


# -- Gauss parsing -----------------------------------------------------------


def test_parse_gauss_trefoil():
    code = parse_gauss(TREFOIL_GAUSS)
    assert len(code.components) == 1
    assert code.components[0][0] == (1, "U", "+")
    assert code.components[0][1] == (3, "O", "+")


def test_parse_gauss_two_components():
    code = parse_gauss(HOPF_GAUSS)
    assert code == SignedGaussCode(
        (((1, "U", "+"), (2, "O", "+")), ((2, "U", "+"), (1, "O", "+")))
    )


def test_parse_gauss_errors():
    with pytest.raises(ParseError, match="conflicting signs"):
        parse_gauss("O1+ U1-")
    with pytest.raises(ParseError, match="one over and one under"):
        parse_gauss("O1+ O1+")
    with pytest.raises(ParseError, match="one over and one under"):
        parse_gauss("O1+ U2+ O2+")
    with pytest.raises(ParseError, match="unrecognised token at offset 4"):
        parse_gauss("O1+ Q2+")
    with pytest.raises(ParseError, match="empty component"):
        parse_gauss("O1+ U1+ ; ; O2+ U2+")
    with pytest.raises(ParseError, match="no crossings"):
        parse_gauss("")


def test_gauss_round_trip():
    for text in (TREFOIL_GAUSS, HOPF_GAUSS, FIGURE_EIGHT_GAUSS):
        code = parse_gauss(text)
        assert parse_gauss(print_gauss(code)) == code
        assert print_gauss(code) == text


def test_gauss_to_pd_trefoil():
    pd = gauss_to_pd(parse_gauss(TREFOIL_GAUSS))
    assert pd == PDCode(((6, 3, 1, 4), (2, 5, 3, 6), (4, 1, 5, 2)))


# -- the all-A state graph -----------------------------------------------------


def test_corpus_counts_match_the_oracle():
    for name, (v, e) in CORPUS.items():
        code = fixture_code(name)
        assert oracle_circle_count(code.crossings) == v
        g = all_a_ribbon_graph(code)
        assert g.num_vertices == v
        assert g.num_edges == e


def test_state_graphs_are_planar_and_untwisted():
    for name in CORPUS:
        g = all_a_ribbon_graph(fixture_code(name))
        assert g.euler_genus() == 0
        assert g.is_orientable()
        assert all(not g.twisted(e) for e in g.edges)
        assert len(g.component_vertex_sets()) == 1


def test_unknot_state_graph_is_a_single_ribbon():
    g = all_a_ribbon_graph(fixture_code("unknot"))
    assert are_equivalent(g, zoo.path2(False))


def test_trefoil_state_graph_is_the_planar_theta():
    g = all_a_ribbon_graph(fixture_code("trefoil"))
    assert are_equivalent(g, zoo.theta())


def test_gauss_codes_build_the_same_graphs():
    pairs = [
        (TREFOIL_GAUSS, "trefoil"),
        (HOPF_GAUSS, "hopf"),
        (FIGURE_EIGHT_GAUSS, "figure_eight"),
    ]
    for text, name in pairs:
        via_gauss = all_a_ribbon_graph(gauss_to_pd(parse_gauss(text)))
        via_pd = all_a_ribbon_graph(fixture_code(name))
        assert are_equivalent(via_gauss, via_pd)


def test_disconnected_diagram_is_refused():
    with pytest.raises(DiagramError, match="disconnected"):
        all_a_ribbon_graph(parse_pd("X(1,2,2,1) X(3,4,4,3)"))


def test_nonplanar_codes_are_refused():
    with pytest.raises(DiagramError, match="not orientable"):
        all_a_ribbon_graph(parse_pd("X(1,2,1,2)"))
    with pytest.raises(DiagramError, match="Euler genus 2"):
        all_a_ribbon_graph(parse_pd("X(1,2,3,4) X(1,4,3,2)"))


# -- representability ----------------------------------------------------------


def test_corpus_links_are_representable():
    for name in CORPUS:
        g = all_a_ribbon_graph(fixture_code(name))
        ok, cert = representable_in_rp3(g)
        assert ok
        assert cert.kind == PLANE
        # the witness is checkable without trusting the decision
        assert biseparation_kind(g, cert.subset) == PLANE


def test_crosscap_witness():
    n1 = parse_ribbon_graph((FIXTURES / "n1.rg").read_text())
    ok, cert = representable_in_rp3(n1)
    assert ok
    assert cert.kind == RP2
    assert biseparation_kind(n1, cert.subset) == RP2


def test_obstructions_are_not_representable():
    for name in ("x1", "x2", "x3"):
        g = parse_ribbon_graph((FIXTURES / (name + ".rg")).read_text())
        ok, wit = representable_in_rp3(g)
        assert not ok
        assert wit["minor"] == name.upper()
        assert verify_certificate(g, wit["certificate"])
