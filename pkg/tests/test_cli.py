"""End-to-end tests for the rg command line tool.

Everything goes through cli.main(argv) so we can capture stdout and check
exit codes in-process; one test runs the installed console script for real.
Printed JSON is validated against the schemas shipped in docs/.
"""

import json
import os
import subprocess

import jsonschema
import pytest

import conftest as zoo
from ribbongraphs import cli
from ribbongraphs.biseparation import biseparation_kind, PLANE
from ribbongraphs.core import are_equivalent
from ribbongraphs.enumeration import EnumerationSpec, enumerate_classes
from ribbongraphs.io import parse_ribbon_graph
from ribbongraphs.minors import replay, CONTRACT_EDGE

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")
DOCS = os.path.join(os.path.dirname(__file__), "..", "docs")


def fix(name):
    return os.path.join(FIXTURES, name)


def schema(name):
    with open(os.path.join(DOCS, name + ".schema.json")) as fh:
        return json.load(fh)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv + ["--json"])
    return code, json.loads(out)


def validate(payload, schema_name):
    jsonschema.validate(
        payload, schema(schema_name),
        cls=jsonschema.validators.Draft202012Validator)


# -- frozen outputs ----------------------------------------------------------


def test_genus_n1(capsys):
    code, out, _ = run(capsys, ["genus", fix("n1.rg")])
    assert code == 0
    assert out == "euler_genus: 1\n"


def test_genus_json(capsys):
    code, payload = run_json(capsys, ["genus", fix("o1.rg")])
    assert code == 0
    assert payload == {"euler_genus": 0}


def test_characterize_x2_json(capsys):
    code, payload = run_json(capsys, ["characterize", fix("x2.rg")])
    assert code == 1
    assert payload["admits_low_genus_partial_dual"] is False
    cert = payload["witness"]["minor"]
    assert cert["target"] == "X2"
    validate(cert, "MinorCertificate")


def test_characterize_positive(capsys):
    code, payload = run_json(capsys, ["characterize", fix("n1.rg")])
    assert code == 0
    assert payload["admits_low_genus_partial_dual"] is True
    assert payload["witness"] == {"A": []}


def test_selftest(capsys):
    code, out, _ = run(capsys, ["selftest", "--max-edges", "2"])
    assert code == 0
    assert out.startswith("PASS")
    assert "47" in out  # class count at two edges

    code, payload = run_json(capsys, ["selftest", "--max-edges", "2"])
    assert code == 0
    assert payload["pass"] is True
    assert payload["checked"] == 47
    assert payload["disagreements"] == []


def test_profile_is_always_json(capsys):
    code, out, _ = run(capsys, ["profile", fix("x1.rg")])
    assert code == 0
    payload = json.loads(out)
    assert payload == {"counts": {"2": 4}, "min": 2}
    validate(payload, "GenusProfile")


def test_profile_counts_sum(capsys):
    _, out, _ = run(capsys, ["profile", fix("oi2.rg")])
    payload = json.loads(out)
    validate(payload, "GenusProfile")
    assert sum(payload["counts"].values()) == 4  # 2^2 subsets
    assert payload["min"] == 0


# -- graph transforms --------------------------------------------------------


def test_dual_roundtrip(capsys):
    _, once, _ = run(capsys, ["dual", fix("oi2.rg")])
    # feeding the dual back through the tool lands on the original
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".rg", delete=False) as fh:
        fh.write(once)
        path = fh.name
    try:
        _, twice, _ = run(capsys, ["dual", path])
    finally:
        os.unlink(path)
    with open(fix("oi2.rg")) as fh:
        assert are_equivalent(parse_ribbon_graph(twice),
                              parse_ribbon_graph(fh.read()))


def test_pdual_single_edge(capsys):
    code, payload = run_json(capsys, ["pdual", fix("oi2.rg"), "--edges", "e0"])
    assert code == 0
    g = parse_ribbon_graph(payload["rg"])
    assert g.num_vertices == 2 and g.num_edges == 2


def test_contract_matches_library(capsys):
    code, out, _ = run(capsys, ["contract", fix("oi2.rg"), "--edges", "e0"])
    assert code == 0
    with open(fix("oi2.rg")) as fh:
        host = parse_ribbon_graph(fh.read())
    expect = replay(host, [(CONTRACT_EDGE, "e0")])
    assert are_equivalent(parse_ribbon_graph(out), expect)


def test_delete_then_genus(capsys):
    code, out, _ = run(capsys, ["delete", fix("x1.rg"), "--edges", "e1"])
    assert code == 0
    g = parse_ribbon_graph(out)
    assert g.num_edges == 1 and g.euler_genus() == 1


# -- certificates ------------------------------------------------------------


def test_minor_positive(capsys):
    code, payload = run_json(capsys, ["minor", fix("x1.rg"), "--target", "X1"])
    assert code == 0
    assert payload == {"steps": [], "target": "X1"}
    validate(payload, "MinorCertificate")


def test_minor_negative(capsys):
    # obstructions are minor-minimal, none contains another
    code, out, _ = run(capsys, ["minor", fix("x3.rg"), "--target", "X1"])
    assert code == 1
    assert out == "none\n"
    code, payload = run_json(capsys, ["minor", fix("x3.rg"), "--target", "X1"])
    assert code == 1
    assert payload is None


def test_minor_target_from_file(capsys):
    # x2 is orientable so it has no twisted minor; x1 drops to n1 by deletion
    code, payload = run_json(
        capsys, ["minor", fix("x1.rg"), "--target", fix("n1.rg")])
    assert code == 0
    validate({"steps": payload["steps"], "target": "n1"}, "MinorCertificate")
    with open(fix("x1.rg")) as fh:
        host = parse_ribbon_graph(fh.read())
    got = replay(host, [tuple(s) for s in payload["steps"]])
    assert are_equivalent(got, zoo.loop(twisted=True))


def test_biseparation_rp2(capsys):
    code, payload = run_json(
        capsys, ["biseparation", fix("n1.rg"), "--kind", "rp2"])
    assert code == 0
    assert payload["kind"] == "rp2"
    validate(payload, "BiseparationCertificate")
    with open(fix("n1.rg")) as fh:
        g = parse_ribbon_graph(fh.read())
    assert biseparation_kind(g, frozenset(payload["subset"])) == "rp2"


def test_biseparation_none(capsys):
    code, out, _ = run(capsys, ["biseparation", fix("x1.rg"), "--kind", "plane"])
    assert code == 1
    assert out == "none\n"


def test_bouquet_certificate(capsys):
    code, payload = run_json(
        capsys, ["bouquet", fix("x1.rg"), "--show", "certificate"])
    assert code == 0
    assert payload["target"] == "X1"
    validate(payload, "MinorCertificate")


def test_bouquet_certificate_needs_twists(capsys):
    # x2 is orientable, outside the scope of the surgery
    code, _, err = run(capsys, ["bouquet", fix("x2.rg"), "--show", "certificate"])
    assert code == 2
    assert "error:" in err


def test_bouquet_dot(capsys):
    code, out, _ = run(capsys, ["bouquet", fix("x2.rg"), "--show", "intersection"])
    assert code == 0
    assert out.startswith("graph intersection {")
    assert '"e0" -- "e1";' in out

    code, out, _ = run(capsys, ["bouquet", fix("x1.rg"), "--show", "quotient"])
    assert code == 0
    assert out.startswith("graph quotient {")
    assert '"v"' in out


def test_bouquet_rejects_two_vertices(capsys):
    code, _, err = run(capsys, ["bouquet", fix("o1.rg"), "--show", "quotient"])
    assert code == 2
    assert "error:" in err


# -- enumeration and obstructions --------------------------------------------


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, ["enumerate", "--edges", "2", "--count"])
    assert code == 0
    assert out == "47\n"
    spec = EnumerationSpec(2)
    assert len(list(enumerate_classes(spec, cap=2))) == 47


def test_enumerate_bouquets(capsys):
    code, payload = run_json(
        capsys, ["enumerate", "--edges", "2", "--bouquets", "--count"])
    assert code == 0
    assert payload == {"count": 9}


def test_enumerate_listing_parses(capsys):
    code, payload = run_json(capsys, ["enumerate", "--edges", "2", "--bouquets"])
    assert code == 0
    graphs = [parse_ribbon_graph(t) for t in payload["classes"]]
    assert len(graphs) == 9
    assert all(g.num_vertices == 1 for g in graphs)


def test_obstructions(capsys):
    code, payload = run_json(capsys, ["obstructions", "--max-edges", "3"])
    assert code == 0
    classes = payload["classes"]
    assert len(classes) == 3
    assert sorted(c["edges"] for c in classes) == [2, 3, 3]
    assert all(c["min_genus"] == 2 for c in classes)


# -- knots --------------------------------------------------------------------


def test_knot_pd(capsys):
    with open(fix("trefoil.pd")) as fh:
        code_text = fh.read().strip()
    code, payload = run_json(capsys, ["knot", "--pd", code_text])
    assert code == 0
    assert payload["representable_in_rp3"] is True
    assert payload["witness"]["kind"] == "plane"
    validate(payload["witness"], "BiseparationCertificate")
    g = parse_ribbon_graph(payload["ribbon_graph"])
    assert g.num_vertices == 2 and g.num_edges == 3


def test_knot_gauss(capsys):
    code, payload = run_json(
        capsys, ["knot", "--gauss", "U1+ O3+ U2+ O1+ U3+ O2+"])
    assert code == 0
    assert payload["representable_in_rp3"] is True


def test_knot_rejects_nonplanar(capsys):
    code, _, err = run(capsys, ["knot", "--pd", "X(1,2,1,2)"])
    assert code == 2
    assert "not orientable" in err


def test_knot_rejects_garbage(capsys):
    code, _, err = run(capsys, ["knot", "--pd", "X(1,2,3)"])
    assert code == 2
    assert "error: line 1" in err


# -- plumbing -----------------------------------------------------------------


def test_missing_file(capsys):
    code, _, err = run(capsys, ["genus", "/no/such/file.rg"])
    assert code == 2
    assert err.startswith("error:")


def test_cap_message_names_flags(capsys):
    code, _, err = run(capsys, ["profile", fix("x1.rg"), "--brute-cap", "1"])
    assert code == 2
    assert "--brute-cap" in err


def test_unknown_verb_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    for argv in (
        ["profile", fix("oi2.rg")],
        ["characterize", fix("x3.rg"), "--json"],
        ["obstructions", "--max-edges", "3", "--json"],
        ["enumerate", "--edges", "2", "--bouquets", "--json"],
    ):
        first = run(capsys, argv)
        second = run(capsys, argv)
        assert first == second


def test_installed_entry_point():
    proc = subprocess.run(
        ["rg", "genus", fix("n1.rg")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "euler_genus: 1\n"
