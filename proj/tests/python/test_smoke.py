import pytest

import monosep


def test_decide_examples():
    assert monosep.decide("x^2 - x")["verdict"]["separable"]
    v = monosep.decide(["4x"])["verdict"]
    assert not v["separable"]
    assert v["failure_reason"]["kind"] == "NonSquarefreeGcd"
    assert v["failure_reason"]["prime"] == "2"
    v = monosep.decide(["2x^2 + x"])["verdict"]
    assert v["failure_reason"]["kind"] == "NonIntegerGamma"
    assert monosep.decide([])["verdict"]["failure_reason"]["kind"] == "NoRelators"


def test_normal_form_and_membership():
    doc = monosep.normal_form(["x^2 - x"], "x^3 + x")
    assert doc["normal_form"]["text"] == "2x"
    assert monosep.member(["x^2 - x"], "3x^3 - 3x")["member"]
    assert not monosep.member(["2x^2 + x"], "x^2")["member"]


def test_invariants():
    inv = monosep.invariants(["4x"])["invariants"]
    assert inv["torsion"]["tau"] == "4"
    assert inv["torsion"]["exponent"] == 1
    assert monosep.invariants(["2x^2 + x"])["invariants"]["torsion"]["tau"] == "infinite"


def test_quotient_and_separation():
    q = monosep.quotient(["x^2 - x"], 2)["quotient"]
    assert q["finite"]
    assert q["carrier_size"] == "2"
    s = monosep.separate(["x^2 - x"], "3x", ["2x"])
    assert s["result"]["found"]
    assert s["result"]["modulus"] == "2"
    assert not monosep.separate(["x^2 - x"], "x", ["x"], bound=16)["result"]["found"]


def test_documents_verify():
    for doc in (
        monosep.decide(["x^3 - x", "6x^2 - 6x"]),
        monosep.witness(["6x"]),
        monosep.invariants(["2x^2", "x^3"]),
        monosep.normal_form(["x^2 - x"], "x^5"),
        monosep.separate(["x^2 - x"], "3x", ["2x"]),
    ):
        ok, checks = monosep.verify(doc)
        assert ok, checks


def test_parse_and_errors():
    assert monosep.parse_terms("2x^3 - 4x") == [(2, 3), (-4, 1)]
    assert monosep.format_poly("x + x^2 + x") == "x^2 + 2x"
    with pytest.raises(monosep.MonosepError, match="ConstantTermForbidden"):
        monosep.decide(["x^2 + 1"])
    with pytest.raises(monosep.MonosepError):
        monosep.parse_terms("x^")


def test_cli_entry():
    code, out, _ = monosep.run_cli(["nf", "-r", "x^2 - x", "-p", "x^3 + x"])
    assert code == 0
    assert out == "2x\n"
    code, _, err = monosep.run_cli(["decide", "-r", "x + 1"])
    assert code == 2
    assert "ConstantTermForbidden" in err
