from fractions import Fraction

import pytest

from monopack.certs import (
    CertFormatError,
    format_covercert,
    format_packcert,
    parse_covercert,
    parse_packcert,
    verify_covercert,
    verify_packcert,
)
from monopack.constructions import BlobSpec, pentagon_blowup
from monopack.graph import BLUE, RED, ColoredGraph
from monopack.lp import nu_star, pack

F = Fraction


def solved_k5():
    g = ColoredGraph.monochromatic(5)
    red = nu_star(g, RED).packing
    blue = nu_star(g, BLUE).packing
    return g, red, blue


def test_packcert_round_trip():
    g, red, blue = solved_k5()
    text = format_packcert(g, red, blue)
    g2, red2, blue2, claim = parse_packcert(text)
    assert g2 == g
    assert red2.weights == red.weights
    assert blue2.weights == blue.weights
    assert claim == 10
    ok, msg = verify_packcert(text)
    assert ok, msg
    assert format_packcert(g2, red2, blue2, claim) == text


def test_packcert_verifies_against_supplied_graph():
    g, red, blue = solved_k5()
    text = format_packcert(g, red, blue)
    ok, _ = verify_packcert(text, g)
    assert ok
    other = ColoredGraph(5, "B" + g.colors[1:])
    ok, msg = verify_packcert(text, other)
    assert not ok and "differs" in msg


def test_packcert_rejects_tampered_weight():
    g, red, blue = solved_k5()
    text = format_packcert(g, red, blue)
    # raise one weight to 2: the edge loads blow past 1
    tampered = text.replace("R 0 1 2 1/3", "R 0 1 2 2", 1)
    assert tampered != text
    ok, msg = verify_packcert(tampered)
    assert not ok


def test_packcert_rejects_overstated_claim():
    g, _ = pentagon_blowup(BlobSpec((4, 4, 4, 4, 4)))
    res = pack(g)
    assert res.value == 90
    text = format_packcert(g, res.red.packing, res.blue.packing, claim=F(91))
    ok, msg = verify_packcert(text)
    assert not ok and "below the claim" in msg
    ok, _ = verify_packcert(
        format_packcert(g, res.red.packing, res.blue.packing, claim=F(90))
    )
    assert ok


def test_packcert_parse_errors():
    with pytest.raises(CertFormatError):
        parse_packcert("BOGUS v1\n")
    with pytest.raises(CertFormatError):
        parse_packcert("PACKCERT v1\ngraph: n=3 RRR\n")
    with pytest.raises(CertFormatError):
        parse_packcert("PACKCERT v1\nwrong\nclaim: pack >= 3\n")
    with pytest.raises(CertFormatError):
        parse_packcert("PACKCERT v1\ngraph: n=3 RRR\nclaim: pack >= x\n")
    with pytest.raises(CertFormatError):
        parse_packcert(
            "PACKCERT v1\ngraph: n=3 RRR\nclaim: pack >= 3\nR 0 1 2\n"
        )
    with pytest.raises(CertFormatError):
        parse_packcert(
            "PACKCERT v1\ngraph: n=3 RRR\nclaim: pack >= 3\n"
            "R 0 1 2 1\nR 0 1 2 1\n"
        )


def test_packcert_rejects_wrong_color_triangle():
    text = (
        "PACKCERT v1\ngraph: n=3 RRB\nclaim: pack >= 0\nR 0 1 2 1/2\n"
    )
    ok, msg = verify_packcert(text)
    assert not ok and "not R-monochromatic" in msg


def test_covercert_round_trip():
    g = ColoredGraph.monochromatic(5)
    cover = nu_star(g, RED).cover
    text = format_covercert(g, cover)
    g2, cover2, claim = parse_covercert(text)
    assert g2 == g and claim == F(10, 3)
    assert cover2.edge_weights == cover.edge_weights
    ok, msg = verify_covercert(text)
    assert ok, msg
    ok, _ = verify_covercert(text, g)
    assert ok


def test_covercert_rejects_tampering():
    g = ColoredGraph.monochromatic(4)
    cover = nu_star(g, RED).cover
    text = format_covercert(g, cover)
    lowered = text.replace("claim: nustar <= 2", "claim: nustar <= 1")
    ok, msg = verify_covercert(lowered)
    assert not ok and "exceeds the claim" in msg
    # dropping an edge line leaves a triangle uncovered
    lines = text.strip().splitlines()
    ok, msg = verify_covercert("\n".join(lines[:-1]) + "\n")
    assert not ok and "not covered" in msg
    other = ColoredGraph(4, "B" + g.colors[1:])
    ok, msg = verify_covercert(text, other)
    assert not ok


def test_covercert_parse_errors():
    with pytest.raises(CertFormatError):
        parse_covercert("COVERCERT v2\n")
    with pytest.raises(CertFormatError):
        parse_covercert("COVERCERT v1\ngraph: n=3 RRR\ncolor: R\n")
    with pytest.raises(CertFormatError):
        parse_covercert(
            "COVERCERT v1\ngraph: n=3 RRR\ncolor: G\nclaim: nustar <= 1\n"
        )
    with pytest.raises(CertFormatError):
        parse_covercert(
            "COVERCERT v1\ngraph: n=3 RRR\ncolor: R\nclaim: nustar <= 1\n0 1\n"
        )


def test_negative_cover_weight_rejected():
    text = (
        "COVERCERT v1\ngraph: n=3 BBB\ncolor: R\nclaim: nustar <= 0\n0 1 -1\n"
    )
    ok, msg = verify_covercert(text)
    assert not ok and "negative" in msg
