"""Parser/serializer round-trips and syntax error reporting."""


import pytest

import pgw
from pgw import groupfile

from conftest import ALL_NAMES


@pytest.mark.parametrize("name", ALL_NAMES)
def test_round_trip_whole_corpus(name):
    P = pgw.load(name)
    text = groupfile.serialize(P)
    Q = groupfile.parse_text(text).presentation
    assert Q.validated
    assert (Q.name, Q.p, Q.n, Q.power_rel, Q.comm_rel, Q.defn, Q.minimal_count) == (
        P.name, P.p, P.n, P.power_rel, P.comm_rel, P.defn, P.minimal_count
    )
    assert groupfile.serialize(Q) == text


def test_parse_h27_inline():
    text = """
# Heisenberg group of order 27
name h27-inline
p 3
n 3
comm 2 1 = g3^1
def 3 = comm 2 1
"""
    P = groupfile.parse_text(text).presentation
    assert P.order == 27
    assert P.comm_rel == {(2, 1): ((3, 1),)}
    assert P.minimal_count == 2


def test_comments_and_blank_lines_ignored():
    text = "name t\n\n# comment\np 3   # trailing comment\nn 1\n"
    P = groupfile.parse_text(text).presentation
    assert P.order == 3


def _err(text):
    with pytest.raises(pgw.PresentationSyntaxError) as ei:
        groupfile.parse_text(text, source="test.pg")
    return ei.value


def test_p_must_be_prime():
    e = _err("name x\np 4\nn 1\n")
    assert e.line == 2
    assert "not prime" in str(e)


def test_missing_p_or_n():
    assert "missing p" in str(_err("name x\n"))
    assert "missing n" in str(_err("name x\np 3\n"))


def test_word_token_errors():
    base = "name x\np 3\nn 2\n"
    assert "bad word token" in str(_err(base + "pow 1 = f2^1\n"))
    assert "strictly increase" in str(
        _err("name x\np 3\nn 3\npow 1 = g2^1 g2^1\n")
    )
    assert "out of range" in str(_err(base + "pow 1 = g5^1\n"))
    assert "exponent" in str(_err(base + "pow 1 = g2^4\n"))
    assert "exponent" in str(_err(base + "pow 1 = g2^0\n"))
    assert "needs index > 1" in str(_err(base + "pow 1 = g1^1\n"))
    assert "empty word" in str(_err(base + "pow 1 =\n"))


def test_structural_errors():
    base = "name x\np 3\nn 2\n"
    assert "duplicate pow" in str(_err(base + "pow 1 = g2^1\npow 1 = g2^2\n"))
    assert "duplicate comm" in str(
        _err("name x\np 3\nn 3\ncomm 2 1 = g3^1\ncomm 2 1 = g3^1\n")
    )
    assert "j < i" in str(_err(base + "comm 1 2 = g2^1\n"))
    assert "before p and n" in str(_err("name x\npow 1 = g2^1\np 3\nn 2\n"))
    assert "unknown directive" in str(_err(base + "powx 1 = g2^1\n"))
    assert "tail range" in str(_err("name x\np 3\nn 3\ndef 2 = pow 1\n"))
    assert "duplicate p" in str(_err("p 3\np 3\nn 1\n"))


def test_consistency_violation_passes_through():
    text = "name bad\np 3\nn 3\npow 1 = g2^1\npow 2 = g3^1\ncomm 2 1 = g3^1\n"
    with pytest.raises(pgw.ConsistencyViolation):
        groupfile.parse_text(text)


def test_line_numbers_in_errors():
    e = _err("name x\np 3\nn 2\n# fine\npow 1 = g9^1\n")
    assert e.line == 5
    assert e.source == "test.pg"


def test_parse_path(tmp_path):
    f = tmp_path / "c9.pg"
    f.write_text(groupfile.serialize(pgw.load("c9")), encoding="utf-8")
    gf = groupfile.parse_path(str(f))
    assert gf.presentation.order == 9
    assert gf.source == str(f)


def test_word_text_rendering():
    assert groupfile.word_text(()) == "1"
    assert groupfile.word_text(((5, 2), (6, 1), (7, 1))) == "g5^2 g6^1 g7^1"


def test_unnamed_presentation_gets_default():
    P = groupfile.parse_text("p 3\nn 1\n").presentation
    assert P.name == "unnamed"
    assert groupfile.parse_text(groupfile.serialize(P)).presentation.name == "unnamed"
