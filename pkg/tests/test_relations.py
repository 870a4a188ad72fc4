from fractions import Fraction

import pytest

from zschur.algebra import AlgebraElement, k
from zschur.relations import (
    bind, evaluate_word, fixture_text, parse_relation_text, verify_file,
    verify_relation,
)

B35 = parse_relation_text(fixture_text("b35"))
B35_ENV = bind(B35)


def relation(text, env=B35_ENV):
    rf = parse_relation_text(text)
    return verify_relation(rf.relations[0], env)


def test_parse_bindings_and_chained_relations():
    rf = parse_relation_text("""
        @kind degenerate
        k1 := idem 0,0,2   # comment
        b1 := gen e2 @ 0,0,2
        b1.k1 = 2*b1 - b1 = b1
    """)
    assert rf.kind == "degenerate"
    assert rf.fixed == {"k1"}
    (rel,) = rf.relations
    assert len(rel.sides) == 3
    assert [t.coef for t in rel.sides[1]] == [2, -1]


@pytest.mark.parametrize("text", [
    "x := frob 1,2",
    "1x := idem 1,1",
    "@kind quantum",
    "a.b",
    "a.b = 1/0*c",
    "a..b = c",
])
def test_parse_errors(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_relation_text(text)


def test_zero_relation_is_exact():
    v = relation("B1.b1 = 0")
    assert v.status == "exact"


def test_commuting_square_is_exact_or_proportional():
    assert relation("b3.B2 = B5.b4").status in ("exact", "proportional")


def test_idempotent_relation():
    env = {"k": k((1, 2, 2))}
    assert relation("k.k = k", env).status == "exact"


def test_proportional_verdict_reports_scalar():
    env = {"k": k((1, 1)), "t": 3 * k((1, 1))}
    v = relation("t = k", env)
    assert v.status == "proportional" and v.scalar == Fraction(1, 3)
    assert v.scalars == [1, Fraction(1, 3)]


def test_failed_verdict_shows_both_sides():
    env = {"k": k((1, 1)), "z": AlgebraElement.basis(((0, 1), (1, 0)))}
    v = relation("k = z", env)
    assert v.status == "failed" and "side 2" in v.detail


def test_unbound_label():
    with pytest.raises(KeyError):
        evaluate_word(("nope",), B35_ENV)


def test_words_compose_right_to_left():
    # b2 : 6 -> 10 and b1 : 5 -> 6, so b2.b1 is the composite 5 -> 10
    val, flipped = evaluate_word(("b2", "b1"), B35_ENV)
    assert val and not flipped
    val2, flipped2 = evaluate_word(("b1", "b2"), B35_ENV)
    assert flipped2 and val2 == val


@pytest.mark.parametrize("name", ["s32", "ds32", "b35_consistent", "b45_consistent"])
def test_bundled_presentations_hold_exactly(name):
    rep = verify_file(parse_relation_text(fixture_text(name)))
    assert rep.ok, rep.problems
    assert all(v.status == "exact" for v in rep.verdicts)


def test_printed_signs_admit_no_rescaling():
    rep = verify_file(B35)
    assert rep.scale is None
    assert rep.problems == ["sign constraints inconsistent"]
    failed = [v.relation.text for v in rep.verdicts if v.status == "failed"]
    assert failed == []
    assert sum(v.status != "exact" for v in rep.verdicts) == 2


def test_printed_extra_relations_fail():
    rep = verify_file(parse_relation_text(fixture_text("b45")))
    assert not rep.ok
    bad = {v.relation.text for v in rep.verdicts if v.status == "failed"}
    assert "H2.d2 = b4.b2.H1" in bad
