"""Parsing, reduction, critical pairs, completeness, and enumeration."""

import random

import pytest

import oracles
from greenheight import (
    ZERO,
    CapExceeded,
    NotConfluent,
    ParseError,
    RewritingSystem,
    Rule,
    critical_pairs,
    element_index,
    enumerate_irreducibles,
    format_presentation,
    is_complete,
    parse_presentation,
    reduce_word,
    semigroup_from_presentation,
)
from greenheight.constructions import bi_ideal_family, left_ideal_cs_family


AB_SYSTEM = "letters: a b\nrule: ab -> a\nrule: ba -> b\n"


def rules_as_strings(rs):
    out = []
    for r in rs.rules:
        rhs = "!" if r.rhs is ZERO else rs.display(r.rhs)
        out.append((rs.display(r.lhs), rhs))
    return out


def test_parse_and_format_round_trip():
    rs = parse_presentation(bi_ideal_family(3).presentation_text)
    again = parse_presentation(format_presentation(rs))
    assert rules_as_strings(again) == rules_as_strings(rs)
    assert again.letters == rs.letters


def test_parse_accepts_comments_and_blank_lines():
    rs = parse_presentation("# heading\n\nletters: a b  # trailing\nrule: ab -> a\n")
    assert rs.letters == ("a", "b")
    assert len(rs.rules) == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("rule: ab -> a\n", "letters"),
        ("letters: a a\nrule: aa -> a\n", "duplicate"),
        ("letters: a b\nrule: ac -> a\n", "non-letter"),
        ("letters: a b\nrule: ab = a\n", "->"),
        ("letters: a b\nrule: a -> ab\n", "length-reducing"),
        ("letters: a b\nrule: ab -> ab\n", "length-reducing"),
        ("letters: a b\nrule:  -> a\n", "empty"),
        ("letters: a b\nzero: a\nrule: ab -> a\n", "zero"),
        ("letters: a b\nnonsense: 3\n", "expected"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_presentation(text)
    assert fragment in str(exc.value)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse_presentation("letters: a b\nrule: a -> aa\n")
    assert exc.value.line == 2
    assert "line 2" in str(exc.value)


def test_zero_only_allowed_alone_on_rhs():
    rs = parse_presentation("letters: a\nzero: 0\nrule: aa -> 0\n")
    assert rs.rules[0].rhs is ZERO
    with pytest.raises(ParseError):
        parse_presentation("letters: a\nzero: 0\nrule: aaa -> a0\n")
    with pytest.raises(ParseError):
        parse_presentation("letters: a\nzero: 0\nrule: a0 -> a\n")


def test_multi_char_letters_use_brackets():
    rs = parse_presentation("letters: [g1] [g2]\nrule: [g1][g1] -> [g2]\n")
    w = rs.word("[g1][g1][g1]")
    assert rs.display(reduce_word(rs, w)) == "[g2][g1]"


def test_reduce_word_leftmost_lowest_rule():
    # both rules match "aaa"; position wins first, then rule index
    rs = RewritingSystem(("a", "b"), (Rule("aa", "b"), Rule("ab", "a")))
    assert rs.display(reduce_word(rs, rs.word("aaa"))) == "ba"
    # same position, lower index fires: aab -> ab (rule 0) -> b (rule 0)
    rs2 = RewritingSystem(("a", "b"), (Rule("ab", "b"), Rule("ab", "a")))
    assert rs2.display(reduce_word(rs2, rs2.word("aab"))) == "b"


def test_reduce_word_zero_absorbs():
    rs = parse_presentation("letters: x y\nzero: 0\nrule: xx -> 0\nrule: xy -> x\n")
    assert reduce_word(rs, rs.word("yxxy")) is ZERO
    assert reduce_word(rs, ZERO) is ZERO
    assert rs.display(ZERO) == "0"


def test_irreducible_word_is_fixed_point():
    rs = parse_presentation(AB_SYSTEM)
    w = reduce_word(rs, rs.word("abba"))
    assert reduce_word(rs, w) == w


def test_critical_pairs_ab_ba_contains_documented_pair():
    rs = parse_presentation(AB_SYSTEM)
    pairs = critical_pairs(rs)
    shapes = {
        (rs.display(p.source), frozenset({rs.display(p.left_result),
                                          rs.display(p.right_result)}))
        for p in pairs
    }
    assert ("aba", frozenset({"aa", "ab"})) in shapes
    assert ("bab", frozenset({"bb", "ba"})) in shapes


def test_critical_pairs_filter_trivial_overlap():
    rs = parse_presentation("letters: a\nrule: aa -> a\n")
    assert critical_pairs(rs) == []


def test_critical_pairs_include_zero_sided_pair():
    rs = parse_presentation(bi_ideal_family(2).presentation_text)
    hits = [
        p
        for p in critical_pairs(rs)
        if rs.display(p.source) == "xztyz"
    ]
    assert hits
    p = hits[0]
    results = {p.left_result if p.left_result is ZERO else rs.display(p.left_result),
               p.right_result if p.right_result is ZERO else rs.display(p.right_result)}
    assert results == {ZERO, "xz"}
    assert reduce_word(rs, p.left_result) is ZERO
    assert reduce_word(rs, p.right_result) is ZERO


def test_is_complete_families():
    for n in range(2, 6):
        for fam in (bi_ideal_family, left_ideal_cs_family):
            rs = parse_presentation(fam(n).presentation_text)
            ok, witness = is_complete(rs)
            assert ok and witness is None


def test_is_complete_reports_nonconfluent_witness():
    rs = parse_presentation(AB_SYSTEM)
    ok, witness = is_complete(rs)
    assert not ok
    assert rs.display(witness.source) == "aba"
    sides = {
        rs.display(reduce_word(rs, witness.left_result)),
        rs.display(reduce_word(rs, witness.right_result)),
    }
    assert sides == {"aa", "a"}


def test_enumerate_irreducibles_small():
    rs = parse_presentation("letters: a\nrule: aa -> a\n")
    words = enumerate_irreducibles(rs, cap=100)
    assert {rs.display(w) for w in words} == {"a"}


def test_enumerate_irreducibles_counts_zero():
    rs = parse_presentation(bi_ideal_family(2).presentation_text)
    words = enumerate_irreducibles(rs, cap=100)
    assert len(words) == 13
    assert ZERO in words


def test_enumerate_irreducibles_cap():
    rs = RewritingSystem(("a", "b"), (Rule("aaaa", "a"),))
    with pytest.raises(CapExceeded) as exc:
        enumerate_irreducibles(rs, cap=10)
    assert exc.value.cap == 10


def test_semigroup_from_presentation_matches_table_route():
    fi = bi_ideal_family(2)
    s = semigroup_from_presentation(fi.presentation_text)
    assert s.order == 13
    assert s.names == fi.semigroup.names
    assert (s.table == fi.semigroup.table).all()


def test_semigroup_from_presentation_rejects_incomplete():
    with pytest.raises(NotConfluent) as exc:
        semigroup_from_presentation(AB_SYSTEM)
    assert "aba" in str(exc.value)


def test_element_index_resolves_words():
    fi = bi_ideal_family(2)
    rs = parse_presentation(fi.presentation_text)
    s = fi.semigroup
    assert element_index(rs, s, "xyzt") == s.index("x")
    assert element_index(rs, s, "tx") == s.index("0")
    assert element_index(rs, s, "zty") == s.index("zty")


def test_strategy_independence_on_complete_systems():
    rng = random.Random(20240814)
    for fam, n in ((bi_ideal_family, 2), (bi_ideal_family, 4),
                   (left_ideal_cs_family, 3), (left_ideal_cs_family, 5)):
        fi = fam(n)
        rs = parse_presentation(fi.presentation_text)
        raw_rules = [
            (rs.display(r.lhs), "!" if r.rhs is ZERO else rs.display(r.rhs))
            for r in rs.rules
        ]
        for _ in range(300):
            w = oracles.random_word(rs.letters, rng, 12)
            theirs = oracles.random_reduce(raw_rules, w, rng)
            mine = reduce_word(rs, rs.word(w))
            mine_str = "!" if mine is ZERO else rs.display(mine)
            assert mine_str == theirs, (w, mine_str, theirs)
