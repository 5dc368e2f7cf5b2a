"""Tables, parsing, subset handles, and restriction."""

import pytest

import oracles
from greenheight import (
    NotAssociative,
    NotClosed,
    ParseError,
    SubsetHandle,
    closure_violation,
    format_table_text,
    from_table,
    parse_table_text,
    product_of_sets,
    restrict_to_subsemigroup,
)
from greenheight import _accel
from greenheight.constructions import (
    brandt_example,
    full_transformation_monoid,
    left_zero_semigroup,
    null_semigroup,
)

LEFT_ZERO_3 = "order: 3\nnames: a b c\n0 0 0\n1 1 1\n2 2 2\n"


def sampled(order, count, seed):
    return _accel.sample_assoc_tables(order, count, seed=seed)


def test_parse_table_text_basic():
    s = parse_table_text(LEFT_ZERO_3)
    assert s.order == 3
    assert s.names == ("a", "b", "c")
    assert s.product(s.index("b"), s.index("c")) == s.index("b")


def test_parse_table_text_comments():
    s = parse_table_text("# two-element\norder: 2\nnames: e o\n0 1  # identity row\n1 0\n")
    assert s.names == ("e", "o")
    assert s.identity == 0


def test_format_round_trip():
    s = brandt_example()
    again = parse_table_text(format_table_text(s))
    assert again.names == s.names
    assert (again.table == s.table).all()


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("names: a\n0\n", "order"),
        ("order: 0\n", "positive"),
        ("order: 2\n0 1\n1 0\n", "names"),
        ("order: 2\nnames: a b\n0 1\n", "rows"),
        ("order: 2\nnames: a b\n0 1 0\n1 0\n", "entries"),
        ("order: 2\nnames: a b\n0 2\n1 0\n", "range"),
        ("order: 2\nnames: a\n0 1\n1 0\n", "names"),
        ("order: 2\nnames: a a\n0 1\n1 0\n", "distinct"),
        ("order: 2\nnames: a b\n0 x\n1 0\n", "bad table entry"),
    ],
)
def test_parse_table_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_table_text(text)
    assert fragment in str(exc.value)


def test_parse_table_rejects_non_associative():
    bad = "order: 2\nnames: a b\n1 0\n0 0\n"
    with pytest.raises(NotAssociative) as exc:
        parse_table_text(bad)
    a, b, c = exc.value.triple
    t = [[1, 0], [0, 0]]
    assert t[t[a][b]][c] != t[a][t[b][c]]


def test_from_table_witness_is_lex_first():
    with pytest.raises(NotAssociative) as exc:
        from_table(["p", "q"], [[1, 0], [0, 0]])
    assert exc.value.triple == (0, 0, 1)


def test_identity_detection():
    assert full_transformation_monoid(2).identity is not None
    assert null_semigroup(3).identity is None
    assert left_zero_semigroup(2).identity is None


def test_index_and_names():
    s = parse_table_text(LEFT_ZERO_3)
    assert s.index("c") == 2
    with pytest.raises(KeyError):
        s.index("zz")


def test_product_of_sets_matches_triple_loop():
    for t in sampled(4, 30, seed=2):
        s = from_table([str(i) for i in range(4)], t)
        rows = t.tolist()
        xs, ys = {0, 2}, {1, 3}
        got = product_of_sets(s, xs, ys)
        want = {rows[x][y] for x in xs for y in ys}
        assert got == frozenset(want)
        got3 = product_of_sets(s, product_of_sets(s, xs, ys), xs)
        want3 = {rows[w][x] for w in want for x in xs}
        assert got3 == frozenset(want3)


def test_product_of_sets_through_identity():
    s = parse_table_text(LEFT_ZERO_3)
    plain = product_of_sets(s, {0}, {1, 2})
    with_one = product_of_sets(s, {0}, {1, 2}, through_identity=True)
    assert plain == frozenset({0})
    assert with_one == frozenset({0})  # xS^1 still equals xS union {x}... via ys
    assert product_of_sets(s, {1}, {2}, through_identity=True) == frozenset({1})


def test_product_of_sets_rejects_empty():
    s = parse_table_text(LEFT_ZERO_3)
    with pytest.raises(ValueError):
        product_of_sets(s, set(), {1})


def test_closure_violation_matches_oracle_on_all_small_tables():
    kinds = ("right_ideal", "left_ideal", "two_sided_ideal", "bi_ideal", "subsemigroup")
    for t in _accel.enumerate_assoc_tables(3):
        s = from_table(["0", "1", "2"], t)
        rows = t.tolist()
        for bits in range(1, 8):
            members = frozenset(i for i in range(3) if bits >> i & 1)
            for kind in kinds:
                witness = closure_violation(s, members, kind)
                assert (witness is None) == oracles.naive_is_kind(rows, members, kind)


def test_closure_violation_witness_is_real():
    s = parse_table_text("order: 2\nnames: e g\n0 1\n1 0\n")  # group of order 2
    w = closure_violation(s, {1}, "subsemigroup")
    assert w is not None
    tag, a, b, result = w
    assert tag == "product"
    assert s.product(a, b) == result
    assert result not in {1}


def test_subset_handle_validates_and_sorts():
    s = brandt_example()
    members = {s.index("(1,1)"), s.index("(1,2)"), s.index("0")}
    h = SubsetHandle(s, frozenset(members), "right_ideal")
    assert h.sorted_members == tuple(sorted(members))
    assert h.member_names == tuple(s.names[i] for i in sorted(members))
    assert s.index("(1,1)") in h
    assert len(h) == 3
    with pytest.raises(NotClosed):
        SubsetHandle(s, frozenset({s.index("(1,1)")}), "right_ideal")
    with pytest.raises(ValueError):
        SubsetHandle(s, frozenset(), "right_ideal")
    with pytest.raises(ValueError):
        SubsetHandle(s, frozenset(members), "ideal-ish")


def test_restrict_to_subsemigroup_matches_oracle():
    for t in sampled(5, 20, seed=3):
        s = from_table([str(i) for i in range(5)], t)
        rows = t.tolist()
        for bits in range(1, 32):
            members = frozenset(i for i in range(5) if bits >> i & 1)
            if not oracles.naive_is_kind(rows, members, "subsemigroup"):
                continue
            h = SubsetHandle(s, members, "subsemigroup")
            sub = restrict_to_subsemigroup(h)
            assert sub.table.tolist() == oracles.sub_table(rows, members)
            assert sub.names == tuple(str(i) for i in sorted(members))
            assert sub.parent_map == h.sorted_members


def test_sampled_tables_round_trip_through_parser():
    for t in sampled(4, 10, seed=4):
        s = from_table([f"g{i}" for i in range(4)], t)
        again = parse_table_text(format_table_text(s))
        assert (again.table == s.table).all()
        assert again.names == s.names
