"""Parser and serializer behavior for the hybrid-tagged Newick dialect."""

import pytest

from tbnet import ParseError, parse_enewick, serialize_enewick
from tbnet.oracles import isomorphic

from conftest import corpus, fixture_text

SMALL_HYBRID = "((a,(b)#H1),(#H1,c));"


def test_small_hybrid_example():
    net = parse_enewick(SMALL_HYBRID)
    assert net.num_vertices == 7
    assert net.labels == ("a", "b", "c")
    assert len(net.reticulations) == 1
    (r,) = net.reticulations
    assert net.in_degree[r] == 2
    assert net.leaf_labels[net.children[r][0]] == "b"


def test_fixture_files_agree(diamond, deviation_one, killer, temporal_nontb):
    for name, net in (("diamond", diamond), ("deviation_one", deviation_one),
                      ("killer", killer), ("temporal_nontb", temporal_nontb)):
        from_newick = parse_enewick(fixture_text(f"{name}.nwk"))
        assert isomorphic(net, from_newick), name


def test_round_trip_isomorphism():
    for net in corpus(80, seed_base=14_000):
        text = serialize_enewick(net)
        again = parse_enewick(text)
        assert isomorphic(net, again)


def test_serialization_deterministic():
    for net in corpus(25, seed_base=15_000):
        assert serialize_enewick(net) == serialize_enewick(net)


def test_tree_serialization_is_canonical():
    # Without reticulations the child ordering never falls back to vertex
    # ids (sibling subtrees cannot share a minimal leaf label), so the
    # string is a fixed point of parse/serialize.
    for net in corpus(40, seed_base=16_000, max_retics=0):
        s1 = serialize_enewick(net)
        assert serialize_enewick(parse_enewick(s1)) == s1


def test_singleton():
    net = parse_enewick("only;")
    assert net.num_vertices == 1
    assert dict(net.leaf_labels) == {0: "only"}
    assert serialize_enewick(net) == "only;"


def test_name_before_hybrid_tag_is_discarded():
    plain = parse_enewick("((a,(b)#H1),(#H1,c));")
    named = parse_enewick("((a,(b)v#H1),(#H1,c));")
    assert isomorphic(plain, named)
    assert named.labels == ("a", "b", "c")


def test_whitespace_tolerated():
    a = parse_enewick("((a, (b)#H1) ,\n  (#H1, c));")
    b = parse_enewick(SMALL_HYBRID)
    assert isomorphic(a, b)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("((a,b),c)", "missing ';'"),
        ("((a,b),c);x", "after ';'"),
        ("((a,b);", "unclosed"),
        ("(a,b));", "unmatched"),
        ("(a,,b);", "before ','"),
        ("(a,(b)#H1);", "appears 1 time"),
        ("((a)#H1,(b)#H1,#H1);", "two places"),
        ("(#H1,(a)#H1,#H1);", "appears 3 time"),
        ("(a:1,b);", "branch lengths"),
        ("(a,b@c);", "unexpected character"),
        ("(a,#X1);", "hybrid tag"),
        (";", "expected a network"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_enewick(text)
    assert fragment in str(err.value)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_enewick("(a\n,b:3);")
    assert err.value.line == 2
    assert err.value.column == 3


def test_deep_caterpillar_round_trip():
    # both directions run on explicit stacks, so a tree much deeper than the
    # interpreter recursion limit must survive a full round trip
    depth = 4000
    text = "".join(f"(a{i}," for i in range(depth)) + "b" + ")" * depth + ";"
    net = parse_enewick(text)
    assert net.num_vertices == 2 * depth + 1
    again = parse_enewick(serialize_enewick(net))
    assert isomorphic(net, again)
