import pytest

from tbnet import (
    GenSpec,
    PhyloNetwork,
    antichain_to_leaf,
    antichain_to_leaf_edge_disjoint,
    deviation_indices,
    generate,
    has_antichain_to_leaf_property,
    is_antichain,
    is_temporal,
    is_tree_based,
    max_antichain,
    maximal_antichains,
    temporal_violating_antichain,
    verify_temporal_map,
)
from tbnet.oracles import (
    _iter_antichains,
    oracle_antichain_to_leaf_property,
    oracle_max_antichain,
    oracle_temporal,
)

from conftest import corpus


def test_is_antichain_basics(killer):
    x, y, z = (killer.vertex_by_label(lab) for lab in ("x", "y", "z"))
    assert is_antichain(killer, (x, y, z))
    assert is_antichain(killer, (x,))
    assert not is_antichain(killer, (killer.root, x))
    with pytest.raises(ValueError):
        is_antichain(killer, (killer.num_vertices,))


def test_max_antichain_killer(killer):
    antichain, chains = max_antichain(killer)
    assert len(antichain) == 3
    assert is_antichain(killer, antichain)
    assert len(chains) == 3
    covered = sorted(v for c in chains for v in c)
    assert covered == list(range(killer.num_vertices))


def test_max_antichain_tree_equals_leaf_count():
    net = generate(GenSpec(6, 0, seed=4))
    antichain, chains = max_antichain(net)
    assert len(antichain) == 6 == len(chains)


def test_max_antichain_singleton():
    single = PhyloNetwork((), {0: "u"}, 1)
    antichain, chains = max_antichain(single)
    assert antichain == (0,) and chains == ((0,),)


def test_max_antichain_matches_oracle():
    for net in corpus(100, seed_base=8000, max_vertices=16):
        antichain, chains = max_antichain(net)
        assert is_antichain(net, antichain)
        assert len(antichain) == len(chains) == oracle_max_antichain(net)


def test_antichain_to_leaf_on_leaves_is_trivial(killer):
    leaves = killer.leaves
    routed, witness = antichain_to_leaf(killer, leaves)
    assert routed
    assert sorted(p[0] for p in witness.paths) == sorted(leaves)
    assert all(len(p) == 1 for p in witness.paths)


def test_antichain_to_leaf_witness_shape(killer):
    antichain, _ = max_antichain(killer)
    routed, witness = antichain_to_leaf(killer, antichain)
    assert routed
    starts = sorted(p[0] for p in witness.paths)
    assert starts == sorted(antichain)
    seen = set()
    edge_set = set(killer.edges)
    for path in witness.paths:
        assert killer.out_degree[path[-1]] == 0
        for v in path:
            assert v not in seen
            seen.add(v)
        for u, v in zip(path, path[1:]):
            assert (u, v) in edge_set


def test_antichain_to_leaf_rejects_non_antichain(killer):
    with pytest.raises(ValueError):
        antichain_to_leaf(killer, (killer.root, killer.leaves[0]))


def test_vertex_disjoint_implies_edge_disjoint():
    for net in corpus(60, seed_base=9000, max_vertices=14):
        if net.num_vertices == 1:
            continue
        antichain, _ = max_antichain(net)
        vertex_ok, _ = antichain_to_leaf(net, antichain)
        if vertex_ok:
            assert antichain_to_leaf_edge_disjoint(net, antichain)


def test_maximal_antichains_complete_and_maximal(killer):
    found = sorted(maximal_antichains(killer))
    # cross-check against filtering the full antichain enumeration
    all_chains = [a for a in _iter_antichains(killer) if a]
    as_sets = [set(a) for a in all_chains]
    expected = sorted(
        a for a in all_chains
        if not any(set(a) < other for other in as_sets)
    )
    assert found == expected


def test_property_modes_and_oracle():
    for net in corpus(90, seed_base=10_000, max_vertices=14):
        if net.num_vertices == 1:
            continue
        fast = has_antichain_to_leaf_property(net)
        assert fast == oracle_antichain_to_leaf_property(net)
        temporal, _ = is_temporal(net)
        if temporal:
            assert fast == has_antichain_to_leaf_property(net, mode="temporal-shortcut")


def test_property_killer_holds_but_not_tree_based(killer):
    assert has_antichain_to_leaf_property(killer)
    assert not is_tree_based(killer)[0]


def test_property_mode_errors(killer):
    with pytest.raises(ValueError):
        has_antichain_to_leaf_property(killer, mode="temporal-shortcut")
    big = generate(GenSpec(12, 4, seed=0))
    with pytest.raises(ValueError):
        has_antichain_to_leaf_property(big, max_vertices=18)


def test_tree_based_implies_property():
    for net in corpus(70, seed_base=11_000, max_vertices=14):
        if net.num_vertices == 1:
            continue
        if is_tree_based(net)[0]:
            assert has_antichain_to_leaf_property(net)


def test_is_temporal_examples(diamond, killer, temporal_nontb):
    ok, tmap = is_temporal(diamond)
    assert ok
    verify_temporal_map(diamond, tmap)
    assert not is_temporal(killer)[0]
    ok, tmap = is_temporal(temporal_nontb)
    assert ok
    verify_temporal_map(temporal_nontb, tmap)


def test_nested_reticulation_parent_not_temporal():
    # one parent of the reticulation is a tree-edge ancestor of the other:
    # the level map would need lambda(1) = lambda(3) = lambda(4) yet
    # lambda(1) < lambda(4) along the tree edge (1, 4)
    net = PhyloNetwork(
        ((0, 1), (0, 2), (1, 3), (1, 4), (4, 3), (4, 5), (3, 6)),
        {2: "z", 5: "x", 6: "y"},
        7,
    )
    assert not is_temporal(net)[0]


def test_temporal_matches_oracle():
    for net in corpus(120, seed_base=12_000, max_vertices=14):
        if net.num_vertices == 1:
            continue
        fast, tmap = is_temporal(net)
        assert fast == oracle_temporal(net)
        if fast:
            verify_temporal_map(net, tmap)


def test_temporal_violating_antichain(temporal_nontb):
    violating = temporal_violating_antichain(temporal_nontb)
    assert is_antichain(temporal_nontb, violating)
    routed, _ = antichain_to_leaf(temporal_nontb, violating)
    assert not routed
    # q1, q2 are the two reticulations feeding r (ids 3 and 4 by file order)
    assert violating == (3, 4)


def test_temporal_violating_antichain_preconditions(diamond, killer):
    with pytest.raises(ValueError):
        temporal_violating_antichain(diamond)   # tree-based
    with pytest.raises(ValueError):
        temporal_violating_antichain(killer)  # not temporal


def test_temporal_violating_antichain_on_corpus():
    found = 0
    for net in corpus(400, max_leaves=4, max_retics=5, seed_base=13_000,
                      temporal_only=True, max_vertices=16):
        if deviation_indices(net).p == 0:
            continue
        found += 1
        violating = temporal_violating_antichain(net)
        assert is_antichain(net, violating)
        routed, _ = antichain_to_leaf(net, violating)
        assert not routed
        if found >= 40:
            break
    assert found >= 40
