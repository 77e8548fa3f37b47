import pytest

from tbnet import GenSpec, GenerationError, generate, is_temporal


def test_deterministic_per_spec():
    a = generate(GenSpec(5, 3, seed=11))
    b = generate(GenSpec(5, 3, seed=11))
    assert a.edges == b.edges and a.leaf_labels == b.leaf_labels


def test_seed_changes_output():
    a = generate(GenSpec(5, 3, seed=11))
    b = generate(GenSpec(5, 3, seed=12))
    assert a.edges != b.edges


def test_counts_and_identities():
    # construction validates, so reaching the asserts means the generator
    # produced a legal network
    for leaves in range(1, 7):
        for retics in range(0, 5):
            if (leaves, retics) == (1, 1):
                continue
            net = generate(GenSpec(leaves, retics, seed=7))
            assert len(net.leaves) == leaves
            assert len(net.reticulations) == retics
            assert net.num_vertices == 2 * leaves + 2 * retics - 1
            assert len(net.edges) == 2 * leaves + 3 * retics - 2


def test_leaf_labels_are_sequential():
    net = generate(GenSpec(4, 2, seed=3))
    assert net.labels == ("x1", "x2", "x3", "x4")


def test_singleton_shape():
    net = generate(GenSpec(1, 0, seed=0))
    assert net.num_vertices == 1 and net.edges == ()
    assert dict(net.leaf_labels) == {0: "x1"}


def test_one_leaf_one_reticulation_is_infeasible():
    with pytest.raises(GenerationError):
        generate(GenSpec(1, 1, seed=0))


def test_one_leaf_many_reticulations():
    net = generate(GenSpec(1, 3, seed=5))
    assert len(net.leaves) == 1 and len(net.reticulations) == 3


def test_bad_counts_rejected():
    with pytest.raises(GenerationError):
        generate(GenSpec(0, 2, seed=0))
    with pytest.raises(GenerationError):
        generate(GenSpec(3, -1, seed=0))


def test_temporal_only_delivers_temporal():
    for seed in range(12):
        net = generate(GenSpec(3, 2, seed=seed, temporal_only=True))
        assert is_temporal(net)[0]


def test_temporal_only_still_deterministic():
    a = generate(GenSpec(4, 3, seed=9, temporal_only=True))
    b = generate(GenSpec(4, 3, seed=9, temporal_only=True))
    assert a.edges == b.edges and a.leaf_labels == b.leaf_labels
