"""Tree-based decision, deviation indices, and certifying constructions.

A network is tree-based when it has a rooted spanning tree (a "base tree")
whose leaves are all labeled leaves of the network.  Three equivalent
measures quantify how far a network is from that property:

* ``l``: the minimum, over rooted spanning trees, of the number of tree
  leaves that are unlabeled vertices;
* ``p``: the minimum number of vertex-disjoint directed paths that
  partition the vertex set, minus the number of labeled leaves;
* ``t``: the minimum number of new leaves that must be attached (by edge
  subdivision) to make the network tree-based.

All three equal ``u - |X|`` where ``u`` is the number of left vertices left
unmatched by a maximum matching of the path graph (``build_gn``), which is
how this module computes them.  The constructions below also produce the
witnesses: a minimum path partition, a spanning tree realizing ``l``, and a
completion realizing ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .matching import Matching, build_gn, find_rr_path, max_matching
from .network import Edge, PhyloNetwork, attach_leaf


@dataclass(frozen=True)
class PathPartition:
    """Vertex-disjoint directed paths covering every vertex exactly once."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class SpanningTree:
    """A rooted spanning tree, as an edge subset of the network."""

    edges: tuple[Edge, ...]
    root: int
    leaves: tuple[int, ...]

    def unlabeled_leaves(self, net: PhyloNetwork) -> tuple[int, ...]:
        labeled = set(net.leaves)
        return tuple(v for v in self.leaves if v not in labeled)


@dataclass(frozen=True)
class DeviationReport:
    """The deviation indices.  Field names follow the CLI JSON contract.

    l / p / t are the three measures described in the module docstring
    (provably equal); u_gn is the unmatched-left count of the path graph,
    x_size the number of labeled leaves, and d = p + x_size the size of a
    minimum path partition.
    """

    l: int
    p: int
    t: int
    u_gn: int
    x_size: int
    d: int

    def as_dict(self) -> dict:
        return {"l": self.l, "p": self.p, "t": self.t,
                "u_gn": self.u_gn, "x_size": self.x_size, "d": self.d}


@dataclass(frozen=True)
class BaseTreeCertificate:
    """Positive certificate: a spanning tree all of whose leaves are labeled."""

    tree: SpanningTree


@dataclass(frozen=True)
class FailureWitness:
    """Negative certificate extracted from a maximal reticulation-to-
    reticulation path of the saturation graph.

    ``u1`` is the set of all parents of the path's reticulations, ``u2`` the
    reticulations themselves; |u1| = |u2| + 1 while u1's children are exactly
    u2, which no family of vertex-disjoint leaf-bound paths can satisfy.
    """

    rr_path: tuple[int, ...]
    u1: tuple[int, ...]
    u2: tuple[int, ...]


TreeBasedCertificate = Union[BaseTreeCertificate, FailureWitness]


def _partition_from_matching(net: PhyloNetwork, m: Matching) -> PathPartition:
    # Path starts are exactly the right-unmatched vertices; successor edges
    # are the matched pairs.  The root is always a start (in-degree 0).
    left_match = m.left_match
    paths = []
    for start in m.unmatched_right:
        path = [start]
        v = left_match[start]
        while v != -1:
            path.append(v)
            v = left_match[v]
        paths.append(tuple(path))
    partition = PathPartition(tuple(paths))
    assert sum(len(p) for p in partition.paths) == net.num_vertices
    return partition


def vertex_disjoint_paths(net: PhyloNetwork) -> PathPartition:
    """A minimum partition of the vertices into vertex-disjoint directed paths.

    Computed from a maximum matching of the path graph: unmatched right
    vertices start paths, matched edges chain them.  The number of paths is
    always ``u_gn`` (= number of unmatched left vertices).
    """
    return _partition_from_matching(net, max_matching(build_gn(net)))


def deviation_indices(net: PhyloNetwork) -> DeviationReport:
    """Compute l, p, t (all via the matching route) plus the raw quantities."""
    m = max_matching(build_gn(net))
    u = len(m.unmatched_left)
    x = len(net.leaves)
    p = u - x
    assert p >= 0, "matching left more vertices unmatched than labeled leaves"
    return DeviationReport(l=p, p=p, t=p, u_gn=u, x_size=x, d=p + x)


def rooted_spanning_tree(net: PhyloNetwork) -> SpanningTree:
    """A rooted spanning tree with the fewest possible unlabeled leaves.

    Take a minimum path partition; keep the root's path; splice every other
    path below some parent of its start vertex (the smallest-id parent, for
    determinism).  A path end can never be such a parent: the matching
    behind the partition is maximum, so an edge from an unmatched-left path
    end to an unmatched-right path start would be an augmenting edge.  The
    tree's unlabeled leaves are therefore exactly the path ends outside X.
    """
    partition = vertex_disjoint_paths(net)
    edges: list[Edge] = []
    for path in partition.paths:
        for i in range(len(path) - 1):
            edges.append((path[i], path[i + 1]))
        start = path[0]
        if start != net.root:
            edges.append((net.parents[start][0], start))
    edges.sort()
    out_used = {u for u, _ in edges}
    leaves = tuple(sorted(v for path in partition.paths for v in path if v not in out_used))
    return SpanningTree(edges=tuple(edges), root=net.root, leaves=leaves)


def is_tree_based(net: PhyloNetwork) -> tuple[bool, TreeBasedCertificate]:
    """Decide tree-basedness and build the matching certificate.

    Positive answers carry a base tree; negative answers carry the
    reticulation path witness with its unsatisfiable (u1, u2) pair.
    """
    report = deviation_indices(net)
    if report.p == 0:
        tree = rooted_spanning_tree(net)
        assert not tree.unlabeled_leaves(net)
        return True, BaseTreeCertificate(tree)
    return False, _failure_witness(net)


def _failure_witness(net: PhyloNetwork) -> FailureWitness:
    path = find_rr_path(net)
    assert path is not None, "deviation positive but no reticulation path found"
    rs = path[0::2]
    ts = path[1::2]
    if len(path) == 1:
        q, q2 = net.parents[path[0]]
    else:
        q = next(w for w in net.parents[path[0]] if w != path[1])
        q2 = next(w for w in net.parents[path[-1]] if w != path[-2])
    u1 = (q,) + ts + (q2,)
    u2 = rs

    # Soundness of the witness, cheap enough to keep on.
    retic = set(net.reticulations)
    assert q != q2 and q in retic and q2 in retic
    assert len(u1) == len(u2) + 1
    assert {p for r in u2 for p in net.parents[r]} == set(u1)
    assert {c for t in u1 for c in net.children[t]} == set(u2)
    return FailureWitness(rr_path=path, u1=u1, u2=u2)


def check_path_partition_characterisation(net: PhyloNetwork) -> bool:
    """True iff a minimum path partition has exactly |X| paths, all ending in X."""
    partition = vertex_disjoint_paths(net)
    labeled = set(net.leaves)
    return partition.size == len(labeled) and all(p[-1] in labeled for p in partition.paths)


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of making a network tree-based by attaching new leaves.

    ``attached_edges`` are edges of the *input* network that received a new
    pendant leaf (input vertex ids stay valid in the completed network);
    ``labels`` are the new leaf labels, in attachment order.
    """

    network: PhyloNetwork
    attached_edges: tuple[Edge, ...]
    labels: tuple[str, ...]


def tree_based_completion(net: PhyloNetwork) -> CompletionResult:
    """Attach the minimum number of leaves needed to make ``net`` tree-based.

    Every unlabeled leaf of the constructed spanning tree gets a new pendant
    leaf on its smallest-headed out-edge.  That adds exactly ``t`` leaves,
    labeled ``attached_1``, ``attached_2``, ... in ascending order of the
    subdivided edge's tail.  (If the input already uses such a label, the
    attachment fails validation; the label contract is fixed.)
    """
    tree = rooted_spanning_tree(net)
    stuck = tree.unlabeled_leaves(net)
    current = net
    attached: list[Edge] = []
    labels: list[str] = []
    for i, v in enumerate(sorted(stuck), start=1):
        target = (v, net.children[v][0])
        label = f"attached_{i}"
        current = attach_leaf(current, target, label)
        attached.append(target)
        labels.append(label)
    return CompletionResult(network=current, attached_edges=tuple(attached), labels=tuple(labels))
