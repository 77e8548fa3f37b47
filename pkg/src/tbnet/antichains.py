"""Antichains, disjoint paths to leaves, and temporal structure.

An antichain is a set of vertices that are pairwise unreachable from one
another.  The antichain-to-leaf property asks that every antichain A admit
|A| vertex-disjoint directed paths from its members to labeled leaves.  For
temporal networks (those admitting a time map: strictly increasing along
tree edges, constant along reticulation edges) that property is equivalent
to being tree-based, and a failing antichain can be constructed from any
reticulation-to-reticulation path of the saturation graph.

Vertex sets are handled as bitmasks internally; inputs and outputs are
plain vertex-id tuples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .matching import BipartiteGraph, max_matching, min_vertex_cover
from .network import PhyloNetwork
from .treebased import _failure_witness, deviation_indices

DEFAULT_EXHAUSTIVE_BOUND = 18


def _descendant_masks(net: PhyloNetwork) -> list[int]:
    """Strict-descendant bitmask per vertex (v's own bit excluded)."""
    desc = [0] * net.num_vertices
    for v in reversed(net.topological_order()):
        acc = 0
        for c in net.children[v]:
            acc |= (1 << c) | desc[c]
        desc[v] = acc
    return desc


def is_antichain(net: PhyloNetwork, vertices: Iterable[int]) -> bool:
    """True iff the given vertices are pairwise unreachable from each other."""
    members = set(vertices)
    for v in members:
        if not 0 <= v < net.num_vertices:
            raise ValueError(f"vertex {v} out of range")
    desc = _descendant_masks(net)
    mask = 0
    for v in members:
        mask |= 1 << v
    return all(desc[v] & mask == 0 for v in members)


def max_antichain(net: PhyloNetwork) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """A maximum antichain plus a witnessing minimum chain partition.

    Chain cover via matching on the transitive closure (Dilworth): a
    maximum matching of the comparability graph leaves n - |M| chains; the
    vertices whose left and right copies both avoid a minimum vertex cover
    form an antichain of exactly that size, so both witnesses certify each
    other (|antichain| == |chains| is asserted).
    """
    n = net.num_vertices
    desc = _descendant_masks(net)
    ids = tuple(range(n))
    adj = tuple(tuple(v for v in range(n) if desc[u] >> v & 1) for u in range(n))
    closure = BipartiteGraph(left_ids=ids, right_ids=ids, adj=adj)
    m = max_matching(closure)

    chains = []
    for start in m.unmatched_right:
        chain = [start]
        v = m.left_match[start]
        while v != -1:
            chain.append(v)
            v = m.left_match[v]
        chains.append(tuple(chain))

    cover_l, cover_r = min_vertex_cover(closure, m)
    excluded = set(cover_l) | set(cover_r)
    antichain = tuple(v for v in range(n) if v not in excluded)

    assert len(antichain) == len(chains), "Dilworth witnesses disagree"
    assert is_antichain(net, antichain)
    return antichain, tuple(chains)


@dataclass(frozen=True)
class DisjointPathWitness:
    """Vertex-disjoint paths, one per antichain member, each ending at a leaf."""

    paths: tuple[tuple[int, ...], ...]


class _UnitFlow:
    """Tiny arc-list max-flow network with BFS augmentation."""

    def __init__(self, n_nodes: int):
        self.head = [-1] * n_nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.nxt: list[int] = []

    def add(self, u: int, v: int, cap: int) -> int:
        idx = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.nxt.append(self.head[u])
        self.head[u] = idx
        self.to.append(u)
        self.cap.append(0)
        self.nxt.append(self.head[v])
        self.head[v] = idx + 1
        return idx

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        n = len(self.head)
        while True:
            parent_arc = [-1] * n
            parent_arc[s] = -2
            queue = deque([s])
            while queue and parent_arc[t] == -1:
                u = queue.popleft()
                a = self.head[u]
                while a != -1:
                    v = self.to[a]
                    if self.cap[a] > 0 and parent_arc[v] == -1:
                        parent_arc[v] = a
                        queue.append(v)
                    a = self.nxt[a]
            if parent_arc[t] == -1:
                return total
            v = t
            while v != s:
                a = parent_arc[v]
                self.cap[a] -= 1
                self.cap[a ^ 1] += 1
                v = self.to[a ^ 1]
            total += 1


def _leaf_path_flow(net: PhyloNetwork, members: tuple[int, ...], vertex_disjoint: bool):
    """Max-flow network for routing each member to a distinct leaf."""
    n = net.num_vertices
    source, sink = 2 * n, 2 * n + 1
    flow = _UnitFlow(2 * n + 2)
    through = 1 if vertex_disjoint else max(len(members), 1)
    inner = [flow.add(2 * v, 2 * v + 1, through) for v in range(n)]
    for u, v in net.edges:
        flow.add(2 * u + 1, 2 * v, 1)
    for v in members:
        flow.add(source, 2 * v, 1)
    for x in net.leaves:
        flow.add(2 * x + 1, sink, 1)
    value = flow.max_flow(source, sink)
    return flow, value, inner, sink


def antichain_to_leaf(net: PhyloNetwork, antichain: Iterable[int]):
    """Can every member of the antichain reach a leaf along vertex-disjoint paths?

    Unit vertex capacities (vertex splitting) reduce this to a max-flow
    instance; the answer is True iff the flow value equals the antichain
    size, in which case the witness paths are decoded from the flow.

    Raises ValueError if the input is not an antichain.
    """
    members = tuple(sorted(set(antichain)))
    if not is_antichain(net, members):
        raise ValueError("input vertex set is not an antichain")
    flow, value, _, sink = _leaf_path_flow(net, members, vertex_disjoint=True)
    if value != len(members):
        return False, None

    paths = []
    for a in members:
        path = [a]
        node = 2 * a + 1  # a's out-copy; unit capacity makes the walk unique
        while True:
            arc = flow.head[node]
            step = -1
            while arc != -1:
                # Forward arcs are even; used ones have no residual left.
                if arc % 2 == 0 and flow.cap[arc] == 0 and flow.to[arc] != node:
                    step = flow.to[arc]
                    flow.cap[arc] = 1  # consume, so shared sinks are not reused
                    break
                arc = flow.nxt[arc]
            assert step != -1, "flow decoding lost its way"
            if step == sink:
                break
            vertex = step // 2
            path.append(vertex)
            node = 2 * vertex + 1
        paths.append(tuple(path))
    return True, DisjointPathWitness(tuple(paths))


def antichain_to_leaf_edge_disjoint(net: PhyloNetwork, antichain: Iterable[int]) -> bool:
    """Edge-disjoint variant (vertices may be shared); used as a cross-check."""
    members = tuple(sorted(set(antichain)))
    if not is_antichain(net, members):
        raise ValueError("input vertex set is not an antichain")
    _, value, _, _ = _leaf_path_flow(net, members, vertex_disjoint=False)
    return value == len(members)


def maximal_antichains(net: PhyloNetwork):
    """Yield every maximal antichain (as a sorted tuple), Bron-Kerbosch style.

    Antichains are independent sets of the comparability relation, i.e.
    cliques of incomparability; pivoting keeps the enumeration tame at the
    sizes the exhaustive checker permits.
    """
    n = net.num_vertices
    desc = _descendant_masks(net)
    anc = [0] * n
    for v in range(n):
        d = desc[v]
        while d:
            low = d & -d
            anc[low.bit_length() - 1] |= 1 << v
            d ^= low
    full = (1 << n) - 1
    inc = [full & ~(desc[v] | anc[v] | (1 << v)) for v in range(n)]

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield r
            return
        pivot_pool = p | x
        pivot = max(
            (bin(p & inc[v]).count("1"), -v) for v in _bits(pivot_pool)
        )[1] * -1
        for v in _bits(p & ~inc[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & inc[v], x & inc[v])
            p &= ~bit
            x |= bit

    for mask in expand(0, full, 0):
        yield tuple(_bits(mask))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def has_antichain_to_leaf_property(
    net: PhyloNetwork,
    mode: str = "exhaustive",
    max_vertices: int = DEFAULT_EXHAUSTIVE_BOUND,
) -> bool:
    """Decide whether every antichain reaches leaves disjointly.

    ``exhaustive`` checks every *maximal* antichain, which suffices: if
    A is contained in a maximal antichain B and B has |B| disjoint paths,
    restricting that family to the paths starting in A witnesses A.  The
    mode refuses networks larger than ``max_vertices`` (no polynomial
    algorithm is claimed for the general property).

    ``temporal-shortcut`` requires a temporal network and uses the
    equivalence with tree-basedness there.
    """
    if mode == "temporal-shortcut":
        ok, _ = is_temporal(net)
        if not ok:
            raise ValueError("temporal-shortcut mode requires a temporal network")
        return deviation_indices(net).p == 0
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if net.num_vertices > max_vertices:
        raise ValueError(
            f"exhaustive antichain check limited to {max_vertices} vertices "
            f"(got {net.num_vertices})"
        )
    for antichain in maximal_antichains(net):
        ok, _ = antichain_to_leaf(net, antichain)
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class TemporalMap:
    """A time assignment: equal across reticulation edges, increasing along
    tree edges.  ``ranks[v]`` is the time of vertex v."""

    ranks: tuple[int, ...]


def verify_temporal_map(net: PhyloNetwork, tm: TemporalMap) -> None:
    retic = set(net.reticulations)
    for u, v in net.edges:
        if v in retic:
            assert tm.ranks[u] == tm.ranks[v], f"reticulation edge ({u},{v}) not level"
        else:
            assert tm.ranks[u] < tm.ranks[v], f"tree edge ({u},{v}) not increasing"


def is_temporal(net: PhyloNetwork) -> tuple[bool, TemporalMap | None]:
    """Does the network admit a temporal map?  Returns one if so.

    Reticulation edges force equal times, so contract them: vertices joined
    by reticulation edges share a group.  A temporal map exists iff no tree
    edge joins a group to itself and the tree-edge relation between groups
    is acyclic; the map assigned is the longest-path level of each group.
    """
    n = net.num_vertices
    group = list(range(n))

    def find(v: int) -> int:
        while group[v] != v:
            group[v] = group[group[v]]
            v = group[v]
        return v

    retic = set(net.reticulations)
    tree_edges = []
    for u, v in net.edges:
        if v in retic:
            ru, rv = find(u), find(v)
            if ru != rv:
                group[ru] = rv
        else:
            tree_edges.append((u, v))

    succ: dict[int, set[int]] = {}
    indeg: dict[int, int] = {find(v): 0 for v in range(n)}
    for u, v in tree_edges:
        gu, gv = find(u), find(v)
        if gu == gv:
            return False, None
        bucket = succ.setdefault(gu, set())
        if gv not in bucket:
            bucket.add(gv)
            indeg[gv] += 1

    level = {g: 0 for g in indeg}
    queue = deque(sorted(g for g, d in indeg.items() if d == 0))
    done = 0
    while queue:
        g = queue.popleft()
        done += 1
        for h in succ.get(g, ()):
            if level[g] + 1 > level[h]:
                level[h] = level[g] + 1
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    if done != len(indeg):
        return False, None

    tm = TemporalMap(tuple(level[find(v)] for v in range(n)))
    verify_temporal_map(net, tm)
    return True, tm


def temporal_violating_antichain(net: PhyloNetwork) -> tuple[int, ...]:
    """For a temporal, non-tree-based network: an antichain with no disjoint
    routing to the leaves.

    Start from the failure witness's parent set U = {q, t_1..t_{k-1}, q'}.
    A temporal map is constant on U, so any comparability inside U travels
    reticulation edges only and must end at a reticulation of U, i.e. at q
    or q'.  Such a route leaves U through a witness reticulation r (every
    child of U lies in the witness set), so q is a comparability target
    exactly when some r is q itself (then q sits on the reticulation path
    and is a child of one of the t_i) or has q among its descendants.
    Dropping the reachable targets leaves an antichain of size k-1, k, or
    k+1 that provably cannot reach the leaves disjointly (checked before
    returning).
    """
    ok, _ = is_temporal(net)
    if not ok:
        raise ValueError("network is not temporal")
    if deviation_indices(net).p == 0:
        raise ValueError("network is tree-based; no violating antichain exists")

    witness = _failure_witness(net)
    u_set = witness.u1
    q, q2 = u_set[0], u_set[-1]
    k = len(witness.u2)

    if is_antichain(net, u_set):
        result = tuple(sorted(u_set))
    else:
        desc = _descendant_masks(net)
        drop_q = any(r == q or desc[r] >> q & 1 for r in witness.u2)
        drop_q2 = any(r == q2 or desc[r] >> q2 & 1 for r in witness.u2)
        assert drop_q or drop_q2, "comparable pair with no reticulation route"
        drop = {v for v, hit in ((q, drop_q), (q2, drop_q2)) if hit}
        result = tuple(sorted(v for v in u_set if v not in drop))

    assert len(result) in (k - 1, k, k + 1)
    assert is_antichain(net, result)
    routed, _ = antichain_to_leaf(net, result)
    assert not routed, "constructed antichain unexpectedly reaches leaves disjointly"
    return result
