"""Bipartite matching machinery and the two graphs built from a network.

``build_gn`` makes the bipartite graph on two copies of the vertex set with
an edge (u-left, v-right) for every network edge (u, v); maximum matchings
in it correspond to partitions of the vertices into directed paths.

``build_zn`` makes the bipartite graph between tree vertices that parent a
reticulation (the root included) and the reticulations themselves; a
matching saturating the reticulation side decides tree-basedness.

The matcher is Hopcroft-Karp with deterministic tie-breaking: left vertices
are processed in ascending order and adjacency lists are kept sorted, so the
same graph always yields the same matching.  Everything is iterative; no
recursion depth limits apply at large sizes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .network import PhyloNetwork, tree_vertices_with_reticulation_child

_INF = float("inf")


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with back-references into the originating network.

    ``left_ids[i]`` / ``right_ids[j]`` give the network vertex behind left
    index ``i`` / right index ``j``.  ``adj[i]`` lists right indices adjacent
    to left index ``i``, ascending.
    """

    left_ids: tuple[int, ...]
    right_ids: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def n_left(self) -> int:
        return len(self.left_ids)

    @property
    def n_right(self) -> int:
        return len(self.right_ids)

    def edges(self):
        for i, row in enumerate(self.adj):
            for j in row:
                yield (i, j)


@dataclass(frozen=True)
class Matching:
    """A matching plus the unmatched remainder on both sides (indices)."""

    pairs: tuple[tuple[int, int], ...]
    left_match: tuple[int, ...]
    right_match: tuple[int, ...]
    unmatched_left: tuple[int, ...]
    unmatched_right: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


def max_matching(g: BipartiteGraph) -> Matching:
    """Maximum matching via Hopcroft-Karp; deterministic for a fixed graph."""
    n_left, n_right = g.n_left, g.n_right
    adj = g.adj
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        shortest = _INF
        while queue:
            u = queue.popleft()
            if dist[u] >= shortest:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    if shortest == _INF:
                        shortest = dist[u] + 1
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return shortest != _INF

    def dfs(root: int) -> bool:
        # Iterative layered DFS.  Each frame: (left vertex, adjacency cursor,
        # right vertex used to enter the frame).
        stack = [[root, 0, -1]]
        while stack:
            frame = stack[-1]
            u, pos = frame[0], frame[1]
            advanced = False
            while pos < len(adj[u]):
                v = adj[u][pos]
                pos += 1
                w = match_r[v]
                if w == -1:
                    # Augment along the whole stack.
                    frame[1] = pos
                    match_l[u] = v
                    match_r[v] = u
                    for k in range(len(stack) - 1, 0, -1):
                        uu = stack[k - 1][0]
                        vv = stack[k][2]
                        match_l[uu] = vv
                        match_r[vv] = uu
                    return True
                if dist[w] == dist[u] + 1:
                    frame[1] = pos
                    stack.append([w, 0, v])
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
        return False

    while bfs():
        for u in range(n_left):
            if match_l[u] == -1:
                dfs(u)

    pairs = tuple((u, match_l[u]) for u in range(n_left) if match_l[u] != -1)
    return Matching(
        pairs=pairs,
        left_match=tuple(match_l),
        right_match=tuple(match_r),
        unmatched_left=tuple(u for u in range(n_left) if match_l[u] == -1),
        unmatched_right=tuple(v for v in range(n_right) if match_r[v] == -1),
    )


def verify_matching(g: BipartiteGraph, m: Matching) -> None:
    """Raise AssertionError unless ``m`` is a consistent matching of ``g``."""
    seen_l: set[int] = set()
    seen_r: set[int] = set()
    for u, v in m.pairs:
        assert v in g.adj[u], f"matched pair ({u}, {v}) is not an edge"
        assert u not in seen_l and v not in seen_r, "vertex matched twice"
        seen_l.add(u)
        seen_r.add(v)
        assert m.left_match[u] == v and m.right_match[v] == u
    for u in m.unmatched_left:
        assert m.left_match[u] == -1
    for v in m.unmatched_right:
        assert m.right_match[v] == -1
    assert len(m.unmatched_left) + len(m.pairs) == g.n_left
    assert len(m.unmatched_right) + len(m.pairs) == g.n_right


def has_augmenting_path(g: BipartiteGraph, m: Matching) -> bool:
    """One alternating BFS pass: does any unmatched left reach an unmatched right?"""
    right_match = m.right_match
    visited = [False] * g.n_left
    queue = deque()
    for u in m.unmatched_left:
        visited[u] = True
        queue.append(u)
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            w = right_match[v]
            if w == -1:
                return True
            if not visited[w]:
                visited[w] = True
                queue.append(w)
    return False


def assert_maximum(g: BipartiteGraph, m: Matching) -> None:
    verify_matching(g, m)
    assert not has_augmenting_path(g, m), "matching admits an augmenting path"


def min_vertex_cover(g: BipartiteGraph, m: Matching) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimum vertex cover from a maximum matching (Koenig's construction).

    Returns (left indices, right indices).  Serves as the failure
    certificate: every edge touches the cover and |cover| = |matching|.
    """
    visited_l = [False] * g.n_left
    visited_r = [False] * g.n_right
    queue = deque()
    for u in m.unmatched_left:
        visited_l[u] = True
        queue.append(u)
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not visited_r[v]:
                visited_r[v] = True
                w = m.right_match[v]
                if w != -1 and not visited_l[w]:
                    visited_l[w] = True
                    queue.append(w)
    left = tuple(u for u in range(g.n_left) if not visited_l[u])
    right = tuple(v for v in range(g.n_right) if visited_r[v])
    return left, right


def build_gn(net: PhyloNetwork) -> BipartiteGraph:
    """Bipartite path graph: both sides are copies of V, edges follow arcs.

    Left index i and right index j are network vertices i and j directly;
    labeled leaves are isolated on the left, the root on the right.
    """
    ids = tuple(range(net.num_vertices))
    return BipartiteGraph(left_ids=ids, right_ids=ids, adj=net.children)


def build_zn(net: PhyloNetwork) -> BipartiteGraph:
    """Bipartite saturation graph: reticulation parents vs reticulations."""
    lefts = tree_vertices_with_reticulation_child(net)
    rights = tuple(net.reticulations)
    rindex = {r: j for j, r in enumerate(rights)}
    adj = tuple(
        tuple(rindex[c] for c in net.children[t] if c in rindex)
        for t in lefts
    )
    return BipartiteGraph(left_ids=lefts, right_ids=rights, adj=adj)


def reticulation_saturating(net: PhyloNetwork) -> tuple[bool, Matching]:
    """Does some matching of the saturation graph cover every reticulation?"""
    zn = build_zn(net)
    m = max_matching(zn)
    return m.size == zn.n_right, m


def _zn_neighbors(net: PhyloNetwork) -> dict[int, list[int]]:
    """Adjacency of the saturation graph on network vertex ids (undirected)."""
    retic = set(net.reticulations)
    nbrs: dict[int, list[int]] = {r: [] for r in retic}
    for t in tree_vertices_with_reticulation_child(net):
        nbrs[t] = []
        for c in net.children[t]:
            if c in retic:
                nbrs[t].append(c)
                nbrs[c].append(t)
    for v in nbrs:
        nbrs[v].sort()
    return nbrs


def find_rr_path(net: PhyloNetwork) -> tuple[int, ...] | None:
    """A maximal path of the saturation graph starting and ending at
    reticulations, or None if there is none.

    Every vertex of the saturation graph has degree at most 2 (a
    reticulation has at most two tree-vertex parents, a tree vertex at most
    two reticulation children), so its components are simple paths and
    cycles.  A maximal path with both endpoints on the reticulation side is
    exactly a path component whose two ends are reticulations; an isolated
    reticulation counts as the one-vertex case.  This search never looks at
    a matching, so agreement with :func:`reticulation_saturating` is a real
    two-route check.
    """
    nbrs = _zn_neighbors(net)
    retic = set(net.reticulations)
    for start in net.reticulations:
        if len(nbrs[start]) >= 2:
            continue  # interior of a component, or on a cycle
        # Walk the component away from this endpoint.
        path = [start]
        prev = -1
        cur = start
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        if path[-1] in retic:
            return tuple(path)
    return None
