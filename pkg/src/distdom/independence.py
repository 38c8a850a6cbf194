"""(2r,b)-independent sets via inneighbor hypergraphs and k-matchings,
followed by degeneracy-coloring sparsification to 2r-independent sets."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .augment import Augmentation, indegree_profile
from .graph import Graph, VertexSet, all_balls
from .lp import FLOAT_EPS, LinearProgram, LpSolution, ratio, solve


@dataclass(frozen=True)
class Hypergraph:
    """Labeled edges; two edges may coincide as sets under distinct labels."""

    nv: int
    edges: tuple[tuple[int, frozenset], ...]  # (label, members)

    def __post_init__(self):
        labels = [lab for lab, _ in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("edge labels must be distinct")
        for lab, members in self.edges:
            if not members:
                raise ValueError(f"edge {lab} is empty")
            if any(not 0 <= v < self.nv for v in members):
                raise ValueError(f"edge {lab} has out-of-range members")

    def to_json(self) -> str:
        return json.dumps({
            "nv": self.nv,
            "edges": [{"label": lab, "members": sorted(m)} for lab, m in self.edges],
        }, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Hypergraph":
        obj = json.loads(text)
        return Hypergraph(int(obj["nv"]),
                          tuple((e["label"], frozenset(e["members"]))
                                for e in obj["edges"]))


@dataclass(frozen=True)
class BMatching:
    selected: frozenset  # edge labels
    b: int


def is_b_matching(h: Hypergraph, labels, b: int) -> bool:
    labels = set(labels)
    counts: dict[int, int] = {}
    for lab, members in h.edges:
        if lab in labels:
            for v in members:
                counts[v] = counts.get(v, 0) + 1
    return all(c <= b for c in counts.values())


def inneighbor_hypergraph(aug: Augmentation) -> Hypergraph:
    """One edge per vertex u, labeled u: the inneighbors of u (u included
    via its loop).  Every edge has size at most Delta_r."""
    return Hypergraph(aug.n, tuple(
        (u, frozenset(t for t, _rho in aug.in_arcs[u])) for u in range(aug.n)))


def matching_solution_from_packing(h: Hypergraph, y: LpSolution) -> LpSolution:
    """Reindex a ball-packing optimum as a fractional 1-matching of the
    inneighbor hypergraph: m_{e_u} = y_u, feasible by construction."""
    if y.status != "optimal" or y.values is None:
        raise ValueError("need an optimal packing solution")
    values = tuple(y.values[lab] for lab, _m in h.edges)
    return LpSolution("optimal", values, sum(values))


class MatchingBudgetExceeded(RuntimeError):
    pass


def _greedy_extend(h: Hypergraph, k: int, selected: set) -> set:
    counts: dict[int, int] = {}
    for lab, members in h.edges:
        if lab in selected:
            for v in members:
                counts[v] = counts.get(v, 0) + 1
    for lab, members in sorted(h.edges):
        if lab in selected:
            continue
        if all(counts.get(v, 0) < k for v in members):
            selected.add(lab)
            for v in members:
                counts[v] = counts.get(v, 0) + 1
    return selected


def _relaxation_value(h: Hypergraph, k: int, fixed: dict) -> tuple[object, tuple | None]:
    """Float LP bound for max k-matching with some edges fixed in or out.
    Returns (bound, fractional values of the free edges) or (None, None)
    when the fixing is already infeasible."""
    residual = {v: k for lab, members in h.edges for v in members}
    free: list[int] = []
    base = 0
    for j, (lab, members) in enumerate(h.edges):
        state = fixed.get(lab)
        if state == 1:
            base += 1
            for v in members:
                residual[v] -= 1
        elif state is None:
            free.append(j)
    if any(c < 0 for c in residual.values()):
        return None, None
    if not free:
        return base, ()
    incident: dict[int, list[int]] = {}
    for jj, j in enumerate(free):
        for v in h.edges[j][1]:
            incident.setdefault(v, []).append(jj)
    rows = tuple((tuple((jj, 1) for jj in js), "<=", residual[v])
                 for v, js in sorted(incident.items()))
    lp = LinearProgram("max", (1,) * len(free), rows, ((0, 1),) * len(free))
    sol = solve(lp, "float")
    if sol.status != "optimal":
        return None, None
    return base + sol.objective, sol.values


def _exact_max_kmatching(h: Hypergraph, k: int, incumbent: set,
                         max_nodes: int) -> set:
    """Branch-and-bound on edge variables with float-LP bounds; the LP of
    the k-matching relaxation is tight enough that few nodes are explored."""
    best = set(incumbent)
    nodes = 0
    stack: list[dict] = [{}]
    while stack:
        fixed = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise MatchingBudgetExceeded(
                f"k-matching search exceeded {max_nodes} nodes")
        bound, values = _relaxation_value(h, k, fixed)
        if bound is None or int(bound + 1e-6) <= len(best):
            continue
        free = [(j, lab) for j, (lab, _m) in enumerate(h.edges)
                if lab not in fixed]
        frac_j = None
        frac_dist = -1.0
        vals = {}
        for jj, (j, lab) in enumerate(free):
            v = values[jj]
            vals[lab] = v
            d = min(v, 1 - v)
            if d > FLOAT_EPS and d > frac_dist:
                frac_dist = d
                frac_j = lab
        if frac_j is None:
            candidate = {lab for lab, s in fixed.items() if s == 1}
            candidate |= {lab for lab, v in vals.items() if v >= 1 - 1e-6}
            if is_b_matching(h, candidate, k) and len(candidate) > len(best):
                best = candidate
            continue
        stack.append({**fixed, frac_j: 0})
        stack.append({**fixed, frac_j: 1})  # explored first (include branch)
    return best


def extract_kmatching(h: Hypergraph, k: int, m: LpSolution,
                      strategy: str = "threshold+greedy",
                      max_edges_exact: int = 60,
                      max_nodes: int = 200_000) -> BMatching:
    """Integral k-matching from a feasible fractional 1-matching.

    threshold keeps edges with m_e >= 1/k (always a valid k-matching);
    threshold+greedy extends that greedily; exact runs branch-and-bound
    for a maximum k-matching, which is guaranteed at least half of the
    fractional 1-matching optimum.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if m.status != "optimal" or m.values is None or len(m.values) != len(h.edges):
        raise ValueError("need an optimal fractional matching over h's edges")
    exact_vals = not isinstance(m.objective, float)
    cut = ratio(1, k) if exact_vals else 1 / k - FLOAT_EPS
    selected = {lab for (lab, _mem), val in zip(h.edges, m.values) if val >= cut}
    if strategy == "threshold":
        pass
    elif strategy == "threshold+greedy":
        selected = _greedy_extend(h, k, selected)
    elif strategy == "exact":
        if len(h.edges) > max_edges_exact:
            raise MatchingBudgetExceeded(
                f"exact strategy refused: {len(h.edges)} edges > {max_edges_exact}")
        selected = _greedy_extend(h, k, selected)
        selected = _exact_max_kmatching(h, k, selected, max_nodes)
    else:
        raise ValueError(f"unknown matching strategy {strategy!r}")
    assert is_b_matching(h, selected, k)
    return BMatching(frozenset(selected), k)


def out_bounded_set(g: Graph, aug: Augmentation,
                    strategy: str = "threshold+greedy",
                    packing_solution: LpSolution | None = None,
                    mode: str = "exact-rational") -> VertexSet:
    """A set Y in which every vertex of the augmentation has at most
    k = Delta_r outneighbors, of size >= alpha*_2r / 2 with the exact
    strategy.  Y = selected edge labels of a k-matching of the inneighbor
    hypergraph, seeded from the ball-packing LP optimum."""
    from .lp import independence_lp
    if packing_solution is None:
        packing_solution = solve(independence_lp(g, aug.r), mode)
    h = inneighbor_hypergraph(aug)
    k = indegree_profile(aug).delta[aug.r]
    m = matching_solution_from_packing(h, packing_solution)
    return frozenset(extract_kmatching(h, k, m, strategy).selected)


@dataclass(frozen=True)
class IndependenceCertificate:
    ok: bool
    worst_vertex: int | None
    count: int
    witness_counts: tuple[int, ...]


def certify_2rb_independent(g: Graph, y: VertexSet, r: int,
                            b: int) -> IndependenceCertificate:
    """ok iff every ball N_r[v] contains at most b members of y."""
    counts = tuple(len(ball_v & y) for ball_v in all_balls(g, r))
    if not counts:
        return IndependenceCertificate(True, None, 0, ())
    worst = max(range(g.n), key=lambda v: counts[v])
    return IndependenceCertificate(counts[worst] <= b, worst, counts[worst], counts)


def _conflict_adjacency(g: Graph, y: VertexSet, r2: int) -> dict:
    """Adjacency of the conflict graph: members of y at distance <= 2r."""
    ys = sorted(y)
    adj: dict[int, set] = {v: set() for v in ys}
    target = set(ys)
    for v in ys:
        dist = {v: 0}
        queue = deque([v])
        while queue:
            w = queue.popleft()
            if dist[w] == r2:
                continue
            for x in g.adj[w]:
                if x not in dist:
                    dist[x] = dist[w] + 1
                    queue.append(x)
        for w in dist:
            if w != v and w in target:
                adj[v].add(w)
                adj[w].add(v)
    return adj


def conflict_orientation_indegrees(g: Graph, aug2r: Augmentation, y: VertexSet,
                                   r: int) -> dict:
    """Indegrees of the conflict graph under the inneighbor-based
    orientation: y2 -> y1 whenever some inneighbor v of y1 in the
    2r-augmentation has y2 in N_r[v]."""
    balls = all_balls(g, r)
    indeg = {}
    for y1 in sorted(y):
        tails = set()
        for v, _rho in aug2r.in_arcs[y1]:
            tails |= balls[v] & y
        tails.discard(y1)
        indeg[y1] = len(tails)
    return indeg


def sparsify_to_independent(g: Graph, aug2r: Augmentation, y: VertexSet,
                            b: int) -> VertexSet:
    """Largest color class of a degeneracy coloring of the conflict graph.

    With d = b * Delta_2r the conflict graph is (2d-1)-degenerate, so the
    coloring uses at most 2d colors and the result has size >= |y| / (2d)
    and pairwise distances > 2r.
    """
    r2 = aug2r.r
    if r2 % 2 != 0:
        raise ValueError("sparsification needs an augmentation of even radius 2r")
    r = r2 // 2
    cert = certify_2rb_independent(g, y, r, b)
    if not cert.ok:
        raise ValueError(
            f"y is not (2r,{b})-independent: ball of {cert.worst_vertex} "
            f"meets it {cert.count} times")
    if not y:
        return frozenset()
    d = b * indegree_profile(aug2r).delta[r2]
    adj = _conflict_adjacency(g, y, r2)

    # smallest-last elimination order, ties to the smallest id
    deg = {v: len(adj[v]) for v in adj}
    alive = set(adj)
    order: list[int] = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        order.append(v)
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    order.reverse()

    color: dict[int, int] = {}
    for v in order:
        used = {color[w] for w in adj[v] if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    ncolors = max(color.values()) + 1
    assert ncolors <= 2 * d, f"coloring used {ncolors} > 2d = {2 * d} colors"
    classes: dict[int, set] = {}
    for v, c in color.items():
        classes.setdefault(c, set()).add(v)
    best_c = max(classes, key=lambda c: (len(classes[c]), -c))
    return frozenset(classes[best_c])


@dataclass(frozen=True)
class IndependenceResult:
    y_set: VertexSet
    b: int
    y1_set: VertexSet
    d: int
    witness_counts: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps({
            "y": sorted(self.y_set),
            "b": self.b,
            "y1": sorted(self.y1_set),
            "d": self.d,
        }, separators=(",", ":"))
