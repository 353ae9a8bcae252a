"""Simple undirected graphs, group actions on them, and s-arc machinery.

An s-arc is an (s+1)-tuple of vertices with consecutive vertices adjacent
and no immediate backtracking.  s-arc-transitivity of a group action is
decided by orbit arithmetic on one stabilizer chain, never by materializing
the arc orbit.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .group import PermGroup, normalizes


class Graph:
    """A finite simple undirected graph on vertices {0, ..., n-1}."""

    __slots__ = ("vertex_count", "adjacency")

    def __init__(self, vertex_count: int, adjacency):
        self.vertex_count = vertex_count
        self.adjacency = tuple(tuple(nbrs) for nbrs in adjacency)

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        nbrs = [set() for _ in range(vertex_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, [tuple(sorted(s)) for s in nbrs])

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def degrees(self) -> list:
        return [len(nbrs) for nbrs in self.adjacency]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list:
        """Sorted list of edges (u, v) with u < v."""
        return [(u, v) for u in range(self.vertex_count)
                for v in self.adjacency[u] if u < v]

    def valency(self):
        """The common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_complete(self) -> bool:
        return self.valency() == self.vertex_count - 1

    def is_connected(self) -> bool:
        """BFS reachability from vertex 0 covers all vertices."""
        if self.vertex_count == 0:
            return True
        seen = [False] * self.vertex_count
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.vertex_count

    # -- serialization --

    def to_edgelist(self) -> str:
        return "\n".join(f"{u} {v}" for u, v in self.edges()) + "\n"

    @classmethod
    def from_edgelist(cls, text: str, vertex_count: int | None = None) -> "Graph":
        edges = []
        top = -1
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"edge list line {lineno}: expected 'u v', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"edge list line {lineno}: non-integer vertex in {line!r}")
            edges.append((u, v))
            top = max(top, u, v)
        if vertex_count is None:
            vertex_count = top + 1
        return cls.from_edges(vertex_count, edges)

    def to_dot(self) -> str:
        lines = ["graph G {"]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"vertex_count": self.vertex_count,
                           "edges": [list(e) for e in self.edges()]},
                          sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        obj = json.loads(text)
        return cls.from_edges(int(obj["vertex_count"]), obj["edges"])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count == other.vertex_count
                and self.adjacency == other.adjacency)

    def __hash__(self):
        return hash((self.vertex_count, self.adjacency))

    def __repr__(self):
        return f"Graph({self.vertex_count} vertices, {self.edge_count()} edges)"


def count_s_arcs(graph: Graph, s: int) -> int:
    """Number of s-arcs; exact, arbitrary precision."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s == 0:
        return graph.vertex_count
    degs = graph.degrees()
    if s == 1:
        return sum(degs)
    if s == 2:
        return sum(d * (d - 1) for d in degs)
    # non-backtracking walk DP over directed edges
    counts = {(u, v): 1 for u in range(graph.vertex_count)
              for v in graph.adjacency[u]}
    for _ in range(s - 1):
        nxt = {}
        for (u, v), c in counts.items():
            for w in graph.adjacency[v]:
                if w != u:
                    key = (v, w)
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
        if not counts:
            return 0
    return sum(counts.values())


def least_s_arc(graph: Graph, s: int):
    """The lexicographically least s-arc, or None if there is none."""
    if s == 0:
        return (0,) if graph.vertex_count else None

    def extend(path):
        if len(path) == s + 1:
            return tuple(path)
        prev = path[-2] if len(path) >= 2 else None
        for w in graph.adjacency[path[-1]]:
            if w == prev:
                continue
            path.append(w)
            found = extend(path)
            if found:
                return found
            path.pop()
        return None

    for v in range(graph.vertex_count):
        found = extend([v])
        if found:
            return found
    return None


class GroupAction:
    """A permutation group acting on a graph by automorphisms.

    Every generator is checked to preserve the edge set at construction.
    """

    def __init__(self, group: PermGroup, graph: Graph):
        if group.degree != graph.vertex_count:
            raise ValueError(
                f"group degree {group.degree} != vertex count {graph.vertex_count}")
        for g in group.generators:
            arr = g._img
            for u in range(graph.vertex_count):
                image = tuple(sorted(int(arr[w]) for w in graph.adjacency[u]))
                if image != graph.adjacency[int(arr[u])]:
                    raise ValueError(
                        f"generator {g.cycle_string()} does not preserve adjacency "
                        f"at vertex {u}")
        self.group = group
        self.graph = graph


@dataclass
class TwoArcReport:
    """Evidence for (or against) s-arc-transitivity of an action."""

    s: int
    total_arcs: int
    sample_arc: tuple
    arc_stabilizer_order: int
    orbit_size: int
    transitive: bool

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "total_arcs": self.total_arcs,
            "sample_arc": list(self.sample_arc),
            "arc_stabilizer_order": self.arc_stabilizer_order,
            "orbit_size": self.orbit_size,
            "transitive": self.transitive,
        }


def is_s_arc_transitive(action: GroupAction, s: int) -> TwoArcReport:
    """Decide s-arc-transitivity of the action by orbit-size arithmetic.

    The stabilizer of the lexicographically least s-arc is computed from one
    chain based at the arc; the arc orbit size |G| / |G_arc| is compared
    with the total s-arc count.
    """
    graph = action.graph
    total = count_s_arcs(graph, s)
    arc = least_s_arc(graph, s)
    if total == 0 or arc is None:
        raise ValueError(f"graph has no {s}-arcs")
    stab = action.group.tuple_stabilizer(arc)
    g_order = action.group.order()
    stab_order = stab.order()
    orbit_size = g_order // stab_order
    return TwoArcReport(
        s=s,
        total_arcs=total,
        sample_arc=arc,
        arc_stabilizer_order=stab_order,
        orbit_size=orbit_size,
        transitive=orbit_size == total,
    )


def quotient_graph(action: GroupAction, M: PermGroup):
    """The quotient by the orbits of M: (graph, vertex -> orbit index map).

    Orbits are the quotient's vertices; two orbits are adjacent when some
    edge joins them.  Edges inside one orbit are dropped (simple-graph
    convention).
    """
    if M.degree != action.graph.vertex_count:
        raise ValueError("M acts on the wrong domain")
    if not M.is_subgroup_of(action.group):
        raise ValueError("M is not a subgroup of the acting group")
    orbits = M.orbits()
    omap = [0] * action.graph.vertex_count
    for i, orbit in enumerate(orbits):
        for v in orbit:
            omap[v] = i
    edges = set()
    for u, v in action.graph.edges():
        a, b = omap[u], omap[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(len(orbits), sorted(edges)), omap


def is_normal_cover(cover: Graph, quotient: Graph) -> bool:
    """Valency-preservation verdict; both graphs must be regular."""
    dc = cover.valency()
    dq = quotient.valency()
    if dc is None or dq is None:
        raise ValueError("normal-cover test needs regular graphs")
    return dc == dq


@dataclass
class QuotientCheckReport:
    """Evidence for the semiregular-quotient property of a normal subgroup."""

    normal: bool
    orbit_count: int
    hypotheses_met: bool
    semiregular: bool | None = None
    cover_valency: int | None = None
    quotient_valency: int | None = None
    valency_preserved: bool | None = None
    internal_edges_dropped: bool = False
    conclusions_hold: bool | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "normal": self.normal,
            "orbit_count": self.orbit_count,
            "hypotheses_met": self.hypotheses_met,
            "semiregular": self.semiregular,
            "cover_valency": self.cover_valency,
            "quotient_valency": self.quotient_valency,
            "valency_preserved": self.valency_preserved,
            "internal_edges_dropped": self.internal_edges_dropped,
            "conclusions_hold": self.conclusions_hold,
            "notes": list(self.notes),
        }


def semiregular_quotient_check(action: GroupAction, M: PermGroup) -> QuotientCheckReport:
    """Check that a normal M is semiregular and the quotient preserves valency.

    For 2-arc-transitive inputs with a normal M having at least three orbits
    these conclusions must hold; violations are reported as counterexample
    evidence rather than raised.  Unmet hypotheses (non-normal M, fewer than
    three orbits) are flagged, with the evidence still reported.
    """
    if not M.is_subgroup_of(action.group):
        raise ValueError("M is not a subgroup of the acting group")
    normal = all(normalizes(g, M) for g in action.group.generators)
    orbit_count = len(M.orbits())
    report = QuotientCheckReport(
        normal=normal,
        orbit_count=orbit_count,
        hypotheses_met=normal and orbit_count >= 3,
    )
    if not normal:
        report.notes.append("M is not normal in the acting group")
    if orbit_count < 3:
        report.notes.append(f"M has only {orbit_count} orbits")

    report.semiregular = M.is_semiregular()
    if not report.semiregular:
        report.notes.append("M has a nontrivial point stabilizer")
    quotient, omap = quotient_graph(action, M)
    report.internal_edges_dropped = any(
        omap[u] == omap[v] for u, v in action.graph.edges())
    if report.internal_edges_dropped:
        report.notes.append("some edges lie inside a single M-orbit")
    report.cover_valency = action.graph.valency()
    report.quotient_valency = quotient.valency()
    if report.cover_valency is not None and report.quotient_valency is not None:
        report.valency_preserved = report.cover_valency == report.quotient_valency
        if not report.valency_preserved:
            report.notes.append("quotient valency differs from cover valency")
    report.conclusions_hold = bool(report.semiregular) and bool(report.valency_preserved)
    return report
