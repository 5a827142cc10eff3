"""Coxeter-Dynkin diagrams: model, ``.cox`` parsing, finiteness of the small cell.

A diagram is a simple graph on the simple reflections.  An absent edge means
the two generators commute (m = 2); an edge carries its label m >= 3 or
``INF``.  Vertex order is declaration order and every list this package emits
follows it.

>>> d = parse_diagram("vertex a\\nvertex b\\nedge a b 4")
>>> d.vertices, d.m("a", "b"), d.m("a", "a")
(('a', 'b'), 4, 1)
"""

from __future__ import annotations

import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .errors import CoxkitError, DiagramParseError, DisconnectedDiagramError

__all__ = [
    "INF", "Edge", "CoxeterDiagram", "parse_diagram", "load_diagram",
    "diagram_to_json", "diagram_from_json",
    "Finite", "CycleFound", "InfiniteLabel", "TwoLabeledEdges", "FinitenessVerdict",
    "finiteness_check", "SplitData", "split_at_labeled_edge", "tree_path",
]

INF = math.inf
Label = Union[int, float]

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def format_label(m: Label) -> str:
    return "inf" if m == INF else str(m)


class Edge(NamedTuple):
    u: str
    v: str
    m: Label = 3

    @property
    def labeled(self) -> bool:
        return self.m != 3

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "m": "inf" if self.m == INF else self.m}


@dataclass(frozen=True)
class CoxeterDiagram:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    _labels: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _pair_m: dict = field(init=False, repr=False, compare=False, hash=False)
    _letters: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for v in self.vertices:
            if not isinstance(v, str) or not NAME_RE.match(v):
                raise CoxkitError(f"invalid generator name {v!r}")
            if v in index:
                raise CoxkitError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        labels = {}
        adj = {v: [] for v in self.vertices}
        normalized = []
        for e in self.edges:
            u, v, m = Edge(*e)
            if u not in index or v not in index:
                raise CoxkitError(f"edge {u}-{v} uses an undeclared vertex")
            if u == v:
                raise CoxkitError(f"self-loop at {u!r}")
            if not (m == INF or (isinstance(m, int) and m >= 3)):
                raise CoxkitError(f"edge {u}-{v}: label must be an integer >= 3 or inf, got {m!r}")
            key = frozenset((u, v))
            if key in labels:
                raise CoxkitError(f"duplicate edge {u}-{v}")
            labels[key] = m
            if index[u] > index[v]:
                u, v = v, u
            normalized.append(Edge(u, v, m))
            adj[u].append(v)
            adj[v].append(u)
        normalized.sort(key=lambda e: (index[e.u], index[e.v]))
        for v in adj:
            adj[v].sort(key=index.__getitem__)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_adj", {v: tuple(ns) for v, ns in adj.items()})
        object.__setattr__(self, "_index", index)
        pair_m = {}
        for e in normalized:
            pair_m[(e.u, e.v)] = pair_m[(e.v, e.u)] = e.m
        object.__setattr__(self, "_pair_m", pair_m)
        object.__setattr__(self, "_letters", frozenset(index))

    @classmethod
    def from_edges(cls, edges, vertices=()) -> "CoxeterDiagram":
        """Build from ``(u, v)`` or ``(u, v, m)`` tuples; vertices are declared
        in the order given, then in order of first use."""
        order = list(vertices)
        seen = set(order)
        for e in edges:
            for v in e[:2]:
                if v not in seen:
                    seen.add(v)
                    order.append(v)
        return cls(tuple(order), tuple(Edge(*e) for e in edges))

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise CoxkitError(f"unknown generator {v!r}") from None

    def has_letters(self, word) -> bool:
        return self._letters.issuperset(word)

    def m(self, a: str, b: str) -> Label:
        """Coxeter matrix entry: 1 on the diagonal, 2 for commuting pairs."""
        if a == b:
            return 1
        return self._pair_m.get((a, b), 2)

    def adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self._labels

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise CoxkitError(f"unknown generator {v!r}") from None

    @property
    def labeled_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.labeled)

    def components(self) -> list[list[str]]:
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self._adj[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp, key=self._index.__getitem__))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def require_connected(self):
        if not self.vertices:
            raise DisconnectedDiagramError("empty diagram")
        comps = self.components()
        if len(comps) > 1:
            raise DisconnectedDiagramError(
                "diagram is disconnected (components: "
                + "; ".join(",".join(c) for c in comps) + ")")

    def restrict(self, vertices) -> "CoxeterDiagram":
        """Full subdiagram on ``vertices`` (kept in this diagram's order)."""
        keep = set(vertices)
        for v in keep:
            self.index(v)
        verts = tuple(v for v in self.vertices if v in keep)
        return CoxeterDiagram(verts, tuple(e for e in self.edges if e.u in keep and e.v in keep))

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        for e in self.edges:
            lines.append(f"edge {e.u} {e.v}" if e.m == 3 else f"edge {e.u} {e.v} {format_label(e.m)}")
        return "\n".join(lines) + "\n"


def _tokens(line: str):
    for match in re.finditer(r"\S+", line):
        yield match.group(), match.start() + 1


def parse_diagram(text: str) -> CoxeterDiagram:
    """Parse the line-based ``.cox`` format.

    ``vertex <name>`` declares a generator, ``edge <u> <v> [<m>]`` an edge with
    label ``m`` (an integer >= 3 or ``inf``; 3 when omitted).  ``#`` starts a
    comment.  Vertices first named in an edge line are declared there.
    """
    order: list[str] = []
    declared: set[str] = set()
    explicit: set[str] = set()
    edges: list[Edge] = []
    seen_edges: set[frozenset] = set()

    def name(tok, line_no, col):
        if not NAME_RE.match(tok):
            raise DiagramParseError(f"invalid name {tok!r}", line_no, col)
        return tok

    def declare(v):
        if v not in declared:
            declared.add(v)
            order.append(v)

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        keyword, kcol = toks[0]
        args = toks[1:]
        if keyword == "vertex":
            if len(args) != 1:
                col = args[1][1] if len(args) > 1 else len(line.rstrip()) + 1
                raise DiagramParseError("expected: vertex <name>", line_no, col)
            v = name(args[0][0], line_no, args[0][1])
            if v in explicit or v in declared:
                raise DiagramParseError(f"duplicate vertex {v!r}", line_no, args[0][1])
            explicit.add(v)
            declare(v)
        elif keyword == "edge":
            if len(args) not in (2, 3):
                col = args[3][1] if len(args) > 3 else len(line.rstrip()) + 1
                raise DiagramParseError("expected: edge <name> <name> [<m>]", line_no, col)
            u = name(args[0][0], line_no, args[0][1])
            v = name(args[1][0], line_no, args[1][1])
            if u == v:
                raise DiagramParseError(f"self-loop at {u!r}", line_no, args[1][1])
            m: Label = 3
            if len(args) == 3:
                tok, col = args[2]
                if tok == "inf":
                    m = INF
                elif re.fullmatch(r"[0-9]+", tok):
                    m = int(tok)
                    if m < 3:
                        raise DiagramParseError(
                            f"label must be >= 3 (m=2 is written by omitting the edge), got {m}",
                            line_no, col)
                else:
                    raise DiagramParseError(f"invalid label {tok!r}", line_no, col)
            key = frozenset((u, v))
            if key in seen_edges:
                raise DiagramParseError(f"duplicate edge {u}-{v}", line_no, kcol)
            seen_edges.add(key)
            declare(u)
            declare(v)
            edges.append(Edge(u, v, m))
        else:
            raise DiagramParseError(f"unknown keyword {keyword!r}", line_no, kcol)
    return CoxeterDiagram(tuple(order), tuple(edges))


def load_diagram(path) -> CoxeterDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def diagram_to_json(d: CoxeterDiagram) -> dict:
    return {"vertices": list(d.vertices), "edges": [e.to_json() for e in d.edges]}


def diagram_from_json(data) -> CoxeterDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    edges = []
    for e in data.get("edges", []):
        m = e.get("m", 3)
        edges.append(Edge(e["u"], e["v"], INF if m == "inf" else m))
    return CoxeterDiagram(tuple(data["vertices"]), tuple(edges))


# -- finiteness -------------------------------------------------------------

@dataclass(frozen=True)
class Finite:
    kind = "finite"

    def to_json(self):
        return None


@dataclass(frozen=True)
class CycleFound:
    vertices: tuple[str, ...]
    kind = "cycle"

    def to_json(self):
        return {"cycle": list(self.vertices)}


@dataclass(frozen=True)
class InfiniteLabel:
    edge: Edge
    kind = "infinite_label"

    def to_json(self):
        return {"infinite_label": self.edge.to_json()}


@dataclass(frozen=True)
class TwoLabeledEdges:
    first: Edge
    second: Edge
    kind = "two_labeled_edges"

    def to_json(self):
        return {"two_labeled_edges": [self.first.to_json(), self.second.to_json()]}


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    reason: Union[Finite, CycleFound, InfiniteLabel, TwoLabeledEdges]

    def __bool__(self):
        return self.finite

    def to_json(self) -> dict:
        return {"finite": self.finite, "reason": self.reason.to_json()}


def _find_cycle(d: CoxeterDiagram) -> tuple[str, ...] | None:
    parent = {}
    depth = {}
    for root in d.vertices:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        stack = [(root, iter(d.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == parent[v]:
                    continue
                if w in parent:
                    if depth[w] < depth[v]:
                        # back edge v -> ancestor w
                        path = [v]
                        while path[-1] != w:
                            path.append(parent[path[-1]])
                        return tuple(reversed(path))
                    continue
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(d.neighbors(w))))
                break
            else:
                stack.pop()
    return None


def finiteness_check(d: CoxeterDiagram) -> FinitenessVerdict:
    """Decide whether the small cell of the Coxeter system of ``d`` is finite.

    It is finite exactly when ``d`` is a tree, carries at most one labeled
    edge, and has no infinite label.  A failing verdict carries a witness,
    checked in that order: a cycle, an infinite edge, two labeled edges.
    """
    d.require_connected()
    cycle = _find_cycle(d)
    if cycle is not None:
        return FinitenessVerdict(False, CycleFound(cycle))
    for e in d.edges:
        if e.m == INF:
            return FinitenessVerdict(False, InfiniteLabel(e))
    labeled = d.labeled_edges
    if len(labeled) > 1:
        return FinitenessVerdict(False, TwoLabeledEdges(labeled[0], labeled[1]))
    return FinitenessVerdict(True, Finite())


# -- splitting at the labeled edge -----------------------------------------

@dataclass(frozen=True)
class SplitData:
    s: str
    t: str
    gamma_s: CoxeterDiagram
    gamma_t: CoxeterDiagram
    pi: dict
    label: int = 3


def _component_avoiding(d: CoxeterDiagram, start: str, banned: str) -> list[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in d.neighbors(v):
            if w != banned and w not in seen:
                seen.add(w)
                queue.append(w)
    return [v for v in d.vertices if v in seen]


def split_at_labeled_edge(d: CoxeterDiagram) -> SplitData:
    """Cut a one-labeled-edge tree at its labeled edge ``{s, t}``.

    ``s`` is the endpoint declared first.  ``pi`` sends each vertex to the
    endpoint on its side.
    """
    d.require_connected()
    if not d.is_tree():
        raise CoxkitError("diagram is not a tree")
    labeled = d.labeled_edges
    if not labeled:
        raise CoxkitError("diagram has no labeled edge")
    if len(labeled) > 1:
        raise CoxkitError(
            f"diagram has more than one labeled edge ({labeled[0].u}-{labeled[0].v}, "
            f"{labeled[1].u}-{labeled[1].v})")
    s, t, m = labeled[0]
    if m == INF:
        raise CoxkitError(f"labeled edge {s}-{t} has infinite label")
    side_s = _component_avoiding(d, s, t)
    side_t = _component_avoiding(d, t, s)
    pi = {v: (s if v in side_s else t) for v in d.vertices}
    return SplitData(s, t, d.restrict(side_s), d.restrict(side_t), pi, m)


def tree_path(d: CoxeterDiagram, a: str, b: str) -> list[str]:
    """Vertices of the unique simple path from ``a`` to ``b`` in a tree."""
    d.index(a)
    d.index(b)
    if not d.is_tree():
        raise CoxkitError("diagram is not a tree")
    parent = {b: None}
    queue = deque([b])
    while queue:
        v = queue.popleft()
        if v == a:
            break
        for w in d.neighbors(v):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    path = [a]
    while path[-1] != b:
        path.append(parent[path[-1]])
    return path
