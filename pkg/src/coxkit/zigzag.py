"""Zig-zag categories of loop-free multigraphs.

Every edge of the graph becomes a pair of opposite arrows.  Paths are taken
modulo: paths of length three vanish, paths of length two between distinct
vertices vanish, and all length-two loops at a vertex coincide.  What is left
has a basis of idempotents (degree 0), arrows (degree 1) and one loop per
non-isolated vertex (degree 2).

Composition is written ``compose(p, x, y) == x o y``: first ``y``, then ``x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .diagram import NAME_RE
from .errors import CoxkitError, DiagramParseError, NotComposableError
from .laurent import LaurentMatrix

__all__ = [
    "MultiGraph", "parse_multigraph", "load_multigraph",
    "Idempotent", "Arrow", "Loop", "ZERO", "ZigzagPresentation",
    "build_zigzag", "compose", "cartan_matrix", "graded_cartan_matrix",
]


@dataclass(frozen=True)
class MultiGraph:
    """Unoriented loop-free multigraph; edge ``i`` is ``edges[i]``."""
    vertices: tuple
    edges: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        index = {}
        for v in self.vertices:
            if v in index:
                raise CoxkitError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        for u, v in self.edges:
            if u not in index or v not in index:
                raise CoxkitError(f"edge {u}-{v} uses an unknown vertex")
            if u == v:
                raise CoxkitError(f"loop at {u!r}: zig-zag graphs must be loop-free")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, edges, vertices=()) -> "MultiGraph":
        order = list(vertices)
        seen = set(order)
        for e in edges:
            for v in e:
                if v not in seen:
                    seen.add(v)
                    order.append(v)
        return cls(tuple(order), tuple(edges))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise CoxkitError(f"unknown vertex {v!r}") from None

    def degree(self, v) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def incident(self, v) -> bool:
        return any(v in e for e in self.edges)

    def neighbors(self, v) -> list:
        out = []
        for u, w in self.edges:
            if u == v:
                out.append(w)
            elif w == v:
                out.append(u)
        return out

    def adjacency(self) -> np.ndarray:
        n = len(self.vertices)
        a = np.zeros((n, n), dtype=np.int64)
        for u, v in self.edges:
            i, j = self._index[u], self._index[v]
            a[i, j] += 1
            a[j, i] += 1
        return a

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"edge {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [{"u": u, "v": v} for u, v in self.edges]}

    @classmethod
    def from_json(cls, data) -> "MultiGraph":
        return cls(tuple(data["vertices"]), tuple((e["u"], e["v"]) for e in data["edges"]))

    def to_dot(self, doubled: bool = False, name: str = "G") -> str:
        """DOT text for the graph, or for its doubled quiver."""
        kind, arrow = ("digraph", "->") if doubled else ("graph", "--")
        lines = [f"{kind} {name} {{"]
        lines += [f'  "{v}";' for v in self.vertices]
        for i, (u, v) in enumerate(self.edges):
            if doubled:
                lines.append(f'  "{u}" -> "{v}" [label="e{i}"];')
                lines.append(f'  "{v}" -> "{u}" [label="e{i}*"];')
            else:
                lines.append(f'  "{u}" {arrow} "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> MultiGraph:
    """Parse ``vertex <name>`` / ``edge <u> <v>`` lines; repeated ``edge``
    lines give parallel edges."""
    order, edges = [], []
    declared = set()
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not toks:
            continue
        (kw, kcol), args = toks[0], toks[1:]
        for tok, col in args:
            if not NAME_RE.match(tok):
                raise DiagramParseError(f"invalid name {tok!r}", line_no, col)
        if kw == "vertex":
            if len(args) != 1:
                raise DiagramParseError("expected: vertex <name>", line_no, kcol)
            v = args[0][0]
            if v in declared:
                raise DiagramParseError(f"duplicate vertex {v!r}", line_no, args[0][1])
            declared.add(v)
            order.append(v)
        elif kw == "edge":
            if len(args) != 2:
                raise DiagramParseError("expected: edge <name> <name> (no labels)", line_no, kcol)
            u, v = args[0][0], args[1][0]
            if u == v:
                raise DiagramParseError(f"loop at {u!r}", line_no, args[1][1])
            for x in (u, v):
                if x not in declared:
                    declared.add(x)
                    order.append(x)
            edges.append((u, v))
        else:
            raise DiagramParseError(f"unknown keyword {kw!r}", line_no, kcol)
    return MultiGraph(tuple(order), tuple(edges))


def load_multigraph(path) -> MultiGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_multigraph(fh.read())


# -- basis ---------------------------------------------------------------------

@dataclass(frozen=True)
class Idempotent:
    vertex: object
    degree = 0

    @property
    def source(self):
        return self.vertex

    @property
    def target(self):
        return self.vertex

    def __str__(self):
        return f"e[{self.vertex}]"


@dataclass(frozen=True)
class Arrow:
    edge: int
    source: object
    target: object
    degree = 1

    def __str__(self):
        return f"a{self.edge}[{self.source}->{self.target}]"


@dataclass(frozen=True)
class Loop:
    vertex: object
    degree = 2

    @property
    def source(self):
        return self.vertex

    @property
    def target(self):
        return self.vertex

    def __str__(self):
        return f"l[{self.vertex}]"


class _Zero:
    degree = None

    def __repr__(self):
        return "ZERO"

    __str__ = __repr__


ZERO = _Zero()

Basis = Union[Idempotent, Arrow, Loop]


def _element_json(x: Basis) -> dict:
    if isinstance(x, Arrow):
        return {"kind": "arrow", "edge": x.edge, "source": x.source, "target": x.target, "degree": 1}
    kind = "idempotent" if isinstance(x, Idempotent) else "loop"
    return {"kind": kind, "vertex": x.vertex, "degree": x.degree}


@dataclass(frozen=True)
class ZigzagPresentation:
    graph: MultiGraph
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self, x: Basis) -> int:
        return self.basis.index(x)

    def composition_table(self) -> dict:
        """``{(i, j): k}`` with ``basis[i] o basis[j] == basis[k]`` (``k`` is
        ``None`` for zero), over all composable pairs."""
        pos = {x: i for i, x in enumerate(self.basis)}
        table = {}
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                if x.source == y.target:
                    z = compose(self, x, y)
                    table[(i, j)] = None if z is ZERO else pos[z]
        return table

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "dimension": self.dimension,
            "basis": [_element_json(x) for x in self.basis],
            "composition": "x o y applies y first",
        }


def build_zigzag(g: MultiGraph) -> ZigzagPresentation:
    basis: list = [Idempotent(v) for v in g.vertices]
    for i, (u, v) in enumerate(g.edges):
        basis.append(Arrow(i, u, v))
        basis.append(Arrow(i, v, u))
    basis += [Loop(v) for v in g.vertices if g.incident(v)]
    return ZigzagPresentation(g, tuple(basis))


def compose(p: ZigzagPresentation, x: Basis, y: Basis):
    """``x o y``: the morphism ``y`` followed by ``x``, as a basis element or
    ``ZERO``."""
    for z in (x, y):
        if isinstance(z, Arrow):
            if not 0 <= z.edge < len(p.graph.edges) or {z.source, z.target} != set(p.graph.edges[z.edge]):
                raise CoxkitError(f"{z} is not an arrow of this presentation")
        elif z.vertex not in p.graph:
            raise CoxkitError(f"{z} is not a basis element of this presentation")
        elif isinstance(z, Loop) and not p.graph.incident(z.vertex):
            raise CoxkitError(f"no loop at isolated vertex {z.vertex!r}")
    if x.source != y.target:
        raise NotComposableError(f"cannot compose {x} o {y}: {y} ends at {y.target}, {x} starts at {x.source}")
    if isinstance(y, Idempotent):
        return x
    if isinstance(x, Idempotent):
        return y
    if isinstance(x, Arrow) and isinstance(y, Arrow):
        return Loop(y.source) if x.target == y.source else ZERO
    return ZERO


def cartan_matrix(g: MultiGraph) -> np.ndarray:
    """Entry ``[u, w]`` counts basis morphisms between ``u`` and ``w``."""
    n = len(g.vertices)
    c = np.zeros((n, n), dtype=np.int64)
    for x in build_zigzag(g).basis:
        c[g.index(x.source), g.index(x.target)] += 1
    return c


def graded_cartan_matrix(g: MultiGraph) -> LaurentMatrix:
    """As ``cartan_matrix`` with each basis morphism weighted by ``v**degree``."""
    n = len(g.vertices)
    parts = {k: np.zeros((n, n), dtype=np.int64) for k in (0, 1, 2)}
    for x in build_zigzag(g).basis:
        parts[x.degree][g.index(x.source), g.index(x.target)] += 1
    return LaurentMatrix((n, n), parts)
