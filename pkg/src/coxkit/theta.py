"""Rooted graphs, simply laced Dynkin data, and the glued graph Theta.

``build_theta`` starts from a bipartite ADE diagram ``omega`` and, at every
vertex of the ``s``-class, glues a copy of the cell tree of ``s`` computed in
the ``s``-side of the diagram (rooted at ``s``); likewise for ``t``.  The
zig-zag category of the result is returned by ``two_rep_category``.

Catalog entries are matched to a rank-two label ``n`` through their Coxeter
number, which every entry carries and which ``coxeter_element_order``
recomputes from scratch in the root lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cellrep import LambdaGraph, lambda_graph
from .diagram import CoxeterDiagram, split_at_labeled_edge
from .errors import CoxkitError
from .zigzag import MultiGraph, ZigzagPresentation, build_zigzag

__all__ = [
    "RootedGraph", "one_point_union", "tree_canonical_form",
    "ade_diagram", "ade_type", "coxeter_element_order", "coxeter_number",
    "BipartiteADE", "bipartite_ade", "ade_catalog",
    "Theta", "build_theta", "two_rep_category",
]


@dataclass(frozen=True)
class RootedGraph:
    graph: MultiGraph
    root: object

    def __post_init__(self):
        if self.root not in self.graph:
            raise CoxkitError(f"root {self.root!r} is not a vertex")

    def reroot(self, root) -> "RootedGraph":
        return RootedGraph(self.graph, root)


def one_point_union(x: RootedGraph, y: RootedGraph, rename=None) -> RootedGraph:
    """Disjoint union of ``x`` and ``y`` with the two roots identified.

    The identified vertex keeps the name of ``x.root`` and is the new root.
    Other vertices of ``y`` are passed through ``rename`` if given, then primed
    until they no longer clash with ``x``.
    """
    taken = set(x.graph.vertices)
    mapping = {y.root: x.root}
    for v in y.graph.vertices:
        if v == y.root:
            continue
        new = rename(v) if rename is not None else v
        while new in taken:
            new = f"{new}'"
        taken.add(new)
        mapping[v] = new
    verts = x.graph.vertices + tuple(mapping[v] for v in y.graph.vertices if v != y.root)
    edges = x.graph.edges + tuple((mapping[u], mapping[v]) for u, v in y.graph.edges)
    return RootedGraph(MultiGraph(verts, edges), x.root)


# -- canonical forms ---------------------------------------------------------

def _tree_centers(g: MultiGraph) -> list:
    degree = {v: g.degree(v) for v in g.vertices}
    remaining = set(g.vertices)
    leaves = [v for v in g.vertices if degree[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for leaf in leaves:
            remaining.discard(leaf)
            for w in g.neighbors(leaf):
                if w in remaining:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        leaves = nxt
    return sorted(remaining, key=g.index)


def _rooted_code(g: MultiGraph, root, colors) -> str:
    def code(v, parent):
        kids = sorted(code(w, v) for w in g.neighbors(v) if w != parent)
        tag = "" if colors is None else str(colors[v])
        return "(" + tag + "".join(kids) + ")"
    return code(root, None)


def tree_canonical_form(g: MultiGraph, colors: Optional[dict] = None, root=None) -> str:
    """Isomorphism invariant of a (vertex-coloured, optionally rooted) tree:
    two trees get the same string iff they are isomorphic."""
    if not g.is_tree():
        raise CoxkitError("canonical forms are implemented for trees only")
    if root is not None:
        return "R" + _rooted_code(g, root, colors)
    return min(_rooted_code(g, c, colors) for c in _tree_centers(g))


# -- simply laced Dynkin diagrams ----------------------------------------------

def ade_diagram(kind: str, rank: int) -> MultiGraph:
    """Bourbaki-numbered diagram ``A_k`` (k >= 1), ``D_k`` (k >= 4) or
    ``E_6, E_7, E_8``; vertices are ``"1".."k"``."""
    names = tuple(str(i) for i in range(1, rank + 1))
    if kind == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(1, rank)]
    elif kind == "D" and rank >= 4:
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    elif kind == "E" and rank in (6, 7, 8):
        edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
    else:
        raise CoxkitError(f"no simply laced Dynkin diagram {kind}{rank}")
    return MultiGraph(names, tuple((str(a), str(b)) for a, b in edges))


def ade_type(g: MultiGraph) -> str:
    """Name (``"A5"``, ``"D4"``, ``"E7"``...) of a simply laced Dynkin diagram."""
    if len(set(map(frozenset, g.edges))) != len(g.edges) or not g.is_tree():
        raise CoxkitError("not a simply laced Dynkin diagram: must be a tree without multiple edges")
    n = len(g.vertices)
    branch = [v for v in g.vertices if g.degree(v) >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or g.degree(branch[0]) > 3:
        raise CoxkitError("not a simply laced Dynkin diagram: too many branches")
    c = branch[0]
    arms = []
    for start in g.neighbors(c):
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in g.neighbors(cur) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise CoxkitError(f"not a simply laced Dynkin diagram: arms {arms}")


def coxeter_element_order(g: MultiGraph, limit: int = 1000) -> int:
    """Order of the product of all simple reflections, acting on the root
    lattice by ``s_i(a_j) = a_j - A[i, j] a_i`` with ``A = 2I - adjacency``."""
    n = len(g.vertices)
    a = 2 * np.eye(n, dtype=np.int64) - g.adjacency()
    c = np.eye(n, dtype=np.int64)
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= a[i, :]
        c = c @ s
    power = c.copy()
    eye = np.eye(n, dtype=np.int64)
    for k in range(1, limit + 1):
        if np.array_equal(power, eye):
            return k
        power = power @ c
    raise CoxkitError(f"Coxeter element has order > {limit}")


def coxeter_number(name: str) -> int:
    kind, rank = name[0], int(name[1:])
    if kind == "A":
        return rank + 1
    if kind == "D":
        return 2 * rank - 2
    return {6: 12, 7: 18, 8: 30}[rank]


@dataclass(frozen=True)
class BipartiteADE:
    name: str
    graph: MultiGraph
    class_s: tuple
    class_t: tuple
    coxeter_number: int = field(default=0)

    def __post_init__(self):
        verts = set(self.graph.vertices)
        if set(self.class_s) | set(self.class_t) != verts or set(self.class_s) & set(self.class_t):
            raise CoxkitError("the two classes must partition the vertices")
        side = {v: 0 for v in self.class_s}
        side.update({v: 1 for v in self.class_t})
        for u, v in self.graph.edges:
            if side[u] == side[v]:
                raise CoxkitError(f"edge {u}-{v} does not join the two classes: not bipartite")

    def coloring(self) -> dict:
        out = {v: "s" for v in self.class_s}
        out.update({v: "t" for v in self.class_t})
        return out

    def to_json(self) -> dict:
        return {"name": self.name, "coxeter_number": self.coxeter_number,
                "graph": self.graph.to_json(),
                "class_s": list(self.class_s), "class_t": list(self.class_t)}


def bipartite_ade(graph: MultiGraph, class_s) -> BipartiteADE:
    """Wrap a user-supplied Dynkin diagram; the ``t``-class is the rest."""
    name = ade_type(graph)
    chosen = set(class_s)
    unknown = chosen - set(graph.vertices)
    if unknown:
        raise CoxkitError(f"unknown vertices in class_s: {sorted(unknown)}")
    class_s = tuple(v for v in graph.vertices if v in chosen)
    class_t = tuple(v for v in graph.vertices if v not in chosen)
    return BipartiteADE(name, graph, class_s, class_t, coxeter_number(name))


def _two_colorings(g: MultiGraph):
    color = {g.vertices[0]: 0}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in color:
                color[w] = 1 - color[v]
                stack.append(w)
    first = tuple(v for v in g.vertices if color[v] == 0)
    second = tuple(v for v in g.vertices if color[v] == 1)
    return (first, second), (second, first)


def ade_catalog(n: int) -> list:
    """Bipartite simply laced Dynkin diagrams with Coxeter number ``n``.

    Both class assignments of each diagram are listed, except when a diagram
    automorphism exchanges them (``A_k`` with ``k`` even).
    """
    if n < 3:
        raise CoxkitError("Coxeter number must be >= 3")
    names = [f"A{n - 1}"]
    if n % 2 == 0 and n >= 6:
        names.append(f"D{(n + 2) // 2}")
    names += {12: ["E6"], 18: ["E7"], 30: ["E8"]}.get(n, [])
    out = []
    for name in names:
        g = ade_diagram(name[0], int(name[1:]))
        h = coxeter_element_order(g)
        if h != n:
            raise AssertionError(f"{name}: Coxeter element has order {h}, expected {n}")
        forms = set()
        for cs, ct in _two_colorings(g):
            entry = BipartiteADE(name, g, cs, ct, h)
            form = tree_canonical_form(g, entry.coloring())
            if form not in forms:
                forms.add(form)
                out.append(entry)
    return out


# -- Theta ---------------------------------------------------------------------

@dataclass(frozen=True)
class Theta:
    """The glued graph with provenance.

    ``origin`` tags each vertex ``"omega"``, ``"lambda_s"`` or ``"lambda_t"``;
    ``copies[u]`` maps the words of the tree glued at the Omega vertex ``u``
    to vertices of ``graph``.
    """
    graph: MultiGraph
    omega: BipartiteADE
    lambda_s: LambdaGraph
    lambda_t: LambdaGraph
    origin: dict
    copies: dict

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def edges(self):
        return self.graph.edges

    def to_json(self) -> dict:
        return {
            "vertices": [{"name": v, "origin": self.origin[v]} for v in self.graph.vertices],
            "edges": [{"u": u, "v": v} for u, v in self.graph.edges],
            "omega": self.omega.name,
        }

    def to_dot(self) -> str:
        style = {"omega": "solid", "lambda_s": "dashed", "lambda_t": "dotted"}
        lines = ['graph Theta {']
        for v in self.graph.vertices:
            lines.append(f'  "{v}" [style={style[self.origin[v]]}];')
        for u, v in self.graph.edges:
            kind = self.origin[v] if self.origin[v] != "omega" else self.origin[u]
            lines.append(f'  "{u}" -- "{v}" [style={style[kind]}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_theta(d: CoxeterDiagram, omega: BipartiteADE) -> Theta:
    """Glue cell trees onto ``omega``.

    The root is moved through the ``s``-class, then the ``t``-class, and at
    each stop the current graph is joined (one-point union) with a fresh copy
    of the corresponding tree.  Glued vertices are named ``<word>@<u>``.
    """
    if not isinstance(omega, BipartiteADE):
        raise CoxkitError("omega must be a BipartiteADE")
    split = split_at_labeled_edge(d)
    lam = {
        "s": lambda_graph(split.gamma_s, split.s),
        "t": lambda_graph(split.gamma_t, split.t),
    }
    origin = {v: "omega" for v in omega.graph.vertices}
    copies = {}
    current = RootedGraph(omega.graph, omega.graph.vertices[0])
    for side, klass in (("s", omega.class_s), ("t", omega.class_t)):
        tree = lam[side]
        tree_graph = tree.to_multigraph()
        root_name = tree.name((tree.root,))
        for u in klass:
            current = current.reroot(u)
            before = set(current.graph.vertices)
            current = one_point_union(current, RootedGraph(tree_graph, root_name),
                                      rename=lambda w, u=u: f"{w}@{u}")
            names = {}
            new_vertices = [v for v in current.graph.vertices if v not in before]
            for w, name in zip([w for w in tree.vertices if w != (tree.root,)], new_vertices):
                names[w] = name
                origin[name] = f"lambda_{side}"
            names[(tree.root,)] = u
            copies[u] = names
    return Theta(current.graph, omega, lam["s"], lam["t"], origin, copies)


def two_rep_category(d: CoxeterDiagram, omega: BipartiteADE) -> ZigzagPresentation:
    return build_zigzag(build_theta(d, omega).graph)
