"""The tree on a left cell and the action of the generators on it.

For a generator ``s`` the graph ``LambdaGraph`` has the left cell of ``s``
(rigid words ending in ``s``) as vertices and an edge ``{t*v, v}`` labeled
``t`` whenever both ends are rigid.  Every vertex ``x`` has exactly one
descent, its leftmost letter.

The cell representation is modelled through its zig-zag category.  The
generator ``t`` sends the simple at ``x`` to the projective at ``x`` shifted
by one when ``t`` is the descent of ``x`` and kills it otherwise, so on
projectives it acts by ``D_t @ C``, where ``C`` is the Cartan matrix of the
tree and ``D_t`` selects the vertices with descent ``t``.  The graded matrix
is ``v**-1 * D_t @ C(v)``: the diagonal entry becomes ``v + v**-1`` and all
other entries carry no shift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .diagram import CoxeterDiagram, finiteness_check
from .errors import CoxkitError, InfiniteCellError
from .laurent import V, LaurentMatrix
from .words import Shorter, _can_prepend, format_word, left_multiply, sort_words
from .zigzag import MultiGraph, cartan_matrix, graded_cartan_matrix

__all__ = [
    "LambdaGraph", "lambda_graph", "ShiftedProjective", "simple_action",
    "action_matrix", "graded_action_matrix", "ActionMatrices", "action_matrices",
    "CellReport", "verify_cell_representation",
]

DESCENT_COLORS = ("lightblue", "salmon", "palegreen", "gold", "plum", "lightgray",
                  "orange", "cyan", "pink", "khaki")


@dataclass(frozen=True)
class LambdaGraph:
    diagram: CoxeterDiagram
    root: str
    vertices: tuple  # words, sorted
    edges: tuple  # (upper, lower, label) with upper == (label,) + lower
    truncated: bool = False
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {w: i for i, w in enumerate(self.vertices)})

    def __len__(self):
        return len(self.vertices)

    def index(self, w) -> int:
        try:
            return self._pos[tuple(w)]
        except KeyError:
            raise CoxkitError(f"{format_word(self.diagram, w)} is not a vertex of this graph") from None

    @staticmethod
    def descent(w) -> str:
        return w[0]

    def name(self, w) -> str:
        return format_word(self.diagram, w)

    def to_multigraph(self) -> MultiGraph:
        return MultiGraph(tuple(self.name(w) for w in self.vertices),
                          tuple((self.name(u), self.name(v)) for u, v, _ in self.edges))

    def descent_matrix(self, t: str) -> np.ndarray:
        return np.diag([1 if w[0] == t else 0 for w in self.vertices]).astype(np.int64)

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "truncated": self.truncated,
            "vertices": [{"word": self.name(w), "descent": w[0]} for w in self.vertices],
            "edges": [{"upper": self.name(u), "lower": self.name(v), "label": t}
                      for u, v, t in self.edges],
        }

    def to_dot(self) -> str:
        colors = {g: DESCENT_COLORS[i % len(DESCENT_COLORS)]
                  for i, g in enumerate(self.diagram.vertices)}
        lines = [f'graph "Lambda_{self.root}" {{', "  node [style=filled];"]
        for w in self.vertices:
            lines.append(f'  "{self.name(w)}" [fillcolor={colors[w[0]]}, tooltip="descent {w[0]}"];')
        for u, v, t in self.edges:
            lines.append(f'  "{self.name(u)}" -- "{self.name(v)}" [label="{t}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def lambda_graph(d: CoxeterDiagram, s: str, max_len: Optional[int] = None) -> LambdaGraph:
    """The tree on the left cell of ``s``.  ``max_len`` is required when the
    small cell of ``d`` is infinite; the result is then flagged truncated if
    the cap cut anything off."""
    d.index(s)
    verdict = finiteness_check(d)
    if not verdict.finite and max_len is None:
        raise InfiniteCellError(f"left cell of {s} is infinite ({verdict.reason.kind}); pass max_len")
    level = [(s,)]
    found, edges = [], []
    length = 1
    while level:
        if max_len is not None and length > max_len:
            break
        found.extend(level)
        nxt = []
        for w in level:
            for t in d.neighbors(w[0]):
                if _can_prepend(d, t, w):
                    nxt.append((t,) + w)
        if max_len is None or length + 1 <= max_len:
            edges.extend((u, u[1:], u[0]) for u in nxt)
        level = nxt
        length += 1
    verts = tuple(sort_words(d, found))
    pos = {w: i for i, w in enumerate(verts)}
    edges.sort(key=lambda e: (pos[e[1]], pos[e[0]]))
    return LambdaGraph(d, s, verts, tuple(edges), truncated=bool(level))


@dataclass(frozen=True)
class ShiftedProjective:
    vertex: tuple
    shift: int


def simple_action(d: CoxeterDiagram, s: str, t: str, x, lam: Optional[LambdaGraph] = None):
    """Image of the simple at ``x`` under ``t``: the projective at ``x`` shifted
    by one if ``t`` is the descent of ``x``, else ``None`` (zero)."""
    d.index(t)
    lam = lam or lambda_graph(d, s)
    x = tuple(x)
    lam.index(x)
    return ShiftedProjective(x, 1) if x[0] == t else None


def action_matrix(d: CoxeterDiagram, s: str, t: str, lam: Optional[LambdaGraph] = None,
                  max_len: Optional[int] = None) -> np.ndarray:
    """Column ``w`` lists the multiplicities of the projectives in ``t`` applied
    to the projective at ``w``; rows and columns follow ``lam.vertices``."""
    d.index(t)
    lam = lam or lambda_graph(d, s, max_len)
    return lam.descent_matrix(t) @ cartan_matrix(lam.to_multigraph())


def graded_action_matrix(d: CoxeterDiagram, s: str, t: str, lam: Optional[LambdaGraph] = None,
                         max_len: Optional[int] = None) -> LaurentMatrix:
    d.index(t)
    lam = lam or lambda_graph(d, s, max_len)
    dt = LaurentMatrix.from_int(lam.descent_matrix(t))
    return (dt @ graded_cartan_matrix(lam.to_multigraph())) * V ** -1


@dataclass(frozen=True)
class ActionMatrices:
    lam: LambdaGraph
    ungraded: dict  # generator -> ndarray
    graded: dict  # generator -> LaurentMatrix

    def to_json(self, t: Optional[str] = None) -> list:
        gens = [t] if t is not None else list(self.ungraded)
        return [{"generator": g, "ungraded": self.ungraded[g].tolist(),
                 "graded": self.graded[g].to_json()} for g in gens]


def action_matrices(d: CoxeterDiagram, s: str, max_len: Optional[int] = None) -> ActionMatrices:
    lam = lambda_graph(d, s, max_len)
    return ActionMatrices(
        lam,
        {t: action_matrix(d, s, t, lam) for t in d.vertices},
        {t: graded_action_matrix(d, s, t, lam) for t in d.vertices},
    )


@dataclass(frozen=True)
class CellReport:
    """Outcome of ``verify_cell_representation``; ``checks`` maps a check
    name to pass/fail.  ``skipped`` is set for truncated graphs."""
    generator: str
    checks: dict
    skipped: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.skipped is None and all(self.checks.values())

    def to_json(self) -> dict:
        return {"cell": self.generator, "ok": self.ok, "skipped": self.skipped, "checks": self.checks}


def _expected_column(lam: LambdaGraph, t: str, w) -> dict:
    # multiplicity of each projective in t acting on the projective at w
    if w[0] == t:
        return {w: 2}
    out = {}
    up = (t,) + w
    if up in lam._pos:
        out[up] = 1
    if len(w) > 1 and w[1] == t:
        out[w[1:]] = 1
    return out


def verify_cell_representation(d: CoxeterDiagram, s: str, max_len: Optional[int] = None) -> CellReport:
    """Check the action matrices on the tree of the left cell of ``s``:

    * ``tree``: the graph is a tree, every edge joins distinct descents and
      its label ``t`` satisfies ``t * upper == lower``;
    * ``cartan``: summing the action matrices over all generators gives the
      Cartan matrix of the tree;
    * ``multiplicities``: each column is 2 on the diagonal when ``t`` is the
      descent, else 1 at ``t*w`` (when in the cell) and 1 at the lower
      neighbour whose descent is ``t``, 0 elsewhere;
    * ``hecke`` and ``hecke_graded``: ``M**2 == 2 M`` and
      ``M(v)**2 == (v + 1/v) M(v)``;
    * ``adjunction``: ``M.T @ C == C @ M``;
    * ``entries``: all entries in {0, 1, 2}, the 2s exactly on diagonal
      positions with descent ``t``.
    """
    lam = lambda_graph(d, s, max_len)
    if lam.truncated:
        return CellReport(s, {}, skipped="truncated")
    g = lam.to_multigraph()
    c = cartan_matrix(g)
    mats = {t: action_matrix(d, s, t, lam) for t in d.vertices}
    graded = {t: graded_action_matrix(d, s, t, lam) for t in d.vertices}
    checks = {}

    tree_ok = (len(lam) == 1 and not lam.edges) or g.is_tree()
    for u, v, t in lam.edges:
        tree_ok &= u[0] != v[0] and left_multiply(d, t, u) == Shorter(v)
    checks["tree"] = bool(tree_ok)

    checks["cartan"] = bool(np.array_equal(sum(mats.values()), c))

    cases = True
    for t, m in mats.items():
        for j, w in enumerate(lam.vertices):
            want = np.zeros(len(lam), dtype=np.int64)
            for x, k in _expected_column(lam, t, w).items():
                want[lam.index(x)] = k
            cases &= bool(np.array_equal(m[:, j], want))
    checks["multiplicities"] = cases

    checks["hecke"] = all(np.array_equal(m @ m, 2 * m) for m in mats.values())
    checks["hecke_graded"] = all(gm @ gm == gm * (V + V ** -1) for gm in graded.values())
    checks["adjunction"] = all(np.array_equal(m.T @ c, c @ m) for m in mats.values())
    checks["graded_specializes"] = all(np.array_equal(graded[t].evaluate(1), mats[t]) for t in mats)

    entries = True
    for t, m in mats.items():
        if not set(np.unique(m).tolist()) <= {0, 1, 2}:
            entries = False
        twos = {(int(i), int(j)) for i, j in zip(*np.nonzero(m == 2))}
        entries &= twos == {(i, i) for i, w in enumerate(lam.vertices) if w[0] == t}
    checks["entries"] = bool(entries)
    return CellReport(s, checks)
