"""Exhaustive generators of small graphs up to isomorphism, for the test-suite.

Graphs live on vertices ``0..n-1``; an edge assignment is a vector over the
unordered pairs.  Classes are grown one edge at a time and deduplicated by a
canonical code (the maximum over all vertex permutations).
"""

import functools
import itertools

import numpy as np

from coxkit.diagram import INF, CoxeterDiagram
from coxkit.zigzag import MultiGraph


@functools.lru_cache(maxsize=None)
def _perm_maps(n):
    pairs = list(itertools.combinations(range(n), 2))
    pid = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    pmap = np.array([[pid[tuple(sorted((pm[a], pm[b])))] for a, b in pairs] for pm in perms],
                    dtype=np.int64).reshape(len(perms), len(pairs))
    return pairs, pmap


def _canon(vec, pmap, base):
    if pmap.shape[1] == 0:
        return 0
    out = np.zeros(pmap.shape, dtype=np.int64)
    np.put_along_axis(out, pmap, np.broadcast_to(vec, pmap.shape), axis=1)
    weights = base ** np.arange(pmap.shape[1] - 1, -1, -1, dtype=np.int64)
    return int((out @ weights).max())


def _connected(n, pairs, vec):
    adj = {i: [] for i in range(n)}
    for (a, b), x in zip(pairs, vec):
        if x:
            adj[a].append(b)
            adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@functools.lru_cache(maxsize=None)
def multigraph_classes(n, max_edges):
    """Loop-free multigraphs on ``n`` vertices with at most ``max_edges``
    edges, one per isomorphism class."""
    pairs, pmap = _perm_maps(n)
    base = max_edges + 1
    level = {_canon(np.zeros(len(pairs), np.int64), pmap, base): np.zeros(len(pairs), np.int64)}
    found = list(level.values())
    for _ in range(max_edges):
        nxt = {}
        for vec in level.values():
            for i in range(len(pairs)):
                u = vec.copy()
                u[i] += 1
                code = _canon(u, pmap, base)
                if code not in nxt:
                    nxt[code] = u
        level = nxt
        found.extend(level.values())
    out = []
    for vec in found:
        edges = [pairs[i] for i in range(len(pairs)) for _ in range(vec[i])]
        out.append(MultiGraph(tuple(str(i) for i in range(n)),
                              tuple((str(a), str(b)) for a, b in edges)))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def diagram_classes(n, labels, connected=True):
    """Coxeter diagrams on vertices ``"0".."n-1"`` with edge labels drawn
    from ``labels``, one per isomorphism class."""
    pairs, pmap = _perm_maps(n)
    base = len(labels) + 1
    start = np.zeros(len(pairs), np.int64)
    level = {_canon(start, pmap, base): start}
    found = [start]
    for _ in range(len(pairs)):
        nxt = {}
        for vec in level.values():
            for i in range(len(pairs)):
                if vec[i]:
                    continue
                for lab in range(1, len(labels) + 1):
                    u = vec.copy()
                    u[i] = lab
                    code = _canon(u, pmap, base)
                    if code not in nxt:
                        nxt[code] = u
        level = nxt
        found.extend(level.values())
    out = []
    verts = tuple(str(i) for i in range(n))
    for vec in found:
        if connected and not _connected(n, pairs, vec):
            continue
        edges = tuple((str(a), str(b), labels[x - 1]) for (a, b), x in zip(pairs, vec) if x)
        out.append(CoxeterDiagram(verts, edges))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def tree_classes(n):
    """Unlabeled trees on ``n`` vertices up to isomorphism, as edge lists
    (grown by attaching a leaf to every vertex of every smaller tree)."""
    if n == 1:
        return ((),)
    pairs, pmap = _perm_maps(n)
    seen = {}
    for small in tree_classes(n - 1):
        for v in range(n - 1):
            edges = small + ((v, n - 1),)
            vec = np.zeros(len(pairs), np.int64)
            for a, b in edges:
                vec[pairs.index((a, b))] = 1
            code = _canon(vec, pmap, 2)
            if code not in seen:
                seen[code] = edges
    return tuple(seen.values())


def tree_diagram(edges, n, labeled=None):
    """Diagram on a tree; ``labeled`` is ``(edge_index, label)`` or None."""
    verts = tuple(str(i) for i in range(n))
    out = []
    for k, (a, b) in enumerate(edges):
        m = labeled[1] if labeled is not None and labeled[0] == k else 3
        out.append((str(a), str(b), m))
    return CoxeterDiagram(verts, tuple(out))


LABELS_34INF = (3, 4, INF)
LABELS_345INF = (3, 4, 5, INF)
