"""Elements of the small cell as rigid words.

A word is a tuple of generator names, written left to right as it is
printed; the group element is the product read left to right.  Left
multiplication by ``t`` prepends ``t``.  A nonempty word is *rigid* when no
commutation or braid move applies to it:

* every pair of neighbouring letters is an edge of the diagram, and
* no alternating factor ``abab...`` has length ``m(a, b)``.

The rigid words are exactly the elements with a unique reduced expression,
i.e. the small two-sided cell.  ``braid_orbit`` and ``oracle_unique_reduced``
decide the same property by closing a word under all moves, independently of
the local pattern check; the test-suite keeps the two in agreement.

The leftmost letter of a rigid word names its right cell, the rightmost its
left cell.
"""

from __future__ import annotations

import enum
import functools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, NamedTuple, Optional, Union

from .diagram import INF, CoxeterDiagram, finiteness_check, split_at_labeled_edge, tree_path
from .errors import CoxkitError, InfiniteCellError, OrbitCapExceeded

if TYPE_CHECKING:
    import numpy as np

__all__ = [
    "Word", "parse_word", "format_word", "word_key", "sort_words",
    "Rigidity", "is_rigid", "SmallCell", "enumerate_small_cell",
    "Shorter", "Longer", "LeavesCell", "left_multiply",
    "CellTable", "cell_table", "intersection",
    "braid_moves", "braid_orbit", "OracleStatus", "OracleReport", "oracle_unique_reduced",
    "induced_bijection", "parabolic_core_check", "DEFAULT_ORBIT_CAP",
    "BatchOracle", "batch_oracle",
]

Word = tuple  # tuple[str, ...]

DEFAULT_ORBIT_CAP = 10_000


# -- serialization ----------------------------------------------------------

def _compact_ok(d: CoxeterDiagram) -> bool:
    return all(len(v) == 1 for v in d.vertices)


def parse_word(d: CoxeterDiagram, text: str) -> Word:
    """Read a word: space-separated names, or concatenated single-character
    names when every generator of ``d`` has a one-character name.

    ``"e"`` or the empty string is the identity, unless ``e`` is a generator.
    """
    text = text.strip()
    if " " in text or "\t" in text:
        letters = tuple(text.split())
    elif text in d:
        letters = (text,)
    elif text in ("", "e"):
        letters = ()
    elif _compact_ok(d):
        letters = tuple(text)
    else:
        raise CoxkitError(
            f"cannot read word {text!r}: compact form needs single-character generator names")
    for x in letters:
        d.index(x)
    return letters


def format_word(d: CoxeterDiagram, w: Word, compact: Optional[bool] = None) -> str:
    if not w:
        return "e"
    if compact is None:
        compact = _compact_ok(d)
    return "".join(w) if compact else " ".join(w)


def word_key(d: CoxeterDiagram, w: Word):
    """Sort key: length first, then lexicographic in declaration order."""
    return (len(w), tuple(d.index(x) for x in w))


def sort_words(d: CoxeterDiagram, words: Iterable[Word]) -> list[Word]:
    return sorted(words, key=lambda w: word_key(d, w))


# -- rigidity ---------------------------------------------------------------

class Rigidity(NamedTuple):
    """Result of ``is_rigid``; truthy iff rigid.

    On failure ``position`` is the 0-based index where the offending factor
    starts (a non-edge pair, or an alternating factor of full length).
    """
    rigid: bool
    position: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.rigid


def is_rigid(d: CoxeterDiagram, w: Word) -> Rigidity:
    if not w:
        return Rigidity(False, None, "empty word is the identity")
    if len(w) == 1:
        d.index(w[0])
        return _RIGID
    # pair_m only holds pairs of known letters, so a word that survives the
    # loop is valid; failures are checked for unknown letters before returning
    pair_m = d._pair_m
    run = 1
    b = w[0]
    for i in range(1, len(w)):
        a, b = b, w[i]
        if a == b:
            return _fail(d, w, i - 1, f"repeated letter {a}")
        m = pair_m.get((a, b), 2)
        if m == 2:
            return _fail(d, w, i - 1, f"{a} and {b} commute")
        run = run + 1 if i >= 2 and w[i - 2] == b else 2
        if run >= m:
            return _fail(d, w, i - run + 1, f"alternating factor of length m({a},{b})={m}")
    return _RIGID


def _fail(d: CoxeterDiagram, w: Word, position: int, reason: str) -> Rigidity:
    if not d.has_letters(w):
        for x in w:
            d.index(x)
    return Rigidity(False, position, reason)


_RIGID = Rigidity(True)


def _leading_alternation(w: Word, other: str) -> int:
    """Length of the longest prefix of ``w`` alternating ``w[0], other, ...``."""
    first = w[0]
    n = 1
    while n < len(w) and w[n] == (other if n % 2 else first):
        n += 1
    return n


def _can_prepend(d: CoxeterDiagram, t: str, w: Word) -> bool:
    # w rigid, so only the new leftmost factor can fail
    m = d.m(t, w[0])
    if m == 2 or m == 1:
        return False
    return 1 + _leading_alternation(w, t) < m


# -- enumeration ------------------------------------------------------------

@dataclass(frozen=True)
class SmallCell:
    """Rigid words found by enumeration, sorted; ``truncated`` when a length
    cap cut off longer rigid words."""
    diagram: CoxeterDiagram
    words: tuple
    truncated: bool = False

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in self._set

    @property
    def _set(self):
        cached = self.__dict__.get("_cached_set")
        if cached is None:
            cached = frozenset(self.words)
            object.__setattr__(self, "_cached_set", cached)
        return cached

    def ending_in(self, s: str) -> list:
        return [w for w in self.words if w[-1] == s]


def _extend(d: CoxeterDiagram, frontier: list) -> list:
    out = []
    for w in frontier:
        for t in d.neighbors(w[0]):
            if _can_prepend(d, t, w):
                out.append((t,) + w)
    return out


def enumerate_small_cell(d: CoxeterDiagram, max_len: Optional[int] = None,
                         workers: Optional[int] = None) -> SmallCell:
    """All rigid words over ``d`` (of length at most ``max_len`` if given).

    Breadth-first by length, extending on the left.  Rigidity is closed under
    taking factors, so every rigid word of length k+1 extends one of length k;
    for a finite cell the search stops at the first empty level.  ``workers``
    splits each level across a thread pool; output order does not depend on it.
    """
    verdict = finiteness_check(d)
    if not verdict.finite and max_len is None:
        raise InfiniteCellError(
            f"small cell is infinite ({verdict.reason.kind}); pass max_len")
    if max_len is not None and max_len < 0:
        raise CoxkitError("max_len must be non-negative")
    level = [(v,) for v in d.vertices]
    found = []
    length = 1
    pool = ThreadPoolExecutor(workers) if workers and workers > 1 else None
    try:
        while level:
            if max_len is not None and length > max_len:
                break
            found.extend(level)
            if pool is not None:
                n = max(1, len(level) // workers)
                chunks = [level[i:i + n] for i in range(0, len(level), n)]
                level = [w for part in pool.map(lambda c: _extend(d, c), chunks) for w in part]
            else:
                level = _extend(d, level)
            length += 1
    finally:
        if pool is not None:
            pool.shutdown()
    return SmallCell(d, tuple(sort_words(d, found)), truncated=bool(level))


# -- left multiplication ----------------------------------------------------

@dataclass(frozen=True)
class Shorter:
    word: Word  # () is the identity


@dataclass(frozen=True)
class Longer:
    word: Word


@dataclass(frozen=True)
class LeavesCell:
    pass


def left_multiply(d: CoxeterDiagram, t: str, w: Word) -> Union[Shorter, Longer, LeavesCell]:
    """Product ``t*w`` for rigid ``w``, classified against the small cell."""
    d.index(t)
    w = tuple(w)
    if not is_rigid(d, w):
        raise CoxkitError(f"{format_word(d, w)} is not rigid")
    if w[0] == t:
        return Shorter(w[1:])
    if _can_prepend(d, t, w):
        return Longer((t,) + w)
    return LeavesCell()


# -- cell tables ------------------------------------------------------------

@dataclass(frozen=True)
class CellTable:
    """Rows are right cells (leftmost letter), columns left cells (rightmost)."""
    diagram: CoxeterDiagram
    cells: dict  # (t, s) -> tuple of words

    @property
    def generators(self):
        return self.diagram.vertices

    def cell(self, t: str, s: str) -> tuple:
        return self.cells[(t, s)]

    def __len__(self):
        return sum(len(v) for v in self.cells.values())

    def to_json(self) -> dict:
        d = self.diagram
        return {"rows": [
            {"t": t, "cells": [[format_word(d, w) for w in self.cells[(t, s)]] for s in d.vertices]}
            for t in d.vertices]}

    def to_text(self) -> str:
        d = self.diagram
        header = [""] + list(d.vertices)
        rows = [header]
        for t in d.vertices:
            rows.append([t] + [",".join(format_word(d, w) for w in self.cells[(t, s)])
                               for s in d.vertices])
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = []
        for k, r in enumerate(rows):
            cells = [r[0].ljust(widths[0])] + [c.ljust(widths[i + 1]) for i, c in enumerate(r[1:])]
            lines.append((cells[0] + " | " + " | ".join(cells[1:])).rstrip())
            if k == 0:
                lines.append("-" * len(lines[0]))
        return "\n".join(lines) + "\n"


def cell_table(d: CoxeterDiagram) -> CellTable:
    cell = enumerate_small_cell(d)
    cells = {(t, s): [] for t in d.vertices for s in d.vertices}
    for w in cell.words:
        cells[(w[0], w[-1])].append(w)
    return CellTable(d, {k: tuple(v) for k, v in cells.items()})


def intersection(d: CoxeterDiagram, s: str, t: str, max_len: Optional[int] = None) -> list:
    """Rigid words in the left cell of ``s`` and right cell of ``t``
    (i.e. of the form ``t...s``), sorted."""
    d.index(s)
    d.index(t)
    cell = enumerate_small_cell(d, max_len)
    return [w for w in cell.words if w[0] == t and w[-1] == s]


# -- braid-move oracle ------------------------------------------------------

def braid_moves(d: CoxeterDiagram, w: Word):
    """Yield every word obtained from ``w`` by one commutation or braid move."""
    n = len(w)
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if a == b:
            continue
        m = d.m(a, b)
        if m == 2:
            yield w[:i] + (b, a) + w[i + 2:]
        elif m != INF and i + m <= n:
            if all(w[i + k] == (a if k % 2 == 0 else b) for k in range(m)):
                swapped = tuple(b if k % 2 == 0 else a for k in range(m))
                yield w[:i] + swapped + w[i + m:]


def braid_orbit(d: CoxeterDiagram, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> set:
    """Closure of ``{w}`` under commutation and braid moves."""
    w = tuple(w)
    for x in w:
        d.index(x)
    seen = {w}
    queue = deque([w])
    while queue:
        for nxt in braid_moves(d, queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise OrbitCapExceeded(f"braid orbit exceeds cap {cap}")
                queue.append(nxt)
    return seen


class OracleStatus(enum.Enum):
    NOT_REDUCED = "NotReduced"
    REDUCED_UNIQUE = "ReducedUnique"
    REDUCED_MULTIPLE = "ReducedMultiple"


@dataclass(frozen=True)
class OracleReport:
    status: OracleStatus
    orbit_size: int

    def to_json(self):
        return {"status": self.status.value, "orbit_size": self.orbit_size}


def _has_square(w: Word) -> bool:
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def oracle_unique_reduced(d: CoxeterDiagram, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> OracleReport:
    """Classify ``w`` by its braid orbit (Tits' solution of the word problem):
    a word is reduced iff no word in its orbit has two equal neighbours."""
    orbit = braid_orbit(d, w, cap)
    if any(_has_square(x) for x in orbit):
        status = OracleStatus.NOT_REDUCED
    elif len(orbit) == 1 and len(w) > 0:
        status = OracleStatus.REDUCED_UNIQUE
    else:
        status = OracleStatus.REDUCED_MULTIPLE
    return OracleReport(status, len(orbit))


# -- one labeled edge: transport to the dihedral core ------------------------

def induced_bijection(d: CoxeterDiagram, p: str, q: str) -> dict:
    """Map ``L_pi(p) & R_pi(q)`` onto ``L_p & R_q``.

    Each word is extended on the left by the path from ``q`` to ``pi(q)`` and
    on the right by the path from ``pi(p)`` to ``p``, the junction letters
    shared.  If ``w`` is a single letter and the extension is not rigid, the
    two paths overlap and the image is the path from ``q`` to ``p``.
    """
    split = split_at_labeled_edge(d)
    d.index(p)
    d.index(q)
    pp, pq = split.pi[p], split.pi[q]
    prefix = tuple(tree_path(d, q, pq)[:-1])
    suffix = tuple(tree_path(d, pp, p)[1:])
    out = {}
    for w in intersection(d, pp, pq):
        image = prefix + w + suffix
        if not is_rigid(d, image):
            if len(w) != 1:
                raise RuntimeError(f"junction failed for {format_word(d, w)}")
            image = tuple(tree_path(d, q, p))
        out[w] = image
    return out


def parabolic_core_check(d: CoxeterDiagram) -> bool:
    """For p, q in the labeled edge {s, t}, compare ``L_p & R_q`` in ``d``
    with the same intersection in the rank-two subsystem on {s, t}."""
    split = split_at_labeled_edge(d)
    core = d.restrict((split.s, split.t))
    full = cell_table(d)
    small = cell_table(core)
    return all(full.cell(q, p) == small.cell(q, p)
               for p in (split.s, split.t) for q in (split.s, split.t))


# -- batch oracle -------------------------------------------------------------

_STATUS_CODES = (OracleStatus.NOT_REDUCED, OracleStatus.REDUCED_UNIQUE, OracleStatus.REDUCED_MULTIPLE)


@dataclass(frozen=True)
class BatchOracle:
    """Oracle verdicts for every word of one length.

    Row ``i`` of ``letters`` is the ``i``-th word in base-``|S|`` order (letters
    as vertex indices).  ``status`` holds indices into ``STATUSES``.
    """
    diagram: CoxeterDiagram
    length: int
    letters: "np.ndarray"
    orbit_id: "np.ndarray"
    orbit_size: "np.ndarray"
    status: "np.ndarray"

    STATUSES = _STATUS_CODES

    def word(self, i: int) -> Word:
        return tuple(self.diagram.vertices[k] for k in self.letters[i])

    def report(self, i: int) -> OracleReport:
        return OracleReport(_STATUS_CODES[self.status[i]], int(self.orbit_size[i]))


@functools.lru_cache(maxsize=32)
def _word_space(n: int, length: int):
    """Diagram-independent arrays for all words of one length over ``n`` letters."""
    import numpy as np

    total = n ** length
    idx = np.arange(total, dtype=np.int64)
    weights = n ** np.arange(length - 1, -1, -1, dtype=np.int64)
    letters = (idx[:, None] // weights[None, :]) % n
    square = np.zeros(total, dtype=bool)
    for i in range(length - 1):
        square |= letters[:, i] == letters[:, i + 1]
    # alternating factors: alt[(i, k)] = (mask, index shift of the swapped word)
    alt = {}
    for i in range(length - 1):
        a, b = letters[:, i], letters[:, i + 1]
        ok = a != b
        shift = (b - a) * weights[i] + (a - b) * weights[i + 1]
        alt[(i, 2)] = (ok.copy(), shift.copy())
        for k in range(2, length - i):
            want, new = (a, b) if k % 2 == 0 else (b, a)
            ok &= letters[:, i + k] == want
            shift = shift + (new - want) * weights[i + k]
            alt[(i, k + 1)] = (ok.copy(), shift.copy())
    return idx, letters, square, alt


def batch_oracle(d: CoxeterDiagram, length: int) -> BatchOracle:
    """Same verdicts as ``oracle_unique_reduced``, for all ``|S|**length``
    words at once: the move graph on words is built with array operations
    and its connected components are the braid orbits."""
    import numpy as np
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    n = len(d.vertices)
    if length < 1:
        raise CoxkitError("length must be positive")
    idx, letters, square, alt = _word_space(n, length)
    total = len(idx)
    mtab = np.zeros((n, n), dtype=np.int64)  # 0 encodes infinity
    for i, a in enumerate(d.vertices):
        for j, b in enumerate(d.vertices):
            m = d.m(a, b)
            mtab[i, j] = 0 if m == INF else m

    src, dst = [], []
    for i in range(length - 1):
        m = mtab[letters[:, i], letters[:, i + 1]]
        for mv in range(2, length - i + 1):
            if not (mtab == mv).any():
                continue
            mask, shift = alt[(i, mv)]
            ok = mask & (m == mv)
            src.append(idx[ok])
            dst.append(idx[ok] + shift[ok])
    src = np.concatenate(src) if src else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(dst) if dst else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(total, total)).tocsr()
    ncomp, labels = connected_components(graph, directed=False)
    sizes = np.bincount(labels, minlength=ncomp)
    comp_square = np.bincount(labels, weights=square, minlength=ncomp) > 0
    status = np.where(comp_square[labels], 0, np.where(sizes[labels] == 1, 1, 2)).astype(np.int8)
    return BatchOracle(d, length, letters, labels, sizes[labels], status)
