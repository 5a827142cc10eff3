"""Laurent polynomials in the grading variable ``v`` and matrices over them.

A grading shift by ``i`` is multiplication by ``v**i``.  A ``LaurentMatrix``
stores one integer matrix per power of ``v``.

>>> p = V + V**-1
>>> str(p * p)
'v^-2 + 2 + v^2'
>>> p(1)
2
"""

from __future__ import annotations

import re
from fractions import Fraction
from dataclasses import dataclass, field

import numpy as np

__all__ = ["LaurentPoly", "LaurentMatrix", "V", "ONE", "ZERO"]


@dataclass(frozen=True)
class LaurentPoly:
    coeffs: tuple = ()  # sorted (exponent, coefficient) pairs, no zero coefficients

    def __post_init__(self):
        raw = self.coeffs.items() if isinstance(self.coeffs, dict) else self.coeffs
        merged: dict[int, int] = {}
        for k, c in raw:
            merged[int(k)] = merged.get(int(k), 0) + int(c)
        object.__setattr__(self, "coeffs", tuple(sorted((k, c) for k, c in merged.items() if c)))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls(((0, c),))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, np.integer)):
            return cls.const(int(other))
        return NotImplemented

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple((k, -c) for k, c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(tuple((a + b, c * e) for a, c in self.coeffs for b, e in other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if len(self.coeffs) == 1:
            (k, c), = self.coeffs
            if n < 0 and abs(c) != 1:
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPoly(((k * n, c ** abs(n) if n >= 0 else c),))
        if n < 0:
            raise ValueError("only monomials are invertible")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, v):
        if isinstance(v, int):
            total = sum(c * (v ** k if k >= 0 else Fraction(1, v ** -k)) for k, c in self.coeffs)
            return int(total) if Fraction(total).denominator == 1 else total
        return sum(c * v ** k for k, c in self.coeffs)

    def shift(self, i: int) -> "LaurentPoly":
        return LaurentPoly(tuple((k + i, c) for k, c in self.coeffs))

    def nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs:
            mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
            if not mono:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{c}{mono}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {str(k): c for k, c in self.coeffs}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls(tuple((int(k), int(c)) for k, c in data.items()))

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: sums of terms like ``2``, ``v``, ``-3v^-2``."""
        text = text.replace(" ", "")
        if text == "0":
            return ZERO
        terms = re.findall(r"[+-]?[^+-]+(?:\^-?\d+)?", text.replace("^-", "^~"))
        out = []
        for term in terms:
            term = term.replace("^~", "^-")
            m = re.fullmatch(r"([+-]?)(\d*)(v(?:\^(-?\d+))?)?", term)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse Laurent term {term!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            k = 0 if not m.group(3) else int(m.group(4) or 1)
            out.append((k, sign * c))
        return cls(tuple(out))


V = LaurentPoly(((1, 1),))
ONE = LaurentPoly(((0, 1),))
ZERO = LaurentPoly(())


@dataclass(frozen=True, eq=False)
class LaurentMatrix:
    """Square or rectangular matrix ``sum_k v**k * parts[k]``."""
    shape: tuple
    parts: dict = field(default_factory=dict)  # exponent -> integer ndarray

    def __post_init__(self):
        clean = {}
        for k, a in self.parts.items():
            a = np.asarray(a, dtype=np.int64)
            if a.shape != tuple(self.shape):
                raise ValueError(f"part of shape {a.shape} in matrix of shape {self.shape}")
            if a.any():
                a.setflags(write=False)
                clean[int(k)] = a
        object.__setattr__(self, "shape", tuple(self.shape))
        object.__setattr__(self, "parts", dict(sorted(clean.items())))

    @classmethod
    def from_int(cls, a) -> "LaurentMatrix":
        a = np.asarray(a, dtype=np.int64)
        return cls(a.shape, {0: a})

    @classmethod
    def from_entries(cls, rows) -> "LaurentMatrix":
        rows = [[LaurentPoly._coerce(x) for x in r] for r in rows]
        shape = (len(rows), len(rows[0]) if rows else 0)
        parts: dict[int, np.ndarray] = {}
        for i, r in enumerate(rows):
            for j, p in enumerate(r):
                for k, c in p.coeffs:
                    parts.setdefault(k, np.zeros(shape, dtype=np.int64))[i, j] += c
        return cls(shape, parts)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls.from_int(np.eye(n, dtype=np.int64))

    def entry(self, i: int, j: int) -> LaurentPoly:
        return LaurentPoly(tuple((k, int(a[i, j])) for k, a in self.parts.items()))

    def entries(self) -> list[list[LaurentPoly]]:
        return [[self.entry(i, j) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def evaluate(self, v: int = 1) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        for k, a in self.parts.items():
            if v == 1:
                out += a
            else:
                out = out + a * (v ** k)
        return out

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        parts = {k: a.copy() for k, a in self.parts.items()}
        for k, a in other.parts.items():
            parts[k] = parts[k] + a if k in parts else a
        return LaurentMatrix(self.shape, parts)

    def __sub__(self, other):
        return self + other * -1

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        shape = (self.shape[0], other.shape[1])
        parts: dict[int, np.ndarray] = {}
        for k, a in self.parts.items():
            for l, b in other.parts.items():
                prod = a @ b
                parts[k + l] = parts[k + l] + prod if k + l in parts else prod
        return LaurentMatrix(shape, parts)

    def __mul__(self, scalar) -> "LaurentMatrix":
        """Scalar multiplication by an integer or a Laurent polynomial."""
        scalar = LaurentPoly._coerce(scalar)
        parts: dict[int, np.ndarray] = {}
        for k, a in self.parts.items():
            for e, c in scalar.coeffs:
                parts[k + e] = parts[k + e] + c * a if k + e in parts else c * a
        return LaurentMatrix(self.shape, parts)

    __rmul__ = __mul__

    @property
    def T(self) -> "LaurentMatrix":
        return LaurentMatrix(self.shape[::-1], {k: a.T for k, a in self.parts.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.parts.keys() == other.parts.keys()
                and all(np.array_equal(a, other.parts[k]) for k, a in self.parts.items()))

    def nonnegative(self) -> bool:
        return all((a >= 0).all() for a in self.parts.values())

    def to_json(self) -> list:
        return [[p.to_json() for p in row] for row in self.entries()]

    def to_text(self, labels=None) -> str:
        cells = [[str(p) for p in row] for row in self.entries()]
        if labels is not None:
            cells = [[""] + list(labels)] + [[lab] + row for lab, row in zip(labels, cells)]
        if not cells:
            return ""
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells) + "\n"

    def __repr__(self):
        return f"LaurentMatrix({self.to_text().strip()!r})"
