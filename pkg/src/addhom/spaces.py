"""Coordinate spaces F^d: arithmetic, enumeration, and scalar orbits.

Vectors are plain tuples of field elements.  Finite spaces enumerate in
lexicographic coordinate-rank order with coordinate 0 slowest.  Nonzero
vectors fall into scalar orbits {lam * v : lam != 0}; each orbit has a
unique canonical representative whose first nonzero coordinate is 1, which
is what makes orbit-table maps well-defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InfiniteFieldError,
    SpecFormatError,
    ZeroVector,
)
from .fields import Field


@dataclass(frozen=True)
class Orbit:
    representative: tuple
    size: int
    index: int


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on sep outside [...] groups (extension elements contain commas)."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


class VectorSpace:
    """F^dim over a supported field."""

    def __init__(self, field: Field, dim: int):
        if dim < 1:
            raise DimensionMismatch("dimension must be >= 1")
        self.field = field
        self.dim = dim
        self.zero = (field.zero,) * dim

    @property
    def is_finite(self) -> bool:
        return self.field.is_finite

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise InfiniteFieldError(f"{self} is infinite")
        return self.field.order ** self.dim

    def _check(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected dimension {self.dim}, got {len(v)}")
        if not all(self.field.contains(c) for c in v):
            raise FieldMismatch(f"vector {v!r} not over {self.field}")

    def contains(self, v) -> bool:
        return (
            isinstance(v, tuple)
            and len(v) == self.dim
            and all(self.field.contains(c) for c in v)
        )

    # arithmetic -------------------------------------------------------

    def add(self, u, v):
        self._check(u)
        self._check(v)
        return tuple(self.field.add(a, b) for a, b in zip(u, v))

    def sub(self, u, v):
        self._check(u)
        self._check(v)
        return tuple(self.field.sub(a, b) for a, b in zip(u, v))

    def neg(self, v):
        self._check(v)
        return tuple(self.field.neg(a) for a in v)

    def scalar_mul(self, lam, v):
        if not self.field.contains(lam):
            raise FieldMismatch(f"scalar {lam!r} not in {self.field}")
        self._check(v)
        return tuple(self.field.mul(lam, a) for a in v)

    # enumeration ------------------------------------------------------

    def vectors(self):
        """All q^dim vectors, coordinate 0 slowest."""
        elems = list(self.field.elements())
        for coords in itertools.product(elems, repeat=self.dim):
            yield coords

    def rank(self, v) -> int:
        q = self.field.order
        r = 0
        for c in v:
            r = r * q + self.field.rank(c)
        return r

    def vector_from_rank(self, r: int):
        q = self.field.order
        coords = []
        for _ in range(self.dim):
            coords.append(self.field.element_from_rank(r % q))
            r //= q
        return tuple(reversed(coords))

    # orbits -----------------------------------------------------------

    def canonical_rep(self, v):
        """(rep, scale) with rep's first nonzero coordinate 1 and v = scale*rep."""
        self._check(v)
        for c in v:
            if c != self.field.zero:
                scale = c
                rep = tuple(self.field.div(a, scale) for a in v)
                return rep, scale
        raise ZeroVector("the zero vector has no orbit representative")

    def orbits(self) -> list[Orbit]:
        """One orbit per canonical representative, in vector-enumeration order."""
        if not self.is_finite:
            raise InfiniteFieldError(f"{self} has infinitely many orbits")
        size = self.field.order - 1
        out = []
        for v in self.vectors():
            first_nonzero = next(
                (c for c in v if c != self.field.zero), None
            )
            if first_nonzero == self.field.one:
                out.append(Orbit(v, size, len(out)))
        return out

    # text encoding: "(e0,e1,...)" ---------------------------------------

    def encode(self, v) -> str:
        return "(" + ",".join(self.field.encode(c) for c in v) + ")"

    def decode(self, text: str):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise SpecFormatError(f"bad vector {text!r}")
        parts = split_top_level(text[1:-1])
        if len(parts) != self.dim:
            raise SpecFormatError(
                f"expected {self.dim} coordinates in {text!r}"
            )
        return tuple(self.field.decode(p) for p in parts)

    def random_vector(self, rng):
        return tuple(self.field.random_element(rng) for _ in range(self.dim))

    def __repr__(self):
        return f"{self.field.descriptor()}^{self.dim}"
