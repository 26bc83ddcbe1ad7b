"""Permutations on {0, ..., degree-1} with cycle-notation text support.

Text form uses 1-based points, e.g. "(1 2 3)(4 5)"; the identity is "()".
Internally everything is 0-based image tuples.
"""

from __future__ import annotations

import re
from math import lcm

from .errors import FormatError


class Perm:
    """An immutable permutation given by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Perm":
        """Build from 0-based disjoint cycles, e.g. [(0, 1, 2), (3, 4)]."""
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if not (0 <= point < degree):
                    raise ValueError(f"point {point} out of range for degree {degree}")
                if point in touched:
                    raise ValueError(f"cycles overlap at point {point}")
                touched.add(point)
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (self * other)(x) = self(other(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.images
        s = self.images
        return Perm(s[o[x]] for x in range(len(s)))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm(inv)

    def cycles(self, include_fixed: bool = False):
        """Disjoint cycles as tuples, smallest point first within each."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cur, cycle = start, []
            while not seen[cur]:
                seen[cur] = True
                cycle.append(cur)
                cur = self.images[cur]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({format_cycles(self)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int, line: int | None = None) -> Perm:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)" into a Perm."""
    text = text.strip()
    if not text:
        raise FormatError("empty permutation", line)
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise FormatError(f"stray text outside cycles: {stripped.strip()!r}", line)
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue  # "()" is the identity
        points = []
        for tok in body.replace(",", " ").split():
            try:
                p = int(tok)
            except ValueError:
                raise FormatError(f"bad point {tok!r} in cycle", line) from None
            if not (1 <= p <= degree):
                raise FormatError(f"point {p} outside 1..{degree}", line)
            points.append(p - 1)
        if len(set(points)) != len(points):
            raise FormatError(f"repeated point in cycle ({body})", line)
        cycles.append(tuple(points))
    try:
        return Perm.from_cycles(cycles, degree)
    except ValueError as exc:
        raise FormatError(str(exc), line) from None


def format_cycles(perm: Perm) -> str:
    """1-based cycle notation; identity prints as "()"."""
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)
