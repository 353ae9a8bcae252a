"""Permutations of a fixed domain {0, ..., n-1} stored as image tables.

Composition convention, used everywhere in this package: the LEFT factor
acts first, so (a * b).apply(x) == b.apply(a.apply(x)).  Written in exponent
notation this is x^(ab) = (x^a)^b, which keeps conjugation a^g = g^-1 * a * g
and all coset-graph products readable left to right.
"""

from __future__ import annotations

import re

import numpy as np

DTYPE = np.int32


def _as_image_array(images) -> np.ndarray:
    arr = np.asarray(images, dtype=DTYPE)
    if arr.ndim != 1:
        raise ValueError("images must be a one-dimensional sequence")
    n = arr.shape[0]
    if n == 0:
        raise ValueError("degree must be positive")
    seen = np.zeros(n, dtype=bool)
    if arr.min(initial=0) < 0 or arr.max(initial=-1) >= n:
        raise ValueError("images contain values outside the domain")
    seen[arr] = True
    if not seen.all():
        raise ValueError("images is not a bijection")
    return arr


class Permutation:
    """An immutable bijection of {0, ..., degree-1}."""

    __slots__ = ("_img",)

    def __init__(self, images):
        arr = _as_image_array(images)
        arr.flags.writeable = False
        object.__setattr__(self, "_img", arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Permutation":
        # internal: arr must already be a valid image table
        p = object.__new__(cls)
        arr.flags.writeable = False
        object.__setattr__(p, "_img", arr)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._wrap(np.arange(degree, dtype=DTYPE))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build a permutation from disjoint cycles, e.g. [(0, 1), (2, 3, 4)]."""
        arr = np.arange(degree, dtype=DTYPE)
        seen = set()
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            for c in cycle:
                if c < 0 or c >= degree:
                    raise ValueError(f"cycle point {c} outside domain of degree {degree}")
                if c in seen:
                    raise ValueError(f"point {c} appears in more than one cycle")
                seen.add(c)
            for a, b in zip(cycle, cycle[1:]):
                arr[a] = b
            if cycle:
                arr[cycle[-1]] = cycle[0]
        return cls._wrap(arr)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation "(0 1)(2 3 4)" or an image list "[1,0,2]".

        For cycle notation a degree must be supplied or is inferred from the
        largest point mentioned.
        """
        s = text.strip()
        if s.startswith("["):
            images = [int(t) for t in re.findall(r"-?\d+", s)]
            if degree is not None and len(images) != degree:
                raise ValueError(f"image list has length {len(images)}, expected {degree}")
            return cls(images)
        if s in ("()", ""):
            if degree is None:
                raise ValueError("degree required to parse the identity")
            return cls.identity(degree)
        cycles = []
        rest = s
        while rest:
            m = re.match(r"\s*\(([^()]*)\)\s*", rest)
            if m is None:
                raise ValueError(f"could not parse permutation {text!r}")
            body = m.group(1).replace(",", " ").split()
            cycles.append([int(t) for t in body])
            rest = rest[m.end():]
        top = max((max(c) for c in cycles if c), default=-1)
        if degree is None:
            degree = top + 1
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self) -> int:
        return self._img.shape[0]

    @property
    def images(self) -> tuple:
        return tuple(int(v) for v in self._img)

    def apply(self, point: int) -> int:
        """Image of a point: x^a."""
        return int(self._img[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self._img.shape[0] != other._img.shape[0]:
            raise ValueError(
                f"degree mismatch: {self._img.shape[0]} vs {other._img.shape[0]}"
            )
        return Permutation._wrap(other._img[self._img])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._img)
        inv[self._img] = np.arange(self._img.shape[0], dtype=DTYPE)
        return Permutation._wrap(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return bool((self._img == np.arange(self._img.shape[0], dtype=DTYPE)).all())

    def cycles(self) -> tuple:
        """Nontrivial cycles, each rotated to start at its minimum, sorted."""
        img = self._img
        n = img.shape[0]
        seen = bytearray(n)
        out = []
        for i in range(n):
            if seen[i] or img[i] == i:
                continue
            cyc = [i]
            seen[i] = 1
            j = int(img[i])
            while j != i:
                seen[j] = 1
                cyc.append(j)
                j = int(img[j])
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple:
        """Multiset of cycle lengths including fixed points, as a sorted tuple."""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed))

    def num_cycles(self) -> int:
        return len(self.cycle_type())

    def is_even(self) -> bool:
        return (self.degree - self.num_cycles()) % 2 == 0

    def parity(self) -> str:
        return "even" if self.is_even() else "odd"

    def order(self) -> int:
        import math

        result = 1
        for c in self.cycles():
            result = math.lcm(result, len(c))
        return result

    def fixed_points(self) -> tuple:
        img = self._img
        return tuple(int(i) for i in np.flatnonzero(img == np.arange(img.shape[0], dtype=DTYPE)))

    def min_moved(self) -> int | None:
        img = self._img
        moved = np.flatnonzero(img != np.arange(img.shape[0], dtype=DTYPE))
        return int(moved[0]) if moved.size else None

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img.shape == other._img.shape and bool((self._img == other._img).all())

    def __hash__(self) -> int:
        return hash(self._img.tobytes())

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!s}, degree={self.degree})"
