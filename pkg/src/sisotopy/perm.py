"""Permutations of ``{0, ..., n-1}`` acting on the right.

``x * p`` is written ``p[x]`` and products read left to right: ``(a * b)[x] ==
b[a[x]]``, i.e. apply ``a`` first.  This matches the ``xU``, ``xαβ`` notation used
throughout loop theory, so formulas transcribe without reordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import TableError


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        n = len(images)
        if n == 0:
            raise TableError("permutation must have positive degree")
        seen = [False] * n
        for i, p in enumerate(images):
            if not 0 <= p < n:
                raise TableError(f"image {p} out of range 0..{n - 1}", col=i)
            if seen[p]:
                raise TableError(f"image {p} repeated; not a bijection", col=i)
            seen[p] = True
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> Perm:
        """Parse a one-line image list such as ``"1 2 3 4 0"``."""
        tokens = text.split()
        images = []
        for i, tok in enumerate(tokens):
            try:
                images.append(int(tok))
            except ValueError:
                raise TableError(f"non-integer token {tok!r} in permutation", col=i) from None
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __mul__(self, other: Perm) -> Perm:
        if not isinstance(other, Perm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        img = other.images
        return Perm(tuple(img[p] for p in self.images))

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, p in enumerate(self.images):
            inv[p] = i
        return Perm(tuple(inv))

    def conjugate_by(self, psi: Perm) -> Perm:
        """``psi^-1 * self * psi``."""
        return psi.inverse() * self * psi

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def image_of(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[x] for x in subset)

    def preserves(self, subset: Iterable[int]) -> bool:
        subset = frozenset(subset)
        return self.image_of(subset) == subset

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def format(self) -> str:
        return " ".join(map(str, self.images))

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Perm({self.format()!r})"


def all_perms(n: int) -> Iterator[Perm]:
    """Every permutation of degree ``n`` in lexicographic image order."""
    for images in itertools.permutations(range(n)):
        yield Perm(images)


def setwise_stabilizer(n: int, subset: Sequence[int]) -> list[Perm]:
    """All permutations mapping ``subset`` onto itself, sorted."""
    inside = sorted(set(subset))
    outside = [x for x in range(n) if x not in set(inside)]
    out = []
    for a in itertools.permutations(inside):
        for b in itertools.permutations(outside):
            images = [0] * n
            for src, dst in zip(inside, a):
                images[src] = dst
            for src, dst in zip(outside, b):
                images[src] = dst
            out.append(Perm(tuple(images)))
    out.sort()
    return out
