"""Partitions, compositions and the node-level constructions used throughout.

A :class:`Partition` is an immutable tuple of positive, weakly decreasing
parts.  Because it subclasses ``tuple`` it compares, hashes and unpacks like
one, so ``Partition((3, 1)) == (3, 1)``.

Row/column slicing follows the Young-diagram convention (English notation,
rows numbered from the top): :func:`slice_nodes` selects the nodes in a band
of rows and columns and re-anchors them at the top-left corner.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence


class Composition(tuple):
    """A finite sequence of nonnegative integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def is_partition(self) -> bool:
        nonzero = [p for p in self if p]
        return list(self[: len(nonzero)]) == nonzero and all(
            a >= b for a, b in zip(nonzero, nonzero[1:])
        )

    def to_partition(self) -> "Partition":
        """The composition as a partition; raises if it is not weakly decreasing."""
        return Partition(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


class Partition(tuple):
    """An integer partition, stored as a tuple of its positive parts.

    Trailing zeros are dropped on construction; anything else that is not
    weakly decreasing and positive raises :class:`ValueError`.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-indexed), or 0 beyond the last part."""
        return self[i] if 0 <= i < len(self) else 0

    def nodes(self) -> Iterator[tuple[int, int]]:
        """Nodes ``(row, col)``, both 0-indexed, row by row."""
        for r, p in enumerate(self):
            for c in range(p):
                yield r, c

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@lru_cache(maxsize=None)
def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: ``p'_j = #{i : p_i >= j}``."""
    p = as_partition(p)
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def prefix_sums(seq: Sequence[int], length: int) -> list[int]:
    out, s = [], 0
    for k in range(length):
        s += seq[k] if k < len(seq) else 0
        out.append(s)
    return out


def dominates(p: Sequence[int], q: Sequence[int]) -> bool:
    """``p ⊵ q`` in the dominance order.

    Works for compositions too (the prefix-sum comparison is the same), which
    is needed when comparing against ``dbl`` of a non-strict partition.
    """
    if sum(p) != sum(q):
        raise ValueError(f"dominance needs equal sizes: |{tuple(p)}| != |{tuple(q)}|")
    k = max(len(p), len(q))
    return all(a >= b for a, b in zip(prefix_sums(p, k), prefix_sums(q, k)))


def is_strict(p: Sequence[int]) -> bool:
    """True iff all parts are distinct (2-regular)."""
    return len(set(p)) == len(p)


def h2(p: Sequence[int]) -> int:
    """Number of even parts."""
    return sum(1 for x in p if x % 2 == 0)


def parity_a(p: Sequence[int]) -> int:
    """0 if ``p`` has an even number of even parts, else 1."""
    return h2(p) % 2


def dbl(p: Sequence[int]) -> Composition:
    """Split each part ``x`` into ``(ceil((x+1)/2), floor((x-1)/2))``.

    Trailing zeros are dropped; the result is in general only a composition,
    e.g. ``dbl((4, 2)) == (3, 1, 2)``.
    """
    out: list[int] = []
    for x in p:
        out += [(x + 2) // 2, (x - 1) // 2]
    while out and out[-1] == 0:
        out.pop()
    return Composition(out)


def dblbar_composition(p: Sequence[int]) -> Composition:
    """Split each part ``x`` into ``(ceil(x/2), floor(x/2))``, zeros dropped."""
    out: list[int] = []
    for x in p:
        out += [(x + 1) // 2, x // 2]
    return Composition(v for v in out if v)


def dblbar(p: Sequence[int]) -> Partition:
    """The balanced double of ``p`` as a partition.

    Raises :class:`ValueError` when the halves are not weakly decreasing,
    which happens exactly when an odd part of ``p`` is repeated.
    """
    return Partition(dblbar_composition(p))


def slice_nodes(
    p: Sequence[int],
    *,
    r_gt: int = 0,
    r_le: int | None = None,
    c_gt: int = 0,
    c_le: int | None = None,
) -> Partition:
    """Nodes in rows ``r_gt < r <= r_le`` and columns ``c_gt < c <= c_le``.

    Rows and columns are 1-indexed as in the usual ``λ^{r>m,c≤l}`` notation.
    The selected nodes are shifted up by ``r_gt`` rows and left by ``c_gt``
    columns so that they form a Young diagram again.

    >>> slice_nodes((4, 3, 1), r_gt=1, c_le=2)
    Partition((2, 1))
    """
    rows = list(p)[r_gt : (len(p) if r_le is None else max(r_le, r_gt))]
    out = []
    for x in rows:
        right = x if c_le is None else min(x, c_le)
        out.append(max(0, right - c_gt))
    return Partition(out)


def rows_le(p, m: int) -> Partition:
    return slice_nodes(p, r_le=m)


def rows_gt(p, m: int) -> Partition:
    return slice_nodes(p, r_gt=m)


def cols_le(p, m: int) -> Partition:
    return slice_nodes(p, c_le=m)


def cols_gt(p, m: int) -> Partition:
    return slice_nodes(p, c_gt=m)


def union_sorted(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Multiset union of parts, sorted decreasingly."""
    return Partition(sorted(list(p) + list(q), reverse=True))


def add(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Componentwise sum ``(p_1+q_1, p_2+q_2, ...)``."""
    k = max(len(p), len(q))
    return Partition(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(k)
    )


def rectangle(width: int, height: int) -> Partition:
    """``(width^height)``; ``rectangle(1, l)`` is ``(1^l)``."""
    return Partition([width] * height) if width > 0 else EMPTY


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """``inner ⊆ outer`` as Young diagrams."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def _partitions_desc(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


def _strict_desc(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _strict_desc(n - first, first - 1):
            yield (first,) + rest


def enumerate_partitions(n: int, strict: bool = False) -> Iterator[Partition]:
    """All (strict) partitions of ``n`` in descending lexicographic order.

    Descending lex order refines dominance: if ``p ⊳ q`` then ``p`` comes first.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    gen = _strict_desc(n, n) if strict else _partitions_desc(n, n)
    for parts in gen:
        yield Partition(parts)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n))


@lru_cache(maxsize=None)
def strict_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n, strict=True))


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for x in parts:
        out //= factorial(x)
    return out


def hook_dimension(p: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``p`` (hook length formula)."""
    p = as_partition(p)
    pc = conjugate(p)
    hooks = 1
    for r, c in p.nodes():
        hooks *= (p[r] - c - 1) + (pc[c] - r - 1) + 1
    return factorial(p.size) // hooks


# -- canonical text / JSON forms -------------------------------------------


def format_partition(p: Sequence[int]) -> str:
    """Canonical text form ``"4,3,1"``; the empty partition is ``"-"``."""
    return ",".join(str(x) for x in p) if len(p) else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", "", "()", "[]"):
        return EMPTY
    if text.startswith("["):
        return Partition(json.loads(text))
    return Partition(int(x) for x in text.strip("()").split(",") if x.strip())


def partition_json(p: Sequence[int]) -> str:
    return json.dumps(list(p))
