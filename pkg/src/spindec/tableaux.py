"""Brute-force tableau counts: Littlewood-Richardson and marked (shifted) coefficients.

Both counts are computed by depth-first search over the cells of the shape,
visited top row first and right to left within a row.  That is the reading
order of the ordinary lattice word, so the ordinary lattice condition can be
pruned on every prefix.  For marked tableaux the same order is the word read
backwards, which is the order of the first half of the marked lattice
condition; the second half is checked on complete fillings.

Marked letters are encoded as integers so that the alphabet order
``1' < 1 < 2' < 2 < ...`` is plain integer order: ``i'`` is ``2i - 1`` and
``i`` is ``2i``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from .partitions import EMPTY, Partition, as_partition, contains

CACHE_SIZE = 1 << 18


def marked(i: int) -> int:
    """Code of the marked letter ``i'``."""
    return 2 * i - 1


def unmarked(i: int) -> int:
    """Code of the unmarked letter ``i``."""
    return 2 * i


def letter_value(code: int) -> int:
    """``|x|``: the underlying integer of a letter code."""
    return (code + 1) // 2


def is_marked(code: int) -> bool:
    return code % 2 == 1


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"1 1 2' 2"`` into letter codes."""
    out = []
    for tok in text.split():
        out.append(marked(int(tok[:-1])) if tok.endswith("'") else unmarked(int(tok)))
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return " ".join(
        f"{letter_value(x)}'" if is_marked(x) else str(letter_value(x)) for x in word
    )


# -- lattice conditions ------------------------------------------------------


def lattice_check(word: Sequence[int], shifted: bool = False) -> bool:
    """Lattice condition on a word.

    Ordinary words hold positive integers and must satisfy
    ``m_i(j) >= m_{i+1}(j)`` on every prefix.  Shifted words hold letter codes
    (see :func:`marked`) and are the bottom-to-top, left-to-right reading of a
    marked tableau; both halves of the marked condition are checked.
    """
    if not shifted:
        counts: Counter[int] = Counter()
        for x in word:
            counts[x] += 1
            if x >= 2 and counts[x] > counts[x - 1]:
                return False
        return True

    ell = len(word)
    top = max((letter_value(x) for x in word), default=0) + 2
    m = [0] * (top + 1)
    # first half: j = 0..ell-1, next letter is word[ell - j - 1]
    for j in range(ell):
        x = word[ell - j - 1]
        i = letter_value(x)
        if i >= 2 and m[i] == m[i - 1]:
            return False
        if not is_marked(x):
            m[i] += 1
    # second half: j = ell..2ell-1, next letter is word[j - ell]
    for k in range(ell):
        x = word[k]
        i = letter_value(x)
        if is_marked(x):
            if i >= 2 and m[i] == m[i - 1]:
                return False
            m[i] += 1
        elif m[i + 1] == m[i]:
            return False
    return True


# -- Littlewood-Richardson ---------------------------------------------------


def _skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    cells = []
    for r in range(len(outer)):
        for c in range(outer[r] - 1, inner.part(r) - 1, -1):
            cells.append((r, c))
    return cells


@lru_cache(maxsize=CACHE_SIZE)
def _lr_skew(inner: Partition, outer: Partition) -> tuple[tuple[Partition, int], ...]:
    cells = _skew_cells(outer, inner)
    ncells = len(cells)
    maxval = len(outer)
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (maxval + 2)
    tally: Counter[Partition] = Counter()

    # per cell: position of the filled right neighbour / cell above, if any
    right = []
    above = []
    for r, c in cells:
        right.append((r, c + 1) if c + 1 < outer[r] else None)
        above.append((r - 1, c) if r > 0 and c >= inner.part(r - 1) else None)

    def dfs(k: int) -> None:
        if k == ncells:
            tally[Partition(counts[1:])] += 1
            return
        cell = cells[k]
        hi = grid[right[k]] if right[k] is not None else maxval
        lo = grid[above[k]] + 1 if above[k] is not None else 1
        for x in range(lo, hi + 1):
            if x >= 2 and counts[x] >= counts[x - 1]:
                continue
            counts[x] += 1
            grid[cell] = x
            dfs(k + 1)
            counts[x] -= 1
        grid.pop(cell, None)

    dfs(0)
    return tuple(sorted(tally.items(), reverse=True))


def lr_skew_expansion(inner, outer) -> dict[Partition, int]:
    """``{β: c^{outer}_{inner,β}}`` over all β with a nonzero coefficient."""
    inner, outer = as_partition(inner), as_partition(outer)
    if not contains(outer, inner):
        return {}
    return dict(_lr_skew(inner, outer))


def lr_coefficient(alpha, beta, gamma) -> int:
    """``c^γ_{α,β}``: LR tableaux of shape ``γ∖α`` and content ``β``.

    Zero when ``α ⊄ γ`` or the sizes do not add up.
    """
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    if alpha.size + beta.size != gamma.size or not contains(gamma, alpha):
        return 0
    return dict(_lr_skew(alpha, gamma)).get(beta, 0)


# -- marked tableaux ---------------------------------------------------------


@lru_cache(maxsize=CACHE_SIZE)
def _shifted(alpha: Partition, content: tuple[int, ...]) -> int:
    cells = [(r, c) for r in range(len(alpha)) for c in range(alpha[r] - 1, -1, -1)]
    ncells = len(cells)
    k = len(content)
    cap = (0,) + content
    grid: dict[tuple[int, int], int] = {}
    cnt = [0] * (k + 2)
    um = [0] * (k + 3)
    seq: list[int] = []
    right = [(r, c + 1) if c + 1 < alpha[r] else None for r, c in cells]
    above = [(r - 1, c) if r > 0 else None for r, c in cells]
    total = 0

    def second_half() -> bool:
        m = um[:]
        for x in reversed(seq):
            i = (x + 1) // 2
            if x & 1:
                if i >= 2 and m[i] == m[i - 1]:
                    return False
                m[i] += 1
            elif m[i + 1] == m[i]:
                return False
        return True

    def dfs(idx: int) -> None:
        nonlocal total
        if idx == ncells:
            if second_half():
                total += 1
            return
        cell = cells[idx]
        rn = grid[right[idx]] if right[idx] is not None else 2 * k
        up = grid[above[idx]] if above[idx] is not None else 1
        for x in range(max(up, 1), rn + 1):
            i = (x + 1) // 2
            mk = x & 1
            if cnt[i] >= cap[i]:
                continue
            if mk and x == rn and right[idx] is not None:
                continue  # i' twice in a row
            if not mk and x == up and above[idx] is not None:
                continue  # i twice in a column
            if i >= 2 and um[i] == um[i - 1]:
                continue
            if mk and cnt[i] + 1 == cap[i]:
                continue  # last placed = left-most in the reading word
            cnt[i] += 1
            if not mk:
                um[i] += 1
            grid[cell] = x
            seq.append(x)
            dfs(idx + 1)
            seq.pop()
            cnt[i] -= 1
            if not mk:
                um[i] -= 1
        grid.pop(cell, None)

    dfs(0)
    return total


def shifted_coefficient(alpha, beta) -> int:
    """``c̄_{α,β}``: marked tableaux of (ordinary) shape ``α`` and content ``β``.

    A filling uses the alphabet ``1' < 1 < 2' < 2 < ...``; content counts
    ``i`` and ``i'`` together.  It must weakly increase along rows and
    columns, never repeat ``i'`` in a row or ``i`` in a column, have the
    left-most ``i``/``i'`` of the bottom-up reading word unmarked, and satisfy
    the marked lattice condition (:func:`lattice_check` with ``shifted=True``).
    """
    alpha = as_partition(alpha)
    content = tuple(int(x) for x in beta)
    while content and content[-1] == 0:
        content = content[:-1]
    if alpha.size != sum(content):
        return 0
    if alpha == EMPTY:
        return 1
    return _shifted(alpha, content)


def diagonal_filling(lam) -> dict[tuple[int, int], int]:
    """The filling ``t(i, j) = i`` (unmarked), as letter codes."""
    lam = as_partition(lam)
    return {(r, c): unmarked(r + 1) for r, c in lam.nodes()}


def reading_word_bottom_up(filling: dict[tuple[int, int], int]) -> tuple[int, ...]:
    """Rows from the bottom, left to right within a row."""
    return tuple(filling[cell] for cell in sorted(filling, key=lambda rc: (-rc[0], rc[1])))


def reading_word_top_down(filling: dict[tuple[int, int], int]) -> tuple[int, ...]:
    """Rows from the top, right to left within a row."""
    return tuple(filling[cell] for cell in sorted(filling, key=lambda rc: (rc[0], -rc[1])))


def cache_clear() -> None:
    _lr_skew.cache_clear()
    _shifted.cache_clear()
