"""Slow, independent reference implementations used only by the tests.

Nothing here shares code with the package beyond the Partition type; each
oracle follows its definition as directly as possible.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import factorial

import numpy as np

from spindec.partitions import Partition, as_partition


# -- tableaux ----------------------------------------------------------------


def skew_cells(gamma, alpha):
    gamma, alpha = as_partition(gamma), as_partition(alpha)
    return [(r, c) for r in range(len(gamma)) for c in range(alpha.part(r), gamma[r])]


def lr_brute(alpha, beta, gamma) -> int:
    alpha, beta, gamma = map(as_partition, (alpha, beta, gamma))
    if alpha.size + beta.size != gamma.size:
        return 0
    if any(alpha.part(r) > gamma.part(r) for r in range(len(alpha))):
        return 0
    cells = skew_cells(gamma, alpha)
    target = Counter({i + 1: b for i, b in enumerate(beta)})
    count = 0
    for values in itertools.product(range(1, len(beta) + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if Counter(values) != target:
            continue
        ok = all(t[(r, c)] <= t[(r, c + 1)] for (r, c) in cells if (r, c + 1) in t)
        ok = ok and all(t[(r, c)] < t[(r + 1, c)] for (r, c) in cells if (r + 1, c) in t)
        if not ok:
            continue
        word = [t[cell] for cell in sorted(cells, key=lambda rc: (rc[0], -rc[1]))]
        seen = Counter()
        good = True
        for x in word:
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                good = False
                break
        count += good
    return count


def shifted_brute(alpha, beta) -> int:
    """Count marked fillings straight from the definition.

    Letters are pairs (value, marked) with order 1' < 1 < 2' < 2 < ...
    """
    alpha, beta = as_partition(alpha), as_partition(beta)
    if alpha.size != beta.size:
        return 0
    cells = [(r, c) for r in range(len(alpha)) for c in range(alpha[r])]
    letters = [(v, mk) for v in range(1, len(beta) + 1) for mk in (True, False)]
    key = lambda x: 2 * x[0] - (1 if x[1] else 0)
    count = 0
    for values in itertools.product(letters, repeat=len(cells)):
        t = dict(zip(cells, values))
        if Counter(v for v, _ in values) != Counter({i + 1: b for i, b in enumerate(beta)}):
            continue
        bad = False
        for (r, c) in cells:
            if (r, c + 1) in t:
                a, b = t[(r, c)], t[(r, c + 1)]
                if key(a) > key(b) or (a == b and a[1]):
                    bad = True
            if (r + 1, c) in t:
                a, b = t[(r, c)], t[(r + 1, c)]
                if key(a) > key(b) or (a == b and not a[1]):
                    bad = True
        if bad:
            continue
        w = [t[cell] for cell in sorted(cells, key=lambda rc: (-rc[0], rc[1]))]
        first = {}
        for v, mk in w:
            first.setdefault(v, mk)
        if any(first.values()):
            continue
        count += marked_lattice(w)
    return count


def marked_lattice(w) -> bool:
    ell = len(w)
    top = max((v for v, _ in w), default=0) + 1

    def m(i, j):
        if j <= ell:
            return sum(1 for v, mk in w[ell - j:] if v == i and not mk)
        return m(i, ell) + sum(1 for v, mk in w[: j - ell] if v == i and mk)

    for i in range(2, top + 1):
        for j in range(0, ell):
            if m(i, j) == m(i - 1, j) and w[ell - j - 1] in ((i, False), (i, True)):
                return False
        for j in range(ell, 2 * ell):
            if m(i, j) == m(i - 1, j) and w[j - ell] in ((i - 1, False), (i, True)):
                return False
    return True


def kostka(lam, mu) -> int:
    """Semistandard tableaux of shape λ and content μ, built one horizontal strip per letter."""
    lam, mu = tuple(as_partition(lam)), tuple(as_partition(mu))
    if sum(lam) != sum(mu):
        return 0

    def strips(shape, k):
        # all shapes obtained by adding a horizontal strip of k boxes to shape
        rows = list(shape) + [0]
        def go(i, left, acc):
            if i == len(rows):
                if left == 0:
                    yield tuple(x for x in acc if x)
                return
            # a horizontal strip never pushes a row past the old row above it
            cap = left if i == 0 else shape[i - 1] - rows[i]
            for add in range(min(left, cap) + 1):
                yield from go(i + 1, left - add, acc + [rows[i] + add])
        yield from go(0, k, [])

    def count(shape, idx):
        if idx == len(mu):
            return 1 if shape == lam else 0
        total = 0
        for nxt in strips(shape, mu[idx]):
            if all(i < len(lam) and nxt[i] <= lam[i] for i in range(len(nxt))):
                total += count(nxt, idx + 1)
        return total

    return count((), 0)


# -- characters ------------------------------------------------------------------


def permutation_of_type(rho) -> list[int]:
    perm, start = [], 0
    for k in rho:
        perm += [start + (i + 1) % k for i in range(k)]
        start += k
    return perm


def perm_character_brute(nu, rho) -> int:
    """Fixed ordered set partitions with block sizes ν under a permutation of type ρ."""
    n = sum(nu)
    g = permutation_of_type(rho)
    count = 0
    for labels in set(itertools.permutations([b for b, k in enumerate(nu) for _ in range(k)])):
        if all(labels[g[x]] == labels[x] for x in range(n)):
            count += 1
    return count


def specht_character_jt(lam, rho) -> int:
    """Jacobi-Trudi: χ^λ = det(h_{λ_i - i + j}) with h's as permutation characters."""
    lam = as_partition(lam)
    k = len(lam)
    total = 0
    for sigma in itertools.permutations(range(k)):
        comp = [lam[i] - i + sigma[i] for i in range(k)]
        if any(c < 0 for c in comp):
            continue
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if sigma[a] > sigma[b])
        total += (-1) ** inv * perm_character_brute(comp, rho)
    return total


def basic_spin_closed_form(n: int, rho) -> int:
    """χ_{S((n))} at the odd-order lift of an odd class: Jacobi-symbol sign times 2-power."""
    rho = as_partition(rho)
    sign = (-1) ** (sum((x * x - 1) // 8 for x in rho) % 2)
    a = 1 if n % 2 == 0 else 0
    return sign * 2**a * 2 ** ((len(rho) - 1) // 2)


def shifted_standard_count_brute(lam) -> int:
    """Standard fillings of the shifted diagram, by removing corners recursively."""
    lam = tuple(as_partition(lam))
    if sum(lam) == 0:
        return 1
    total = 0
    for i, x in enumerate(lam):
        smaller = list(lam)
        smaller[i] -= 1
        rest = [y for y in smaller if y]
        if all(a > b for a, b in zip(rest, rest[1:])):
            total += shifted_standard_count_brute(tuple(rest))
    return total


# -- GF(2) ---------------------------------------------------------------------------


def rank_mod2(a: np.ndarray) -> int:
    m = (np.array(a, dtype=np.uint8) % 2).copy()
    r = 0
    rows, cols = m.shape
    for c in range(cols):
        hit = [i for i in range(r, rows) if m[i, c]]
        if not hit:
            continue
        m[[r, hit[0]]] = m[[hit[0], r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
        if r == rows:
            break
    return r


def matmul_mod2(a, b) -> np.ndarray:
    return (np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)) % 2


def hook_dimension_brute(lam) -> int:
    lam = tuple(as_partition(lam))
    if sum(lam) == 0:
        return 1
    total = 0
    for i in range(len(lam)):
        if lam[i] > (lam[i + 1] if i + 1 < len(lam) else 0):
            smaller = list(lam)
            smaller[i] -= 1
            total += hook_dimension_brute(tuple(x for x in smaller if x))
    return total
