"""Exact ordinary characters of S_n.

Class functions are dictionaries keyed by cycle type; all values are Python
integers or :class:`fractions.Fraction`, never floats.  Cycle types are
ordered descending-lexicographically wherever an order is needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import sympy

from .partitions import (
    Partition,
    as_partition,
    contains,
    format_partition,
    parse_partition,
    partitions,
    strict_partitions,
    union_sorted,
)
from .tableaux import lr_skew_expansion

Number = int | Fraction


def z_cycle(rho: Sequence[int]) -> int:
    """Centraliser order ``prod i^{m_i} m_i!`` of a permutation of cycle type rho."""
    out = 1
    for part in set(rho):
        m = list(rho).count(part)
        out *= part**m * factorial(m)
    return out


def class_size(rho: Sequence[int]) -> int:
    return factorial(sum(rho)) // z_cycle(rho)


def is_odd_class(rho: Sequence[int]) -> bool:
    """All cycle lengths odd, i.e. the class consists of elements of odd order."""
    return all(x % 2 for x in rho)


@lru_cache(maxsize=None)
def odd_classes(n: int) -> tuple[Partition, ...]:
    return tuple(rho for rho in partitions(n) if is_odd_class(rho))


def _normalise(v: Number) -> Number:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


@dataclass
class ClassFunction:
    """A function on the conjugacy classes of S_n."""

    n: int
    values: dict[Partition, Number] = field(default_factory=dict)

    @property
    def classes(self) -> tuple[Partition, ...]:
        return partitions(self.n)

    def __post_init__(self) -> None:
        missing = [rho for rho in self.classes if rho not in self.values]
        if missing:
            raise ValueError(f"class function on S_{self.n} undefined at {missing}")

    def __call__(self, rho) -> Number:
        return self.values[as_partition(rho)]

    @property
    def degree(self) -> Number:
        return self.values[Partition([1] * self.n)]

    def _check(self, other: "ClassFunction") -> None:
        if type(other) is not type(self) or other.n != self.n:
            raise ValueError("class functions live on different groups")

    def _new(self, values):
        return type(self)(self.n, {k: _normalise(v) for k, v in values.items()})

    def __add__(self, other):
        self._check(other)
        return self._new({k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other):
        self._check(other)
        return self._new({k: v - other.values[k] for k, v in self.values.items()})

    def __neg__(self):
        return self._new({k: -v for k, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return self._new({k: v * other.values[k] for k, v in self.values.items()})
        return self._new({k: v * other for k, v in self.values.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self._new({k: Fraction(v) / scalar for k, v in self.values.items()})

    def vector(self) -> tuple[Number, ...]:
        return tuple(self.values[rho] for rho in self.classes)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())


class OddClassFunction(ClassFunction):
    """A class function known only on classes of odd cycle type.

    This is where 2-modular Brauer characters live.
    """

    @property
    def classes(self) -> tuple[Partition, ...]:
        return odd_classes(self.n)

    @property
    def degree(self) -> Number:
        return self.values[Partition([1] * self.n)] if self.n else self.values[Partition()]


def zero(n: int, odd: bool = False) -> ClassFunction:
    cls = OddClassFunction if odd else ClassFunction
    return cls(n, {rho: 0 for rho in (odd_classes(n) if odd else partitions(n))})


def constant(n: int, value: Number = 1, odd: bool = False) -> ClassFunction:
    cls = OddClassFunction if odd else ClassFunction
    return cls(n, {rho: value for rho in (odd_classes(n) if odd else partitions(n))})


# -- Murnaghan-Nakayama ------------------------------------------------------


def _strip_removals(lam: Partition, k: int):
    """Yield ``(sign, lam minus a border strip of size k)``.

    Uses first-column hook lengths: removing a strip of size ``k`` moves one
    entry ``b`` of ``{lam_i + h - i}`` to an unoccupied ``b - k``.
    """
    h = len(lam)
    beta = [lam[i] + h - 1 - i for i in range(h)]
    occupied = set(beta)
    for b in beta:
        t = b - k
        if t < 0 or t in occupied:
            continue
        between = sum(1 for x in beta if t < x < b)
        new = sorted([x for x in beta if x != b] + [t], reverse=True)
        parts = [new[i] - (h - 1 - i) for i in range(h)]
        yield (-1) ** between, Partition(parts)


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], Partition(rho[1:])
    return sum(sign * _mn(mu, rest) for sign, mu in _strip_removals(lam, k))


def specht_value(lam, rho) -> int:
    return _mn(as_partition(lam), as_partition(rho))


@lru_cache(maxsize=None)
def specht_character(lam) -> ClassFunction:
    """Character of ``S^λ`` by the Murnaghan-Nakayama rule."""
    lam = as_partition(lam)
    n = lam.size
    return ClassFunction(n, {rho: _mn(lam, rho) for rho in partitions(n)})


def _distributions(cycles: tuple[int, ...], caps: tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def go(i: int, rem: tuple[int, ...]) -> int:
        if i == len(cycles):
            return 1 if not any(rem) else 0
        c = cycles[i]
        total = 0
        for b, r in enumerate(rem):
            if r >= c:
                total += go(i + 1, rem[:b] + (r - c,) + rem[b + 1 :])
        return total

    return go(0, caps)


@lru_cache(maxsize=None)
def perm_character(nu: tuple[int, ...]) -> ClassFunction:
    """Character of the permutation module on cosets of the Young subgroup S_ν.

    The value at ``ρ`` is the number of ways of sending each cycle of a fixed
    permutation of type ρ to one of the blocks so that block ``k`` receives
    exactly ``ν_k`` points.
    """
    nu = tuple(int(x) for x in nu)
    n = sum(nu)
    caps = tuple(x for x in nu if x)
    return ClassFunction(n, {rho: _distributions(tuple(rho), caps) for rho in partitions(n)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise ValueError(f"size mismatch: S_{f.n} vs S_{g.n}")
    total = sum(class_size(rho) * f.values[rho] * g.values[rho] for rho in f.classes)
    return Fraction(total, factorial(f.n))


def restrict_odd(f: ClassFunction) -> OddClassFunction:
    return OddClassFunction(f.n, {rho: f.values[rho] for rho in odd_classes(f.n)})


# -- tensor products with two-row permutation modules ----------------------


def tensor_multiplicity(alpha, i: int, beta, method: str = "lr") -> int:
    """``[S^α ⊗ M^{(n-i,i)} : S^β]`` over the complex numbers.

    ``method="lr"`` sums ``c^α_{γ,δ} c^β_{γ,δ}`` over ``γ ⊢ n-i``, ``δ ⊢ i``;
    ``method="character"`` takes the inner product of characters.  The two
    are independent computations of the same number.
    """
    alpha, beta = as_partition(alpha), as_partition(beta)
    n = alpha.size
    if beta.size != n:
        raise ValueError("alpha and beta must have the same size")
    if not 0 <= i <= n:
        return 0
    if method == "character":
        prod = specht_character(alpha) * perm_character((n - i, i))
        value = inner_product(prod, specht_character(beta))
        assert value.denominator == 1
        return int(value)
    if method != "lr":
        raise ValueError(f"unknown method {method!r}")
    return _tensor_lr(alpha, i, beta)


@lru_cache(maxsize=1 << 16)
def _tensor_lr(alpha: Partition, i: int, beta: Partition) -> int:
    total = 0
    for gamma in partitions(alpha.size - i):
        if not (contains(alpha, gamma) and contains(beta, gamma)):
            continue
        e1 = lr_skew_expansion(gamma, alpha)
        e2 = lr_skew_expansion(gamma, beta)
        total += sum(v * e2.get(d, 0) for d, v in e1.items())
    return total


# -- expansion in Specht characters on odd classes --------------------------


@lru_cache(maxsize=None)
def _odd_specht_inverse(n: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = strict_partitions(n)
    cols = odd_classes(n)
    if len(rows) != len(cols):
        raise AssertionError("number of strict partitions != number of odd classes")
    mat = sympy.Matrix([[specht_value(lam, rho) for rho in cols] for lam in rows])
    if mat.det() == 0:
        raise ArithmeticError(f"odd-class Specht matrix of S_{n} is singular")
    inv = mat.inv()
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols))
        for i in range(inv.rows)
    )


def expand_in_specht_odd(f: ClassFunction) -> dict[Partition, Number]:
    """Coefficients ``q_λ`` (λ strict) with ``f = Σ q_λ χ_{S^λ}`` on odd classes."""
    n = f.n
    inv = _odd_specht_inverse(n)
    fv = [f.values[rho] for rho in odd_classes(n)]
    # q X = f  =>  q = f X^{-1}
    coeffs = {}
    for j, lam in enumerate(strict_partitions(n)):
        coeffs[lam] = _normalise(sum(Fraction(fv[i]) * inv[i][j] for i in range(len(fv))))
    return coeffs


# -- Young subgroups S_l x S_{n-l} ------------------------------------------


@dataclass
class YoungClassFunction:
    """A class function on ``S_l x S_r``, keyed by pairs of cycle types."""

    l: int
    r: int
    values: dict[tuple[Partition, Partition], Number]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, YoungClassFunction)
            and (self.l, self.r) == (other.l, other.r)
            and all(_normalise(v) == _normalise(other.values[k]) for k, v in self.values.items())
        )

    def __add__(self, other: "YoungClassFunction") -> "YoungClassFunction":
        return YoungClassFunction(
            self.l, self.r, {k: v + other.values[k] for k, v in self.values.items()}
        )

    def __mul__(self, scalar) -> "YoungClassFunction":
        return YoungClassFunction(self.l, self.r, {k: v * scalar for k, v in self.values.items()})

    __rmul__ = __mul__


def _pairs(l: int, r: int, odd: bool) -> Iterable[tuple[Partition, Partition]]:
    left = odd_classes(l) if odd else partitions(l)
    right = odd_classes(r) if odd else partitions(r)
    for a in left:
        for b in right:
            yield a, b


def restrict_to_young(f: ClassFunction, l: int, odd: bool = False) -> YoungClassFunction:
    """Restriction of ``f`` to ``S_l x S_{n-l}``: value at ``(ρ1, ρ2)`` is ``f(ρ1 ⊔ ρ2)``."""
    r = f.n - l
    return YoungClassFunction(
        l, r, {(a, b): f.values[union_sorted(a, b)] for a, b in _pairs(l, r, odd)}
    )


def outer_product(f: ClassFunction, g: ClassFunction, odd: bool = False) -> YoungClassFunction:
    """The outer tensor product ``f ⊠ g`` on ``S_{f.n} x S_{g.n}``."""
    return YoungClassFunction(
        f.n, g.n, {(a, b): f.values[a] * g.values[b] for a, b in _pairs(f.n, g.n, odd)}
    )


def zero_young(l: int, r: int, odd: bool = False) -> YoungClassFunction:
    return YoungClassFunction(l, r, {k: 0 for k in _pairs(l, r, odd)})


# -- on-disk character tables ------------------------------------------------


def character_table(n: int) -> dict[Partition, tuple[int, ...]]:
    return {lam: specht_character(lam).vector() for lam in partitions(n)}


def character_table_json(n: int) -> str:
    """``{"n": n, "classes": [...], "specht": {λ: [values]}}`` with canonical keys."""
    doc = {
        "n": n,
        "classes": [format_partition(rho) for rho in partitions(n)],
        "specht": {format_partition(lam): list(v) for lam, v in character_table(n).items()},
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def load_character_table(path: Path) -> dict[Partition, tuple[int, ...]]:
    doc = json.loads(Path(path).read_text())
    classes = [parse_partition(c) for c in doc["classes"]]
    if classes != list(partitions(doc["n"])):
        raise ValueError("class order in cache does not match")
    return {parse_partition(k): tuple(v) for k, v in doc["specht"].items()}

