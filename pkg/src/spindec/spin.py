"""Spin representations in characteristic 2, through class functions on odd classes.

Nothing here constructs the double cover.  The basic spin module is written
as an integer combination of two-row permutation modules; the other spin
characters on odd classes then follow from a triangular system whose
coefficients are marked-tableau counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .characters import (
    OddClassFunction,
    ClassFunction,
    expand_in_specht_odd,
    perm_character,
    restrict_odd,
    specht_character,
    zero,
)
from .partitions import (
    EMPTY,
    Partition,
    as_partition,
    dbl,
    dominates,
    format_partition,
    h2,
    is_strict,
    parity_a,
    parse_partition,
    partitions,
    strict_partitions,
)
from .tableaux import shifted_coefficient


class Basis(Enum):
    SPECHT = "S"
    IRREDUCIBLE = "D"
    PERMUTATION = "M"
    SPIN = "Spin"
    SPIN_HALF = "SpinHalf"


@dataclass
class VirtualModule:
    """An element of a Grothendieck group, on one kind of basis."""

    basis: Basis
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.coeffs = {as_partition(k): v for k, v in self.coeffs.items() if v}

    def __getitem__(self, key) -> int:
        return self.coeffs.get(as_partition(key), 0)

    def _check(self, other: "VirtualModule") -> None:
        if other.basis is not self.basis:
            raise ValueError(f"cannot combine {self.basis} with {other.basis}")

    def __add__(self, other: "VirtualModule") -> "VirtualModule":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return VirtualModule(self.basis, out)

    def __sub__(self, other: "VirtualModule") -> "VirtualModule":
        return self + other * -1

    def __mul__(self, scalar: int) -> "VirtualModule":
        return VirtualModule(self.basis, {k: v * scalar for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VirtualModule)
            and self.basis is other.basis
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{v}[{self.basis.value}^{format_partition(k)}]" for k, v in sorted(self.coeffs.items(), reverse=True))
        return body or "0"


def two_row(n: int, h: int) -> Partition:
    return Partition((n - h, h))


# -- two-row combinatorics --------------------------------------------------


def g_ab(a: int, b: int) -> int:
    """1 if every binary digit of b is 0 or equal to the matching digit of a."""
    if a < 0 or b < 0:
        return 0
    return 1 if b & ~a == 0 else 0


def two_part_decomposition(n: int, h: int) -> dict[int, int]:
    """``{k: [S^{(n-h,h)} : D^{(n-k,k)}]}`` over the nonzero entries."""
    if not 0 <= h <= n // 2:
        raise ValueError(f"need 0 <= h <= n/2, got n={n}, h={h}")
    out = {}
    for k in range(0, (n - 1) // 2 + 1):
        v = g_ab(n - 2 * k + 1, h - k)
        if v:
            out[k] = v
    if n == 0:
        out = {0: 1}
    return out


def two_part_specht_in_d(n: int, h: int) -> VirtualModule:
    if h < 0 or h > n // 2:
        return VirtualModule(Basis.IRREDUCIBLE)
    return VirtualModule(
        Basis.IRREDUCIBLE, {two_row(n, k): v for k, v in two_part_decomposition(n, h).items()}
    )


def alternating_specht_sum(n: int) -> VirtualModule:
    """The alternating two-row Specht sum equal to the class of ``D^{dbl(n)}``."""
    out: dict[Partition, int] = {}

    def put(first: int, second: int, sign: int) -> None:
        if second >= 0:
            key = Partition((first, second))
            out[key] = out.get(key, 0) + sign

    for i in range(n // 8 + 2):
        if n % 2 == 0:
            put(n // 2 + 4 * i + 1, n // 2 - 4 * i - 1, 1)
            put(n // 2 + 4 * i + 2, n // 2 - 4 * i - 2, -1)
        else:
            put((n + 1) // 2 + 4 * i, (n - 1) // 2 - 4 * i, 1)
            put((n + 5) // 2 + 4 * i, (n - 5) // 2 - 4 * i, -1)
    return VirtualModule(Basis.SPECHT, out)


def specht_to_d(v: VirtualModule) -> VirtualModule:
    """Push a combination of two-row Specht classes into D-classes."""
    if v.basis is not Basis.SPECHT:
        raise ValueError("expected Specht classes")
    out = VirtualModule(Basis.IRREDUCIBLE)
    for lam, c in v.coeffs.items():
        if len(lam) > 2:
            raise ValueError("only two-row Specht modules are supported")
        out = out + two_part_specht_in_d(lam.size, lam.part(1)) * c
    return out


def perm_to_specht(v: VirtualModule) -> VirtualModule:
    """Two-row permutation classes via ``[M^{(n-h,h)}] = Σ_{k<=h} [S^{(n-k,k)}]``."""
    if v.basis is not Basis.PERMUTATION:
        raise ValueError("expected permutation classes")
    out = VirtualModule(Basis.SPECHT)
    for nu, c in v.coeffs.items():
        n, h = nu.size, nu.part(1)
        out = out + VirtualModule(Basis.SPECHT, {two_row(n, k): c for k in range(h + 1)})
    return out


@dataclass(frozen=True)
class BasicSpinExpansion:
    """``[D^{dbl(n)}] = Σ_h t[h] [M^{(n-h,h)}]``."""

    n: int
    t: tuple[int, ...]  # t[h] for h = 0..n//2

    def as_virtual(self) -> VirtualModule:
        return VirtualModule(Basis.PERMUTATION, {two_row(self.n, h): c for h, c in enumerate(self.t)})

    def dimension(self) -> int:
        from math import comb

        return sum(c * comb(self.n, h) for h, c in enumerate(self.t))


def _r(h: int) -> int:
    return 1 if h % 2 == 0 else (-2 if h % 4 == 1 else 0)


def _s(h: int) -> int:
    return 1 if h % 4 in (0, 3) else -1


@lru_cache(maxsize=None)
def basic_spin_perm_expansion(n: int) -> BasicSpinExpansion:
    if n <= 0:
        raise ValueError("basic spin expansion needs n >= 1")
    t = [0] * (n // 2 + 1)
    if n % 2 == 0:
        for h in range(n // 2):
            t[n // 2 - 1 - h] = _r(h)  # on M^{(n/2+1+h, n/2-1-h)}
    else:
        for h in range((n - 1) // 2 + 1):
            t[(n - 1) // 2 - h] = _s(h)  # on M^{((n+1)/2+h, (n-1)/2-h)}
    return BasicSpinExpansion(n, tuple(t))


def basic_spin_d_character(n: int) -> OddClassFunction:
    """Brauer character of ``D^{dbl(n)}`` as ``Σ t_h χ_{M^{(n-h,h)}}``."""
    exp = basic_spin_perm_expansion(n)
    out = zero(n, odd=True)
    for h, c in enumerate(exp.t):
        if c:
            out = out + restrict_odd(perm_character((n - h, h))) * c
    return out


@lru_cache(maxsize=None)
def basic_spin_brauer(n: int) -> OddClassFunction:
    """χ_{S((n))} on odd classes, i.e. ``2^{a(n)}`` times the character of ``D^{dbl(n)}``."""
    return basic_spin_d_character(n) * (2 ** parity_a((n,)))


# -- spin characters on odd classes -----------------------------------------


def spin_exponent(mu, n: int) -> int:
    """``(h(μ) - 1 - a(μ) + a(n)) / 2``, asserted to be a nonnegative integer."""
    mu = as_partition(mu)
    twice = len(mu) - 1 - parity_a(mu) + parity_a((n,))
    if twice < 0 or twice % 2:
        raise ArithmeticError(f"exponent for {mu} in S_{n} is {Fraction(twice, 2)}")
    return twice // 2


def spin_tensor_multiplicity(lam, mu) -> int:
    """``[S^λ ⊗ S((n)) : S(μ,ε)]`` over the complex numbers, μ strict."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = lam.size
    if mu.size != n:
        raise ValueError("size mismatch")
    c = shifted_coefficient(lam, mu)
    if c == 0:
        return 0
    return 2 ** spin_exponent(mu, n) * c


@lru_cache(maxsize=None)
def spin_characters_odd(n: int) -> dict[Partition, OddClassFunction]:
    """``φ_μ``, the character of ``S(μ,ε)`` on odd classes, for every strict μ ⊢ n.

    Solved downward in dominance from
    ``χ_{S^ν} β_n = Σ_μ 2^{a(μ)} [S^ν ⊗ S((n)) : S(μ,ε)] φ_μ`` on odd classes.
    """
    if n < 1:
        raise ValueError("spin characters need n >= 1")
    beta = basic_spin_brauer(n)
    phi: dict[Partition, OddClassFunction] = {}
    for nu in strict_partitions(n):
        rhs = restrict_odd(specht_character(nu)) * beta
        diag = 0
        for mu in strict_partitions(n):
            m = spin_tensor_multiplicity(nu, mu)
            if not m:
                continue
            if not dominates(mu, nu):
                raise AssertionError(f"support of S^{nu} x S(({n})) contains {mu}")
            weight = 2 ** parity_a(mu) * m
            if mu == nu:
                diag = weight
            else:
                rhs = rhs - phi[mu] * weight
        if diag == 0:
            raise AssertionError(f"zero diagonal coefficient at {nu}")
        f = rhs / diag
        for rho, v in f.values.items():
            if not (isinstance(v, int) or v.denominator == 1):
                raise AssertionError(f"φ_{nu} takes the value {v} at {rho}")
        if f.degree <= 0:
            raise AssertionError(f"φ_{nu} has degree {f.degree}")
        phi[nu] = f
    return phi


def diagonal_shifted_values(n: int) -> dict[Partition, int]:
    """``c̄_{λ,λ}`` for strict λ; values above 1 are legitimate but worth noticing."""
    return {lam: shifted_coefficient(lam, lam) for lam in strict_partitions(n)}


# -- spin decomposition matrices ---------------------------------------------


def epsilon_label(lam) -> str:
    return "±" if parity_a(lam) else "0"


@dataclass
class SpinDecompositionMatrix:
    """``[S(λ,ε) : D^μ]`` for strict λ, μ ⊢ n."""

    n: int
    rows: dict[Partition, dict[Partition, int]]
    dims: dict[Partition, int]

    @property
    def columns(self) -> tuple[Partition, ...]:
        return strict_partitions(self.n)

    @property
    def epsilon(self) -> dict[Partition, str]:
        return {lam: epsilon_label(lam) for lam in self.rows}

    def entry(self, lam, mu) -> int:
        lam, mu = as_partition(lam), as_partition(mu)
        if lam not in self.rows:
            return 0
        return self.rows[lam].get(mu, 0)

    def full_row(self, lam) -> dict[Partition, int]:
        """Row of ``S(λ)``, the sum of the associate pair when λ is odd."""
        lam = as_partition(lam)
        return {mu: v * 2 ** parity_a(lam) for mu, v in self.rows[lam].items()}

    def problems(self) -> list[str]:
        out = []
        for lam, row in self.rows.items():
            d = dbl(lam)
            for mu, v in row.items():
                if v < 0:
                    out.append(f"negative entry at {lam},{mu}")
                if v and not dominates(mu, d):
                    out.append(f"entry at {lam},{mu} not above dbl")
            if d.is_partition() and is_strict(d.to_partition()):
                want = 2 ** ((h2(lam) - parity_a(lam)) // 2)
                if row.get(d.to_partition(), 0) != want:
                    out.append(f"entry at {lam},dbl is {row.get(d.to_partition(), 0)}, expected {want}")
        return out

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "rows": {
                format_partition(lam): {format_partition(mu): self.entry(lam, mu) for mu in self.columns}
                for lam in self.columns
            },
            "dims": {format_partition(mu): self.dims[mu] for mu in self.columns},
            "epsilon": {format_partition(lam): epsilon_label(lam) for lam in self.columns},
        }
        return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SpinDecompositionMatrix":
        doc = json.loads(text)
        rows = {
            parse_partition(l): {parse_partition(m): int(v) for m, v in r.items() if int(v)}
            for l, r in doc["rows"].items()
        }
        dims = {parse_partition(m): int(v) for m, v in doc["dims"].items()}
        return cls(int(doc["n"]), rows, dims)


def compute_spin_decomposition_matrix(n: int, seed: int = 0, cache_dir=None, jobs: int = 1) -> SpinDecompositionMatrix:
    from .modrep import decomposition_matrix

    if n == 0:
        return SpinDecompositionMatrix(0, {EMPTY: {EMPTY: 1}}, {EMPTY: 1})
    dm = decomposition_matrix(n, seed=seed, cache_dir=cache_dir, jobs=jobs)
    rows = {}
    for lam, phi in spin_characters_odd(n).items():
        q = expand_in_specht_odd(phi)
        row = {}
        for mu in strict_partitions(n):
            v = sum(Fraction(c) * dm.entry(nu, mu) for nu, c in q.items())
            if v.denominator != 1 or v < 0:
                raise AssertionError(f"[S({lam}):D^{mu}] computed as {v}")
            if v:
                row[mu] = int(v)
        rows[lam] = row
    sdm = SpinDecompositionMatrix(n, rows, dict(dm.dims))
    bad = sdm.problems()
    if bad:
        raise AssertionError("; ".join(bad))
    return sdm


_memo: dict[tuple[int, int], SpinDecompositionMatrix] = {}


def spin_decomposition_matrix(n: int, seed: int = 0, cache_dir: Path | str | None = None, jobs: int = 1) -> SpinDecompositionMatrix:
    from .cache import load_or_build

    key = (n, seed)
    if key not in _memo:
        _memo[key] = load_or_build(
            cache_dir,
            f"spindecomp2_n{n}.json",
            lambda: compute_spin_decomposition_matrix(n, seed, cache_dir, jobs),
            SpinDecompositionMatrix.from_json,
            lambda m: m.to_json(),
        )
    return _memo[key]


def spin_entry(lam, mu, seed: int = 0, cache_dir=None) -> int:
    """``[S(λ,ε):D^μ]`` with the zero conventions used by the removal checks.

    Zero when the sizes differ or μ is not 2-regular; the empty pair gives 1.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size or not is_strict(mu) or not is_strict(lam):
        return 0
    return spin_decomposition_matrix(lam.size, seed, cache_dir).entry(lam, mu)

