"""Exhaustive checks of row and column removal and the tableau identities behind them.

Each check walks every instance in a size range, skips instances outside
its hypotheses, and records every mismatch with both sides.  Checks are
looked up by id in :data:`REGISTRY`.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from math import factorial, prod
from typing import Callable

from .characters import (
    outer_product,
    perm_character,
    restrict_to_young,
    tensor_multiplicity,
    zero_young,
)
from .modrep import brauer_characters, decomposition_matrix
from .partitions import (
    Partition,
    add,
    as_partition,
    cols_gt,
    cols_le,
    conjugate,
    contains,
    dbl,
    dblbar,
    dblbar_composition,
    dominates,
    format_partition,
    h2,
    hook_dimension,
    is_strict,
    parity_a,
    partitions,
    rectangle,
    rows_gt,
    rows_le,
    slice_nodes,
    strict_partitions,
    union_sorted,
)
from .spin import (
    Basis,
    VirtualModule,
    alternating_specht_sum,
    basic_spin_d_character,
    basic_spin_perm_expansion,
    perm_to_specht,
    spin_characters_odd,
    spin_decomposition_matrix,
    spin_tensor_multiplicity,
    specht_to_d,
    two_part_decomposition,
)
from .tableaux import lr_skew_expansion, shifted_coefficient


@dataclass
class CheckReport:
    check: str
    n_range: tuple[int, int]
    tested: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, inputs: dict, lhs, rhs, **extra) -> None:
        self.failures.append({"inputs": _jsonable(inputs), "lhs": _jsonable(lhs), "rhs": _jsonable(rhs), **_jsonable(extra)})

    def compare(self, inputs: dict, lhs, rhs, **extra) -> None:
        self.tested += 1
        if lhs != rhs:
            self.fail(inputs, lhs, rhs, **extra)

    def require(self, inputs: dict, ok: bool, what: str) -> None:
        self.tested += 1
        if not ok:
            self.fail(inputs, what, "holds")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        d["n_range"] = list(self.n_range)
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lo, hi = self.n_range
        return (
            f"{status} {self.check:<10} n={lo}..{hi} tested={self.tested} "
            f"skipped={self.skipped} failures={len(self.failures)} ({self.seconds:.2f}s)"
        )


def _jsonable(x):
    if isinstance(x, Partition):
        return format_partition(x)
    if isinstance(x, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Context:
    seed: int = 0
    cache_dir: str | None = None
    jobs: int = 1

    def d(self, lam, mu) -> int:
        """``[S^λ:D^μ]``; zero across sizes or for μ not 2-regular."""
        lam, mu = as_partition(lam), as_partition(mu)
        if lam.size != mu.size or not is_strict(mu):
            return 0
        return decomposition_matrix(lam.size, self.seed, self.cache_dir, self.jobs).entry(lam, mu)

    def e(self, lam, mu) -> int:
        """``[S(λ,ε):D^μ]`` with the same conventions."""
        lam, mu = as_partition(lam), as_partition(mu)
        if lam.size != mu.size or not is_strict(mu) or not is_strict(lam):
            return 0
        return spin_decomposition_matrix(lam.size, self.seed, self.cache_dir, self.jobs).entry(lam, mu)


# -- row and column removal ---------------------------------------------------


def _row_table(ctx: Context, lam, mu, entry) -> dict:
    n = as_partition(lam).size
    return {format_partition(m): entry(lam, m) for m in strict_partitions(n)}


def check_T1(rep: CheckReport, ctx: Context, n: int) -> None:
    for lam in partitions(n):
        for mu in strict_partitions(n):
            for m in range(1, n + 1):
                top_l, top_m = rows_le(lam, m), rows_le(mu, m)
                if top_l.size != top_m.size:
                    rep.skipped += 1
                    continue
                rhs = ctx.d(top_l, top_m) * ctx.d(rows_gt(lam, m), rows_gt(mu, m))
                rep.compare({"lambda": lam, "mu": mu, "m": m}, ctx.d(lam, mu), rhs,
                            row=_row_table(ctx, lam, mu, ctx.d))


def check_T2(rep: CheckReport, ctx: Context, n: int) -> None:
    for lam in partitions(n):
        conj = conjugate(lam)
        for mu in strict_partitions(n):
            if not dominates(mu, lam):
                rep.skipped += n
                continue
            for m in range(1, n + 1):
                if cols_le(lam, m).size != cols_le(mu, m).size:
                    rep.skipped += 1
                    continue
                b = conj.part(m - 1)
                left = ctx.d(slice_nodes(lam, r_gt=b, c_le=m), slice_nodes(mu, r_gt=b, c_le=m))
                right = ctx.d(cols_gt(lam, m), cols_gt(mu, m))
                rep.compare({"lambda": lam, "mu": mu, "m": m, "b": b}, ctx.d(lam, mu), left * right,
                            row=_row_table(ctx, lam, mu, ctx.d))


def check_t1(rep: CheckReport, ctx: Context, n: int) -> None:
    for lam in strict_partitions(n):
        for mu in strict_partitions(n):
            for m in range(1, n + 1):
                top_l, top_m = rows_le(lam, m), rows_le(mu, 2 * m)
                if top_l.size != top_m.size:
                    rep.skipped += 1
                    continue
                bot_l, bot_m = rows_gt(lam, m), rows_gt(mu, 2 * m)
                a = parity_a(top_l) * parity_a(bot_l)
                rhs = 2**a * ctx.e(top_l, top_m) * ctx.e(bot_l, bot_m)
                rep.compare({"lambda": lam, "mu": mu, "m": m, "a": a}, ctx.e(lam, mu), rhs,
                            row=_row_table(ctx, lam, mu, ctx.e))


def check_t2(rep: CheckReport, ctx: Context, n: int) -> None:
    for lam in strict_partitions(n):
        conj = conjugate(lam)
        floor = dblbar(lam)
        for mu in strict_partitions(n):
            if not dominates(mu, floor):
                rep.skipped += n
                continue
            for m in range(1, n + 1):
                if cols_le(lam, 2 * m).size != cols_le(mu, m).size:
                    rep.skipped += 1
                    continue
                b = conj.part(2 * m - 1)
                left_l = slice_nodes(lam, r_gt=b, c_le=2 * m)
                right_l = cols_gt(lam, 2 * m)
                a = parity_a(left_l) * parity_a(right_l)
                left = ctx.e(left_l, slice_nodes(mu, r_gt=2 * b, c_le=m))
                right = ctx.e(right_l, cols_gt(mu, m))
                rep.compare({"lambda": lam, "mu": mu, "m": m, "b": b, "a": a}, ctx.e(lam, mu),
                            2**a * left * right, row=_row_table(ctx, lam, mu, ctx.e))


# -- decomposition-matrix invariants -------------------------------------------


def check_reg(rep: CheckReport, ctx: Context, n: int) -> None:
    for lam in partitions(n):
        for mu in strict_partitions(n):
            v = ctx.d(lam, mu)
            if v:
                rep.require({"lambda": lam, "mu": mu, "entry": v}, dominates(mu, lam), "mu dominates lambda")
        if is_strict(lam):
            rep.compare({"lambda": lam}, ctx.d(lam, lam), 1)


def check_regs(rep: CheckReport, ctx: Context, n: int) -> None:
    for lam in strict_partitions(n):
        d = dbl(lam)
        for mu in strict_partitions(n):
            v = ctx.e(lam, mu)
            if v:
                rep.require({"lambda": lam, "mu": mu, "entry": v}, dominates(mu, d), "mu dominates dbl(lambda)")
        if d.is_partition() and is_strict(d.to_partition()):
            rep.compare({"lambda": lam}, ctx.e(lam, d.to_partition()), 2 ** ((h2(lam) - parity_a(lam)) // 2))
        else:
            rep.skipped += 1


def shifted_standard_count(lam) -> int:
    """Standard shifted tableaux of strict shape λ."""
    lam = as_partition(lam)
    num = factorial(lam.size) * prod(x - y for i, x in enumerate(lam) for y in lam[i + 1:])
    den = prod(factorial(x) for x in lam) * prod(x + y for i, x in enumerate(lam) for y in lam[i + 1:])
    return num // den


def spin_dimension(lam) -> int:
    """Degree of the full ordinary spin character ``S(λ)``."""
    lam = as_partition(lam)
    return 2 ** ((lam.size - len(lam) + 1) // 2) * shifted_standard_count(lam)


def check_L151123_2(rep: CheckReport, ctx: Context, n: int) -> None:
    sdm = spin_decomposition_matrix(n, ctx.seed, ctx.cache_dir, ctx.jobs)
    for lam in strict_partitions(n):
        full = sdm.full_row(lam)
        rep.require({"lambda": lam}, all(v % 2 ** parity_a(lam) == 0 for v in full.values()), "2^a divides the S(lambda) row")
        total = sum(v * sdm.dims[mu] for mu, v in full.items())
        rep.compare({"lambda": lam, "what": "dimension"}, total, spin_dimension(lam))


def check_bs(rep: CheckReport, ctx: Context, n: int) -> None:
    if n < 1:
        rep.skipped += 1
        return
    top = Partition((n,))
    sdm = spin_decomposition_matrix(n, ctx.seed, ctx.cache_dir, ctx.jobs)
    target = dbl(top).to_partition()
    rep.compare({"n": n}, sdm.full_row(top), {target: 2 ** parity_a(top)})
    dm = decomposition_matrix(n, ctx.seed, ctx.cache_dir, ctx.jobs)
    rep.compare({"n": n, "what": "Brauer character"}, brauer_characters(dm)[target], basic_spin_d_character(n))


def check_bss(rep: CheckReport, ctx: Context, n: int) -> None:
    if n < 1:
        rep.skipped += 1
        return
    want = VirtualModule(Basis.IRREDUCIBLE, {dbl((n,)).to_partition(): 1})
    rep.compare({"n": n}, specht_to_d(alternating_specht_sum(n)), want)


def check_two_part(rep: CheckReport, ctx: Context, n: int) -> None:
    """Two-row rows of the computed matrix against the binary-digit closed form."""
    for h in range(n // 2 + 1):
        lam = Partition((n - h, h))
        got = {mu: v for mu, v in decomposition_matrix(n, ctx.seed, ctx.cache_dir, ctx.jobs).row(lam).items() if v}
        want = {Partition((n - k, k)): v for k, v in two_part_decomposition(n, h).items()}
        rep.compare({"n": n, "h": h}, got, want)


def check_bsm(rep: CheckReport, ctx: Context, n: int) -> None:
    if n < 1:
        rep.skipped += 1
        return
    exp = basic_spin_perm_expansion(n)
    rep.compare({"n": n}, perm_to_specht(exp.as_virtual()), alternating_specht_sum(n))
    rep.compare({"n": n, "what": "dimension"}, exp.dimension(), 2 ** ((n - 1) // 2))


def check_L111223_3(rep: CheckReport, ctx: Context, n: int) -> None:
    for l in range(1, n):
        r = n - l
        lhs = restrict_to_young(basic_spin_d_character(n), l, odd=True)
        factor = 2 ** (1 - (1 - parity_a((l,))) * (1 - parity_a((r,))))
        rhs = outer_product(basic_spin_d_character(l), basic_spin_d_character(r), odd=True) * factor
        rep.compare({"n": n, "l": l}, lhs.values, rhs.values)
        for a in range(n // 2 + 1):
            got = restrict_to_young(perm_character((n - a, a)), l)
            want = zero_young(l, r)
            for j in range(max(0, a + l - n), min(a, l) + 1):
                want = want + outer_product(perm_character((l - j, j)), perm_character((r + j - a, a - j)))
            rep.compare({"n": n, "l": l, "a": a, "what": "Mackey"}, got.values, want.values)


def check_L101123(rep: CheckReport, ctx: Context, n: int) -> None:
    if n < 1:
        rep.skipped += 1
        return
    for lam in partitions(n):
        for mu in strict_partitions(n):
            c = shifted_coefficient(lam, mu)
            if c:
                rep.require({"lambda": lam, "mu": mu}, dominates(mu, lam), "mu dominates lambda")
                twice = len(mu) - 1 - parity_a(mu) + parity_a((n,))
                rep.require({"lambda": lam, "mu": mu}, twice >= 0 and twice % 2 == 0, "exponent is a nonnegative integer")
        if is_strict(lam):
            rep.require({"lambda": lam}, shifted_coefficient(lam, lam) >= 1, "diagonal coefficient positive")
        # both associates S(μ,±) occur equally often, so each pair contributes the full S(μ)
        spin_deg = sum(spin_tensor_multiplicity(lam, mu) * spin_dimension(mu) for mu in strict_partitions(n))
        rep.compare({"lambda": lam, "what": "degree"}, spin_deg, hook_dimension(lam) * spin_dimension((n,)))
    for mu, phi in spin_characters_odd(n).items():
        rep.compare({"mu": mu, "what": "phi degree"}, phi.degree, spin_dimension(mu) // 2 ** parity_a(mu))


def check_L151223(rep: CheckReport, ctx: Context, n: int) -> None:
    for l in range(1, n):
        for nu in partitions(l):
            m = len(nu)
            for pi in partitions(n - l):
                alpha = union_sorted(nu, pi)
                for sigma in strict_partitions(n):
                    top_s, bot_s = rows_le(sigma, m), rows_gt(sigma, m)
                    lo = max(pi.part(0), sigma.part(m)) + 1
                    hi = min(nu.part(m - 1), sigma.part(m - 1))
                    if top_s.size != l or lo > hi:
                        rep.skipped += 1
                        continue
                    e = parity_a(top_s) * parity_a(bot_s) + (1 - parity_a((l,))) * (1 - parity_a((n - l,)))
                    rhs = 2**e * spin_tensor_multiplicity(nu, top_s) * spin_tensor_multiplicity(pi, bot_s)
                    rep.compare({"nu": nu, "pi": pi, "sigma": sigma}, spin_tensor_multiplicity(alpha, sigma), rhs)


def check_L131123_3(rep: CheckReport, ctx: Context, n: int, limit: int = 12) -> None:
    for lam in partitions(n):
        l = len(lam)
        if n + 2 * l > limit:
            rep.skipped += 1
            continue
        big = add(lam, rectangle(2, l))
        for mu in strict_partitions(n + 2 * l):
            if len(mu) > l:
                rep.compare({"lambda": lam, "mu": mu}, spin_tensor_multiplicity(big, mu), 0)
            elif len(mu) == l and mu[-1] > 2:
                small = Partition(x - 2 for x in mu)
                rep.compare({"lambda": lam, "mu": mu}, spin_tensor_multiplicity(big, mu), spin_tensor_multiplicity(lam, small))
            else:
                rep.skipped += 1


# -- tableau-layer identities ---------------------------------------------------


def _lr(alpha, beta, gamma) -> int:
    gamma, alpha = as_partition(gamma), as_partition(alpha)
    if as_partition(beta).size + alpha.size != gamma.size:
        return 0
    return lr_skew_expansion(alpha, gamma).get(as_partition(beta), 0)


def check_L111223_2(rep: CheckReport, ctx: Context, n: int) -> None:
    for gamma in partitions(n):
        gc = conjugate(gamma)
        for k in range(n + 1):
            for alpha in partitions(k):
                ac = conjugate(alpha)
                for beta in partitions(n - k):
                    c = _lr(alpha, beta, gamma)
                    rep.compare({"alpha": alpha, "beta": beta, "gamma": gamma}, c, _lr(beta, alpha, gamma))
                    rep.compare({"alpha": alpha, "beta": beta, "gamma": gamma, "what": "conjugate"}, c, _lr(ac, conjugate(beta), gc))


def check_L101123_4(rep: CheckReport, ctx: Context, n: int) -> None:
    for gamma in partitions(n):
        for k in range(n + 1):
            for alpha in partitions(k):
                for beta, c in lr_skew_expansion(alpha, gamma).items():
                    inputs = {"alpha": alpha, "beta": beta, "gamma": gamma}
                    rep.require(inputs, contains(gamma, alpha) and contains(gamma, beta), "alpha, beta inside gamma")
                    rep.require(inputs, dominates(gamma, union_sorted(alpha, beta)), "union below gamma")
                    rep.require(inputs, dominates(add(alpha, beta), gamma), "gamma below the sum")


def check_L131123(rep: CheckReport, ctx: Context, n: int) -> None:
    support: dict[tuple[Partition, Partition], list[Partition]] = {}
    for gamma in partitions(n):
        for k in range(n + 1):
            for alpha in partitions(k):
                for beta in lr_skew_expansion(alpha, gamma):
                    support.setdefault((alpha, beta), []).append(gamma)
    for (alpha, beta), shapes in support.items():
        for gamma in shapes:
            floor = dblbar_composition(gamma)
            for delta in shapes:
                rep.require({"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta},
                            dominates(delta, floor), "delta dominates dblbar(gamma)")


def check_L111223(rep: CheckReport, ctx: Context, n: int) -> None:
    for gamma in partitions(n):
        for k in range(n + 1):
            for alpha in partitions(k):
                for beta in partitions(n - k):
                    c = _lr(alpha, beta, gamma)
                    for m in range(0, len(gamma) + 1):
                        if rows_le(alpha, m).size + rows_le(beta, m).size != rows_le(gamma, m).size:
                            rep.skipped += 1
                            continue
                        rhs = _lr(rows_le(alpha, m), rows_le(beta, m), rows_le(gamma, m)) * _lr(
                            rows_gt(alpha, m), rows_gt(beta, m), rows_gt(gamma, m)
                        )
                        rep.compare({"alpha": alpha, "beta": beta, "gamma": gamma, "m": m}, c, rhs)


def check_L101123_5(rep: CheckReport, ctx: Context, n: int) -> None:
    for gamma in partitions(n):
        for k in range(n + 1):
            for alpha in partitions(k):
                l0 = max(1, len(alpha), len(gamma))
                m0 = max(1, alpha.part(0), gamma.part(0))
                for beta in partitions(n - k):
                    c = _lr(alpha, beta, gamma)
                    for l in (l0, l0 + 1):
                        col = rectangle(1, l)
                        rep.compare({"alpha": alpha, "beta": beta, "gamma": gamma, "l": l}, c,
                                    _lr(add(alpha, col), beta, add(gamma, col)))
                    for m in (m0, m0 + 1):
                        rep.compare({"alpha": alpha, "beta": beta, "gamma": gamma, "m": m}, c,
                                    _lr(union_sorted((m,), alpha), beta, union_sorted((m,), gamma)))


def check_L121223(rep: CheckReport, ctx: Context, n: int) -> None:
    for alpha in partitions(n):
        for beta in strict_partitions(n):
            c = shifted_coefficient(alpha, beta)
            for m in range(0, len(beta) + 1):
                if rows_le(alpha, m).size != rows_le(beta, m).size:
                    rep.skipped += 1
                    continue
                rhs = shifted_coefficient(rows_le(alpha, m), rows_le(beta, m)) * shifted_coefficient(
                    rows_gt(alpha, m), rows_gt(beta, m)
                )
                rep.compare({"alpha": alpha, "beta": beta, "m": m}, c, rhs)


def check_L101123_2(rep: CheckReport, ctx: Context, n: int) -> None:
    if n < 1:
        rep.skipped += 1
        return
    for nu in partitions(n):
        for psi in strict_partitions(n):
            for m in range(max(1, len(nu)), len(psi) + 2):
                if not (m - 1 <= len(psi) <= m):
                    rep.skipped += 1
                    continue
                col = rectangle(1, m)
                rep.compare({"nu": nu, "psi": psi, "m": m}, shifted_coefficient(nu, psi),
                            shifted_coefficient(add(nu, col), add(psi, col)))


def tensor_perm(alpha, i: int, beta) -> int:
    """``[S^α ⊗ M^{(a-i,i)} : S^β]`` for any ``0 <= i <= a``; zero outside."""
    alpha, beta = as_partition(alpha), as_partition(beta)
    a = alpha.size
    if i < 0 or i > a or beta.size != a:
        return 0
    return tensor_multiplicity(alpha, min(i, a - i), beta)


def check_L111223_4(rep: CheckReport, ctx: Context, n: int) -> None:
    for nu in partitions(n):
        for psi in partitions(n):
            for m in range(0, len(nu) + 1):
                l = rows_le(nu, m).size
                if rows_le(psi, 2 * m).size != l:
                    rep.skipped += 1
                    continue
                top_n, bot_n = rows_le(nu, m), rows_gt(nu, m)
                top_p, bot_p = rows_le(psi, 2 * m), rows_gt(psi, 2 * m)
                for k in range(n + 1):
                    rhs = sum(
                        tensor_perm(top_n, j, top_p) * tensor_perm(bot_n, k - j, bot_p)
                        for j in range(max(0, k + l - n), min(k, l) + 1)
                    )
                    rep.compare({"nu": nu, "psi": psi, "m": m, "k": k}, tensor_perm(nu, k, psi), rhs)


def check_L181223(rep: CheckReport, ctx: Context, n: int, limit: int = 12) -> None:
    for l in range(0, (limit - n) // 2 + 1):
        for alpha in partitions(n):
            if len(alpha) > l:
                continue
            big_a = add(alpha, rectangle(2, l))
            for beta in partitions(n):
                if len(beta) > 2 * l:
                    continue
                big_b = add(beta, rectangle(1, 2 * l))
                for k in range(n + 2 * l + 1):
                    want = tensor_perm(alpha, k - l, beta) if l <= k <= n + l else 0
                    rep.compare({"alpha": alpha, "beta": beta, "l": l, "k": k}, tensor_perm(big_a, k, big_b), want)


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    run: Callable[[CheckReport, Context, int], None]
    default: tuple[int, int]
    about: str


REGISTRY: dict[str, Check] = {
    "T1": Check(check_T1, (0, 9), "row removal for [S^λ:D^μ]"),
    "T2": Check(check_T2, (0, 9), "column removal for [S^λ:D^μ]"),
    "t1": Check(check_t1, (0, 9), "row removal for [S(λ,ε):D^μ]"),
    "t2": Check(check_t2, (0, 9), "column removal for [S(λ,ε):D^μ]"),
    "reg": Check(check_reg, (0, 9), "unitriangularity of the decomposition matrix"),
    "regs": Check(check_regs, (1, 9), "spin rows sit above dbl(λ); entry at dbl(λ)"),
    "L151123_2": Check(check_L151123_2, (1, 9), "S(λ) rows are 2^a(λ) times S(λ,ε) rows"),
    "bs": Check(check_bs, (1, 9), "basic spin row is 2^a(n) times D^dbl(n)"),
    "bss": Check(check_bss, (1, 14), "alternating two-row Specht sum equals D^dbl(n)"),
    "two_part": Check(check_two_part, (0, 9), "two-row Specht rows match the binary-digit rule"),
    "bsm": Check(check_bsm, (1, 14), "basic spin as a combination of two-row permutation modules"),
    "L111223_3": Check(check_L111223_3, (2, 9), "restriction of D^dbl(n) to S_l x S_n-l"),
    "L101123": Check(check_L101123, (1, 10), "basic-spin tensor multiplicities: support, exponent, degrees"),
    "L151223": Check(check_L151223, (2, 10), "tensor multiplicities factor across a split union"),
    "L131123_3": Check(check_L131123_3, (1, 10), "tensor multiplicities under adding two columns"),
    "L111223_2": Check(check_L111223_2, (0, 12), "LR symmetry and conjugation"),
    "L101123_4": Check(check_L101123_4, (0, 12), "LR support bounds"),
    "L131123": Check(check_L131123, (0, 10), "products of LR coefficients lie above dblbar"),
    "L111223": Check(check_L111223, (0, 12), "LR row factorization"),
    "L101123_5": Check(check_L101123_5, (0, 10), "LR padding by a column or a first row"),
    "L121223": Check(check_L121223, (0, 10), "marked coefficient row factorization"),
    "L101123_2": Check(check_L101123_2, (1, 10), "marked coefficient padding by a column"),
    "L111223_4": Check(check_L111223_4, (0, 10), "tensor with two-row permutation modules, row split"),
    "L181223": Check(check_L181223, (0, 10), "tensor with two-row permutation modules, padding"),
}

PRIMARY_IDS = tuple(k for k in REGISTRY if k != "two_part")


def run_check(check_id: str, n_range: tuple[int, int] | None = None, seed: int = 0,
              cache_dir: str | None = None, jobs: int = 1) -> CheckReport:
    if check_id not in REGISTRY:
        raise KeyError(f"unknown check {check_id!r}; known: {', '.join(REGISTRY)}")
    entry = REGISTRY[check_id]
    lo, hi = n_range or entry.default
    rep = CheckReport(check_id, (lo, hi))
    ctx = Context(seed, cache_dir, jobs)
    start = time.perf_counter()
    for n in range(lo, hi + 1):
        entry.run(rep, ctx, n)
    rep.seconds = time.perf_counter() - start
    return rep


def reports_json(reports: list[CheckReport]) -> str:
    doc = {"passed": all(r.passed for r in reports), "checks": [r.to_dict() for r in reports]}
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"
