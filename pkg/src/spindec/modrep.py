"""Modular representations of S_n over GF(2), built explicitly.

Every module stores the matrices of all adjacent transpositions
``s_i = (i, i+1)``, ``i = 1..n-1``, acting on row vectors from the right.

The decomposition matrix is assembled without any character theory:
Specht modules are spanned by polytabloids, irreducibles ``D^μ`` are heads
of Specht modules modulo the radical of the tabloid form, and composition
factors come from a MeatAxe-style chop followed by isomorphism tests.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Sequence

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from . import gf2
from .gf2 import BitMatrix, Subspace
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    dominates,
    format_partition,
    hook_dimension,
    is_strict,
    multinomial,
    parse_partition,
    partitions,
    strict_partitions,
)

CHOP_BUDGET = 400


class ChopError(RuntimeError):
    """The randomised search did not find a split or an irreducibility proof."""


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator so that every seed gives a reproducible stream."""
    return np.random.Generator(np.random.Philox(int(seed)))


@dataclass
class GModule:
    n: int
    gens: list[BitMatrix]
    label: Partition | None = None
    _int_rows: list[list[int]] | None = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        if self.gens:
            return self.gens[0].rows
        return self._dim0

    _dim0: int = 1

    def __post_init__(self) -> None:
        if len(self.gens) != max(self.n - 1, 0):
            raise ValueError(f"S_{self.n} needs {max(self.n - 1, 0)} generators")
        if any(g.rows != g.cols or g.rows != self.dim for g in self.gens):
            raise ValueError("generators must be square of equal size")

    def int_rows(self) -> list[list[int]]:
        if self._int_rows is None:
            self._int_rows = [g.int_rows() for g in self.gens]
        return self._int_rows

    def check_relations(self) -> bool:
        """Coxeter relations of S_n on the stored generators."""
        eye = BitMatrix.identity(self.dim)
        g = self.gens
        for i in range(len(g)):
            if g[i] @ g[i] != eye:
                return False
            if i + 1 < len(g):
                b = g[i] @ g[i + 1]
                if b @ b @ b != eye:
                    return False
            for j in range(i + 2, len(g)):
                c = g[i] @ g[j]
                if c @ c != eye:
                    return False
        return True

    def dual(self) -> "GModule":
        # generators are involutions, so the contragredient action is g^T
        return GModule(self.n, [g.T for g in self.gens], self.label, _dim0=self.dim)

    def submodule(self, sub: Subspace) -> "GModule":
        piv = list(sub.pivots)
        gens = [(sub.basis @ g).take_cols(piv) for g in self.gens]
        return GModule(self.n, gens, _dim0=sub.dim)

    def quotient(self, sub: Subspace) -> "GModule":
        keep = sub.non_pivots()
        gens = [sub.reduce(g.take_rows(keep)).take_cols(keep) for g in self.gens]
        return GModule(self.n, gens, _dim0=len(keep))


def _module(n: int, gens: list[BitMatrix], dim: int, label=None) -> GModule:
    return GModule(n, gens, label, _dim0=dim)


def trivial_module(n: int) -> GModule:
    return _module(n, [BitMatrix.identity(1) for _ in range(max(n - 1, 0))], 1)


# -- tabloids and Specht modules --------------------------------------------


@lru_cache(maxsize=64)
def _tabloids(nu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], dict]:
    """Tabloids as row-assignment tuples: entry ``k`` lies in row ``T[k]``."""
    letters = [r for r, size in enumerate(nu) for _ in range(size)]
    tabs = tuple(tuple(t) for t in multiset_permutations(letters)) if letters else ((),)
    return tabs, {t: i for i, t in enumerate(tabs)}


@lru_cache(maxsize=64)
def _swap_perms(nu: tuple[int, ...]) -> tuple[np.ndarray, ...]:
    tabs, index = _tabloids(nu)
    n = sum(nu)
    perms = []
    for i in range(n - 1):
        p = np.empty(len(tabs), dtype=np.intp)
        for k, t in enumerate(tabs):
            s = list(t)
            s[i], s[i + 1] = s[i + 1], s[i]
            p[k] = index[tuple(s)]
        perms.append(p)
    return tuple(perms)


def _perm_matrix(p: np.ndarray) -> BitMatrix:
    m = np.zeros((len(p), len(p)), dtype=np.uint8)
    m[np.arange(len(p)), p] = 1
    return BitMatrix.from_dense(m)


def tabloid_module(nu: Sequence[int]) -> GModule:
    """The permutation module ``M^ν`` on ν-tabloids."""
    nu = tuple(int(x) for x in nu if x)
    n = sum(nu)
    tabs, _ = _tabloids(nu)
    return _module(n, [_perm_matrix(p) for p in _swap_perms(nu)], len(tabs))


def standard_tableaux(lam) -> list[list[list[int]]]:
    """All standard tableaux of shape λ, entries 0..n-1, as lists of rows."""
    lam = as_partition(lam)
    n = lam.size
    out: list[list[list[int]]] = []
    rows: list[list[int]] = [[] for _ in lam]

    def place(k: int) -> None:
        if k == n:
            out.append([r[:] for r in rows])
            return
        for r in range(len(lam)):
            if len(rows[r]) < lam[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                place(k + 1)
                rows[r].pop()

    place(0)
    return out


def _polytabloid_matrix(lam: Partition) -> BitMatrix:
    tabs, index = _tabloids(tuple(lam))
    syt = standard_tableaux(lam)
    dense = np.zeros((len(syt), len(tabs)), dtype=np.uint8)
    ncols = lam[0] if lam else 0
    for row, t in enumerate(syt):
        columns = [[t[r][c] for r in range(len(t)) if c < len(t[r])] for c in range(ncols)]
        for perms in itertools.product(*(itertools.permutations(range(len(c))) for c in columns)):
            assign = [0] * lam.size
            for col, pi in zip(columns, perms):
                for j, entry in enumerate(col):
                    assign[entry] = pi[j]
            dense[row, index[tuple(assign)]] = 1
    return BitMatrix.from_dense(dense)


@lru_cache(maxsize=128)
def specht_in_tabloids(lam: Partition) -> Subspace:
    """Echelon basis of ``S^λ`` inside ``M^λ``."""
    lam = as_partition(lam)
    span = Subspace.from_vectors(_polytabloid_matrix(lam))
    if span.dim != hook_dimension(lam):
        raise AssertionError(f"polytabloids of {lam} have rank {span.dim}")
    return span


def _specht_direct(lam: Partition) -> GModule:
    span = specht_in_tabloids(lam)
    piv = np.asarray(span.pivots, dtype=np.intp)
    gens = [span.basis.take_cols(p[piv]) for p in _swap_perms(tuple(lam))]
    return _module(lam.size, gens, span.dim, lam)


@lru_cache(maxsize=128)
def specht_submodule(lam) -> GModule:
    """``S^λ`` over GF(2), with the action on an echelon polytabloid basis.

    When ``M^{λ'}`` is smaller than ``M^λ`` the module is built as the dual of
    ``S^{λ'}``, which is isomorphic to ``S^λ`` in characteristic 2.
    """
    lam = as_partition(lam)
    if lam.size <= 1:
        return _module(lam.size, [], 1, lam)
    conj = conjugate(lam)
    if multinomial(conj) < multinomial(lam):
        mod = _specht_direct(conj).dual()
        mod.label = lam
        return mod
    return _specht_direct(lam)


@lru_cache(maxsize=128)
def gram_radical_head(mu) -> GModule:
    """``D^μ = S^μ / (S^μ ∩ S^μ⊥)`` for 2-regular μ, built inside ``M^μ``."""
    mu = as_partition(mu)
    if not is_strict(mu):
        raise ValueError(f"{mu} is not 2-regular")
    if mu.size <= 1:
        return _module(mu.size, [], 1, mu)
    spec = _specht_direct(mu)
    basis = specht_in_tabloids(mu).basis
    gram = basis @ basis.T
    rad = gf2.left_kernel(gram)
    head = spec.quotient(rad)
    head.label = mu
    if head.dim != gf2.rank(gram):
        raise AssertionError("quotient dimension differs from Gram rank")
    if not is_irreducible(head):
        raise AssertionError(f"Gram head of {mu} is reducible")
    return head


# -- MeatAxe ----------------------------------------------------------------


def random_recipe(rng: np.random.Generator, ngens: int) -> tuple[tuple[int, ...], ...]:
    """A random algebra element as a sum of short words in the generators."""
    if ngens == 0:
        return ((),)
    terms = int(rng.integers(1, 13))
    return tuple(
        tuple(int(x) for x in rng.integers(0, ngens, size=int(rng.integers(1, 6))))
        for _ in range(terms)
    )


def evaluate_recipe(recipe, module: GModule) -> BitMatrix:
    out = BitMatrix.zeros(module.dim, module.dim)
    for word in recipe:
        term = BitMatrix.identity(module.dim)
        for g in word:
            term = term @ module.gens[g]
        out = out + term
    return out


def _candidate_factors(a: BitMatrix) -> list[int]:
    found: dict[int, None] = {}
    for block in gf2.charpoly_blocks(a):
        for q, _ in gf2.small_factors(block):
            found[q] = None
    return sorted(found, key=lambda q: (gf2.pdeg(q), q))


def find_split(module: GModule, rng: np.random.Generator, budget: int = CHOP_BUDGET):
    """A proper nonzero submodule, or None when the module is irreducible.

    Raises :class:`ChopError` if neither is established within ``budget``
    random algebra elements.
    """
    d = module.dim
    if d <= 1:
        return None
    tgens = None
    for _ in range(budget):
        a = evaluate_recipe(random_recipe(rng, len(module.gens)), module)
        for p in _candidate_factors(a):
            pa = gf2.poly_of_matrix(p, a)
            null = gf2.left_kernel(pa)
            if null.dim != gf2.pdeg(p):
                continue
            # Norton: the kernel is a single p-block, so spinning one vector
            # and one dual vector decides irreducibility
            sub = gf2.spin_up(module.gens, null.basis.take_rows([0]))
            if sub.dim < d:
                return sub
            if tgens is None:
                tgens = [g.T for g in module.gens]
            dual_null = gf2.left_kernel(pa.T)
            dual_sub = gf2.spin_up(tgens, dual_null.basis.take_rows([0]))
            if dual_sub.dim < d:
                return gf2.kernel(dual_sub.basis)
            return None
    raise ChopError(f"no decision for a module of dimension {d} after {budget} elements")


def is_irreducible(module: GModule, seed: int = 0) -> bool:
    return find_split(module, make_rng(seed)) is None


def chop(module: GModule, seed: int = 0) -> list[GModule]:
    """Composition factors, listed bottom-up along a composition series."""
    rng = make_rng(seed)
    out: list[GModule] = []
    stack = [module]
    while stack:
        m = stack.pop()
        if m.dim == 0:
            continue
        sub = find_split(m, rng)
        if sub is None:
            out.append(m)
        else:
            # quotient pushed first so the submodule is processed first
            stack.append(m.quotient(sub))
            stack.append(m.submodule(sub))
    return out


def _int_reduce(ech: list[tuple[int, int]], v: int) -> int:
    for pivot, row in ech:
        if v & pivot:
            v ^= row
    return v


def _standard_basis(module: GModule, start: int):
    """Spin ``start`` one vector at a time, recording how each vector arose."""
    rows = module.int_rows()
    basis = [start]
    steps: list[tuple[int, int]] = []
    ech = [(start & -start, start)]
    i = 0
    while i < len(basis):
        for g, grows in enumerate(rows):
            u = gf2._vecmul(basis[i], grows)
            r = _int_reduce(ech, u)
            if r:
                ech.append((r & -r, r))
                basis.append(u)
                steps.append((i, g))
        i += 1
    return basis, steps


def iso_test(a: GModule, b: GModule, seed: int = 0, budget: int = CHOP_BUDGET) -> bool:
    """Isomorphism test for irreducible modules via standard bases."""
    if a.n != b.n or a.dim != b.dim:
        return False
    d = a.dim
    if d <= 1:
        return all(x == y for x, y in zip(a.gens, b.gens))
    rng = make_rng(seed)
    for _ in range(budget):
        recipe = random_recipe(rng, len(a.gens))
        ta = evaluate_recipe(recipe, a)
        for c in (0, 1):
            shift = BitMatrix.identity(d) if c else BitMatrix.zeros(d, d)
            null_a = gf2.left_kernel(ta + shift)
            if null_a.dim == 1:
                break
        else:
            continue
        null_b = gf2.left_kernel(evaluate_recipe(recipe, b) + shift)
        if null_b.dim != 1:
            return False
        va = null_a.basis.int_rows()[0]
        vb = null_b.basis.int_rows()[0]
        basis_a, steps = _standard_basis(a, va)
        if len(basis_a) != d:
            raise ValueError("iso_test needs irreducible modules")
        rows_b = b.int_rows()
        basis_b = [vb]
        for i, g in steps:
            basis_b.append(gf2._vecmul(basis_b[i], rows_b[g]))
        sa = BitMatrix.from_int_rows(basis_a, d)
        sb = BitMatrix.from_int_rows(basis_b, d)
        if gf2.rank(sb) != d:
            return False
        ia, ib = gf2.inverse(sa), gf2.inverse(sb)
        return all(sa @ ga @ ia == sb @ gb @ ib for ga, gb in zip(a.gens, b.gens))
    raise ChopError("no element with a one-dimensional kernel found")


# -- decomposition matrices -----------------------------------------------


@dataclass
class DecompositionMatrix:
    """``[S^λ : D^μ]`` for λ ⊢ n and 2-regular μ ⊢ n."""

    n: int
    rows: dict[Partition, dict[Partition, int]]
    dims: dict[Partition, int]

    @property
    def columns(self) -> tuple[Partition, ...]:
        return strict_partitions(self.n)

    def entry(self, lam, mu) -> int:
        return self.rows[as_partition(lam)].get(as_partition(mu), 0)

    def row(self, lam) -> dict[Partition, int]:
        return dict(self.rows[as_partition(lam)])

    def problems(self) -> list[str]:
        """Violated structural invariants, empty when all hold."""
        out = []
        for lam, row in self.rows.items():
            for mu, v in row.items():
                if v < 0:
                    out.append(f"negative entry at {lam},{mu}")
                if v and not dominates(mu, lam):
                    out.append(f"entry at {lam},{mu} outside dominance support")
            if is_strict(lam) and row.get(lam, 0) != 1:
                out.append(f"diagonal entry at {lam} is {row.get(lam, 0)}")
            total = sum(v * self.dims[mu] for mu, v in row.items())
            if total != hook_dimension(lam):
                out.append(f"dimensions of row {lam} add to {total}")
        return out

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "rows": {
                format_partition(lam): {format_partition(mu): self.entry(lam, mu) for mu in self.columns}
                for lam in partitions(self.n)
            },
            "dims": {format_partition(mu): self.dims[mu] for mu in self.columns},
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "DecompositionMatrix":
        doc = json.loads(text)
        rows = {
            parse_partition(l): {parse_partition(m): int(v) for m, v in r.items()}
            for l, r in doc["rows"].items()
        }
        dims = {parse_partition(m): int(v) for m, v in doc["dims"].items()}
        return cls(int(doc["n"]), rows, dims)


def _chop_specht(args: tuple[Partition, int]) -> list[GModule]:
    lam, seed = args
    return chop(specht_submodule(lam), seed)


def label_factors(factors: Sequence[GModule], heads: dict[Partition, GModule], seed: int) -> dict[Partition, int]:
    """Count each factor against the irreducibles; every factor must match exactly one."""
    counts: dict[Partition, int] = {}
    for f in factors:
        hits = [mu for mu, d in heads.items() if d.dim == f.dim and iso_test(f, d, seed)]
        if len(hits) != 1:
            raise AssertionError(f"factor of dimension {f.dim} matches {hits}")
        counts[hits[0]] = counts.get(hits[0], 0) + 1
    return counts


def compute_decomposition_matrix(n: int, seed: int = 0, jobs: int = 1) -> DecompositionMatrix:
    heads = {mu: gram_radical_head(mu) for mu in strict_partitions(n)}
    lams = partitions(n)
    work = [(lam, seed) for lam in lams]
    if jobs > 1 and len(lams) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chopped = list(pool.map(_chop_specht, work))
    else:
        chopped = [_chop_specht(w) for w in work]
    rows = {lam: label_factors(f, heads, seed) for lam, f in zip(lams, chopped)}
    dm = DecompositionMatrix(n, rows, {mu: h.dim for mu, h in heads.items()})
    bad = dm.problems()
    if bad:
        raise AssertionError("; ".join(bad))
    return dm


_memo: dict[tuple[int, int], DecompositionMatrix] = {}


def decomposition_matrix(
    n: int, seed: int = 0, cache_dir: Path | str | None = None, jobs: int = 1
) -> DecompositionMatrix:
    """2-modular decomposition matrix of S_n, memoised and optionally cached on disk."""
    from .cache import load_or_build

    key = (n, seed)
    if key not in _memo:
        _memo[key] = load_or_build(
            cache_dir,
            f"decomp2_n{n}.json",
            lambda: compute_decomposition_matrix(n, seed, jobs),
            DecompositionMatrix.from_json,
            lambda dm: dm.to_json(),
        )
    return _memo[key]


def brauer_characters(dm: DecompositionMatrix):
    """Brauer characters of the ``D^μ`` from the unitriangular strict rows.

    Returns a map μ -> OddClassFunction.  Solved top-down in dominance.
    """
    from .characters import restrict_odd, specht_character

    phi = {}
    for mu in dm.columns:
        f = restrict_odd(specht_character(mu))
        for nu, v in dm.rows[mu].items():
            if nu != mu and v:
                f = f - phi[nu] * v
        phi[mu] = f
    return phi


def brauer_consistency(dm: DecompositionMatrix) -> list[Partition]:
    """Rows λ whose odd-class character is not ``Σ_μ [S^λ:D^μ] φ_μ``."""
    from .characters import restrict_odd, specht_character, zero

    phi = brauer_characters(dm)
    bad = []
    for lam in partitions(dm.n):
        total = zero(dm.n, odd=True)
        for mu, v in dm.rows[lam].items():
            total = total + phi[mu] * v
        if total != restrict_odd(specht_character(lam)):
            bad.append(lam)
    return bad
