"""Level complexes, bigraded homology ranks, and the two-step filtration.

The level complex at doubled Alexander grading s is spanned by the
generators of that level with the boundary counting rectangles empty of
all markings; it splits along maslov2 into blocks mapping m2 -> m2 - 2,
so ranks per bigrading fall out of two sparse eliminations per block.

The filtered boundary (X markings allowed) never raises alex2, so the
generators at or below a cutoff span a subcomplex.  The rank of the map
on homology induced by its inclusion is computed per Maslov slice as

    dim Z_S - dim(Z_S  intersect  image of the full boundary)

with the image intersected against the subcomplex coordinates by an
elimination whose bit order lists subcomplex generators first.  Slices
outside the Maslov window [-2(n-1), 0] are skipped: the total homology
of the filtered complex is (F2 + F2[-1]) to the (n-1), so the target
vanishes there and the induced map contributes nothing.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .errors import InconsistentComplex, NotDivisible
from .generators import (
    DEFAULT_MAX_GENERATORS,
    encode_perms,
    enumerate_all,
    generators_in_level,
    generators_up_to,
)
from .gradings import GradingCalculator
from .rectangles import MODE_FILTERED, MODE_LEVEL, RectangleCounter, boundary_entries


@dataclass
class LevelComplex:
    """One Alexander level with its level-preserving boundary."""

    alex2: int
    n: int
    gens: np.ndarray          # (m, n) permutations, canonical order
    maslov2: np.ndarray       # (m,)
    rows: np.ndarray          # boundary entries: target indices
    cols: np.ndarray          # boundary entries: source indices

    @property
    def size(self):
        return len(self.gens)

    @property
    def is_empty(self):
        return len(self.gens) == 0


def _canonical_order(gens, maslov2):
    """Sort by maslov2 then lexicographic permutation."""
    if len(gens) == 0:
        return gens, maslov2
    keys = [gens[:, c] for c in reversed(range(gens.shape[1]))]
    order = np.lexsort(keys + [maslov2])
    return gens[order], maslov2[order]


def build_level_complex(grid, alex2, max_generators=DEFAULT_MAX_GENERATORS,
                        calc=None, counter=None, check_d2=False):
    calc = calc or GradingCalculator(grid)
    counter = counter or RectangleCounter(grid)
    gens = generators_in_level(calc, alex2, max_generators)
    m2 = calc.maslov2_batch(gens) if len(gens) else np.empty(0, dtype=np.int64)
    gens, m2 = _canonical_order(gens, m2)
    lookup = {int(k): i for i, k in enumerate(encode_perms(gens, calc.n))} if len(gens) else {}
    rows, cols = boundary_entries(counter, gens, lookup, MODE_LEVEL)
    lc = LevelComplex(alex2=alex2, n=calc.n, gens=gens, maslov2=m2, rows=rows, cols=cols)
    if check_d2:
        verify_d2(lc.rows, lc.cols, lc.size)
    return lc


def verify_d2(rows, cols, size):
    """Raise InconsistentComplex unless the sparse boundary squares to zero."""
    by_source = [[] for _ in range(size)]
    for r, c in zip(rows, cols):
        by_source[int(c)].append(int(r))
    for c in range(size):
        acc = set()
        for mid in by_source[c]:
            acc ^= set(by_source[mid])
        if acc:
            raise InconsistentComplex(f"d^2 != 0 from generator {c}")


def level_homology_ranks(lc):
    """Homology ranks of one level complex, keyed by maslov2.

    The boundary maps the maslov2 = m block into m - 2; the rank at m is
    dim(block) - rank(out of m) - rank(into m).
    """
    if lc.is_empty:
        return {}
    values, starts = np.unique(lc.maslov2, return_index=True)
    index_of = {int(v): i for i, v in enumerate(values)}
    sizes = np.diff(np.append(starts, len(lc.maslov2)))
    offsets = {int(v): int(starts[i]) for i, v in enumerate(values)}

    block_entries = {int(v): ([], []) for v in values}
    for r, c in zip(lc.rows, lc.cols):
        m2 = int(lc.maslov2[int(c)])
        br, bc = block_entries[m2]
        br.append(int(r) - offsets[m2 - 2])
        bc.append(int(c) - offsets[m2])

    block_rank = {}
    for v in block_entries:
        br, bc = block_entries[v]
        if not br:
            block_rank[v] = 0
            continue
        n_rows = int(sizes[index_of[v - 2]])
        n_cols = int(sizes[index_of[v]])
        block_rank[v] = gf2.matrix_rank(br, bc, n_rows, n_cols)

    ranks = {}
    for i, v in enumerate(values):
        m2 = int(v)
        r = int(sizes[i]) - block_rank.get(m2, 0) - block_rank.get(m2 + 2, 0)
        if r:
            ranks[m2] = r
    return ranks


@dataclass
class BigradedRanks:
    """Nonzero homology ranks keyed by (maslov2, alex2)."""

    ranks: dict = field(default_factory=dict)

    def __post_init__(self):
        self.ranks = {k: int(v) for k, v in self.ranks.items() if v}
        for (m2, a2), v in self.ranks.items():
            if v < 0:
                raise ValueError(f"negative rank {v} at {(m2, a2)}")

    def total_rank(self):
        return sum(self.ranks.values())

    def alex_levels(self):
        return sorted({a2 for _, a2 in self.ranks})

    def level_poincare(self, alex2):
        """Maslov distribution of one Alexander level: {maslov2: rank}."""
        return {m2: v for (m2, a2), v in self.ranks.items() if a2 == alex2}

    def shifted(self, maslov2_shift, alex2_shift):
        return BigradedRanks(
            {(m2 + maslov2_shift, a2 + alex2_shift): v for (m2, a2), v in self.ranks.items()}
        )

    def __eq__(self, other):
        return isinstance(other, BigradedRanks) and self.ranks == other.ranks


def inflate(hat, k_minus_l):
    """Tensor with (F2 + F2[-1,-1]) repeatedly: the tilde from the hat."""
    ranks = dict(hat.ranks)
    for _ in range(k_minus_l):
        out = {}
        for (m2, a2), v in ranks.items():
            out[(m2, a2)] = out.get((m2, a2), 0) + v
            out[(m2 - 2, a2 - 2)] = out.get((m2 - 2, a2 - 2), 0) + v
        ranks = out
    return BigradedRanks(ranks)


def deflate_to_hat(tilde, k_minus_l):
    """Exact division by (1 + mt) to the (k - l): the hat from the tilde.

    Processes terms from the top in (alex2, maslov2) order; failure to
    divide exactly raises NotDivisible.
    """
    ranks = dict(tilde.ranks)
    for _ in range(k_minus_l):
        quotient = {}
        rem = {k: v for k, v in ranks.items() if v}
        while rem:
            key = max(rem, key=lambda k: (k[1], k[0]))
            coeff = rem[key]
            if coeff < 0:
                raise NotDivisible("bigraded ranks are not divisible by (1 + mt)")
            quotient[key] = coeff
            lower = (key[0] - 2, key[1] - 2)
            rem[lower] = rem.get(lower, 0) - coeff
            del rem[key]
            if rem.get(lower) == 0:
                del rem[lower]
        if any(v < 0 for v in quotient.values()):
            raise NotDivisible("bigraded ranks are not divisible by (1 + mt)")
        ranks = quotient
    return BigradedRanks(ranks)


def homology_ranks(grid, levels=None, max_generators=DEFAULT_MAX_GENERATORS,
                   threads=1, check_d2=False):
    """Tilde homology ranks, for all levels or a chosen subset."""
    calc = GradingCalculator(grid)
    counter = RectangleCounter(grid)
    if levels is None:
        levels = range(calc.level_floor(), calc.level_ceiling() + 1)
    levels = sorted(set(int(s) for s in levels))

    def one(s):
        lc = build_level_complex(grid, s, max_generators, calc=calc,
                                 counter=counter, check_d2=check_d2)
        return s, level_homology_ranks(lc)

    results = {}
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for s, ranks in pool.map(one, levels):
                results[s] = ranks
    else:
        for s in levels:
            s, ranks = one(s)
            results[s] = ranks

    out = {}
    for s in sorted(results):
        for m2, r in results[s].items():
            out[(m2, s)] = r
    return BigradedRanks(out)


@dataclass
class TwoStepFiltration:
    """Subcomplex of generators at or below an Alexander cutoff.

    Holds the sub generators with the filtered boundary restricted to
    them; the full complex is only ever touched one Maslov slice at a
    time by induced_map_rank.
    """

    cutoff_alex2: int
    n: int
    gens: np.ndarray
    maslov2: np.ndarray
    alex2: np.ndarray
    rows: np.ndarray
    cols: np.ndarray


def build_two_step(grid, cutoff_alex2, max_generators=DEFAULT_MAX_GENERATORS,
                   calc=None, counter=None):
    calc = calc or GradingCalculator(grid)
    counter = counter or RectangleCounter(grid)
    gens = generators_up_to(calc, cutoff_alex2, max_generators)
    if len(gens):
        m2 = calc.maslov2_batch(gens)
        a2 = calc.alex2_batch(gens)
        gens, m2 = _canonical_order(gens, m2)
        a2 = calc.alex2_batch(gens)
    else:
        m2 = np.empty(0, dtype=np.int64)
        a2 = np.empty(0, dtype=np.int64)
    lookup = {int(k): i for i, k in enumerate(encode_perms(gens, calc.n))} if len(gens) else {}
    rows, cols = boundary_entries(counter, gens, lookup, MODE_FILTERED)
    return TwoStepFiltration(cutoff_alex2=cutoff_alex2, n=calc.n, gens=gens,
                             maslov2=m2, alex2=a2, rows=rows, cols=cols)


def _sub_cycles_by_maslov(filt):
    """Kernel bases of the filtered boundary on the subcomplex, per maslov2."""
    order = {}
    for i, v in enumerate(filt.maslov2):
        order.setdefault(int(v), []).append(i)
    by_source = {}
    for r, c in zip(filt.rows, filt.cols):
        by_source.setdefault(int(c), []).append(int(r))

    cycles = {}
    for m2, members in order.items():
        pos_in_slice = {g: k for k, g in enumerate(members)}
        targets = sorted(order.get(m2 - 2, []))
        tpos = {g: k for k, g in enumerate(targets)}
        rows = []
        cols = []
        for g in members:
            for t in by_source.get(g, ()):
                rows.append(tpos[t])
                cols.append(pos_in_slice[g])
        kern = gf2.kernel_basis(rows, cols, len(targets), len(members))
        if kern:
            cycles[m2] = (members, kern)
    return cycles


def induced_map_rank(grid, cutoff_alex2, max_generators=DEFAULT_MAX_GENERATORS,
                     filt=None):
    """Rank of H(sub) -> H(full) for the two-step filtration.

    Per Maslov slice m2 the contribution is dim Z_S - dim(Z_S meet B),
    where B is the image of the full filtered boundary from slice
    m2 + 2.  The full slices are materialized only for the m2 values
    where Z_S is nonzero and the target homology can be nonzero.
    """
    calc = GradingCalculator(grid)
    counter = RectangleCounter(grid)
    if filt is None:
        filt = build_two_step(grid, cutoff_alex2, max_generators,
                              calc=calc, counter=counter)
    if len(filt.gens) == 0:
        return 0
    cycles = _sub_cycles_by_maslov(filt)
    if not cycles:
        return 0

    window_lo = -2 * (calc.n - 1)
    needed = [m2 for m2 in cycles if window_lo <= m2 <= 0]
    if not needed:
        return 0

    all_gens = enumerate_all(calc, max_generators)
    all_m2 = calc.maslov2_batch(all_gens)

    sub_keys = set(int(k) for k in encode_perms(filt.gens, calc.n))

    total = 0
    for m2 in needed:
        members, kern = cycles[m2]
        # Full slice at m2, subcomplex generators first (low bits).
        slice_mask = all_m2 == m2
        slice_gens = all_gens[slice_mask]
        keys = encode_perms(slice_gens, calc.n)
        in_sub = np.array([int(k) in sub_keys for k in keys], dtype=bool)
        ordered = np.concatenate([slice_gens[in_sub], slice_gens[~in_sub]])
        lookup = {int(k): i for i, k in enumerate(encode_perms(ordered, calc.n))}
        n_sub = int(in_sub.sum())

        # Bit positions of the sub generators of this slice must agree
        # between the cycle vectors and the image vectors.
        member_pos = {}
        for g in members:
            key = int(encode_perms(filt.gens[g][None, :], calc.n)[0])
            member_pos[g] = lookup[key]

        sources = all_gens[all_m2 == m2 + 2]
        rows, cols = boundary_entries(counter, sources, lookup, MODE_FILTERED)
        image_vectors = gf2.image_in_prefix(rows, cols, len(ordered),
                                            len(sources), n_sub)

        cycle_vectors = []
        for tag in kern:
            support = []
            for k, g in enumerate(members):
                if (int(tag[k >> 6]) >> (k & 63)) & 1:
                    support.append(member_pos[g])
            cycle_vectors.append(gf2.vector_from_indices(support, n_sub))

        z_dim = len(cycle_vectors)
        meet = gf2.span_intersection_dim(cycle_vectors, image_vectors, n_sub)
        total += z_dim - meet
    return total
