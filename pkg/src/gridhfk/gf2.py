"""Bit-packed linear algebra over GF(2).

Vectors pack 64 coordinates per uint64 word; a subspace is held as an
echelon basis keyed by leading (highest set) bit.  That one structure
answers everything the homology layer needs: ranks, kernels, and
echelon spans whose leading-bit positions reveal membership facts such
as "which part of the image lies inside a chosen coordinate subspace".

Reducing a vector against the basis is deterministic, so every caller
sees results independent of insertion order chunking; callers that need
canonical output sort their basis vectors themselves.
"""

from __future__ import annotations

import numpy as np


def zero_vector(width_bits):
    return np.zeros((width_bits + 63) // 64, dtype=np.uint64)


def vector_from_indices(indices, width_bits):
    v = zero_vector(width_bits)
    for i in indices:
        v[i >> 6] ^= np.uint64(1 << (i & 63))
    return v


def leading_bit(vec):
    """Index of the highest set bit, or -1 for the zero vector."""
    nz = np.nonzero(vec)[0]
    if len(nz) == 0:
        return -1
    w = int(nz[-1])
    return (w << 6) + int(vec[w]).bit_length() - 1


class XorBasis:
    """Echelon basis over GF(2) with vectors keyed by leading bit."""

    def __init__(self, width_bits):
        self.width_bits = width_bits
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """XOR pivots into ``vec`` until its lead is fresh or it is zero.

        Mutates and returns ``vec``.
        """
        while True:
            lead = leading_bit(vec)
            if lead < 0 or lead not in self.pivots:
                return vec
            vec ^= self.pivots[lead]

    def add(self, vec):
        """Insert a vector; returns its pivot position or -1 if dependent."""
        vec = self.reduce(vec)
        lead = leading_bit(vec)
        if lead >= 0:
            self.pivots[lead] = vec
        return lead

    def contains(self, vec):
        return leading_bit(self.reduce(vec.copy())) < 0

    def basis_rows(self):
        return [self.pivots[lead] for lead in sorted(self.pivots)]


def sparse_columns(rows, cols, n_cols):
    """Bucket sparse entries into per-column row-index lists."""
    buckets = [[] for _ in range(n_cols)]
    for r, c in zip(rows, cols):
        buckets[int(c)].append(int(r))
    return buckets


def matrix_rank(rows, cols, n_rows, n_cols):
    """Rank of a sparse GF(2) matrix given by entry index arrays."""
    basis = XorBasis(n_rows)
    for support in sparse_columns(rows, cols, n_cols):
        if support:
            basis.add(vector_from_indices(support, n_rows))
    return basis.rank


def kernel_basis(rows, cols, n_rows, n_cols):
    """Basis of the right kernel, as vectors over the column space.

    Columns are processed in order with an identity tag appended; a
    column that reduces to zero donates its tag as a kernel vector.
    """
    basis = XorBasis(n_rows)
    tags = {}
    kernel = []
    for j, support in enumerate(sparse_columns(rows, cols, n_cols)):
        vec = vector_from_indices(support, n_rows)
        tag = vector_from_indices([j], n_cols)
        while True:
            lead = leading_bit(vec)
            if lead < 0:
                kernel.append(tag)
                break
            if lead not in basis.pivots:
                basis.pivots[lead] = vec
                tags[lead] = tag
                break
            vec = vec ^ basis.pivots[lead]
            tag = tag ^ tags[lead]
    return kernel


def span_intersection_dim(vectors_a, vectors_b, width_bits):
    """dim(span A  intersect  span B) for two lists of packed vectors."""
    basis_a = XorBasis(width_bits)
    for v in vectors_a:
        basis_a.add(v.copy())
    basis_b = XorBasis(width_bits)
    for v in vectors_b:
        basis_b.add(v.copy())
    joint = XorBasis(width_bits)
    for v in basis_a.basis_rows():
        joint.add(v.copy())
    for v in basis_b.basis_rows():
        joint.add(v.copy())
    return basis_a.rank + basis_b.rank - joint.rank


def image_in_prefix(rows, cols, n_rows, n_cols, prefix_bits):
    """Echelon basis of (column span) intersected with the first rows.

    Row indices below ``prefix_bits`` occupy the low bit positions, so
    an echelon vector whose lead falls under the prefix lies entirely in
    the prefix coordinate subspace, and those vectors span exactly the
    intersection of the image with that subspace.  Returned vectors are
    cropped to prefix width.
    """
    basis = XorBasis(n_rows)
    for support in sparse_columns(rows, cols, n_cols):
        if support:
            basis.add(vector_from_indices(support, n_rows))
    prefix_words = (prefix_bits + 63) // 64
    out = []
    for lead in sorted(basis.pivots):
        if lead >= prefix_bits:
            break
        cropped = zero_vector(prefix_bits)
        cropped[:] = basis.pivots[lead][:prefix_words]
        out.append(cropped)
    return out
