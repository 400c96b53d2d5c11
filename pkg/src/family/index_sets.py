# -----------------------------------------------------------------------------
# Index Set Enumeration
#
# Streams the integer pairs (m, n) of I_N, its halves, J_q and J_{p,N}
# without materialising them. Pairs are emitted row by row in increasing m.
# -----------------------------------------------------------------------------
from typing import Iterator, Tuple

import numpy as np

from family.schema import IndexSet, IndexVariant


def residues(N: int, a: int, b: int) -> np.ndarray:
    """int64 array of 1 <= n <= N with n ≡ a (mod b), increasing."""
    first = (a - 1) % b + 1
    if N < first:
        return np.zeros(0, dtype=np.int64)
    return np.arange(first, N + 1, b, dtype=np.int64)


def residue_count(N: int, a: int, b: int) -> int:
    """M = #{n <= N : n ≡ a (mod b)}."""
    first = (a - 1) % b + 1
    return 0 if N < first else (N - first) // b + 1


def gap_top_index(index_set: IndexSet) -> int:
    """N_p = ⌊(N - p - a)/b⌋ for J_{p,N}; negative when the set is empty."""
    return (index_set.N - index_set.parameter - index_set.a) // index_set.b


def index_set_size(index_set: IndexSet) -> int:
    """Exact cardinality without enumeration."""
    if index_set.variant == IndexVariant.COLUMN:
        return max(-(-(index_set.parameter - index_set.a) // index_set.b), 0)
    if index_set.variant == IndexVariant.GAP:
        return max(gap_top_index(index_set) + 1, 0)
    M = residue_count(index_set.N, index_set.a, index_set.b)
    full = M * (M - 1)
    return full if index_set.variant == IndexVariant.FULL else full // 2


def enumerate_pairs(index_set: IndexSet) -> Iterator[Tuple[int, int]]:
    """Yield each admissible (m, n) exactly once.

    COLUMN yields (p, q) for p in J_q, i.e. the pairs of I_N⁻ whose larger
    element is q. GAP yields (q + p, q) for q in J_{p,N}, i.e. the pairs of
    I_N⁺ with difference p.
    """
    a, b, N = index_set.a, index_set.b, index_set.N
    variant = index_set.variant

    if variant == IndexVariant.COLUMN:
        q = index_set.parameter
        for p in range(a, q, b):
            yield p, q
        return

    if variant == IndexVariant.GAP:
        p = index_set.parameter
        top = gap_top_index(index_set)
        for j in range(top + 1):
            q = a + j * b
            yield q + p, q
        return

    values = range((a - 1) % b + 1, N + 1, b)
    for m in values:
        for n in values:
            if m == n:
                continue
            if variant == IndexVariant.LOWER and m > n:
                continue
            if variant == IndexVariant.UPPER and m < n:
                continue
            yield m, n
