"""Permutation signs used by alternating-tensor evaluation."""

from functools import lru_cache
from itertools import permutations as _permutations


def perm_sign(seq):
    """Sign (+1 or -1) of a sequence of distinct comparables, by inversion count."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


@lru_cache(maxsize=None)
def signed_permutations(m):
    """All permutations of range(m), each paired with its sign."""
    return tuple((p, perm_sign(p)) for p in _permutations(range(m)))


def sort_with_sign(seq):
    """Return (sorted tuple, sign of the sorting rearrangement).

    Returns (None, 0) when the sequence has repeated entries.
    """
    t = tuple(seq)
    if len(set(t)) != len(t):
        return None, 0
    return tuple(sorted(t)), perm_sign(t)
