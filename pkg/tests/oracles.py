"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive: literal sentinel insertion, O((n+m)!)
enumeration filters, partition counting by recursion.  None of it imports the
package internals, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

from itertools import permutations


def monotone_runs(seq):
    """Split a distinct-integer sequence into maximal monotone runs.

    Adjacent runs share their boundary element.  A 1-element sequence is a
    single run of length 1.
    """
    seq = list(seq)
    if not seq:
        return []
    if len(seq) == 1:
        return [seq]
    runs = []
    start = 0
    direction = seq[1] > seq[0]
    for i in range(1, len(seq) - 1):
        step = seq[i + 1] > seq[i]
        if step != direction:
            runs.append(seq[start : i + 1])
            start = i
            direction = step
    runs.append(seq[start:])
    return runs


def runs_after_low_prefix(seq):
    """Maximal monotone runs of 0++seq, with the sentinel really prepended."""
    return len(monotone_runs([0] + list(seq)))


def interior_peaks(seq):
    seq = list(seq)
    return [i for i in range(2, len(seq)) if seq[i - 2] < seq[i - 1] > seq[i]]


def padded_peaks(seq):
    """Interior peaks of 0++seq++0, sentinels really materialised."""
    return interior_peaks([0] + list(seq) + [0])


def descent_positions(seq):
    seq = list(seq)
    return [i for i in range(1, len(seq)) if seq[i - 1] > seq[i]]


def is_subsequence(needle, haystack):
    it = iter(haystack)
    return all(v in it for v in needle)


def brute_shuffles(p, s):
    """All words containing both p and s as subsequences, by full filter.

    Enumerates every permutation of the combined ground set and keeps the
    ones whose restriction to each ground set matches.  Exponential; keep
    n+m small.
    """
    p, s = tuple(p), tuple(s)
    universe = sorted(p + s)
    out = []
    for w in permutations(universe):
        if is_subsequence(p, w) and is_subsequence(s, w):
            out.append(w)
    return out


def pascal_binomial(n, k):
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def box_partition_counts(rows, cols):
    """Number of partitions of j fitting in a rows x cols box, for every j.

    Returns a dict j -> count.  Recursive first-row split, no q-algebra.
    """

    def count(j, max_part, parts_left):
        if j == 0:
            return 1
        if parts_left == 0 or max_part == 0:
            return 0
        total = 0
        for first in range(min(j, max_part), 0, -1):
            total += count(j - first, first, parts_left - 1)
        return total

    return {j: count(j, cols, rows) for j in range(rows * cols + 1)}


def gaussian_binomial_coeffs(n, k):
    """Coefficient dict of the Gaussian binomial via box partition counting."""
    if k < 0 or k > n:
        return {}
    counts = box_partition_counts(k, n - k)
    return {j: c for j, c in counts.items() if c}
