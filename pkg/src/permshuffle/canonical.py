"""Canonical run profiles and the run-rebalancing move.

Permutations with the same (udr, pk, des) and length fall into four families
keyed by the opening direction and the parity of the run count.  Within each
family there is one distinguished profile whose first two runs absorb all the
length, every later run having length exactly 2:

=====  ========  =========  ==================  =============
class  chi_plus  run count  first two lengths   (udr, pk)
=====  ========  =========  ==================  =============
1      0         2k         n-d-k+1, d-k+2      (2k,   k)
2      0         2k+1       n-d-k,   d-k+2      (2k+1, k)
3      1         2k+1       d-k+1,   n-d-k+1    (2k+2, k)
4      1         2k+2       d-k+1,   n-d-k      (2k+3, k)
=====  ========  =========  ==================  =============

``d`` is the descent count.  The rebalancing move at run ``ell`` (valid when
``ell > 2`` and that run has length >= 3) moves one unit of length from run
``ell`` to run ``ell - 2``; it preserves length, chi_plus, (udr, pk, des).
Repeatedly rebalancing at the largest valid ``ell`` reaches the canonical
profile: once every run beyond the second has length 2, the profile is pinned
by (chi_plus, run count, n, d) alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .core import Permutation, RunProfile, run_profile, stat_bundle


class InfeasibleClassError(ValueError):
    """The (class, n, k, d) combination admits no permutation."""


def profile_to_descents(profile: RunProfile, n: int) -> tuple[int, ...]:
    """Descent positions of any permutation realising ``profile``.

    Descents are exactly the positions interior to descending runs.

    >>> from .core import RunProfile
    >>> profile_to_descents(RunProfile((4, 5, 2, 2), 0), 10)
    (4, 5, 6, 7, 9)
    >>> profile_to_descents(RunProfile((3, 4, 2), 1), 7)
    (1, 2, 6)
    """
    if profile.n() != n:
        raise ValueError(f"profile spans {profile.n()} positions, expected {n}")
    if profile.b >= 2 and any(t < 2 for t in profile.lengths):
        raise ValueError(f"run lengths must be >= 2 when several runs exist: {profile}")
    if profile.b == 1 and profile.lengths[0] != n:
        raise ValueError("single-run profile must cover the whole word")
    descents = []
    start = 1
    for r in range(1, profile.b + 1):
        end = start + profile.lengths[r - 1] - 1
        if not profile.run_ascends(r):
            descents.extend(range(start, end))
        start = end
    return tuple(descents)


def perm_with_descents(n: int, descents) -> Permutation:
    """The descending-block word over 1..n with the given descent set.

    Splits 1..n into blocks at the descent positions; block ``i`` takes the
    largest unused values, written increasingly.  Block boundaries then all
    descend and block interiors all ascend, so the descent set is exact.

    >>> perm_with_descents(5, {2, 4}).values
    (4, 5, 2, 3, 1)
    >>> perm_with_descents(3, ()).values
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    D = sorted(set(descents))
    if D and not (1 <= D[0] and D[-1] <= n - 1):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {D}")
    bounds = [0] + D + [n]
    word: list[int] = []
    top = n
    for a, b in zip(bounds, bounds[1:]):
        size = b - a
        word.extend(range(top - size + 1, top + 1))
        top -= size
    return Permutation(tuple(word))


@dataclass(frozen=True)
class CanonicalClassSpec:
    class_id: int
    n: int
    k: int
    d: int
    profile: RunProfile

    def serialize(self) -> str:
        return f"{self.class_id}:{self.n}:{self.k}:{self.d}"

    @classmethod
    def parse_params(cls, text: str) -> tuple[int, int, int, int]:
        parts = text.split(":")
        if len(parts) != 4:
            raise ValueError(f"expected class:n:k:d, got {text!r}")
        return tuple(int(x) for x in parts)  # type: ignore[return-value]


def class_udr_pk(class_id: int, k: int) -> tuple[int, int]:
    """The (udr, pk) pair every member of the class carries."""
    if class_id not in (1, 2, 3, 4):
        raise ValueError(f"class must be 1..4, got {class_id}")
    return 2 * k + class_id - 1, k


def canonical_spec(class_id: int, n: int, k: int, d: int) -> CanonicalClassSpec:
    """Profile of the canonical class, or :class:`InfeasibleClassError`.

    >>> canonical_spec(1, 10, 2, 5).profile
    RunProfile(lengths=(4, 5, 2, 2), chi_plus=0)
    >>> canonical_spec(4, 10, 2, 5).profile
    RunProfile(lengths=(4, 3, 2, 2, 2, 2), chi_plus=1)
    """
    if class_id not in (1, 2, 3, 4):
        raise ValueError(f"class must be 1..4, got {class_id}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0 or d < 0 or d > n - 1:
        raise InfeasibleClassError(f"need k >= 0 and 0 <= d <= n-1, got k={k} d={d}")
    chi_plus = 0 if class_id in (1, 2) else 1
    if class_id == 1:
        b, t1, t2 = 2 * k, n - d - k + 1, d - k + 2
    elif class_id == 2:
        b, t1, t2 = 2 * k + 1, n - d - k, d - k + 2
    elif class_id == 3:
        b, t1, t2 = 2 * k + 1, d - k + 1, n - d - k + 1
    else:
        b, t1, t2 = 2 * k + 2, d - k + 1, n - d - k
    if b < 1:
        raise InfeasibleClassError(f"class {class_id} with k={k} has no runs")
    if b == 1:
        if t1 != n:
            raise InfeasibleClassError(
                f"single-run class needs first length {n}, formula gives {t1}"
            )
        lengths: tuple[int, ...] = (t1,)
    else:
        if t1 < 2:
            raise InfeasibleClassError(f"first run length {t1} < 2")
        if t2 < 2:
            raise InfeasibleClassError(f"second run length {t2} < 2")
        lengths = (t1, t2) + (2,) * (b - 2)
    return CanonicalClassSpec(class_id, n, k, d, RunProfile(lengths, chi_plus))


def feasible_class_params(n: int) -> Iterator[tuple[int, int, int]]:
    """All (class_id, k, d) with a nonempty canonical class at length n."""
    for class_id in (1, 2, 3, 4):
        for k in range(0, n):
            for d in range(0, n):
                try:
                    canonical_spec(class_id, n, k, d)
                except InfeasibleClassError:
                    continue
                yield class_id, k, d


def canonical_member(spec: CanonicalClassSpec) -> Permutation:
    """The descending-block representative of the class."""
    return perm_with_descents(spec.n, profile_to_descents(spec.profile, spec.n))


class Classification(NamedTuple):
    class_id: int
    k: int
    d: int
    is_canonical: bool


def classify(p: Permutation) -> Classification:
    """Class, peak count, descent count, and canonical-profile membership.

    >>> from .core import from_word
    >>> classify(from_word((6, 5, 3, 4, 7, 9, 2)))
    Classification(class_id=3, k=1, d=3, is_canonical=True)
    >>> classify(from_word((6, 3, 5, 1, 2, 7, 4)))
    Classification(class_id=3, k=2, d=3, is_canonical=False)
    """
    if len(p) < 2:
        raise ValueError("classification needs length >= 2")
    prof = run_profile(p)
    bundle = stat_bundle(p)
    class_id = {(0, 0): 1, (0, 1): 2, (1, 1): 3, (1, 0): 4}[(prof.chi_plus, prof.b % 2)]
    spec = canonical_spec(class_id, len(p), bundle.pk, bundle.des)
    return Classification(class_id, bundle.pk, bundle.des, spec.profile == prof)


def shifted_profile(profile: RunProfile, ell: int) -> RunProfile:
    """Move one unit of length from run ``ell`` to run ``ell - 2``."""
    if not 2 < ell <= profile.b:
        raise ValueError(f"run index {ell} out of range 3..{profile.b}")
    if profile.lengths[ell - 1] < 3:
        raise ValueError(f"run {ell} has length {profile.lengths[ell - 1]} < 3")
    lengths = list(profile.lengths)
    lengths[ell - 3] += 1
    lengths[ell - 1] -= 1
    return RunProfile(tuple(lengths), profile.chi_plus)


def rebalance(p: Permutation, ell: int) -> Permutation:
    """Deterministic member of the rebalanced family over the same ground set.

    The member is the descending-block construction for the shifted profile,
    relabelled through the sorted ground set of ``p``.

    >>> from .core import from_word
    >>> rebalance(from_word((6, 3, 5, 1, 2, 7, 4)), 4).values
    (7, 4, 5, 6, 2, 3, 1)
    """
    prof = run_profile(p)
    target = shifted_profile(prof, ell)
    base = perm_with_descents(len(p), profile_to_descents(target, len(p)))
    ground = sorted(p.values)
    return Permutation(tuple(ground[v - 1] for v in base))


def in_rebalance_set(q: Permutation, p: Permutation, ell: int) -> bool:
    """True iff ``q`` realises the profile of ``p`` rebalanced at ``ell``."""
    if q.ground_set() != p.ground_set():
        return False
    try:
        target = shifted_profile(run_profile(p), ell)
    except ValueError:
        return False
    return run_profile(q) == target


def next_reduction(p: Permutation) -> Optional[int]:
    """Largest run index > 2 with length >= 3, or None when canonical.

    >>> from .core import from_word
    >>> next_reduction(from_word((7, 4, 2, 6, 3, 1, 5)))
    3
    >>> next_reduction(from_word((6, 5, 3, 4, 7, 9, 2))) is None
    True
    """
    prof = run_profile(p)
    for ell in range(prof.b, 2, -1):
        if prof.lengths[ell - 1] >= 3:
            return ell
    return None
