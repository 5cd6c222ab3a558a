"""Permutations of finite integer ground sets and their descent/peak/run statistics.

A permutation here is a word of distinct positive integers; the ground set is
whatever values appear.  Positions are 1-based in every reported set (descent
sets, peak sets, anchor indices) because that is how the statistics are
conventionally defined.

Statistics provided:

* ``des_set`` / ``des`` / ``maj`` -- positions i with w[i] > w[i+1], their
  count, and their sum.
* ``pk_set`` / ``pk`` -- interior positions i (2 <= i <= n-1) with
  w[i-1] < w[i] > w[i+1], and their count.
* ``epk`` -- peaks of the word padded with a low sentinel on both ends, so
  a descending start and an ascending finish each count one extra peak.
* ``bir`` -- number of maximal monotone contiguous runs (adjacent runs share
  one element).
* ``udr`` -- number of maximal monotone runs after prepending a low sentinel,
  which splits off one extra run exactly when the word starts with a descent.
* ``chi_plus`` / ``chi_minus`` -- first-step-descends and last-step-ascends
  indicators.

Sentinels are never materialised: the padded statistics are computed from the
comparison logic directly, so ground sets containing small values are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GroundSetError(ValueError):
    """Word is not a permutation of distinct positive integers."""


@dataclass(frozen=True)
class Permutation:
    """Immutable word of distinct positive integers.

    >>> p = Permutation((6, 5, 3, 4, 7, 9, 2))
    >>> len(p), p.ground_set() == {2, 3, 4, 5, 6, 7, 9}
    (7, True)
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise GroundSetError(f"entries must be positive integers, got {v!r}")
        if len(set(self.values)) != len(self.values):
            raise GroundSetError(f"entries must be distinct: {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, idx: int) -> int:
        return self.values[idx]

    def ground_set(self) -> frozenset[int]:
        return frozenset(self.values)

    def word(self) -> str:
        """Whitespace-separated text form, e.g. ``'6 5 3 4 7 9 2'``."""
        return " ".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.word()


def from_word(values: Iterable[int]) -> Permutation:
    """Build a :class:`Permutation` from any iterable of distinct positive ints."""
    return Permutation(tuple(values))


def parse_word(text: str) -> Permutation:
    """Parse a whitespace-separated word.

    >>> parse_word("3 1").values
    (3, 1)
    """
    parts = text.split()
    try:
        vals = tuple(int(s) for s in parts)
    except ValueError as exc:
        raise GroundSetError(f"cannot parse word {text!r}") from exc
    return Permutation(vals)


def standardize(values: Sequence[int]) -> Permutation:
    """Order-isomorphic copy over ground set 1..n.

    Each value is replaced by its rank within the word, so all pairwise
    comparisons are preserved.

    >>> standardize((11, 8, 9, 10)).values
    (4, 1, 2, 3)
    >>> standardize((3, 1)).values
    (2, 1)
    """
    p = values.values if isinstance(values, Permutation) else tuple(values)
    if len(set(p)) != len(p):
        raise GroundSetError(f"entries must be distinct: {p}")
    rank = {v: r for r, v in enumerate(sorted(p), start=1)}
    return Permutation(tuple(rank[v] for v in p))


def _require_nonempty(p: Permutation) -> None:
    if len(p) == 0:
        raise ValueError("statistics are undefined for the empty permutation")


def descent_stats(p: Permutation) -> tuple[tuple[int, ...], int, int]:
    """Return ``(des_set, des, maj)`` with 1-based descent positions.

    >>> descent_stats(Permutation((6, 5, 3, 4, 7, 9, 2)))
    ((1, 2, 6), 3, 9)
    """
    _require_nonempty(p)
    w = p.values
    ds = tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])
    return ds, len(ds), sum(ds)


def peak_stats(p: Permutation) -> tuple[tuple[int, ...], int, int]:
    """Return ``(pk_set, pk, epk)``.

    Interior peaks only for ``pk``; ``epk`` additionally counts a descending
    first step and an ascending last step (the padded-sentinel convention).
    A singleton has ``pk = 0`` and ``epk = 1``: padded it reads low-high-low.

    >>> peak_stats(Permutation((6, 5, 3, 4, 7, 9, 2)))
    ((6,), 1, 2)
    >>> peak_stats(Permutation((4,)))
    ((), 0, 1)
    """
    _require_nonempty(p)
    w = p.values
    n = len(w)
    if n == 1:
        return (), 0, 1
    pks = tuple(i for i in range(2, n) if w[i - 2] < w[i - 1] > w[i])
    chi_p = 1 if w[0] > w[1] else 0
    chi_m = 1 if w[n - 2] < w[n - 1] else 0
    return pks, len(pks), len(pks) + chi_p + chi_m


def first_step_descends(p: Permutation) -> int:
    """chi_plus: 1 iff the word opens with a descent (0 for singletons)."""
    _require_nonempty(p)
    return 1 if len(p) >= 2 and p[0] > p[1] else 0


def last_step_ascends(p: Permutation) -> int:
    """chi_minus: 1 iff the word closes with an ascent (0 for singletons)."""
    _require_nonempty(p)
    return 1 if len(p) >= 2 and p[len(p) - 2] < p[len(p) - 1] else 0


@dataclass(frozen=True)
class RunProfile:
    """Maximal monotone run lengths plus the opening direction.

    ``lengths[r]`` is the length of the (r+1)-th run; adjacent runs share one
    element, so ``sum(t - 1 for t in lengths) == n - 1``.  ``chi_plus`` is 1
    iff the first run descends.  Runs alternate direction, so the direction of
    every run follows from ``chi_plus``.
    """

    lengths: tuple[int, ...]
    chi_plus: int

    @property
    def b(self) -> int:
        return len(self.lengths)

    def n(self) -> int:
        return sum(t - 1 for t in self.lengths) + 1

    def run_ascends(self, r: int) -> bool:
        """True iff the r-th run (1-based) is increasing."""
        if not 1 <= r <= self.b:
            raise ValueError(f"run index {r} out of range 1..{self.b}")
        return (r % 2 == 1) == (self.chi_plus == 0)

    def serialize(self) -> str:
        """Text form ``'chi_plus;t1,t2,...'`` e.g. ``'1;3,4,2'``."""
        return f"{self.chi_plus};{','.join(str(t) for t in self.lengths)}"

    @classmethod
    def parse(cls, text: str) -> "RunProfile":
        head, _, tail = text.partition(";")
        return cls(tuple(int(t) for t in tail.split(",")), int(head))


def run_profile(p: Permutation) -> RunProfile:
    """Run-length profile of the word.

    >>> run_profile(Permutation((6, 5, 3, 4, 7, 9, 2)))
    RunProfile(lengths=(3, 4, 2), chi_plus=1)
    >>> run_profile(Permutation((8,)))
    RunProfile(lengths=(1,), chi_plus=0)
    """
    _require_nonempty(p)
    w = p.values
    n = len(w)
    if n == 1:
        return RunProfile((1,), 0)
    steps = [w[i] < w[i + 1] for i in range(n - 1)]
    lengths = []
    run = 1
    for i in range(1, n - 1):
        if steps[i] == steps[i - 1]:
            run += 1
        else:
            lengths.append(run + 1)
            run = 1
    lengths.append(run + 1)
    return RunProfile(tuple(lengths), 0 if steps[0] else 1)


def bir(p: Permutation) -> int:
    """Number of maximal monotone runs."""
    return run_profile(p).b


def udr(p: Permutation) -> int:
    """Number of maximal monotone runs after prepending a low sentinel.

    Computed by run-counting over the step sequence of the padded word (the
    sentinel step is always an ascent), not via the peak-count identity, so
    the two can be checked against each other.

    >>> udr(Permutation((6, 5, 3, 4, 7, 9, 2)))
    4
    >>> udr(Permutation((3,)))
    1
    """
    _require_nonempty(p)
    w = p.values
    steps = [True] + [w[i] < w[i + 1] for i in range(len(w) - 1)]
    return 1 + sum(1 for i in range(1, len(steps)) if steps[i] != steps[i - 1])


@dataclass(frozen=True)
class StatBundle:
    """All statistics of one permutation, computed in a single pass."""

    n: int
    des_set: tuple[int, ...]
    des: int
    maj: int
    pk_set: tuple[int, ...]
    pk: int
    epk: int
    bir: int
    udr: int
    chi_plus: int
    chi_minus: int


def stat_bundle(p: Permutation) -> StatBundle:
    """Compute every registered scalar/set statistic of ``p``.

    >>> b = stat_bundle(Permutation((3, 1)))
    >>> (b.des_set, b.maj, b.pk, b.epk, b.udr, b.chi_plus, b.chi_minus)
    ((1,), 1, 0, 1, 2, 1, 0)
    """
    _require_nonempty(p)
    ds, d, mj = descent_stats(p)
    ps, k, ep = peak_stats(p)
    return StatBundle(
        n=len(p),
        des_set=ds,
        des=d,
        maj=mj,
        pk_set=ps,
        pk=k,
        epk=ep,
        bir=bir(p),
        udr=udr(p),
        chi_plus=first_step_descends(p),
        chi_minus=last_step_ascends(p),
    )
