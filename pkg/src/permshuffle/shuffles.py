"""Shuffle enumeration and shuffle-compatibility verification.

A shuffle of two words with disjoint ground sets is any interleaving that
keeps both words as subsequences.  Enumeration order is deterministic: slot
patterns are generated lexicographically with first-word slots preferred
first, so the first shuffle emitted is always "all of p, then all of s".

``verify_shuffle_compatibility`` runs the two sweep modes:

* FULL groups standardized pairs (p over 1..n, s over n+1..n+m) by the
  statistic values of both words and demands one distribution per group.
* REDUCED fixes s and groups the p side only, which suffices for descent
  statistics: any statistic determined by the descent set distributes over
  shuffles in a way that is blind to everything else about p.

For descent statistics the sweeps can compute distributions straight from
descent sets: with s living entirely above p, every adjacent pair in a
shuffle is decided by which words the two entries came from plus the two
descent sets, so the multiset of shuffle descent sets is a function of
(Des(p), n, Des(s), m) by construction.  That route is cross-checked against
direct word enumeration in the tests and can be disabled with
``memoize=False``.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Optional, Union

from .core import Permutation, descent_stats, from_word
from .stats import StatisticDescriptor, get_statistic, serialize_value

ENGINE_SIZE_LIMIT = 22


def shuffle_count(n: int, m: int) -> int:
    """Number of shuffles of an n-word and an m-word: C(n+m, n).

    >>> shuffle_count(2, 2)
    6
    >>> shuffle_count(0, 5)
    1
    """
    if n < 0 or m < 0:
        raise ValueError("sizes must be nonnegative")
    return comb(n + m, n)


def _check_pair(p: Permutation, s: Permutation) -> None:
    if len(p) + len(s) == 0:
        raise ValueError("at least one word must be nonempty")
    overlap = p.ground_set() & s.ground_set()
    if overlap:
        raise ValueError(f"ground sets overlap: {sorted(overlap)}")


def enumerate_shuffles(
    p: Permutation, s: Permutation, *, force: bool = False
) -> Iterator[Permutation]:
    """Yield every shuffle of ``p`` and ``s`` exactly once, deterministically.

    Validation is eager; the returned iterator is lazy.  Refuses
    ``len(p) + len(s) > 22`` unless ``force=True`` (the count is a binomial
    and explodes).
    """
    _check_pair(p, s)
    n, m = len(p), len(s)
    total = n + m
    if total > ENGINE_SIZE_LIMIT and not force:
        raise ValueError(
            f"n+m = {total} exceeds the size limit {ENGINE_SIZE_LIMIT}; pass force=True"
        )

    def gen():
        pv, sv = p.values, s.values
        for ppos in combinations(range(total), n):
            word = [0] * total
            for a, t in enumerate(ppos):
                word[t] = pv[a]
            b = 0
            for t in range(total):
                if word[t] == 0:
                    word[t] = sv[b]
                    b += 1
            yield Permutation(tuple(word))

    return gen()


class Distribution:
    """Multiset of statistic values with integer multiplicities."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Optional[dict] = None):
        self._counts: dict = {}
        if counts:
            for v, c in counts.items():
                self.add(v, c)

    @classmethod
    def from_values(cls, values) -> "Distribution":
        d = cls()
        for v in values:
            d.add(v)
        return d

    def add(self, value, mult: int = 1) -> None:
        if mult < 0:
            raise ValueError("multiplicities must be nonnegative")
        if mult:
            self._counts[value] = self._counts.get(value, 0) + mult

    def merge(self, other: "Distribution") -> "Distribution":
        out = Distribution(self._counts)
        for v, c in other._counts.items():
            out.add(v, c)
        return out

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def items(self) -> list:
        return sorted(self._counts.items())

    def __getitem__(self, value) -> int:
        return self._counts.get(value, 0)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Distribution) and self._counts == other._counts

    def __repr__(self) -> str:
        return f"Distribution({{{', '.join(f'{v!r}: {c}' for v, c in self.items())}}})"

    def serialize(self) -> str:
        """Canonical text: sorted ``value:count`` pairs, space separated."""
        return " ".join(f"{serialize_value(v)}:{c}" for v, c in self.items())

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode()).hexdigest()[:12]

    def to_json(self) -> list:
        return [
            [list(v) if isinstance(v, tuple) else v, c] for v, c in self.items()
        ]


def distribution(
    stat: Union[str, StatisticDescriptor],
    p: Permutation,
    s: Permutation,
    *,
    force: bool = False,
) -> Distribution:
    """Distribution of ``stat`` over all shuffles of ``p`` and ``s``.

    >>> from .core import parse_word
    >>> distribution("des", parse_word("3 1"), parse_word("2 4")).items()
    [(1, 3), (2, 3)]
    """
    st = get_statistic(stat) if isinstance(stat, str) else stat
    return Distribution.from_values(
        st.evaluator(tau) for tau in enumerate_shuffles(p, s, force=force)
    )


def shuffles_with_descent_count(
    p: Permutation, s: Permutation, k: int, *, force: bool = False
) -> list[Permutation]:
    """The shuffles of ``p`` and ``s`` having exactly ``k`` descents."""
    if k < 0:
        raise ValueError("descent count must be nonnegative")
    out = []
    for tau in enumerate_shuffles(p, s, force=force):
        if descent_stats(tau)[1] == k:
            out.append(tau)
    return out


def is_descent_statistic(
    stat: Union[str, StatisticDescriptor], n_max: int
) -> tuple[bool, Optional[tuple[Permutation, Permutation]]]:
    """Empirically check that ``stat`` is a function of (descent set, length).

    Scans every permutation of 1..n for n <= n_max, bucketing by descent
    set.  Returns ``(True, None)`` or ``(False, (p, q))`` for the first
    bucket collision found, in lexicographic scan order.
    """
    st = get_statistic(stat) if isinstance(stat, str) else stat
    for n in range(1, n_max + 1):
        buckets: dict[frozenset, tuple[Permutation, object]] = {}
        for w in permutations(range(1, n + 1)):
            pp = Permutation(w)
            key = frozenset(descent_stats(pp)[0])
            v = st.evaluator(pp)
            if key in buckets:
                first, fv = buckets[key]
                if fv != v:
                    return False, (first, pp)
            else:
                buckets[key] = (pp, v)
    return True, None


# -- descent-set-level distribution machinery -------------------------------


@lru_cache(maxsize=None)
def _shuffle_descent_multiset(
    des_p: frozenset, n: int, des_s: frozenset, m: int
) -> tuple[tuple[frozenset, int], ...]:
    """Multiset of shuffle descent sets for second word living above the first.

    Walks every slot pattern once; each adjacent slot pair is decided by the
    source words alone: within-word pairs copy that word's descent set, a
    first-to-second junction always ascends, a second-to-first junction
    always descends.
    """
    total = n + m
    counts: dict[frozenset, int] = {}
    for ppos in combinations(range(total), n):
        is_p = [False] * total
        for t in ppos:
            is_p[t] = True
        ip = 1 if is_p[0] else 0
        isg = 0 if is_p[0] else 1
        descents = []
        for t in range(1, total):
            prev_p, cur_p = is_p[t - 1], is_p[t]
            if cur_p:
                ip += 1
            else:
                isg += 1
            if prev_p and cur_p:
                desc = (ip - 1) in des_p
            elif not prev_p and not cur_p:
                desc = (isg - 1) in des_s
            elif prev_p:
                desc = False
            else:
                desc = True
            if desc:
                descents.append(t)
        key = frozenset(descents)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items(), key=lambda kv: sorted(kv[0])))


def _memoized_distribution(
    st: StatisticDescriptor, p: Permutation, s: Permutation
) -> Distribution:
    des_p = frozenset(descent_stats(p)[0])
    des_s = frozenset(descent_stats(s)[0]) if len(s) else frozenset()
    length = len(p) + len(s)
    out = Distribution()
    for D, c in _shuffle_descent_multiset(des_p, len(p), des_s, len(s)):
        out.add(st.from_descents(D, length), c)
    return out


# -- verification -----------------------------------------------------------


@dataclass(frozen=True)
class GroupRecord:
    n: int
    m: int
    sigma: Optional[str]  # word text in REDUCED mode, None in FULL mode
    key: str
    size: int
    digest: str

    def to_text(self) -> str:
        if self.sigma is None:
            return (
                f"group n={self.n} m={self.m} key={self.key} "
                f"size={self.size} digest={self.digest}"
            )
        return (
            f"group n={self.n} m={self.m} sigma={self.sigma} st={self.key} "
            f"size={self.size} digest={self.digest}"
        )


@dataclass(frozen=True)
class Counterexample:
    mode: str
    pi: str
    pi_prime: str
    sigma: str
    sigma_prime: Optional[str]  # only differs from sigma in FULL mode
    dist_pi: str
    dist_pi_prime: str

    def to_text(self) -> str:
        lines = [f"counterexample pi={self.pi}", f"counterexample pi_prime={self.pi_prime}"]
        if self.sigma_prime is None or self.sigma_prime == self.sigma:
            lines.append(f"counterexample sigma={self.sigma}")
        else:
            lines.append(f"counterexample sigma={self.sigma}")
            lines.append(f"counterexample sigma_prime={self.sigma_prime}")
        lines.append(f"counterexample dist_pi={self.dist_pi}")
        lines.append(f"counterexample dist_pi_prime={self.dist_pi_prime}")
        return "\n".join(lines)


@dataclass
class VerifyReport:
    stat: str
    mode: str
    n_max: int
    m_max: int
    memoized: bool
    jobs: int
    passed: bool
    pair_count: int
    groups: list[GroupRecord] = field(default_factory=list)
    counterexample: Optional[Counterexample] = None
    descent_checked_up_to: Optional[int] = None

    @property
    def group_count(self) -> int:
        return len(self.groups)

    def to_text(self) -> str:
        lines = [g.to_text() for g in self.groups]
        if self.counterexample is not None:
            lines.append(self.counterexample.to_text())
        checked = (
            f" descent_checked<={self.descent_checked_up_to}"
            if self.descent_checked_up_to
            else ""
        )
        lines.append(
            f"summary stat={self.stat} mode={self.mode} n_max={self.n_max} "
            f"m_max={self.m_max} pairs={self.pair_count} groups={self.group_count} "
            f"memoized={'yes' if self.memoized else 'no'}{checked} "
            f"verdict={'PASS' if self.passed else 'FAIL'}"
        )
        return "\n".join(lines)

    def to_json(self) -> dict:
        out = {
            "stat": self.stat,
            "mode": self.mode,
            "n_max": self.n_max,
            "m_max": self.m_max,
            "memoized": self.memoized,
            "passed": self.passed,
            "pair_count": self.pair_count,
            "group_count": self.group_count,
            "groups": [
                {
                    "n": g.n,
                    "m": g.m,
                    "sigma": g.sigma,
                    "key": g.key,
                    "size": g.size,
                    "digest": g.digest,
                }
                for g in self.groups
            ],
            "descent_checked_up_to": self.descent_checked_up_to,
        }
        if self.counterexample is not None:
            c = self.counterexample
            out["counterexample"] = {
                "pi": c.pi,
                "pi_prime": c.pi_prime,
                "sigma": c.sigma,
                "sigma_prime": c.sigma_prime,
                "dist_pi": c.dist_pi,
                "dist_pi_prime": c.dist_pi_prime,
            }
        return out


def _upper_word(n: int, perm_of_m: tuple[int, ...]) -> Permutation:
    """Relabel a permutation of 1..m to live on n+1..n+m."""
    return Permutation(tuple(v + n for v in perm_of_m))


def _pair_distribution(
    st: StatisticDescriptor, p: Permutation, s: Permutation, memoize: bool
) -> Distribution:
    if memoize and st.descent_statistic and st.from_descents is not None:
        return _memoized_distribution(st, p, s)
    return distribution(st, p, s)


def _reduced_unit(args) -> tuple[list[GroupRecord], Optional[Counterexample], int]:
    stat_name, n, m, sigma_base, memoize = args
    st = get_statistic(stat_name)
    sigma = _upper_word(n, sigma_base)
    groups: dict = {}
    order: list = []
    counter = None
    pairs = 0
    for w in permutations(range(1, n + 1)):
        pi = Permutation(w)
        pairs += 1
        dist = _pair_distribution(st, pi, sigma, memoize)
        v = st.evaluator(pi)
        if v not in groups:
            groups[v] = (pi, dist, 1)
            order.append(v)
        else:
            first, fdist, size = groups[v]
            groups[v] = (first, fdist, size + 1)
            if counter is None and dist != fdist:
                counter = Counterexample(
                    mode="reduced",
                    pi=first.word(),
                    pi_prime=pi.word(),
                    sigma=sigma.word(),
                    sigma_prime=None,
                    dist_pi=fdist.serialize(),
                    dist_pi_prime=dist.serialize(),
                )
    records = [
        GroupRecord(
            n=n,
            m=m,
            sigma=sigma.word(),
            key=serialize_value(v),
            size=groups[v][2],
            digest=groups[v][1].digest(),
        )
        for v in sorted(order, key=serialize_value)
    ]
    return records, counter, pairs


def _full_unit(args) -> tuple[list[GroupRecord], Optional[Counterexample], int]:
    stat_name, n, m, memoize = args
    st = get_statistic(stat_name)
    groups: dict = {}
    order: list = []
    counter = None
    pairs = 0
    for w in permutations(range(1, n + 1)):
        pi = Permutation(w)
        v_pi = st.evaluator(pi)
        for u in permutations(range(1, m + 1)):
            sigma = _upper_word(n, u)
            pairs += 1
            dist = _pair_distribution(st, pi, sigma, memoize)
            key = (v_pi, st.evaluator(sigma))
            if key not in groups:
                groups[key] = (pi, sigma, dist, 1)
                order.append(key)
            else:
                fp, fs, fdist, size = groups[key]
                groups[key] = (fp, fs, fdist, size + 1)
                if counter is None and dist != fdist:
                    counter = Counterexample(
                        mode="full",
                        pi=fp.word(),
                        pi_prime=pi.word(),
                        sigma=fs.word(),
                        sigma_prime=sigma.word(),
                        dist_pi=fdist.serialize(),
                        dist_pi_prime=dist.serialize(),
                    )
    key_text = lambda key: f"pi={serialize_value(key[0])} sigma={serialize_value(key[1])}"
    records = [
        GroupRecord(
            n=n,
            m=m,
            sigma=None,
            key=key_text(key),
            size=groups[key][3],
            digest=groups[key][2].digest(),
        )
        for key in sorted(order, key=key_text)
    ]
    return records, counter, pairs


def verify_shuffle_compatibility(
    stat: Union[str, StatisticDescriptor],
    n_max: int,
    m_max: int,
    mode: str = "reduced",
    *,
    memoize: bool = True,
    jobs: int = 1,
) -> VerifyReport:
    """Sweep standardized pairs up to the given sizes and compare groups.

    REDUCED mode requires (and re-checks) a descent statistic; its
    counterexamples are (pi, pi_prime, sigma) triples.  FULL mode accepts any
    statistic and groups by the value pair.  Output is deterministic and
    independent of ``jobs``.
    """
    st = get_statistic(stat) if isinstance(stat, str) else stat
    if mode not in ("reduced", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if n_max < 1 or m_max < 1:
        raise ValueError("n_max and m_max must be at least 1")
    if n_max + m_max > ENGINE_SIZE_LIMIT:
        raise ValueError(f"n_max + m_max exceeds the size limit {ENGINE_SIZE_LIMIT}")

    descent_checked = None
    if mode == "reduced":
        if not st.descent_statistic:
            raise ValueError(
                f"reduced mode requires a descent statistic; {st.name!r} is not flagged as one"
            )
        bound = min(n_max + m_max, 7)
        ok, witness = is_descent_statistic(st, bound)
        if not ok:
            a, b = witness
            raise ValueError(
                f"statistic {st.name!r} is flagged as a descent statistic but differs "
                f"on {a.word()} / {b.word()}"
            )
        descent_checked = bound

    if mode == "reduced":
        units = [
            (st.name, n, m, sigma_base, memoize)
            for n in range(1, n_max + 1)
            for m in range(1, m_max + 1)
            for sigma_base in permutations(range(1, m + 1))
        ]
        worker = _reduced_unit
    else:
        units = [
            (st.name, n, m, memoize)
            for n in range(1, n_max + 1)
            for m in range(1, m_max + 1)
        ]
        worker = _full_unit

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, units, chunksize=4))
    else:
        results = [worker(u) for u in units]

    groups: list[GroupRecord] = []
    counterexample = None
    pair_count = 0
    for records, counter, pairs in results:
        groups.extend(records)
        pair_count += pairs
        if counterexample is None and counter is not None:
            counterexample = counter

    return VerifyReport(
        stat=st.name,
        mode=mode,
        n_max=n_max,
        m_max=m_max,
        memoized=memoize,
        jobs=jobs,
        passed=counterexample is None,
        pair_count=pair_count,
        groups=groups,
        counterexample=counterexample,
        descent_checked_up_to=descent_checked,
    )
