"""Polynomials in q and the two classical shuffle identities for maj.

Everything here is exact integer arithmetic.  ``q_binomial`` builds Gaussian
binomials by the q-Pascal recurrence; the two ``*_identity`` checks enumerate
the left side of an identity over actual shuffles and compare against the
closed product form on the right, so a passing check is an enumerative proof
for the given operands.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .core import Permutation, descent_stats
from .shuffles import enumerate_shuffles, shuffles_with_descent_count


class QPolynomial:
    """Finitely supported integer polynomial in q.

    Immutable; zero coefficients are never stored.

    >>> p = QPolynomial({0: 1, 2: 2, 3: 1})
    >>> p.text()
    '1 + 2q^2 + q^3'
    >>> (p + QPolynomial({2: -2})).text()
    '1 + q^3'
    >>> (QPolynomial.monomial(1) * QPolynomial.monomial(1)).text()
    'q^2'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        if isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = list(coefficients)
        combined: dict[int, int] = {}
        for degree, coeff in items:
            if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
                raise ValueError(f"degrees must be nonnegative integers, got {degree!r}")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise ValueError(f"coefficients must be integers, got {coeff!r}")
            combined[degree] = combined.get(degree, 0) + coeff
        object.__setattr__(
            self,
            "_coeffs",
            tuple(sorted((d, c) for d, c in combined.items() if c != 0)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        return cls({degree: coeff})

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Machine form: (degree, coefficient) sorted by degree."""
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Largest degree with a nonzero coefficient; -1 for the zero polynomial."""
        return self._coeffs[-1][0] if self._coeffs else -1

    def coefficient(self, degree: int) -> int:
        for d, c in self._coeffs:
            if d == degree:
                return c
        return 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return QPolynomial(self._coeffs + other._coeffs)

    def __mul__(self, other: Union["QPolynomial", int]) -> "QPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return QPolynomial([(d, c * other) for d, c in self._coeffs])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        terms = []
        for d1, c1 in self._coeffs:
            for d2, c2 in other._coeffs:
                terms.append((d1 + d2, c1 * c2))
        return QPolynomial(terms)

    __rmul__ = __mul__

    def shifted(self, degree: int) -> "QPolynomial":
        """Multiplication by q**degree."""
        if degree < 0:
            raise ValueError("shift must be nonnegative")
        return QPolynomial([(d + degree, c) for d, c in self._coeffs])

    def evaluate(self, x: int) -> int:
        return sum(c * x**d for d, c in self._coeffs)

    def text(self) -> str:
        """Readable form, e.g. ``'1 + q + 2q^2'``; the zero polynomial is ``'0'``."""
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self._coeffs:
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = "q" if d == 1 else f"q^{d}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<QPolynomial {self.text()}>"


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial coefficient, by the q-Pascal recurrence.

    >>> q_binomial(4, 2).text()
    '1 + q + 2q^2 + q^3 + q^4'
    >>> q_binomial(7, 0).text()
    '1'
    >>> q_binomial(5, 2).evaluate(1)
    10
    """
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n} k={k}")
    row = [QPolynomial.one()]
    for size in range(1, n + 1):
        width = min(size, k)
        new_row = [QPolynomial.one()]
        for j in range(1, width + 1):
            entry = row[j - 1]
            if j < len(row):
                entry = entry + row[j].shifted(j)
            new_row.append(entry)
        row = new_row
    return row[k]


def _q_binomial_or_zero(n: int, k: int) -> QPolynomial:
    if k < 0 or k > n or n < 0:
        return QPolynomial.zero()
    return q_binomial(n, k)


class IdentityCheck(NamedTuple):
    lhs: QPolynomial
    rhs: QPolynomial

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _des_maj(p: Permutation) -> tuple[int, int]:
    if len(p) == 0:
        return 0, 0
    _, des, maj = descent_stats(p)
    return des, maj


def _maj_polynomial(words: Iterable[Permutation]) -> QPolynomial:
    counts: dict[int, int] = {}
    for tau in words:
        maj = descent_stats(tau)[2]
        counts[maj] = counts.get(maj, 0) + 1
    return QPolynomial(counts)


def maj_shuffle_identity(p: Permutation, s: Permutation) -> IdentityCheck:
    """maj generating polynomial of all shuffles vs its product form.

    The left side accumulates q**maj over every shuffle; the right side is
    q**(maj(p) + maj(s)) times the Gaussian binomial choosing p's positions.

    >>> from .core import parse_word
    >>> check = maj_shuffle_identity(parse_word("3 1"), parse_word("2 4"))
    >>> check.lhs.text(), check.holds
    ('q + q^2 + 2q^3 + q^4 + q^5', True)
    """
    lhs = _maj_polynomial(enumerate_shuffles(p, s))
    shift = _des_maj(p)[1] + _des_maj(s)[1]
    rhs = q_binomial(len(p) + len(s), len(p)).shifted(shift)
    return IdentityCheck(lhs, rhs)


def restricted_maj_shuffle_identity(
    p: Permutation, s: Permutation, k: int
) -> IdentityCheck:
    """Same comparison restricted to shuffles with exactly ``k`` descents.

    Out-of-range ``k`` makes both sides the zero polynomial: the right side's
    binomial bounds fail exactly when no shuffle has ``k`` descents.

    >>> from .core import parse_word
    >>> check = restricted_maj_shuffle_identity(parse_word("3 1"), parse_word("2 4"), 1)
    >>> check.rhs.text(), check.holds
    ('q + q^2 + q^3', True)
    """
    lhs = _maj_polynomial(shuffles_with_descent_count(p, s, k))
    des_p, maj_p = _des_maj(p)
    des_s, maj_s = _des_maj(s)
    left = _q_binomial_or_zero(len(p) - des_p + des_s, k - des_p)
    right = _q_binomial_or_zero(len(s) - des_s + des_p, k - des_s)
    product = left * right
    if product.is_zero:
        rhs = QPolynomial.zero()
    else:
        rhs = product.shifted(maj_p + maj_s + (k - des_p) * (k - des_s))
    return IdentityCheck(lhs, rhs)
