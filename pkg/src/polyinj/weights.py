"""Integer weight combinatorics for rank-n general linear groups.

Weights are integer n-vectors used additively.  The module provides the
dominance order, column-regular digit decompositions in a mixed base (a
quantum base e followed by classical base p), and the standard weights
omega = (1,...,1) and delta = (n-1,...,1,0).

A weight is *column e-regular* if all consecutive differences and the last
entry lie in [0, e).  Column-regular weights are the digit alphabet: every
weight lam splits uniquely as lam = lam0 + e*lbar with lam0 column
e-regular, and iterating on lbar gives the mixed-base digit expansion.
"""

from __future__ import annotations

from dataclasses import dataclass


class Weight(tuple):
    """An integer vector (lam_1, ..., lam_n)."""

    def __new__(cls, entries):
        w = tuple.__new__(cls, (int(a) for a in entries))
        if not w:
            raise ValueError("a weight needs at least one entry")
        return w

    @property
    def n(self):
        return len(self)

    def degree(self):
        return sum(self)

    def is_dominant(self):
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1))

    def is_polynomial(self):
        return all(a >= 0 for a in self)

    def reversed(self):
        """Entry reversal (the longest-Weyl-element action)."""
        return Weight(self[::-1])

    def _same_rank(self, other):
        if len(self) != len(other):
            raise ValueError(
                "rank mismatch: %d-entry vs %d-entry weight" % (len(self), len(other))
            )

    def __add__(self, other):
        self._same_rank(other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._same_rank(other)
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return "Weight(%s)" % ", ".join(str(a) for a in self)


def omega(n):
    """The all-ones weight (1, ..., 1), the exponent of the determinant."""
    return Weight((1,) * n)


def delta(n):
    """The staircase weight (n-1, n-2, ..., 1, 0)."""
    return Weight(range(n - 1, -1, -1))


def is_column_regular(lam, e):
    """True iff all consecutive differences and the last entry lie in [0, e)."""
    lam = Weight(lam)
    if e < 1:
        raise ValueError("base must be a positive integer")
    diffs = [lam[i] - lam[i + 1] for i in range(len(lam) - 1)] + [lam[-1]]
    return all(0 <= d < e for d in diffs)


def eadic_split(lam, e):
    """Split lam = lam0 + e*lbar with lam0 column e-regular.

    Solved digit-wise from the last entry upward: each entry of lam0 is the
    unique representative of lam_i mod e in the window
    [lam0_{i+1}, lam0_{i+1} + e).  Note this is not entrywise reduction
    mod e.  Dominance and polynomiality of lam are inherited by lbar.
    """
    lam = Weight(lam)
    if e < 1:
        raise ValueError("base must be a positive integer")
    digits = []
    prev = 0  # plays the role of lam0_{n+1}, pinning the last entry to [0, e)
    for a in lam[::-1]:
        prev = prev + (a - prev) % e
        digits.append(prev)
    lam0 = Weight(digits[::-1])
    lbar = Weight((a - b) // e for a, b in zip(lam, lam0))
    return lam0, lbar


def dominance_leq(lam, mu):
    """lam <= mu in dominance order: mu - lam is a nonnegative sum of
    positive roots, equivalently the degrees agree and every prefix sum of
    mu - lam is nonnegative."""
    lam, mu = Weight(lam), Weight(mu)
    lam._same_rank(mu)
    if lam.degree() != mu.degree():
        return False
    acc = 0
    for a, b in zip(lam, mu):
        acc += b - a
        if acc < 0:
            return False
    return True


def _is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GroupParams:
    """Arithmetic context: quantum parameter class l and characteristic p.

    l = 1 encodes q = 1 (the classical group); l >= 2 encodes q a primitive
    l-th root of unity.  p is 0 or a prime.  The quantum characteristic e
    is l when l >= 2 and p otherwise.  The combination (l=1, p=0) is
    rejected: everything is then injective and there is nothing to
    classify.
    """

    l: int
    p: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("l must be a positive integer")
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError("p must be 0 or a prime, got %r" % (self.p,))
        if self.l == 1 and self.p == 0:
            raise ValueError("l=1 with p=0 is the semisimple case; nothing to do")

    @property
    def e(self):
        return self.l if self.l >= 2 else self.p

    @property
    def is_classical(self):
        return self.l == 1

    def classical(self):
        """Parameters of the classical layer sitting under the Frobenius twist."""
        if self.p == 0:
            raise ValueError("characteristic zero has no classical layer")
        return GroupParams(1, self.p)

    def __str__(self):
        return "l=%d,p=%d" % (self.l, self.p)


@dataclass(frozen=True)
class DigitExpansion:
    """Digit expansion of a polynomial dominant weight.

    quantum_digit is the column e-regular digit; classical_digits are the
    base-p digits of the quotient weight (trailing zero digits dropped, so
    the tuple is empty when the quotient is zero).  In characteristic zero
    the quotient carries no base-p refinement and is stored as the single
    entry of classical_digits.
    """

    quantum_digit: Weight
    classical_digits: tuple
    params: GroupParams

    def reconstruct(self):
        n = self.quantum_digit.n
        acc = Weight((0,) * n)
        if self.params.p == 0:
            if self.classical_digits:
                acc = self.classical_digits[0]
        else:
            for i, d in enumerate(self.classical_digits):
                acc = acc + (self.params.p ** i) * d
        return self.quantum_digit + self.params.e * acc

    def base_p_digits(self):
        """The full base-p digit list of the original weight (classical case
        only, where the quantum digit is itself the 0-th base-p digit)."""
        if self.params.l != 1:
            raise ValueError("base-p digit list only makes sense for l=1")
        return (self.quantum_digit,) + self.classical_digits


def digit_expansion(lam, params):
    """Expand a polynomial dominant weight into its mixed-base digits."""
    lam = Weight(lam)
    if not (lam.is_dominant() and lam.is_polynomial()):
        raise ValueError("digit expansion needs a polynomial dominant weight, got %r" % (lam,))
    lam0, lbar = eadic_split(lam, params.e)
    if params.p == 0:
        digits = (lbar,)
    else:
        digits = []
        while any(lbar):
            d, lbar = eadic_split(lbar, params.p)
            digits.append(d)
        digits = tuple(digits)
    return DigitExpansion(lam0, digits, params)
