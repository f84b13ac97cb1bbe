"""The character ring: sparse Laurent polynomials in n variables over Z.

A character is a finite map from exponent vectors (length-n integer tuples)
to nonzero integer multiplicities.  Characters of actual modules have
positive multiplicities and symmetric support; intermediate differences
arising during peeling may be arbitrary.  Multiplicities are plain Python
integers, so they never overflow.
"""

from __future__ import annotations

from .weights import Weight


class PeelError(ValueError):
    """A character is not a nonnegative combination of the given basis."""


def _is_dominant_exp(exp):
    return all(exp[i] >= exp[i + 1] for i in range(len(exp) - 1))


class Character:
    """Element of the group ring Z[Z^n], with exponent-wise multiplication."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exp, mult in items:
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError("exponent %r has wrong length for n=%d" % (exp, n))
                m = clean.get(exp, 0) + mult
                if m:
                    clean[exp] = m
                elif exp in clean:
                    del clean[exp]
        self._terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp, mult=1):
        exp = tuple(exp)
        return cls(len(exp), {exp: mult})

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, exp):
        return self._terms.get(tuple(exp), 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def _same_rank(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch: %d vs %d variables" % (self.n, other.n))

    def __add__(self, other):
        self._same_rank(other)
        out = dict(self._terms)
        for exp, m in other._terms.items():
            s = out.get(exp, 0) + m
            if s:
                out[exp] = s
            elif exp in out:
                del out[exp]
        res = Character(self.n)
        res._terms = out
        return res

    def __neg__(self):
        res = Character(self.n)
        res._terms = {exp: -m for exp, m in self._terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Character(self.n)
            res = Character(self.n)
            res._terms = {exp: other * m for exp, m in self._terms.items()}
            return res
        if not isinstance(other, Character):
            return NotImplemented
        self._same_rank(other)
        out = {}
        for e1, m1 in self._terms.items():
            for e2, m2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + m1 * m2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        res = Character(self.n)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("character powers need a nonnegative integer exponent")
        res = Character.one(self.n)
        for _ in range(k):
            res = res * self
        return res

    def twist(self, factor):
        """Scale every exponent vector entrywise by ``factor``."""
        if factor < 1:
            raise ValueError("twist factor must be a positive integer")
        res = Character(self.n)
        res._terms = {tuple(factor * a for a in exp): m for exp, m in self._terms.items()}
        return res

    def is_symmetric(self):
        """True iff the term map is invariant under entry permutations."""
        from itertools import permutations

        for exp, m in self._terms.items():
            if any(self._terms.get(other, 0) != m for other in set(permutations(exp))):
                return False
        return True

    def sorted_terms(self):
        """Terms in lex-descending exponent order."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            "%d * (%s)" % (m, ",".join(str(a) for a in exp))
            for exp, m in self.sorted_terms()
        )

    def __repr__(self):
        return "Character(n=%d, %s)" % (self.n, str(self))

    def to_json_obj(self):
        return [{"exponent": list(exp), "mult": m} for exp, m in self.sorted_terms()]


def character_from_json(obj, n=None):
    """Inverse of :meth:`Character.to_json_obj`; ``n`` is needed only when
    the term list is empty."""
    if not obj:
        if n is None:
            raise ValueError("cannot infer the rank of an empty character")
        return Character.zero(n)
    if n is None:
        n = len(obj[0]["exponent"])
    return Character(n, ((tuple(t["exponent"]), t["mult"]) for t in obj))


def frobenius_twist(chi, factor):
    """The character with every exponent scaled by ``factor``."""
    return chi.twist(factor)


def min_last_entry(chi):
    """Minimum last entry over the support of a genuine module character.

    For the character of a polynomial module this is its divisibility
    index: the number of determinant factors that can be split off.
    """
    if not chi:
        raise ValueError("the zero character has no divisibility index")
    for exp, m in chi.items():
        if m < 0:
            raise ValueError("negative multiplicity at %r; not a module character" % (exp,))
        if any(a < 0 for a in exp):
            raise ValueError("non-polynomial exponent %r; not a polynomial character" % (exp,))
    return min(exp[-1] for exp in chi.support())


def peel_into_basis(chi, basis):
    """Expand ``chi`` as a nonnegative combination of basis characters.

    ``basis(lam)`` must return, for each dominant weight, a character whose
    unique lex-maximal exponent is ``lam`` with multiplicity one (true for
    Schur characters and for simple characters).  ``chi`` must have
    permutation-symmetric support.  Repeatedly locates the lex-maximal
    dominant exponent of the remainder and subtracts; raises
    :class:`PeelError` if a step would need a negative multiplicity.
    """
    remainder = chi
    out = {}
    while remainder:
        pivot = max((exp for exp in remainder.support() if _is_dominant_exp(exp)), default=None)
        if pivot is None:
            raise PeelError("remainder %s has no dominant exponent" % remainder)
        mult = remainder.coeff(pivot)
        if mult < 0:
            raise PeelError(
                "pivot %r carries multiplicity %d; not expressible in this basis" % (pivot, mult)
            )
        remainder = remainder - mult * basis(Weight(pivot))
        if remainder.coeff(pivot):
            raise PeelError("basis element at %r lacks leading multiplicity one" % (pivot,))
        out[Weight(pivot)] = mult
    return out
