"""Characters of induced modules and symmetric powers, any rank.

Schur characters are computed two independent ways: by enumerating
semistandard tableaux, and by the Jacobi-Trudi determinant in complete
homogeneous characters.  Pieri products of a Schur character with a
complete homogeneous character and good-filtration multiplicities of
tensor products of symmetric powers are built on top.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .characters import Character
from .weights import Weight


@lru_cache(maxsize=None)
def compositions(r, parts):
    """All ``parts``-tuples of nonnegative integers summing to ``r``."""
    if r < 0 or parts < 0:
        raise ValueError("compositions need nonnegative arguments")
    if parts == 0:
        return ((),) if r == 0 else ()
    out = []
    for first in range(r, -1, -1):
        for rest in compositions(r - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(r, n):
    """Partitions of ``r`` into at most ``n`` parts, as rank-n weights,
    in lex-descending order."""
    if r < 0 or n < 1:
        raise ValueError("partitions need r >= 0 and n >= 1")
    out = []

    def rec(remaining, maxpart, acc):
        if len(acc) == n:
            if remaining == 0:
                out.append(Weight(acc))
            return
        slots = n - len(acc)
        lo = -(-remaining // slots)  # ceil: stay weakly decreasing afterwards
        for a in range(min(maxpart, remaining), lo - 1, -1):
            rec(remaining - a, a, acc + [a])

    rec(r, r, [])
    return tuple(out)


def h_character(r, n):
    """Character of the r-th symmetric power of the natural rank-n module:
    the sum of all degree-r monomials in n variables."""
    if r < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    return _h_character(r, n)


@lru_cache(maxsize=None)
def _h_character(r, n):
    return Character(n, {c: 1 for c in compositions(r, n)})


def _check_partition(lam):
    lam = Weight(lam)
    if not (lam.is_dominant() and lam.is_polynomial()):
        raise ValueError("expected a partition (dominant polynomial weight), got %r" % (lam,))
    return lam


def schur_character(lam):
    """Schur character of ``lam`` in ``lam.n`` variables, by summing the
    content monomials of all semistandard tableaux of shape ``lam``."""
    return _schur_ssyt(_check_partition(lam))


@lru_cache(maxsize=None)
def _schur_ssyt(lam):
    n = lam.n
    shape = [a for a in lam if a]
    if not shape:
        return Character.one(n)
    rows = len(shape)
    terms = {}
    content = [0] * n

    def fill(i, j, row, above):
        if j == shape[i]:
            if i + 1 == rows:
                key = tuple(content)
                terms[key] = terms.get(key, 0) + 1
            else:
                fill(i + 1, 0, [], row)
            return
        lo = row[j - 1] if j else 1
        if above is not None:
            lo = max(lo, above[j] + 1)
        for v in range(lo, n + 1):
            content[v - 1] += 1
            row.append(v)
            fill(i, j + 1, row, above)
            row.pop()
            content[v - 1] -= 1

    fill(0, 0, [], None)
    return Character(n, terms)


def _perm_sign(perm):
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _h_product(degrees, n):
    out = Character.one(n)
    for d in degrees:
        out = out * _h_character(d, n)
    return out


def schur_character_jt(lam):
    """Schur character via the Jacobi-Trudi determinant det(h_{lam_i - i + j}),
    expanded over permutations.  Independent of the tableau route."""
    lam = _check_partition(lam)
    n = lam.n
    total = Character.zero(n)
    for perm in itertools.permutations(range(n)):
        degs = [lam[i] - i + perm[i] for i in range(n)]
        if any(d < 0 for d in degs):
            continue
        term = _h_product(tuple(sorted(d for d in degs if d)), n)
        total = total + _perm_sign(perm) * term
    return total


def pieri_expand(lam, r):
    """The partitions mu with s_lam * h_r = sum of s_mu: those adding a
    horizontal strip of size ``r`` to ``lam``.  Multiplicity-free;
    returned in lex-descending order."""
    lam = _check_partition(lam)
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    n = lam.n
    out = []
    mu = [0] * n

    def rec(i, excess):
        if i == n:
            if excess == 0:
                out.append(Weight(mu))
            return
        hi = lam[i] + excess
        if i:
            hi = min(hi, lam[i - 1])
        for v in range(hi, lam[i] - 1, -1):
            mu[i] = v
            rec(i + 1, excess - (v - lam[i]))

    rec(0, r)
    return out


@lru_cache(maxsize=None)
def _iterated_pieri(alpha, n):
    """Multiset of good-filtration factors of S^{alpha_1}E x S^{alpha_2}E x ...,
    keyed by highest weight.  ``alpha`` must be sorted, zero-free."""
    factors = {Weight((0,) * n): 1}
    for a in alpha:
        nxt = {}
        for mu, c in factors.items():
            for nu in pieri_expand(mu, a):
                nxt[nu] = nxt.get(nu, 0) + c
        factors = nxt
    return factors


def sym_tensor_nabla_mult(alpha, lam):
    """Good-filtration multiplicity of the induced module of highest weight
    ``lam`` in the tensor product of symmetric powers prescribed by the
    composition ``alpha``."""
    lam = _check_partition(lam)
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("composition entries must be nonnegative")
    if sum(alpha) != lam.degree():
        raise ValueError(
            "degree mismatch: composition of %d vs weight of degree %d"
            % (sum(alpha), lam.degree())
        )
    key = tuple(sorted((a for a in alpha if a), reverse=True))
    return _iterated_pieri(key, lam.n).get(lam, 0)
