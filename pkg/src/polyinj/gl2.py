"""The complete rank-2 theory: simple characters, decomposition numbers,
injective characters, and the closed-form classification with its
character-level oracles.

Conventions.  Weights have two entries; the determinant character is xy
and the r-th symmetric power of the natural module has character
h_r(x, y).  Simple characters are assembled layer by layer from the digit
expansion of the highest weight: a column-regular digit (d1, d2)
contributes (xy)^d2 * h_{d1-d2} (a determinant twist of an irreducible
symmetric power), and the layers are Frobenius-twisted by 1, e, e*p,
e*p^2, ...  In characteristic zero the layer under the twist is semisimple
and contributes a single Schur character.

Every classification routine comes in two flavours: a closed form driven
by the digit pattern, and an oracle recomputing the same quantity from
characters alone (decomposition of Schur characters into simple
characters, reciprocity for injective multiplicities).  ``classify`` runs
both and raises :class:`OracleMismatch` rather than return conflicting
answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .characters import Character, frobenius_twist, peel_into_basis
from .schur import h_character, partitions, schur_character
from .weights import GroupParams, Weight, digit_expansion, eadic_split, omega


class OracleMismatch(Exception):
    """A closed form and its independent oracle disagreed: a bug sentinel."""


TOP_DIGIT_LARGE = "top_digit_large"
TOP_DIGIT_SMALL = "top_digit_small"


def _check_weight(lam):
    lam = Weight(lam)
    if lam.n != 2:
        raise ValueError("rank-2 routine got a rank-%d weight" % lam.n)
    if not (lam.is_dominant() and lam.is_polynomial()):
        raise ValueError("expected a dominant polynomial weight, got %r" % (lam,))
    return lam


def partitions2(r):
    """Partitions of r into at most two parts, lex-descending."""
    return partitions(r, 2)


# ---------------------------------------------------------------------------
# characters


def _digit_character(d):
    """Character of the simple module with column-regular highest weight d."""
    return Character.monomial((d[1], d[1])) * h_character(d[0] - d[1], 2)


def simple_character(lam, params):
    """Character of the simple module of highest weight ``lam``."""
    return _simple_character(_check_weight(lam), params)


@lru_cache(maxsize=None)
def _simple_character(lam, params):
    exp = digit_expansion(lam, params)
    out = _digit_character(exp.quantum_digit)
    if params.p == 0:
        out = out * frobenius_twist(schur_character(exp.classical_digits[0]), params.e)
    else:
        factor = params.e
        for d in exp.classical_digits:
            out = out * frobenius_twist(_digit_character(d), factor)
            factor *= params.p
    return out


def sympow_character_recursive(r, params):
    """Character of the r-th symmetric power of the natural module, built by
    the layer recursion: write r = r0 + e*rbar; the top layer contributes
    the simple characters of highest weights (r0, 0) and, unless r0 = e-1,
    (e-1, r0+1), against symmetric powers of the layer underneath.

    Equals ``h_character(r, 2)``; the two routes are compared wholesale by
    the self-check suite.
    """
    if r < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    return _sympow_recursive(r, params)


@lru_cache(maxsize=None)
def _sympow_recursive(r, params):
    if r == 0:
        return Character.one(2)
    e = params.e
    r0, rbar = r % e, r // e

    def bar_power(k):
        if k < 0:
            return Character.zero(2)
        if params.p == 0:
            return h_character(k, 2)
        return _sympow_recursive(k, params.classical())

    if r0 == e - 1:
        return simple_character(Weight((e - 1, 0)), params) * frobenius_twist(bar_power(rbar), e)
    out = simple_character(Weight((r0, 0)), params) * frobenius_twist(bar_power(rbar), e)
    if rbar >= 1:
        out = out + simple_character(Weight((e - 1, r0 + 1)), params) * frobenius_twist(
            bar_power(rbar - 1), e
        )
    return out


@lru_cache(maxsize=None)
def _decomposition_at_degree(r, params):
    """For each partition tau of r: the simple multiplicities of the induced
    module of highest weight tau, by peeling its Schur character."""
    basis = lambda w: simple_character(w, params)
    return {tau: peel_into_basis(schur_character(tau), basis) for tau in partitions2(r)}


def decomposition_number(tau, lam, params):
    """Composition multiplicity of the simple of highest weight ``lam`` in
    the induced module of highest weight ``tau`` (zero when degrees differ)."""
    tau, lam = _check_weight(tau), _check_weight(lam)
    if tau.degree() != lam.degree():
        return 0
    return _decomposition_at_degree(tau.degree(), params)[tau].get(lam, 0)


def injective_character(lam, params):
    """Character of the injective envelope of the simple with highest weight
    ``lam`` in the polynomial category: by reciprocity its good filtration
    has the induced module of highest weight tau occurring
    [induced(tau) : simple(lam)] times."""
    lam = _check_weight(lam)
    r = lam.degree()
    table = _decomposition_at_degree(r, params)
    out = Character.zero(2)
    for tau in partitions2(r):
        m = table[tau].get(lam, 0)
        if m:
            out = out + m * schur_character(tau)
    return out


@lru_cache(maxsize=None)
def _sympow_simple_factors(r, params):
    """Simple multiplicities of the r-th symmetric power of the natural module."""
    basis = lambda w: simple_character(w, params)
    return peel_into_basis(h_character(r, 2), basis)


# ---------------------------------------------------------------------------
# criticality


def _digit_is_critical(d, base):
    """A digit keeps the layer critical iff its top entry is base-1 or its
    bottom entry is 0."""
    return d[0] == base - 1 or d[1] == 0


def is_critical_closed(lam, params):
    """Digit-pattern test for divisibility index zero: the quantum digit and
    every classical digit must be critical for its base (in characteristic
    zero: the unrefined quotient must end in 0)."""
    lam = _check_weight(lam)
    exp = digit_expansion(lam, params)
    if not _digit_is_critical(exp.quantum_digit, params.e):
        return False
    if params.p == 0:
        return exp.classical_digits[0][1] == 0
    return all(_digit_is_critical(d, params.p) for d in exp.classical_digits)


def is_critical_oracle(lam, params):
    """Character oracle for criticality: the simple of highest weight ``lam``
    appears in the symmetric power of its degree."""
    lam = _check_weight(lam)
    return lam in _sympow_simple_factors(lam.degree(), params)


# ---------------------------------------------------------------------------
# divisibility index


@lru_cache(maxsize=None)
def _divind_by_layers(lam, params):
    """Layer recursion for the divisibility index of the injective envelope:
    peel one digit, recurse on the quotient weight at the classical layer."""
    if lam == (0, 0):
        return 0
    lam0, lbar = eadic_split(lam, params.e)
    if params.p == 0:
        bar_div = lbar[1]
    else:
        bar_div = _divind_by_layers(lbar, params.classical())
    if lam0[0] < params.e - 1 and bar_div == 0:
        return lam0[1]
    return lam0[0] - (params.e - 1) + params.e * bar_div


def _divind_base_p(digits, p):
    """Closed form for a pure base-p digit list.

    m is the largest index carrying a non-critical digit (top entry != p-1
    and bottom entry != 0); every digit above m is critical and contributes
    nothing, every digit below m contributes its top entry at its p-power
    scale, and the digit at m contributes through one of two branches
    depending on whether its top entry clears p-1.
    """
    bad = [i for i, d in enumerate(digits) if not _digit_is_critical(d, p)]
    if not bad:
        return 0
    m = bad[-1]
    alpha1 = sum(p ** i * digits[i][0] for i in range(m))
    dm = digits[m]
    if dm[0] < p - 1:
        return alpha1 + p ** m * dm[1] - (p ** m - 1)
    return alpha1 + p ** m * dm[0] - (p ** (m + 1) - 1)


def _divind_formula(lam, params):
    exp = digit_expansion(lam, params)
    lam0 = exp.quantum_digit
    e, p = params.e, params.p
    if p == 0:
        lbar = exp.classical_digits[0]
        if lam0[0] < e - 1 and lbar[1] == 0:
            return lam0[1]
        return lam0[0] - (e - 1) + e * lbar[1]
    if params.l == 1:
        return _divind_base_p(exp.base_p_digits(), p)
    digits = exp.classical_digits
    bad = [i for i, d in enumerate(digits) if not _digit_is_critical(d, p)]
    if not bad:
        if _digit_is_critical(lam0, e):
            return 0
        return lam0[1] if lam0[0] < e - 1 else lam0[0] - (e - 1)
    m = bad[-1]
    alpha1 = lam0[0] + e * sum(p ** i * digits[i][0] for i in range(m))
    dm = digits[m]
    if dm[0] < p - 1:
        return alpha1 + e * p ** m * dm[1] - (e * p ** m - 1)
    return alpha1 + e * p ** m * dm[0] - (e * p ** (m + 1) - 1)


def divind_injective_closed(lam, params):
    """Divisibility index of the injective envelope of highest weight ``lam``,
    evaluated by both the layer recursion and the digit closed form; the two
    must agree or :class:`OracleMismatch` is raised."""
    lam = _check_weight(lam)
    by_layers = _divind_by_layers(lam, params)
    by_formula = _divind_formula(lam, params)
    if by_layers != by_formula:
        raise OracleMismatch(
            "divisibility index of %r at %s: layer recursion says %d, closed form says %d"
            % (lam, params, by_layers, by_formula)
        )
    return by_layers


def divind_injective_oracle(lam, params):
    """Divisibility index from the good filtration of the injective envelope:
    the least last entry over partitions tau of the same degree whose induced
    module contains the simple of highest weight ``lam``."""
    lam = _check_weight(lam)
    table = _decomposition_at_degree(lam.degree(), params)
    return min(tau[1] for tau in partitions2(lam.degree()) if table[tau].get(lam, 0))


# ---------------------------------------------------------------------------
# infinitesimal injectivity


def is_inf_injective_closed(lam, params):
    """Digit-pattern test for injectivity over the first Frobenius kernel:
    the quantum digit clears e-1, or the quotient layer is not critical."""
    lam = _check_weight(lam)
    exp = digit_expansion(lam, params)
    if exp.quantum_digit[0] >= params.e - 1:
        return True
    if params.p == 0:
        return exp.classical_digits[0][1] != 0
    return any(not _digit_is_critical(d, params.p) for d in exp.classical_digits)


def is_inf_injective_inequality(lam, params):
    """Index-inequality test for injectivity over the first Frobenius kernel,
    with the quotient layer's divisibility index computed by the character
    ORACLE (not the closed form): lam0_1 + e * divind >= e - 1."""
    lam = _check_weight(lam)
    lam0, lbar = eadic_split(lam, params.e)
    if params.p == 0:
        bar_div = lbar[1]
    else:
        bar_div = divind_injective_oracle(lbar, params.classical())
    return lam0[0] + params.e * bar_div >= params.e - 1


# ---------------------------------------------------------------------------
# standard form


@dataclass(frozen=True)
class FactorizationDescriptor:
    """Standard tensor form of an infinitesimally injective envelope:
    a first-kernel injective Q(q_weight), det_power determinant factors, and
    a Frobenius-twisted injective with classical highest weight bar_weight.
    Always q_weight + det_power * omega + e * bar_weight = lam."""

    q_weight: Weight
    det_power: int
    bar_weight: Weight
    branch: str

    def rendered(self):
        return "Q(%d,%d)*D^%d*I(%d,%d)^F" % (
            self.q_weight[0],
            self.q_weight[1],
            self.det_power,
            self.bar_weight[0],
            self.bar_weight[1],
        )


def standard_form(lam, params):
    """Standard-form descriptor of the injective envelope of ``lam``; only
    defined when it is infinitesimally injective."""
    lam = _check_weight(lam)
    if not is_inf_injective_closed(lam, params):
        raise ValueError("%r is not infinitesimally injective at %s" % (lam, params))
    e = params.e
    m = divind_injective_closed(lam, params)
    m0, mbar = m % e, m // e
    lam0, lbar = eadic_split(lam, e)
    w = omega(2)
    if lam0[0] >= e - 1:
        desc = FactorizationDescriptor(lam0 - m0 * w, m, lbar - mbar * w, TOP_DIGIT_LARGE)
    else:
        desc = FactorizationDescriptor(
            lam0 - m0 * w + e * w, m, lbar - (mbar + 1) * w, TOP_DIGIT_SMALL
        )
    if reconstruct_weight(desc, params) != lam:
        raise OracleMismatch("standard form of %r at %s does not reconstruct" % (lam, params))
    return desc


def reconstruct_weight(desc, params):
    return desc.q_weight + desc.det_power * omega(2) + params.e * desc.bar_weight


def standard_form_character(desc, params):
    """Character of the standard tensor form: first-kernel injective times
    determinant power times the twisted classical injective character."""
    if params.p == 0:
        bar = schur_character(desc.bar_weight)
    else:
        bar = injective_character(desc.bar_weight, params.classical())
    return (
        injective_character(desc.q_weight, params)
        * Character.monomial((desc.det_power, desc.det_power))
        * frobenius_twist(bar, params.e)
    )


# ---------------------------------------------------------------------------
# higher Frobenius kernels


def is_gm_injective(lam, m, params):
    """Injectivity of the envelope of ``lam`` over the m-th Frobenius kernel.

    Classically (l=1) this reduces to first-kernel injectivity of the m
    digit-shifted weights sum_{j>=r} p^{j-r} d_j for r = 0..m-1.  In the
    quantum case the m-th kernel test is first-kernel injectivity plus the
    classical m-th kernel test for the quotient weight.  Characteristic
    zero only has the first kernel.
    """
    lam = _check_weight(lam)
    if m < 1:
        raise ValueError("kernel index must be >= 1")
    if params.l == 1:
        digits = digit_expansion(lam, params).base_p_digits()
        p = params.p
        for r in range(m):
            w = Weight((0, 0))
            for i, d in enumerate(digits[r:]):
                w = w + (p ** i) * d
            if not is_inf_injective_closed(w, params):
                return False
        return True
    if params.p == 0:
        if m == 1:
            return is_inf_injective_closed(lam, params)
        raise ValueError("higher Frobenius kernels need positive characteristic")
    _, lbar = eadic_split(lam, params.e)
    return is_inf_injective_closed(lam, params) and is_gm_injective(lbar, m, params.classical())


# ---------------------------------------------------------------------------
# the full verdict


@dataclass(frozen=True)
class Classification:
    """Full verdict for one (weight, params) pair.  critical iff divind = 0,
    divind <= degree/2, and standard_form is present iff inf_injective."""

    lam: Weight
    params: GroupParams
    critical: bool
    divind: int
    inf_injective: bool
    standard_form: Optional[FactorizationDescriptor]


def classify(lam, params, oracle_degree_limit=40):
    """Classify one weight, cross-checking the closed forms against the
    character oracles up to ``oracle_degree_limit`` (the oracles cost a
    full degree-r character decomposition; the closed forms are digit
    arithmetic).  Any disagreement raises :class:`OracleMismatch`."""
    lam = _check_weight(lam)
    div = divind_injective_closed(lam, params)
    crit = is_critical_closed(lam, params)
    inf = is_inf_injective_closed(lam, params)
    if crit != (div == 0):
        raise OracleMismatch(
            "criticality of %r at %s inconsistent with divisibility index %d" % (lam, params, div)
        )
    if 2 * div > lam.degree():
        raise OracleMismatch(
            "divisibility index %d of %r exceeds degree/2" % (div, lam)
        )
    if lam.degree() <= oracle_degree_limit:
        div_o = divind_injective_oracle(lam, params)
        if div != div_o:
            raise OracleMismatch(
                "divisibility index of %r at %s: closed %d vs oracle %d" % (lam, params, div, div_o)
            )
        crit_o = is_critical_oracle(lam, params)
        if crit != crit_o:
            raise OracleMismatch(
                "criticality of %r at %s: closed %r vs oracle %r" % (lam, params, crit, crit_o)
            )
        inf_o = is_inf_injective_inequality(lam, params)
        if inf != inf_o:
            raise OracleMismatch(
                "injectivity of %r at %s: closed %r vs inequality %r" % (lam, params, inf, inf_o)
            )
    std = standard_form(lam, params) if inf else None
    return Classification(lam, params, crit, div, inf, std)


# oracle adapters for the rank-generic criterion layer


def comp_factor_oracle(params):
    """Composition-factor oracle (tau, lam) -> [induced(tau) : simple(lam)]."""
    return lambda tau, lam: decomposition_number(tau, lam, params)


def sym_power_factor_oracle(params):
    """Oracle (alpha, lam) -> multiplicity of simple(lam) in the tensor
    product of symmetric powers prescribed by the composition alpha."""

    def oracle(alpha, lam):
        lam_ = _check_weight(lam)
        chi = Character.one(2)
        for a in alpha:
            chi = chi * h_character(a, 2)
        basis = lambda w: simple_character(w, params)
        return peel_into_basis(chi, basis).get(lam_, 0)

    return oracle
