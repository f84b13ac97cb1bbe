"""Exhaustive desk-scale verification suites.

Each suite pits a closed form against an independent oracle (or checks a
structural identity) over a full grid of weights and parameter sets, and
reports the instance count plus the first few counterexamples.  The
suites back both the acceptance tests and the ``selfcheck`` CLI command.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import gl2, injectivity
from .characters import Character, PeelError, frobenius_twist, min_last_entry, peel_into_basis
from .schur import (
    compositions,
    h_character,
    partitions,
    pieri_expand,
    schur_character,
    schur_character_jt,
    sym_tensor_nabla_mult,
)
from .weights import GroupParams, Weight, digit_expansion, dominance_leq, eadic_split, is_column_regular, omega

PARAM_GRID = (
    GroupParams(1, 2),
    GroupParams(1, 3),
    GroupParams(1, 5),
    GroupParams(2, 3),
    GroupParams(3, 2),
    GroupParams(2, 0),
    GroupParams(3, 0),
)

# positive-characteristic pairs for the higher-kernel suite
KERNEL_GRID = (
    GroupParams(1, 2),
    GroupParams(1, 3),
    GroupParams(2, 2),
    GroupParams(2, 3),
    GroupParams(3, 2),
    GroupParams(3, 3),
)

_MAX_RECORDED = 5


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def count(self):
        self.instances += 1

    def fail(self, message):
        if len(self.failures) < _MAX_RECORDED:
            self.failures.append(message)
        else:
            self.failures = self.failures[:_MAX_RECORDED]

    def summary(self):
        status = "ok  " if self.ok else "FAIL"
        line = "%s  %-28s %7d instances" % (status, self.name, self.instances)
        for f in self.failures:
            line += "\n      " + f
        return line


def _weights2(deg_max):
    for r in range(deg_max + 1):
        yield from partitions(r, 2)


# ---------------------------------------------------------------------------
# weight combinatorics


def check_eadic_roundtrip(deg_max=30, n_max=4, bases=(2, 3, 5)):
    """The digit split is the unique column-regular decomposition (checked
    against exhaustive candidate enumeration) and reconstructs the weight."""
    res = SuiteResult("eadic-roundtrip")
    for n in range(1, n_max + 1):
        for e in bases:
            # all column-regular candidates, parametrized by differences
            boxes = list(itertools.product(range(e), repeat=n))
            for r in range(deg_max + 1):
                for lam in partitions(r, n):
                    res.count()
                    lam0, lbar = eadic_split(lam, e)
                    if lam0 + e * lbar != lam or not is_column_regular(lam0, e):
                        res.fail("split of %r base %d broken: %r + %d*%r" % (lam, e, lam0, e, lbar))
                        continue
                    if not (lbar.is_dominant() and lbar.is_polynomial()):
                        res.fail("quotient of %r base %d not a partition: %r" % (lam, e, lbar))
                    matches = []
                    for box in boxes:
                        # box = (last entry, then differences bottom-up)
                        cand = [box[0]]
                        for g in box[1:]:
                            cand.append(cand[-1] + g)
                        cand = Weight(cand[::-1])
                        if all((a - b) % e == 0 for a, b in zip(lam, cand)):
                            matches.append(cand)
                    if matches != [lam0]:
                        res.fail("split of %r base %d: got %r, candidates %r" % (lam, e, lam0, matches))
    return res


def check_dominance_order(deg_max=12, n_max=4):
    """Dominance is a partial order on each degree slice, refined by lex."""
    res = SuiteResult("dominance-order")
    for n in range(1, n_max + 1):
        for r in range(deg_max + 1):
            slice_ = partitions(r, n)
            for lam in slice_:
                res.count()
                if not dominance_leq(lam, lam):
                    res.fail("not reflexive at %r" % (lam,))
            for lam, mu in itertools.permutations(slice_, 2):
                if dominance_leq(lam, mu):
                    if dominance_leq(mu, lam):
                        res.fail("antisymmetry fails at %r, %r" % (lam, mu))
                    if not lam <= mu:
                        res.fail("lex does not refine dominance at %r <= %r" % (lam, mu))
            for lam, mu, nu in itertools.permutations(slice_, 3):
                if dominance_leq(lam, mu) and dominance_leq(mu, nu) and not dominance_leq(lam, nu):
                    res.fail("transitivity fails at %r, %r, %r" % (lam, mu, nu))
    return res


def check_digit_expansion(deg_max=30, n_max=4, grid=PARAM_GRID):
    """Every digit is column-regular for its base and the expansion
    reconstructs the weight."""
    res = SuiteResult("digit-expansion")
    for params in grid:
        for n in range(1, n_max + 1):
            for r in range(deg_max + 1):
                for lam in partitions(r, n):
                    res.count()
                    exp = digit_expansion(lam, params)
                    if exp.reconstruct() != lam:
                        res.fail("expansion of %r at %s does not reconstruct" % (lam, params))
                        continue
                    if not is_column_regular(exp.quantum_digit, params.e):
                        res.fail("quantum digit of %r at %s not regular" % (lam, params))
                    if params.p > 0 and not all(
                        is_column_regular(d, params.p) for d in exp.classical_digits
                    ):
                        res.fail("classical digits of %r at %s not regular" % (lam, params))
    return res


# ---------------------------------------------------------------------------
# character ring


def check_character_ring(deg_max=10, n_max=4, samples=25, seed=0):
    """Ring sanity on sampled Schur characters: divisibility additivity on
    products, commutativity and twist multiplicativity on smaller ones, and
    the agreement of the weight-level and factor-level divisibility
    readings through simple-basis peeling."""
    res = SuiteResult("character-ring")
    rng = random.Random(seed)
    for n in range(2, n_max + 1):
        pool = [lam for r in range(deg_max + 1) for lam in partitions(r, n)]
        small = [lam for lam in pool if lam.degree() <= min(deg_max, 5)]
        for _ in range(samples):
            lam, mu = rng.choice(pool), rng.choice(pool)
            res.count()
            a, b = schur_character(lam), schur_character(mu)
            if min_last_entry(a * b) != min_last_entry(a) + min_last_entry(b):
                res.fail("divisibility not additive at %r, %r" % (lam, mu))
        for _ in range(samples):
            lam, mu = rng.choice(small), rng.choice(small)
            res.count()
            a, b = schur_character(lam), schur_character(mu)
            if a * b != b * a:
                res.fail("product not commutative at %r, %r" % (lam, mu))
            if frobenius_twist(a * b, 2) != frobenius_twist(a, 2) * frobenius_twist(b, 2):
                res.fail("twist not multiplicative at %r, %r" % (lam, mu))
    # factor-level vs weight-level divisibility, through simple-basis peeling
    for params in (GroupParams(1, 2), GroupParams(2, 3)):
        basis = lambda w: gl2.simple_character(w, params)
        for lam in _weights2(min(deg_max, 7)):
            for mu in _weights2(min(deg_max, 7)):
                res.count()
                chi = gl2.simple_character(lam, params) * gl2.simple_character(mu, params)
                factors = peel_into_basis(chi, basis)
                if injectivity.divind_from_factors(factors.items()) != min_last_entry(chi):
                    res.fail("factor/weight divisibility split at %r x %r, %s" % (lam, mu, params))
    return res


# ---------------------------------------------------------------------------
# Schur machinery


def check_schur_agreement(deg_max=12, n_max=4):
    """Tableau and Jacobi-Trudi Schur characters agree."""
    res = SuiteResult("schur-agreement")
    for n in range(1, n_max + 1):
        for r in range(deg_max + 1):
            for lam in partitions(r, n):
                res.count()
                if schur_character(lam) != schur_character_jt(lam):
                    res.fail("tableaux vs determinant disagree at %r" % (lam,))
    return res


def check_pieri_products(deg_max=10, n_max=4):
    """s_lam * h_r equals the multiplicity-free sum over the horizontal-strip
    expansion."""
    res = SuiteResult("pieri-products")
    for n in range(1, n_max + 1):
        for d in range(deg_max + 1):
            for lam in partitions(d, n):
                for r in range(deg_max - d + 1):
                    res.count()
                    expansion = pieri_expand(lam, r)
                    if len(set(expansion)) != len(expansion):
                        res.fail("expansion of %r + strip %d not multiplicity-free" % (lam, r))
                    total = Character.zero(n)
                    for mu in expansion:
                        total = total + schur_character(mu)
                    if total != schur_character(lam) * h_character(r, n):
                        res.fail("strip expansion of %r + %d wrong" % (lam, r))
    return res


def check_sym_tensor_support(r_max=8, n_max=4):
    """The m-fold symmetric-power tensor products of degree r contain the
    induced module of highest weight lam iff lam has at most m nonzero
    parts."""
    res = SuiteResult("sym-tensor-support")
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            for r in range(r_max + 1):
                alphas = compositions(r, m)
                for lam in partitions(r, n):
                    res.count()
                    total = sum(sym_tensor_nabla_mult(alpha, lam) for alpha in alphas)
                    expected = all(a == 0 for a in lam[m:])
                    if bool(total) != expected:
                        res.fail("support criterion fails at n=%d m=%d %r" % (n, m, lam))
    return res


# ---------------------------------------------------------------------------
# rank-2 closed forms vs oracles


def check_divind_equivalence(deg_max=40, grid=PARAM_GRID):
    """Closed-form divisibility index equals the good-filtration oracle."""
    res = SuiteResult("divind-equivalence")
    for params in grid:
        for lam in _weights2(deg_max):
            res.count()
            try:
                closed = gl2.divind_injective_closed(lam, params)
            except gl2.OracleMismatch as exc:
                res.fail(str(exc))
                continue
            oracle = gl2.divind_injective_oracle(lam, params)
            if closed != oracle:
                res.fail("lam=%r %s: closed=%d oracle=%d" % (lam, params, closed, oracle))
    return res


def check_criticality_equivalence(deg_max=40, grid=PARAM_GRID):
    """Digit criticality test = symmetric-power oracle = (divind == 0)."""
    res = SuiteResult("criticality-equivalence")
    for params in grid:
        for lam in _weights2(deg_max):
            res.count()
            closed = gl2.is_critical_closed(lam, params)
            oracle = gl2.is_critical_oracle(lam, params)
            try:
                by_div = gl2.divind_injective_closed(lam, params) == 0
            except gl2.OracleMismatch as exc:
                res.fail(str(exc))
                continue
            if not (closed == oracle == by_div):
                res.fail(
                    "lam=%r %s: closed=%r oracle=%r divind-zero=%r"
                    % (lam, params, closed, oracle, by_div)
                )
    return res


def check_injectivity_equivalence(deg_max=40, grid=PARAM_GRID):
    """Digit injectivity test = index-inequality test with oracle input."""
    res = SuiteResult("injectivity-equivalence")
    for params in grid:
        for lam in _weights2(deg_max):
            res.count()
            closed = gl2.is_inf_injective_closed(lam, params)
            via_index = gl2.is_inf_injective_inequality(lam, params)
            if closed != via_index:
                res.fail("lam=%r %s: closed=%r inequality=%r" % (lam, params, closed, via_index))
    return res


def check_sympow_recursion(r_max=60, grid=PARAM_GRID):
    """Layer recursion for symmetric-power characters equals the plain
    complete homogeneous character."""
    res = SuiteResult("sympow-recursion")
    for params in grid:
        for r in range(r_max + 1):
            res.count()
            if gl2.sympow_character_recursive(r, params) != h_character(r, 2):
                res.fail("degree %d at %s" % (r, params))
    return res


def check_peeling_soundness(deg_max=40, grid=PARAM_GRID):
    """Decomposing Schur characters into simple characters never goes
    negative, reconstructs, is unitriangular, and respects dominance."""
    res = SuiteResult("peeling-soundness")
    for params in grid:
        for tau in _weights2(deg_max):
            res.count()
            basis = lambda w: gl2.simple_character(w, params)
            try:
                factors = peel_into_basis(schur_character(tau), basis)
            except PeelError as exc:
                res.fail("tau=%r %s: %s" % (tau, params, exc))
                continue
            if factors.get(tau, 0) != 1:
                res.fail("tau=%r %s: leading multiplicity %r" % (tau, params, factors.get(tau)))
            total = Character.zero(2)
            for lam, m in factors.items():
                total = total + m * gl2.simple_character(lam, params)
                if not dominance_leq(lam, tau):
                    res.fail("tau=%r %s: factor %r not below in dominance" % (tau, params, lam))
            if total != schur_character(tau):
                res.fail("tau=%r %s: factors do not reconstruct" % (tau, params))
    return res


def check_simple_divind(deg_max=20, grid=PARAM_GRID):
    """Simple and induced characters both have divisibility index lam_2."""
    res = SuiteResult("simple-divind")
    for params in grid:
        for lam in _weights2(deg_max):
            res.count()
            a = min_last_entry(gl2.simple_character(lam, params))
            b = min_last_entry(schur_character(lam))
            if not (a == b == lam[1]):
                res.fail("lam=%r %s: simple=%d induced=%d" % (lam, params, a, b))
    return res


def check_divisibility_shift(deg_max=20, grid=PARAM_GRID):
    """divind <= degree/2, and the injective character splits off exactly
    divind determinant factors."""
    res = SuiteResult("divisibility-shift")
    det = Character.monomial((1, 1))
    for params in grid:
        for lam in _weights2(deg_max):
            res.count()
            try:
                m = gl2.divind_injective_closed(lam, params)
            except gl2.OracleMismatch as exc:
                res.fail(str(exc))
                continue
            if 2 * m > lam.degree():
                res.fail("lam=%r %s: divind %d above degree/2" % (lam, params, m))
                continue
            shifted = gl2.injective_character(lam - m * omega(2), params)
            if gl2.injective_character(lam, params) != det ** m * shifted:
                res.fail("lam=%r %s: injective character does not shift by det^%d" % (lam, params, m))
    return res


def check_standard_form(deg_max=20, grid=PARAM_GRID):
    """For every infinitesimally injective weight the standard form
    reconstructs the weight, its first factor sits at the Steinberg edge,
    and its character product equals the injective character."""
    res = SuiteResult("standard-form")
    for params in grid:
        for lam in _weights2(deg_max):
            if not gl2.is_inf_injective_closed(lam, params):
                continue
            res.count()
            try:
                desc = gl2.standard_form(lam, params)
            except gl2.OracleMismatch as exc:
                res.fail(str(exc))
                continue
            if gl2.reconstruct_weight(desc, params) != lam:
                res.fail("lam=%r %s: descriptor does not reconstruct" % (lam, params))
            if desc.q_weight[0] != params.e - 1:
                res.fail("lam=%r %s: Q-weight %r off the Steinberg edge" % (lam, params, desc.q_weight))
            if gl2.standard_form_character(desc, params) != gl2.injective_character(lam, params):
                res.fail("lam=%r %s: character factorization fails" % (lam, params))
    return res


def check_necessary_inequality(deg_max=30, grid=PARAM_GRID):
    """No infinitesimally injective weight violates the necessary inequality
    for any partition contributing to the quotient-layer injective."""
    res = SuiteResult("necessary-inequality")
    for params in grid:
        if params.p == 0:
            oracle = injectivity.semisimple_comp_factors
        else:
            oracle = gl2.comp_factor_oracle(params.classical())
        for lam in _weights2(deg_max):
            if not gl2.is_inf_injective_closed(lam, params):
                continue
            res.count()
            lam0, lbar = eadic_split(lam, params.e)
            if not injectivity.necessary_condition(lam0, lbar, params.e, oracle):
                res.fail("lam=%r %s violates the necessary inequality" % (lam, params))
    return res


def check_higher_kernels(deg_max=20, grid=KERNEL_GRID, m_max=3):
    """Injectivity over the (m+1)-th Frobenius kernel implies injectivity
    over the m-th."""
    res = SuiteResult("higher-kernels")
    for params in grid:
        for lam in _weights2(deg_max):
            flags = [gl2.is_gm_injective(lam, m, params) for m in range(1, m_max + 2)]
            for m in range(m_max):
                res.count()
                if flags[m + 1] and not flags[m]:
                    res.fail("lam=%r %s: kernel %d injective but %d not" % (lam, params, m + 2, m + 1))
    return res


def check_criterion_layer(deg_max=40, grid=PARAM_GRID):
    """The rank-generic inequality, fed with the oracle divisibility index
    of the quotient layer, matches the rank-2 digit test; and the Steinberg
    range condition is sufficient for it."""
    res = SuiteResult("criterion-layer")
    for params in grid:
        e = params.e
        for lam in _weights2(deg_max):
            res.count()
            lam0, lbar = eadic_split(lam, e)
            if params.p == 0:
                bar_div = lbar[1]
            else:
                bar_div = gl2.divind_injective_oracle(lbar, params.classical())
            verdict = injectivity.injectivity_criterion(lam0[0], bar_div, 2, e)
            if verdict != gl2.is_inf_injective_closed(lam, params):
                res.fail("lam=%r %s: criterion %r vs digit test" % (lam, params, verdict))
            if injectivity.steinberg_range(lam0, e) and not verdict:
                res.fail("lam=%r %s: Steinberg range not sufficient" % (lam, params))
            mu = injectivity.steinberg_complement(lam0, e)
            if mu is not None:
                if not is_column_regular(mu, e):
                    res.fail("lam=%r %s: complement %r not regular" % (lam, params, mu))
                if (e - 1) * Weight((1, 0)) + mu.reversed() != lam0:
                    res.fail("lam=%r %s: complement identity fails" % (lam, params))
    return res


def check_table_determinism(deg_max=15):
    """Rendering the classification table twice gives identical bytes."""
    from .cli import render_table, table_rows

    res = SuiteResult("table-determinism")
    for params in (GroupParams(1, 2), GroupParams(2, 3)):
        for fmt in ("text", "csv", "json"):
            res.count()
            first = render_table(table_rows(deg_max, params, gm_max=2), fmt, gm_max=2)
            second = render_table(table_rows(deg_max, params, gm_max=2), fmt, gm_max=2)
            if first != second:
                res.fail("format %s at %s not deterministic" % (fmt, params))
    return res


def run_all(deg_max=20, grid=PARAM_GRID):
    """Run every suite, capping each one's default degree range at
    ``deg_max``.  A suite blowing up is itself a failure, reported under
    the suite's name.  Returns the list of :class:`SuiteResult`."""
    kernel_grid = tuple(p for p in grid if p.p > 0) or KERNEL_GRID
    plan = (
        ("eadic-roundtrip", lambda d: check_eadic_roundtrip(min(d, 30))),
        ("dominance-order", lambda d: check_dominance_order(min(d, 12))),
        ("digit-expansion", lambda d: check_digit_expansion(min(d, 30), grid=grid)),
        ("character-ring", lambda d: check_character_ring(min(d, 10))),
        ("schur-agreement", lambda d: check_schur_agreement(min(d, 12))),
        ("pieri-products", lambda d: check_pieri_products(min(d, 10))),
        ("sym-tensor-support", lambda d: check_sym_tensor_support(min(d, 8))),
        ("divind-equivalence", lambda d: check_divind_equivalence(min(d, 40), grid)),
        ("criticality-equivalence", lambda d: check_criticality_equivalence(min(d, 40), grid)),
        ("injectivity-equivalence", lambda d: check_injectivity_equivalence(min(d, 40), grid)),
        ("sympow-recursion", lambda d: check_sympow_recursion(min(d, 60), grid)),
        ("peeling-soundness", lambda d: check_peeling_soundness(min(d, 40), grid)),
        ("simple-divind", lambda d: check_simple_divind(min(d, 20), grid)),
        ("divisibility-shift", lambda d: check_divisibility_shift(min(d, 20), grid)),
        ("standard-form", lambda d: check_standard_form(min(d, 20), grid)),
        ("necessary-inequality", lambda d: check_necessary_inequality(min(d, 30), grid)),
        ("higher-kernels", lambda d: check_higher_kernels(min(d, 20), kernel_grid)),
        ("criterion-layer", lambda d: check_criterion_layer(min(d, 40), grid)),
        ("table-determinism", lambda d: check_table_determinism(min(d, 15))),
    )
    results = []
    for name, step in plan:
        try:
            results.append(step(deg_max))
        except Exception as exc:  # a crashed suite must not kill the report
            crashed = SuiteResult(name)
            crashed.fail("suite crashed: %s" % exc)
            results.append(crashed)
    return results
