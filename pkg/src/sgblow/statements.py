"""Catalog of checkable identities tying type sequences to blow-up data.

Every statement is a function of a shared Analysis bundle and returns a
TheoremVerdict: held, failed, or vacuous when its hypotheses are not met.
Inequalities and identities are evaluated in exact integer arithmetic;
fractional forms are cross-multiplied so nothing ever rounds.

Statement ids follow the external naming contract (Thm4.7.1, Prop6.9.2, ...).
A bare group id like "Thm4.7" expands to all of its parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .blowup import BlowupReport, analyze, check_conditions_a_b
from .core import NumericalSemigroup, ValueIdeal, length_between
from .errors import InvariantViolation, UnknownStatement
from .invariants import (
    bidual,
    canonical_ideal,
    classify,
    dual,
    integral_closure,
    is_reflexive,
    omega_product,
    type_sequence,
)


class Analysis:
    """All quantities the catalog needs for one (semigroup, ideal) pair."""

    def __init__(self, report: BlowupReport):
        self.report = report
        self.s = report.semigroup
        self.ideal = report.ideal

    @classmethod
    def of(cls, e: ValueIdeal) -> "Analysis":
        return cls(analyze(e))

    # ring-level data

    @cached_property
    def s_ideal(self) -> ValueIdeal:
        return self.s.as_ideal()

    @cached_property
    def m_ideal(self) -> ValueIdeal:
        return self.s.maximal_ideal()

    @cached_property
    def normalization(self) -> ValueIdeal:
        return self.s.normalization()

    @cached_property
    def k(self) -> ValueIdeal:
        return canonical_ideal(self.s)

    @cached_property
    def ts(self):
        return type_sequence(self.s)

    @cached_property
    def ring_class(self):
        return classify(self.s)

    @property
    def c(self) -> int:
        return self.s.conductor

    @property
    def delta(self) -> int:
        return self.s.genus

    @property
    def n(self) -> int:
        return len(self.s.small_elements) - 1

    @property
    def r(self) -> int:
        return self.ts.cm_type

    @property
    def mu(self) -> int:
        return self.s.embedding_dimension

    @cached_property
    def dual_m(self) -> ValueIdeal:
        return dual(self.m_ideal)

    @cached_property
    def r_colon_omega(self) -> ValueIdeal:
        return dual(self.k)

    # pair-level data

    @property
    def e(self) -> int:
        return self.report.e

    @property
    def nu(self) -> int:
        return self.report.nu

    @property
    def rho(self) -> int:
        return self.report.rho

    @property
    def lam(self) -> ValueIdeal:
        return self.report.lam

    @property
    def d(self) -> int:
        return self.report.d

    @property
    def i0(self) -> int:
        return self.report.i0

    @property
    def gamma(self) -> tuple[int, ...]:
        return self.report.gamma_set

    @property
    def is_max_ideal(self) -> bool:
        return self.ideal == self.m_ideal

    @cached_property
    def conditions(self):
        return check_conditions_a_b(self.ideal)

    @cached_property
    def power_nu(self) -> ValueIdeal:
        return self.report.powers[self.nu]

    @cached_property
    def n_lambda(self) -> int:
        return self.report.c_lambda - self.report.delta_lambda

    @cached_property
    def lambda_gorenstein(self) -> bool:
        # a semigroup ring is Gorenstein exactly when gaps and non-gaps balance
        return 2 * self.report.delta_lambda == self.report.c_lambda

    @cached_property
    def lam_is_normalization(self) -> bool:
        return self.lam == self.normalization

    @cached_property
    def r_filter_i0(self) -> ValueIdeal:
        small = self.s.small_elements
        lo = small[self.i0]
        return ValueIdeal(self.s, [x for x in small if lo <= x < self.c],
                          self.c, validate=False)

    @cached_property
    def r_star_i0(self) -> ValueIdeal:
        return dual(self.r_filter_i0)

    # lengths, all validated for nesting by length_between

    @cached_property
    def len_rcolon_over_power_nu(self) -> int:
        return length_between(self.report.r_colon_lambda, self.power_nu)

    @cached_property
    def len_bidual_over_lambda(self) -> int:
        return length_between(self.report.lam_bidual, self.lam)

    @cached_property
    def len_omega_over_lambda(self) -> int:
        return length_between(self.report.omega_lambda, self.lam)

    @cached_property
    def len_omega_over_bidual(self) -> int:
        return length_between(self.report.omega_lambda, self.report.lam_bidual)

    @cached_property
    def len_r_over_rcolon(self) -> int:
        return length_between(self.s_ideal, self.report.r_colon_lambda)

    @cached_property
    def len_r_over_power_nu(self) -> int:
        return length_between(self.s_ideal, self.power_nu)

    @cached_property
    def len_rbar_over_omega(self) -> int:
        return length_between(self.normalization, self.report.omega_lambda)

    @cached_property
    def len_rbar_over_bidual(self) -> int:
        return length_between(self.normalization, self.report.lam_bidual)

    @cached_property
    def len_bidual_over_rstar(self) -> int:
        return length_between(self.report.lam_bidual, self.r_star_i0)

    @cached_property
    def len_gammar_over_conductor_power(self) -> int:
        hi = ValueIdeal(self.s, [], self.nu * self.e + self.report.c_lambda,
                        validate=False)
        return length_between(self.s.conductor_ideal(), hi)

    @cached_property
    def sum_gamma(self) -> int:
        return sum(self.ts.entries[i - 1] for i in self.gamma)

    @cached_property
    def sum_not_gamma(self) -> int:
        return self.delta - self.sum_gamma

    @cached_property
    def sum_not_gamma_excess(self) -> int:
        """Sum of r_i - 1 over indices outside Gamma."""
        return self.sum_not_gamma - (self.n - len(self.gamma))


@dataclass(frozen=True)
class TheoremVerdict:
    statement_id: str
    hypotheses_met: bool
    holds: bool
    status: str
    lhs: object = None
    rhs: object = None
    witness: dict | None = None
    notes: str = ""


def _verdict(sid: str, hyp: bool, ok: bool = True, *, lhs=None, rhs=None,
             witness: dict | None = None, notes: str = "") -> TheoremVerdict:
    if not hyp:
        return TheoremVerdict(sid, False, True, "vacuous", None, None, None, notes)
    status = "held" if ok else "failed"
    if ok:
        witness = None
    elif witness is None:
        witness = {"lhs": lhs, "rhs": rhs}
    return TheoremVerdict(sid, True, bool(ok), status, lhs, rhs, witness, notes)


# ---- groups of equivalent closure conditions ----


def _prop2_9(a: Analysis) -> TheoremVerdict:
    c = a.conditions
    values = (c.a1, c.a2, c.a3, c.a4, c.a5, c.a6, c.b1, c.b2,
              c.colon_inside_omega_dual)
    ok = (c.a1 == c.a2 == c.a3 == c.a4 == c.a5 == c.a6
          and c.b1 == c.b2
          and c.a1 == (c.b1 and c.colon_inside_omega_dual))
    return _verdict("Prop2.9", True, ok, lhs=values,
                    notes="closure conditions: both groups agree internally "
                          "and across the bridge")


# ---- conductor comparisons ----


def _prop3_2_1(a: Analysis) -> TheoremVerdict:
    return _verdict("Prop3.2.1", True, a.c - a.report.c_lambda <= a.e * a.nu,
                    lhs=a.c - a.report.c_lambda, rhs=a.e * a.nu)


def _prop3_2_2(a: Analysis) -> TheoremVerdict:
    gap = a.n - a.n_lambda
    mid = a.c - a.report.c_lambda - a.rho
    diagram = a.power_nu.frontier == a.nu * a.e + a.report.c_lambda
    third = a.e * a.nu - a.rho - a.len_gammar_over_conductor_power
    ok = diagram and gap == mid and mid == third and gap <= a.len_r_over_power_nu
    return _verdict("Prop3.2.2", True, ok, lhs=gap, rhs=mid,
                    notes="two-sided chain; also pins the conductor of the "
                          "nu-th power at nu*e + c_Lambda")


def _prop3_2_3(a: Analysis) -> TheoremVerdict:
    p1 = a.c - a.report.c_lambda == a.e * a.nu
    p2 = a.c == a.nu * a.e + a.report.c_lambda
    p3 = a.power_nu.frontier <= a.c
    p4 = a.n - a.n_lambda == a.len_r_over_power_nu
    ok = p1 == p2 == p3 == p4
    return _verdict("Prop3.2.3", True, ok, lhs=(p1, p2, p3, p4),
                    notes="four equivalent forms of the extremal conductor gap")


def _rmk3_3_1(a: Analysis) -> TheoremVerdict:
    gap = a.n - a.n_lambda
    ok = gap >= -a.rho and (not a.is_max_ideal or gap >= a.e - a.rho)
    return _verdict("Rmk3.3.1", True, ok, lhs=gap,
                    rhs=(a.e - a.rho if a.is_max_ideal else -a.rho))


def _lemma3_4(a: Analysis) -> TheoremVerdict:
    hyp = a.report.r_colon_lambda == a.power_nu
    if not hyp:
        return _verdict("Lemma3.4", False)
    ok = (a.c - a.report.c_lambda == a.e * a.nu) and a.conditions.b1
    return _verdict("Lemma3.4", True, ok,
                    lhs=a.c - a.report.c_lambda, rhs=a.e * a.nu,
                    notes="colon equal to the power forces the extremal gap "
                          "and reflexivity of the blow-up")


def _prop3_5_1(a: Analysis) -> TheoremVerdict:
    lhs = 2 * a.rho
    rhs = (a.e * a.nu + (2 * a.delta - a.c)
           - a.len_rcolon_over_power_nu - a.len_omega_over_lambda)
    return _verdict("Prop3.5.1", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _prop3_5_2(a: Analysis) -> TheoremVerdict:
    p1 = 2 * a.rho == a.e * a.nu + (2 * a.delta - a.c)
    p2 = a.lambda_gorenstein and a.c - a.report.c_lambda == a.e * a.nu
    colon_is_power = a.report.r_colon_lambda == a.power_nu
    p3 = colon_is_power and a.report.omega_lambda == a.lam
    p4 = colon_is_power and a.r_colon_omega.contains(a.report.r_colon_lambda)
    ok = p1 == p2 == p3 == p4
    return _verdict("Prop3.5.2", True, ok, lhs=(p1, p2, p3, p4))


# ---- the defect d and type-sequence sums ----


def _prop4_2(a: Analysis) -> TheoremVerdict:
    ok = (a.len_rbar_over_omega <= a.sum_gamma <= a.len_rbar_over_bidual
          and len(a.gamma) == a.len_rbar_over_omega)
    return _verdict("Prop4.2", True, ok,
                    lhs=(a.len_rbar_over_omega, a.sum_gamma,
                         a.len_rbar_over_bidual),
                    notes="sandwich for the Gamma sum; Gamma size matches "
                          "the covolume of omega Lambda")


def _prop4_3_1(a: Analysis) -> TheoremVerdict:
    rhs = a.len_omega_over_bidual - (a.sum_gamma - len(a.gamma))
    return _verdict("Prop4.3.1", True, a.d == rhs, lhs=a.d, rhs=rhs)


def _prop4_3_2(a: Analysis) -> TheoremVerdict:
    hyp = a.report.lam_bidual.contains(a.k)
    alt = a.r_colon_omega.contains(a.report.r_colon_lambda)
    if hyp != alt:
        raise InvariantViolation("the two hypothesis forms must agree")
    if not hyp:
        return _verdict("Prop4.3.2", False)
    return _verdict("Prop4.3.2", True, a.d == 0, lhs=a.d, rhs=0)


def _prop4_3_3(a: Analysis) -> TheoremVerdict:
    tail = sum(a.ts.entries[i - 1] for i in range(a.i0 + 1, a.n + 1)
               if i not in a.gamma)
    rhs = tail - a.len_bidual_over_rstar
    return _verdict("Prop4.3.3", True, a.d == rhs, lhs=a.d, rhs=rhs)


def _prop4_3_4(a: Analysis) -> TheoremVerdict:
    closed = integral_closure(a.report.r_colon_lambda) == a.report.r_colon_lambda
    if closed != (a.report.r_colon_lambda == a.r_filter_i0):
        raise InvariantViolation("integral closedness of the colon must mean "
                                 "it is a full value filter")
    if not closed:
        return _verdict("Prop4.3.4", False)
    return _verdict("Prop4.3.4", True, a.d == 0, lhs=a.d, rhs=0)


def _thm4_4_1(a: Analysis) -> TheoremVerdict:
    rhs = a.sum_not_gamma - a.len_bidual_over_lambda - a.d
    bound = a.r * a.len_r_over_rcolon
    ok = a.rho == rhs and a.rho <= bound
    return _verdict("Thm4.4.1", True, ok, lhs=a.rho, rhs=rhs,
                    notes=f"upper bound r*l(R/R:Lambda) = {bound}")


def _thm4_4_2(a: Analysis) -> TheoremVerdict:
    head = sum(a.ts.entries[i - 1] for i in range(1, a.i0 + 1))
    rhs = head - a.len_bidual_over_lambda + a.len_bidual_over_rstar
    return _verdict("Thm4.4.2", True, a.rho == rhs, lhs=a.rho, rhs=rhs)


def _rmk4_5(a: Analysis) -> TheoremVerdict:
    extremal = a.rho == a.r * a.len_r_over_rcolon
    flat = all(a.ts.entries[i - 1] == a.r for i in range(1, a.n + 1)
               if i not in a.gamma)
    rhs = flat and a.conditions.b1 and a.d == 0
    return _verdict("Rmk4.5", True, extremal == rhs, lhs=extremal, rhs=rhs)


def _cor4_6_1(a: Analysis) -> TheoremVerdict:
    lhs = a.e * a.nu + a.r * a.len_rcolon_over_power_nu
    rhs = (a.r + 1) * a.len_r_over_power_nu
    return _verdict("Cor4.6.1", True, lhs <= rhs, lhs=lhs, rhs=rhs)


def _cor4_6_2(a: Analysis) -> TheoremVerdict:
    if not a.report.h_symmetric:
        return _verdict("Cor4.6.2", False)
    lhs = 2 * a.r * a.len_rcolon_over_power_nu
    rhs = (a.r - 1) * a.e * a.nu
    return _verdict("Cor4.6.2", True, lhs <= rhs, lhs=lhs, rhs=rhs)


def _thm4_7_1(a: Analysis) -> TheoremVerdict:
    lhs = 2 * a.rho
    rhs = (a.e * a.nu + a.sum_not_gamma_excess - a.d
           - a.len_bidual_over_lambda - a.len_rcolon_over_power_nu)
    return _verdict("Thm4.7.1", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _thm4_7_2(a: Analysis) -> TheoremVerdict:
    flat = 2 * a.rho == a.e * a.nu + a.sum_not_gamma_excess
    tight = a.report.r_colon_lambda == a.power_nu and a.d == 0
    return _verdict("Thm4.7.2", True, flat == tight, lhs=flat, rhs=tight)


# ---- almost Gorenstein refinements ----


def _prop5_1(a: Analysis) -> TheoremVerdict:
    probes = [a.ideal, a.m_ideal]
    matches = all(omega_product(j) == bidual(j) for j in probes)
    ok = a.ring_class.almost_gorenstein == matches
    return _verdict("Prop5.1", True, ok,
                    lhs=a.ring_class.almost_gorenstein, rhs=matches,
                    notes="probed on the tested ideal and the maximal ideal; "
                          "the maximal ideal alone decides the converse")


def _cor5_2(a: Analysis) -> TheoremVerdict:
    if not a.ring_class.almost_gorenstein:
        return _verdict("Cor5.2", False)
    first = a.report.lam_bidual == a.report.omega_lambda and a.d == 0
    rhs = a.r - 1 + a.len_r_over_rcolon - a.len_bidual_over_lambda
    ok = first and a.rho == rhs
    return _verdict("Cor5.2", True, ok, lhs=a.rho, rhs=rhs)


def _thm5_3_1(a: Analysis) -> TheoremVerdict:
    if not a.ring_class.almost_gorenstein:
        return _verdict("Thm5.3.1", False)
    lhs = 2 * a.rho
    rhs = (a.e * a.nu + a.r - 1
           - a.len_rcolon_over_power_nu - a.len_bidual_over_lambda)
    return _verdict("Thm5.3.1", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _thm5_3_2(a: Analysis) -> TheoremVerdict:
    if not a.ring_class.almost_gorenstein:
        return _verdict("Thm5.3.2", False)
    p1 = 2 * a.rho == a.e * a.nu + a.r - 1
    p2 = a.lambda_gorenstein and a.c - a.report.c_lambda == a.e * a.nu
    p3 = a.report.r_colon_lambda == a.power_nu
    p4 = a.k.colon(a.lam) == a.power_nu
    ok = (p1 == p2 == p3 == p4) and (not p1 or a.conditions.a1)
    return _verdict("Thm5.3.2", True, ok, lhs=(p1, p2, p3, p4),
                    notes="when the conditions hold, the canonical ideal "
                          "sits inside the blow-up")


def _cor5_4(a: Analysis) -> TheoremVerdict:
    hyp = a.ring_class.almost_gorenstein and a.report.h_symmetric
    if not hyp:
        return _verdict("Cor5.4", False)
    gap = a.len_rcolon_over_power_nu
    ok = gap <= a.r - 1 and ((gap == a.r - 1) == a.conditions.b1)
    return _verdict("Cor5.4", True, ok, lhs=gap, rhs=a.r - 1)


def _cor5_5(a: Analysis) -> TheoremVerdict:
    hyp = a.ring_class.gorenstein and a.report.h_symmetric
    if not hyp:
        return _verdict("Cor5.5", False)
    ok = (2 * a.rho == a.e * a.nu + a.r - 1
          and a.report.r_colon_lambda == a.power_nu)
    return _verdict("Cor5.5", True, ok, lhs=2 * a.rho,
                    rhs=a.e * a.nu + a.r - 1)


def _cor5_6(a: Analysis) -> TheoremVerdict:
    if not a.ring_class.almost_gorenstein:
        return _verdict("Cor5.6", False)
    conductor_is_power = a.s.conductor_ideal() == a.power_nu
    rhs = a.lam_is_normalization and 2 * a.delta == a.e * a.nu + a.r - 1
    return _verdict("Cor5.6", True, conductor_is_power == rhs,
                    lhs=conductor_is_power, rhs=rhs,
                    notes="the conductor ideal of the ring is the one compared "
                          "against the nu-th power")


def _rmk5_8(a: Analysis) -> TheoremVerdict:
    if not a.ring_class.almost_gorenstein:
        return _verdict("Rmk5.8", False)
    refl = is_reflexive(a.ideal)
    rhs = a.ideal.colon(a.ideal).contains(a.dual_m)
    return _verdict("Rmk5.8", True, refl == rhs, lhs=refl, rhs=rhs)


def _thm5_9_1(a: Analysis) -> TheoremVerdict:
    if not a.ring_class.almost_gorenstein:
        return _verdict("Thm5.9.1", False)
    c1 = a.lam.contains(a.dual_m)
    window = [is_reflexive(a.report.power(n)) for n in range(a.nu, a.nu + 3)]
    c2 = window[0]
    c3 = all(window)
    c4 = any(window)
    ok = (c1 == c2 == c3 == c4
          and c1 == a.conditions.a1 == a.conditions.b1)
    return _verdict("Thm5.9.1", True, ok, lhs=(c1, c2, c3, c4),
                    notes="reflexivity of the powers; equivalent to both "
                          "closure-condition groups")


def _thm5_9_2(a: Analysis) -> TheoremVerdict:
    hyp = a.ring_class.almost_gorenstein and is_reflexive(a.ideal)
    if not hyp:
        return _verdict("Thm5.9.2", False)
    ok = (a.conditions.a1 and a.conditions.b1
          and a.lam.contains(a.dual_m))
    return _verdict("Thm5.9.2", True, ok, lhs=ok)


# ---- the maximal-ideal case ----


def _rmk6_1(a: Analysis) -> TheoremVerdict:
    if not a.is_max_ideal:
        return _verdict("Rmk6.1", False)
    shifted_dual = a.dual_m.shift(a.e)
    rhs = (length_between(shifted_dual, a.report.r_colon_lambda)
           + (a.e - a.r))
    ok = a.len_r_over_rcolon == rhs
    if a.ring_class.almost_gorenstein:
        ok = ok and a.conditions.b1
    return _verdict("Rmk6.1", True, ok, lhs=a.len_r_over_rcolon, rhs=rhs)


def _rmk6_2(a: Analysis) -> TheoremVerdict:
    if not a.is_max_ideal:
        return _verdict("Rmk6.2", False)
    stable = a.lam == a.m_ideal.colon(a.m_ideal)
    forms = (stable, a.e == a.mu, a.rho == a.e - 1, a.r == a.e - 1)
    ok = len(set(forms)) == 1
    return _verdict("Rmk6.2", True, ok, lhs=forms)


def _prop6_3(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.e == a.mu
    if not hyp:
        return _verdict("Prop6.3", False)
    ok = a.ring_class.almost_gorenstein == a.lambda_gorenstein
    return _verdict("Prop6.3", True, ok,
                    lhs=a.ring_class.almost_gorenstein,
                    rhs=a.lambda_gorenstein)


def _lemma6_4_3(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.r == a.e - 2
    if not hyp:
        return _verdict("Lemma6.4.3", False)
    cube = a.report.power(3)
    ok = a.m_ideal.shift(a.e).contains(cube)
    return _verdict("Lemma6.4.3", True, ok,
                    notes="the cube of the maximal ideal falls into its "
                          "multiplicity translate")


def _prop6_5_1(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.r == a.e - 2
    if not hyp:
        return _verdict("Prop6.5.1", False)
    return _verdict("Prop6.5.1", True, a.e == a.mu + 1, lhs=a.e, rhs=a.mu + 1)


def _prop6_5_2(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.e == a.mu + 1
    if not hyp:
        return _verdict("Prop6.5.2", False)
    gap = length_between(a.dual_m.shift(a.e), a.report.r_colon_lambda)
    return _verdict("Prop6.5.2", True, gap == 1, lhs=gap, rhs=1)


def _thm6_6(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.e == a.mu + 1
    if not hyp:
        return _verdict("Thm6.6", False)
    rhs = a.r - 1 + (a.e - 1) * (a.nu - 2)
    return _verdict("Thm6.6", True, a.len_rcolon_over_power_nu == rhs,
                    lhs=a.len_rcolon_over_power_nu, rhs=rhs)


def _cor6_7_1(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.e == a.mu + 1
    if not hyp:
        return _verdict("Cor6.7.1", False)
    lhs = a.report.r_colon_lambda == a.power_nu
    rhs = a.ring_class.gorenstein and a.nu == 2
    return _verdict("Cor6.7.1", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _cor6_7_2(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.e == a.mu + 1
    if not hyp:
        return _verdict("Cor6.7.2", False)
    lhs = sum(a.ts.entries[i - 1] - 1 for i in range(2, a.n + 1)
              if i not in a.gamma)
    rhs = a.d + a.len_bidual_over_lambda + (a.nu - 2)
    return _verdict("Cor6.7.2", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _cor6_7_3(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.e == a.mu + 1
    if not hyp:
        return _verdict("Cor6.7.3", False)
    rhs = a.nu == 2 and a.report.omega_lambda == a.lam
    return _verdict("Cor6.7.3", True,
                    a.ring_class.almost_gorenstein == rhs,
                    lhs=a.ring_class.almost_gorenstein, rhs=rhs)


def _cor6_7u(a: Analysis) -> TheoremVerdict:
    if not a.is_max_ideal:
        return _verdict("Cor6.7u", False)
    lhs = a.r == a.e - 2 and a.report.r_colon_lambda == a.power_nu
    rhs = a.ring_class.gorenstein and a.e == 3
    return _verdict("Cor6.7u", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _rmk6_8(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.nu == 2
    if not hyp:
        return _verdict("Rmk6.8", False)
    rhs = 2 * a.e - a.mu - 1
    return _verdict("Rmk6.8", True, a.rho == rhs, lhs=a.rho, rhs=rhs)


def _prop6_9_1(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.nu == 2
    if not hyp:
        return _verdict("Prop6.9.1", False)
    lhs = 2 * a.e + a.r * a.len_rcolon_over_power_nu
    rhs = (a.r + 1) * (a.mu + 1)
    return _verdict("Prop6.9.1", True, lhs <= rhs, lhs=lhs, rhs=rhs)


def _prop6_9_2(a: Analysis) -> TheoremVerdict:
    hyp = (a.is_max_ideal and a.nu == 2
           and a.ring_class.almost_gorenstein)
    if not hyp:
        return _verdict("Prop6.9.2", False)
    lhs = 2 * (a.e - a.mu - 1)
    rhs = (a.r - 1) - a.len_rcolon_over_power_nu
    ok = lhs == rhs
    if a.ring_class.gorenstein:
        ok = ok and a.e == a.mu + 1 and a.report.r_colon_is_power
    if a.ring_class.kunz:
        ok = ok and a.e == a.mu + 1 and a.len_rcolon_over_power_nu == 1
    return _verdict("Prop6.9.2", True, ok, lhs=lhs, rhs=rhs,
                    notes="with the Gorenstein and Kunz specializations "
                          "folded in")


def _cor6_10(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.ring_class.gorenstein
    if not hyp:
        return _verdict("Cor6.10", False)
    square = a.report.power(2)
    forms = (a.e == a.mu + 1, a.nu == 2, a.report.r_colon_lambda == square)
    ok = len(set(forms)) == 1
    return _verdict("Cor6.10", True, ok, lhs=forms,
                    notes="the colon is compared against the literal square, "
                          "not the nu-th power")


def _prop6_11(a: Analysis) -> TheoremVerdict:
    if not a.is_max_ideal:
        return _verdict("Prop6.11", False)
    square = a.report.power(2)
    lhs = a.s.conductor_ideal() == square
    rhs = (a.lam_is_normalization
           and 2 * (a.e - a.mu - 1) == 2 * a.delta - a.c
           and a.nu == 2)
    return _verdict("Prop6.11", True, lhs == rhs, lhs=lhs, rhs=rhs)


def _prop6_13_1(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.nu == 3 and a.r == 2
    if not hyp:
        return _verdict("Prop6.13.1", False)
    hilbert2 = length_between(a.report.power(2), a.report.power(3))
    lhs = 3 * (a.e - a.mu - 1) + 2 * a.len_rcolon_over_power_nu
    rhs = 3 * hilbert2
    return _verdict("Prop6.13.1", True, lhs <= rhs, lhs=lhs, rhs=rhs,
                    notes="colon length taken over the cube, matching the "
                          "derivation from the general power inequality")


def _prop6_13_2(a: Analysis) -> TheoremVerdict:
    hyp = a.is_max_ideal and a.nu == 3 and a.report.h_symmetric
    if not hyp:
        return _verdict("Prop6.13.2", False)
    lhs = a.r * a.len_rcolon_over_power_nu
    rhs = 3 * a.mu * (a.r - 1)
    return _verdict("Prop6.13.2", True, lhs <= rhs, lhs=lhs, rhs=rhs)


def _prop6_13_3(a: Analysis) -> TheoremVerdict:
    hyp = (a.is_max_ideal and a.nu == 3
           and a.ring_class.almost_gorenstein)
    if not hyp:
        return _verdict("Prop6.13.3", False)
    rhs = (a.len_rcolon_over_power_nu == a.r - 1 and a.e == 2 * a.mu)
    return _verdict("Prop6.13.3", True, a.report.h_symmetric == rhs,
                    lhs=a.report.h_symmetric, rhs=rhs)


def _cor6_14(a: Analysis) -> TheoremVerdict:
    hyp = (a.is_max_ideal and a.ring_class.almost_gorenstein
           and a.e == 2 * a.mu)
    if not hyp:
        return _verdict("Cor6.14", False)
    lhs = a.report.r_colon_is_power
    rhs = 2 * a.rho == 2 * a.nu * a.mu + a.r - 1
    return _verdict("Cor6.14", True, lhs == rhs, lhs=lhs, rhs=rhs)


STATEMENTS = {
    "Prop2.9": _prop2_9,
    "Prop3.2.1": _prop3_2_1,
    "Prop3.2.2": _prop3_2_2,
    "Prop3.2.3": _prop3_2_3,
    "Rmk3.3.1": _rmk3_3_1,
    "Lemma3.4": _lemma3_4,
    "Prop3.5.1": _prop3_5_1,
    "Prop3.5.2": _prop3_5_2,
    "Prop4.2": _prop4_2,
    "Prop4.3.1": _prop4_3_1,
    "Prop4.3.2": _prop4_3_2,
    "Prop4.3.3": _prop4_3_3,
    "Prop4.3.4": _prop4_3_4,
    "Thm4.4.1": _thm4_4_1,
    "Thm4.4.2": _thm4_4_2,
    "Rmk4.5": _rmk4_5,
    "Cor4.6.1": _cor4_6_1,
    "Cor4.6.2": _cor4_6_2,
    "Thm4.7.1": _thm4_7_1,
    "Thm4.7.2": _thm4_7_2,
    "Prop5.1": _prop5_1,
    "Cor5.2": _cor5_2,
    "Thm5.3.1": _thm5_3_1,
    "Thm5.3.2": _thm5_3_2,
    "Cor5.4": _cor5_4,
    "Cor5.5": _cor5_5,
    "Cor5.6": _cor5_6,
    "Rmk5.8": _rmk5_8,
    "Thm5.9.1": _thm5_9_1,
    "Thm5.9.2": _thm5_9_2,
    "Rmk6.1": _rmk6_1,
    "Rmk6.2": _rmk6_2,
    "Prop6.3": _prop6_3,
    "Lemma6.4.3": _lemma6_4_3,
    "Prop6.5.1": _prop6_5_1,
    "Prop6.5.2": _prop6_5_2,
    "Thm6.6": _thm6_6,
    "Cor6.7.1": _cor6_7_1,
    "Cor6.7.2": _cor6_7_2,
    "Cor6.7.3": _cor6_7_3,
    "Cor6.7u": _cor6_7u,
    "Rmk6.8": _rmk6_8,
    "Prop6.9.1": _prop6_9_1,
    "Prop6.9.2": _prop6_9_2,
    "Cor6.10": _cor6_10,
    "Prop6.11": _prop6_11,
    "Prop6.13.1": _prop6_13_1,
    "Prop6.13.2": _prop6_13_2,
    "Prop6.13.3": _prop6_13_3,
    "Cor6.14": _cor6_14,
}


def catalog_ids() -> tuple[str, ...]:
    return tuple(STATEMENTS)


def expand_statement_ids(requested) -> tuple[str, ...]:
    """Resolve exact ids and group prefixes like "Thm4.7" to catalog ids."""
    out: list[str] = []
    for raw in requested:
        sid = raw.strip()
        if sid in STATEMENTS:
            if sid not in out:
                out.append(sid)
            continue
        hits = [name for name in STATEMENTS
                if name.startswith(sid + ".")
                or (name.startswith(sid) and name[len(sid):] == "u")]
        if not hits:
            raise UnknownStatement(f"no statement matches {sid!r}")
        for name in hits:
            if name not in out:
                out.append(name)
    return tuple(out)


def verify_statement(statement_id: str, e: ValueIdeal) -> TheoremVerdict:
    if statement_id not in STATEMENTS:
        raise UnknownStatement(f"no statement named {statement_id!r}")
    return STATEMENTS[statement_id](Analysis.of(e))


def verify_many(e: ValueIdeal, statement_ids=None) -> list[TheoremVerdict]:
    """Run several statements against one shared analysis."""
    if statement_ids is None:
        names = catalog_ids()
    else:
        names = expand_statement_ids(statement_ids)
    shared = Analysis.of(e)
    return [STATEMENTS[name](shared) for name in names]
