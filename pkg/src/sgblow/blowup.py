"""Blow-up analysis of a proper ideal over a numerical semigroup.

For a non-principal ideal E inside the maximal ideal, the multiplicity is
e = min E (a monomial minimal reduction always exists in this model), the
Hilbert function H(n) counts nE minus (n+1)E, the reduction exponent nu is
the first n with H(n) = e, and the blow-up Lambda is the union of the
colon quotients nE - nE, which stabilizes at n = nu.

Lambda is computed twice: by iterating nE - nE, and independently as the
semigroup generated by S together with E shifted down by its minimum.  Both
routes must agree; disagreement raises InvariantViolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import NumericalSemigroup, ValueIdeal, length_between
from .errors import (
    DegenerateBlowup,
    EquivalenceViolation,
    InvariantViolation,
    NotProper,
    PrincipalIdeal,
)
from .invariants import canonical_ideal, type_sequence


def power(e: ValueIdeal, k: int) -> ValueIdeal:
    """k-fold sumset; k = 0 gives the carrier itself."""
    if k < 0:
        raise ValueError("power wants k >= 0")
    result = e.carrier.as_ideal()
    for _ in range(k):
        result = result + e
    return result


@dataclass(frozen=True)
class HPolynomial:
    """Numerator data of the Hilbert series of the filtration by powers.

    coefficients[i] = H(i) - H(i-1) with coefficients[0] = H(0); the degree
    is the reduction exponent nu, h(1) = e and h'(1) = rho.
    """

    coefficients: tuple[int, ...]
    hilbert: tuple[int, ...]
    e: int
    nu: int
    rho: int

    @property
    def symmetric(self) -> bool:
        c = self.coefficients
        return all(c[i] == c[self.nu - i] for i in range(self.nu + 1))


@dataclass(frozen=True)
class _BlowupData:
    powers: tuple[ValueIdeal, ...]
    hilbert: tuple[int, ...]
    nu: int
    rho: int
    lam: ValueIdeal


def _check_proper(e: ValueIdeal) -> None:
    s_ideal = e.carrier.as_ideal()
    if not s_ideal.contains(e) or 0 in e:
        raise NotProper("blow-up analysis wants an ideal inside the maximal ideal")
    if e.is_principal():
        raise PrincipalIdeal(f"ideal generated by {e.min_element} alone is principal")


@lru_cache(maxsize=2048)
def _blowup_data(e_ideal: ValueIdeal) -> _BlowupData:
    _check_proper(e_ideal)
    s = e_ideal.carrier
    s_ideal = s.as_ideal()
    a = e_ideal.min_element

    powers = [s_ideal, e_ideal]
    hseq: list[int] = []
    while True:
        h = length_between(powers[-2], powers[-1])
        if h > a:
            raise InvariantViolation("Hilbert value exceeded the multiplicity")
        hseq.append(h)
        if h == a:
            break
        if len(hseq) > a + 1:
            raise InvariantViolation("Hilbert function failed to reach the multiplicity")
        powers.append(powers[-1] + e_ideal)
    nu = len(hseq) - 1
    if nu < 1:
        raise InvariantViolation("reduction exponent 0 would mean a principal ideal")
    rho = sum(a - h for h in hseq)

    def power_at(n: int) -> ValueIdeal:
        while n >= len(powers):
            powers.append(powers[-1] + e_ideal)
        return powers[n]

    quotients: dict[int, ValueIdeal] = {}

    def stage(n: int) -> ValueIdeal:
        if n not in quotients:
            p = power_at(n)
            quotients[n] = p.colon(p)
        return quotients[n]

    lam = None
    cap = max(a, nu) + 1
    n = nu
    while n <= cap:
        if stage(n) == stage(n + 1):
            lam = stage(n)
            break
        n += 1
    if lam is None:
        raise InvariantViolation("blow-up iteration failed to stabilize within the cap")

    # the stages must first hit Lambda exactly at nu, and so must nE + Lambda = nE
    first_stage = next(k for k in range(1, n + 1) if stage(k) == lam)
    if first_stage != nu:
        raise InvariantViolation(f"stages reached the blow-up at {first_stage}, expected {nu}")
    first_invariant = next(k for k in range(1, nu + 1) if (power_at(k) + lam) == power_at(k))
    if first_invariant != nu:
        raise InvariantViolation(
            f"powers absorb the blow-up from {first_invariant}, expected {nu}")
    if rho != length_between(lam, s_ideal):
        raise InvariantViolation("rho disagrees with l(Lambda/R)")

    # independent route: the semigroup generated by S and E - min(E)
    shifted = [g - a for g in e_ideal.minimal_generators() if g != a]
    generated = NumericalSemigroup.from_generators(sorted(set(s.min_generators) | set(shifted)))
    lam_by_generation = ValueIdeal(
        s, [x for x in generated.small_elements if x < generated.conductor],
        generated.conductor, validate=False)
    if lam != lam_by_generation:
        raise InvariantViolation("blow-up routes disagree")

    return _BlowupData(powers=tuple(powers[:nu + 2]), hilbert=tuple(hseq),
                       nu=nu, rho=rho, lam=lam)


def hilbert_function(e: ValueIdeal, n_max: int) -> tuple[int, ...]:
    """H(0..n_max); constant e from nu on."""
    data = _blowup_data(e)
    mult = e.min_element
    return tuple(data.hilbert[n] if n <= data.nu else mult for n in range(n_max + 1))


def h_polynomial(e: ValueIdeal) -> HPolynomial:
    data = _blowup_data(e)
    hs = data.hilbert
    coeffs = (hs[0],) + tuple(hs[i] - hs[i - 1] for i in range(1, data.nu + 1))
    return HPolynomial(coefficients=coeffs, hilbert=hs, e=e.min_element,
                       nu=data.nu, rho=data.rho)


def blowup_lambda(e: ValueIdeal) -> ValueIdeal:
    """The blow-up of E: union of the stages nE - nE."""
    return _blowup_data(e).lam


@dataclass(frozen=True)
class ConditionsReport:
    """The two proven-equivalent condition groups and the bridge between them.

    Group A: the canonical ideal sits inside the blow-up (six forms).
    Group B: the blow-up is reflexive (two forms).
    A holds iff B holds together with R:Lambda inside R:omega.
    """

    a1: bool
    a2: bool
    a3: bool
    a4: bool
    a5: bool
    a6: bool
    b1: bool
    b2: bool
    colon_inside_omega_dual: bool

    @property
    def holds_a(self) -> bool:
        return self.a1

    @property
    def holds_b(self) -> bool:
        return self.b1


def check_conditions_a_b(e: ValueIdeal) -> ConditionsReport:
    """Evaluate every member of both groups independently and assert coherence."""
    data = _blowup_data(e)
    s = e.carrier
    s_ideal = s.as_ideal()
    k = canonical_ideal(s)
    lam = data.lam
    r_colon_lam = s_ideal.colon(lam)

    a1 = lam.contains(k)
    a2 = (k + lam) == lam
    a3 = k.colon(lam) == r_colon_lam
    a5 = (k + data.powers[data.nu]) == data.powers[data.nu]
    a6 = any((k + data.powers[n]) == data.powers[n] for n in range(1, data.nu + 1))

    # A4 quantifies over all n >= nu; once the product minimum passes the
    # conductor the condition is translation-stable, so the scan is finite.
    a4 = True
    p = data.powers[data.nu]
    guard = 0
    while True:
        closed = (p + k).intersect(s_ideal) == p
        if not closed:
            a4 = False
            break
        if p.min_element >= s.conductor:
            break
        p = p + e
        guard += 1
        if guard > s.conductor + 2:
            raise InvariantViolation("A4 scan failed to terminate")

    lam_bidual = s_ideal.colon(r_colon_lam)
    b1 = lam == lam_bidual
    b2 = k.colon(lam) == (k + r_colon_lam)

    r_colon_omega = s_ideal.colon(k)
    bridge = r_colon_omega.contains(r_colon_lam)

    if not (a1 == a2 == a3 == a4 == a5 == a6):
        raise EquivalenceViolation(
            f"group A disagrees: {a1},{a2},{a3},{a4},{a5},{a6}")
    if b1 != b2:
        raise EquivalenceViolation(f"group B disagrees: {b1},{b2}")
    if a1 != (b1 and bridge):
        raise EquivalenceViolation("bridge rule between the groups failed")
    return ConditionsReport(a1=a1, a2=a2, a3=a3, a4=a4, a5=a5, a6=a6,
                            b1=b1, b2=b2, colon_inside_omega_dual=bridge)


@dataclass(frozen=True)
class BlowupReport:
    """Full invariant bundle for one (semigroup, ideal) pair."""

    semigroup: NumericalSemigroup
    ideal: ValueIdeal
    h: HPolynomial
    powers: tuple[ValueIdeal, ...]
    lam: ValueIdeal
    lam_bidual: ValueIdeal
    omega_lambda: ValueIdeal
    r_colon_lambda: ValueIdeal
    c_lambda: int
    delta_lambda: int
    gamma_set: tuple[int, ...]
    d: int
    i0: int
    h_symmetric: bool
    conditions_a: bool
    conditions_b: bool
    r_colon_is_power: bool
    conductor_in_power: bool

    @property
    def e(self) -> int:
        return self.h.e

    @property
    def nu(self) -> int:
        return self.h.nu

    @property
    def rho(self) -> int:
        return self.h.rho

    def power(self, k: int) -> ValueIdeal:
        if k < len(self.powers):
            return self.powers[k]
        result = self.powers[-1]
        for _ in range(k - len(self.powers) + 1):
            result = result + self.ideal
        return result


def analyze(e: ValueIdeal) -> BlowupReport:
    """Compute the full blow-up bundle; raises DegenerateBlowup if Lambda = S."""
    data = _blowup_data(e)
    s = e.carrier
    s_ideal = s.as_ideal()
    if data.lam == s_ideal:
        raise DegenerateBlowup("the blow-up equals the semigroup itself")
    k = canonical_ideal(s)
    ts = type_sequence(s)
    lam = data.lam
    r_colon_lam = s_ideal.colon(lam)
    lam_bidual = s_ideal.colon(r_colon_lam)
    omega_lam = k + lam
    nn = s.normalization()
    c_lambda = lam.frontier
    delta_lambda = length_between(nn, lam)
    if data.rho != s.genus - delta_lambda:
        raise InvariantViolation("rho must equal genus minus the blow-up genus")

    small = s.small_elements
    n = len(small) - 1
    gamma = tuple(i for i in range(1, n + 1) if small[i - 1] in r_colon_lam)
    d = length_between(nn, lam_bidual) - sum(ts.entries[i - 1] for i in gamma)
    i0 = small.index(r_colon_lam.min_element)

    # window bookkeeping: R:Lambda below the conductor is exactly {s_(i-1) : i in Gamma}
    if len(gamma) != length_between(r_colon_lam, s.conductor_ideal()):
        raise InvariantViolation("Gamma size disagrees with l(R:Lambda/gamma_R)")
    if length_between(s_ideal, r_colon_lam) != n - len(gamma):
        raise InvariantViolation("l(R/R:Lambda) must count small elements outside Gamma")

    conds = check_conditions_a_b(e)
    h = h_polynomial(e)
    power_nu = data.powers[data.nu]
    return BlowupReport(
        semigroup=s,
        ideal=e,
        h=h,
        powers=data.powers,
        lam=lam,
        lam_bidual=lam_bidual,
        omega_lambda=omega_lam,
        r_colon_lambda=r_colon_lam,
        c_lambda=c_lambda,
        delta_lambda=delta_lambda,
        gamma_set=gamma,
        d=d,
        i0=i0,
        h_symmetric=h.symmetric,
        conditions_a=conds.holds_a,
        conditions_b=conds.holds_b,
        r_colon_is_power=(r_colon_lam == power_nu),
        conductor_in_power=(power_nu.frontier <= s.conductor),
    )
