"""End-to-end checks of the theta-curve ideal formulas, runnable from the CLI."""

from __future__ import annotations

from .catalog import (
    theta_alpha,
    theta_alpha_prime,
    theta_presentation,
)
from .ideals import ideal_equals, ideal_from, ideal_normalize
from .invariants import alexander_matrix, elementary_ideal, twisted_matrix
from .maps import lemma36_rho
from .rings import ring_make


def _laurent_spec():
    return ring_make(0, (("t", 0),))


def theta_case_ideal(spec, n):
    """The mod-6 case value of the (n-1)-st ideal of the theta-n group."""
    one = spec.one()
    t = spec.monomial((1,))
    t2 = spec.monomial((2,))
    cyclo = one - t + t2  # 1 - t + t^2
    m = n % 6
    if m in (1, 5):
        return ideal_from(spec, (one,))
    if m in (2, 4):
        return ideal_from(spec, (spec.from_int(3), one + t))
    if m == 3:
        return ideal_from(spec, (spec.from_int(2), cyclo))
    return ideal_from(spec, (cyclo,))


def check_theorem34(n):
    """E_d of the theta-n group under alpha_n over Z[t,t^-1], all d."""
    pres = theta_presentation(n)
    alpha = theta_alpha(pres, n)
    m = alexander_matrix(pres, alpha)
    spec = m.spec
    for d in range(n - 1):
        if not elementary_ideal(m, d, simplify=False).is_zero():
            return False
    for d in (n, n + 1):
        if not elementary_ideal(m, d).is_unit():
            return False
    ideal = elementary_ideal(m, n - 1, simplify=False)
    return ideal_equals(ideal, theta_case_ideal(spec, n))


def check_remark34(n):
    """E_{n-1} under alpha'_n over Z[t]/(t^n - 1) equals (1 - t + t^2)."""
    pres = theta_presentation(n)
    alpha = theta_alpha_prime(pres, n)
    m = alexander_matrix(pres, alpha)
    spec = m.spec
    ideal = elementary_ideal(m, n - 1, simplify=False)
    one, t, t2 = spec.one(), spec.monomial((1,)), spec.monomial((2,))
    return ideal_equals(ideal, ideal_from(spec, (one - t + t2,)))


def check_theorem37(n):
    """Twisted ideals over Z_2[t,t^-1]: (0) below 2n-2, (1+t) there, then (1)."""
    pres = theta_presentation(n)
    alpha = theta_alpha(pres, n)
    rho = lemma36_rho(pres, n)
    m = twisted_matrix(pres, alpha, rho)
    for d in range(2 * n - 2):
        if not elementary_ideal(m, d, simplify=False).is_zero():
            return False
    for d in (2 * n - 1, 2 * n):
        if not elementary_ideal(m, d).is_unit():
            return False
    ideal = elementary_ideal(m, 2 * n - 2, simplify=False)
    spec = m.spec
    target = ideal_from(spec, (spec.one() + spec.monomial((1,)),))
    return ideal_equals(ideal, target)


def check_lemma36(n):
    """Construction succeeds iff the assignment is a representation."""
    pres = theta_presentation(n)
    lemma36_rho(pres, n)  # raises on failure
    return True
