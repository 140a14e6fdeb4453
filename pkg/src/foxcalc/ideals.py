"""Finitely generated ideals in the three ring regimes the tables need.

Normalization dispatches on the ring spec:

  (a) finite rings (p > 0, all orders finite): the ideal is a Z_p-subspace
      of the monomial basis, computed by row reduction; displayed via a
      greedy minimal generating set.
  (b) univariate over a prime field with infinite order: principal, by the
      Euclidean algorithm.
  (c) univariate over Z with infinite order (Laurent generators are shifted
      to polynomials) or a single finite-order variable (t^k - 1 adjoined):
      a strong Groebner basis over Z[t] built from S-polynomials and
      gcd-polynomials, giving exact membership and equality.
  (d) anything else: generators only; equality falls back to probing in
      finite quotients and is three-valued.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from math import gcd

from .rings import RingElement, RingSpec, RingError, normalize_sign, ring_make, term_key

FINITE_SIZE_CAP = 2**16
DISPLAY_SIZE_CAP = 2**12
PROBES = ((2, 2), (2, 3), (3, 2), (3, 4), (5, 2))


class NormalForm(enum.Enum):
    ZERO = "zero"
    UNIT = "unit"
    PRINCIPAL = "principal"
    FINITE_SET = "finite_set"
    GB = "gb"
    GENERATORS_ONLY = "generators_only"


class Comparison(enum.Enum):
    EQUAL_PROVEN = "equal-proven"
    UNEQUAL_PROVEN = "unequal-proven"
    UNDETERMINED = "undetermined"


class UndecidableError(RingError):
    pass


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Z: tuples (c_0, ..., c_d), no trailing 0.


def zp_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def zp_add(a, b):
    n = max(len(a), len(b))
    return zp_trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def zp_neg(a):
    return tuple(-c for c in a)


def zp_scale_shift(a, c, k):
    """c * t^k * a"""
    if c == 0 or not a:
        return ()
    return zp_trim([0] * k + [c * x for x in a])


def zp_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return zp_trim(out)


def zp_deg(a):
    return len(a) - 1


def zp_lc(a):
    return a[-1]


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def zp_reduce(f, basis):
    """Fully reduce f by a set of Z[t] polynomials (Euclidean on coefficients).

    Each coefficient, from the top down, ends up in [0, |lc|) for every basis
    element whose leading term can reach it.
    """
    f = zp_trim(f)
    frozen = {}
    while f:
        d, c = zp_deg(f), zp_lc(f)
        for g in basis:
            if zp_deg(g) <= d:
                r = c % abs(zp_lc(g))
                if r != c:
                    q = (c - r) // zp_lc(g)
                    f = zp_add(f, zp_neg(zp_scale_shift(g, q, d - zp_deg(g))))
                    break
        else:
            frozen[d] = c
            f = zp_trim(f[:-1])
    if not frozen:
        return ()
    res = [0] * (max(frozen) + 1)
    for d, c in frozen.items():
        res[d] = c
    return zp_trim(res)


def zp_top_reduces_to_zero(f, basis):
    """Membership test: top-reduction by a strong Groebner basis."""
    f = zp_trim(f)
    while f:
        d, c = zp_deg(f), zp_lc(f)
        hit = False
        for g in basis:
            if zp_deg(g) <= d and c % zp_lc(g) == 0:
                f = zp_add(f, zp_neg(zp_scale_shift(g, c // zp_lc(g), d - zp_deg(g))))
                hit = True
                break
        if not hit:
            return False
    return True


def strong_groebner(gens):
    """Strong Groebner basis of an ideal of Z[t] (univariate).

    Processes S-polynomials (lcm of leading coefficients) and G-polynomials
    (Bezout combination achieving the gcd of leading coefficients), reducing
    each fully; terminates because leading terms strictly improve.
    """
    basis = [zp_trim(g) for g in gens if zp_trim(g)]
    basis = [g if zp_lc(g) > 0 else zp_neg(g) for g in basis]
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        df, dg = zp_deg(f), zp_deg(g)
        a, b = zp_lc(f), zp_lc(g)
        d = max(df, dg)
        l = a * b // gcd(a, b)
        spoly = zp_add(
            zp_scale_shift(f, l // a, d - df),
            zp_neg(zp_scale_shift(g, l // b, d - dg)),
        )
        h, u, v = _ext_gcd(a, b)
        gpoly = zp_add(zp_scale_shift(f, u, d - df), zp_scale_shift(g, v, d - dg))
        for cand in (spoly, gpoly):
            cand = zp_reduce(cand, basis)
            if cand:
                if zp_lc(cand) < 0:
                    cand = zp_neg(cand)
                for k in range(len(basis)):
                    pairs.append((k, len(basis)))
                basis.append(cand)
    # minimalize: drop elements whose leading term an earlier-kept one divides
    keep = []
    for g in sorted(basis, key=lambda g: (zp_deg(g), zp_lc(g), g)):
        if any(
            zp_deg(h) <= zp_deg(g) and zp_lc(g) % zp_lc(h) == 0 for h in keep
        ):
            continue
        keep.append(g)
    # fully interreduce for a canonical presentation
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = zp_reduce(g, others) if others else g
        if r:
            if zp_lc(r) < 0:
                r = zp_neg(r)
            reduced.append(r)
    reduced.sort(key=lambda g: (zp_deg(g), g))
    return tuple(reduced)


# ---------------------------------------------------------------------------
# Finite-ring linear algebra (Z_p vectors on the monomial basis).


def _elem_to_vector(elem, monomials, index):
    vec = [0] * len(monomials)
    for exps, c in elem.terms.items():
        vec[index[exps]] = c % elem.spec.modulus
    return vec


def _vector_to_elem(spec, vec, monomials):
    return RingElement(spec, {m: c for m, c in zip(monomials, vec) if c})


def _rref(vectors, p):
    """Reduced row echelon form over Z_p; returns tuple of pivot rows."""
    rows = [list(v) for v in vectors]
    basis = []
    pivots = []
    for row in rows:
        for prow, pcol in zip(basis, pivots):
            if row[pcol] % p:
                f = row[pcol] % p
                row = [(a - f * b) % p for a, b in zip(row, prow)]
        lead = next((i for i, c in enumerate(row) if c % p), None)
        if lead is None:
            continue
        inv = pow(row[lead], -1, p)
        row = [(c * inv) % p for c in row]
        basis.append(row)
        pivots.append(lead)
    # back-substitute for uniqueness
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    basis = [basis[i] for i in order]
    pivots = [pivots[i] for i in order]
    for i in range(len(basis)):
        for j in range(len(basis)):
            if j != i and basis[i][pivots[j]]:
                f = basis[i][pivots[j]]
                basis[i] = [(a - f * b) % p for a, b in zip(basis[i], basis[j])]
    return tuple(tuple(r) for r in basis), tuple(pivots)


def _in_span(vec, basis, pivots, p):
    row = list(vec)
    for prow, pcol in zip(basis, pivots):
        if row[pcol] % p:
            f = row[pcol] % p
            row = [(a - f * b) % p for a, b in zip(row, prow)]
    return all(c % p == 0 for c in row)


def finite_ideal_span(spec, gens):
    """Echelon basis of the ideal generated by gens in a finite spec."""
    monomials = spec.all_monomials()
    index = {m: i for i, m in enumerate(monomials)}
    vectors = []
    for g in gens:
        for m in monomials:
            prod_elem = g * spec.monomial(m)
            vectors.append(_elem_to_vector(prod_elem, monomials, index))
    return _rref(vectors, spec.modulus), monomials, index


# ---------------------------------------------------------------------------
# Ideal objects.


@dataclass(frozen=True)
class Ideal:
    spec: RingSpec
    generators: tuple
    normal_form: NormalForm = NormalForm.GENERATORS_ONLY
    data: tuple = ()  # normal-form payload (GB tuple, span basis, principal gen)

    def is_zero(self):
        return self.normal_form is NormalForm.ZERO

    def is_unit(self):
        return self.normal_form is NormalForm.UNIT


def ideal_from(spec, gens):
    gens = tuple(g for g in gens if not g.is_zero())
    for g in gens:
        if g.spec != spec:
            raise RingError("ideal generator spec mismatch")
    if not gens:
        return Ideal(spec, (), NormalForm.ZERO)
    if any(g.is_unit_monomial() for g in gens):
        return Ideal(spec, gens, NormalForm.UNIT)
    return Ideal(spec, gens)


def _regime(spec):
    if spec.is_finite():
        return "finite"
    if spec.nvars == 1:
        name, k = spec.variables[0]
        if spec.modulus > 0 and k == 0:
            return "field_univariate"
        if spec.modulus == 0:
            return "z_univariate"  # k = 0 (Laurent) or k > 0 (adjoin t^k - 1)
    if spec.nvars == 0 and spec.modulus == 0:
        return "z_univariate"
    return "other"


def _to_zpoly(elem):
    """Univariate ring element -> dense Z[t] polynomial, Laurent-shifted."""
    if elem.spec.nvars == 0:
        ((_, c),) = elem.terms.items() if elem.terms else (((), 0),)
        return (c,) if c else ()
    shifted = elem.shift_to_origin()
    if not shifted.terms:
        return ()
    degmax = max(e[0] for e in shifted.terms)
    out = [0] * (degmax + 1)
    for (e,), c in shifted.terms.items():
        out[e] = c
    return zp_trim(out)


def _quotient_modulus_poly(spec):
    """t^k - 1 when the single variable has finite order k, else None."""
    if spec.nvars == 1 and spec.variables[0][1] > 0:
        k = spec.variables[0][1]
        return zp_trim([-1] + [0] * (k - 1) + [1])
    return None


def _zpoly_to_elem(spec, poly):
    if spec.nvars == 0:
        return spec.from_int(poly[0] if poly else 0)
    return RingElement(spec, {(d,): c for d, c in enumerate(poly) if c})


def ideal_normalize(ideal):
    """Populate the normal form; idempotent."""
    if ideal.normal_form not in (NormalForm.GENERATORS_ONLY, NormalForm.UNIT):
        if ideal.normal_form is NormalForm.ZERO or ideal.data:
            return ideal
    spec = ideal.spec
    regime = _regime(spec)
    gens = ideal.generators
    if not gens:
        return Ideal(spec, (), NormalForm.ZERO)
    if regime == "finite":
        if spec.size() > FINITE_SIZE_CAP:
            raise RingError("finite ring over the size cap")
        (basis, pivots), monomials, _ = finite_ideal_span(spec, gens)
        one_vec = [0] * len(monomials)
        one_vec[monomials.index((0,) * spec.nvars)] = 1
        if _in_span(one_vec, basis, pivots, spec.modulus):
            return Ideal(spec, gens, NormalForm.UNIT, (basis, pivots))
        if not basis:
            return Ideal(spec, (), NormalForm.ZERO)
        return Ideal(spec, gens, NormalForm.FINITE_SET, (basis, pivots))
    if regime == "field_univariate":
        p = spec.modulus
        g = ()
        for elem in gens:
            g = _gfp_gcd(g, _to_zpoly_modp(elem, p), p)
        if not g:
            return Ideal(spec, (), NormalForm.ZERO)
        gen_elem = _zpoly_to_elem(spec, g)
        if gen_elem.is_unit_monomial() or zp_deg(g) == 0:
            return Ideal(spec, gens, NormalForm.UNIT, (gen_elem,))
        return Ideal(spec, gens, NormalForm.PRINCIPAL, (gen_elem,))
    if regime == "z_univariate":
        polys = [_to_zpoly(g) for g in gens]
        quot = _quotient_modulus_poly(spec)
        if quot:
            polys.append(quot)
        gb = strong_groebner(polys)
        if gb == ((1,),):
            return Ideal(spec, gens, NormalForm.UNIT, (gb,))
        if not gb:
            return Ideal(spec, (), NormalForm.ZERO)
        return Ideal(spec, gens, NormalForm.GB, (gb,))
    if ideal.normal_form is NormalForm.UNIT:
        return ideal
    return Ideal(spec, gens, NormalForm.GENERATORS_ONLY)


def _to_zpoly_modp(elem, p):
    return zp_trim(c % p for c in _to_zpoly(elem))


def _gfp_gcd(a, b, p):
    a, b = zp_trim(c % p for c in a), zp_trim(c % p for c in b)
    while b:
        # a mod b over GF(p)
        inv = pow(zp_lc(b), -1, p)
        r = a
        while r and zp_deg(r) >= zp_deg(b):
            f = (zp_lc(r) * inv) % p
            r = zp_trim(
                (x - f * y) % p
                for x, y in zip(
                    r, zp_scale_shift(b, 1, zp_deg(r) - zp_deg(b)) + (0,) * len(r)
                )
            )
        a, b = b, r
    if a:
        inv = pow(zp_lc(a), -1, p)
        a = zp_trim((c * inv) % p for c in a)
    return a


def ideal_contains(ideal, elem):
    """Exact membership in regimes (a)-(c)."""
    ideal = ideal_normalize(ideal)
    if elem.spec != ideal.spec:
        raise RingError("spec mismatch")
    if elem.is_zero():
        return True
    nf = ideal.normal_form
    if nf is NormalForm.ZERO:
        return False
    if nf is NormalForm.UNIT:
        return True
    if nf is NormalForm.FINITE_SET:
        basis, pivots = ideal.data
        monomials = ideal.spec.all_monomials()
        index = {m: i for i, m in enumerate(monomials)}
        return _in_span(
            _elem_to_vector(elem, monomials, index), basis, pivots, ideal.spec.modulus
        )
    if nf is NormalForm.PRINCIPAL:
        p = ideal.spec.modulus
        g = _to_zpoly_modp(ideal.data[0], p)
        f = _to_zpoly_modp(elem, p)
        inv = pow(zp_lc(g), -1, p)
        while f and zp_deg(f) >= zp_deg(g):
            fac = (zp_lc(f) * inv) % p
            shifted = zp_scale_shift(g, fac, zp_deg(f) - zp_deg(g))
            f = zp_trim(
                (x - (shifted[i] if i < len(shifted) else 0)) % p
                for i, x in enumerate(f)
            )
        return not f
    if nf is NormalForm.GB:
        return zp_top_reduces_to_zero(_to_zpoly(elem), ideal.data[0])
    raise UndecidableError("membership undecidable in this ring regime")


def ideal_compare(a, b):
    """Three-valued equality; exact in regimes (a)-(c), probed otherwise."""
    if a.spec != b.spec:
        raise RingError("spec mismatch")
    a, b = ideal_normalize(a), ideal_normalize(b)
    if _regime(a.spec) != "other":
        if a.normal_form is NormalForm.ZERO or b.normal_form is NormalForm.ZERO:
            eq = a.normal_form == b.normal_form
        else:
            eq = all(ideal_contains(b, g) for g in a.generators) and all(
                ideal_contains(a, g) for g in b.generators
            )
        return Comparison.EQUAL_PROVEN if eq else Comparison.UNEQUAL_PROVEN
    return probe_compare(a, b)


def ideal_equals(a, b):
    cmp = ideal_compare(a, b)
    if cmp is Comparison.UNDETERMINED:
        raise UndecidableError("equality undetermined by probing")
    return cmp is Comparison.EQUAL_PROVEN


def probe_compare(a, b, probes=PROBES):
    """Compare two multivariate ideals through finite quotients.

    Unequal in some probe proves inequality; agreement in every probe is
    reported as undetermined ("consistent").
    """
    spec = a.spec
    if spec.modulus != 0:
        return Comparison.UNDETERMINED
    for p, k in probes:
        pspec, mapper = _probe_map(spec, p, k)
        ga = [mapper(g) for g in a.generators]
        gb = [mapper(g) for g in b.generators]
        span_a = finite_ideal_span(pspec, ga)[0][0] if ga else ()
        span_b = finite_ideal_span(pspec, gb)[0][0] if gb else ()
        if span_a != span_b:
            return Comparison.UNEQUAL_PROVEN
    return Comparison.UNDETERMINED


def _probe_map(spec, p, k):
    """Ring map from spec into Z_p with every variable forced to finite order."""
    orders = tuple(k if kk == 0 else gcd(kk, k) for _, kk in spec.variables)
    pspec = ring_make(p, tuple((n, o) for (n, _), o in zip(spec.variables, orders)))

    def mapper(elem):
        return RingElement(pspec, dict(elem.terms))

    return pspec, mapper


# ---------------------------------------------------------------------------
# Display.


def _finite_elements(spec, basis):
    p = spec.modulus
    monomials = spec.all_monomials()
    elems = []
    for combo in itertools.product(range(p), repeat=len(basis)):
        vec = [0] * len(monomials)
        for c, row in zip(combo, basis):
            vec = [(a + c * bcomp) % p for a, bcomp in zip(vec, row)]
        elems.append(_vector_to_elem(spec, vec, monomials))
    return elems


def _elem_sort_key(elem):
    return tuple((term_key(e), c) for e, c in elem.sorted_terms())


def minimal_generating_set(ideal):
    """Greedy minimal generating set of a FINITE_SET ideal, canonical order."""
    ideal = ideal_normalize(ideal)
    spec = ideal.spec
    basis, pivots = ideal.data
    if spec.modulus ** len(basis) > DISPLAY_SIZE_CAP:
        raise RingError("finite ideal too large to display")
    elems = [e for e in _finite_elements(spec, basis) if not e.is_zero()]
    elems.sort(key=_elem_sort_key)
    out = []
    for e in elems:
        if out and ideal_contains(ideal_normalize(ideal_from(spec, tuple(out))), e):
            continue
        out.append(e)
        if finite_ideal_span(spec, out)[0][0] == basis:
            break
    return tuple(out)


def render_ideal(ideal):
    """Canonical string form: (0), (1), or (g1,g2,...)."""
    ideal = ideal_normalize(ideal)
    nf = ideal.normal_form
    if nf is NormalForm.ZERO:
        return "(0)"
    if nf is NormalForm.UNIT:
        return "(1)"
    if nf is NormalForm.PRINCIPAL:
        return f"({ideal.data[0].render()})"
    if nf is NormalForm.GB:
        gens = [_zpoly_to_elem(ideal.spec, g) for g in ideal.data[0]]
        return "(" + ",".join(g.render() for g in gens) + ")"
    if nf is NormalForm.FINITE_SET:
        gens = minimal_generating_set(ideal)
        return "(" + ",".join(g.render() for g in gens) + ")"
    gens = sorted(ideal.generators, key=_elem_sort_key)
    return "(" + ",".join(normalize_sign(g.shift_to_origin()).render() for g in gens) + ")"
