"""Coefficient rings Z and Z_p with Laurent variables modulo t_i^k_i - 1.

A RingSpec fixes a modulus p (0 meaning Z, otherwise prime) and an ordered
list of variables with orders k_i >= 0 (0 meaning infinite order).  Elements
are finite maps from exponent vectors to nonzero coefficients; exponents of
finite-order variables are reduced to least nonnegative residues, so every
variable is a unit (t_i * t_i^(k_i-1) = 1).

Also provides matrices over such rings, division-free determinants and
minors, an E_d-preserving unit-pivot reduction, and gcd of Laurent
polynomials over genuine (all orders 0) Laurent rings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

import sympy

DET_CAP = 10


class RingError(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    """The ring (Z or Z_p)[t_1^±, ..., t_r^±] / (t_i^k_i - 1 for k_i > 0)."""

    modulus: int
    variables: tuple  # of (name, order)

    def __post_init__(self):
        if self.modulus < 0 or (self.modulus > 1 and not sympy.isprime(self.modulus)):
            raise RingError(f"modulus must be 0 or prime, got {self.modulus}")
        names = [n for n, _ in self.variables]
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names")
        for _, k in self.variables:
            if k < 0:
                raise RingError("variable order must be >= 0")

    @property
    def nvars(self):
        return len(self.variables)

    def is_finite(self):
        return self.modulus > 0 and all(k > 0 for _, k in self.variables)

    def monomial_count(self):
        if not all(k > 0 for _, k in self.variables):
            raise RingError("ring is infinite")
        return prod(k for _, k in self.variables)

    def size(self):
        return self.modulus ** self.monomial_count()

    def reduce_exps(self, exps):
        return tuple(
            e % k if k > 0 else e for e, (_, k) in zip(exps, self.variables)
        )

    def reduce_coeff(self, c):
        return c % self.modulus if self.modulus else c

    def zero(self):
        return RingElement(self, {})

    def one(self):
        return self.monomial((0,) * self.nvars, 1)

    def monomial(self, exps, coeff=1):
        return RingElement(self, {tuple(exps): coeff})

    def from_int(self, c):
        return self.monomial((0,) * self.nvars, c)

    def all_monomials(self):
        """All exponent vectors of a finite-orders spec, graded-lex order."""
        ranges = [range(k) for _, k in self.variables]
        return sorted(itertools.product(*ranges), key=lambda e: (sum(e), e))


def ring_make(p, variables):
    return RingSpec(p, tuple(variables))


def term_key(exps):
    """Graded then lexicographic order on exponent vectors."""
    return (sum(exps), exps)


@dataclass(frozen=True)
class RingElement:
    spec: RingSpec
    terms: dict

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = self.spec.reduce_exps(exps)
            c = self.spec.reduce_coeff(clean.get(exps, 0) + c)
            if c:
                clean[exps] = c
            elif exps in clean:
                del clean[exps]
        object.__setattr__(self, "terms", clean)

    def _check(self, other):
        if self.spec != other.spec:
            raise RingError("ring spec mismatch")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return RingElement(self.spec, terms)

    def __neg__(self):
        return RingElement(self.spec, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                e = self.spec.reduce_exps(e)
                terms[e] = terms.get(e, 0) + c1 * c2
        return RingElement(self.spec, terms)

    def scale(self, c):
        return RingElement(self.spec, {e: c * v for e, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.spec.nvars: 1}

    def is_unit_monomial(self):
        """True if the element is a single term with unit coefficient."""
        if len(self.terms) != 1:
            return False
        ((_, c),) = self.terms.items()
        return c in (1, -1) if self.spec.modulus == 0 else True

    def unit_inverse(self):
        """Inverse of a unit monomial."""
        if not self.is_unit_monomial():
            raise RingError("not a unit monomial")
        ((exps, c),) = self.terms.items()
        p = self.spec.modulus
        cinv = c if p == 0 else pow(c, -1, p)
        return self.spec.monomial(tuple(-e for e in exps), cinv)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_key(kv[0]))

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.spec == other.spec
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.spec, tuple(self.sorted_terms())))

    def min_exps(self):
        """Per-variable minimum exponent over all terms (zero element: zeros)."""
        if not self.terms:
            return (0,) * self.spec.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.spec.nvars))

    def shift_to_origin(self):
        """Multiply by the unit monomial making every minimum exponent 0."""
        lows = self.min_exps()
        if not any(lows):
            return self
        return self * self.spec.monomial(tuple(-l for l in lows))

    def render(self):
        """Canonical string: terms ascending in graded-lex order, e.g. '1+t'."""
        if not self.terms:
            return "0"
        names = [n for n, _ in self.spec.variables]
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(names, exps)
                if e != 0
            )
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}{mono}"
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            out += piece if piece.startswith("-") else "+" + piece
        return out


@dataclass(frozen=True)
class RingMatrix:
    """A t x s matrix of ring elements, thought of as infinitely zero-padded.

    declared_rows / declared_cols are the logical t and s used by the
    elementary-ideal conventions; the zero padding is never materialized.
    """

    spec: RingSpec
    entries: tuple  # of row tuples
    declared_rows: int
    declared_cols: int

    @classmethod
    def build(cls, spec, rows):
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            for e in r:
                if e.spec != spec:
                    raise RingError("matrix entry spec mismatch")
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise RingError("ragged matrix")
        return cls(spec, rows, len(rows), ncols)

    def entry(self, i, j):
        return self.entries[i][j]


def det(spec, rows, cap=DET_CAP):
    """Division-free determinant by cofactor expansion memoized on column sets.

    rows: list of equal-length tuples of RingElement, square.
    """
    n = len(rows)
    if n == 0:
        return spec.one()
    if any(len(r) != n for r in rows):
        raise RingError("determinant of non-square matrix")
    if n > cap:
        raise RingError(f"determinant size {n} over cap {cap}")
    cache = {}

    def rec(row, cols):
        if not cols:
            return spec.one()
        key = cols
        if key in cache:
            return cache[key]
        total = spec.zero()
        for pos, j in enumerate(cols):
            a = rows[row][j]
            if a.is_zero():
                continue
            sub = rec(row + 1, cols[:pos] + cols[pos + 1 :])
            term = a * sub
            total = total + (term if pos % 2 == 0 else -term)
        cache[key] = total
        return total

    return rec(0, tuple(range(n)))


def matrix_det(m, cap=DET_CAP):
    return det(m.spec, m.entries, cap=cap)


def minors(m, q, cap=DET_CAP):
    """All q x q minors drawn from the declared rows and columns.

    Ordered lexicographically by (row subset, column subset).  Empty if q
    exceeds either dimension.
    """
    if q < 1:
        raise RingError("minor size must be >= 1")
    t, s = m.declared_rows, m.declared_cols
    if q > t or q > s:
        return []
    out = []
    for rowsel in itertools.combinations(range(t), q):
        for colsel in itertools.combinations(range(s), q):
            sub = [tuple(m.entries[i][j] for j in colsel) for i in rowsel]
            out.append(det(m.spec, sub, cap=cap))
    return out


def reduce_matrix(m):
    """Shrink a matrix by elementary operations preserving all E_d.

    Repeatedly finds a unit-monomial entry, clears its row and column by
    row/column additions, and deletes both (the inverse of the bordering
    operation).  declared_rows and declared_cols drop together, so every
    E_d of the result equals E_d of the input.
    """
    rows = [list(r) for r in m.entries]
    while True:
        pivot = None
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                if e.is_unit_monomial():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        inv = rows[i][j].unit_inverse()
        for i2 in range(len(rows)):
            if i2 != i and not rows[i2][j].is_zero():
                factor = rows[i2][j] * inv
                rows[i2] = [
                    a - factor * b for a, b in zip(rows[i2], rows[i])
                ]
        del rows[i]
        for row in rows:
            del row[j]
    t = len(rows)
    s = len(rows[0]) if rows else max(m.declared_cols - m.declared_rows, 0)
    if rows:
        return RingMatrix(m.spec, tuple(tuple(r) for r in rows), t, s)
    removed = m.declared_rows - t
    return RingMatrix(m.spec, (), 0, m.declared_cols - removed)


def _to_sympy(elem, symbols):
    lows = elem.min_exps()
    shifted = elem.shift_to_origin()
    expr = sympy.Integer(0)
    for exps, c in shifted.terms.items():
        mono = sympy.Integer(c)
        for sym, e in zip(symbols, exps):
            mono *= sym**e
        expr += mono
    return expr


def _from_sympy(spec, expr, symbols):
    poly = sympy.Poly(expr, *symbols) if symbols else None
    terms = {}
    if symbols:
        for exps, c in poly.terms():
            terms[tuple(int(e) for e in exps)] = int(c)
    else:
        terms[()] = int(expr)
    return RingElement(spec, terms)


def poly_gcd(a, b):
    """gcd up to units on a genuine Laurent ring (p = 0 or prime, orders 0).

    The result is normalized: minimum exponent 0 in every variable, and over
    Z the leading coefficient (last term in graded-lex order) positive.
    """
    spec = a.spec
    if a.spec != b.spec:
        raise RingError("ring spec mismatch")
    if any(k != 0 for _, k in spec.variables):
        raise RingError("gcd needs all variable orders 0")
    if a.is_zero() and b.is_zero():
        return spec.zero()
    symbols = sympy.symbols([n for n, _ in spec.variables]) if spec.nvars else []
    if spec.nvars == 1:
        symbols = [symbols[0]]
    ea, eb = _to_sympy(a, symbols), _to_sympy(b, symbols)
    if spec.modulus:
        g = sympy.gcd(sympy.Poly(ea, *symbols, modulus=spec.modulus),
                      sympy.Poly(eb, *symbols, modulus=spec.modulus)).as_expr()
    else:
        g = sympy.gcd(ea, eb)
    result = _from_sympy(spec, sympy.expand(g), symbols).shift_to_origin()
    return normalize_sign(result)


def normalize_sign(elem):
    """Make the last (graded-lex greatest) coefficient positive over Z."""
    if elem.spec.modulus or elem.is_zero():
        return elem
    if elem.sorted_terms()[-1][1] < 0:
        return -elem
    return elem


def content_gcd(elems):
    """gcd of several ring elements, folding poly_gcd pairwise."""
    out = None
    for e in elems:
        out = e if out is None else poly_gcd(out, e)
        if out.is_one():
            return out
    return out
