"""Abelianization maps, finite matrix representations, and their enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .presentations import Word

HOM_TARGET_CAP = 10**4


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianMap:
    """Map from a presentation's group to <t_1,...,t_r | t_i^k_i, [t_i,t_j]>.

    variables: tuple of (name, order k), k = 0 meaning infinite order.
    images: per generator, an exponent vector of length r.
    Construction validates that every relator maps to zero.
    """

    presentation: object
    variables: tuple
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.presentation.s:
            raise MapError("one image per generator required")
        r = len(self.variables)
        for img in self.images:
            if len(img) != r:
                raise MapError("image arity mismatch")
        for rel in self.presentation.relators:
            if any(self._raw_word_image(rel)):
                raise MapError(
                    f"relator {rel.render(self.presentation.generators)!r} not killed"
                )

    def _raw_word_image(self, w):
        r = len(self.variables)
        vec = [0] * r
        for g, e in w.letters:
            for i in range(r):
                vec[i] += e * self.images[g][i]
        return tuple(
            v % k if k > 0 else v for v, (_, k) in zip(vec, self.variables)
        )

    def word_image(self, w):
        """Exponent vector of a word, reduced by the finite orders."""
        return self._raw_word_image(w)


def abelian_map(pres, images, variables):
    return AbelianMap(pres, tuple(variables), tuple(tuple(i) for i in images))


def cyclic_map(pres, exponents, k, var="t"):
    """Map into <t | t^k> (k = 0 for infinite cyclic) by per-generator powers."""
    return AbelianMap(pres, ((var, k),), tuple((e,) for e in exponents))


# ---------------------------------------------------------------------------
# Matrices over Z_p.


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b, p):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def mat_det(a, p):
    n = len(a)
    if n == 1:
        return a[0][0] % p
    if n == 2:
        return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % p
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        # parity by cycle decomposition
        for i in range(n):
            if seen[i]:
                continue
            j, clen = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                clen += 1
            if clen % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= a[i][perm[i]]
        total += term
    return total % p


def mat_inv(a, p):
    """Inverse over Z_p by Gauss-Jordan elimination."""
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] % p), None)
        if piv is None:
            raise MapError("matrix not invertible")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class MatrixRep:
    """A homomorphism to GL(n; Z_p) given by per-generator matrices.

    Construction checks invertibility (det = 1 when special=True) and that
    every relator maps to the identity.
    """

    presentation: object
    p: int
    n: int
    images: tuple
    special: bool = True

    def __post_init__(self):
        if len(self.images) != self.presentation.s:
            raise MapError("one image matrix per generator required")
        for m in self.images:
            d = mat_det(m, self.p)
            if d == 0:
                raise MapError("generator image not invertible")
            if self.special and d != 1 % self.p:
                raise MapError("generator image not in SL")
        ident = mat_identity(self.n)
        for rel in self.presentation.relators:
            if self.word_image(rel) != ident:
                raise MapError(
                    f"relator {rel.render(self.presentation.generators)!r} "
                    "not sent to the identity"
                )

    def word_image(self, w):
        out = mat_identity(self.n)
        for g, e in w.letters:
            m = self.images[g] if e > 0 else mat_inv(self.images[g], self.p)
            for _ in range(abs(e)):
                out = mat_mul(out, m, self.p)
        return out

    def conjugate(self, b):
        binv = mat_inv(b, self.p)
        return MatrixRep(
            self.presentation,
            self.p,
            self.n,
            tuple(mat_mul(mat_mul(b, m, self.p), binv, self.p) for m in self.images),
            self.special,
        )


def matrix_group_elements(n, p, special=True):
    """All of SL(n;Z_p) (or GL), ordered by row-major entry tuples."""
    if p ** (n * n) > HOM_TARGET_CAP * 10:
        raise MapError("target matrix space over cap")
    out = []
    for flat in itertools.product(range(p), repeat=n * n):
        m = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
        d = mat_det(m, p)
        if (special and d == 1 % p) or (not special and d != 0):
            out.append(m)
    if len(out) > HOM_TARGET_CAP:
        raise MapError("target group over cap")
    return out


# ---------------------------------------------------------------------------
# Enumeration.


def enumerate_epis(pres, k):
    """All epimorphisms onto Z_k = <t | t^k>, lexicographic in assignments."""
    if k < 2:
        raise MapError("cyclic target needs k >= 2")
    s = pres.s
    sums = [rel.exponent_sums(s) for rel in pres.relators]
    out = []
    for assign in itertools.product(range(k), repeat=s):
        if any(sum(a * e for a, e in zip(assign, es)) % k for es in sums):
            continue
        g = 0
        for a in assign:
            g = gcd(g, a)
        if gcd(g, k) != 1:
            continue
        out.append(cyclic_map(pres, assign, k))
    return out


def enumerate_homs(pres, n=2, p=2, special=True, elements=None):
    """All homomorphisms into SL/GL(n;Z_p), trivial and non-surjective included.

    Backtracks over generator images, checking each relator as soon as all
    generators it mentions are assigned.
    """
    if elements is None:
        elements = matrix_group_elements(n, p, special)
    s = pres.s
    supports = [
        (set(g for g, _ in rel.letters), rel) for rel in pres.relators
    ]
    ident = mat_identity(n)
    inverses = {m: mat_inv(m, p) for m in elements}
    out = []

    def relator_ok(rel, images):
        acc = ident
        for g, e in rel.letters:
            m = images[g] if e > 0 else inverses[images[g]]
            for _ in range(abs(e)):
                acc = mat_mul(acc, m, p)
        return acc == ident

    def extend(images):
        i = len(images)
        if i == s:
            out.append(
                MatrixRep(pres, p, n, tuple(images), special)
            )
            return
        for m in elements:
            images.append(m)
            assigned = set(range(i + 1))
            if all(
                relator_ok(rel, images)
                for support, rel in supports
                if support <= assigned and (i in support or not support)
            ):
                extend(images)
            images.pop()

    extend([])
    return out


def conjugacy_classes(homs, elements=None):
    """Orbits of homs under simultaneous conjugation by the target group.

    Returns (representative, class size) pairs; the representative is the
    least member in enumeration order, classes sorted by representative.
    """
    if not homs:
        return []
    p, n, special = homs[0].p, homs[0].n, homs[0].special
    if elements is None:
        elements = matrix_group_elements(n, p, special)
    index = {h.images: i for i, h in enumerate(homs)}
    seen = set()
    classes = []
    for i, h in enumerate(homs):
        if i in seen:
            continue
        orbit = set()
        for b in elements:
            conj = h.conjugate(b)
            orbit.add(index[conj.images])
        seen |= orbit
        classes.append((homs[min(orbit)], len(orbit)))
    return classes


# ---------------------------------------------------------------------------
# The explicit SL(2;Z_2) family for the theta-curve groups.

_A = ((0, 1), (1, 1))
_B = ((0, 1), (1, 0))
_C = ((1, 0), (1, 1))


def lemma36_rho(pres, n):
    """The SL(2;Z_2) representation of the theta-n group for n = 1,5 mod 6."""
    if n < 5 or n % 6 not in (1, 5):
        raise MapError("requires n >= 5 with n = 1 or 5 mod 6")
    if pres.s != n:
        raise MapError("presentation has wrong generator count")
    if n % 6 == 5:  # n = 6k+5
        images = [_A] * (n - 2) + [_B, _C]
    else:  # n = 6k+7
        images = [_A] * (n - 4) + [_B, _C, _B, _C]
    return MatrixRep(pres, 2, 2, tuple(images), special=True)
