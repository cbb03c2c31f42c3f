"""Exact univariate polynomials and homogeneous binary forms.

Univariate polynomials are plain coefficient lists, ``c[i]`` = coefficient
of x^i, with no trailing zeros (the zero polynomial is ``[]``); every
function takes the ground field explicitly.  Binary forms (homogeneous in
two variables) are the carrier for pencil-minor polynomials: their gcd and
its roots decide degeneracy over the algebraic closure without ever
constructing an extension field, because a nonconstant binary form always
has projective roots over the closure.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ._integers import divisors
from .fields import Field, PrimeField, QQ, RationalField


# ---------------------------------------------------------------------------
# univariate arithmetic
# ---------------------------------------------------------------------------

def ptrim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def pdeg(cs: list) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(cs) - 1


def padd(F: Field, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return ptrim(out)


def pneg(F: Field, a: list) -> list:
    return [F.neg(c) for c in a]


def psub(F: Field, a: list, b: list) -> list:
    return padd(F, a, pneg(F, b))


def pscale(F: Field, c, a: list) -> list:
    if not c:
        return []
    return ptrim([F.mul(c, x) for x in a])


def pmul(F: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pdivmod(F: Field, a: list, b: list) -> tuple[list, list]:
    """Quotient and remainder; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        f = F.mul(c, inv_lead)
        q[i - db] = f
        for j, y in enumerate(b):
            r[i - db + j] = F.sub(r[i - db + j], F.mul(f, y))
    return ptrim(q), ptrim(r)


def pmonic(F: Field, a: list) -> list:
    if not a or a[-1] == F.one:
        return list(a)
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F: Field, a: list, b: list) -> list:
    """Monic gcd (Euclid); gcd(0, 0) = 0."""
    a, b = list(a), list(b)
    while b:
        a, b = b, pdivmod(F, a, b)[1]
    return pmonic(F, a)


def peval(F: Field, a: list, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def ppowmod(F: Field, base: list, e: int, mod: list) -> list:
    """base^e mod `mod` by square-and-multiply."""
    result = [F.one]
    base = pdivmod(F, base, mod)[1]
    while e > 0:
        if e & 1:
            result = pdivmod(F, pmul(F, result, base), mod)[1]
        base = pdivmod(F, pmul(F, base, base), mod)[1]
        e >>= 1
    return result


def pderiv(F: Field, a: list) -> list:
    return ptrim([F.mul(F.element(i), a[i]) for i in range(1, len(a))])


def pradical_char0(F: Field, a: list) -> list:
    """Product of the distinct irreducible factors of a, characteristic 0 only.

    a / gcd(a, a') strips multiplicities exactly in char 0; over F_p it can
    drop factors whose multiplicity is divisible by p, so the prime-field
    root finder never uses this (gcd with x^p - x already isolates distinct
    roots there).
    """
    a = pmonic(F, a)
    if pdeg(a) <= 1:
        return a
    g = pgcd(F, a, pderiv(F, a))
    if pdeg(g) == 0:
        return a
    return pmonic(F, pdivmod(F, a, g)[0])


# ---------------------------------------------------------------------------
# root extraction over the base field
# ---------------------------------------------------------------------------

def _prime_roots(F: PrimeField, f: list) -> list:
    """Distinct roots of f in F_p (equal-degree splitting into linears)."""
    p = F.p
    f = pmonic(F, f)
    roots = []
    if f and f[0] == 0:
        roots.append(0)
        while f[0] == 0:
            f = f[1:]
    if pdeg(f) == 0:
        return sorted(roots)
    # isolate the product of distinct linear factors: gcd(f, x^p - x)
    x = [0, 1]
    g = pgcd(F, f, psub(F, ppowmod(F, x, p, f), x))
    stack = [g]
    e = (p - 1) // 2
    while stack:
        h = stack.pop()
        d = pdeg(h)
        if d <= 0:
            continue
        if d == 1:
            roots.append(F.div(F.neg(h[0]), h[1]))
            continue
        # split on quadratic-residue character of shifted roots; a
        # separating shift always exists among 0..p-1
        for a in range(p):
            w = psub(F, ppowmod(F, [a, 1], e, h), [1])
            d1 = pgcd(F, h, w)
            if 0 < pdeg(d1) < d:
                stack.append(d1)
                stack.append(pdivmod(F, h, d1)[0])
                break
        else:  # pragma: no cover - unreachable for squarefree odd-p input
            raise ArithmeticError("equal-degree splitting failed")
    return sorted(roots)


def _rational_roots(f: list) -> list:
    """Distinct rational roots of f over Q (rational root theorem)."""
    F = QQ
    roots = []
    if f and f[0] == 0:
        roots.append(Fraction(0))
        while f[0] == 0:
            f = f[1:]
    if pdeg(f) <= 0:
        return sorted(roots)
    if pdeg(f) == 1:
        roots.append(-Fraction(f[0]) / f[1])
        return sorted(roots)
    scale = lcm(*[Fraction(c).denominator for c in f])
    ints = [int(c * scale) for c in f]
    # a few cheap modular filters avoid evaluating hopeless candidates
    filters = []
    for q in (10007, 10009, 10037):
        if ints[-1] % q and ints[0] % q:
            Fq = PrimeField(q)
            filters.append((q, set(_prime_roots(Fq, [c % q for c in ints]))))
        if len(filters) == 2:
            break
    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                ok = True
                for q, rts in filters:
                    if cand.denominator % q == 0:
                        continue
                    if cand.numerator * pow(cand.denominator, -1, q) % q not in rts:
                        ok = False
                        break
                if ok and cand not in roots and peval(F, f, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def proots(F: Field, f: list) -> list:
    """Sorted distinct roots of f in the base field; f must be nonzero."""
    if not f:
        raise ValueError("root extraction of the zero polynomial")
    if isinstance(F, PrimeField):
        return _prime_roots(F, f)
    if isinstance(F, RationalField):
        return _rational_roots(pradical_char0(F, f))
    raise TypeError(f"unsupported field {F!r}")


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

class BinaryForm:
    """Homogeneous polynomial in (u, v); coeffs[i] multiplies u^i v^(degree-i).

    The zero form is degree 0 with the single coefficient 0.  Setting v=1
    identifies a degree-d form with a univariate polynomial of degree <= d;
    the degree deficit records the multiplicity of v as a factor, so the
    correspondence loses nothing (roots "at infinity" are the v-factors).
    """

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: Field, degree: int, coeffs):
        coeffs = tuple(field.element(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError("need degree+1 coefficients")
        if degree > 0 and not any(coeffs):
            raise ValueError("zero form must be written with degree 0")
        self.field = field
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def zero(cls, field: Field) -> "BinaryForm":
        return cls(field, 0, [field.zero])

    @classmethod
    def from_univariate(cls, field: Field, uni: list, degree: int) -> "BinaryForm":
        """Homogenize a univariate in u to total degree `degree` using v-powers."""
        if pdeg(uni) > degree:
            raise ValueError("univariate degree exceeds target degree")
        if not uni:
            return cls.zero(field)
        coeffs = list(uni) + [field.zero] * (degree - pdeg(uni))
        return cls(field, degree, coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_constant(self) -> bool:
        return self.degree == 0

    def univariate(self) -> list:
        """Coefficients after setting v = 1."""
        return ptrim(list(self.coeffs))

    def v_multiplicity(self) -> int:
        """Multiplicity of v as a factor (degree deficit of the dehomogenization)."""
        if self.is_zero():
            raise ValueError("zero form has no v-multiplicity")
        return self.degree - pdeg(self.univariate())

    def evaluate(self, u, v):
        F = self.field
        acc = F.zero
        for i, c in enumerate(self.coeffs):
            term = F.mul(c, F.mul(F.pow(u, i), F.pow(v, self.degree - i)))
            acc = F.add(acc, term)
        return acc

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        self.field.require_same(other.field)
        if self.is_zero() or other.is_zero():
            return BinaryForm.zero(self.field)
        prod = pmul(self.field, list(self.coeffs), list(other.coeffs))
        prod += [self.field.zero] * (self.degree + other.degree + 1 - len(prod))
        return BinaryForm(self.field, self.degree + other.degree, prod)

    def divides(self, other: "BinaryForm") -> bool:
        """Exact divisibility of binary forms; the zero form divides only itself."""
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        if self.v_multiplicity() > other.v_multiplicity():
            return False
        _, rem = pdivmod(self.field, other.univariate(), self.univariate())
        return not rem

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryForm)
            and self.field == other.field
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.degree, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "BinaryForm(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            j = self.degree - i
            mono = "".join(filter(None, [f"u^{i}" if i else "", f"v^{j}" if j else ""]))
            terms.append(f"{c}*{mono}" if mono else f"{c}")
        return "BinaryForm(" + " + ".join(terms) + ")"


def binary_form_gcd(forms: list) -> BinaryForm:
    """Gcd of binary forms, monic in the dehomogenized variable.

    Zero inputs are absorbed (gcd(0, f) = f); the result is the zero form
    exactly when every input is zero.  The v-power dividing all inputs is
    tracked through the degree deficit, so common roots at infinity are
    kept.
    """
    if not forms:
        raise ValueError("gcd of an empty set of forms")
    field = forms[0].field
    for f in forms[1:]:
        field.require_same(f.field)
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        return BinaryForm.zero(field)
    g: list = []
    v_mult = min(f.v_multiplicity() for f in nonzero)
    for f in nonzero:
        g = pgcd(field, g, f.univariate())
        if pdeg(g) == 0 and v_mult == 0:
            break
    return BinaryForm.from_univariate(field, g, pdeg(g) + v_mult)


def binary_form_roots(form: BinaryForm) -> list:
    """Projective roots of a nonzero form in the base field.

    Each root is scaled so its first nonzero coordinate is 1; the root at
    infinity (1, 0) appears iff v divides the form.  Sorted with (0, 1)
    first, then finite slopes ascending, then (1, 0).
    """
    if form.is_zero():
        raise ValueError("every point is a root of the zero form")
    F = form.field
    out = []
    for r in proots(F, form.univariate()):
        if r == F.zero:
            out.append((F.zero, F.one))
        else:
            out.append((F.one, F.inv(r)))  # (r, 1) scaled by 1/r
    out.sort(key=lambda t: (t[0] != F.zero, t[1]))
    if form.v_multiplicity() > 0:
        out.append((F.one, F.zero))
    return out


# ---------------------------------------------------------------------------
# determinants of polynomial matrices (fraction-free)
# ---------------------------------------------------------------------------

def pmat_det(F: Field, grid: list) -> list:
    """Determinant of a square matrix of univariate polynomials.

    Bareiss one-step elimination: every division is exact in F[x], so the
    entries stay polynomials throughout.  Row swaps flip the sign.
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("matrix must be square")
    if n == 0:
        return [F.one]
    a = [[ptrim(list(e)) for e in row] for row in grid]
    sign = 1
    prev = [F.one]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(F, pmul(F, a[k][k], a[i][j]), pmul(F, a[i][k], a[k][j]))
                quot, rem = pdivmod(F, num, prev)
                if rem:  # pragma: no cover - Sylvester identity guarantees exactness
                    raise ArithmeticError("inexact Bareiss division")
                a[i][j] = quot
            a[i][k] = []
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else pneg(F, det)
