"""Symplectic forms, simultaneously isotropic subspaces, and their enumeration.

A FormSpace is an ordered, linearly independent list of symplectic (Gram)
matrices spanning a space of alternating forms; subspaces are canonicalized
to reduced row echelon form so that equality, hashing, and exhaustive
de-duplication are structural.

Enumeration of k-subspaces of F_q^n walks echelon pivot patterns and fills
the free entries, which visits every subspace exactly once; the total per
(n, k, q) is the Gaussian binomial coefficient, and a configurable budget
(env var MSGKIT_BUDGET, default 10^7 visits) refuses oversized scans up
front.
"""

from __future__ import annotations

import itertools
import os
from random import Random

from .fields import Field, PrimeField, field_from_spec
from .matrices import Matrix, canonical_alternating, random_invertible

DEFAULT_BUDGET = 10**7

_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """Fixed splitmix64-style child seed; keeps parallel streams reproducible."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more subspaces than the configured budget."""


def enumeration_budget() -> int:
    raw = os.environ.get("MSGKIT_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"MSGKIT_BUDGET must be an integer: {raw!r}") from exc
    if value <= 0:
        raise ValueError("MSGKIT_BUDGET must be positive")
    return value


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# forms
# ---------------------------------------------------------------------------

class SymplecticForm:
    """A nondegenerate alternating bilinear form, held as its Gram matrix."""

    __slots__ = ("gram",)

    def __init__(self, gram: Matrix):
        if not gram.is_square():
            raise ValueError("Gram matrix must be square")
        if not gram.is_alternating():
            raise ValueError("Gram matrix must be alternating")
        if gram.rank() != gram.nrows:
            raise ValueError("symplectic form must be nondegenerate")
        self.gram = gram

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @property
    def field(self) -> Field:
        return self.gram.field

    def pairing(self, x, y):
        """<x, y> = x G y^T for coordinate row vectors."""
        left = Matrix(self.field, 1, self.dim, [x])
        right = Matrix(self.field, 1, self.dim, [y])
        return left.mul(self.gram).mul(right.transpose()).entry(0, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticForm) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"SymplecticForm({self.gram!r})"


class FormSpace:
    """An ordered list of m symplectic forms with independent Gram matrices."""

    __slots__ = ("forms",)

    def __init__(self, forms):
        forms = tuple(forms)
        if not forms:
            raise ValueError("a form space needs at least one form")
        field = forms[0].field
        n = forms[0].dim
        for f in forms[1:]:
            field.require_same(f.field)
            if f.dim != n:
                raise ValueError("forms live on spaces of different dimension")
        flat = Matrix(field, len(forms), n * n,
                      [[x for row in f.gram.rows for x in row] for f in forms])
        if flat.rank() != len(forms):
            raise ValueError("Gram matrices are linearly dependent")
        self.forms = forms

    @property
    def dim(self) -> int:
        return self.forms[0].dim

    @property
    def m(self) -> int:
        return len(self.forms)

    @property
    def field(self) -> Field:
        return self.forms[0].field

    def grams(self) -> list[Matrix]:
        return [f.gram for f in self.forms]

    def combination(self, coefficients) -> Matrix:
        """Gram matrix of sum_t c_t <,>_t (possibly degenerate or zero)."""
        if len(coefficients) != self.m:
            raise ValueError("need one coefficient per form")
        acc = Matrix.zeros(self.field, self.dim, self.dim)
        for c, f in zip(coefficients, self.forms):
            acc = acc.add(f.gram.scale(c))
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, FormSpace) and self.forms == other.forms

    def __hash__(self) -> int:
        return hash(self.forms)

    def __repr__(self) -> str:
        return f"FormSpace(n={self.dim}, m={self.m}, {self.field})"


def standard_form(n: int, field: Field) -> SymplecticForm:
    """Block diagonal J with <e_{2i-1}, e_{2i}> = 1."""
    if n < 2 or n % 2:
        raise ValueError(f"standard symplectic form needs even n >= 2, got {n}")
    return SymplecticForm(canonical_alternating(field, n, n))


def random_symplectic_form(n: int, field: Field, rng: Random) -> SymplecticForm:
    """P^T J P for a random invertible P; congruence keeps J symplectic."""
    if n < 2 or n % 2:
        raise ValueError(f"symplectic forms need even n >= 2, got {n}")
    J = canonical_alternating(field, n, n)
    P = random_invertible(field, n, rng)
    return SymplecticForm(P.transpose().mul(J).mul(P))


def random_form_space(n: int, m: int, field: Field, rng: Random) -> FormSpace:
    """m symplectic forms with independent Gram matrices, resampling on dependence.

    Alternating n x n matrices form an n(n-1)/2-dimensional space, so for
    n = 2 any two symplectic forms are dependent; sizes that cannot host m
    independent forms are rejected outright.
    """
    if m < 1:
        raise ValueError("need m >= 1 forms")
    if n < 2 or n % 2:
        raise ValueError(f"symplectic forms need even n >= 2, got {n}")
    if m > n * (n - 1) // 2:
        raise ValueError(
            f"no {m} independent alternating forms exist in dimension {n}")
    forms = []
    guard = 0
    while len(forms) < m:
        candidate = random_symplectic_form(n, field, rng)
        try:
            FormSpace(forms + [candidate])
        except ValueError:
            guard += 1
            if guard > 256:
                raise RuntimeError("could not sample independent forms") from None
            continue
        forms.append(candidate)
    return FormSpace(forms)


def random_independent_pair(n: int, field: Field, rng: Random) -> FormSpace:
    """Two symplectic forms spanning a pencil (m = 2)."""
    return random_form_space(n, 2, field, rng)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A k-dimensional subspace of F^n, stored as its canonical RREF basis."""

    __slots__ = ("basis", "_hash")

    def __init__(self, basis: Matrix, _trusted: bool = False):
        if not _trusted:
            R, rank, _ = basis.rref()
            if rank != basis.nrows:
                raise ValueError("basis rows are linearly dependent")
            basis = R
        self.basis = basis
        self._hash = hash(basis)

    @classmethod
    def from_span(cls, rows: Matrix) -> "Subspace":
        """Span of arbitrary rows; dependent or zero rows are dropped."""
        R, rank, _ = rows.rref()
        return cls(Matrix(rows.field, rank, rows.ncols, R.rows[:rank]), _trusted=True)

    @property
    def k(self) -> int:
        return self.basis.nrows

    @property
    def n(self) -> int:
        return self.basis.ncols

    @property
    def field(self) -> Field:
        return self.basis.field

    def contains_vector(self, v) -> bool:
        probe = Matrix(self.field, 1, self.n, [v])
        return self.basis.stack(probe).rank() == self.k

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Subspace(k={self.k}, n={self.n}, {self.field})"


def isotropy_failure(V: Subspace, F: FormSpace):
    """None if V is simultaneously isotropic, else (form_index, i, j, value).

    Indices are 0-based rows of the basis; the value is the offending
    pairing <v_i, v_j>.
    """
    if V.n != F.dim:
        raise ValueError(f"dimension mismatch: subspace in n={V.n}, forms on n={F.dim}")
    B = V.basis
    for t, G in enumerate(F.grams()):
        M = B.mul(G).mul(B.transpose())
        for i in range(V.k):
            for j in range(V.k):
                if M.entry(i, j):
                    return (t, i, j, M.entry(i, j))
    return None


def is_isotropic(V: Subspace, F: FormSpace) -> bool:
    """True iff B G_t B^T = 0 for every Gram matrix G_t."""
    return isotropy_failure(V, F) is None


def random_isotropic_subspace(
    k: int, F: FormSpace, rng: Random, retries: int = 64
) -> Subspace | None:
    """Greedy extension by random vectors in the intersection of the perps.

    Each step solves for the simultaneous perp of the current span, then
    draws random kernel combinations; if `retries` draws fail to leave the
    span, a deterministic sweep of the kernel basis settles whether any
    extension exists at all.  None therefore means a genuine stall (the
    greedy span admits no further simultaneously-isotropic extension),
    which can only happen for m >= 2.
    """
    n = F.dim
    if not 1 <= k <= n // 2:
        raise ValueError(
            f"isotropic dimension must satisfy 1 <= k <= n/2 = {n // 2}, got {k}")
    field = F.field
    span_rows: list[tuple] = []
    while len(span_rows) < k:
        if span_rows:
            span = Matrix(field, len(span_rows), n, span_rows)
            constraint = None
            for G in F.grams():
                block = span.mul(G)
                constraint = block if constraint is None else constraint.stack(block)
            kernel = constraint.kernel_basis()
        else:
            span = None
            kernel = Matrix.identity(field, n)
        if kernel.nrows == 0:
            return None
        found = None
        for _ in range(retries):
            coeffs = [field.random(rng) for _ in range(kernel.nrows)]
            v = [field.zero] * n
            for c, krow in zip(coeffs, kernel.rows):
                if c:
                    v = [field.add(x, field.mul(c, y)) for x, y in zip(v, krow)]
            if not any(v):
                continue
            if span is None or span.stack(Matrix(field, 1, n, [v])).rank() > len(span_rows):
                found = tuple(v)
                break
        if found is None:
            # deterministic fallback: some kernel basis vector extends the
            # span iff any extension exists
            for krow in kernel.rows:
                if span is None or span.stack(Matrix(field, 1, n, [krow])).rank() > len(span_rows):
                    found = krow
                    break
        if found is None:
            return None
        span_rows.append(found)
    return Subspace.from_span(Matrix(field, k, n, span_rows))


# ---------------------------------------------------------------------------
# exhaustive enumeration
# ---------------------------------------------------------------------------

def enumerate_subspaces(n: int, k: int, field: Field, budget: int | None = None):
    """All k-subspaces of F_q^n, each exactly once, in pivot-pattern order.

    Returns a generator; the budget check happens before the first yield.
    """
    if not isinstance(field, PrimeField):
        raise ValueError("exhaustive enumeration needs a finite prime field")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if budget is None:
        budget = enumeration_budget()
    total = gaussian_binomial(n, k, field.p)
    if total > budget:
        raise BudgetExceeded(
            f"enumerating {total} subspaces exceeds the budget of {budget}"
            " (raise MSGKIT_BUDGET to override)")

    def generate():
        elements = list(field.elements())
        zero, one = field.zero, field.one
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [(i, j) for i in range(k)
                    for j in range(pivots[i] + 1, n) if j not in pivot_set]
            for values in itertools.product(elements, repeat=len(free)):
                rows = [[zero] * n for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = one
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield Subspace(Matrix(field, k, n, rows), _trusted=True)

    return generate()


def enumerate_isotropic_subspaces(k: int, F: FormSpace, budget: int | None = None):
    """Every simultaneously isotropic k-subspace, filtered from the full walk."""
    gen = enumerate_subspaces(F.dim, k, F.field, budget=budget)

    def generate():
        for V in gen:
            if is_isotropic(V, F):
                yield V

    return generate()


# ---------------------------------------------------------------------------
# point files
# ---------------------------------------------------------------------------

def encode_point(F: FormSpace, V: Subspace) -> dict:
    """The shared JSON input format: field, n, Gram matrices, subspace basis."""
    return {
        "field": F.field.spec(),
        "n": F.dim,
        "forms": [g.encode() for g in F.grams()],
        "subspace": V.basis.encode(),
    }


def decode_point(obj: dict) -> tuple[FormSpace, Matrix]:
    """Parse a point file; returns the form space and the raw basis matrix.

    The basis is returned un-canonicalized so callers can honor the file's
    choice of basis (kernel coordinates depend on it); wrap it in Subspace
    to canonicalize.
    """
    if not isinstance(obj, dict):
        raise ValueError("point file must be a JSON object")
    for key in ("field", "n", "forms", "subspace"):
        if key not in obj:
            raise ValueError(f"point file is missing {key!r}")
    field = field_from_spec(obj["field"])
    n = obj["n"]
    if not isinstance(n, int) or n < 2:
        raise ValueError("point file 'n' must be an integer >= 2")
    forms = [SymplecticForm(Matrix.decode(field, g, ncols=n)) for g in obj["forms"]]
    for f in forms:
        if f.dim != n:
            raise ValueError("form dimension disagrees with 'n'")
    fs = FormSpace(forms)
    basis = Matrix.decode(field, obj["subspace"], ncols=n)
    if basis.rank() != basis.nrows:
        raise ValueError("subspace basis rows are linearly dependent")
    return fs, basis
