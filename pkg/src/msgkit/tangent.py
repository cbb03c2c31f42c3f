"""Tangent spaces of multiply symplectic Grassmannians at isotropic points.

Fixing a working basis v_1..v_k of V and a complement w_1..w_{n-k}, a
tangent vector of the ambient Grassmannian is a k x (n-k) coordinate grid
for f in Hom(V, E/V), and membership in the tangent space of the isotropic
locus imposes, per form t and per pair i < j, the linear condition

    sum_a f[j][a] <v_i, w_a>_t  -  sum_a f[i][a] <v_j, w_a>_t  =  0.

Stacking these rows (t outer, pairs (i, j) lexicographic) gives the
constraint system; its rank drop below m*C(k,2) is carried by kernel
elements, which live in Lambda^2(V) tensor the span of the forms and are
stored here as one alternating k x k coefficient matrix per form.

For a pencil of two forms, degeneracy -- a nonzero combination whose
pairing kills some 2-plane of V against E/V -- is decided over the
algebraic closure through the gcd of the (k-1)-minors of the
lambda-linear restriction matrix: rank(R(lambda)) <= k-2 exactly where
all those minors vanish, and a nonconstant gcd certifies such a lambda
exists over the closure whether or not the base field contains one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from random import Random

from .fields import Field
from .matrices import Matrix, SingularMatrixError, random_matrix
from .polynomials import BinaryForm, binary_form_gcd, binary_form_roots, pmat_det, proots
from .symplectic import (
    FormSpace,
    Subspace,
    derive_seed,
    enumerate_isotropic_subspaces,
    isotropy_failure,
    random_independent_pair,
    random_isotropic_subspace,
)

__all__ = [
    "PointContext",
    "PhiKernelElement",
    "PencilDegeneracy",
    "TangentReport",
    "EigenspaceReport",
    "MismatchRecord",
    "VerifyReport",
    "msg_expected_dim",
    "default_complement",
    "random_complement",
    "restriction_matrices",
    "build_constraints",
    "tangent_report",
    "j_V",
    "decode_kernel_element",
    "find_degenerate_pencil",
    "check_even_eigenspaces",
    "verify_pair",
    "verify_thm_equivalence",
]


def msg_expected_dim(n: int, k: int, m: int) -> int:
    """k(n-k) - m*C(k,2); may be negative, returned as-is."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return k * (n - k) - m * (k * (k - 1) // 2)


def default_complement(V: Subspace) -> Matrix:
    """Identity rows at the non-pivot columns of the RREF basis."""
    field = V.field
    _, _, pivots = V.basis.rref()
    pivot_set = set(pivots)
    rows = []
    for j in range(V.n):
        if j not in pivot_set:
            row = [field.zero] * V.n
            row[j] = field.one
            rows.append(row)
    return Matrix(field, V.n - V.k, V.n, rows)


def random_complement(V: Subspace, rng: Random) -> Matrix:
    """A random complement; rejection-sampled until the stacked basis is invertible."""
    while True:
        C = random_matrix(V.field, V.n - V.k, V.n, rng)
        if V.basis.stack(C).rank() == V.n:
            return C


class PointContext:
    """A point [V] of the isotropic locus plus the coordinates used to study it.

    `basis` is the working basis of V (defaults to the canonical RREF rows;
    pass any other row basis of the same subspace to change coordinates),
    and `complement` completes it to a basis of the ambient space.  All
    reported dimensions are provably independent of both choices; kernel
    coordinates are not, which is why the choices are recorded here.
    """

    __slots__ = ("subspace", "forms", "basis", "complement")

    def __init__(
        self,
        subspace: Subspace,
        forms: FormSpace,
        complement: Matrix | None = None,
        basis: Matrix | None = None,
    ):
        if subspace.n != forms.dim:
            raise ValueError(
                f"subspace lives in n={subspace.n} but forms act on n={forms.dim}")
        subspace.field.require_same(forms.field)
        bad = isotropy_failure(subspace, forms)
        if bad is not None:
            t, i, j, val = bad
            raise ValueError(
                f"subspace is not isotropic for form {t}:"
                f" <v_{i + 1}, v_{j + 1}> = {val}")
        if basis is None:
            basis = subspace.basis
        else:
            if basis.shape != subspace.basis.shape:
                raise ValueError("working basis has the wrong shape")
            if Subspace.from_span(basis) != subspace:
                raise ValueError("working basis does not span the subspace")
        if complement is None:
            complement = default_complement(subspace)
        if complement.shape != (subspace.n - subspace.k, subspace.n):
            raise ValueError("complement has the wrong shape")
        if basis.stack(complement).rank() != subspace.n:
            raise ValueError("basis plus complement do not span the ambient space")
        self.subspace = subspace
        self.forms = forms
        self.basis = basis
        self.complement = complement

    @property
    def n(self) -> int:
        return self.subspace.n

    @property
    def k(self) -> int:
        return self.subspace.k

    @property
    def m(self) -> int:
        return self.forms.m

    @property
    def field(self) -> Field:
        return self.subspace.field

    def expected_dim(self) -> int:
        return msg_expected_dim(self.n, self.k, self.m)


# ---------------------------------------------------------------------------
# constraint assembly
# ---------------------------------------------------------------------------

def _pairs(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def _restrictions(basis: Matrix, complement: Matrix, grams: list[Matrix]) -> list[Matrix]:
    ct = complement.transpose()
    return [basis.mul(G).mul(ct) for G in grams]


def restriction_matrices(ctx: PointContext) -> list[Matrix]:
    """R_t with R_t[i][a] = <v_i, w_a>_t, one k x (n-k) matrix per form."""
    return _restrictions(ctx.basis, ctx.complement, ctx.forms.grams())


def _constraints(field: Field, k: int, nk: int, restrictions: list[Matrix]) -> Matrix:
    rows = []
    for R in restrictions:
        for (i, j) in _pairs(k):
            row = [field.zero] * (k * nk)
            Ri, Rj = R.rows[i], R.rows[j]
            for a in range(nk):
                row[j * nk + a] = Ri[a]
                row[i * nk + a] = field.neg(Rj[a])
            rows.append(row)
    return Matrix(field, len(rows), k * nk, rows)


def build_constraints(ctx: PointContext) -> Matrix:
    """The m*C(k,2) x k(n-k) system whose null space is the tangent space.

    Row order: form index outer, pairs (i, j) with i < j lexicographic.
    Column order: the Hom(V, E/V) grid f[i][a] flattened as i*(n-k) + a.
    """
    return _constraints(ctx.field, ctx.k, ctx.n - ctx.k,
                        _restrictions(ctx.basis, ctx.complement, ctx.forms.grams()))


# ---------------------------------------------------------------------------
# kernel elements
# ---------------------------------------------------------------------------

class PhiKernelElement:
    """A relation among the constraint rows, i.e. an element of ker Phi.

    Stored as one alternating k x k matrix per form; entry [i][j] with
    i < j is the coefficient of (v_i wedge v_j) tensor <,>_t.
    """

    __slots__ = ("matrices",)

    def __init__(self, matrices):
        matrices = tuple(matrices)
        if not matrices:
            raise ValueError("need one coefficient matrix per form")
        for M in matrices:
            if not M.is_alternating():
                raise ValueError("coefficient matrices must be alternating")
        if all(M.is_zero() for M in matrices):
            raise ValueError("kernel element must be nonzero")
        self.matrices = matrices

    @classmethod
    def from_flat(cls, field: Field, k: int, m: int, flat) -> "PhiKernelElement":
        """Unflatten a left-kernel vector laid out in constraint-row order."""
        pairs = _pairs(k)
        mats = []
        for t in range(m):
            rows = [[field.zero] * k for _ in range(k)]
            for idx, (i, j) in enumerate(pairs):
                c = flat[t * len(pairs) + idx]
                rows[i][j] = c
                rows[j][i] = field.neg(c)
            mats.append(Matrix(field, k, k, rows))
        return cls(mats)

    def coefficient(self, i: int, j: int, t: int):
        """a[i][j][t], 0-based, defined for all i != j by antisymmetry."""
        return self.matrices[t].entry(i, j)

    @property
    def k(self) -> int:
        return self.matrices[0].nrows

    @property
    def m(self) -> int:
        return len(self.matrices)

    def encode(self) -> list:
        return [M.encode() for M in self.matrices]

    def __eq__(self, other) -> bool:
        return isinstance(other, PhiKernelElement) and self.matrices == other.matrices

    def __hash__(self) -> int:
        return hash(self.matrices)

    def __repr__(self) -> str:
        return f"PhiKernelElement(k={self.k}, m={self.m})"


def j_V(ctx: PointContext, elem: Matrix) -> tuple:
    """Pair an element of V tensor Omega against the complement basis.

    `elem` is a k x m coordinate matrix, entry [i][t] multiplying
    v_i tensor <,>_t; the result is the induced functional on E/V,
    evaluated on w_1..w_{n-k}.
    """
    if elem.shape != (ctx.k, ctx.m):
        raise ValueError(f"element must be {ctx.k}x{ctx.m}, got {elem.shape}")
    ctx.field.require_same(elem.field)
    F = ctx.field
    out = [F.zero] * (ctx.n - ctx.k)
    for t, R in enumerate(restriction_matrices(ctx)):
        for i in range(ctx.k):
            c = elem.entry(i, t)
            if c:
                Ri = R.rows[i]
                out = [F.add(x, F.mul(c, y)) for x, y in zip(out, Ri)]
    return tuple(out)


def decode_kernel_element(
    ctx: PointContext, kelem: PhiKernelElement
) -> tuple[list[Matrix], bool]:
    """The k generators of the subspace W attached to a kernel element.

    Generator j collects, for each form t, minus the j-th column of the
    coefficient matrix as coordinates along v_1..v_k; for genuine kernel
    elements every generator is annihilated by j_V, and the returned flag
    reports whether that held.
    """
    if kelem.k != ctx.k or kelem.m != ctx.m:
        raise ValueError("kernel element shape does not match the context")
    F = ctx.field
    zero = tuple(F.zero for _ in range(ctx.n - ctx.k))
    generators = []
    verified = True
    for j in range(ctx.k):
        rows = [[F.neg(kelem.matrices[t].entry(i, j)) for t in range(ctx.m)]
                for i in range(ctx.k)]
        gen = Matrix(F, ctx.k, ctx.m, rows)
        generators.append(gen)
        if j_V(ctx, gen) != zero:
            verified = False
    return generators, verified


# ---------------------------------------------------------------------------
# pencil degeneracy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PencilDegeneracy:
    """Evidence that some nonzero combination in the pencil is degenerate.

    `certificate` is the gcd of the (k-1)-minors of R(lambda): nonconstant
    when degeneracy happens at finitely many pencil points, and the zero
    form when every point of the pencil is degenerate (possible only for
    inputs that are not honest symplectic point contexts).  `witnesses`
    lists the base-field pencil points, scaled so the first nonzero
    coordinate is 1, each with the 2-or-more dimensional subspace V' of V
    it kills; extension-field-only degeneracy leaves the list empty.
    """

    certificate: BinaryForm
    witnesses: tuple = ()

    @property
    def identically_degenerate(self) -> bool:
        return self.certificate.is_zero()

    def encode(self) -> dict:
        enc = self.certificate.field.encode
        return {
            "certificate": {
                "degree": self.certificate.degree,
                "coefficients": [enc(c) for c in self.certificate.coeffs],
            },
            "identically_degenerate": self.identically_degenerate,
            "witnesses": [
                {"lambda": [enc(l1), enc(l2)], "subspace": W.basis.encode()}
                for (l1, l2), W in self.witnesses
            ],
        }


def _pencil_minor_gcd(R1: Matrix, R2: Matrix) -> BinaryForm:
    """Gcd of the (k-1)x(k-1) minors of u*R1 + v*R2 as binary forms.

    Zero form when the minors all vanish identically or do not exist
    (fewer than k-1 columns): rank <= k-2 at every pencil point.
    """
    F = R1.field
    k, w = R1.shape
    if k - 1 > min(k, w):
        return BinaryForm.zero(F)
    if k - 1 == 0:
        # 0x0 minors are the empty determinant 1: rank never drops below 0
        return BinaryForm(F, 0, [F.one])
    minors = []
    for rows in itertools.combinations(range(k), k - 1):
        for cols in itertools.combinations(range(w), k - 1):
            grid = []
            for i in rows:
                row = []
                for a in cols:
                    c1, c2 = R1.entry(i, a), R2.entry(i, a)
                    row.append([c2, c1] if (c1 or c2) else [])
                grid.append(row)
            det = pmat_det(F, grid)
            minors.append(BinaryForm.from_univariate(F, det, k - 1))
    return binary_form_gcd(minors)


def find_degenerate_pencil(
    ctx: PointContext, pair: tuple[int, int] | None = None
) -> PencilDegeneracy | None:
    """Decide whether the pencil of two forms contains a degenerate combination.

    For m = 2 the pencil is the whole form space; for larger m an explicit
    `pair` of form indices selects a 2-dimensional sub-pencil.  Returns None
    exactly when no nonzero combination, over the algebraic closure, kills
    some 2-dimensional subspace of V against E/V.  The zero combination is
    excluded: pencil points are projective.
    """
    if pair is None:
        if ctx.m != 2:
            raise ValueError(
                f"pencil degeneracy needs m = 2 (got m = {ctx.m});"
                " pass `pair` to select a sub-pencil")
        pair = (0, 1)
    i1, i2 = pair
    if i1 == i2 or not (0 <= i1 < ctx.m and 0 <= i2 < ctx.m):
        raise ValueError(f"invalid form pair {pair} for m = {ctx.m}")
    if ctx.k <= 1:
        return None
    F = ctx.field
    grams = ctx.forms.grams()
    R1, R2 = _restrictions(ctx.basis, ctx.complement, [grams[i1], grams[i2]])
    gcd = _pencil_minor_gcd(R1, R2)
    if gcd.is_constant() and not gcd.is_zero():
        return None
    if gcd.is_zero():
        # every pencil point degenerates; report the two basis points
        points = [(F.one, F.zero), (F.zero, F.one)]
    else:
        points = binary_form_roots(gcd)
    witnesses = []
    for (l1, l2) in points:
        R = R1.scale(l1).add(R2.scale(l2))
        coords = R.left_kernel_basis()
        if coords.nrows < 2:  # pragma: no cover - contradicts the minor gcd
            raise ArithmeticError("pencil witness lost rank two")
        W = Subspace.from_span(coords.mul(ctx.basis))
        witnesses.append(((l1, l2), W))
    return PencilDegeneracy(certificate=gcd, witnesses=tuple(witnesses))


# ---------------------------------------------------------------------------
# tangent report
# ---------------------------------------------------------------------------

@dataclass
class TangentReport:
    n: int
    k: int
    m: int
    expected_dim: int
    tangent_dim: int
    phi_rank: int
    phi_kernel: list[PhiKernelElement] = dc_field(default_factory=list)
    degeneracy: PencilDegeneracy | None = None
    pencil_checked: bool = False

    def excess(self) -> int:
        return self.tangent_dim - self.expected_dim

    def is_expected(self) -> bool:
        return self.tangent_dim == self.expected_dim

    def encode(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "expected_dim": self.expected_dim,
            "tangent_dim": self.tangent_dim,
            "phi_rank": self.phi_rank,
            "phi_kernel": [e.encode() for e in self.phi_kernel],
            "degenerate": (self.degeneracy is not None) if self.pencil_checked else None,
            "degeneracy": self.degeneracy.encode() if self.degeneracy else None,
        }


def tangent_report(ctx: PointContext, pencil: bool = True) -> TangentReport:
    """Dimension of the tangent space at [V], with kernel and pencil evidence.

    tangent_dim = k(n-k) - rank(constraints) always; for m = 2 the pencil
    degeneracy check runs as well (unless `pencil` is False) and its
    witnesses are attached.
    """
    C = build_constraints(ctx)
    rank = C.rank()
    kernel_rows = C.left_kernel_basis()
    kernel = [
        PhiKernelElement.from_flat(ctx.field, ctx.k, ctx.m, row)
        for row in kernel_rows.rows
    ]
    degeneracy = None
    checked = False
    if pencil and ctx.m == 2:
        degeneracy = find_degenerate_pencil(ctx)
        checked = True
    report = TangentReport(
        n=ctx.n,
        k=ctx.k,
        m=ctx.m,
        expected_dim=ctx.expected_dim(),
        tangent_dim=ctx.k * (ctx.n - ctx.k) - rank,
        phi_rank=rank,
        phi_kernel=kernel,
        degeneracy=degeneracy,
        pencil_checked=checked,
    )
    assert report.tangent_dim >= report.expected_dim
    assert len(report.phi_kernel) == ctx.m * (ctx.k * (ctx.k - 1) // 2) - rank
    return report


# ---------------------------------------------------------------------------
# even eigenspaces of alternating pencils
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenspaceReport:
    eigenvalues_in_field: tuple
    nullities: tuple
    all_even: bool


def check_even_eigenspaces(M1: Matrix, M2: Matrix) -> EigenspaceReport:
    """Nullity parity of d*I - M2*M1^{-1} at every base-field eigenvalue d.

    d*I - M2*M1^{-1} has the kernel of d*M2^{-1} - M1^{-1}, an alternating
    matrix, so each nullity is (even size) - (even rank): the parity claim
    this reports on.
    """
    M1.field.require_same(M2.field)
    if M1.shape != M2.shape or not M1.is_square():
        raise ValueError("need two square matrices of equal size")
    if M1.nrows % 2:
        raise ValueError("size must be even")
    if not (M1.is_alternating() and M2.is_alternating()):
        raise ValueError("both matrices must be alternating")
    k = M1.nrows
    try:
        N = M2.mul(M1.inverse())
    except SingularMatrixError:
        raise ValueError("both matrices must be nonsingular") from None
    if M2.rank() != k:
        raise ValueError("both matrices must be nonsingular")
    F = M1.field
    eigenvalues = proots(F, N.char_poly())
    nullities = []
    for d in eigenvalues:
        shifted = Matrix.identity(F, k).scale(d).sub(N)
        nullities.append(k - shifted.rank())
    return EigenspaceReport(
        eigenvalues_in_field=tuple(eigenvalues),
        nullities=tuple(nullities),
        all_even=all(nu % 2 == 0 for nu in nullities),
    )


# ---------------------------------------------------------------------------
# exhaustive equivalence verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MismatchRecord:
    subspace: Subspace
    tangent_dim: int
    expected_dim: int
    degeneracy: PencilDegeneracy | None


@dataclass
class VerifyReport:
    pairs_checked: int
    points_checked: int
    mismatches: list  # (pair_index, FormSpace, MismatchRecord)


def _equivalence_at_point(
    fs: FormSpace, V: Subspace, fault: bool = False
) -> tuple[bool, MismatchRecord | None]:
    """One point of the two-sided check: dimension side vs pencil side.

    `fault` zeroes the first constraint row before the rank computation; a
    self-test hook that must produce mismatches if the harness is alive.
    (Negating a row would be invisible: row scaling never changes rank.)
    """
    field = fs.field
    V_ctx = PointContext(V, fs)
    C = build_constraints(V_ctx)
    if fault and C.nrows:
        zeroed = [[field.zero] * C.ncols] + [list(r) for r in C.rows[1:]]
        C = Matrix(field, C.nrows, C.ncols, zeroed)
    tangent = V_ctx.k * (V_ctx.n - V_ctx.k) - C.rank()
    expected = V_ctx.expected_dim()
    degeneracy = find_degenerate_pencil(V_ctx)
    if (tangent == expected) == (degeneracy is None):
        return True, None
    return False, MismatchRecord(
        subspace=V, tangent_dim=tangent, expected_dim=expected, degeneracy=degeneracy)


def verify_pair(
    fs: FormSpace,
    k: int,
    scope: str = "exhaustive",
    rng: Random | None = None,
    samples: int = 100,
    budget: int | None = None,
    fault: bool = False,
) -> tuple[int, list[MismatchRecord]]:
    """Check the equivalence over every point for one pencil of forms.

    Exhaustive scope enumerates all simultaneously isotropic k-subspaces
    (prime fields only, budget applies); sampled scope draws `samples`
    greedy random points and skips stalls.
    """
    if fs.m != 2:
        raise ValueError("equivalence verification needs pencils (m = 2)")
    points = 0
    mismatches = []
    if scope == "exhaustive":
        source = enumerate_isotropic_subspaces(k, fs, budget=budget)
    elif scope == "sampled":
        if rng is None:
            raise ValueError("sampled scope needs an rng")
        def sampled():
            for _ in range(samples):
                V = random_isotropic_subspace(k, fs, rng)
                if V is not None:
                    yield V
        source = sampled()
    else:
        raise ValueError(f"unknown scope {scope!r}")
    for V in source:
        points += 1
        ok, record = _equivalence_at_point(fs, V, fault=fault)
        if not ok:
            mismatches.append(record)
    return points, mismatches


def verify_thm_equivalence(
    n: int,
    k: int,
    field: Field,
    pairs,
    scope: str = "exhaustive",
    seed: int = 0,
    samples_per_pair: int = 100,
    budget: int | None = None,
    fault: bool = False,
) -> VerifyReport:
    """Brute-force the equivalence 'expected tangent dimension iff no
    degenerate pencil combination' over many pencils.

    `pairs` is either an iterable of FormSpace pencils or an integer count
    of random independent pairs; pair i is drawn from the derived seed
    (seed, i), so partitioned parallel runs reproduce the same pencils.
    """
    if isinstance(pairs, int):
        pair_list = [
            random_independent_pair(n, field, Random(derive_seed(seed, i)))
            for i in range(pairs)
        ]
    else:
        pair_list = list(pairs)
        for fs in pair_list:
            if fs.dim != n:
                raise ValueError("form space dimension disagrees with n")
    report = VerifyReport(pairs_checked=len(pair_list), points_checked=0, mismatches=[])
    for idx, fs in enumerate(pair_list):
        rng = Random(derive_seed(seed, idx) ^ 0xA5A5A5A5) if scope == "sampled" else None
        points, mismatches = verify_pair(
            fs, k, scope=scope, rng=rng, samples=samples_per_pair,
            budget=budget, fault=fault)
        report.points_checked += points
        report.mismatches.extend((idx, fs, rec) for rec in mismatches)
    return report
