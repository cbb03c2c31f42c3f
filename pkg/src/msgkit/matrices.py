"""Dense exact linear algebra over a msgkit field.

Matrices are immutable (tuple-of-tuples of raw scalars plus the owning
field), so they hash and deduplicate structurally.  Elimination uses
first-nonzero pivoting: with exact arithmetic there is nothing numerical
to stabilize, and a fixed pivot rule keeps every result reproducible.
"""

from __future__ import annotations

from .fields import Field, PrimeField
from .polynomials import pmat_det

__all__ = [
    "Matrix",
    "SingularMatrixError",
    "skew_normal_form",
    "canonical_alternating",
    "random_matrix",
    "random_invertible",
]


class SingularMatrixError(ValueError):
    """Raised when inverting a singular matrix."""


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field: Field, nrows: int, ncols: int, rows):
        rows = tuple(tuple(field.element(x) for x in row) for row in rows)
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"shape mismatch: expected {nrows}x{ncols}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows
        self._rref = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows, ncols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    # -- structure ----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.ncols, self.nrows,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}: {body})"

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    # -- arithmetic ---------------------------------------------------------

    def _check_same_field(self, other: "Matrix") -> None:
        self.field.require_same(other.field)

    def add(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        F = self.field
        return Matrix(F, self.nrows, self.ncols,
                      [[F.add(a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def sub(self, other: "Matrix") -> "Matrix":
        return self.add(other.neg())

    def neg(self) -> "Matrix":
        F = self.field
        return Matrix(F, self.nrows, self.ncols,
                      [[F.neg(x) for x in row] for row in self.rows])

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F.element(c)
        return Matrix(F, self.nrows, self.ncols,
                      [[F.mul(c, x) for x in row] for row in self.rows])

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} * {other.shape}")
        F = self.field
        brows = other.rows
        if isinstance(F, PrimeField):
            # unboxed residues: accumulate in plain ints, reduce once per entry
            p = F.p
            out = []
            for arow in self.rows:
                acc = [0] * other.ncols
                for k, a in enumerate(arow):
                    if a:
                        br = brows[k]
                        for j in range(other.ncols):
                            acc[j] += a * br[j]
                out.append([v % p for v in acc])
            return Matrix(F, self.nrows, other.ncols, out)
        add, mul, zero = F.add, F.mul, F.zero
        out = []
        for arow in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(arow):
                if a:
                    br = brows[k]
                    acc = [add(acc[j], mul(a, br[j])) for j in range(other.ncols)]
            out.append(acc)
        return Matrix(F, self.nrows, other.ncols, out)

    __matmul__ = mul

    def stack(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols,
                      self.rows + other.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return Matrix(self.field, self.nrows, self.ncols + other.ncols,
                      [r1 + r2 for r1, r2 in zip(self.rows, other.rows)])

    # -- elimination --------------------------------------------------------

    def rref(self) -> tuple["Matrix", int, tuple[int, ...]]:
        """Reduced row echelon form, rank, and pivot columns."""
        if self._rref is None:
            F = self.field
            sub, mul, inv = F.sub, F.mul, F.inv
            rows = [list(r) for r in self.rows]
            m, n = self.nrows, self.ncols
            pivots = []
            r = 0
            for c in range(n):
                if r == m:
                    break
                pr = None
                for i in range(r, m):
                    if rows[i][c]:
                        pr = i
                        break
                if pr is None:
                    continue
                rows[r], rows[pr] = rows[pr], rows[r]
                head = rows[r][c]
                if head != F.one:
                    f = inv(head)
                    rows[r] = [mul(f, x) for x in rows[r]]
                for i in range(m):
                    if i != r and rows[i][c]:
                        f = rows[i][c]
                        pivot_row = rows[r]
                        rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], pivot_row)]
                pivots.append(c)
                r += 1
            self._rref = (Matrix(F, m, n, rows), r, tuple(pivots))
        return self._rref

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> "Matrix":
        """Rows form a basis of the right null space (empty matrix if trivial).

        Each basis vector carries a 1 at one free column and zeros at the
        others, so the rows are independent by construction.
        """
        F = self.field
        R, rank, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        vecs = []
        for fc in free:
            v = [F.zero] * self.ncols
            v[fc] = F.one
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][fc])
            vecs.append(v)
        return Matrix(F, len(vecs), self.ncols, vecs)

    def left_kernel_basis(self) -> "Matrix":
        return self.transpose().kernel_basis()

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = self.hstack(Matrix.identity(self.field, n))
        R, rank, _ = aug.rref()
        if rank < n or any(R.rows[i][i] != self.field.one for i in range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix(self.field, n, n, [row[n:] for row in R.rows])

    # -- structure tests and invariants --------------------------------------

    def is_alternating(self) -> bool:
        """True iff the matrix is skew-symmetric with zero diagonal."""
        if not self.is_square():
            raise ValueError("alternating test needs a square matrix")
        F = self.field
        for i in range(self.nrows):
            if self.rows[i][i]:
                return False
            for j in range(i + 1, self.nrows):
                if self.rows[i][j] != F.neg(self.rows[j][i]):
                    return False
        return True

    def char_poly(self) -> list:
        """Coefficients of det(x*I - M), monic, c[i] = coefficient of x^i.

        Computed by fraction-free (Bareiss) elimination over F[x]; no
        root-finding, and no division by integers that could vanish in
        small characteristic.
        """
        if not self.is_square():
            raise ValueError("characteristic polynomial needs a square matrix")
        F = self.field
        grid = []
        for i in range(self.nrows):
            row = []
            for j in range(self.ncols):
                const = F.neg(self.rows[i][j])
                if i == j:
                    row.append([const, F.one])
                else:
                    row.append([const] if const else [])
            grid.append(row)
        det = pmat_det(F, grid)
        assert len(det) == self.nrows + 1 and det[-1] == F.one
        return det

    # -- JSON ----------------------------------------------------------------

    def encode(self) -> list:
        """Array of row arrays of scalar encodings."""
        enc = self.field.encode
        return [[enc(x) for x in row] for row in self.rows]

    @classmethod
    def decode(cls, field: Field, obj, ncols: int | None = None) -> "Matrix":
        if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
            raise ValueError("matrix JSON must be an array of row arrays")
        rows = [[field.decode(x) for x in row] for row in obj]
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, rows)


# ---------------------------------------------------------------------------
# alternating normal form
# ---------------------------------------------------------------------------

def canonical_alternating(field: Field, n: int, rank: int) -> Matrix:
    """Block diagonal: rank/2 copies of [[0,1],[-1,0]], then zeros."""
    if rank % 2 or rank > n:
        raise ValueError("rank must be even and at most n")
    M = [[field.zero] * n for _ in range(n)]
    for b in range(rank // 2):
        M[2 * b][2 * b + 1] = field.one
        M[2 * b + 1][2 * b] = field.neg(field.one)
    return Matrix(field, n, n, M)


def skew_normal_form(M: Matrix) -> tuple[Matrix, int]:
    """Congruence transform of an alternating matrix to canonical block form.

    Returns (P, r) with P invertible, P^T M P = canonical_alternating(n, r),
    and r = rank(M), which is automatically even.  The algorithm is an
    iterative symplectic Gram-Schmidt: pick a pair (v, w) with <v,w> != 0,
    scale w so the pairing is 1, project every remaining vector into the
    pair's orthogonal complement, repeat; whatever is left pairs to zero
    with everything and forms the radical block.
    """
    if not M.is_alternating():
        raise ValueError("skew_normal_form needs an alternating matrix")
    F = M.field
    n = M.nrows
    rows = M.rows

    def pair(x, y):
        acc = F.zero
        for i, xi in enumerate(x):
            if xi:
                ri = rows[i]
                for j, yj in enumerate(y):
                    if yj:
                        acc = F.add(acc, F.mul(xi, F.mul(ri[j], yj)))
        return acc

    basis = [tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)]
    chosen: list[tuple] = []
    while True:
        hit = None
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                if pair(basis[a], basis[b]):
                    hit = (a, b)
                    break
            if hit:
                break
        if hit is None:
            break
        a, b = hit
        v = basis[a]
        c = pair(v, basis[b])
        ci = F.inv(c)
        w = tuple(F.mul(ci, x) for x in basis[b])
        rest = [basis[i] for i in range(len(basis)) if i not in (a, b)]
        projected = []
        for u in rest:
            alpha = F.neg(pair(u, w))
            beta = pair(u, v)
            projected.append(tuple(
                F.add(u[i], F.add(F.mul(alpha, v[i]), F.mul(beta, w[i])))
                for i in range(n)
            ))
        chosen.extend([v, w])
        basis = projected
    cols = chosen + basis
    P = Matrix(F, n, n, cols).transpose()
    return P, len(chosen)


# ---------------------------------------------------------------------------
# random matrices
# ---------------------------------------------------------------------------

def random_matrix(field: Field, nrows: int, ncols: int, rng) -> Matrix:
    return Matrix(field, nrows, ncols,
                  [[field.random(rng) for _ in range(ncols)] for _ in range(nrows)])


def random_invertible(field: Field, n: int, rng) -> Matrix:
    """Rejection sampling; over F_p a draw is singular with probability < 1/(p-1)."""
    while True:
        M = random_matrix(field, n, n, rng)
        if M.rank() == n:
            return M
