"""Exact arithmetic and dense linear algebra, the foundation layer.

Everything in msgkit runs over an odd prime field F_p or the rationals,
with no floating point: ranks, kernels, inverses, and characteristic
polynomials are exact, so every downstream dimension count is a theorem
about the specific matrices involved, not an approximation.
"""

from random import Random

from msgkit import (
    Matrix,
    PrimeField,
    QQ,
    canonical_alternating,
    random_invertible,
    skew_normal_form,
)

F7 = PrimeField(7)
print("== F_7 arithmetic ==")
print("3 + 5 =", F7.add(3, 5))
print("inverse of 3 =", F7.inv(3), "(check: 3 *", F7.inv(3), "=", F7.mul(3, F7.inv(3)), ")")

print("\n== rationals stay exact ==")
x = QQ.element("1/3")
print("1/3 + 1/3 + 1/3 =", QQ.add(QQ.add(x, x), x))

print("\n== row reduction over F_5 ==")
M = Matrix(PrimeField(5), 2, 2, [[1, 2], [3, 6]])
R, rank, pivots = M.rref()
print("matrix:", M.to_lists())
print("rref:", R.to_lists(), " rank:", rank, " pivots:", pivots)

print("\n== kernel vectors re-multiply to zero ==")
A = Matrix(QQ, 2, 3, [[1, 2, 3], [4, 5, 6]])
K = A.kernel_basis()
print("kernel basis rows:", K.encode())
print("A * kernel^T =", A.mul(K.transpose()).encode())

print("\n== characteristic polynomial without root-finding ==")
Rot = Matrix(QQ, 2, 2, [[0, 1], [-1, 0]])
print("rotation char poly (x^2 + 1):", [QQ.encode(c) for c in Rot.char_poly()])

print("\n== alternating normal form ==")
rng = Random(0)
F3 = PrimeField(3)
rows = [[0, 1, 2, 0], [2, 0, 1, 1], [1, 2, 0, 2], [0, 2, 1, 0]]
M = Matrix(F3, 4, 4, rows)
print("alternating:", M.is_alternating(), " rank:", M.rank(), "(always even)")
P, r = skew_normal_form(M)
print("P^T M P =", P.transpose().mul(M).mul(P).to_lists())
print("canonical:", canonical_alternating(F3, 4, r).to_lists())

print("\nrandom invertible matrices are one rejection loop away:")
print(random_invertible(F7, 3, rng).to_lists())
