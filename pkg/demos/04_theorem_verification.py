"""Brute-force verification of the dimension/degeneracy equivalence.

For pencils of two symplectic forms, the tangent space at [V] has the
expected dimension if and only if no nonzero combination in the pencil
kills a 2-plane of V against E/V.  Small finite fields let us check both
sides at every single point: the runs below report zero mismatches, and
a deliberately corrupted constraint system shows the harness would see a
failure if there were one.

The equal-eigenspace parity fact that powers the pencil analysis is also
checked here on random inputs.
"""

from random import Random

from msgkit import (
    Matrix,
    PrimeField,
    QQ,
    check_even_eigenspaces,
    verify_thm_equivalence,
)

F3 = PrimeField(3)

print("== exhaustive equivalence check, n=4, k=2, q=3 ==")
report = verify_thm_equivalence(4, 2, F3, pairs=20, scope="exhaustive", seed=0)
print(f"pencils: {report.pairs_checked}, points: {report.points_checked},"
      f" mismatches: {len(report.mismatches)}")

print("\n== the same harness with an injected fault ==")
faulted = verify_thm_equivalence(4, 2, F3, pairs=3, scope="exhaustive",
                                 seed=0, fault=True)
print(f"corrupting one constraint row yields {len(faulted.mismatches)}"
      f" mismatches over {faulted.points_checked} points")

print("\n== sampled scope scales to bigger ambient spaces ==")
report = verify_thm_equivalence(6, 2, F3, pairs=5, scope="sampled",
                                seed=1, samples_per_pair=40)
print(f"pencils: {report.pairs_checked}, points: {report.points_checked},"
      f" mismatches: {len(report.mismatches)}")

print("\n== even eigenspace parity ==")
rng = Random(42)


def random_alternating_nonsingular(field, n):
    while True:
        rows = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = field.random(rng)
                rows[i][j] = v
                rows[j][i] = field.neg(v)
        M = Matrix(field, n, n, rows)
        if M.rank() == n:
            return M


for field in (PrimeField(7), QQ):
    M1 = random_alternating_nonsingular(field, 6)
    M2 = random_alternating_nonsingular(field, 6)
    rep = check_even_eigenspaces(M1, M2)
    print(f"{field}: eigenvalues {rep.eigenvalues_in_field}"
          f" nullities {rep.nullities} all even: {rep.all_even}")
