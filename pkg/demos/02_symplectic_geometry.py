"""Symplectic forms and simultaneously isotropic subspaces.

A single symplectic form on F^n (n even) makes every isotropic k-plane,
k <= n/2, a point of the symplectic Grassmannian.  With several
independent forms the simultaneously isotropic locus is an intersection
of such Grassmannians, and this script shows both how to sample its
points and how to walk all of them for small finite fields.
"""

from random import Random

from msgkit import (
    FormSpace,
    PrimeField,
    enumerate_isotropic_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    is_isotropic,
    random_independent_pair,
    random_isotropic_subspace,
    standard_form,
)

F3 = PrimeField(3)
rng = Random(0)

print("== the standard form on F_3^4 ==")
J = standard_form(4, F3)
print(J.gram.to_lists())

print("\n== counting subspaces: the Gaussian binomial ==")
for (n, k) in [(2, 1), (4, 2), (6, 3)]:
    count = gaussian_binomial(n, k, 3)
    walked = sum(1 for _ in enumerate_subspaces(n, k, F3))
    print(f"[{n} choose {k}]_3 = {count}, enumeration visits {walked}")

print("\n== Lagrangians of Sp(4, 3) ==")
fs = FormSpace([J])
lagrangians = list(enumerate_isotropic_subspaces(2, fs))
print("count:", len(lagrangians), "(formula (q+1)(q^2+1) gives 40)")
print("first three bases:")
for V in lagrangians[:3]:
    print("  ", V.basis.to_lists())

print("\n== two independent forms cut the locus down ==")
pair = random_independent_pair(4, F3, rng)
both = [V for V in enumerate_isotropic_subspaces(2, pair)]
one = [V for V in enumerate_isotropic_subspaces(2, FormSpace([pair.forms[0]]))]
print(f"isotropic 2-planes for the first form alone: {len(one)}")
print(f"simultaneously isotropic for both:           {len(both)}")

print("\n== greedy random sampling ==")
for k in (1, 2):
    V = random_isotropic_subspace(k, pair, rng)
    print(f"k={k}: sampled {V}, isotropic check: {is_isotropic(V, pair)}")
print("(for m >= 2 the greedy extension can stall and returns None;"
      " for m = 1 it never does)")
