import json
from random import Random

import pytest

from msgkit import (
    BudgetExceeded,
    FormSpace,
    Matrix,
    PrimeField,
    QQ,
    Subspace,
    SymplecticForm,
    decode_point,
    derive_seed,
    encode_point,
    enumerate_isotropic_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    is_isotropic,
    isotropy_failure,
    random_form_space,
    random_independent_pair,
    random_isotropic_subspace,
    random_symplectic_form,
    standard_form,
)
from conftest import golden_compare


# --- construction and validation ------------------------------------------------

def test_standard_form_small():
    F = QQ
    assert standard_form(2, F).gram == Matrix(F, 2, 2, [[0, 1], [-1, 0]])
    J4 = standard_form(4, F).gram
    assert J4 == Matrix(F, 4, 4, [
        [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    with pytest.raises(ValueError):
        standard_form(3, F)
    with pytest.raises(ValueError):
        standard_form(0, F)


def test_symplectic_form_invariants_enforced():
    F = PrimeField(5)
    with pytest.raises(ValueError):
        SymplecticForm(Matrix.identity(F, 2))          # not alternating
    with pytest.raises(ValueError):
        SymplecticForm(Matrix.zeros(F, 2, 2))          # degenerate
    with pytest.raises(ValueError):
        SymplecticForm(Matrix.zeros(F, 3, 3))          # odd size forces degeneracy


def test_form_space_independence_enforced():
    F = PrimeField(5)
    J = standard_form(4, F)
    with pytest.raises(ValueError):
        FormSpace([J, SymplecticForm(J.gram.scale(2))])
    with pytest.raises(ValueError):
        FormSpace([])


def test_random_form_deterministic_and_golden():
    F3 = PrimeField(3)
    a = random_symplectic_form(4, F3, Random(0))
    b = random_symplectic_form(4, F3, Random(0))
    assert a == b
    assert a.gram.is_alternating() and a.gram.rank() == 4
    golden_compare("sym_form_n4_p3_seed0.json",
                   json.dumps(a.gram.encode(), sort_keys=True) + "\n")


def test_random_pair_golden_and_n2_rejection():
    F3 = PrimeField(3)
    fs = random_independent_pair(4, F3, Random(0))
    assert fs.m == 2 and fs.dim == 4
    golden_compare("pair_n4_p3_seed0.json",
                   json.dumps([g.encode() for g in fs.grams()], sort_keys=True) + "\n")
    # alternating 2x2 matrices form a 1-dimensional space: no independent pair
    with pytest.raises(ValueError):
        random_independent_pair(2, F3, Random(0))


def test_random_form_space_m3():
    fs = random_form_space(4, 3, PrimeField(5), Random(4))
    assert fs.m == 3


# --- isotropy ----------------------------------------------------------------------

def test_lines_always_isotropic():
    rng = Random(71)
    for field in (PrimeField(3), QQ):
        for _ in range(20):
            fs = random_form_space(4, 2, field, rng)
            V = random_isotropic_subspace(1, fs, rng)
            assert V is not None and V.k == 1
            assert is_isotropic(V, fs)


def test_isotropy_standard_plane():
    # in [[0,I],[-I,0]] coordinates the span of e1, e2 is isotropic
    F = QQ
    gram = Matrix(F, 4, 4, [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    fs = FormSpace([SymplecticForm(gram)])
    V = Subspace(Matrix(F, 2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert is_isotropic(V, fs)


def test_isotropy_failure_reports_pair():
    # adjacent-block standard form pairs e1 with e2
    F = QQ
    fs = FormSpace([standard_form(4, F)])
    V = Subspace(Matrix(F, 2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert not is_isotropic(V, fs)
    t, i, j, val = isotropy_failure(V, fs)
    assert (t, i, j) == (0, 0, 1) and val == 1


def test_isotropy_dimension_mismatch():
    F = QQ
    fs = FormSpace([standard_form(4, F)])
    V = Subspace(Matrix(F, 1, 6, [[1, 0, 0, 0, 0, 0]]))
    with pytest.raises(ValueError):
        is_isotropic(V, fs)


def test_isotropy_basis_independent():
    rng = Random(73)
    F = PrimeField(7)
    fs = random_form_space(6, 2, F, rng)
    for _ in range(20):
        V = random_isotropic_subspace(2, fs, rng)
        if V is None:
            continue
        # re-span by random row operations; subspace equality is canonical
        mixed = Matrix(F, 2, 6, [
            [F.add(F.mul(2, a), b) for a, b in zip(V.basis.rows[0], V.basis.rows[1])],
            V.basis.rows[1],
        ])
        assert Subspace.from_span(mixed) == V
        assert is_isotropic(Subspace.from_span(mixed), fs) == is_isotropic(V, fs)


# --- sampling ------------------------------------------------------------------------

def test_sampler_postconditions():
    rng = Random(79)
    F5 = PrimeField(5)
    fs = FormSpace([standard_form(6, F5)])
    for k in (1, 2, 3):
        for _ in range(10):
            V = random_isotropic_subspace(k, fs, rng)
            assert V is not None  # m=1 never stalls
            assert V.k == k and is_isotropic(V, fs)
    with pytest.raises(ValueError):
        random_isotropic_subspace(4, fs, rng)  # k > n/2


def test_sampler_m1_never_stalls_many_draws():
    rng = Random(83)
    for field in (PrimeField(3), QQ):
        fs = FormSpace([random_symplectic_form(4, field, rng)])
        for _ in range(50):
            assert random_isotropic_subspace(2, fs, rng) is not None


# --- enumeration ----------------------------------------------------------------------

def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(6, 3, 3) == 33880
    assert gaussian_binomial(4, 0, 5) == 1
    assert gaussian_binomial(4, 5, 3) == 0


def test_enumeration_count_and_uniqueness():
    F3 = PrimeField(3)
    subs = list(enumerate_subspaces(4, 2, F3))
    assert len(subs) == 130
    assert len(set(subs)) == 130
    lines = list(enumerate_subspaces(2, 1, F3))
    assert len(lines) == 4
    F5 = PrimeField(5)
    assert len(list(enumerate_subspaces(4, 2, F5))) == gaussian_binomial(4, 2, 5)


def test_enumeration_yields_rref_bases():
    F3 = PrimeField(3)
    for V in enumerate_subspaces(4, 2, F3):
        R, rank, _ = V.basis.rref()
        assert rank == 2 and R == V.basis


def test_isotropic_enumeration_filter_contract():
    F3 = PrimeField(3)
    fs = FormSpace([standard_form(4, F3)])
    iso = list(enumerate_isotropic_subspaces(2, fs))
    # Lagrangian count of Sp(4, q) is (q+1)(q^2+1)
    assert len(iso) == 40
    assert all(is_isotropic(V, fs) for V in iso)


def test_enumeration_budget():
    F3 = PrimeField(3)
    with pytest.raises(BudgetExceeded):
        enumerate_subspaces(4, 2, F3, budget=100)
    with pytest.raises(ValueError):
        enumerate_subspaces(4, 2, QQ)


# --- support bits --------------------------------------------------------------------

def test_derive_seed_stable():
    # frozen values: parallel workers depend on this exact derivation
    assert derive_seed(0, 0) == 16294208416658607535
    assert derive_seed(0, 1) == 7960286522194355700
    assert derive_seed(12345, 0) != derive_seed(12345, 1)


def test_point_file_roundtrip():
    rng = Random(89)
    fs = random_form_space(4, 2, PrimeField(3), rng)
    V = random_isotropic_subspace(2, fs, rng)
    obj = encode_point(fs, V)
    fs2, basis = decode_point(json.loads(json.dumps(obj)))
    assert fs2 == fs
    assert Subspace.from_span(basis) == V


def test_point_file_validation():
    with pytest.raises(ValueError):
        decode_point({"field": {"kind": "rational"}})
    with pytest.raises(ValueError):
        decode_point([1, 2, 3])
