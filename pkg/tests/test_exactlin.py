"""Exact linear algebra tests: Kronecker products, recurrence fitting,
characteristic polynomials, certified roots, and spectral helpers."""

import math
import random
from fractions import Fraction

import pytest

from fibpart.automata import berstel_step_matrices
from fibpart.exactlin import (
    CertifiedRoot,
    ConvergenceError,
    InsufficientDataError,
    IntMatrix,
    IntPolynomial,
    NoRealRootError,
    char_poly,
    fit_annihilator,
    greatest_real_root,
    kron,
    kron_power,
    mat_vec,
    poly_divides,
    real_root_count,
    spectral_norm_2x2,
    spectral_radius_float,
    vec_mat,
)

PHI = (1 + math.sqrt(5)) / 2


def test_kron_identity():
    i2 = IntMatrix.identity(2)
    assert kron(i2, i2) == IntMatrix.identity(4)


def test_kron_base_matrices():
    v0, v1 = berstel_step_matrices()
    assert kron(v0, v0).data[0][0] == 1
    sq = kron_power(v1, 2, sparse=True)
    assert (sq.rows, sq.cols) == (16, 16)
    assert sq.nnz() == 9


def test_kron_associative_on_random_samples():
    rng = random.Random(0)
    for _ in range(10):
        mats = [
            IntMatrix([[rng.randrange(-3, 4) for _ in range(2)] for _ in range(2)])
            for _ in range(3)
        ]
        a, b, c = mats
        assert kron(kron(a, b), c) == kron(a, kron(b, c))


def test_mat_vec_and_vec_mat():
    v0, v1 = berstel_step_matrices()
    total = v0 + v1
    assert mat_vec(IntMatrix.identity(4), [3, 1, 4, 1]) == [3, 1, 4, 1]
    # the initial-state row of the combined count matrix
    assert vec_mat([1, 0, 0, 0], total) == [1, 1, 0, 1]
    with pytest.raises(ValueError):
        mat_vec(total, [1, 2, 3])


def test_sparse_round_trip():
    v0, _ = berstel_step_matrices()
    assert v0.to_sparse().to_dense() == v0


def test_fit_annihilator_powers_of_two():
    seq = [2**i for i in range(21)]
    assert fit_annihilator(seq) == IntPolynomial([-2, 1])


def test_fit_annihilator_constant():
    assert fit_annihilator([1] * 12) == IntPolynomial([-1, 1])


def test_fit_annihilator_fibonacci():
    seq = [1, 2]
    while len(seq) < 24:
        seq.append(seq[-1] + seq[-2])
    assert fit_annihilator(seq) == IntPolynomial([-1, -1, 1])


def test_fit_annihilator_resubstitution_and_random_round_trip():
    rng = random.Random(7)
    for _ in range(10):
        order = rng.randrange(1, 5)
        rec = [rng.randrange(-3, 4) for _ in range(order)]
        seq = [rng.randrange(1, 5) for _ in range(order)]
        while len(seq) < 4 * order + 8:
            seq.append(sum(c * seq[-i - 1] for i, c in enumerate(rec)))
        poly = fit_annihilator(seq)
        assert not poly.is_zero
        assert poly.degree <= order
        # annihilates every window of the input
        k = poly.degree
        for start in range(len(seq) - k):
            assert sum(c * seq[start + j] for j, c in enumerate(poly.coeffs)) == 0


def test_fit_annihilator_insufficient_data():
    with pytest.raises(InsufficientDataError):
        fit_annihilator([1, 2, 3, 4, 5])


def test_fit_annihilator_order_exceeds_budget():
    # order-5 recurrence with only 12 terms: searchable order is (12-4)/2 = 4
    seq = [1, 1, 1, 1, 1]
    while len(seq) < 12:
        seq.append(seq[-5] + 17 * seq[-1] + seq[-3])
    assert fit_annihilator(seq).is_zero


def test_char_poly_identity():
    assert char_poly(IntMatrix.identity(2)) == IntPolynomial([1, -2, 1])


def test_char_poly_base_matrices():
    v0, v1 = berstel_step_matrices()
    cp = char_poly(v0)
    assert cp.is_monic()
    assert poly_divides(IntPolynomial([-1, 1]), cp)  # eigenvalue 1
    assert spectral_radius_float(v0) == pytest.approx(1.0, abs=1e-9)
    # combined matrix has dominant eigenvalue 2
    assert poly_divides(IntPolynomial([-2, 1]), char_poly(v0 + v1))


def test_char_poly_dimension_cap():
    with pytest.raises(ValueError):
        char_poly(IntMatrix.identity(65))


def test_annihilator_divides_char_poly_on_random_matrices():
    rng = random.Random(3)
    for _ in range(5):
        dim = rng.randrange(2, 7)
        m = IntMatrix(
            [[rng.randrange(0, 2) for _ in range(dim)] for _ in range(dim)]
        )
        cp = char_poly(m)
        for _ in range(10):
            u = [rng.randrange(0, 2) for _ in range(dim)]
            w = [rng.randrange(0, 2) for _ in range(dim)]
            seq = []
            vec = list(u)
            for _ in range(4 * dim + 8):
                seq.append(sum(a * b for a, b in zip(vec, w)))
                vec = m.vec_mat(vec)
            poly = fit_annihilator(seq)
            assert not poly.is_zero
            assert poly_divides(poly, cp)


def test_poly_divides():
    assert poly_divides(IntPolynomial([-2, 1]), IntPolynomial([-4, 0, 1]))
    assert not poly_divides(IntPolynomial([-2, 1]), IntPolynomial([-1, 1]))
    with pytest.raises(ValueError):
        poly_divides(IntPolynomial(), IntPolynomial([1, 1]))


def test_poly_str():
    assert str(IntPolynomial([2, -2, -2, 1])) == "X^3 - 2*X^2 - 2*X + 2"
    assert str(IntPolynomial([-2, 1])) == "X - 2"
    assert str(IntPolynomial()) == "0"


def test_greatest_real_root_linear():
    root = greatest_real_root(IntPolynomial([-2, 1]))
    assert root.lo < 2 < root.hi or root.lo <= 2 <= root.hi
    assert root.width <= Fraction(1, 10**12)
    assert root.value == pytest.approx(2.0, abs=1e-11)


def test_greatest_real_root_cubic():
    # greatest root of X^3 - 2X^2 - 2X + 2
    root = greatest_real_root(IntPolynomial([2, -2, -2, 1]))
    assert root.value == pytest.approx(2.4811943040920146, abs=1e-10)
    # certificate: strict sign change and a single enclosed root
    lo_val = root.poly.evaluate(root.lo)
    hi_val = root.poly.evaluate(root.hi)
    assert (lo_val > 0) != (hi_val > 0)
    assert real_root_count(root.poly, root.lo, root.hi) == 1


def test_greatest_real_root_golden_ratio():
    root = greatest_real_root(IntPolynomial([-1, -1, 1]))
    assert root.value == pytest.approx(PHI, abs=1e-11)


def test_greatest_real_root_no_real_root():
    with pytest.raises(NoRealRootError):
        greatest_real_root(IntPolynomial([1, 0, 1]))


def test_greatest_real_root_multiple_root():
    # (X - 2)^2: squarefree certificate still isolates 2
    root = greatest_real_root(IntPolynomial([4, -4, 1]))
    assert root.value == pytest.approx(2.0, abs=1e-11)
    assert root.poly == IntPolynomial([-2, 1])


def test_refine_stability():
    root = greatest_real_root(IntPolynomial([2, -2, -2, 1]))  # width <= 1e-12
    tighter = root.refine(Fraction(1, 10**22))
    assert tighter.width <= Fraction(1, 10**22)
    assert root.lo <= tighter.lo and tighter.hi <= root.hi
    # narrowing tenfold and beyond never moves the first 10 digits
    assert f"{root.value:.10f}" == f"{tighter.value:.10f}"


def test_real_root_count():
    poly = IntPolynomial([-6, 11, -6, 1])  # (X-1)(X-2)(X-3)
    assert real_root_count(poly, Fraction(0), Fraction(4)) == 3
    assert real_root_count(poly, Fraction(3, 2), Fraction(5, 2)) == 1
    assert real_root_count(poly, Fraction(2), Fraction(3)) == 1  # half-open


def test_spectral_radius_small_exact():
    v0, v1 = berstel_step_matrices()
    prod = v0 @ v0 @ v0 @ v1
    assert spectral_radius_float(prod) == pytest.approx(PHI**2, abs=1e-9)
    assert spectral_radius_float(IntMatrix.identity(3)) == pytest.approx(1.0)
    assert spectral_radius_float(v1) == 0.0


def test_spectral_radius_power_iteration():
    v0, v1 = berstel_step_matrices()
    sparse = (v0 + v1).to_sparse()
    assert spectral_radius_float(sparse, tol=1e-11) == pytest.approx(2.0, abs=1e-9)


def test_spectral_radius_perron_bound():
    rng = random.Random(11)
    for _ in range(5):
        dim = rng.randrange(2, 6)
        m = IntMatrix(
            [[rng.randrange(0, 4) for _ in range(dim)] for _ in range(dim)]
        )
        rho = spectral_radius_float(m)
        assert rho >= max(m.data[i][i] for i in range(dim)) - 1e-9


def test_spectral_radius_rejects_negative():
    with pytest.raises(ValueError):
        spectral_radius_float(IntMatrix([[1, -1], [0, 1]]))


def test_power_iteration_convergence_error():
    v0, v1 = berstel_step_matrices()
    sparse = (v0 + v1).to_sparse()
    with pytest.raises(ConvergenceError) as err:
        spectral_radius_float(sparse, tol=1e-15, max_iter=1)
    assert math.isfinite(err.value.estimate)


def test_spectral_norm_2x2():
    assert spectral_norm_2x2([[1, 0], [0, 1]]) == pytest.approx(1.0)
    assert spectral_norm_2x2([[0, 1], [1, 0]]) == pytest.approx(1.0)
    # [[1,0],[1,1]]: A^T A has trace 3 and determinant 1
    expected = math.sqrt((3 + math.sqrt(9 - 4)) / 2)
    assert spectral_norm_2x2([[1, 0], [1, 1]]) == pytest.approx(expected, abs=1e-12)


def test_certified_root_json():
    root = greatest_real_root(IntPolynomial([-2, 1]))
    payload = root.to_json()
    assert payload["poly"] == ["-2", "1"]
    assert "/" in payload["lo"] and "/" in payload["hi"]
