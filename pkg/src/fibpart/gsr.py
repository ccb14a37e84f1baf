"""Generalized spectral radius experiments for the base step matrices.

For the family {M0, M1} of per-digit count matrices of the pair
recognizer, the growth of the best length-k products is governed by the
square root of the golden ratio. This module enumerates cyclic classes of
products exactly, checks the 2x2 reduction bound machinery, and drives the
Kronecker-power identity that links the family to the per-p growth
constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .automata import berstel_step_matrices
from .exactlin import (
    CertifiedRoot,
    IntMatrix,
    IntPolynomial,
    _power_iteration,
    char_poly,
    greatest_real_root,
    kron_power,
    spectral_norm_2x2,
)
from .report import Report
from .spectral import compute_lambda

__all__ = [
    "MatrixFamily",
    "GsrEstimate",
    "TrendSeries",
    "berstel_family",
    "word_product",
    "rho_exact",
    "rho_k",
    "z_matrix",
    "verify_z_bounds",
    "verify_word_bound",
    "kronecker_radius",
    "theorem2_trend",
    "sqrt_phi",
    "RHO_K_CAP",
    "KRONECKER_P_CAP",
]

RHO_K_CAP = 20
KRONECKER_P_CAP = 9


@dataclass(frozen=True)
class MatrixFamily:
    """A nonempty family of square nonnegative integer matrices of one
    common dimension."""

    members: tuple[IntMatrix, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("matrix family must be nonempty")
        dim = self.members[0].rows
        for m in self.members:
            if m.rows != m.cols or m.rows != dim:
                raise ValueError("family members must be square with equal dimension")
            if any(v < 0 for row in m.data for v in row):
                raise ValueError("family members must be nonnegative")

    @property
    def dim(self) -> int:
        return self.members[0].rows


@dataclass(frozen=True)
class GsrEstimate:
    """Best length-k product: its spectral radius, a witness word attaining
    it (lexicographically least over its cyclic class), and rho^(1/k)."""

    k: int
    rho: float
    witness: str
    normalized: float


@lru_cache(maxsize=None)
def berstel_family() -> MatrixFamily:
    return MatrixFamily(berstel_step_matrices())


@lru_cache(maxsize=None)
def sqrt_phi(precision: Fraction = Fraction(1, 10**15)) -> CertifiedRoot:
    """The square root of the golden ratio, certified as the greatest real
    root of X^4 - X^2 - 1."""
    return greatest_real_root(IntPolynomial([-1, 0, -1, 0, 1]), precision=precision)


def word_product(family: MatrixFamily, word: str) -> IntMatrix:
    """Exact product of family members indexed by the digits of the word,
    in word order."""
    if not word:
        raise ValueError("word must be nonempty")
    out = None
    for ch in word:
        m = family.members[int(ch)]
        out = m if out is None else out @ m
    return out


def rho_exact(m: IntMatrix, precision: Fraction = Fraction(1, 10**12)) -> float:
    """Spectral radius of a small nonnegative integer matrix through the
    exact characteristic polynomial (the radius is its greatest real root)."""
    if all(v == 0 for row in m.data for v in row):
        return 0.0
    return greatest_real_root(char_poly(m), precision=precision).value


def _rotations(word: int, k: int):
    for shift in range(k):
        yield ((word >> shift) | (word << (k - shift))) & ((1 << k) - 1)


def _cyclic_representatives(k: int, skip_consecutive_ones: bool):
    """Integers encoding the lexicographically least member of each cyclic
    class of k-bit words; optionally drops classes with two cyclically
    adjacent ones."""
    mask = (1 << k) - 1
    for word in range(1 << k):
        if skip_consecutive_ones and k > 1:
            left = ((word << 1) | (word >> (k - 1))) & mask
            if word & left:
                continue
        if all(word <= rot for rot in _rotations(word, k)):
            yield word


def _word_str(word: int, k: int) -> str:
    return format(word, f"0{k}b")


def rho_k(
    family: MatrixFamily,
    k: int,
    skip_consecutive_ones: bool = False,
    cap: int = RHO_K_CAP,
) -> GsrEstimate:
    """Maximum spectral radius over all length-k products of family
    members, maximized over one representative per cyclic class (cyclic
    shifts of a product share their eigenvalues).

    With skip_consecutive_ones the classes containing the factor 11
    (cyclically) are dropped; this is sound exactly when member 1 squares
    to zero, which is validated, because those products are then nilpotent.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > cap:
        raise ValueError(f"k={k} exceeds the enumeration cap {cap}")
    if len(family.members) != 2:
        raise ValueError("cyclic enumeration is implemented for two-member families")
    if skip_consecutive_ones:
        square = family.members[1] @ family.members[1]
        if any(v != 0 for row in square.data for v in row):
            raise ValueError(
                "skip_consecutive_ones requires the second member to square to zero"
            )
    best_rho = -1.0
    best_word = 0
    for word in _cyclic_representatives(k, skip_consecutive_ones):
        rho = rho_exact(word_product(family, _word_str(word, k)))
        if rho > best_rho:
            best_rho = rho
            best_word = word
    return GsrEstimate(
        k=k,
        rho=best_rho,
        witness=_word_str(best_word, k),
        normalized=best_rho ** (1.0 / k),
    )


def z_matrix(h: int) -> IntMatrix:
    """The 2x2 reduction matrix [[h//2, (h-1)//2], [1, 1]] for h >= 2."""
    if h < 2:
        raise ValueError("z_matrix is defined for h >= 2")
    return IntMatrix([[h // 2, (h - 1) // 2], [1, 1]])


def verify_z_bounds(h_max: int) -> Report:
    """Bound checks for the reduction matrices:

    (a) spectral_norm(Z_h)^(1/h) <= sqrt(phi) + 1e-12 for h = 2..h_max,
    (b) 2 * trace(Z_h^T Z_h) <= h^2 + 4 for h = 7..h_max, exactly in
        integers, and
    (c) ((h^2 + 4) / 2)^(1/(2h)) <= sqrt(phi) for h = 7..h_max in floats.
    """
    if h_max < 7:
        raise ValueError("h_max must be at least 7")
    bound = sqrt_phi().value
    report = Report(f"reduction matrix bounds up to h={h_max}")
    norm_ok = all(
        spectral_norm_2x2(z_matrix(h)) ** (1.0 / h) <= bound + 1e-12
        for h in range(2, h_max + 1)
    )
    report.add("norm-root-bound", norm_ok, "norm(Z_h)^(1/h) <= sqrt(phi) + 1e-12")
    trace_ok = True
    for h in range(7, h_max + 1):
        trace = (h // 2) ** 2 + ((h - 1) // 2) ** 2 + 2
        if 2 * trace > h * h + 4:
            trace_ok = False
    report.add("trace-bound-exact", trace_ok, "2*trace(Z_h^T Z_h) <= h^2 + 4")
    tail_ok = all(
        ((h * h + 4) / 2) ** (1.0 / (2 * h)) <= bound for h in range(7, h_max + 1)
    )
    report.add("trace-root-bound", tail_ok, "((h^2+4)/2)^(1/(2h)) <= sqrt(phi)")
    return report


def verify_word_bound(family: MatrixFamily, k_max: int, tol: float = 1e-9) -> Report:
    """rho_k^(1/k) never exceeds sqrt(phi) + tol for k <= k_max, with
    equality within tol at every multiple of 4."""
    if k_max > RHO_K_CAP:
        raise ValueError(f"k_max exceeds the enumeration cap {RHO_K_CAP}")
    bound = sqrt_phi().value
    report = Report(f"product radius bound up to k={k_max}")
    for k in range(1, k_max + 1):
        est = rho_k(family, k, skip_consecutive_ones=True)
        ok = est.normalized <= bound + tol
        detail = f"rho_{k}^(1/{k}) = {est.normalized:.12g}, witness {est.witness}"
        if k % 4 == 0:
            ok = ok and abs(est.normalized - bound) <= tol
            detail += ", equality expected"
        report.add(f"k={k}", ok, detail)
    return report


def kronecker_radius(family: MatrixFamily, p: int, tol: float = 1e-11) -> float:
    """rho(M0^(kron p) + M1^(kron p))^(1/p) by sparse power iteration."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if family.dim**p > family.dim**KRONECKER_P_CAP:
        raise ValueError(f"Kronecker powers are capped at p={KRONECKER_P_CAP}")
    total = None
    for m in family.members:
        power = kron_power(m, p, sparse=True)
        total = power if total is None else total + power
    radius = _power_iteration(total.to_csr(), tol=tol, max_iter=500_000)
    return radius ** (1.0 / p)


@dataclass(frozen=True)
class TrendSeries:
    """Per-p normalized growth constants with Kronecker cross-checks."""

    rows: list[tuple[int, float, float]]  # (p, lambda_p^(1/p), kron normalized)
    report: Report

    def to_json(self) -> dict:
        return {
            "rows": [
                {"p": p, "lambda_root": lr, "kron_normalized": kn}
                for p, lr, kn in self.rows
            ],
            "report": self.report.to_json(),
        }


def theorem2_trend(p_max: int, tol: float = 1e-6) -> TrendSeries:
    """(p, lambda_p^(1/p)) pairs from the certified constants, each
    cross-checked against the Kronecker-power radius; asserts the sequence
    is strictly decreasing and stays above sqrt(phi)."""
    if not 1 <= p_max <= KRONECKER_P_CAP:
        raise ValueError(f"p_max must be between 1 and {KRONECKER_P_CAP}")
    family = berstel_family()
    bound = sqrt_phi().value
    rows = []
    report = Report(f"normalized growth trend up to p={p_max}")
    for p in range(1, p_max + 1):
        lam = compute_lambda(p).value
        lam_root = lam ** (1.0 / p)
        kron_norm = kronecker_radius(family, p)
        rows.append((p, lam_root, kron_norm))
        report.add(
            f"kron-matches-lambda-p{p}",
            abs(kron_norm**p - lam) <= tol,
            f"|{kron_norm**p:.12g} - {lam:.12g}| <= {tol}",
        )
    decreasing = all(a[1] > b[1] for a, b in zip(rows, rows[1:]))
    report.add("strictly-decreasing", decreasing, "lambda_p^(1/p) decreases")
    above = all(r[1] > bound for r in rows)
    report.add("above-sqrt-phi", above, f"every term > {bound:.12g}")
    return TrendSeries(rows, report)
