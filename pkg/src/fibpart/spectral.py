"""Growth constants of the p-track counting automata.

The accepted-count sequence of the accessible p-track product satisfies an
integer linear recurrence; its greatest real characteristic root is the
growth constant lambda_p. This module fits that recurrence, certifies the
root with an exact isolating interval, checks the result against the
built-in reference table (printed values and minimal polynomials), and
cross-checks the spectral radii of the related transition matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .automata import (
    accessible_product,
    count_accepted_series,
    minimize,
    product,
    transition_matrix,
)
from .exactlin import (
    CertifiedRoot,
    InsufficientDataError,
    IntPolynomial,
    fit_annihilator,
    greatest_real_root,
    poly_divides,
    spectral_radius_float,
)
from .report import Report

__all__ = [
    "LambdaRecord",
    "REFERENCE_GROWTH",
    "reference_polynomial",
    "count_sequence",
    "compute_lambda",
    "verify_table1",
    "verify_rho_consistency",
    "LAMBDA_P_CAP",
]

LAMBDA_P_CAP = 10
_SEQUENCE_LENGTHS = (40, 80, 160, 264)

# Reference data for p = 1..8: the first five printed decimals of lambda_p
# and the coefficients (ascending) of its minimal polynomial over Q.
REFERENCE_GROWTH: dict[int, tuple[str, tuple[int, ...]]] = {
    1: ("2.00000", (-2, 1)),
    2: ("2.48119", (2, -2, -2, 1)),
    3: ("3.08613", (2, -4, -2, 1)),
    4: ("3.84606", (2, -2, 0, -7, -2, 1)),
    5: ("4.80052", (10, -20, -8, -11, -2, 1)),
    6: ("5.99942", (4, -4, 26, -88, -28, -17, -2, 1)),
    7: ("7.50569", (42, -84, 34, -311, -74, -26, -2, 1)),
    8: ("9.39867", (4, -4, 174, -428, -2, -969, -174, -40, -2, 1)),
}


def reference_polynomial(p: int) -> IntPolynomial:
    return IntPolynomial(REFERENCE_GROWTH[p][1])


@dataclass(frozen=True)
class LambdaRecord:
    """Certified growth constant of the p-track counting automaton."""

    p: int
    annihilator: IntPolynomial
    root: CertifiedRoot
    value: float
    table_poly_verified: bool | None
    table_value_matched: bool | None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "annihilator": self.annihilator.to_json(),
            "root": self.root.to_json(),
            "value": self.value,
            "table_poly_verified": self.table_poly_verified,
            "table_value_matched": self.table_value_matched,
        }


_sequence_cache: dict[int, list[int]] = {}


def count_sequence(p: int, n_terms: int) -> list[int]:
    """Accepted-word counts of the accessible p-track product for lengths
    0..n_terms-1 (cached and extended on demand)."""
    cached = _sequence_cache.get(p)
    if cached is None or len(cached) < n_terms:
        cached = count_accepted_series(accessible_product(p), max(n_terms - 1, 0))
        _sequence_cache[p] = cached
    return cached[:n_terms]


def _parse_decimal(text: str) -> Fraction:
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if "." in text:
        whole, frac = text.split(".", 1)
    else:
        whole, frac = text, ""
    scale = 10 ** len(frac)
    return Fraction(sign * (int(whole or "0") * scale + int(frac or "0")), scale)


def _value_matches_digits(root: CertifiedRoot, digits: str) -> bool:
    """Whether the printed decimal agrees with the certified interval.

    Printed reference values may be truncations or roundings of the true
    constant, so the root must lie in [d - ulp/2, d + ulp] (the union of
    both windows), up to the width of the certificate."""
    printed = _parse_decimal(digits)
    ulp = Fraction(1, 10 ** (len(digits.split(".")[1]) if "." in digits else 0))
    lo_bound = printed - ulp / 2 - root.width
    hi_bound = printed + ulp + root.width
    return root.lo >= lo_bound and root.hi <= hi_bound


def _reference_checks(record_root: CertifiedRoot, annihilator: IntPolynomial,
                      claimed_poly: IntPolynomial, digits: str, title: str) -> Report:
    report = Report(title)
    report.add(
        "poly-divides-annihilator",
        poly_divides(claimed_poly, annihilator),
        f"degree {claimed_poly.degree} into degree {annihilator.degree}",
    )
    lo_val = claimed_poly.evaluate(record_root.lo)
    hi_val = claimed_poly.evaluate(record_root.hi)
    report.add(
        "poly-brackets-root",
        lo_val != 0 and hi_val != 0 and (lo_val > 0) != (hi_val > 0),
        "sign change across the certified interval",
    )
    report.add(
        "printed-digits-match",
        _value_matches_digits(record_root, digits),
        f"prefix {digits}",
    )
    return report


@lru_cache(maxsize=None)
def compute_lambda(p: int, precision: Fraction = Fraction(1, 10**12)) -> LambdaRecord:
    """Fit the minimal recurrence of the count sequence, certify its
    greatest real root, and verify the reference row when one exists.

    The sequence length starts at 40 terms and doubles until the fitted
    recurrence is stable across two batches (capped at 264 terms).
    """
    if not 1 <= p <= LAMBDA_P_CAP:
        raise ValueError(f"p must be between 1 and {LAMBDA_P_CAP}")
    annihilator = IntPolynomial()
    previous = None
    for length in _SEQUENCE_LENGTHS:
        fitted = fit_annihilator(count_sequence(p, length))
        if not fitted.is_zero and fitted == previous:
            annihilator = fitted
            break
        previous = fitted
        annihilator = fitted
    if annihilator.is_zero:
        raise InsufficientDataError(
            f"no recurrence of order <= {(_SEQUENCE_LENGTHS[-1] - 4) // 2} fits "
            f"the p={p} count sequence"
        )
    root = greatest_real_root(annihilator, precision=precision)
    if not root.lo > 1:
        raise ValueError(f"growth constant for p={p} not certified above 1")
    poly_ok = value_ok = None
    if p in REFERENCE_GROWTH:
        digits, coeffs = REFERENCE_GROWTH[p]
        checks = _reference_checks(
            root, annihilator, IntPolynomial(coeffs), digits, f"reference row p={p}"
        )
        poly_ok = checks.checks[0].passed and checks.checks[1].passed
        value_ok = checks.checks[2].passed
    return LambdaRecord(p, annihilator, root, root.value, poly_ok, value_ok)


def verify_table1(p: int, claimed_poly: IntPolynomial, claimed_value: str) -> Report:
    """Check a claimed minimal polynomial and printed value against the
    computed pipeline: exact divisibility into the fitted annihilator, a
    sign change across the certified interval, and the decimal prefix."""
    if claimed_poly.is_zero:
        raise ValueError("claimed polynomial must be nonzero")
    record = compute_lambda(p)
    return _reference_checks(
        record.root,
        record.annihilator,
        claimed_poly,
        claimed_value,
        f"reference checks p={p}",
    )


def verify_rho_consistency(p: int, tol: float = 1e-8) -> Report:
    """Cross-check the certified growth constant against power-iteration
    spectral radii of the full product matrix, the accessible restriction,
    and the minimized automaton's matrix."""
    if not 1 <= p <= 8:
        raise ValueError("rho consistency checks run for p <= 8")
    lam = compute_lambda(p).value
    report = Report(f"spectral radius consistency p={p}")
    ap = accessible_product(p)
    targets = [
        ("full-product", transition_matrix(product(p), sparse=True)),
        ("accessible", transition_matrix(ap, sparse=True)),
        ("minimized", transition_matrix(minimize(ap), sparse=True)),
    ]
    for name, matrix in targets:
        rho = spectral_radius_float(matrix, tol=min(tol / 10, 1e-10))
        report.add(name, abs(rho - lam) <= tol, f"rho={rho:.12g} lambda={lam:.12g}")
    return report
