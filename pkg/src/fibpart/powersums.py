"""Power sums of the partition counts.

S^(p)(N) is the sum of r(n)^p over n < N. Arbitrary N goes through the
exact partition table; Fibonacci cutoffs N = f_{l+1} coincide with the
accepted-word counts of the accessible p-track product, which is the fast
exact route used for long series and scaling ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .automata import accessible_product, count_accepted, count_accepted_series
from .numeration import cutoff_index, fib, partition_count_table
from .report import Report
from .spectral import compute_lambda

__all__ = [
    "GOLDEN_RATIO",
    "PowerSumSeries",
    "power_sum_direct",
    "power_sum_automaton",
    "squeeze_check",
    "scaling_series",
    "DIRECT_SUM_CAP",
]

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2

DIRECT_SUM_CAP = 10**7


@dataclass(frozen=True)
class PowerSumSeries:
    """Exact power sums at Fibonacci cutoffs with scaling ratios.

    ratios[i] is S^(p)(N_i) / N_i^(log(lambda_p)/log(phi)) as a float; the
    exponent uses the certified growth constant's midpoint.
    """

    p: int
    cutoffs: list[int]
    sums: list[int]
    ratios: list[float]

    def rows(self):
        for ell, (n, s, r) in enumerate(zip(self.cutoffs, self.sums, self.ratios)):
            yield ell, n, s, r


def power_sum_direct(p: int, n_limit: int, cap: int = DIRECT_SUM_CAP) -> int:
    """Exact sum of r(n)^p over n < n_limit, from the partition table."""
    if p < 1:
        raise ValueError("the exponent p must be >= 1")
    if n_limit < 0:
        raise ValueError("the summation limit must be nonnegative")
    if n_limit > cap:
        raise ValueError(f"direct power sums are capped at N={cap}")
    if n_limit == 0:
        return 0
    table = partition_count_table(n_limit - 1)
    if p == 1:
        return int(table.sum(dtype=object))
    return sum(int(v) ** p for v in table)


def power_sum_automaton(p: int, ell: int) -> int:
    """S^(p)(f_{l+1}) as the number of accepted length-l words of the
    accessible p-track product."""
    if ell < 0:
        raise ValueError("word length must be nonnegative")
    return count_accepted(accessible_product(p), ell)


def squeeze_check(p: int, n: int) -> Report:
    """Locate f_l <= n < f_{l+1} and verify the exact sandwich
    S^(p)(f_l) <= S^(p)(n) < S^(p)(f_{l+1})."""
    if n < 1:
        raise ValueError("squeeze check needs n >= 1")
    ell = cutoff_index(n)
    lo, hi = fib(ell), fib(ell + 1)
    s_lo = power_sum_direct(p, lo)
    s_n = power_sum_direct(p, n)
    s_hi = power_sum_direct(p, hi)
    report = Report(f"power-sum squeeze p={p} n={n}")
    report.add("bracket", lo <= n < hi, f"f_{ell}={lo} <= {n} < {hi}=f_{ell + 1}")
    report.add("lower", s_lo <= s_n, f"{s_lo} <= {s_n}")
    report.add("upper", s_n < s_hi, f"{s_n} < {s_hi}")
    return report


def scaling_series(p: int, ell_max: int, lambda_value: float | None = None) -> PowerSumSeries:
    """Exact sums at cutoffs f_{l+1} for l = 0..ell_max together with the
    normalized ratios S / N^(log(lambda_p)/log(phi))."""
    if p > 8:
        raise ValueError("scaling series are provided for p <= 8")
    if ell_max < 0:
        raise ValueError("ell_max must be nonnegative")
    if lambda_value is None:
        lambda_value = compute_lambda(p).value
    alpha = math.log(lambda_value) / math.log(GOLDEN_RATIO)
    sums = count_accepted_series(accessible_product(p), ell_max)
    cutoffs = [fib(ell + 1) for ell in range(ell_max + 1)]
    ratios = [
        math.exp(math.log(s) - alpha * math.log(n)) for s, n in zip(sums, cutoffs)
    ]
    return PowerSumSeries(p, cutoffs, sums, ratios)
