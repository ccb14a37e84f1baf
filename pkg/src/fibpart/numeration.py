"""Fibonacci numeration and partition counting.

Uses the increasing Fibonacci indexing f_1 = 1, f_2 = 2, f_{n+2} =
f_{n+1} + f_n. A binary word x_1 ... x_l (most significant digit first)
has the value sum of x_i * f_{l-i+1}; r(n) counts the ways to write n as a
sum of distinct Fibonacci numbers. Two independent computations of r(n)
are provided: a subset-sum dynamic program and a transfer-matrix product
along the canonical representation.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .automata import berstel_step_matrices

__all__ = [
    "fib",
    "fib_upto",
    "cutoff_index",
    "eval_f",
    "canonical",
    "is_canonical",
    "is_padded_canonical",
    "count_partitions",
    "partition_count_table",
    "count_partitions_transfer",
    "transfer_count_table",
]

_FIBS = [1, 2]  # f_1, f_2; grown on demand


def fib(n: int) -> int:
    """f_n under the shifted indexing f_1 = 1, f_2 = 2."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    while len(_FIBS) < n:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[n - 1]


def fib_upto(limit: int) -> list[int]:
    """All Fibonacci numbers <= limit, ascending."""
    out = []
    i = 1
    while fib(i) <= limit:
        out.append(fib(i))
        i += 1
    return out


def cutoff_index(n: int) -> int:
    """The unique index l >= 1 with f_l <= n < f_{l+1}, for n >= 1."""
    if n < 1:
        raise ValueError("cutoff_index needs n >= 1")
    ell = 1
    while fib(ell + 1) <= n:
        ell += 1
    return ell


def _bits(word: str | Sequence[int] | Iterable[int]) -> list[int]:
    if isinstance(word, str):
        if any(ch not in "01" for ch in word):
            raise ValueError(f"not a binary word: {word!r}")
        return [ord(ch) - 48 for ch in word]
    bits = [int(b) for b in word]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0 or 1")
    return bits


def eval_f(word) -> int:
    """Value of a binary word, most significant Fibonacci digit first; the
    empty word evaluates to 0."""
    bits = _bits(word)
    ell = len(bits)
    return sum(fib(ell - i) for i, b in enumerate(bits) if b)


def canonical(n: int) -> str:
    """Canonical (greedy, nonconsecutive) representation of n as a word
    with no leading zero; the empty word for n = 0."""
    if n < 0:
        raise ValueError("canonical representation needs n >= 0")
    if n == 0:
        return ""
    fibs = fib_upto(n)
    ell = len(fibs)
    digits = ["0"] * ell
    rest = n
    i = ell - 1
    while rest:
        if fibs[i] <= rest:
            digits[ell - 1 - i] = "1"
            rest -= fibs[i]
        i -= 1
    return "".join(digits)


def is_canonical(word) -> bool:
    """Membership in the canonical set: no two consecutive ones and no
    leading zero (the empty word qualifies)."""
    if not isinstance(word, str):
        word = "".join(str(b) for b in _bits(word))
    if word == "":
        return True
    return word[0] == "1" and "11" not in word


def is_padded_canonical(word) -> bool:
    """Membership in the zero-padded canonical set, which is exactly the
    words with no two consecutive ones."""
    if not isinstance(word, str):
        word = "".join(str(b) for b in _bits(word))
    return "11" not in word


# ---------------------------------------------------------------------------
# subset-sum dynamic program

_INT64_HEADROOM = 1 << 62

_dp_table = np.ones(1, dtype=np.int64)


def partition_count_table(n_max: int) -> np.ndarray:
    """r(0..n_max) as an int64 array.

    The 0/1 subset DP runs one vectorized pass per Fibonacci number; after
    each pass the table is checked to sit below 2^62, which certifies that
    no intermediate addition overflowed (values only grow).
    """
    global _dp_table
    if n_max < 0:
        raise ValueError("table size must be nonnegative")
    if n_max >= len(_dp_table):
        size = max(n_max + 1, 2 * len(_dp_table))
        dp = np.zeros(size, dtype=np.int64)
        dp[0] = 1
        for f in fib_upto(size - 1):
            dp[f:] += dp[:-f].copy()
            if int(dp.max()) >= _INT64_HEADROOM or int(dp.min()) < 0:
                raise OverflowError("partition counts exceeded the int64 guard")
        dp.setflags(write=False)
        _dp_table = dp
    return _dp_table[: n_max + 1]


def count_partitions(n: int) -> int:
    """r(n): the number of subsets of distinct Fibonacci numbers summing
    to n (at least 1 for every n >= 0)."""
    if n < 0:
        raise ValueError("count_partitions needs n >= 0")
    return int(partition_count_table(n)[n])


# ---------------------------------------------------------------------------
# transfer-matrix route

def _step_matrices_int() -> tuple[list[list[int]], list[list[int]]]:
    v0, v1 = berstel_step_matrices()
    return v0.data, v1.data


def count_partitions_transfer(n: int) -> int:
    """r(n) recomputed independently: fix the second track of the pair
    recognizer to the canonical word of n and count the matching first
    tracks by an exact product of per-digit count matrices."""
    if n < 0:
        raise ValueError("count_partitions_transfer needs n >= 0")
    v0, v1 = _step_matrices_int()
    vec = [1, 0, 0, 0]
    for ch in canonical(n):
        m = v1 if ch == "1" else v0
        vec = [
            sum(vec[i] * m[i][j] for i in range(4) if vec[i]) for j in range(4)
        ]
    return vec[0] + vec[3]


def transfer_count_table(n_max: int) -> np.ndarray:
    """r(0..n_max) by the transfer-matrix route, batched over all n of the
    same representation length (int64 with an overflow guard)."""
    if n_max < 0:
        raise ValueError("table size must be nonnegative")
    v0, v1 = _step_matrices_int()
    m0 = np.array(v0, dtype=np.int64)
    m1 = np.array(v1, dtype=np.int64)
    out = np.zeros(n_max + 1, dtype=np.int64)
    out[0] = 1  # empty representation
    by_length: dict[int, list[tuple[int, str]]] = {}
    for n in range(1, n_max + 1):
        word = canonical(n)
        by_length.setdefault(len(word), []).append((n, word))
    for length, group in by_length.items():
        ns = np.array([n for n, _ in group], dtype=np.int64)
        bits = np.array(
            [[ch == "1" for ch in word] for _, word in group], dtype=bool
        )
        vec = np.zeros((len(group), 4), dtype=np.int64)
        vec[:, 0] = 1
        for j in range(length):
            ones = bits[:, j][:, None]
            vec = np.where(ones, vec @ m1, vec @ m0)
            if int(vec.max()) >= _INT64_HEADROOM or int(vec.min()) < 0:
                raise OverflowError("transfer counts exceeded the int64 guard")
        out[ns] = vec[:, 0] + vec[:, 3]
    return out
