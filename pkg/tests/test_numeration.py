"""Numeration tests: word values, canonical representations, and the two
independent partition-counting routes."""

import itertools

import pytest

from fibpart import numeration as nm


def brute_force_count(n: int) -> int:
    """Independent oracle: enumerate every subset of Fibonacci numbers."""
    fibs = nm.fib_upto(n)
    total = 0
    for r in range(len(fibs) + 1):
        for combo in itertools.combinations(fibs, r):
            if sum(combo) == n:
                total += 1
    return total


def canonical_words_upto(max_len: int):
    """All canonical words of length <= max_len, generated directly from
    the definition (leading 1, no consecutive 1s), plus the empty word."""
    yield ""
    for length in range(1, max_len + 1):
        for tail in itertools.product("01", repeat=length - 1):
            word = "1" + "".join(tail)
            if "11" not in word:
                yield word


def test_fib_values():
    assert nm.fib(1) == 1
    assert nm.fib(2) == 2
    assert nm.fib(10) == 89
    assert [nm.fib(i) for i in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]


def test_fib_rejects_zero():
    with pytest.raises(ValueError):
        nm.fib(0)


def test_fib_upto():
    assert nm.fib_upto(10) == [1, 2, 3, 5, 8]
    assert nm.fib_upto(0) == []


def test_cutoff_index():
    assert nm.cutoff_index(1) == 1
    assert nm.cutoff_index(10) == 5  # f_5 = 8 <= 10 < 13 = f_6
    for n in range(1, 500):
        ell = nm.cutoff_index(n)
        assert nm.fib(ell) <= n < nm.fib(ell + 1)


def test_eval_f():
    assert nm.eval_f("") == 0
    assert nm.eval_f("10010") == 10
    # x_3 f_2 + x_4 f_1 = 2 + 1
    assert nm.eval_f("0011") == 3
    assert nm.eval_f([1, 0, 0, 1, 0]) == 10


def test_eval_f_rejects_non_binary():
    with pytest.raises(ValueError):
        nm.eval_f("102")


def test_canonical_examples():
    assert nm.canonical(0) == ""
    assert nm.canonical(10) == "10010"
    assert nm.canonical(4) == "101"


def test_canonical_round_trip_and_validity():
    for n in range(5000):
        word = nm.canonical(n)
        assert nm.eval_f(word) == n
        assert nm.is_canonical(word)
        assert "11" not in word
        assert word == "" or word[0] == "1"


def test_canonical_uniqueness_exhaustive():
    # eval_f is injective on canonical words of length <= 20, and the greedy
    # construction returns exactly the canonical word of each value
    seen = {}
    for word in canonical_words_upto(20):
        value = nm.eval_f(word)
        assert value not in seen, (word, seen[value])
        seen[value] = word
    for value, word in seen.items():
        assert nm.canonical(value) == word
    # every value below f_21 is covered
    assert set(seen) == set(range(nm.fib(21)))


def test_padded_canonical_predicate():
    assert nm.is_padded_canonical("")
    assert nm.is_padded_canonical("000")
    assert nm.is_padded_canonical("00101")
    assert not nm.is_padded_canonical("0110")
    assert nm.is_canonical("101")
    assert not nm.is_canonical("0101")
    assert not nm.is_canonical("110")


def test_count_partitions_examples():
    assert nm.count_partitions(0) == 1
    assert nm.count_partitions(10) == 2
    assert nm.count_partitions(8) == 3


def test_count_partitions_matches_brute_force():
    for n in range(301):
        assert nm.count_partitions(n) == brute_force_count(n), n


def test_count_partitions_positive():
    table = nm.partition_count_table(20_000)
    assert int(table.min()) >= 1


def test_transfer_examples():
    assert nm.count_partitions_transfer(0) == 1
    assert nm.count_partitions_transfer(10) == 2
    assert nm.count_partitions_transfer(20) == 1


def test_transfer_agrees_with_dp():
    dp = nm.partition_count_table(20_000)
    tr = nm.transfer_count_table(20_000)
    assert (dp == tr).all()
    for n in (0, 1, 7, 89, 144, 9999):
        assert nm.count_partitions_transfer(n) == int(dp[n])


def test_rejects_negative_inputs():
    with pytest.raises(ValueError):
        nm.count_partitions(-1)
    with pytest.raises(ValueError):
        nm.canonical(-2)
    with pytest.raises(ValueError):
        nm.count_partitions_transfer(-1)
