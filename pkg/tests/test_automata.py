"""Automata tests: base recognizer, products, accessibility, claims,
minimization, and transition matrices."""

from itertools import product as iproduct

import pytest

from fibpart import numeration as nm
from fibpart.automata import (
    Dfa,
    StateClass,
    accessible,
    accessible_labels,
    accessible_product,
    berstel,
    berstel_step_matrices,
    classify_state,
    count_accepted,
    count_accepted_series,
    class_ordering,
    enumerate_accepted,
    export_dot,
    is_aperiodic,
    is_strongly_connected,
    kronecker_identity_holds,
    minimize,
    per_y_matrices,
    product,
    to_json_dict,
    transition_matrix,
    verify_block_structure,
    verify_transition_claims,
)
from fibpart.exactlin import IntMatrix

V0_EXPECTED = [[1, 0, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]]
V1_EXPECTED = [[0, 1, 0, 1], [0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]

BASE_EDGES = {
    ("a", (0, 0), "a"),
    ("a", (0, 1), "b"),
    ("a", (1, 1), "d"),
    ("b", (1, 0), "c"),
    ("c", (0, 0), "b"),
    ("c", (1, 1), "b"),
    ("c", (1, 0), "a"),
    ("d", (0, 0), "a"),
}


def test_berstel_transition_table():
    b = berstel()
    edges = {
        (b.states[i], b.symbol_bits(sym), b.states[j]) for i, sym, j in b.edges()
    }
    assert edges == BASE_EDGES
    assert b.states == ["a", "b", "c", "d"]
    assert b.initial == 0
    assert b.accepting == frozenset({0, 3})


def test_step_matrices_match_expected_counts():
    v0, v1 = berstel_step_matrices()
    assert v0.data == V0_EXPECTED
    assert v1.data == V1_EXPECTED


def test_berstel_acceptance_oracle_exhaustive():
    b = berstel()
    for ell in range(9):
        for word in iproduct(range(4), repeat=ell):
            x = [s >> 1 for s in word]
            y = [s & 1 for s in word]
            expected = nm.eval_f(x) == nm.eval_f(y) and nm.is_padded_canonical(y)
            assert b.accepts(word) == expected, (x, y)


def test_product_sizes():
    assert product(1) == berstel()
    assert product(2).n_states == 16
    assert accessible(product(2)).n_states == 10
    assert accessible_product(3).n_states == 22


def test_product_cap():
    with pytest.raises(ValueError):
        product(11)
    with pytest.raises(ValueError):
        product(0)


def test_accessible_of_base_is_identity():
    assert accessible(berstel()) == berstel()


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_accessible_product_agrees_with_generic_restriction(p):
    assert accessible(product(p)) == accessible_product(p)


@pytest.mark.parametrize("p", list(range(1, 7)))
def test_accessible_states_equal_expected_family(p):
    ap = accessible_product(p)
    assert set(ap.states) == accessible_labels(p)
    assert ap.n_states == 3 * 2**p - 2


def test_classify_state():
    assert classify_state("ab") is StateClass.ACCESSIBLE
    assert classify_state("ad") is StateClass.TRANSIENT_WITH_D
    assert classify_state("bc") is StateClass.TRANSIENT_NO_D
    with pytest.raises(ValueError):
        classify_state("xy")


def test_classification_partitions_all_labels():
    for p in (1, 2, 3):
        labels = ["".join(t) for t in iproduct("abcd", repeat=p)]
        acc = accessible_labels(p)
        for label in labels:
            kind = classify_state(label)
            if label in acc:
                assert kind is StateClass.ACCESSIBLE
            elif "d" in label:
                assert kind is StateClass.TRANSIENT_WITH_D
            else:
                assert kind is StateClass.TRANSIENT_NO_D


@pytest.mark.parametrize("p", [2, 5])
def test_transition_claims_pass(p):
    report = verify_transition_claims(p)
    assert report.passed, report.lines()
    assert len(report.checks) == 10
    assert not any(c.vacuous for c in report.checks)


def test_transition_claims_vacuous_at_p1():
    report = verify_transition_claims(1)
    assert report.passed
    vacuous = {c.name for c in report.checks if c.vacuous}
    assert vacuous == {
        "from-ab-mixed",
        "from-ac-mixed",
        "from-bd-mixed",
        "dfree-transient",
        "dstate-exits",
    }


def test_strong_connectivity():
    assert is_strongly_connected(accessible_product(2))
    assert not is_strongly_connected(product(2))
    loop = Dfa(1, ["s"], 0, {0}, [{0: 0}])
    assert is_strongly_connected(loop)


def test_aperiodicity():
    for p in range(1, 7):
        assert is_aperiodic(accessible_product(p))
    loop = Dfa(1, ["s"], 0, {0}, [{0: 0}])
    assert is_aperiodic(loop)
    two_cycle = Dfa(1, ["u", "v"], 0, {0}, [{0: 1}, {0: 0}])
    assert not is_aperiodic(two_cycle)
    with pytest.raises(ValueError):
        is_aperiodic(product(2))


@pytest.mark.parametrize("p", list(range(1, 7)))
def test_minimize_sizes(p):
    assert minimize(accessible_product(p)).n_states == 2 ** (p + 1)


def test_minimize_idempotent():
    m = minimize(accessible_product(3))
    again = minimize(m)
    assert again.n_states == m.n_states
    assert count_accepted_series(again, 12) == count_accepted_series(m, 12)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_minimize_preserves_counts(p):
    ap = accessible_product(p)
    assert count_accepted_series(minimize(ap), 25) == count_accepted_series(ap, 25)


def test_minimize_trims_dead_states():
    # state 1 accepts, state 2 is dead
    d = Dfa(1, ["u", "v", "w"], 0, {1}, [{0: 1, 1: 2}, {}, {0: 2}])
    m = minimize(d)
    assert m.n_states == 2
    assert m.accepts([0])
    assert not m.accepts([1])
    assert not m.accepts([0, 0])


def test_transition_matrix_of_base():
    v0, v1 = berstel_step_matrices()
    assert transition_matrix(berstel()) == v0 + v1
    split = per_y_matrices(berstel())
    assert split[0] == v0 and split[1] == v1


def test_transition_matrix_row_sums_bounded():
    t = transition_matrix(accessible_product(1))
    assert all(s <= 4 for s in t.row_sums())


def test_transition_matrix_ordering_validation():
    with pytest.raises(ValueError):
        transition_matrix(berstel(), ordering=[0, 0, 1, 2])


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_kronecker_identity(p):
    assert kronecker_identity_holds(p)


def test_count_accepted_series_base():
    series = count_accepted_series(accessible_product(1), 8)
    assert series == [1, 2, 3, 6, 11, 22, 43, 86, 171]


def test_count_accepted_two_tracks():
    assert count_accepted(accessible_product(2), 4) == 17
    assert count_accepted(accessible_product(2), 0) == 1
    with pytest.raises(ValueError):
        count_accepted(berstel(), -1)


def test_count_matches_enumeration():
    for p in (1, 2):
        ap = accessible_product(p)
        for ell in range(7):
            words = list(enumerate_accepted(ap, ell))
            assert len(words) == count_accepted(ap, ell)
            assert len(set(words)) == len(words)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_block_structure(p):
    report = verify_block_structure(p)
    assert report.passed, report.lines()


def test_class_ordering_partitions():
    bp = product(3)
    order = class_ordering(bp)
    assert sorted(order) == list(range(64))
    kinds = [classify_state(bp.states[i]) for i in order]
    first_dfree = kinds.index(StateClass.TRANSIENT_NO_D)
    first_dfull = kinds.index(StateClass.TRANSIENT_WITH_D)
    assert all(k is StateClass.ACCESSIBLE for k in kinds[:first_dfree])
    assert all(k is StateClass.TRANSIENT_NO_D for k in kinds[first_dfree:first_dfull])
    assert all(k is StateClass.TRANSIENT_WITH_D for k in kinds[first_dfull:])


def test_export_dot_base():
    dot = export_dot(berstel())
    node_lines = [l for l in dot.splitlines() if "[shape=" in l and "__start" not in l]
    edge_lines = [l for l in dot.splitlines() if "label=" in l and "->" in l]
    assert len(node_lines) == 4
    assert len(edge_lines) == 8
    assert dot.count("doublecircle") == 2


def test_export_dot_two_tracks():
    dot = export_dot(accessible_product(2))
    node_lines = [l for l in dot.splitlines() if "[shape=" in l and "__start" not in l]
    assert len(node_lines) == 10


def test_export_dot_degenerate():
    d = Dfa(1, ["u"], 0, set(), [{}])
    dot = export_dot(d)
    assert '"u"' in dot and "->" not in dot.replace('__start -> "u"', "")


def test_json_dump():
    payload = to_json_dict(berstel())
    assert payload["p"] == 1
    assert payload["states"] == ["a", "b", "c", "d"]
    assert payload["initial"] == 0
    assert payload["accepting"] == [0, 3]
    assert len(payload["transitions"]) == 8
    assert payload["transitions"][0] == {"from": 0, "symbol": [0, 0], "to": 0}


def test_language_check_small_products():
    # exhaustive equivalence with the defining predicate for short lengths
    for p in (2, 3):
        ap = accessible_product(p)
        for ell in range(5):
            expected = set()
            values = {}
            for bits in iproduct((0, 1), repeat=ell):
                values.setdefault(nm.eval_f(bits), []).append(bits)
            for n in range(nm.fib(ell + 1)):
                y = nm.canonical(n)
                y_bits = tuple(int(c) for c in "0" * (ell - len(y)) + y)
                for tracks in iproduct(values.get(n, []), repeat=p):
                    word = tuple(
                        ap.bits_symbol([t[i] for t in tracks] + [y_bits[i]])
                        for i in range(ell)
                    )
                    expected.add(word)
            assert set(enumerate_accepted(ap, ell)) == expected, (p, ell)
