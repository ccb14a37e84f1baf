"""Deterministic finite automata over tuple-bit alphabets.

The base 4-state Berstel recognizer accepts a pair of equal-length binary
words (x, y) exactly when both encode the same integer in the Fibonacci
numeration and y is a (possibly zero-padded) canonical representation. Its
p-fold synchronized product runs p copies on a shared y track; this module
builds those automata, verifies their transition structure, restricts to
accessible states, minimizes, and extracts exact transition-count matrices.
"""

from __future__ import annotations

import itertools
from enum import Enum
from functools import lru_cache
from math import gcd

from .exactlin import IntMatrix, SparseIntMatrix, kron_power
from .report import Report

__all__ = [
    "Dfa",
    "StateClass",
    "berstel",
    "berstel_step_matrices",
    "product",
    "accessible",
    "accessible_product",
    "classify_state",
    "accessible_labels",
    "verify_transition_claims",
    "is_strongly_connected",
    "is_aperiodic",
    "minimize",
    "transition_matrix",
    "per_y_matrices",
    "count_accepted",
    "count_accepted_series",
    "class_ordering",
    "verify_block_structure",
    "export_dot",
    "to_json_dict",
    "enumerate_accepted",
    "PRODUCT_CAP",
]

PRODUCT_CAP = 10

LETTERS = "abcd"

# the eight base transitions: (state, x bit, y bit) -> state
_BASE_TABLE = {
    ("a", 0, 0): "a",
    ("a", 0, 1): "b",
    ("a", 1, 1): "d",
    ("b", 1, 0): "c",
    ("c", 0, 0): "b",
    ("c", 1, 1): "b",
    ("c", 1, 0): "a",
    ("d", 0, 0): "a",
}


class Dfa:
    """DFA whose input symbols are (p+1)-bit tuples (x_1, ..., x_p, y).

    Symbols are packed into integers with x_1 as the most significant bit
    and y as the least significant. The transition function is partial: a
    missing entry rejects. Instances are treated as immutable once built.
    """

    __slots__ = ("p", "states", "initial", "accepting", "transitions")

    def __init__(self, p, states, initial, accepting, transitions):
        self.p = p
        self.states = list(states)
        self.initial = initial
        self.accepting = frozenset(accepting)
        self.transitions = transitions  # list of {symbol int: state index}

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_symbols(self) -> int:
        return 1 << (self.p + 1)

    @property
    def n_edges(self) -> int:
        return sum(len(t) for t in self.transitions)

    def symbol_bits(self, sym: int) -> tuple[int, ...]:
        width = self.p + 1
        return tuple((sym >> (width - 1 - i)) & 1 for i in range(width))

    def bits_symbol(self, bits) -> int:
        sym = 0
        for b in bits:
            sym = (sym << 1) | b
        return sym

    def step(self, state: int, sym: int):
        return self.transitions[state].get(sym)

    def accepts(self, word) -> bool:
        """Run a word of packed symbols (or bit tuples); reject on a missing
        transition."""
        state = self.initial
        for sym in word:
            if not isinstance(sym, int):
                sym = self.bits_symbol(sym)
            state = self.transitions[state].get(sym)
            if state is None:
                return False
        return state in self.accepting

    def edges(self):
        for i, row in enumerate(self.transitions):
            for sym in sorted(row):
                yield i, sym, row[sym]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Dfa)
            and self.p == other.p
            and self.states == other.states
            and self.initial == other.initial
            and self.accepting == other.accepting
            and self.transitions == other.transitions
        )

    def __repr__(self) -> str:
        return (
            f"Dfa(p={self.p}, states={self.n_states}, edges={self.n_edges}, "
            f"accepting={sorted(self.accepting)})"
        )


@lru_cache(maxsize=None)
def berstel() -> Dfa:
    """The 4-state pair recognizer, states ordered (a, b, c, d)."""
    index = {s: i for i, s in enumerate(LETTERS)}
    transitions = [{} for _ in LETTERS]
    for (src, x, y), dst in sorted(_BASE_TABLE.items()):
        transitions[index[src]][(x << 1) | y] = index[dst]
    return Dfa(1, list(LETTERS), index["a"], {index["a"], index["d"]}, transitions)


@lru_cache(maxsize=None)
def _letter_options():
    """For each y bit and state letter, the (x bit, destination) choices of
    the base recognizer, read off the berstel() table."""
    base = berstel()
    options = {0: {}, 1: {}}
    for letter in LETTERS:
        i = base.states.index(letter)
        for y in (0, 1):
            opts = []
            for x in (0, 1):
                dst = base.step(i, (x << 1) | y)
                if dst is not None:
                    opts.append((x, base.states[dst]))
            options[y][letter] = tuple(opts)
    return options


def _expand_state(label: str, options) -> list[tuple[int, str]]:
    """All (packed symbol, destination label) transitions out of a product
    state, in increasing symbol order."""
    p = len(label)
    out = []
    for y in (0, 1):
        per_letter = [options[y][ch] for ch in label]
        if any(not opts for opts in per_letter):
            continue
        for combo in itertools.product(*per_letter):
            sym = 0
            dest = []
            for x, dst in combo:
                sym = (sym << 1) | x
                dest.append(dst)
            out.append(((sym << 1) | y, "".join(dest)))
    out.sort()
    return out


@lru_cache(maxsize=None)
def product(p: int, cap: int = PRODUCT_CAP) -> Dfa:
    """The synchronized p-track product with all 4^p states in
    lexicographic order, initial a^p, accepting {a^p, d^p}."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if p > cap:
        raise ValueError(f"p={p} exceeds the product cap {cap}")
    if p == 1:
        return berstel()
    options = _letter_options()
    states = ["".join(t) for t in itertools.product(LETTERS, repeat=p)]
    index = {s: i for i, s in enumerate(states)}
    transitions = []
    for label in states:
        row = {}
        for sym, dest in _expand_state(label, options):
            row[sym] = index[dest]
        transitions.append(row)
    return Dfa(p, states, index["a" * p], {index["a" * p], index["d" * p]}, transitions)


def accessible(d: Dfa) -> Dfa:
    """Restriction of d to the states reachable from its initial state,
    keeping the original relative state order."""
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        i = stack.pop()
        for j in d.transitions[i].values():
            if j not in seen:
                seen.add(j)
                stack.append(j)
    kept = sorted(seen)
    remap = {old: new for new, old in enumerate(kept)}
    transitions = [
        {sym: remap[dst] for sym, dst in d.transitions[old].items()} for old in kept
    ]
    return Dfa(
        d.p,
        [d.states[old] for old in kept],
        remap[d.initial],
        {remap[s] for s in d.accepting if s in seen},
        transitions,
    )


@lru_cache(maxsize=None)
def accessible_product(p: int) -> Dfa:
    """The accessible part of the p-track product, built directly by
    breadth-first expansion (the full 4^p state set is never materialized).
    States come out sorted lexicographically."""
    if p < 1:
        raise ValueError("p must be >= 1")
    options = _letter_options()
    start = "a" * p
    seen = {start}
    frontier = [start]
    edges = {}
    while frontier:
        label = frontier.pop()
        row = _expand_state(label, options)
        edges[label] = row
        for _, dest in row:
            if dest not in seen:
                seen.add(dest)
                frontier.append(dest)
    states = sorted(seen)
    index = {s: i for i, s in enumerate(states)}
    transitions = [
        {sym: index[dest] for sym, dest in edges[label]} for label in states
    ]
    accepting = {index[start]}
    if "d" * p in index:
        accepting.add(index["d" * p])
    return Dfa(p, states, index[start], accepting, transitions)


class StateClass(Enum):
    ACCESSIBLE = "accessible"
    TRANSIENT_NO_D = "transient-d-free"
    TRANSIENT_WITH_D = "transient-with-d"


def classify_state(label: str) -> StateClass:
    """Classify a product-state label: the accessible family is
    {a,b}^p u {a,c}^p u {b,d}^p; the rest splits on whether a d occurs."""
    letters = set(label)
    if not label or not letters <= set(LETTERS):
        raise ValueError(f"not a product state label: {label!r}")
    if letters <= {"a", "b"} or letters <= {"a", "c"} or letters <= {"b", "d"}:
        return StateClass.ACCESSIBLE
    if "d" in letters:
        return StateClass.TRANSIENT_WITH_D
    return StateClass.TRANSIENT_NO_D


def accessible_labels(p: int) -> set[str]:
    """The set {a,b}^p u {a,c}^p u {b,d}^p built directly."""
    out = set()
    for pair in ("ab", "ac", "bd"):
        out.update("".join(t) for t in itertools.product(pair, repeat=p))
    return out


def _swap_bc(label: str) -> str:
    return label.translate(str.maketrans("bc", "cb"))


def _count_a(label: str) -> int:
    return label.count("a")


def _mixed(pair: str, p: int) -> list[str]:
    """{s1,s2}^p minus the two constant words (empty when p = 1)."""
    out = [
        "".join(t)
        for t in itertools.product(pair, repeat=p)
        if len(set(t)) > 1
    ]
    return out


def verify_transition_claims(p: int) -> Report:
    """Machine-check the ten structural facts about the p-track product's
    transition relation. Checks with an empty quantifier range (only at
    p = 1) are reported as vacuous passes."""
    d = product(p)
    index = {s: i for i, s in enumerate(d.states)}
    report = Report(f"transition structure of the {p}-track product")

    def outgoing(label: str) -> dict[int, str]:
        return {
            sym: d.states[dst] for sym, dst in d.transitions[index[label]].items()
        }

    def pack(xbits, y) -> int:
        sym = 0
        for b in xbits:
            sym = (sym << 1) | b
        return (sym << 1) | y

    a_p, b_p, c_p, d_p = ("a" * p, "b" * p, "c" * p, "d" * p)

    # from a^p: the all-zero loop plus one y=1 transition per x choice
    expect = {pack((0,) * p, 0): a_p}
    for xs in itertools.product((0, 1), repeat=p):
        expect[pack(xs, 1)] = "".join("d" if x else "b" for x in xs)
    report.add("from-all-a", outgoing(a_p) == expect, f"{len(expect)} transitions")

    report.add("from-all-b", outgoing(b_p) == {pack((1,) * p, 0): c_p})

    expect = {pack((0,) * p, 0): b_p, pack((1,) * p, 1): b_p, pack((1,) * p, 0): a_p}
    for xs in itertools.product((0, 1), repeat=p):
        if len(set(xs)) > 1:
            expect[pack(xs, 0)] = "".join("a" if x else "b" for x in xs)
    report.add("from-all-c", outgoing(c_p) == expect, f"{len(expect)} transitions")

    report.add("from-all-d", outgoing(d_p) == {pack((0,) * p, 0): a_p})

    def unique_route(states, rule) -> tuple[bool, bool]:
        ok = True
        for s in states:
            xs, dest = rule(s)
            if outgoing(s) != {pack(xs, 0): dest}:
                ok = False
        return ok, not states

    ok, vac = unique_route(
        _mixed("ab", p),
        lambda s: (
            tuple(1 if ch == "b" else 0 for ch in s),
            s.translate(str.maketrans("b", "c")),
        ),
    )
    report.add("from-ab-mixed", ok, "unique step into the ac family", vacuous=vac)

    ac_ok = True
    ac_states = _mixed("ac", p)
    for s in ac_states:
        expect = {}
        choices_y0 = [(((0, "a"),) if ch == "a" else ((0, "b"), (1, "a"))) for ch in s]
        for combo in itertools.product(*choices_y0):
            xs = tuple(c[0] for c in combo)
            expect[pack(xs, 0)] = "".join(c[1] for c in combo)
        choices_y1 = [(((0, "b"), (1, "d")) if ch == "a" else ((1, "b"),)) for ch in s]
        for combo in itertools.product(*choices_y1):
            xs = tuple(c[0] for c in combo)
            expect[pack(xs, 1)] = "".join(c[1] for c in combo)
        if outgoing(s) != expect:
            ac_ok = False
    report.add(
        "from-ac-mixed",
        ac_ok,
        "fans out into the ab family (y=0) and bd family (y=1)",
        vacuous=not ac_states,
    )

    ok, vac = unique_route(
        _mixed("bd", p),
        lambda s: (
            tuple(1 if ch == "b" else 0 for ch in s),
            s.translate(str.maketrans("bd", "ca")),
        ),
    )
    report.add("from-bd-mixed", ok, "unique step into the ac family", vacuous=vac)

    core = accessible_labels(p)
    closed = all(
        dest in core
        for label in core
        for dest in outgoing(label).values()
    )
    report.add("accessible-closed", closed, "no exit from the accessible family")

    dfree = [
        s
        for s in d.states
        if classify_state(s) is StateClass.TRANSIENT_NO_D
    ]
    t9_ok = True
    for s in dfree:
        swaps = 0
        for dest in outgoing(s).values():
            if dest == _swap_bc(s):
                swaps += 1
            elif classify_state(dest) is not StateClass.TRANSIENT_WITH_D and _count_a(
                dest
            ) > _count_a(s):
                pass
            else:
                t9_ok = False
        if swaps != 1:
            t9_ok = False
    report.add(
        "dfree-transient",
        t9_ok,
        "one b/c swap partner, all other steps gain a's",
        vacuous=not dfree,
    )

    dstates = [
        s
        for s in d.states
        if classify_state(s) is StateClass.TRANSIENT_WITH_D
    ]
    t10_ok = all(
        classify_state(dest) is not StateClass.TRANSIENT_WITH_D
        for s in dstates
        for dest in outgoing(s).values()
    )
    report.add(
        "dstate-exits", t10_ok, "never stays among d-containing transients",
        vacuous=not dstates,
    )
    return report


def is_strongly_connected(d: Dfa) -> bool:
    n = d.n_states
    if n <= 1:
        return True

    def bfs(adj) -> int:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen)

    fwd = [set(t.values()) for t in d.transitions]
    rev = [set() for _ in range(n)]
    for i, row in enumerate(fwd):
        for j in row:
            rev[j].add(i)
    return bfs(fwd) == n and bfs(rev) == n


def is_aperiodic(d: Dfa) -> bool:
    """True when the gcd of all directed cycle lengths is 1, computed from
    BFS level differences. Requires a strongly connected automaton."""
    if not is_strongly_connected(d):
        raise ValueError("aperiodicity is defined here for strongly connected automata")
    level = {0: 0}
    queue = [0]
    head = 0
    while head < len(queue):
        i = queue[head]
        head += 1
        for j in d.transitions[i].values():
            if j not in level:
                level[j] = level[i] + 1
                queue.append(j)
    g = 0
    for i, row in enumerate(d.transitions):
        for j in row.values():
            g = gcd(g, abs(level[i] + 1 - level[j]))
    return g == 1


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal partial DFA for the same language.

    Dead states (those that cannot reach an accepting state) are dropped
    first, so a missing transition and a transition into a dead state
    coincide; Moore partition refinement then merges indistinguishable
    states. No sink is ever added to the result.
    """
    n = d.n_states
    reach = {d.initial}
    stack = [d.initial]
    while stack:
        i = stack.pop()
        for j in d.transitions[i].values():
            if j not in reach:
                reach.add(j)
                stack.append(j)
    rev = [set() for _ in range(n)]
    for i in reach:
        for j in d.transitions[i].values():
            rev[j].add(i)
    live = set(a for a in d.accepting if a in reach)
    stack = list(live)
    while stack:
        j = stack.pop()
        for i in rev[j]:
            if i not in live:
                live.add(i)
                stack.append(i)
    if d.initial not in live:
        return Dfa(d.p, [d.states[d.initial]], 0, set(), [{}])

    kept = sorted(live)
    remap = {old: new for new, old in enumerate(kept)}
    trans = [
        {
            sym: remap[dst]
            for sym, dst in d.transitions[old].items()
            if dst in live
        }
        for old in kept
    ]
    accepting = {remap[a] for a in d.accepting if a in live}

    cls = [1 if i in accepting else 0 for i in range(len(kept))]
    while True:
        sigs = {}
        new_cls = [0] * len(kept)
        for i in range(len(kept)):
            sig = (cls[i], tuple(sorted((sym, cls[dst]) for sym, dst in trans[i].items())))
            if sig not in sigs:
                sigs[sig] = len(sigs)
            new_cls[i] = sigs[sig]
        if new_cls == cls:
            break
        cls = new_cls

    n_classes = max(cls) + 1
    rep = [None] * n_classes
    members = [[] for _ in range(n_classes)]
    for i, c in enumerate(cls):
        members[c].append(i)
        if rep[c] is None:
            rep[c] = i
    order = sorted(range(n_classes), key=lambda c: rep[c])
    new_id = {c: k for k, c in enumerate(order)}
    states = [min(d.states[kept[i]] for i in members[c]) for c in order]
    transitions = [
        {sym: new_id[cls[dst]] for sym, dst in trans[rep[c]].items()} for c in order
    ]
    return Dfa(
        d.p,
        states,
        new_id[cls[remap[d.initial]]],
        {new_id[cls[i]] for i in accepting},
        transitions,
    )


def transition_matrix(d: Dfa, ordering=None, sparse: bool | None = None):
    """Matrix whose (i, j) entry counts the symbols carrying state i to
    state j, under the given state ordering (a permutation of indices)."""
    n = d.n_states
    if ordering is None:
        ordering = range(n)
    ordering = list(ordering)
    if sorted(ordering) != list(range(n)):
        raise ValueError("ordering must be a permutation of the state indices")
    pos = {old: new for new, old in enumerate(ordering)}
    if sparse is None:
        sparse = n > 512
    if sparse:
        entries = {}
        for i, row in enumerate(d.transitions):
            pi = pos[i]
            for dst in row.values():
                key = (pi, pos[dst])
                entries[key] = entries.get(key, 0) + 1
        return SparseIntMatrix(n, n, entries)
    data = [[0] * n for _ in range(n)]
    for i, row in enumerate(d.transitions):
        pi = pos[i]
        for dst in row.values():
            data[pi][pos[dst]] += 1
    return IntMatrix(data)


def per_y_matrices(d: Dfa) -> tuple[IntMatrix, IntMatrix]:
    """Transition-count matrices split by the y bit (the lowest symbol bit)."""
    n = d.n_states
    mats = [[[0] * n for _ in range(n)], [[0] * n for _ in range(n)]]
    for i, row in enumerate(d.transitions):
        for sym, dst in row.items():
            mats[sym & 1][i][dst] += 1
    return IntMatrix(mats[0]), IntMatrix(mats[1])


@lru_cache(maxsize=None)
def berstel_step_matrices() -> tuple[IntMatrix, IntMatrix]:
    """The base recognizer's per-y count matrices (4x4, 0/1 entries)."""
    return per_y_matrices(berstel())


def _collapsed_counts(d: Dfa) -> list[list[tuple[int, int]]]:
    out = []
    for row in d.transitions:
        counts = {}
        for dst in row.values():
            counts[dst] = counts.get(dst, 0) + 1
        out.append(sorted(counts.items()))
    return out


def count_accepted_series(d: Dfa, ell_max: int) -> list[int]:
    """Exact numbers of accepted words of every length 0..ell_max, via
    iterated vector-matrix products (the matrix power is never formed)."""
    counts = _collapsed_counts(d)
    vec = [0] * d.n_states
    vec[d.initial] = 1
    series = [sum(vec[i] for i in d.accepting)]
    for _ in range(ell_max):
        nxt = [0] * d.n_states
        for i, v in enumerate(vec):
            if v:
                for dst, mult in counts[i]:
                    nxt[dst] += v * mult
        vec = nxt
        series.append(sum(vec[i] for i in d.accepting))
    return series


def count_accepted(d: Dfa, ell: int) -> int:
    """Exact number of accepted words of length ell."""
    if ell < 0:
        raise ValueError("word length must be nonnegative")
    return count_accepted_series(d, ell)[ell]


def enumerate_accepted(d: Dfa, ell: int):
    """Yield every accepted word of length ell as a tuple of packed symbols,
    in lexicographic symbol order."""

    def walk(state: int, depth: int, prefix: tuple):
        if depth == ell:
            if state in d.accepting:
                yield prefix
            return
        for sym in sorted(d.transitions[state]):
            yield from walk(d.transitions[state][sym], depth + 1, prefix + (sym,))

    yield from walk(d.initial, 0, ())


def class_ordering(d: Dfa) -> list[int]:
    """State ordering with the accessible family first (lexicographic),
    then the d-free transient states sorted by weakly decreasing count of
    a's with each b/c-swap pair adjacent (the member whose first non-a
    letter is b comes first), then the d-containing transients."""
    acc, dfree, dfull = [], [], []
    for i, label in enumerate(d.states):
        kind = classify_state(label)
        if kind is StateClass.ACCESSIBLE:
            acc.append((label, i))
        elif kind is StateClass.TRANSIENT_NO_D:
            dfree.append((label, i))
        else:
            dfull.append((label, i))
    acc.sort()
    dfull.sort()

    index = {label: i for label, i in dfree}
    by_count = {}
    for label, i in sorted(dfree):
        by_count.setdefault(_count_a(label), []).append(label)
    middle = []
    for count in sorted(by_count, reverse=True):
        seen = set()
        for label in by_count[count]:
            if label in seen:
                continue
            partner = _swap_bc(label)
            seen.update((label, partner))
            # the lex-smaller member has letter b at the first non-a slot
            middle.append((label, index[label]))
            middle.append((partner, index[partner]))
    return [i for _, i in acc] + [i for _, i in middle] + [i for _, i in dfull]


def verify_block_structure(p: int) -> Report:
    """Check the block-triangular shape of the full product's transition
    matrix under class_ordering: the accessible block reproduces the
    accessible automaton's matrix, everything above the diagonal blocks is
    zero, the d-free transient diagonal consists of 2x2 swap blocks, and
    the d-containing corner is zero."""
    bp = product(p)
    ordering = class_ordering(bp)
    u = transition_matrix(bp, ordering=ordering, sparse=True)
    labels = [bp.states[i] for i in ordering]
    n1 = sum(1 for s in labels if classify_state(s) is StateClass.ACCESSIBLE)
    n2 = sum(1 for s in labels if classify_state(s) is StateClass.TRANSIENT_NO_D)
    n3 = len(labels) - n1 - n2
    report = Report(f"block structure of the ordered {p}-track product matrix")

    top_zero = all(
        not (i < n1 and j >= n1) for (i, j) in u.entries
    )
    report.add("accessible-rows-closed", top_zero, "zero blocks right of the core")

    mid_zero = all(
        not (n1 <= i < n1 + n2 and j >= n1 + n2) for (i, j) in u.entries
    )
    report.add(
        "dfree-rows-triangular", mid_zero, "zero block right of the swap band",
        vacuous=n2 == 0,
    )

    corner_zero = all(
        not (i >= n1 + n2 and j >= n1 + n2) for (i, j) in u.entries
    )
    report.add(
        "dstate-corner-zero", corner_zero, "d-containing corner is all zero",
        vacuous=n3 == 0,
    )

    band_ok = True
    for k in range(n2 // 2):
        r = n1 + 2 * k
        block = [
            [u.entries.get((r + di, r + dj), 0) for dj in (0, 1)] for di in (0, 1)
        ]
        if block != [[0, 1], [1, 0]]:
            band_ok = False
    for (i, j) in u.entries:
        if n1 <= i < n1 + n2 and n1 <= j < n1 + n2 and (j - n1) // 2 > (i - n1) // 2:
            band_ok = False
    report.add(
        "swap-band-blocks", band_ok, "2x2 [[0,1],[1,0]] diagonal, lower triangular",
        vacuous=n2 == 0,
    )

    counts_ok = all(
        _count_a(labels[n1 + k]) >= _count_a(labels[n1 + k + 1])
        for k in range(n2 - 1)
    )
    report.add(
        "dfree-acount-monotone", counts_ok, "a-counts weakly decreasing",
        vacuous=n2 == 0,
    )

    ap = accessible_product(p)
    t = transition_matrix(ap, sparse=True)
    corner = {
        (i, j): v for (i, j), v in u.entries.items() if i < n1 and j < n1
    }
    report.add(
        "core-matches-accessible",
        labels[:n1] == ap.states and corner == t.entries,
        "leading block equals the accessible automaton's matrix",
    )
    return report


def export_dot(d: Dfa) -> str:
    """GraphViz DOT text, one edge per (symbol, transition), deterministic
    ordering, accepting states double-circled."""
    lines = ["digraph dfa {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for i, label in enumerate(d.states):
        shape = "doublecircle" if i in d.accepting else "circle"
        lines.append(f'  "{label}" [shape={shape}];')
    lines.append(f'  __start -> "{d.states[d.initial]}";')
    for i, sym, j in d.edges():
        bits = "".join(str(b) for b in d.symbol_bits(sym))
        lines.append(f'  "{d.states[i]}" -> "{d.states[j]}" [label="{bits}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(d: Dfa) -> dict:
    """JSON-ready dump: states, initial, accepting, and transitions with
    symbols as explicit bit lists, all in stable order."""
    return {
        "p": d.p,
        "states": list(d.states),
        "initial": d.initial,
        "accepting": sorted(d.accepting),
        "transitions": [
            {"from": i, "symbol": list(d.symbol_bits(sym)), "to": j}
            for i, sym, j in d.edges()
        ],
    }


def kronecker_identity_holds(p: int) -> bool:
    """Whether the lexicographic product matrix equals the sum of the p-th
    Kronecker powers of the base per-y matrices (exact comparison)."""
    v0, v1 = berstel_step_matrices()
    lhs = transition_matrix(product(p), sparse=True)
    if isinstance(lhs, IntMatrix):
        lhs = lhs.to_sparse()
    rhs = kron_power(v0, p, sparse=True) + kron_power(v1, p, sparse=True)
    return lhs == rhs
