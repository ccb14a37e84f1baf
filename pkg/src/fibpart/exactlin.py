"""Exact integer linear algebra and polynomial machinery.

Dense and sparse arbitrary-precision integer matrices, Kronecker products,
minimal linear-recurrence fitting, characteristic polynomials, Sturm-chain
root counting, certified real-root isolation, and floating spectral helpers
(power iteration, closed-form 2x2 spectral norm).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

__all__ = [
    "IntMatrix",
    "SparseIntMatrix",
    "IntPolynomial",
    "CertifiedRoot",
    "InsufficientDataError",
    "NoRealRootError",
    "ConvergenceError",
    "kron",
    "kron_power",
    "mat_vec",
    "vec_mat",
    "fit_annihilator",
    "char_poly",
    "poly_divides",
    "real_root_count",
    "greatest_real_root",
    "spectral_radius_float",
    "spectral_norm_2x2",
]

CHAR_POLY_DIM_CAP = 64


class InsufficientDataError(ValueError):
    """Sequence too short to fit a recurrence of the requested order."""


class NoRealRootError(ValueError):
    """Polynomial has no real root."""


class ConvergenceError(RuntimeError):
    """Power iteration hit its cap; carries the best estimate so far."""

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


# ---------------------------------------------------------------------------
# matrices


class IntMatrix:
    """Dense matrix of exact Python integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [list(row) for row in data]
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("matrix rows must have equal length")
        self.rows = len(data)
        self.cols = width
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.data!r})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        return IntMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        bt = list(zip(*other.data))
        return IntMatrix(
            [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in self.data]
        )

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum(self.data[i][i] for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.data)))

    def nnz(self) -> int:
        return sum(1 for row in self.data for v in row if v)

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.data]

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        out = []
        for ra in self.data:
            for rb in other.data:
                out.append([a * b for a in ra for b in rb])
        return IntMatrix(out)

    def mat_vec(self, v) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in mat_vec")
        return [sum(a * x for a, x in zip(row, v)) for row in self.data]

    def vec_mat(self, v) -> list[int]:
        if len(v) != self.rows:
            raise ValueError("dimension mismatch in vec_mat")
        out = [0] * self.cols
        for vi, row in zip(v, self.data):
            if vi:
                for j, a in enumerate(row):
                    if a:
                        out[j] += vi * a
        return out

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.data, dtype=dtype)

    def to_sparse(self) -> "SparseIntMatrix":
        entries = {}
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = v
        return SparseIntMatrix(self.rows, self.cols, entries)


class SparseIntMatrix:
    """Sparse exact integer matrix keyed by (row, col)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict):
        self.rows = rows
        self.cols = cols
        self.entries = {k: v for k, v in entries.items() if v}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseIntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def nnz(self) -> int:
        return len(self.entries)

    def __add__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return SparseIntMatrix(self.rows, self.cols, out)

    def kron(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        out = {}
        oc, orr = other.cols, other.rows
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * orr + k, j * oc + l)] = a * b
        return SparseIntMatrix(self.rows * orr, self.cols * oc, out)

    def vec_mat(self, v) -> list[int]:
        if len(v) != self.rows:
            raise ValueError("dimension mismatch in vec_mat")
        out = [0] * self.cols
        for (i, j), a in self.entries.items():
            vi = v[i]
            if vi:
                out[j] += vi * a
        return out

    def mat_vec(self, v) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in mat_vec")
        out = [0] * self.rows
        for (i, j), a in self.entries.items():
            vj = v[j]
            if vj:
                out[i] += a * vj
        return out

    def to_dense(self, cell_cap: int = 1 << 22) -> IntMatrix:
        if self.rows * self.cols > cell_cap:
            raise ValueError("matrix too large to densify")
        data = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            data[i][j] = v
        return IntMatrix(data)

    def to_csr(self, dtype=np.float64) -> sp.csr_matrix:
        if not self.entries:
            return sp.csr_matrix((self.rows, self.cols), dtype=dtype)
        keys = sorted(self.entries)
        rows = np.array([k[0] for k in keys], dtype=np.int64)
        cols = np.array([k[1] for k in keys], dtype=np.int64)
        vals = np.array([self.entries[k] for k in keys], dtype=dtype)
        return sp.csr_matrix((vals, (rows, cols)), shape=(self.rows, self.cols))


def kron(a, b):
    """Kronecker product; dimensions multiply."""
    if isinstance(a, SparseIntMatrix) or isinstance(b, SparseIntMatrix):
        a = a if isinstance(a, SparseIntMatrix) else a.to_sparse()
        b = b if isinstance(b, SparseIntMatrix) else b.to_sparse()
        return a.kron(b)
    return a.kron(b)


def kron_power(m, p: int, sparse: bool | None = None):
    """p-fold Kronecker power of m. Switches to the sparse carrier once the
    result side length exceeds 64 unless forced."""
    if p < 1:
        raise ValueError("Kronecker power needs p >= 1")
    dim = m.rows
    if sparse is None:
        sparse = dim**p > 64
    cur = m.to_sparse() if sparse and isinstance(m, IntMatrix) else m
    base = cur
    for _ in range(p - 1):
        cur = kron(cur, base)
    return cur


def mat_vec(m, v) -> list[int]:
    """Exact matrix-vector product (column vector on the right)."""
    return m.mat_vec(v)


def vec_mat(v, m) -> list[int]:
    """Exact row-vector times matrix."""
    return m.vec_mat(v)


# ---------------------------------------------------------------------------
# polynomials

_SUPPORTED_NUMERIC = (int, Fraction)


class IntPolynomial:
    """Integer polynomial, coefficients stored ascending by degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = "X" if mag == 1 else f"{mag}*X"
            else:
                term = f"X^{k}" if mag == 1 else f"{mag}*X^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def evaluate(self, x):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and normalize the leading sign to +."""
        if self.is_zero:
            return self
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        sign = 1 if self.coeffs[-1] > 0 else -1
        return IntPolynomial([sign * c // g for c in self.coeffs])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def _frac_coeffs(poly: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in poly.coeffs]


def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Euclidean division of Fraction coefficient lists (ascending)."""
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _trim(a):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return _trim(q), a


def _primitive_int(cs: list[Fraction]) -> list[int]:
    """Scale a Fraction coefficient list to a primitive integer list with a
    positive leading coefficient."""
    cs = _trim(list(cs))
    if not cs:
        return []
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    sign = 1 if ints[-1] > 0 else -1
    return [sign * c // g for c in ints]


def poly_divides(d: IntPolynomial, f: IntPolynomial) -> bool:
    """Exact divisibility test over the rationals."""
    if d.is_zero:
        raise ValueError("division by the zero polynomial")
    if f.is_zero:
        return True
    if f.degree < d.degree:
        return False
    _, rem = _poly_divmod(_frac_coeffs(f), _frac_coeffs(d))
    return not rem


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """Primitive squarefree part of f (same real roots, all simple)."""
    if f.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    fa = _frac_coeffs(f)
    g = _poly_gcd(fa, _frac_coeffs(f.derivative()))
    if len(g) <= 1:
        return f.primitive()
    q, _ = _poly_divmod(fa, g)
    return IntPolynomial(_primitive_int(q))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Exact monic characteristic polynomial by the Faddeev-LeVerrier
    recurrence; every division along the way is exact in the integers."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    if n > CHAR_POLY_DIM_CAP:
        raise ValueError(f"char_poly limited to dimension {CHAR_POLY_DIM_CAP}")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = IntMatrix.zeros(n, n)
    for k in range(1, n + 1):
        ck = coeffs[n - k + 1]
        step = IntMatrix(
            [
                [mk.data[i][j] + (ck if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
        )
        prod = m @ step
        tr = prod.trace()
        assert tr % k == 0
        coeffs[n - k] = -tr // k
        mk = prod
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# linear recurrence fitting


def _berlekamp_massey(seq: list[Fraction]):
    """Shortest linear recurrence over Q generating the whole sequence.

    Returns (L, conn) where conn = [1, c1, ..., cL] satisfies
    s[n] + c1*s[n-1] + ... + cL*s[n-L] = 0 for all n >= L.
    """
    conn = [Fraction(1)]
    prev = [Fraction(1)]
    length = 0
    gap = 1
    prev_disc = Fraction(1)
    for n, sn in enumerate(seq):
        disc = sn
        for i in range(1, length + 1):
            if i < len(conn) and conn[i]:
                disc += conn[i] * seq[n - i]
        if disc == 0:
            gap += 1
            continue
        scale = disc / prev_disc
        update = conn[:]
        need = gap + len(prev)
        if len(update) < need:
            update += [Fraction(0)] * (need - len(update))
        for i, c in enumerate(prev):
            update[gap + i] -= scale * c
        if 2 * length <= n:
            prev = conn
            length = n + 1 - length
            prev_disc = disc
            gap = 1
        else:
            gap += 1
        conn = update
    conn = conn[: length + 1] + [Fraction(0)] * (length + 1 - len(conn))
    return length, conn


def fit_annihilator(seq, order_cap: int = 64) -> IntPolynomial:
    """Minimal-order integer recurrence annihilating the sequence.

    The result is the characteristic polynomial of the recurrence, cleared
    to primitive integer form with a positive leading coefficient. Returns
    the zero polynomial when no recurrence of order <= (len(seq) - 4) / 2
    (and <= order_cap) fits. Raises InsufficientDataError when the sequence
    cannot support even an order-1 fit.
    """
    values = [Fraction(v) for v in seq]
    max_order = min(order_cap, (len(values) - 4) // 2)
    if max_order < 1:
        raise InsufficientDataError(
            f"need at least 6 terms to fit a recurrence, got {len(values)}"
        )
    length, conn = _berlekamp_massey(values)
    if length > max_order:
        return IntPolynomial()
    ascending = list(reversed(conn))
    for start in range(len(values) - length):
        acc = Fraction(0)
        for j, c in enumerate(ascending):
            acc += c * values[start + j]
        if acc != 0:
            return IntPolynomial()
    return IntPolynomial(_primitive_int(ascending))


# ---------------------------------------------------------------------------
# Sturm chains and certified roots


def _sturm_chain(poly: IntPolynomial) -> list[IntPolynomial]:
    chain = [poly, poly.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        _, rem = _poly_divmod(_frac_coeffs(chain[-2]), _frac_coeffs(chain[-1]))
        if not rem:
            break
        neg = IntPolynomial(_primitive_int(rem))
        # the remainder must keep its sign pattern: primitive_int normalizes
        # the leading sign, so reapply the true sign of -rem
        true_lead = -rem[-1]
        if (true_lead > 0) != (neg.coeffs[-1] > 0):
            neg = IntPolynomial([-c for c in neg.coeffs])
        chain.append(neg)
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _variations(chain: list[IntPolynomial], x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = poly.evaluate(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(f: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of f in the half-open interval (lo, hi]."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    g = squarefree_part(f)
    if g.degree < 1:
        return 0
    chain = _sturm_chain(g)
    return _variations(chain, Fraction(lo)) - _variations(chain, Fraction(hi))


def _cauchy_bound(f: IntPolynomial) -> Fraction:
    lead = abs(f.coeffs[-1])
    top = max((abs(c) for c in f.coeffs[:-1]), default=0)
    return 1 + Fraction(top, lead)


@dataclass(frozen=True)
class CertifiedRoot:
    """A real algebraic number: squarefree integer polynomial plus an
    isolating rational interval with strictly opposite endpoint signs."""

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def value(self) -> float:
        return float(self.midpoint)

    def refine(self, precision) -> "CertifiedRoot":
        """Shrink the isolating interval to the requested width by sign
        bisection; the enclosed root does not move."""
        precision = Fraction(precision)
        if precision <= 0:
            raise ValueError("precision must be positive")
        lo, hi = self.lo, self.hi
        sign_lo = 1 if self.poly.evaluate(lo) > 0 else -1
        while hi - lo > precision:
            mid = (lo + hi) / 2
            v = self.poly.evaluate(mid)
            if v == 0:
                return _interval_around_exact_root(self.poly, mid, precision)
            if (1 if v > 0 else -1) == sign_lo:
                lo = mid
            else:
                hi = mid
        return CertifiedRoot(self.poly, lo, hi)

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
        }


def _interval_around_exact_root(g: IntPolynomial, root: Fraction, precision: Fraction) -> CertifiedRoot:
    chain = _sturm_chain(g)
    delta = precision / 2
    while True:
        lo, hi = root - delta, root + delta
        vlo, vhi = g.evaluate(lo), g.evaluate(hi)
        if (
            vlo != 0
            and vhi != 0
            and (vlo > 0) != (vhi > 0)
            and _variations(chain, lo) - _variations(chain, hi) == 1
        ):
            return CertifiedRoot(g, lo, hi)
        delta /= 2


def greatest_real_root(f: IntPolynomial, precision=Fraction(1, 10**12)) -> CertifiedRoot:
    """Isolate the greatest real root of f with exact arithmetic.

    The certificate polynomial is the primitive squarefree part of f, its
    value changes sign strictly between the returned endpoints, and the
    interval provably contains exactly one real root of f (Sturm count).
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    g = squarefree_part(f)
    if g.degree < 1:
        raise NoRealRootError("constant polynomial has no roots")
    chain = _sturm_chain(g)

    def roots_in(a: Fraction, b: Fraction) -> int:
        return _variations(chain, a) - _variations(chain, b)

    bound = _cauchy_bound(g)
    lo, hi = -bound, bound
    if roots_in(lo, hi) == 0:
        raise NoRealRootError(f"{f} has no real root")
    while roots_in(lo, hi) > 1:
        mid = (lo + hi) / 2
        if roots_in(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    # exactly one root in (lo, hi]
    if g.evaluate(hi) == 0:
        return _interval_around_exact_root(g, hi, precision)
    while g.evaluate(lo) == 0:
        mid = (lo + hi) / 2
        if roots_in(mid, hi) == 1:
            lo = mid
        else:
            hi = mid
            if g.evaluate(hi) == 0:
                return _interval_around_exact_root(g, hi, precision)
    sign_lo = 1 if g.evaluate(lo) > 0 else -1
    while hi - lo > precision:
        mid = (lo + hi) / 2
        v = g.evaluate(mid)
        if v == 0:
            return _interval_around_exact_root(g, mid, precision)
        if (1 if v > 0 else -1) == sign_lo:
            lo = mid
        else:
            hi = mid
    root = CertifiedRoot(g, lo, hi)
    assert (g.evaluate(lo) > 0) != (g.evaluate(hi) > 0)
    return root


# ---------------------------------------------------------------------------
# floating spectral helpers


def _as_csr(m) -> sp.csr_matrix:
    if isinstance(m, SparseIntMatrix):
        return m.to_csr()
    if isinstance(m, IntMatrix):
        return sp.csr_matrix(m.to_numpy(np.float64))
    if sp.issparse(m):
        return m.tocsr().astype(np.float64)
    arr = np.asarray(m, dtype=np.float64)
    return sp.csr_matrix(arr)


def _power_iteration(a: sp.csr_matrix, tol: float, max_iter: int) -> float:
    n = a.shape[0]
    v = np.full(n, 1.0 / math.sqrt(n))
    est = 0.0
    for _ in range(max_iter):
        w = a @ v
        est = float(v @ w)  # Rayleigh quotient, ||v|| = 1
        residual = float(np.linalg.norm(w - est * v))
        if residual <= tol:
            return est
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0
        v = w / norm
    raise ConvergenceError(
        f"power iteration did not reach residual {tol} in {max_iter} steps",
        estimate=est,
    )


def spectral_radius_float(m, tol: float = 1e-10, max_iter: int = 200_000) -> float:
    """Spectral radius of a nonnegative matrix.

    Dimensions up to 8 with exact integer entries go through the exact
    characteristic-polynomial path (the radius of a nonnegative matrix is
    its greatest real eigenvalue); larger inputs use power iteration with a
    residual stopping rule ||Av - rho v|| <= tol.
    """
    if isinstance(m, IntMatrix):
        if m.rows != m.cols:
            raise ValueError("spectral radius needs a square matrix")
        if any(v < 0 for row in m.data for v in row):
            raise ValueError("matrix must be nonnegative")
        if m.rows <= 8:
            if all(v == 0 for row in m.data for v in row):
                return 0.0
            root = greatest_real_root(char_poly(m), precision=Fraction(tol) / 4)
            return root.value
        m = m.to_sparse()
    a = _as_csr(m)
    if a.shape[0] != a.shape[1]:
        raise ValueError("spectral radius needs a square matrix")
    if a.nnz and a.data.min() < 0:
        raise ValueError("matrix must be nonnegative")
    return _power_iteration(a, tol, max_iter)


def spectral_norm_2x2(m) -> float:
    """Largest singular value of a real 2x2 matrix, in closed form."""
    if isinstance(m, IntMatrix):
        m = m.data
    rows = [[float(v) for v in row] for row in m]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("expected a 2x2 matrix")
    (a, b), (c, d) = rows
    # eigenvalues of A^T A via trace and determinant
    t = a * a + b * b + c * c + d * d
    det = (a * d - b * c) ** 2
    disc = max(t * t - 4 * det, 0.0)
    lam_max = (t + math.sqrt(disc)) / 2
    return math.sqrt(lam_max)
