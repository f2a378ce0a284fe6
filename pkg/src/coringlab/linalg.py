"""Exact dense linear algebra over prime fields GF(p).

Everything downstream (algebras, bimodules, corings) reduces to the
operations here: reduced row echelon forms, nullspaces, linear solves and
Kronecker products of int64 matrices with entries in [0, p).

Large eliminations are driven through a blocked Gauss-Jordan: pivots are
discovered inside a narrow column window by the row-reduction engine
(compiled or numpy, see ``coringlab.backend``) and the trailing columns
are updated with one exact float64 matmul per window.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np
from sympy import isprime

from coringlab import backend
from coringlab.errors import DimensionMismatch

Int = np.int64
_FLOAT_SAFE = 2**53
_INT64_SAFE = 2**62
_BLOCK_THRESHOLD = 192
_WINDOW = 64


class PrimeField:
    """GF(p) with canonical representatives in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if not isprime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("no inverse of 0")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def asmat(m, p: int) -> np.ndarray:
    """Coerce to a C-contiguous int64 matrix reduced mod p."""
    a = np.asarray(m, dtype=Int)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={a.ndim}")
    return np.ascontiguousarray(a % p)


def asvec(v, p: int) -> np.ndarray:
    a = np.asarray(v, dtype=Int)
    if a.ndim != 1:
        raise ValueError(f"expected a vector, got ndim={a.ndim}")
    return a % p


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=Int)


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=Int)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact a @ b mod p.

    Uses float64 BLAS when the inner products cannot lose precision
    (always true for the small primes this package targets), int64
    matmul next, and object arithmetic as the last resort.
    """
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch(f"matmul {a.shape} @ {b.shape}")
    k = a.shape[-1]
    if k == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=Int)
    bound = (p - 1) * (p - 1) * k
    if bound < _FLOAT_SAFE:
        c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(Int)
    elif bound < _INT64_SAFE:
        c = a @ b
    else:
        c = np.asarray(a.astype(object) @ b.astype(object))
    return (c % p).astype(Int)


def kron(a, b, p: int) -> np.ndarray:
    """Kronecker product: entry (i*rb+k, j*cb+l) is a[i,j]*b[k,l] mod p."""
    return np.kron(np.asarray(a, dtype=Int), np.asarray(b, dtype=Int)) % p


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(p).

    Returns (R, pivot_columns); the input is not mutated.  The RREF is
    unique, so downstream code may compare results bit-exactly.
    """
    a = asmat(m, p)
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return a, []
    if rows <= _BLOCK_THRESHOLD or cols <= _BLOCK_THRESHOLD:
        piv, _ = backend.rref_engine(a, p)
        return a, list(piv)
    return _rref_blocked(a, p)


def _rref_blocked(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    # a is a fresh reduced copy; eliminated in place window by window.
    rows, cols = a.shape
    piv_rows: list[int] = []
    piv_cols: list[int] = []
    is_piv = np.zeros(rows, dtype=bool)
    for c0 in range(0, cols, _WINDOW):
        c1 = min(c0 + _WINDOW, cols)
        cand = np.nonzero(~is_piv)[0]
        if cand.size == 0:
            break
        w = np.ascontiguousarray(a[cand][:, c0:c1])
        wpiv, wperm = backend.rref_engine(w, p)
        k = len(wpiv)
        if k == 0:
            continue
        newrows = cand[np.asarray(wperm[:k])]
        g = np.ascontiguousarray(a[newrows, c0:])
        gpiv, gperm = backend.rref_engine(g, p)
        # the selected rows alone must reproduce the same window pivots
        assert list(gpiv)[:k] == list(wpiv) and len(gpiv) == k
        ordered = newrows[np.asarray(gperm)]
        mask = np.ones(rows, dtype=bool)
        mask[newrows] = False
        others = np.nonzero(mask)[0]
        gcols = np.asarray([c0 + c for c in wpiv])
        if others.size:
            f = a[others[:, None], gcols[None, :]]
            a[others, c0:] = (a[others, c0:] - matmul_mod(f, g, p)) % p
        a[ordered, c0:] = g
        piv_rows.extend(int(r) for r in ordered)
        piv_cols.extend(int(c) for c in gcols)
        is_piv[newrows] = True
    out = np.zeros_like(a)
    if piv_rows:
        out[: len(piv_rows)] = a[piv_rows]
    return out, piv_cols


def rank(m, p: int) -> int:
    return len(rref(m, p)[1])


def solve_matrix(m, b, p: int) -> Optional[np.ndarray]:
    """Solve m @ X = b columnwise; None when any column is inconsistent.

    Free variables are set to zero.
    """
    a = asmat(m, p)
    rhs = asmat(b, p)
    if rhs.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"solve {a.shape} with rhs {rhs.shape}")
    cols = a.shape[1]
    r, piv = rref(np.hstack([a, rhs]), p)
    if any(c >= cols for c in piv):
        return None
    x = zeros(cols, rhs.shape[1])
    for i, c in enumerate(piv):
        x[c] = r[i, cols:]
    return x


def solve(m, b, p: int) -> Optional[np.ndarray]:
    """Some x with m @ x = b, or None when inconsistent."""
    x = solve_matrix(m, asvec(b, p).reshape(-1, 1), p)
    return None if x is None else x[:, 0]


def inverse(m, p: int) -> Optional[np.ndarray]:
    a = asmat(m, p)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    x = solve_matrix(a, eye(n), p)
    if x is None or rank(a, p) != n:
        return None
    return x


def nullspace_matrix(m, p: int) -> np.ndarray:
    """Basis of the right kernel {x : m @ x = 0}, one vector per row, RREF."""
    a = asmat(m, p)
    rows, cols = a.shape
    r, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = zeros(len(free), cols)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for i, c in enumerate(piv):
            basis[bi, c] = (-r[i, f]) % p
    rr, _ = rref(basis, p)
    return rr[: len(free)]


class Subspace:
    """A subspace of GF(p)^n held by an RREF basis.

    The basis is the unique reduced row-echelon form of any spanning set,
    so subspace equality is a bit-exact array comparison.
    """

    __slots__ = ("ambient", "p", "basis", "pivots")

    def __init__(self, basis: np.ndarray, pivots: list[int], ambient: int, p: int):
        # callers go through from_vectors/zero/full; basis must be RREF
        self.basis = basis
        self.pivots = list(pivots)
        self.ambient = int(ambient)
        self.p = int(p)

    @staticmethod
    def from_vectors(vectors, ambient: int, p: int) -> "Subspace":
        a = np.asarray(vectors, dtype=Int)
        if a.size == 0:
            a = zeros(0, ambient)
        a = a.reshape(-1, ambient)
        r, piv = rref(a, p)
        return Subspace(r[: len(piv)].copy(), piv, ambient, p)

    @staticmethod
    def zero(ambient: int, p: int) -> "Subspace":
        return Subspace(zeros(0, ambient), [], ambient, p)

    @staticmethod
    def full(ambient: int, p: int) -> "Subspace":
        return Subspace(eye(ambient), list(range(ambient)), ambient, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reduce_vector(self, v) -> np.ndarray:
        """Residual of v after elimination against the basis."""
        v = asvec(v, self.p).copy()
        for i, c in enumerate(self.pivots):
            f = v[c]
            if f:
                v = (v - f * self.basis[i]) % self.p
        return v

    def contains_vector(self, v) -> bool:
        return not self.reduce_vector(v).any()

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.p == other.p
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.p, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient != v.ambient or u.p != v.p:
        raise DimensionMismatch("subspace_sum: ambient spaces differ")
    return Subspace.from_vectors(np.vstack([u.basis, v.basis]), u.ambient, u.p)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus: row-reduce [[U,U],[V,0]]; rows with zero left block
    carry an intersection basis on the right."""
    if u.ambient != v.ambient or u.p != v.p:
        raise DimensionMismatch("subspace_intersect: ambient spaces differ")
    n = u.ambient
    top = np.hstack([u.basis, u.basis])
    bot = np.hstack([v.basis, zeros(v.dim, n)])
    r, piv = rref(np.vstack([top, bot]), u.p)
    vecs = [r[i, n:] for i, c in enumerate(piv) if c >= n]
    return Subspace.from_vectors(vecs, n, u.p)


class RrefAccumulator:
    """Incremental RREF basis used by spins/closures.

    ``add`` reduces a vector against the current basis and, when a new
    direction appears, inserts it keeping the full RREF invariant.
    """

    def __init__(self, ambient: int, p: int):
        self.ambient = ambient
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v) -> np.ndarray:
        v = asvec(v, self.p).copy()
        for i, c in enumerate(self.pivots):
            f = v[c]
            if f:
                v = (v - f * self.rows[i]) % self.p
        return v

    def add(self, v) -> bool:
        """Returns True when v enlarged the span."""
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        inv = pow(int(v[c]), self.p - 2, self.p)
        v = (v * inv) % self.p
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < c:
            pos += 1
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        for i, row in enumerate(self.rows):
            if i != pos and row[c]:
                self.rows[i] = (row - row[c] * v) % self.p
        return True

    def to_subspace(self) -> Subspace:
        basis = np.array(self.rows, dtype=Int).reshape(-1, self.ambient)
        return Subspace(basis, list(self.pivots), self.ambient, self.p)


class CoordSolver:
    """Expresses vectors in the span of a fixed row basis.

    Precomputes the RREF once; ``coords`` then runs a cheap elimination.
    """

    def __init__(self, basis_rows: np.ndarray, p: int):
        self.p = p
        self.basis = asmat(basis_rows, p)
        k, n = self.basis.shape
        aug = np.hstack([self.basis, eye(k)])
        r, piv = rref(aug, p)
        if len([c for c in piv if c < n]) != k:
            raise ValueError("basis rows are linearly dependent")
        self._r = r[:k]
        self._piv = [c for c in piv if c < n]
        self._n = n

    def coords(self, v) -> np.ndarray:
        """Coefficients x with x @ basis = v; raises if v is outside."""
        v = asvec(v, self.p)
        x = zeros(1, self.basis.shape[0])[0]
        v = v.copy()
        for i, c in enumerate(self._piv):
            f = v[c]
            if f:
                v = (v - f * self._r[i, : self._n]) % self.p
                x = (x + f * self._r[i, self._n :]) % self.p
        if v.any():
            raise ValueError("vector is not in the span of the basis")
        return x


def all_vectors(p: int, k: int, limit: int = 1_000_000) -> np.ndarray:
    """All of GF(p)^k as a (p^k, k) array, mixed-radix order."""
    count = p**k
    if count > limit:
        raise ValueError(f"enumeration of {count} vectors exceeds limit {limit}")
    if k == 0:
        return zeros(1, 0)
    idx = np.arange(count, dtype=Int)
    out = zeros(count, k)
    for j in range(k):
        out[:, k - 1 - j] = idx % p
        idx //= p
    return out


def vector_blocks(p: int, k: int, block: int = 32768) -> Iterable[np.ndarray]:
    """GF(p)^k in chunks of at most ``block`` rows (big enumerations)."""
    count = p**k
    if k == 0:
        yield zeros(1, 0)
        return
    start = 0
    while start < count:
        stop = min(start + block, count)
        idx = np.arange(start, stop, dtype=Int)
        out = zeros(stop - start, k)
        for j in range(k):
            out[:, k - 1 - j] = idx % p
            idx //= p
        yield out
        start = stop
