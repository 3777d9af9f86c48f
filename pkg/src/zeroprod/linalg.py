"""Exact dense linear algebra over prime fields GF(p).

Matrices are plain ``numpy.int64`` arrays whose entries are residues in
``[0, p)``; the modulus travels alongside them.  Subspaces are stored by
their reduced row echelon basis, which makes equality of subspaces a plain
comparison of integer tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .exceptions import BudgetExceeded, DimensionMismatch

# keeps every intermediate product p*p inside int64
MAX_MODULUS = 2**31 - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_modulus(p: int) -> int:
    p = int(p)
    if not is_prime(p) or p > MAX_MODULUS:
        raise ValueError(f"modulus must be a prime below 2**31, got {p}")
    return p


def as_matrix(m, p: int, cols: int | None = None) -> np.ndarray:
    """Coerce ``m`` to a 2-d int64 array reduced mod ``p``.

    An empty input needs ``cols`` to know its width.
    """
    a = np.asarray(m, dtype=np.int64)
    if a.size == 0:
        if cols is None:
            cols = a.shape[-1] if a.ndim == 2 else 0
        return np.zeros((0, cols), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    if cols is not None and a.shape[1] != cols:
        raise DimensionMismatch(f"expected {cols} columns, got {a.shape[1]}")
    return a % p


def rref(m, p: int) -> tuple[np.ndarray, int]:
    """Reduced row echelon form of ``m`` over GF(p) and its rank.

    The returned matrix has the shape of ``m``; zero rows sit at the bottom.
    """
    a = as_matrix(m, p).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % p
        r += 1
    return a, r


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def pivot_columns(reduced: np.ndarray) -> list[int]:
    """Pivot columns of a matrix already in RREF (zero rows allowed)."""
    pivots = []
    for row in reduced:
        nz = np.flatnonzero(row)
        if nz.size == 0:
            break
        pivots.append(int(nz[0]))
    return pivots


def kernel(m, p: int, cols: int | None = None) -> "Subspace":
    """Right null space ``{v : m v = 0}`` as a canonical subspace."""
    a = as_matrix(m, p, cols)
    n = a.shape[1]
    reduced, r = rref(a, p)
    pivots = pivot_columns(reduced[:r])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = -reduced[i, f] % p
    return Subspace.span(basis, p, n)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of GF(p)^n held by its RREF basis.

    ``rows`` is a tuple of basis rows (tuples of ints) in reduced row
    echelon form with no zero rows.  Build instances with :meth:`span`,
    :meth:`zero` or :meth:`full`; the raw constructor trusts its input.
    """

    p: int
    ambient_dim: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors, p: int, n: int) -> "Subspace":
        a = np.asarray(vectors, dtype=np.int64)
        if a.size == 0:
            return cls.zero(n, p)
        a = as_matrix(a.reshape(-1, n), p, n)
        reduced, r = rref(a, p)
        return cls(p, n, tuple(tuple(int(x) for x in row) for row in reduced[:r]))

    @classmethod
    def zero(cls, n: int, p: int) -> "Subspace":
        return cls(p, n, ())

    @classmethod
    def full(cls, n: int, p: int) -> "Subspace":
        return cls(p, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.rows]

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"GF({self.p})^{self.ambient_dim} vs GF({other.p})^{other.ambient_dim}"
            )

    def residues(self, vectors) -> np.ndarray:
        """Remainders of ``vectors`` after reduction against this basis."""
        v = as_matrix(vectors, self.p, self.ambient_dim)
        if not self.rows or v.shape[0] == 0:
            return v
        b = self.basis
        return (v - v[:, self.pivots] @ b) % self.p

    def contains_vectors(self, vectors) -> np.ndarray:
        """Boolean mask: which rows of ``vectors`` lie in the subspace."""
        return ~self.residues(vectors).any(axis=1)

    def contains_vector(self, v) -> bool:
        return bool(self.contains_vectors(v)[0])

    def contains(self, other: "Subspace") -> bool:
        """True iff ``other`` is a subspace of ``self``."""
        self._check(other)
        if other.dim > self.dim:
            return False
        return bool(self.contains_vectors(other.basis).all())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.p, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        # (A^perp + B^perp)^perp under the standard dot product
        n = self.ambient_dim
        ka = kernel(self.basis, self.p, n)
        kb = kernel(other.basis, self.p, n)
        return kernel(np.vstack([ka.basis, kb.basis]), self.p, n)

    def complement_dot(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        return kernel(self.basis, self.p, self.ambient_dim)

    __add__ = sum
    __and__ = intersect

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains(other)

    def __lt__(self, other: "Subspace") -> bool:
        return self != other and other.contains(self)

    def __gt__(self, other: "Subspace") -> bool:
        return self != other and self.contains(other)

    def sort_key(self) -> tuple:
        return self.rows

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"Subspace(GF({self.p})^{self.ambient_dim}, dim={self.dim}, rows={self.to_lists()})"


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def contains(a: Subspace, b: Subspace) -> bool:
    return a.contains(b)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _free_positions(pivots: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    pivot_set = set(pivots)
    return [
        (i, j)
        for i, c in enumerate(pivots)
        for j in range(c + 1, n)
        if j not in pivot_set
    ]


def enumerate_subspaces(
    n: int, p: int, budget: int | None = None, dims: Iterable[int] | None = None
) -> Iterator[Subspace]:
    """Yield every subspace of GF(p)^n exactly once.

    Order: by dimension, then pivot set in lexicographic order, then the free
    entries counted in base p (last free entry varies fastest).  ``dims``
    restricts the sweep to the given dimensions; the budget is checked
    against the count actually visited.
    """
    dims = range(n + 1) if dims is None else sorted(set(dims))
    total = sum(gaussian_binomial(n, k, p) for k in dims)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"subspaces of GF({p})^{n}", total, budget)
    for k in dims:
        for pivots in itertools.combinations(range(n), k):
            free = _free_positions(pivots, n)
            for digits in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, c in enumerate(pivots):
                    rows[i][c] = 1
                for (i, j), x in zip(free, digits):
                    rows[i][j] = x
                yield Subspace(p, n, tuple(tuple(r) for r in rows))


def random_subspace(n: int, p: int, rng: np.random.Generator, dim: int | None = None) -> Subspace:
    """Span of ``dim`` uniformly random vectors (so the result may be smaller)."""
    if dim is None:
        dim = int(rng.integers(0, n + 1))
    return Subspace.span(rng.integers(0, p, size=(dim, n)), p, n)
