"""Finite-dimensional dual pairs and the algebra ``Y ⊗ X``.

A dual pair over GF(p) is ``X = Y = GF(p)^n`` with the nondegenerate pairing
``<x, y> = (G x) · y`` for an invertible matrix ``G``.  An element of
``Y ⊗ X`` is stored as an n x n coefficient matrix ``T``, the pure tensor
``y ⊗ x`` being ``outer(y, x)``; flattened row-major it is a vector of
GF(p)^(n*n).  The product ``(y1 ⊗ x1)(y2 ⊗ x2) = <x1, y2> y1 ⊗ x2`` becomes
``T1 G^T T2`` and ``T -> T G^T`` is an algebra isomorphism onto M_n(GF(p)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra
from .exceptions import DimensionMismatch
from .linalg import Subspace, as_matrix, check_modulus, enumerate_subspaces, kernel, rank


@dataclass(frozen=True, eq=False)
class DualPair:
    n: int
    p: int
    pairing: np.ndarray

    def __post_init__(self):
        check_modulus(self.p)
        g = as_matrix(self.pairing, self.p)
        if g.shape != (self.n, self.n):
            raise DimensionMismatch(f"pairing must be {self.n}x{self.n}")
        if rank(g, self.p) != self.n:
            raise ValueError("pairing matrix is degenerate")
        object.__setattr__(self, "pairing", g)

    @classmethod
    def standard(cls, n: int, p: int) -> "DualPair":
        return cls(n, p, np.eye(n, dtype=np.int64))

    def pair(self, x, y) -> int:
        """``<x, y>`` for x in X and y in Y."""
        return int((self.pairing @ np.asarray(x)) @ np.asarray(y) % self.p)


def perp(dp: DualPair, w: Subspace, side: str = "Y") -> Subspace:
    """Orthogonal of ``w`` under the pairing.

    ``side="Y"``: w ⊆ Y and the result is ``{x in X : <x, w> = 0}``.
    ``side="X"``: w ⊆ X and the result is ``{y in Y : <w, y> = 0}``.
    """
    if w.p != dp.p or w.ambient_dim != dp.n:
        raise DimensionMismatch(f"subspace of GF({w.p})^{w.ambient_dim} vs dual pair of rank {dp.n}")
    if side == "Y":
        return kernel(w.basis @ dp.pairing % dp.p, dp.p, dp.n)
    if side == "X":
        return kernel(w.basis @ dp.pairing.T % dp.p, dp.p, dp.n)
    raise ValueError(f"side must be 'X' or 'Y', got {side!r}")


def pure_tensor(dp: DualPair, y, x) -> np.ndarray:
    return np.outer(np.asarray(y, dtype=np.int64), np.asarray(x, dtype=np.int64)) % dp.p


def dual_product(dp: DualPair, t1, t2) -> np.ndarray:
    """Product in ``Y ⊗ X`` of two coefficient matrices (bilinear extension)."""
    t1 = np.asarray(t1, dtype=np.int64).reshape(dp.n, dp.n)
    t2 = np.asarray(t2, dtype=np.int64).reshape(dp.n, dp.n)
    return t1 @ dp.pairing.T % dp.p @ t2 % dp.p


def tensor_to_matrix(dp: DualPair, t) -> np.ndarray:
    """The canonical isomorphism ``y ⊗ x -> y (G x)^T``."""
    t = np.asarray(t, dtype=np.int64).reshape(dp.n, dp.n)
    return t @ dp.pairing.T % dp.p


def subspace_to_matrix(dp: DualPair, s: Subspace) -> Subspace:
    """Image of a subspace of ``Y ⊗ X`` inside ``mat_algebra(n, p)`` coordinates."""
    n = dp.n
    imgs = [tensor_to_matrix(dp, row).reshape(-1) for row in s.basis]
    return Subspace.span(np.array(imgs).reshape(-1, n * n), dp.p, n * n)


def tensor_subspace(dp: DualPair, w: Subspace, v: Subspace) -> Subspace:
    """``W ⊗ V`` as a subspace of the n*n coordinates of ``Y ⊗ X``."""
    n = dp.n
    gens = [pure_tensor(dp, y, x).reshape(-1) for y in w.basis for x in v.basis]
    return Subspace.span(np.array(gens).reshape(-1, n * n), dp.p, n * n)


def dual_pair_algebra(dp: DualPair) -> Algebra:
    """``Y ⊗ X`` on the basis ``e_i ⊗ e_j`` (row-major), as structure constants."""
    n, d = dp.n, dp.n * dp.n
    g = dp.pairing
    t = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    # (e_i ⊗ e_j)(e_k ⊗ e_l) = <e_j, e_k> e_i ⊗ e_l
                    t[i * n + j, k * n + l, i * n + l] = g[k, j]
    names = [f"y{i + 1}x{j + 1}" for i in range(n) for j in range(n)]
    return Algebra(dp.p, t, names, None, name=f"dualpair:{n}:{dp.p}")


def dual_pair_map(dp: DualPair, w: Subspace) -> Subspace:
    """``W ⊗ W^perp`` for a subspace W of Y."""
    return tensor_subspace(dp, w, perp(dp, w, "Y"))


def dual_pair_classification(dp: DualPair) -> list[Subspace]:
    """``W ⊗ W^perp`` for every proper nonzero W ⊆ Y, in subspace-enumeration order."""
    if dp.n < 2:
        raise ValueError("dual pair classification needs n >= 2")
    return [dual_pair_map(dp, w) for w in enumerate_subspaces(dp.n, dp.p, dims=range(1, dp.n))]
