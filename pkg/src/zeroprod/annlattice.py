"""Annihilators, their Galois closures, orthogonal pairs and regular inner ideals.

``lann`` and ``rann`` send right ideals to left ideals and back, reversing
inclusion; their composites are closure operators whose fixed points are
exactly the annihilator one-sided ideals.  An orthogonal pair ``(R, L)`` is
a nonzero right ideal and a nonzero left ideal with ``L R = 0``; it is
maximal exactly when ``R = rann(L)`` and ``L = lann(R)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    IdealSide,
    is_ideal,
    left_annihilator,
    right_annihilator,
    set_product,
)
from .exceptions import SideError
from .linalg import Subspace


def lann(alg: Algebra, s: Subspace) -> Subspace:
    return left_annihilator(alg, s)


def rann(alg: Algebra, s: Subspace) -> Subspace:
    return right_annihilator(alg, s)


def _require_side(alg: Algebra, s: Subspace, side: IdealSide) -> None:
    if not is_ideal(alg, s, side):
        raise SideError(f"argument is not a {side.value} ideal")


def close_right(alg: Algebra, r: Subspace) -> Subspace:
    """``rann(lann(R))`` for a right ideal R."""
    _require_side(alg, r, IdealSide.RIGHT)
    return rann(alg, lann(alg, r))


def close_left(alg: Algebra, l: Subspace) -> Subspace:
    """``lann(rann(L))`` for a left ideal L."""
    _require_side(alg, l, IdealSide.LEFT)
    return lann(alg, rann(alg, l))


def is_closed(alg: Algebra, ideal: Subspace, side: IdealSide) -> bool:
    if side is IdealSide.RIGHT:
        return close_right(alg, ideal) == ideal
    if side is IdealSide.LEFT:
        return close_left(alg, ideal) == ideal
    raise SideError("closure is defined for one-sided ideals only")


@dataclass(frozen=True)
class OrthogonalPair:
    right: Subspace
    left: Subspace

    @property
    def meet(self) -> Subspace:
        """``R ∩ L``."""
        return self.right.intersect(self.left)


def is_orthogonal_pair(alg: Algebra, r: Subspace, l: Subspace) -> bool:
    if r.is_zero() or l.is_zero():
        return False
    if not is_ideal(alg, r, IdealSide.RIGHT) or not is_ideal(alg, l, IdealSide.LEFT):
        return False
    return set_product(alg, l, r).is_zero()


def is_maximal_pair(alg: Algebra, r: Subspace, l: Subspace) -> bool:
    return is_orthogonal_pair(alg, r, l) and rann(alg, l) == r and lann(alg, r) == l


def saturate_pair(alg: Algebra, r: Subspace, l: Subspace) -> OrthogonalPair:
    """The maximal pair ``(closure of R, lann(R))`` above an orthogonal pair."""
    if not is_orthogonal_pair(alg, r, l):
        raise ValueError("input is not an orthogonal pair")
    left = lann(alg, r)
    return OrthogonalPair(rann(alg, left), left)


def is_regular_inner_ideal(alg: Algebra, b: Subspace) -> bool:
    """``B Q B ⊆ B`` and ``B B = 0``."""
    alg.check_subspace(b)
    if not set_product(alg, b, b).is_zero():
        return False
    bqb = set_product(alg, set_product(alg, b, alg.full()), b)
    return b.contains(bqb)


def pair_from_inner(alg: Algebra, b: Subspace) -> OrthogonalPair:
    """``(B + BQ, B + QB)`` for a nonzero regular inner ideal B (not saturated)."""
    if b.is_zero():
        raise ValueError("regular inner ideal must be nonzero")
    if not is_regular_inner_ideal(alg, b):
        raise ValueError("subspace is not a regular inner ideal")
    q = alg.full()
    return OrthogonalPair(b.sum(set_product(alg, b, q)), b.sum(set_product(alg, q, b)))


def check_vnr_identity(alg: Algebra, pair: OrthogonalPair) -> bool:
    """``R L = R ∩ L``; meaningful when the algebra is von Neumann regular."""
    return set_product(alg, pair.right, pair.left) == pair.meet
