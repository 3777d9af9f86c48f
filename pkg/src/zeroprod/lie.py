"""The commutator Lie structure ``[x, y] = xy - yx`` of an associative algebra."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .algebra import Algebra, pairwise_products
from .classify import ClassificationReport, classify_max_zero_product
from .exceptions import BudgetExceeded, HypothesisFailed
from .linalg import Subspace, as_matrix, kernel


def bracket(alg: Algebra, a, b) -> np.ndarray:
    prods = pairwise_products(alg, alg.element(a), alg.element(b))
    back = pairwise_products(alg, alg.element(b), alg.element(a))
    return (prods[0, 0] - back[0, 0]) % alg.p


def pairwise_brackets(alg: Algebra, xs, ys) -> np.ndarray:
    xs = as_matrix(xs, alg.p, alg.dim)
    ys = as_matrix(ys, alg.p, alg.dim)
    return (pairwise_products(alg, xs, ys) - pairwise_products(alg, ys, xs).transpose(1, 0, 2)) % alg.p


def set_bracket(alg: Algebra, a: Subspace, b: Subspace) -> Subspace:
    alg.check_subspace(a)
    alg.check_subspace(b)
    br = pairwise_brackets(alg, a.basis, b.basis)
    return Subspace.span(br.reshape(-1, alg.dim), alg.p, alg.dim)


def is_inner_ideal(alg: Algebra, b: Subspace) -> bool:
    """``[[B, Q], B] ⊆ B``."""
    return b.contains(set_bracket(alg, set_bracket(alg, b, alg.full()), b))


def is_abelian_inner_ideal(alg: Algebra, b: Subspace) -> bool:
    return set_bracket(alg, b, b).is_zero() and is_inner_ideal(alg, b)


def jacobi_violations(alg: Algebra) -> list[tuple[int, int, int]]:
    """Basis triples where ``[a,[b,c]] + [b,[c,a]] + [c,[a,b]] != 0``."""
    eye = np.eye(alg.dim, dtype=np.int64)
    br = pairwise_brackets(alg, eye, eye)  # br[i, j] = [e_i, e_j]
    # [e_i, [e_j, e_k]] for all triples
    inner = br.reshape(-1, alg.dim)
    outer = pairwise_brackets(alg, eye, inner).reshape(alg.dim, alg.dim, alg.dim, alg.dim)
    total = (outer + outer.transpose(1, 2, 0, 3) + outer.transpose(2, 0, 1, 3)) % alg.p
    return [tuple(int(x) for x in t) for t in np.argwhere(total.any(axis=3))]


def is_antisymmetric(alg: Algebra) -> bool:
    eye = np.eye(alg.dim, dtype=np.int64)
    br = pairwise_brackets(alg, eye, eye)
    return not ((br + br.transpose(1, 0, 2)) % alg.p).any() and not np.einsum("iik->ik", br).any()


def centralizer(alg: Algebra, s: Subspace) -> Subspace:
    """``{v : [v, x] = 0 for all x in s}``."""
    if s.is_zero():
        return alg.full()
    eye = np.eye(alg.dim, dtype=np.int64)
    # row i of each block is [e_i, x]; v lies in the left kernel
    blocks = [pairwise_brackets(alg, eye, x)[:, 0, :].T for x in s.basis]
    return kernel(np.vstack(blocks), alg.p, alg.dim)


def abelian_inner_extensions(alg: Algebra, s: Subspace, limit: int = 2**16) -> list[Subspace]:
    """Abelian inner ideals ``S + span(v)`` strictly containing ``s``.

    Candidates ``v`` range over the centralizer of ``s`` modulo ``s``; the
    sweep refuses when the centralizer has more than ``limit`` elements.
    """
    c = centralizer(alg, s)
    if c.dim == 0 or not c.contains(s):
        return []
    count = alg.p**c.dim
    if count > limit:
        raise BudgetExceeded("centralizer sweep", count, limit)
    seen = set()
    out = []
    for coeffs in itertools.product(range(alg.p), repeat=c.dim):
        v = np.asarray(coeffs, dtype=np.int64) @ c.basis % alg.p
        if s.contains_vector(v):
            continue
        bigger = s.sum(Subspace.span(v, alg.p, alg.dim))
        if bigger in seen:
            continue
        seen.add(bigger)
        if is_abelian_inner_ideal(alg, bigger):
            out.append(bigger)
    return sorted(out, key=Subspace.sort_key)


@dataclass
class LieReport:
    checked: bool
    all_abelian_inner: bool
    unital_obstruction_found: bool
    failures: list[Subspace] = field(default_factory=list)
    obstructions: list[tuple[Subspace, Subspace]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "all_abelian_inner": self.all_abelian_inner,
            "unital_obstruction_found": self.unital_obstruction_found,
        }


def check_characteristic(alg: Algebra) -> None:
    if alg.p in (2, 3):
        raise HypothesisFailed("characteristic", f"p = {alg.p}; need characteristic not 2 or 3")


def cross_check_lie(
    alg: Algebra, report: ClassificationReport | None = None, **classify_kwargs
) -> LieReport:
    """Every classified subspace must be an abelian inner ideal of the commutator algebra.

    Also searches for abelian inner ideals one dimension larger than each
    entry; in unital algebras such as M_2(GF(5)) adding the identity gives
    one, so classified entries need not be maximal among all abelian inner
    ideals.
    """
    check_characteristic(alg)
    if report is None:
        classify_kwargs.setdefault("oracle", "none")
        report = classify_max_zero_product(alg, **classify_kwargs)
    failures = [e.S for e in report.entries if not is_abelian_inner_ideal(alg, e.S)]
    obstructions = []
    for e in report.entries:
        ext = abelian_inner_extensions(alg, e.S)
        if ext:
            obstructions.append((e.S, ext[0]))
    return LieReport(True, not failures, bool(obstructions), failures, obstructions)
