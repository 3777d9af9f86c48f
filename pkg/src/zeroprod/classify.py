"""Maximal zero-product subspaces of prime algebras with nonzero core.

The classifier walks the proper nonzero annihilator right ideals ``R`` and
emits ``R ∩ lann(R)``.  The oracle shares none of that machinery: it sweeps
subspaces (or grows random ones) using only element products and a list of
square-zero elements, so agreement between the two is real evidence.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    Algebra,
    IdealSide,
    core,
    enumerate_idempotents,
    has_nonzero_nilpotent,
    is_ideal,
    is_prime,
    is_simple,
    matrix_size,
    pairwise_products,
    set_product,
    square_zero_elements,
)
from .annlattice import close_right, is_maximal_pair, lann, rann
from .exceptions import BudgetExceeded, HypothesisFailed
from .linalg import Subspace, enumerate_subspaces, gaussian_binomial, subspace_count

log = logging.getLogger(__name__)

DEFAULT_SUBSPACE_BUDGET = 10**7
DEFAULT_SEED = 0xA117
DEFAULT_SAMPLES = 1000


@dataclass(frozen=True)
class Entry:
    """A maximal zero-product subspace with the pair it comes from."""

    S: Subspace
    R: Subspace
    L: Subspace

    def to_dict(self) -> dict:
        return {
            "S_basis": self.S.to_lists(),
            "R_basis": self.R.to_lists(),
            "L_basis": self.L.to_lists(),
            "dim_S": self.S.dim,
        }


@dataclass
class OracleResult:
    ran: bool
    agrees: bool
    mode: str  # "exhaustive", "randomized" or "none"
    seed: int
    samples: int = 0
    found: list[Subspace] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {"ran": self.ran, "agrees": self.agrees, "mode": self.mode, "seed": self.seed}


@dataclass
class ClassificationReport:
    algebra: str
    hypotheses: dict[str, bool]
    entries: list[Entry]
    oracle: OracleResult
    lie: dict | None = None

    @property
    def count(self) -> int:
        return len(self.entries)

    @property
    def oracle_checked(self) -> bool:
        return self.oracle.ran

    @property
    def oracle_agrees(self) -> bool:
        return self.oracle.agrees

    def subspaces(self) -> list[Subspace]:
        return [e.S for e in self.entries]

    def to_dict(self) -> dict:
        out = {
            "algebra": self.algebra,
            "hypotheses": dict(self.hypotheses),
            "count": self.count,
            "entries": [e.to_dict() for e in self.entries],
            "oracle": self.oracle.to_dict(),
        }
        if self.lie is not None:
            out["lie"] = dict(self.lie)
        return out


# ---------------------------------------------------------------------------
# annihilator right ideals


def _matrix_right_ideals(n: int, p: int) -> list[Subspace]:
    # R_U = {A : every column of A lies in U}, coordinates row-major
    d = n * n
    out = []
    for u in enumerate_subspaces(n, p, dims=range(1, n)):
        gens = []
        for vec in u.basis:
            for j in range(n):
                m = np.zeros((n, n), dtype=np.int64)
                m[:, j] = vec
                gens.append(m.reshape(-1))
        out.append(Subspace.span(np.array(gens), p, d))
    return out


def annihilator_right_ideals(
    alg: Algebra, budget: int | None = None, path: str = "auto"
) -> list[Subspace]:
    """All proper nonzero right ideals equal to their closure, canonical order.

    ``path="generic"`` sweeps every subspace of the algebra; ``"matrix"`` uses
    the column-space description available for full matrix algebras;
    ``"auto"`` picks the matrix path when the table allows it.
    """
    n = matrix_size(alg)
    if path == "auto":
        path = "matrix" if n is not None else "generic"
    if path == "matrix":
        if n is None:
            raise ValueError(f"{alg!r} is not a full matrix algebra")
        ideals = _matrix_right_ideals(n, alg.p)
    elif path == "generic":
        budget = DEFAULT_SUBSPACE_BUDGET if budget is None else budget
        ideals = []
        for s in enumerate_subspaces(alg.dim, alg.p, budget, dims=range(1, alg.dim)):
            if is_ideal(alg, s, IdealSide.RIGHT) and close_right(alg, s) == s:
                ideals.append(s)
    else:
        raise ValueError(f"unknown path {path!r}")
    return sorted(ideals, key=Subspace.sort_key)


# ---------------------------------------------------------------------------
# oracle


def _annihilated_by(alg: Algebra, zs: np.ndarray, s: Subspace) -> np.ndarray:
    """Mask of rows z of ``zs`` with ``z x = x z = 0`` for all x in s."""
    if s.is_zero():
        return np.ones(len(zs), dtype=bool)
    b = s.basis
    left = pairwise_products(alg, zs, b).reshape(len(zs), -1)
    right = pairwise_products(alg, b, zs).transpose(1, 0, 2).reshape(len(zs), -1)
    return ~(left.any(axis=1) | right.any(axis=1))


def _is_zero_product(alg: Algebra, s: Subspace) -> bool:
    return not pairwise_products(alg, s.basis, s.basis).any()


def _extensions(alg: Algebra, zs: np.ndarray, s: Subspace) -> np.ndarray:
    cand = zs[_annihilated_by(alg, zs, s)]
    return cand[~s.contains_vectors(cand)] if len(cand) else cand


def oracle_max_zero_product(
    alg: Algebra,
    budget: int | None = None,
    budget_elements: int | None = None,
    method: str = "grow",
) -> list[Subspace]:
    """Every maximal zero-product subspace, found without annihilator machinery.

    A zero-product subspace is maximal iff no square-zero element outside it
    kills it on both sides.  ``method="grow"`` visits every zero-product
    subspace level by level (each one of dimension k+1 contains one of
    dimension k); ``method="sweep"`` tests every subspace of the algebra.
    Both refuse when the algebra has more than ``budget`` subspaces.
    """
    budget = DEFAULT_SUBSPACE_BUDGET if budget is None else budget
    total = subspace_count(alg.dim, alg.p)
    if total > budget:
        raise BudgetExceeded(f"subspaces of GF({alg.p})^{alg.dim}", total, budget)
    zs = square_zero_elements(alg, budget_elements)
    found = []
    if method == "sweep":
        for s in enumerate_subspaces(alg.dim, alg.p, budget):
            if _is_zero_product(alg, s) and len(_extensions(alg, zs, s)) == 0:
                found.append(s)
    elif method == "grow":
        level = {alg.zero()}
        while level:
            bigger = set()
            for s in level:
                ext = _extensions(alg, zs, s)
                if len(ext) == 0:
                    found.append(s)
                for v in ext:
                    bigger.add(s.sum(Subspace.span(v, alg.p, alg.dim)))
            level = bigger
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    return sorted(found, key=Subspace.sort_key)


def oracle_randomized(
    alg: Algebra,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    budget_elements: int | None = None,
) -> list[Subspace]:
    """Grow ``samples`` random zero-product subspaces until maximal.

    Each run starts at a random nonzero square-zero element and keeps adding
    a random square-zero element that kills the current span on both sides.
    Returns one maximal subspace per sample (with repeats).
    """
    rng = np.random.default_rng(seed)
    zs = square_zero_elements(alg, budget_elements)
    zs = zs[zs.any(axis=1)]
    if len(zs) == 0:
        return [alg.zero()] * samples
    out = []
    for _ in range(samples):
        s = Subspace.span(zs[rng.integers(len(zs))], alg.p, alg.dim)
        while True:
            ext = _extensions(alg, zs, s)
            if len(ext) == 0:
                break
            s = s.sum(Subspace.span(ext[rng.integers(len(ext))], alg.p, alg.dim))
        out.append(s)
    return out


def run_oracle(
    alg: Algebra,
    expected: list[Subspace],
    mode: str = "auto",
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    budget_subspaces: int | None = None,
    budget_elements: int | None = None,
) -> OracleResult:
    """Compare ``expected`` against the oracle.

    ``mode`` is ``"auto"`` (exhaustive when the subspace count fits the
    budget, randomized otherwise), ``"exhaustive"``, ``"randomized"`` or
    ``"none"``.
    """
    budget_subspaces = DEFAULT_SUBSPACE_BUDGET if budget_subspaces is None else budget_subspaces
    if mode == "none":
        return OracleResult(False, False, "none", seed)
    if mode == "auto":
        fits = subspace_count(alg.dim, alg.p) <= budget_subspaces
        mode = "exhaustive" if fits else "randomized"
    if mode == "exhaustive":
        found = oracle_max_zero_product(alg, budget_subspaces, budget_elements)
        agrees = sorted(set(found), key=Subspace.sort_key) == sorted(set(expected), key=Subspace.sort_key)
        return OracleResult(True, agrees, mode, seed, 0, found)
    if mode == "randomized":
        found = oracle_randomized(alg, samples, seed, budget_elements)
        target = set(expected)
        agrees = all(s in target for s in found)
        return OracleResult(True, agrees, mode, seed, samples, found)
    raise ValueError(f"unknown oracle mode {mode!r}")


# ---------------------------------------------------------------------------
# classification


def check_hypotheses(alg: Algebra, budget_elements: int | None = None) -> dict[str, bool]:
    nil = has_nonzero_nilpotent(alg, budget_elements)
    return {
        "prime": is_prime(alg, budget_elements).holds,
        "core_nonzero": not core(alg, budget_elements).is_zero(),
        "has_nilpotent": nil.holds,
    }


def _gate(hyp: dict[str, bool]) -> None:
    if not hyp["prime"]:
        raise HypothesisFailed("prime")
    if not hyp["core_nonzero"]:
        raise HypothesisFailed("core_nonzero")


def classify_max_zero_product(
    alg: Algebra,
    oracle: str = "auto",
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    budget_subspaces: int | None = None,
    budget_elements: int | None = None,
    path: str = "auto",
) -> ClassificationReport:
    """Entries ``(R ∩ lann(R), R, lann(R))`` over proper nonzero annihilator right ideals.

    Without nonzero square-zero elements the only maximal zero-product set is
    0 and the report has no entries; otherwise the algebra must be prime with
    nonzero core or :class:`HypothesisFailed` is raised.
    """
    hyp = check_hypotheses(alg, budget_elements)
    name = alg.name or "inline"
    if not hyp["has_nilpotent"]:
        result = run_oracle(alg, [alg.zero()], oracle, seed, samples, budget_subspaces, budget_elements)
        return ClassificationReport(name, hyp, [], result)
    _gate(hyp)
    entries = []
    for r in annihilator_right_ideals(alg, budget_subspaces, path):
        l = lann(alg, r)
        entries.append(Entry(r.intersect(l), r, l))
    log.debug("classified %d entries for %r", len(entries), alg)
    result = run_oracle(alg, [e.S for e in entries], oracle, seed, samples, budget_subspaces, budget_elements)
    return ClassificationReport(name, hyp, entries, result)


def entry_violations(alg: Algebra, entry: Entry) -> list[str]:
    """Structural identities every classified entry must satisfy."""
    bad = []
    if entry.S != entry.R.intersect(entry.L):
        bad.append("S != R ∩ L")
    if lann(alg, entry.R) != entry.L:
        bad.append("L != lann(R)")
    if rann(alg, entry.L) != entry.R:
        bad.append("R != rann(L)")
    if not set_product(alg, entry.S, entry.S).is_zero():
        bad.append("S^2 != 0")
    if not is_maximal_pair(alg, entry.R, entry.L):
        bad.append("(R, L) not a maximal orthogonal pair")
    return bad


@dataclass
class BijectionReport:
    injective: bool
    n_ideals: int
    n_images: int
    oracle: OracleResult

    @property
    def ok(self) -> bool:
        return self.injective and self.n_ideals == self.n_images and (
            not self.oracle.ran or self.oracle.agrees
        )


def verify_bijection(alg: Algebra, **kwargs) -> BijectionReport:
    """Check that ``R -> R ∩ lann(R)`` is injective and hits exactly the oracle's sets."""
    report = classify_max_zero_product(alg, **kwargs)
    images = {e.S for e in report.entries}
    rights = {e.R for e in report.entries}
    return BijectionReport(
        injective=len(images) == len(rights) == report.count,
        n_ideals=len(rights),
        n_images=len(images),
        oracle=report.oracle,
    )


def expected_matrix_count(n: int, p: int) -> int:
    """Number of maximal zero-product subspaces of M_n(GF(p))."""
    return sum(gaussian_binomial(n, k, p) for k in range(1, n))


# ---------------------------------------------------------------------------
# idempotent form


@dataclass(frozen=True, eq=False)
class IdempotentEntry:
    e: np.ndarray
    S: Subspace
    right_ideal: Subspace  # eQ


def idempotent_classification(alg: Algebra, budget: int | None = None) -> list[IdempotentEntry]:
    """``S_e = eQ(1 - e)`` for each nontrivial idempotent e of a unital simple algebra."""
    if alg.unit is None:
        raise HypothesisFailed("unital")
    if not is_simple(alg, budget):
        raise HypothesisFailed("simple")
    if not has_nonzero_nilpotent(alg, budget).holds:
        raise HypothesisFailed("has_nilpotent")
    q = alg.full()
    out = []
    for e in enumerate_idempotents(alg, budget):
        if not e.any() or np.array_equal(e, alg.unit):
            continue
        eq = set_product(alg, Subspace.span(e, alg.p, alg.dim), q)
        one_minus_e = (alg.unit - e) % alg.p
        qf = set_product(alg, q, Subspace.span(one_minus_e, alg.p, alg.dim))
        out.append(IdempotentEntry(e, set_product(alg, eq, qf), eq))
    return out
