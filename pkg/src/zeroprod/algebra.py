"""Finite-dimensional associative algebras given by structure constants.

An algebra of dimension ``d`` over GF(p) is stored as a dense ``(d, d, d)``
array ``table`` with ``table[i, j, k]`` the coefficient of basis vector ``k``
in the product ``e_i * e_j``.  Elements are coordinate vectors (1-d int
arrays of length ``d``); sets of elements are :class:`~zeroprod.linalg.Subspace`
instances of GF(p)^d.

The element-exhaustive predicates (semiprime, prime, core, simplicity,
idempotents, square-zero witnesses) sweep all ``p**d`` elements and refuse
with :class:`~zeroprod.exceptions.BudgetExceeded` past ``budget``.
"""

from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .exceptions import AlgebraValidationError, BudgetExceeded, DimensionMismatch
from .linalg import Subspace, as_matrix, check_modulus, kernel

DEFAULT_ELEMENT_BUDGET = 2**20
MAX_DIM = 16
_CHUNK = 4096


class IdealSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


class PredicateResult(NamedTuple):
    """Outcome of a ring predicate with an optional element witness."""

    holds: bool
    witness: np.ndarray | None = None

    def __bool__(self) -> bool:
        return self.holds


class Algebra:
    """Associative algebra over GF(p) with a dense multiplication table.

    The constructor only normalises shapes and residues; call
    :func:`validate` (or use :func:`from_json`) to check the axioms.
    """

    def __init__(
        self,
        p: int,
        table,
        basis_names: Sequence[str] | None = None,
        unit=None,
        name: str = "",
    ):
        self.p = check_modulus(p)
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 3 or not (t.shape[0] == t.shape[1] == t.shape[2]):
            raise AlgebraValidationError(f"table must have shape (d, d, d), got {t.shape}")
        self.table = t % self.p
        self.table.flags.writeable = False
        self.dim = t.shape[0]
        if basis_names is None:
            basis_names = [f"b{i}" for i in range(self.dim)]
        self.basis_names = tuple(str(s) for s in basis_names)
        if len(self.basis_names) != self.dim:
            raise AlgebraValidationError(
                f"{len(self.basis_names)} basis names for dimension {self.dim}"
            )
        if unit is not None:
            unit = np.asarray(unit, dtype=np.int64) % self.p
            if unit.shape != (self.dim,):
                raise AlgebraValidationError(f"unit must have length {self.dim}")
            unit.flags.writeable = False
        self.unit = unit
        self.name = name

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        same_unit = (self.unit is None and other.unit is None) or (
            self.unit is not None
            and other.unit is not None
            and np.array_equal(self.unit, other.unit)
        )
        return (
            self.p == other.p
            and self.basis_names == other.basis_names
            and np.array_equal(self.table, other.table)
            and same_unit
        )

    def __hash__(self) -> int:
        return hash((self.p, self.dim, self.table.tobytes()))

    def __repr__(self) -> str:
        label = self.name or "algebra"
        return f"<Algebra {label}: dim {self.dim} over GF({self.p})>"

    @property
    def n_elements(self) -> int:
        return self.p**self.dim

    def element(self, coords) -> np.ndarray:
        v = np.asarray(coords, dtype=np.int64) % self.p
        if v.shape != (self.dim,):
            raise DimensionMismatch(f"element needs {self.dim} coordinates, got {v.shape}")
        return v

    def basis_vector(self, i: int | str) -> np.ndarray:
        if isinstance(i, str):
            i = self.basis_names.index(i)
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim, self.p)

    def full(self) -> Subspace:
        return Subspace.full(self.dim, self.p)

    def span(self, *vectors) -> Subspace:
        rows = [self.basis_vector(v) if isinstance(v, (str, int)) else self.element(v) for v in vectors]
        return Subspace.span(np.array(rows).reshape(-1, self.dim), self.p, self.dim)

    def check_subspace(self, s: Subspace) -> None:
        if s.p != self.p or s.ambient_dim != self.dim:
            raise DimensionMismatch(f"subspace of GF({s.p})^{s.ambient_dim} in {self!r}")

    def format_element(self, v) -> str:
        """Render coordinates as a linear combination of basis names."""
        v = self.element(v)
        terms = []
        for c, nm in zip(v, self.basis_names):
            if c == 0:
                continue
            terms.append(nm if c == 1 else f"{int(c)}*{nm}")
        return " + ".join(terms) if terms else "0"


def multiply(alg: Algebra, a, b) -> np.ndarray:
    a = alg.element(a)
    b = alg.element(b)
    return np.einsum("i,j,ijk->k", a, b, alg.table) % alg.p


def pairwise_products(alg: Algebra, xs, ys) -> np.ndarray:
    """All products ``x * y`` for rows x of ``xs`` and y of ``ys``, shape (|xs|, |ys|, d)."""
    xs = as_matrix(xs, alg.p, alg.dim)
    ys = as_matrix(ys, alg.p, alg.dim)
    return np.einsum("ai,bj,ijk->abk", xs, ys, alg.table) % alg.p


def set_product(alg: Algebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of all products ``x * y`` with x in ``a`` and y in ``b``."""
    alg.check_subspace(a)
    alg.check_subspace(b)
    prods = pairwise_products(alg, a.basis, b.basis)
    return Subspace.span(prods.reshape(-1, alg.dim), alg.p, alg.dim)


def squares(alg: Algebra, xs) -> np.ndarray:
    xs = as_matrix(xs, alg.p, alg.dim)
    return np.einsum("ni,nj,ijk->nk", xs, xs, alg.table) % alg.p


def left_multiplication_matrix(alg: Algebra, a) -> np.ndarray:
    """Matrix M with ``a * x = x @ M`` (rows indexed by the basis of x)."""
    return np.einsum("i,ijk->jk", alg.element(a), alg.table) % alg.p


def right_multiplication_matrix(alg: Algebra, a) -> np.ndarray:
    """Matrix M with ``x * a = x @ M``."""
    return np.einsum("j,ijk->ik", alg.element(a), alg.table) % alg.p


def left_annihilator(alg: Algebra, s: Subspace) -> Subspace:
    """``{a : a * x = 0 for all x in s}`` as one stacked kernel."""
    alg.check_subspace(s)
    if s.is_zero():
        return alg.full()
    # a * x = a @ R_x; stack the transposed right-multiplication matrices
    system = np.vstack([right_multiplication_matrix(alg, x).T for x in s.basis])
    return kernel(system, alg.p, alg.dim)


def right_annihilator(alg: Algebra, s: Subspace) -> Subspace:
    """``{a : x * a = 0 for all x in s}``."""
    alg.check_subspace(s)
    if s.is_zero():
        return alg.full()
    system = np.vstack([left_multiplication_matrix(alg, x).T for x in s.basis])
    return kernel(system, alg.p, alg.dim)


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    ok: bool = True
    errors: list[str] = field(default_factory=list)
    violation: tuple | None = None

    def fail(self, msg: str, where: tuple | None = None) -> None:
        self.ok = False
        self.errors.append(msg)
        if self.violation is None and where is not None:
            self.violation = where


def validate(alg: Algebra) -> ValidationReport:
    """Check associativity on all basis triples and the unit axioms."""
    report = ValidationReport()
    if alg.dim > MAX_DIM:
        report.fail(f"dimension {alg.dim} exceeds {MAX_DIM}")
        return report
    t = alg.table
    lhs = np.einsum("ijm,mkl->ijkl", t, t) % alg.p
    rhs = np.einsum("jkm,iml->ijkl", t, t) % alg.p
    bad = np.argwhere((lhs != rhs).any(axis=3))
    if bad.size:
        i, j, k = (int(x) for x in bad[0])
        names = alg.basis_names
        report.fail(
            f"associativity fails at ({names[i]}, {names[j]}, {names[k]}) "
            f"[indices ({i}, {j}, {k})]; {len(bad)} violating triples",
            ("associativity", i, j, k),
        )
    if alg.unit is not None:
        eye = np.eye(alg.dim, dtype=np.int64)
        left = np.einsum("a,aik->ik", alg.unit, t) % alg.p
        right = np.einsum("a,iak->ik", alg.unit, t) % alg.p
        for side, prod in (("left", left), ("right", right)):
            rows = np.flatnonzero((prod != eye).any(axis=1))
            if rows.size:
                i = int(rows[0])
                report.fail(
                    f"unit fails as {side} identity on {alg.basis_names[i]} [index {i}]",
                    ("unit", side, i),
                )
    return report


# ---------------------------------------------------------------------------
# ideals


def is_ideal(alg: Algebra, s: Subspace, side: IdealSide) -> bool:
    alg.check_subspace(s)
    q = alg.full()
    if side in (IdealSide.RIGHT, IdealSide.TWO_SIDED):
        if not s.contains(set_product(alg, s, q)):
            return False
    if side in (IdealSide.LEFT, IdealSide.TWO_SIDED):
        if not s.contains(set_product(alg, q, s)):
            return False
    return True


def ideal_closure(alg: Algebra, gen: Subspace, side: IdealSide) -> Subspace:
    """Smallest ideal of the given side containing ``gen``."""
    alg.check_subspace(gen)
    d, t = alg.dim, alg.table
    right = side in (IdealSide.RIGHT, IdealSide.TWO_SIDED)
    left = side in (IdealSide.LEFT, IdealSide.TWO_SIDED)
    current = gen
    while True:
        xs = current.basis
        parts = [xs]
        if right:
            parts.append(np.einsum("ai,ijk->ajk", xs, t).reshape(-1, d))
        if left:
            parts.append(np.einsum("aj,ijk->aik", xs, t).reshape(-1, d))
        grown = Subspace.span(np.vstack(parts), alg.p, d)
        if grown == current:
            return current
        current = grown


# ---------------------------------------------------------------------------
# element sweeps


def _check_budget(alg: Algebra, count: int, budget: int | None) -> None:
    budget = DEFAULT_ELEMENT_BUDGET if budget is None else budget
    if count > budget:
        raise BudgetExceeded(f"elements of {alg!r}", count, budget)


def all_elements(alg: Algebra, budget: int | None = None) -> np.ndarray:
    """Every element, shape (p**d, d).

    Coordinate 0 varies fastest, so basis vectors appear in basis order
    before any of their combinations.
    """
    _check_budget(alg, alg.n_elements, budget)
    idx = np.arange(alg.n_elements, dtype=np.int64)
    powers = alg.p ** np.arange(alg.dim, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % alg.p


def projective_points(alg: Algebra, budget: int | None = None) -> np.ndarray:
    """One nonzero representative per line: lowest nonzero coordinate equal to 1."""
    xs = all_elements(alg, budget)[1:]
    first = xs[np.arange(len(xs)), (xs != 0).argmax(axis=1)]
    return xs[first == 1]


def _chunks(xs: np.ndarray) -> Iterator[np.ndarray]:
    for start in range(0, len(xs), _CHUNK):
        yield xs[start : start + _CHUNK]


def is_semiprime(alg: Algebra, budget: int | None = None) -> PredicateResult:
    """No nonzero ``a`` with ``a Q a = 0``; witness is the first such ``a``."""
    t = alg.table
    for xs in _chunks(projective_points(alg, budget)):
        ae = np.einsum("ni,ijk->njk", xs, t) % alg.p
        aea = np.einsum("njk,nl,klm->njm", ae, xs, t) % alg.p
        dead = np.flatnonzero(~aea.reshape(len(xs), -1).any(axis=1))
        if dead.size:
            return PredicateResult(False, xs[dead[0]].copy())
    return PredicateResult(True)


@functools.lru_cache(maxsize=32)
def _principal_ideals(alg: Algebra) -> tuple[tuple[np.ndarray, Subspace], ...]:
    return tuple(
        (a, ideal_closure(alg, Subspace.span(a, alg.p, alg.dim), IdealSide.TWO_SIDED))
        for a in projective_points(alg, alg.n_elements)
    )


def principal_ideals(alg: Algebra, budget: int | None = None) -> list[tuple[np.ndarray, Subspace]]:
    """``(a, ideal generated by a)`` for one representative of every line."""
    _check_budget(alg, alg.n_elements, budget)
    return list(_principal_ideals(alg))


def is_prime(alg: Algebra, budget: int | None = None) -> PredicateResult:
    """``lann(I) = 0`` for every nonzero ideal I, checked on principal ideals."""
    if alg.dim == 0:
        return PredicateResult(False)
    for a, ideal in principal_ideals(alg, budget):
        if not left_annihilator(alg, ideal).is_zero():
            return PredicateResult(False, a.copy())
    return PredicateResult(True)


def core(alg: Algebra, budget: int | None = None) -> Subspace:
    """Intersection of all nonzero two-sided ideals."""
    result = alg.full()
    for _, ideal in principal_ideals(alg, budget):
        result = result.intersect(ideal)
        if result.is_zero():
            break
    return result


def is_simple(alg: Algebra, budget: int | None = None) -> bool:
    q = alg.full()
    if set_product(alg, q, q).is_zero():
        return False
    return all(ideal == q for _, ideal in principal_ideals(alg, budget))


def enumerate_idempotents(alg: Algebra, budget: int | None = None) -> list[np.ndarray]:
    """All ``e`` with ``e * e = e``, zero included, in sweep order."""
    found = []
    for xs in _chunks(all_elements(alg, budget)):
        hit = (squares(alg, xs) == xs).all(axis=1)
        found.extend(x.copy() for x in xs[hit])
    return found


def has_nonzero_nilpotent(alg: Algebra, budget: int | None = None) -> PredicateResult:
    """Is there a nonzero ``a`` with ``a * a = 0``?  Witness is the first one."""
    for xs in _chunks(projective_points(alg, budget)):
        hit = np.flatnonzero(~squares(alg, xs).any(axis=1))
        if hit.size:
            return PredicateResult(True, xs[hit[0]].copy())
    return PredicateResult(False)


def square_zero_elements(alg: Algebra, budget: int | None = None) -> np.ndarray:
    """Every ``a`` (zero included) with ``a * a = 0``."""
    out = [xs[~squares(alg, xs).any(axis=1)] for xs in _chunks(all_elements(alg, budget))]
    return np.vstack(out)


# ---------------------------------------------------------------------------
# constructors


def _unit_name(i: int, j: int, n: int) -> str:
    return f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1},{j + 1}"


def mat_algebra(n: int, p: int) -> Algebra:
    """Full matrix algebra M_n(GF(p)) on the matrix units, row-major."""
    if n < 1:
        raise ValueError("n must be positive")
    d = n * n
    t = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                # E_ij E_jl = E_il
                t[i * n + j, j * n + l, i * n + l] = 1
    names = [_unit_name(i, j, n) for i in range(n) for j in range(n)]
    unit = np.eye(n, dtype=np.int64).reshape(-1)
    return Algebra(p, t, names, unit, name=f"mat:{n}:{p}")


def upper_triangular(n: int, p: int) -> Algebra:
    """Upper-triangular n x n matrices on the units E_ij, i <= j."""
    if n < 1:
        raise ValueError("n must be positive")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {ij: k for k, ij in enumerate(pairs)}
    d = len(pairs)
    t = np.zeros((d, d, d), dtype=np.int64)
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if j == k:
                t[a, b, index[(i, l)]] = 1
    unit = np.array([int(i == j) for i, j in pairs], dtype=np.int64)
    names = [_unit_name(i, j, n) for i, j in pairs]
    return Algebra(p, t, names, unit, name=f"ut:{n}:{p}")


def diagonal_algebra(n: int, p: int) -> Algebra:
    """GF(p)^n with coordinatewise product."""
    t = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        t[i, i, i] = 1
    return Algebra(p, t, [f"E{i + 1}{i + 1}" for i in range(n)], np.ones(n, dtype=np.int64), name=f"diag:{n}:{p}")


def field_algebra(p: int) -> Algebra:
    """GF(p) as a one-dimensional algebra over itself."""
    return Algebra(p, [[[1]]], ["1"], [1], name=f"field:{p}")


def zero_algebra(d: int, p: int) -> Algebra:
    """d-dimensional algebra with identically zero product."""
    return Algebra(p, np.zeros((d, d, d), dtype=np.int64), [f"z{i + 1}" for i in range(d)], None, name=f"zero:{d}:{p}")


@functools.lru_cache(maxsize=32)
def matrix_size(alg: Algebra) -> int | None:
    """``n`` if the table is exactly that of ``mat_algebra(n, p)``, else None.

    Basis names are ignored; only structure constants count.
    """
    n = int(round(alg.dim**0.5))
    if n < 1 or n * n != alg.dim:
        return None
    if np.array_equal(alg.table, mat_algebra(n, alg.p).table):
        return n
    return None


def to_matrix(alg: Algebra, v) -> np.ndarray:
    n = matrix_size(alg)
    if n is None:
        raise ValueError(f"{alg!r} is not a matrix algebra on matrix units")
    return alg.element(v).reshape(n, n)


def from_matrix(alg: Algebra, m) -> np.ndarray:
    n = matrix_size(alg)
    if n is None:
        raise ValueError(f"{alg!r} is not a matrix algebra on matrix units")
    return alg.element(np.asarray(m, dtype=np.int64).reshape(-1))


BUILTINS = {
    "mat": lambda n, p: mat_algebra(n, p),
    "ut": lambda n, p: upper_triangular(n, p),
    "diag": lambda n, p: diagonal_algebra(n, p),
    "zero": lambda n, p: zero_algebra(n, p),
}


def from_spec(spec: str) -> Algebra:
    """Build an algebra from ``"mat:n:p"``, ``"ut:n:p"``, ``"diag:n:p"``,
    ``"zero:d:p"`` or ``"field:p"``."""
    parts = spec.split(":")
    try:
        if parts[0] == "field" and len(parts) == 2:
            return field_algebra(int(parts[1]))
        if parts[0] in BUILTINS and len(parts) == 3:
            return BUILTINS[parts[0]](int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise AlgebraValidationError(f"bad builtin spec {spec!r}: {exc}") from exc
    raise AlgebraValidationError(f"unknown builtin spec {spec!r}")


# ---------------------------------------------------------------------------
# JSON


def to_dict(alg: Algebra) -> dict:
    out = {
        "p": alg.p,
        "dim": alg.dim,
        "basis_names": list(alg.basis_names),
        "table": alg.table.tolist(),
        "unit": None if alg.unit is None else alg.unit.tolist(),
    }
    if alg.name:
        out["name"] = alg.name
    return out


def to_json(alg: Algebra, indent: int | None = None) -> str:
    return json.dumps(to_dict(alg), indent=indent)


def from_dict(data: dict) -> Algebra:
    if not isinstance(data, dict):
        raise AlgebraValidationError("algebra JSON must be an object")
    missing = {"p", "dim", "basis_names", "table"} - data.keys()
    if missing:
        raise AlgebraValidationError(f"missing keys: {sorted(missing)}")
    p, d = data["p"], data["dim"]
    if not isinstance(p, int) or not isinstance(d, int) or d < 1:
        raise AlgebraValidationError("p and dim must be integers, dim >= 1")
    if d > MAX_DIM:
        raise AlgebraValidationError(f"dim {d} exceeds {MAX_DIM}")
    try:
        table = np.array(data["table"], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise AlgebraValidationError(f"table is not an integer array: {exc}") from exc
    if table.shape != (d, d, d):
        raise AlgebraValidationError(f"table shape {table.shape} != ({d}, {d}, {d})")
    try:
        alg = Algebra(p, table, data["basis_names"], data.get("unit"), name=data.get("name", ""))
    except ValueError as exc:
        raise AlgebraValidationError(str(exc)) from exc
    report = validate(alg)
    if not report.ok:
        raise AlgebraValidationError("; ".join(report.errors))
    return alg


def from_json(text: str) -> Algebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraValidationError(f"malformed JSON: {exc}") from exc
    return from_dict(data)
