import numpy as np
import pytest

from zeroprod.algebra import mat_algebra, multiply, validate
from zeroprod.classify import classify_max_zero_product
from zeroprod.exceptions import DimensionMismatch
from zeroprod.geometry import (
    DualPair,
    dual_pair_algebra,
    dual_pair_classification,
    dual_pair_map,
    dual_product,
    perp,
    pure_tensor,
    subspace_to_matrix,
    tensor_to_matrix,
)
from zeroprod.linalg import Subspace, enumerate_subspaces, rank

from conftest import unit

# invertible, non-symmetric pairings
G2_3 = np.array([[1, 2], [0, 1]])
G3_2 = np.array([[1, 1, 0], [0, 1, 1], [1, 1, 1]])


def pairings():
    return [
        DualPair.standard(2, 2),
        DualPair.standard(3, 2),
        DualPair.standard(2, 5),
        DualPair(2, 3, G2_3),
        DualPair(3, 2, G3_2),
    ]


def test_perp_examples():
    dp = DualPair.standard(2, 2)
    e1 = Subspace.span([[1, 0]], 2, 2)
    assert perp(dp, e1) == Subspace.span([[0, 1]], 2, 2)
    assert perp(dp, Subspace.zero(2, 2)).is_full()


def test_perp_matches_pairing_by_brute_force():
    dp = DualPair(2, 3, G2_3)
    w = Subspace.span([[1, 1]], 3, 2)
    xs = [np.array([a, b]) for a in range(3) for b in range(3)]
    brute = Subspace.span(np.array([x for x in xs if dp.pair(x, w.basis[0]) == 0]), 3, 2)
    assert perp(dp, w, "Y") == brute
    brute_x = Subspace.span(np.array([y for y in xs if dp.pair(w.basis[0], y) == 0]), 3, 2)
    assert perp(dp, w, "X") == brute_x


@pytest.mark.parametrize("dp", pairings(), ids=lambda d: f"n{d.n}p{d.p}")
def test_double_perp_is_identity(dp):
    for w in enumerate_subspaces(dp.n, dp.p):
        assert perp(dp, perp(dp, w, "Y"), "X") == w
        assert perp(dp, perp(dp, w, "X"), "Y") == w
        assert perp(dp, w, "Y").dim == dp.n - w.dim


def test_dual_product_example():
    dp = DualPair.standard(2, 2)
    e1, e2 = np.array([1, 0]), np.array([0, 1])
    got = dual_product(dp, pure_tensor(dp, e1, e2), pure_tensor(dp, e2, e1))
    assert (got == pure_tensor(dp, e1, e1)).all()


@pytest.mark.parametrize("dp", pairings(), ids=lambda d: f"n{d.n}p{d.p}")
def test_dual_product_formula_on_pure_tensors(dp):
    rng = np.random.default_rng(2)
    for _ in range(30):
        y1, x1, y2, x2 = rng.integers(0, dp.p, size=(4, dp.n))
        expected = pure_tensor(dp, y1, dp.pair(x1, y2) * x2)
        assert (dual_product(dp, pure_tensor(dp, y1, x1), pure_tensor(dp, y2, x2)) == expected).all()


@pytest.mark.parametrize("dp", pairings(), ids=lambda d: f"n{d.n}p{d.p}")
def test_canonical_isomorphism_is_multiplicative(dp):
    alg = dual_pair_algebra(dp)
    assert validate(alg).ok
    rng = np.random.default_rng(4)
    for _ in range(30):
        a, b = rng.integers(0, dp.p, size=(2, dp.n * dp.n))
        prod = multiply(alg, a, b)
        assert (prod.reshape(dp.n, dp.n) == dual_product(dp, a, b)).all()
        lhs = tensor_to_matrix(dp, prod)
        rhs = tensor_to_matrix(dp, a) @ tensor_to_matrix(dp, b) % dp.p
        assert (lhs == rhs).all()
    images = np.array([tensor_to_matrix(dp, e).reshape(-1) for e in np.eye(dp.n * dp.n, dtype=np.int64)])
    assert rank(images, dp.p) == dp.n * dp.n


def test_first_line_maps_to_e12():
    dp = DualPair.standard(2, 2)
    s = dual_pair_map(dp, Subspace.span([[1, 0]], 2, 2))
    assert subspace_to_matrix(dp, s) == Subspace.span([unit(2, 1, 2)], 2, 4)


@pytest.mark.parametrize("n, p, count", [(2, 2, 3), (3, 2, 14), (2, 5, 6)])
def test_classification_counts_and_dims(n, p, count):
    dp = DualPair.standard(n, p)
    out = dual_pair_classification(dp)
    assert len(out) == len(set(out)) == count
    ws = list(enumerate_subspaces(n, p, dims=range(1, n)))
    assert [s.dim for s in out] == [w.dim * (n - w.dim) for w in ws]


@pytest.mark.parametrize("dp", pairings(), ids=lambda d: f"n{d.n}p{d.p}")
def test_image_matches_classifier(dp):
    report = classify_max_zero_product(mat_algebra(dp.n, dp.p), oracle="none")
    image = {subspace_to_matrix(dp, s) for s in dual_pair_classification(dp)}
    assert image == set(report.subspaces())


def test_classifier_on_tensor_algebra_directly():
    # generic path: the tensor algebra with a non-standard pairing is not tagged as a matrix algebra
    dp = DualPair(2, 3, G2_3)
    alg = dual_pair_algebra(dp)
    report = classify_max_zero_product(alg)
    assert report.oracle.agrees
    assert set(report.subspaces()) == set(dual_pair_classification(dp))


def test_errors():
    with pytest.raises(ValueError):
        DualPair(2, 2, [[1, 1], [1, 1]])
    with pytest.raises(DimensionMismatch):
        DualPair(2, 2, np.eye(3, dtype=int))
    with pytest.raises(ValueError):
        dual_pair_classification(DualPair.standard(1, 2))
    with pytest.raises(DimensionMismatch):
        perp(DualPair.standard(2, 2), Subspace.zero(3, 2))
    with pytest.raises(ValueError):
        perp(DualPair.standard(2, 2), Subspace.zero(2, 2), side="Z")
