import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroprod.algebra import (
    Algebra,
    IdealSide,
    all_elements,
    core,
    diagonal_algebra,
    enumerate_idempotents,
    field_algebra,
    from_json,
    from_spec,
    has_nonzero_nilpotent,
    ideal_closure,
    is_ideal,
    is_prime,
    is_semiprime,
    is_simple,
    left_annihilator,
    mat_algebra,
    matrix_size,
    multiply,
    projective_points,
    right_annihilator,
    set_product,
    to_json,
    upper_triangular,
    validate,
    zero_algebra,
)
from zeroprod.exceptions import AlgebraValidationError, BudgetExceeded, DimensionMismatch
from zeroprod.linalg import Subspace

from conftest import mat_coords, unit

FIXTURES = [
    mat_algebra(1, 2),
    mat_algebra(2, 2),
    mat_algebra(2, 3),
    upper_triangular(2, 2),
    upper_triangular(3, 2),
    diagonal_algebra(2, 2),
    diagonal_algebra(3, 3),
    field_algebra(3),
    zero_algebra(2, 2),
]


def all_matrices(n, p):
    for entries in itertools.product(range(p), repeat=n * n):
        yield np.array(entries, dtype=np.int64).reshape(n, n)


# -- multiplication ---------------------------------------------------------


def test_matrix_unit_products(m22):
    assert (multiply(m22, unit(2, 1, 1), unit(2, 1, 2)) == unit(2, 1, 2)).all()
    assert not multiply(m22, unit(2, 1, 2), unit(2, 1, 2)).any()


@pytest.mark.parametrize("n, p", [(2, 2), (2, 5), (3, 3)])
def test_multiply_agrees_with_matrix_product(n, p):
    alg = mat_algebra(n, p)
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = rng.integers(0, p, size=(n, n))
        b = rng.integers(0, p, size=(n, n))
        assert (multiply(alg, mat_coords(a), mat_coords(b)) == mat_coords(a @ b % p)).all()


def test_set_product_examples(m22):
    e12 = m22.span(unit(2, 1, 2))
    assert set_product(m22, e12, e12).is_zero()
    left = m22.span(unit(2, 1, 2), unit(2, 2, 2))
    right = m22.span(unit(2, 1, 1), unit(2, 1, 2))
    assert set_product(m22, left, right).is_zero()


def test_parent_mismatch(m22, m23):
    with pytest.raises(DimensionMismatch):
        set_product(m22, m23.full(), m23.full())
    with pytest.raises(DimensionMismatch):
        multiply(m22, [1, 0, 0], [1, 0, 0])


# -- validation -------------------------------------------------------------


@pytest.mark.parametrize("alg", FIXTURES, ids=repr)
def test_constructors_validate(alg):
    report = validate(alg)
    assert report.ok, report.errors


def test_perturbed_table_names_a_triple(m22):
    t = m22.table.copy()
    t[1, 1, 0] = 1  # E12*E12 := E11
    report = validate(Algebra(2, t, m22.basis_names, m22.unit))
    assert not report.ok
    assert report.violation[0] == "associativity"
    assert "associativity fails at" in report.errors[0]


def test_bad_unit_reported(m22):
    report = validate(Algebra(2, m22.table, m22.basis_names, unit(2, 1, 1)))
    assert not report.ok
    assert report.violation[0] == "unit"


# -- ideals -----------------------------------------------------------------


def test_right_ideal_of_e12(m22):
    got = ideal_closure(m22, m22.span(unit(2, 1, 2)), IdealSide.RIGHT)
    assert got == m22.span(unit(2, 1, 1), unit(2, 1, 2))


def test_two_sided_ideal_of_e12_is_everything(m22):
    assert ideal_closure(m22, m22.span(unit(2, 1, 2)), IdealSide.TWO_SIDED).is_full()


def test_two_sided_ideal_in_upper_triangular(ut22):
    e12 = ut22.span("E12")
    assert ideal_closure(ut22, e12, IdealSide.TWO_SIDED) == e12


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_ideal_closure_idempotent_and_monotone(data):
    alg = data.draw(st.sampled_from([mat_algebra(2, 3), upper_triangular(3, 2), diagonal_algebra(3, 2)]))
    side = data.draw(st.sampled_from(list(IdealSide)))
    rows = data.draw(st.lists(st.lists(st.integers(0, alg.p - 1), min_size=alg.dim, max_size=alg.dim), max_size=3))
    a = Subspace.span(np.array(rows, dtype=np.int64).reshape(-1, alg.dim), alg.p, alg.dim)
    extra = data.draw(st.lists(st.integers(0, alg.p - 1), min_size=alg.dim, max_size=alg.dim))
    b = a.sum(Subspace.span(extra, alg.p, alg.dim))
    ca, cb = ideal_closure(alg, a, side), ideal_closure(alg, b, side)
    assert ideal_closure(alg, ca, side) == ca
    assert ca.contains(a)
    assert is_ideal(alg, ca, side)
    assert cb.contains(ca)


# -- predicates -------------------------------------------------------------


def test_semiprime_examples(m22, ut22):
    assert is_semiprime(m22).holds
    res = is_semiprime(ut22)
    assert not res.holds
    assert ut22.format_element(res.witness) == "E12"
    z = zero_algebra(1, 2)
    res = is_semiprime(z)
    assert not res.holds and (res.witness == [1]).all()


def test_prime_examples(m23, ut22):
    assert is_prime(m23).holds
    assert not is_prime(ut22).holds
    assert not is_prime(diagonal_algebra(2, 2)).holds


def test_core_examples(m22, ut22):
    assert core(m22).is_full()
    assert core(ut22) == ut22.span("E12")
    assert core(diagonal_algebra(2, 2)).is_zero()


def test_simple_examples():
    for n, p in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        assert is_simple(mat_algebra(n, p))
    assert not is_simple(upper_triangular(2, 2))
    assert not is_simple(zero_algebra(2, 3))


def test_core_by_brute_force_over_all_ideals():
    # intersection over every nonzero two-sided ideal, found by sweeping subspaces
    from zeroprod.linalg import enumerate_subspaces

    for alg in [upper_triangular(2, 2), diagonal_algebra(2, 3), mat_algebra(2, 2)]:
        result = alg.full()
        for s in enumerate_subspaces(alg.dim, alg.p, dims=range(1, alg.dim + 1)):
            if is_ideal(alg, s, IdealSide.TWO_SIDED):
                result = result.intersect(s)
        assert core(alg) == result


@pytest.mark.parametrize("alg", FIXTURES, ids=repr)
def test_predicate_implications(alg):
    simple = is_simple(alg)
    prime = is_prime(alg).holds
    semi = is_semiprime(alg).holds
    assert not simple or prime
    assert not prime or semi
    if simple:
        assert core(alg).is_full()


@pytest.mark.parametrize("alg", [a for a in FIXTURES if is_semiprime(a).holds], ids=repr)
def test_semiprime_annihilators_of_ideals(alg):
    from zeroprod.algebra import principal_ideals

    for _, ideal in principal_ideals(alg):
        la, ra = left_annihilator(alg, ideal), right_annihilator(alg, ideal)
        assert la == ra
        assert ideal.intersect(ra).is_zero()


# -- idempotents and nilpotents ---------------------------------------------


@pytest.mark.parametrize("n, p, total", [(2, 2, 8), (2, 3, 14)])
def test_idempotent_counts_against_matrix_brute_force(n, p, total):
    alg = mat_algebra(n, p)
    brute = {tuple(mat_coords(m)) for m in all_matrices(n, p) if ((m @ m - m) % p == 0).all()}
    got = {tuple(int(x) for x in e) for e in enumerate_idempotents(alg)}
    assert got == brute
    assert len(got) == total == 2 + p * p + p


def test_nilpotent_witness(m22, m23):
    res = has_nonzero_nilpotent(m22)
    assert res.holds and m22.format_element(res.witness) == "E12"
    assert m23.format_element(has_nonzero_nilpotent(m23).witness) == "E12"


def test_field_has_only_trivial_idempotents():
    f = field_algebra(3)
    assert [int(e[0]) for e in enumerate_idempotents(f)] == [0, 1]
    assert not has_nonzero_nilpotent(f).holds


def test_element_budget_refuses():
    with pytest.raises(BudgetExceeded) as info:
        is_semiprime(mat_algebra(3, 3), budget=1000)
    assert info.value.count == 3**9


def test_projective_points_cover_each_line_once(m23):
    pts = projective_points(m23)
    assert len(pts) == (3**4 - 1) // 2
    lines = {Subspace.span(v, 3, 4) for v in pts}
    assert len(lines) == len(pts)


def test_all_elements_order():
    xs = all_elements(mat_algebra(1, 3))
    assert xs[:, 0].tolist() == [0, 1, 2]


# -- constructors and JSON --------------------------------------------------


def test_constructor_shapes():
    m = mat_algebra(2, 2)
    assert m.dim == 4 and m.unit is not None and is_simple(m)
    u = upper_triangular(2, 2)
    assert u.dim == 3 and u.unit is not None
    assert not is_semiprime(u).holds


def test_json_round_trip(m23):
    back = from_json(to_json(m23))
    assert back == m23
    assert matrix_size(back) == 2


def test_json_reduces_mod_p():
    data = json.loads(to_json(mat_algebra(1, 3)))
    data["table"] = [[[4]]]
    data["unit"] = [7]
    alg = from_json(json.dumps(data))
    assert alg.table[0, 0, 0] == 1 and alg.unit[0] == 1


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        "[]",
        json.dumps({"p": 4, "dim": 1, "basis_names": ["a"], "table": [[[1]]], "unit": None}),
        json.dumps({"p": 2, "dim": 2, "basis_names": ["a", "b"], "table": [[[1]]], "unit": None}),
        json.dumps({"p": 2, "dim": 1, "basis_names": ["a"], "table": [[[1]]], "unit": [0]}),
        json.dumps({"p": 2, "dim": 1, "table": [[[1]]]}),
    ],
)
def test_json_rejects_bad_input(text):
    with pytest.raises(AlgebraValidationError):
        from_json(text)


def test_from_spec():
    assert from_spec("mat:2:3") == mat_algebra(2, 3)
    assert from_spec("ut:2:2") == upper_triangular(2, 2)
    with pytest.raises(AlgebraValidationError):
        from_spec("mat:2:4")
    with pytest.raises(AlgebraValidationError):
        from_spec("nope:1:2")


def test_matrix_size_detection():
    assert matrix_size(mat_algebra(3, 2)) == 3
    assert matrix_size(upper_triangular(2, 2)) is None
    assert matrix_size(diagonal_algebra(4, 2)) is None
