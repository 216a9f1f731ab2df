import pytest

from blockweights.errors import ConfigurationError, UnsupportedModeError
from blockweights.oracle import (
    TinyField,
    conjugacy_class_reps,
    cross_check,
    element_order,
    ell_regular_class_count,
    enumerate_matrix_group,
    generating_set,
    group_order,
    mat_det,
    mat_identity,
    mat_inv,
    mat_mul,
)


def test_field_axioms_and_frobenius():
    for q in (2, 3, 4, 5, 7, 9, 25, 49):
        F = TinyField(q)
        assert F.q == q
        fixed = [a for a in range(q) if F.frob[a] == a]
        assert len(fixed) == F.p
        for a in range(1, q):
            assert F.mul[a * q + F.inv[a]] == 1


def test_field_power():
    F = TinyField(9)
    for a in range(1, 9):
        assert F.power(a, 8) == 1
        acc = 1
        for k in range(5):
            assert F.power(a, k) == acc
            acc = F.mul[acc * 9 + a]


def test_matrix_helpers():
    F = TinyField(5)
    eye = mat_identity(2)
    a = (1, 2, 3, 4)
    b = (2, 0, 1, 3)
    assert mat_mul(F, a, eye, 2) == a
    prod_det = mat_det(F, mat_mul(F, a, b, 2), 2)
    assert prod_det == F.mul[mat_det(F, a, 2) * 5 + mat_det(F, b, 2)]
    inv = mat_inv(F, a, 2)
    assert mat_mul(F, a, inv, 2) == eye


def test_group_order_formulas():
    assert group_order("GL", 2, 5) == 480
    assert group_order("SL", 2, 5) == 120
    assert group_order("GU", 2, 2) == 18
    assert group_order("GL", 2, 3) == 48
    assert group_order("SU", 2, 3) == 24
    assert group_order("GU", 3, 2) == 648
    assert group_order("GL", 3, 2) == 168


def test_enumeration_matches_order():
    for kind, n, q in [("GL", 2, 3), ("SL", 2, 5), ("GU", 2, 2), ("SU", 2, 3), ("GL", 1, 7)]:
        F, elems = enumerate_matrix_group(kind, n, q)
        assert len(elems) == group_order(kind, n, q)
        assert len(set(elems)) == len(elems)


def test_su_is_det_one_inside_gu():
    F, gu = enumerate_matrix_group("GU", 2, 3)
    _, su = enumerate_matrix_group("SU", 2, 3)
    filtered = [x for x in gu if mat_det(F, x, 2) == 1]
    assert sorted(filtered) == sorted(su)


def test_enumeration_refuses_out_of_scope():
    with pytest.raises(UnsupportedModeError):
        enumerate_matrix_group("GL", 3, 5)
    with pytest.raises(UnsupportedModeError):
        enumerate_matrix_group("GL", 4, 2)
    with pytest.raises(UnsupportedModeError):
        enumerate_matrix_group("GU", 2, 4)


def test_element_order_basics():
    F, elems = enumerate_matrix_group("SL", 2, 3)
    eye = mat_identity(2)
    assert element_order(F, 2, eye) == 1
    order = len(elems)
    for x in elems[:8]:
        assert order % element_order(F, 2, x) == 0


def test_class_counts_known():
    for kind, n, q, classes in [("GL", 2, 3, 8), ("SL", 2, 5, 9), ("GU", 2, 2, 9), ("GL", 2, 5, 24)]:
        F, elems = enumerate_matrix_group(kind, n, q)
        gens = generating_set(F, n, elems)
        reps = conjugacy_class_reps(F, n, elems, gens)
        assert len(reps) == classes


def test_conjugacy_reps_are_deterministic():
    F, elems = enumerate_matrix_group("GU", 2, 2)
    gens = generating_set(F, 2, elems)
    first = conjugacy_class_reps(F, 2, elems, gens)
    second = conjugacy_class_reps(F, 2, elems, generating_set(F, 2, elems))
    assert first == second


def test_regular_class_counts_known():
    cases = {
        ("GL", 2, 5, 3): (24, 16),
        ("SL", 2, 5, 3): (9, 7),
        ("GU", 2, 2, 5): (9, 9),
        ("GL", 3, 2, 3): (6, 5),
    }
    for (kind, n, q, ell), expected in cases.items():
        F, elems = enumerate_matrix_group(kind, n, q)
        assert ell_regular_class_count(F, n, elems, ell) == expected


def test_cross_check_named_instances():
    gl = cross_check("GL", 2, 5, 3)
    assert gl["pass"] and gl["engine_count"] == 16 and gl["ell_regular"] == 16
    assert gl["order"] == 480 and gl["classes"] == 24
    sl = cross_check("SL", 2, 5, 3)
    assert sl["pass"] and sl["engine_count"] == 7
    gu = cross_check("GU", 2, 2, 5)
    assert gu["pass"] and gu["engine_count"] == 9
    assert gu["group"] == "GU_2(2)"


def test_cross_check_more_instances():
    assert cross_check("SU", 2, 2, 5)["engine_count"] == 3
    assert cross_check("SU", 2, 3, 5)["engine_count"] == 7
    assert cross_check("SU", 2, 2, 3)["engine_count"] == 2
    assert cross_check("GL", 3, 2, 3)["engine_count"] == 5
    assert cross_check("GU", 3, 2, 3)["engine_count"] == 3


def test_cross_check_refusals():
    with pytest.raises(UnsupportedModeError):
        cross_check("SL", 2, 5, 2)
    with pytest.raises(UnsupportedModeError):
        cross_check("SL", 2, 3, 2)
    with pytest.raises(ConfigurationError):
        cross_check("GL", 2, 5, 5)
