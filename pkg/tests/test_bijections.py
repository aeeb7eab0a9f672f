import pytest
from hypothesis import given

from dyck321.bijections import (adjacent_transposition, bijection_B, bijection_B_inv,
                                bijection_K, bijection_K_inv, bijection_M, bijection_M_direct,
                                bijection_M_inv, bijection_M_transpositions, compose)
from dyck321.codes import AscentDescentCode, path_of_code
from dyck321.dyck import EMPTY, DyckPath, enumerate_dyck
from dyck321.involutions import lk, lk_prime
from dyck321.perm321 import Not321AvoidingError, all_321_avoiders, validate_321

from conftest import RUNNING, dyck_paths

B_IMAGE = (2, 3, 5, 1, 4, 7, 6, 8, 10, 9)
K_IMAGE = (1, 2, 4, 6, 3, 5, 9, 7, 8, 10)
M_IMAGE = (1, 2, 5, 3, 6, 4, 8, 9, 7, 10)


def pyramid(n):
    return DyckPath("U" * n + "D" * n)


def test_B_examples():
    assert bijection_B(RUNNING) == B_IMAGE
    for n in range(1, 7):
        assert bijection_B(pyramid(n)) == tuple(range(1, n + 1))
    assert bijection_B(DyckPath("UD")) == (1,)


def test_K_examples():
    assert bijection_K(RUNNING) == K_IMAGE
    for n in range(1, 7):
        assert bijection_K(pyramid(n)) == (n,) + tuple(range(1, n))
    assert bijection_K(DyckPath("UD")) == (1,)


@pytest.mark.parametrize("f", [bijection_M, bijection_M_direct, bijection_M_transpositions])
def test_M_examples(f):
    assert f(RUNNING) == M_IMAGE
    assert f(DyckPath("UUDD")) == (2, 1)
    assert f(DyckPath("UD")) == (1,)


def test_empty_path_maps_to_empty_permutation():
    for f in (bijection_B, bijection_K, bijection_M, bijection_M_direct):
        assert f(EMPTY) == ()
    for g in (bijection_B_inv, bijection_K_inv, bijection_M_inv):
        assert g(()) == EMPTY


def test_inverse_examples():
    assert bijection_B_inv(B_IMAGE) == RUNNING
    assert bijection_K_inv(K_IMAGE) == RUNNING
    assert bijection_M_inv(M_IMAGE) == RUNNING
    assert bijection_B_inv((2, 1)) == DyckPath("UDUD")
    assert bijection_B_inv((2, 1)) == path_of_code(AscentDescentCode(2, (1,), (1,)))
    assert bijection_K_inv((1,)) == DyckPath("UD")
    assert bijection_M_inv((2, 1)) == DyckPath("UUDD")
    for n in range(1, 7):
        identity = tuple(range(1, n + 1))
        assert bijection_B_inv(identity) == pyramid(n)
        assert bijection_K_inv((n,) + tuple(range(1, n))) == pyramid(n)
        assert bijection_M_inv(identity) == DyckPath("UD" * n)


@pytest.mark.parametrize("g", [bijection_B_inv, bijection_K_inv, bijection_M_inv])
def test_inverses_reject_321(g):
    with pytest.raises(Not321AvoidingError):
        g((3, 2, 1))


def test_transposition_product_convention():
    # right multiplication by s_j swaps positions j and j + 1
    assert compose((1, 2, 3), adjacent_transposition(3, 1)) == (2, 1, 3)
    assert compose((3, 1, 2), adjacent_transposition(3, 2)) == (3, 2, 1)


@pytest.mark.parametrize("n", range(1, 12))
def test_identities_exhaustive(n):
    for p in enumerate_dyck(n):
        m = bijection_M_direct(p)
        assert m == bijection_M(p) == bijection_B(lk(p)) == bijection_K(lk_prime(p))


@pytest.mark.parametrize("n", range(0, 9))
def test_transposition_oracle(n):
    for p in enumerate_dyck(n):
        assert bijection_M_transpositions(p) == bijection_M(p)


@pytest.mark.parametrize("n", range(0, 10))
def test_bijective_onto_321_avoiders(n):
    avoiders = set(all_321_avoiders(n))
    paths = enumerate_dyck(n)
    for f, g in ((bijection_B, bijection_B_inv), (bijection_K, bijection_K_inv),
                 (bijection_M, bijection_M_inv)):
        images = [f(p) for p in paths]
        assert len(set(images)) == len(paths)
        assert set(images) == avoiders
        assert all(g(f(p)) == p for p in paths)
        assert all(f(g(q)) == q for q in avoiders)


@given(dyck_paths(min_size=1, max_size=40))
def test_random_large_paths(p):
    for f, g in ((bijection_B, bijection_B_inv), (bijection_K, bijection_K_inv),
                 (bijection_M, bijection_M_inv)):
        q = f(p)
        assert validate_321(q) is None
        assert g(q) == p
    assert bijection_M_direct(p) == bijection_K(lk_prime(p))
