import math

import numpy as np
import pytest

from oracles import j_oracle
from sympgroth.errors import InputError
from sympgroth.opnorms import infty_one_exact
from sympgroth.antisymmetric import interleave_permutation, block_rotation_generator
from sympgroth.linalg import numerical_rank
from sympgroth.symplectic import (
    VectorFamily,
    example2_vectors,
    fourier_orthogonal,
    is_symplectic,
    pairing_matrix,
    random_orthosymplectic,
    random_symplectic,
    standard_J,
    symplectic_basis_extension,
    symplectic_exp,
    symplectic_transform,
)


def test_standard_j_examples():
    np.testing.assert_array_equal(standard_J(1).j_matrix, [[0, -1], [1, 0]])
    J = standard_J(2).j_matrix
    np.testing.assert_array_equal(J @ np.eye(4)[0], np.eye(4)[2])
    for n in range(1, 6):
        J = standard_J(n).j_matrix
        np.testing.assert_array_equal(J, j_oracle(n))
        np.testing.assert_array_equal(J @ J, -np.eye(2 * n))
        np.testing.assert_array_equal(J.T, -J)
    with pytest.raises(InputError):
        standard_J(0)


def test_is_symplectic_examples():
    sp = standard_J(1)
    assert is_symplectic(np.eye(2), sp) == (0.0, True)
    assert is_symplectic(sp.j_matrix, sp) == (0.0, True)
    assert is_symplectic(np.diag([2.0, 0.5]), sp)[1]
    res, ok = is_symplectic(np.diag([2.0, 2.0]), sp)
    assert not ok and res == pytest.approx(3 * math.sqrt(2))
    with pytest.raises(InputError):
        is_symplectic(np.eye(3), sp)


def test_pairing_examples():
    A = pairing_matrix(VectorFamily.from_columns(np.eye(2)))
    np.testing.assert_array_equal(A, [[0, -1], [1, 0]])
    V = np.random.default_rng(0).standard_normal((6, 7))
    A = pairing_matrix(VectorFamily.from_columns(V))
    np.testing.assert_array_equal(A + A.T, 0)
    np.testing.assert_allclose(A, V.T @ j_oracle(3) @ V, atol=1e-13)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 2), (4, 3)])
def test_standard_basis_pairing(n, m):
    fam = example2_vectors(n, m, 2 * m + 1)
    A = pairing_matrix(fam)
    np.testing.assert_array_equal(A[: 2 * m, : 2 * m], j_oracle(m))
    np.testing.assert_array_equal(A[2 * m:], 0)
    P = interleave_permutation(m)
    np.testing.assert_array_equal(P.T @ A[: 2 * m, : 2 * m] @ P,
                                  block_rotation_generator(np.ones(m)))
    assert numerical_rank(A) == 2 * m
    assert infty_one_exact(A).value == 2 * m
    assert fam.norm_sum() == 2 * m


def test_standard_basis_shapes_and_errors():
    np.testing.assert_array_equal(example2_vectors(1, 1, 2).columns, np.eye(2))
    V = example2_vectors(3, 2, 6).columns
    assert V.shape == (6, 6)
    np.testing.assert_array_equal(V[:, 4:], 0)
    with pytest.raises(InputError):
        example2_vectors(1, 2, 4)
    with pytest.raises(InputError):
        example2_vectors(2, 2, 3)


def test_transform_examples():
    fam = VectorFamily.from_columns(np.random.default_rng(1).standard_normal((4, 5)))
    np.testing.assert_array_equal(symplectic_transform(fam, np.eye(4)).columns, fam.columns)
    out = symplectic_transform(fam, standard_J(2).j_matrix)
    np.testing.assert_allclose(pairing_matrix(out), pairing_matrix(fam), atol=1e-14)
    with pytest.raises(InputError):
        symplectic_transform(fam, 2 * np.eye(4))


def test_transform_pairing_invariance():
    for seed in range(100):
        n = 1 + seed % 4
        rng = np.random.default_rng(seed)
        fam = VectorFamily.from_columns(rng.standard_normal((2 * n, 6)))
        S = random_symplectic(n, 0.5, seed=seed)
        drift = np.abs(pairing_matrix(symplectic_transform(fam, S)) - pairing_matrix(fam)).max()
        assert drift <= 1e-8


def test_symplectic_exp_and_samples():
    np.testing.assert_allclose(random_symplectic(3, 0.0), np.eye(6))
    th = 0.7
    S = symplectic_exp(np.diag([th, th]))
    np.testing.assert_allclose(S, [[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]],
                               atol=1e-15)
    for seed in range(100):
        n = 1 + seed % 4
        assert is_symplectic(random_symplectic(n, 0.5, seed=seed), standard_J(n))[1]


def test_orthosymplectic():
    for seed in range(20):
        n = 1 + seed % 4
        U = random_orthosymplectic(n, seed)
        assert is_symplectic(U, standard_J(n))[0] <= 1e-13
        np.testing.assert_allclose(U.T @ U, np.eye(2 * n), atol=1e-13)


@pytest.mark.parametrize("m", [1, 2, 3, 8, 17, 64])
def test_fourier_orthogonal(m):
    U = fourier_orthogonal(m)
    np.testing.assert_allclose(U.T @ U, np.eye(2 * m), atol=1e-10)
    assert np.abs(U).max() <= math.sqrt(2) / math.sqrt(2 * m) + 1e-15


def test_fourier_m1():
    np.testing.assert_allclose(fourier_orthogonal(1), np.eye(2), atol=1e-15)


def _check_split(fam, split):
    sp = fam.ambient
    assert is_symplectic(split.T, sp, 1e-9)[1]
    TV = split.T @ fam.columns
    target = np.concatenate([split.indices(0), split.indices(1)])
    outside = np.setdiff1d(np.arange(sp.dim), target)
    assert np.linalg.norm(TV[outside]) <= 1e-9 * max(1.0, np.linalg.norm(TV))
    P = split.projections
    np.testing.assert_array_equal(sum(P), np.eye(sp.dim))
    for i in range(4):
        for j in range(4):
            if i != j:
                np.testing.assert_array_equal(P[i] @ P[j], 0)
    assert np.trace(P[0]) == 2 * split.k
    assert np.trace(P[1]) == np.trace(P[2]) == split.l


def test_extension_isotropic_line():
    fam = VectorFamily.from_columns(np.array([[1.0], [0.0]]))
    split = symplectic_basis_extension(fam)
    assert (split.k, split.l) == (0, 1)
    np.testing.assert_allclose(split.T @ [1.0, 0.0], [0.0, 1.0], atol=1e-15)
    _check_split(fam, split)


def test_extension_whole_space():
    fam = VectorFamily.from_columns(np.eye(6))
    split = symplectic_basis_extension(fam)
    assert (split.k, split.l) == (3, 0)
    _check_split(fam, split)


def test_extension_symplectic_pair():
    V = np.zeros((4, 2))
    V[0, 0] = V[2, 1] = 1.0
    fam = VectorFamily.from_columns(V)
    split = symplectic_basis_extension(fam)
    assert (split.k, split.l) == (1, 0)
    _check_split(fam, split)
    TE = split.T @ V
    np.testing.assert_allclose(TE[[1, 3]], 0, atol=1e-14)


def test_extension_zero_family():
    split = symplectic_basis_extension(VectorFamily.from_columns(np.zeros((4, 2))))
    assert (split.k, split.l) == (0, 0)
    np.testing.assert_array_equal(split.T, np.eye(4))


@pytest.mark.parametrize("seed", range(12))
def test_extension_random_mixed(seed):
    n = 2 + seed % 3
    rng = np.random.default_rng(seed)
    d = 1 + seed % n
    V = np.zeros((2 * n, 6))
    V[:d] = rng.standard_normal((d, 6))
    V[n] = rng.standard_normal(6)      # pairs with row 0
    fam = VectorFamily.from_columns(random_symplectic(n, 0.5, seed=seed) @ V)
    split = symplectic_basis_extension(fam)
    assert (split.k, split.l) == (1, d - 1)
    _check_split(fam, split)
    # radical coordinates never exceed the vector norms
    TV = split.T @ fam.columns
    assert np.all(np.linalg.norm(TV[split.indices(1)], axis=0)
                  <= np.linalg.norm(fam.columns, axis=0) * (1 + 1e-12))
