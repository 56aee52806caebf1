import pytest
from hypothesis import given, strategies as st

from nilcat.core import canonical_object, jordan_block, zero_object
from nilcat.field import GF, QQ
from nilcat.hom import (
    HomSpace,
    hom_basis,
    hom_dim,
    intertwiner_system,
    jordan_hom_dim,
    shifted_jordan_basis,
)
from nilcat.linalg import Mat, hstack, rank, unvec
from nilcat.probes import random_object, rng


def test_intertwiner_system_examples():
    k = jordan_block(1)
    assert intertwiner_system(k, k) == Mat.zeros(1, 1)
    j2 = jordan_block(2)
    s = intertwiner_system(j2, j2)
    assert s.shape == (4, 4) and rank(s) == 2


@pytest.mark.parametrize("p", range(1, 5))
@pytest.mark.parametrize("q", range(1, 5))
def test_rank_of_block_system(p, q):
    s = intertwiner_system(jordan_block(p), jordan_block(q))
    assert rank(s) == p * q - min(p, q)


@given(st.integers(0, 2 ** 32), st.sampled_from([QQ, GF(7)]))
def test_solutions_intertwine(seed, field):
    r = rng(seed)
    x, y = random_object(r, 4, field), random_object(r, 4, field)
    for f in HomSpace(x, y).basis_mats:
        assert y.endo @ f == f @ x.endo


def test_hom_basis_examples():
    assert len(hom_basis(jordan_block(3), jordan_block(2))) == 2
    k = jordan_block(1)
    assert [f.mat for f in hom_basis(k, k)] == [Mat.identity(1)]
    assert len(hom_basis(k, jordan_block(2))) == 1


def test_hom_dim_examples():
    assert hom_dim(jordan_block(3), jordan_block(2)) == 2
    assert hom_dim(canonical_object([3, 2]), canonical_object([4, 1])) == 7
    assert hom_dim(zero_object(), jordan_block(3)) == 0


def test_jordan_hom_dim_examples():
    assert jordan_hom_dim([3], [2]) == 2
    assert jordan_hom_dim([2, 3], [1, 4]) == 7
    assert jordan_hom_dim([], [5, 2]) == 0


def test_coords_round_trip():
    space = HomSpace(canonical_object([2, 1]), canonical_object([3]))
    for i, b in enumerate(space.basis_mats):
        c = space.coords(b)
        assert c == Mat.unit(space.dim, i)
        assert space.element(c) == b


def test_shifted_basis_small_cases():
    f = shifted_jordan_basis(2, 2)
    j2 = jordan_block(2).endo
    assert f[0].mat == Mat.identity(2)
    assert f[1].mat == j2 @ f[0].mat and not f[1].mat.is_zero()
    assert (j2 @ f[1].mat).is_zero()
    (g,) = shifted_jordan_basis(1, 3)
    assert (jordan_block(3).endo @ g.mat).is_zero()


@pytest.mark.parametrize("p", range(1, 6))
@pytest.mark.parametrize("q", range(1, 6))
def test_shifted_basis_is_a_chain_basis(p, q):
    chain = shifted_jordan_basis(p, q)
    jq = jordan_block(q).endo
    assert len(chain) == min(p, q)
    assert rank(hstack([f.mat.vec() for f in chain])) == len(chain)
    for a, b in zip(chain, chain[1:]):
        assert b.mat == jq @ a.mat
    assert (jq @ chain[-1].mat).is_zero()
    for f in chain:
        assert unvec(f.mat.vec(), q, p) == f.mat
