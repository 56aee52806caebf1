import pytest
from hypothesis import given, strategies as st

from nilcat.abelian import (
    Extension,
    NotExact,
    check_extension,
    cokernel,
    embed_plain,
    extension_nilindex_check,
    image_factorization,
    is_exact_pair,
    is_short_exact,
    kernel,
)
from nilcat.checks import abelian_case
from nilcat.core import (
    NotComposable,
    canonical_object,
    direct_sum,
    identity,
    jordan_block,
    zero_morphism,
    zero_object,
)
from nilcat.diagnostics import double_embedding, double_projection
from nilcat.field import GF, QQ
from nilcat.hom import hom_dim, shifted_jordan_basis
from nilcat.jordan import jordan_type
from nilcat.linalg import Mat, rank
from nilcat.probes import random_extension, random_morphism, random_object, rng


def test_kernel_examples():
    x = jordan_block(3)
    assert kernel(identity(x))[0].dim == 0
    obj, g = kernel(zero_morphism(x, jordan_block(2)))
    assert obj == x and g.mat == Mat.identity(3)
    f, _ = double_embedding(x)
    assert kernel(f)[0].dim == 0


def test_cokernel_examples():
    x = jordan_block(3)
    assert cokernel(identity(x))[0].dim == 0
    obj, pi = cokernel(zero_morphism(jordan_block(2), x))
    assert obj == x and pi.mat == Mat.identity(3)
    f1 = shifted_jordan_basis(2, 3)[0]
    obj, _ = cokernel(f1)
    assert obj.dim == 1 and obj.endo.is_zero()


def test_image_examples():
    f1 = shifted_jordan_basis(2, 3)[0]
    img = image_factorization(f1)
    assert rank(img.epi.mat) == img.obj.dim == 2
    assert jordan_type(img.obj).parts == (2,)
    z = image_factorization(zero_morphism(jordan_block(2), jordan_block(3)))
    assert z.obj.dim == 0


@given(st.integers(0, 2 ** 32), st.sampled_from([QQ, GF(7)]))
def test_random_morphisms_have_universal_kernels_and_cokernels(seed, field):
    r = rng(seed)
    x, y = random_object(r, 4, field), random_object(r, 4, field)
    f = random_morphism(r, x, y)
    assert image_factorization(f).obj.dim == rank(f.mat)
    assert abelian_case(f, r)


def test_exactness_examples():
    x = jordan_block(2)
    z = zero_object()
    assert is_exact_pair(zero_morphism(z, x), identity(x))
    s = direct_sum(x, jordan_block(3))
    assert is_short_exact(s.inject_a, s.project_b)
    f, _ = double_embedding(x)
    g, _ = double_projection(x)
    assert f.dst == g.src
    assert is_short_exact(f, g)
    assert not is_exact_pair(f, zero_morphism(f.dst, f.dst))
    with pytest.raises(NotComposable):
        is_exact_pair(f, f)


def test_thickness_examples():
    j2 = jordan_block(2)
    split = random_extension(rng(0), j2, j2)
    cert = extension_nilindex_check(split)
    assert cert.ok and cert.t == 2
    k = jordan_block(1)
    ext = Extension(k, jordan_block(2).endo, k, Mat.column([1, 0]), Mat.from_rows([[0, 1]]))
    cert = extension_nilindex_check(ext)
    assert cert.ok and cert.t == 1 and cert.mid_nilindex == 2


def test_check_extension_rejects_non_exact():
    k = jordan_block(1)
    bad = Extension(k, Mat.zeros(2, 2), k, Mat.column([1, 0]), Mat.from_rows([[1, 0]]))
    with pytest.raises(NotExact):
        check_extension(bad)


@given(st.integers(0, 2 ** 32), st.sampled_from([QQ, GF(7)]))
def test_random_extensions_are_nilpotent(seed, field):
    r = rng(seed)
    ext = random_extension(r, random_object(r, 3, field), random_object(r, 3, field))
    cert = extension_nilindex_check(ext)
    assert cert.ok, cert.to_json()


def test_embed_plain():
    assert embed_plain(1) == jordan_block(1)
    assert hom_dim(embed_plain(2), embed_plain(3)) == 6
    assert jordan_type(embed_plain(3)).parts == (1, 1, 1)
    assert jordan_type(canonical_object([1, 1, 1])) == jordan_type(embed_plain(3))
