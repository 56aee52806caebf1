import pytest
from hypothesis import given, strategies as st

from nilcat.core import (
    NilMorphism,
    canonical_object,
    compose,
    identity,
    jordan_block,
    zero_morphism,
    zero_object,
)
from nilcat.field import GF, QQ
from nilcat.functors import (
    HomFunctorParam,
    NotIndecomposable,
    NotInvertible,
    TensorParam,
    check_naturality,
    cyclic_generator,
    divergence_report,
    eta_matrix,
    eta_plain,
    hom_adjunction,
    hom_adjunction_matrix,
    homf_mor,
    homf_obj,
    homf_space,
    jordan_hom_object,
    naturality_paths,
    tensor_adjunction,
    tensor_adjunction_inverse,
    tensor_adjunction_matrix,
    tensor_mor,
    tensor_obj,
)
from nilcat.hom import HomSpace, hom_basis, hom_dim, shifted_jordan_basis
from nilcat.jordan import decompose, jordan_basis, jordan_type
from nilcat.linalg import Mat, hstack, inverse, kron, nullspace_basis, rank, vstack
from nilcat.probes import random_invertible, random_morphism, random_object, rng

B_UPPER = Mat.from_rows([[2, 1], [0, 1]])
B_SWAP = Mat.from_rows([[0, 1], [1, 0]])


def test_tensor_param_requires_invertible():
    with pytest.raises(NotInvertible):
        TensorParam(Mat.from_rows([[1, 2], [2, 4]]))


def test_tensor_obj_examples():
    j2 = jordan_block(2)
    t = tensor_obj(j2, TensorParam.identity(2))
    assert t.endo == kron(j2.endo, Mat.identity(2))
    assert jordan_type(t).parts == (2, 2)
    assert jordan_type(tensor_obj(j2, TensorParam(B_SWAP))).parts == (2, 2)
    assert [s.obj for s in decompose(tensor_obj(j2, TensorParam(B_SWAP)))] == [j2, j2]
    assert tensor_obj(zero_object(), TensorParam(B_SWAP)).dim == 0


def test_tensor_mor_is_functorial():
    t = TensorParam(B_UPPER)
    x = jordan_block(3)
    assert tensor_mor(identity(x), t) == identity(tensor_obj(x, t))
    r = rng(4)
    a, b, c = (random_object(r, 3, QQ) for _ in range(3))
    f, g = random_morphism(r, a, b), random_morphism(r, b, c)
    assert tensor_mor(compose(g, f), t) == compose(tensor_mor(g, t), tensor_mor(f, t))
    f1 = shifted_jordan_basis(2, 3)[0]
    assert tensor_mor(f1, TensorParam.identity(2)).src.dim == 4


def test_tensor_adjunction_d1_is_identity():
    t = TensorParam.identity(1)
    x, y = canonical_object([2, 1]), jordan_block(3)
    for g in hom_basis(tensor_obj(x, t), y):
        assert tensor_adjunction(g, x, t).mat == g.mat


@given(st.integers(0, 2 ** 32), st.integers(1, 3), st.sampled_from([QQ, GF(7)]))
def test_tensor_adjunction_is_bijective(seed, d, field):
    r = rng(seed)
    t = TensorParam(random_invertible(r, d, field))
    x, y = random_object(r, 3, field), random_object(r, 3, field)
    left = hom_dim(tensor_obj(x, t), y)
    assert left == hom_dim(x, tensor_obj(y, t)) == d * hom_dim(x, y)
    m = tensor_adjunction_matrix(x, y, t)
    assert m.is_square() and rank(m) == left
    for g in hom_basis(tensor_obj(x, t), y):
        assert tensor_adjunction_inverse(tensor_adjunction(g, x, t), y, t) == g


@given(st.integers(0, 2 ** 32))
def test_tensor_adjunction_is_natural_in_x(seed):
    r = rng(seed)
    t = TensorParam(random_invertible(r, r.randint(1, 3), QQ))
    xp, x, y = (random_object(r, 3, QQ) for _ in range(3))
    rep = check_naturality("tensor", t, y, [random_morphism(r, xp, x), identity(x)])
    assert rep.passed, rep.to_json()


def test_jordan_basis_conjugator_on_x_side_is_not_natural():
    # carrying X (x) (B, b) to X (x) (B, 1) by Jordan bases depends on choices
    # that do not commute with f (x) 1, so it cannot be the adjunction's X side
    t, one = TensorParam(B_UPPER), TensorParam.identity(2)

    def conj(x):
        return inverse(jordan_basis(tensor_obj(x, one)).mat) @ jordan_basis(tensor_obj(x, t)).mat

    x, xp = canonical_object([2, 1]), jordan_block(3)
    bad = [f for f in hom_basis(xp, x)
           if conj(x) @ tensor_mor(f, t).mat != tensor_mor(f, one).mat @ conj(xp)]
    assert bad


def test_homf_obj_examples():
    h = HomFunctorParam(jordan_block(2))
    obj, basis = homf_obj(jordan_block(3), h)
    assert jordan_type(obj).parts == (2,)
    assert len(basis) == 2
    k = HomFunctorParam(jordan_block(1))
    x = canonical_object([3, 2, 1])
    assert homf_obj(x, k)[0].dim == 3
    assert homf_obj(zero_object(), h)[0].dim == 0


def test_homf_theta_is_left_multiplication():
    h = HomFunctorParam(canonical_object([2, 1]))
    x = canonical_object([3, 1])
    obj, basis = homf_obj(x, h)
    space = homf_space(x, h)
    for i, b in enumerate(basis):
        assert space.element(obj.endo @ Mat.unit(obj.dim, i)) == x.endo @ b.mat
        assert x.endo @ b.mat == b.mat @ h.a_obj.endo


def test_homf_mor_is_functorial():
    h = HomFunctorParam(canonical_object([2, 1]))
    x = jordan_block(3)
    assert homf_mor(identity(x), h) == identity(homf_obj(x, h)[0])
    assert homf_mor(zero_morphism(x, x), h).is_zero()
    r = rng(8)
    a, b, c = (random_object(r, 4, QQ) for _ in range(3))
    f, g = random_morphism(r, a, b), random_morphism(r, b, c)
    assert homf_mor(compose(g, f), h) == compose(homf_mor(g, h), homf_mor(f, h))


@pytest.mark.parametrize("p,q", [(3, 2), (1, 1), (4, 4), (2, 5), (5, 3)])
def test_jordan_hom_object_iso(p, q):
    obj, iso = jordan_hom_object(p, q)
    m = min(p, q)
    assert iso.dst == jordan_block(m)
    assert iso.mat @ obj.endo == jordan_block(m).endo @ iso.mat
    assert rank(iso.mat) == m


def test_cyclic_generator():
    assert cyclic_generator(jordan_block(3)) == Mat.unit(3, 2)
    assert cyclic_generator(jordan_block(1)) == Mat.unit(1, 0)


def test_hom_adjunction_rejects_decomposable_inputs():
    h = HomFunctorParam(canonical_object([1, 1]))
    x = jordan_block(2)
    g = zero_morphism(x, homf_obj(x, h)[0])
    with pytest.raises(NotIndecomposable):
        hom_adjunction(g, x, h)


def test_hom_adjunction_all_ones():
    k = jordan_block(1)
    m = hom_adjunction_matrix(k, k, HomFunctorParam(k))
    assert m.shape == (1, 1) and m[0, 0] != 0


def test_hom_adjunction_two_three_two():
    h = HomFunctorParam(jordan_block(2))
    x, y = jordan_block(3), jordan_block(2)
    assert HomSpace(x, homf_obj(y, h)[0]).dim == 2
    assert HomSpace(homf_obj(x, h)[0], y).dim == 2
    m = hom_adjunction_matrix(x, y, h)
    assert rank(m) == 2


def test_hom_adjunction_injectivity_witness_two_two_two():
    a = jordan_block(2)
    h = HomFunctorParam(a)
    x = y = jordan_block(2)
    hy = homf_space(y, h)
    beta = cyclic_generator(a)
    for g in hom_basis(x, homf_obj(y, h)[0]):
        u = next(u for u in (Mat.unit(2, j) for j in range(2))
                 if not (hy.element(g.mat @ u) @ beta).is_zero())
        rho = hstack([x.endo @ u, u])
        assert x.endo @ rho == rho @ a.endo
        phi_g = hom_adjunction(g, y, h)
        value = phi_g.mat @ homf_space(x, h).coords(rho)
        assert not value.is_zero()


@pytest.mark.parametrize("r", range(1, 4))
@pytest.mark.parametrize("p", range(1, 4))
@pytest.mark.parametrize("q", range(1, 4))
def test_hom_adjunction_dims_and_naturality(r, p, q):
    h = HomFunctorParam(jordan_block(r))
    x, y = jordan_block(p), jordan_block(q)
    m = hom_adjunction_matrix(x, y, h)
    assert m.shape == (min(r, p, q), min(r, p, q))
    probes = [f for xp in range(1, 4) for f in hom_basis(jordan_block(xp), x)]
    assert check_naturality("hom", h, y, probes).passed


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("p", range(1, 5))
@pytest.mark.parametrize("q", range(1, 5))
def test_hom_adjunction_rank(r, p, q):
    # phi restricts along the cyclic generator, so it only sees ker x^r
    m = hom_adjunction_matrix(jordan_block(p), jordan_block(q), HomFunctorParam(jordan_block(r)))
    expected = min(p, q) if r >= p else max(0, min(r, q) - (p - r))
    assert rank(m) == expected


def test_no_x_natural_bijection_for_hom_from_k():
    """Solve for every family psi_X, X in {J_1, J_2}, natural in X, with A = Y = (K, 0).

    Hom(J_2, K) is spanned by the functional that kills the socle, and
    composing it with the socle inclusion J_1 -> J_2 gives zero, while
    HOM(K, -) sends that inclusion to an isomorphism; so psi_{J_2} = 0.
    """
    k = jordan_block(1)
    h = HomFunctorParam(k)
    y = k
    xs = [jordan_block(1), jordan_block(2)]
    hy = homf_obj(y, h)[0]
    lefts = [HomSpace(x, hy) for x in xs]
    rights = [HomSpace(homf_obj(x, h)[0], y) for x in xs]
    sizes = [rt.dim * lt.dim for lt, rt in zip(lefts, rights)]
    offsets = [0, sizes[0]]
    n_unknowns = sum(sizes)
    rows = []
    for i, xp in enumerate(xs):
        for j, x in enumerate(xs):
            for f in hom_basis(xp, x):
                lmat = lefts[j].matrix_of(lambda m: m @ f.mat, lefts[i])
                rmat = rights[j].matrix_of(lambda m: m @ homf_mor(f, h).mat, rights[i])
                # psi_i @ lmat == rmat @ psi_j, vectorised
                block_i = kron(lmat.T, Mat.identity(rights[i].dim))
                block_j = kron(Mat.identity(lefts[j].dim), rmat)
                row = Mat.zeros(block_i.rows, n_unknowns)
                cols = []
                for c in range(n_unknowns):
                    v = Mat.zeros(block_i.rows, 1)
                    if offsets[i] <= c < offsets[i] + sizes[i]:
                        v = v + block_i.col(c - offsets[i])
                    if offsets[j] <= c < offsets[j] + sizes[j]:
                        v = v - block_j.col(c - offsets[j])
                    cols.append(v)
                rows.append(hstack(cols) if cols else row)
    solutions = nullspace_basis(vstack(rows))
    assert solutions
    for s in solutions:
        psi_j2 = s.submatrix(range(offsets[1], offsets[1] + sizes[1]), [0])
        assert psi_j2.is_zero()


def test_naturality_paths_identity_probe():
    t = TensorParam(B_UPPER)
    x, y = jordan_block(2), jordan_block(3)
    left, right = naturality_paths("tensor", t, y, identity(x))
    assert left == right


def test_eta_examples():
    e = eta_matrix("tensor", 1, 3)
    assert e == Mat.identity(3)
    e = eta_matrix("tensor", 3, 2)
    assert e.shape == (6, 6) and rank(e) == 6
    maps = [random_invertible(rng(i), 2, QQ) @ Mat.from_rows([[i, 1], [0, i - 1]]) for i in range(10)]
    assert eta_plain("hom", 2, [2], maps).passed


@pytest.mark.parametrize("kind", ["tensor", "hom"])
@pytest.mark.parametrize("size", [1, 2, 3])
def test_eta_is_natural_iso(kind, size):
    r = rng(size)
    maps = [Mat(b, a, [r.randint(-2, 2) for _ in range(a * b)])
            for a, b in [(1, 2), (3, 2), (2, 4), (4, 1)]]
    rep = eta_plain(kind, size, [0, 1, 2, 3, 4], maps)
    assert rep.passed, rep.to_json()


def test_divergence_examples():
    rep = divergence_report(HomFunctorParam(jordan_block(2)), 2, 4)
    assert [r["tensor_dim"] for r in rep.rows] == [2, 4, 6, 8]
    assert [r["hom_dim"] for r in rep.rows] == [1, 2, 2, 2]
    assert rep.divergence_at == 2
    rep = divergence_report(HomFunctorParam(jordan_block(1)), 1, 4)
    assert [r["hom_dim"] for r in rep.rows] == [1, 1, 1, 1]
    assert rep.divergence_at == 2
    rep = divergence_report(HomFunctorParam(canonical_object([1, 1])), 2, 3)
    assert rep.rows[0]["equal"] and not rep.rows[1]["equal"]
    assert rep.divergence_at == 2
    assert "<- diverges" in rep.to_text()
