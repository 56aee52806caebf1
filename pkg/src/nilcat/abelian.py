"""Kernels, cokernels, images and exactness in Nil(V)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    NilcatError,
    NilMorphism,
    NilObject,
    NotComposable,
    is_nilpotent,
    nilindex,
    zero_object,
)
from .field import QQ
from .linalg import (
    Mat,
    hstack,
    inverse,
    nullspace_basis,
    rank,
    rref,
    same_column_space,
    solve_matrix,
)


class NotExact(NilcatError):
    pass


def kernel(f: NilMorphism) -> tuple[NilObject, NilMorphism]:
    """(N, n) and the mono g: (N, n) -> src(f) with f g == 0.

    g packs the canonical nullspace basis of f as columns; n solves g n = x g.
    """
    x = f.src
    vecs = nullspace_basis(f.mat)
    if not vecs:
        z = zero_object(f.field)
        return z, NilMorphism(z, x, Mat.zeros(x.dim, 0, f.field))
    g = hstack(vecs)
    n = solve_matrix(g, x.endo @ g)
    assert n is not None, "kernel is not x-stable"
    obj = NilObject(len(vecs), n)
    return obj, NilMorphism(obj, x, g)


def cokernel(f: NilMorphism) -> tuple[NilObject, NilMorphism]:
    """(C, c) and the epi pi: dst(f) -> (C, c) with pi f == 0.

    C is identified with the coordinates that are not pivots of the
    column-space echelon form; pi projects along im(f) onto them.
    """
    y = f.dst
    fld = f.field
    reduced, pivots = rref(f.mat.T)
    basis = reduced.submatrix(range(len(pivots)), range(y.dim)).T
    comp = [j for j in range(y.dim) if j not in set(pivots)]
    if not comp:
        z = zero_object(fld)
        return z, NilMorphism(y, z, Mat.zeros(0, y.dim, fld))
    s = hstack([Mat.unit(y.dim, j, fld) for j in comp])
    full = hstack([basis, s]) if basis.cols else s
    full_inv = inverse(full)
    assert full_inv is not None
    k = basis.cols
    pi = full_inv.submatrix(range(k, y.dim), range(y.dim))
    c = pi @ y.endo @ s
    obj = NilObject(len(comp), c)
    return obj, NilMorphism(y, obj, pi)


@dataclass(frozen=True)
class ImageFactorization:
    obj: NilObject
    epi: NilMorphism
    mono: NilMorphism

    def __iter__(self):
        return iter((self.obj, self.epi, self.mono))


def image_factorization(f: NilMorphism) -> ImageFactorization:
    """f == mono @ epi with mono the kernel of the cokernel of f."""
    _, pi = cokernel(f)
    obj, mono = kernel(pi)
    e = solve_matrix(mono.mat, f.mat)
    assert e is not None, "f does not factor through its image"
    return ImageFactorization(obj, NilMorphism(f.src, obj, e), mono)


def is_monic(f: NilMorphism) -> bool:
    return rank(f.mat) == f.src.dim


def is_epic(f: NilMorphism) -> bool:
    return rank(f.mat) == f.dst.dim


def is_exact_pair(f: NilMorphism, g: NilMorphism) -> bool:
    """im(f) == ker(g) as subobjects of the middle object."""
    if f.dst != g.src:
        raise NotComposable("f and g do not meet at a common object")
    if not (g.mat @ f.mat).is_zero():
        return False
    ker_mono = kernel(g)[1]
    img_mono = image_factorization(f).mono
    return same_column_space(ker_mono.mat, img_mono.mat)


def is_short_exact(f: NilMorphism, g: NilMorphism) -> bool:
    return is_monic(f) and is_epic(g) and is_exact_pair(f, g)


def factor_through_kernel(g: NilMorphism, h: NilMorphism) -> NilMorphism:
    """The unique u with g u == h, for g a kernel mono and f h == 0."""
    u = solve_matrix(g.mat, h.mat)
    if u is None:
        raise ValueError("h does not factor through the kernel")
    return NilMorphism(h.src, g.src, u)


def factor_through_cokernel(pi: NilMorphism, h: NilMorphism) -> NilMorphism:
    """The unique u with u pi == h, for pi a cokernel epi and h f == 0."""
    ut = solve_matrix(pi.mat.T, h.mat.T)
    if ut is None:
        raise ValueError("h does not factor through the cokernel")
    return NilMorphism(pi.dst, h.dst, ut.T)


@dataclass(frozen=True)
class Extension:
    """0 -> (X, x) --inc--> (Y, y) --proj--> (Z, z) -> 0 in End(V).

    The middle endomorphism ``mid_endo`` is deliberately not validated as
    nilpotent; that is what :func:`extension_nilindex_check` establishes.
    """

    sub: NilObject
    mid_endo: Mat
    quot: NilObject
    inc: Mat
    proj: Mat


@dataclass
class ThicknessCertificate:
    nilpotent: bool
    t: int
    kills_sub: bool
    kills_quot: bool
    square_vanishes: bool
    mid_nilindex: int
    additive_bound: int

    @property
    def ok(self) -> bool:
        return (self.nilpotent and self.kills_sub and self.kills_quot and self.square_vanishes
                and self.mid_nilindex <= self.additive_bound)

    def to_json(self) -> dict:
        return {
            "nilpotent": self.nilpotent,
            "t": self.t,
            "y_t_f_zero": self.kills_sub,
            "g_y_t_zero": self.kills_quot,
            "y_2t_zero": self.square_vanishes,
            "mid_nilindex": self.mid_nilindex,
            "additive_bound": self.additive_bound,
        }


def check_extension(ext: Extension) -> None:
    """Raise NotExact unless ``ext`` is a short exact sequence in End(V)."""
    x, z, y = ext.sub, ext.quot, ext.mid_endo
    f, g = ext.inc, ext.proj
    n = y.rows
    if not y.is_square():
        raise NotExact("middle endomorphism is not square")
    if f.shape != (n, x.dim) or g.shape != (z.dim, n):
        raise NotExact("structure maps have the wrong shapes")
    if y @ f != f @ x.endo or g @ y != z.endo @ g:
        raise NotExact("structure maps do not intertwine")
    if rank(f) != x.dim:
        raise NotExact("first map is not monic")
    if rank(g) != z.dim:
        raise NotExact("second map is not epic")
    if not (g @ f).is_zero() or x.dim + z.dim != n:
        raise NotExact("sequence is not exact in the middle")


def _endo_nilindex(y: Mat) -> int:
    if y.rows == 0:
        return 0
    p, k = y, 1
    while not p.is_zero():
        p = p @ y
        k += 1
        if k > y.rows + 1:
            raise ArithmeticError("endomorphism is not nilpotent")
    return k


def extension_nilindex_check(ext: Extension) -> ThicknessCertificate:
    """Check that the middle of an extension of nilpotent objects is nilpotent.

    With t the larger end nilindex: y^t f == 0, g y^t == 0 and y^(2t) == 0.
    """
    check_extension(ext)
    y = ext.mid_endo
    t = max(nilindex(ext.sub), nilindex(ext.quot))
    yt = y ** t
    nilp = is_nilpotent(y)
    return ThicknessCertificate(
        nilpotent=nilp,
        t=t,
        kills_sub=(yt @ ext.inc).is_zero(),
        kills_quot=(ext.proj @ yt).is_zero(),
        square_vanishes=(yt @ yt).is_zero(),
        mid_nilindex=_endo_nilindex(y) if nilp else -1,
        additive_bound=nilindex(ext.sub) + nilindex(ext.quot),
    )


def embed_plain(v_dim: int, field=QQ) -> NilObject:
    """(K^v_dim, 0)."""
    return NilObject(v_dim, Mat.zeros(v_dim, v_dim, field))
