"""Objects and morphisms of the category of nilpotent operators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .field import QQ, Field
from .linalg import Mat, block_diag, hstack, inverse, rank, vstack


class NilcatError(ValueError):
    """Base class for validation failures."""


class NotSquare(NilcatError):
    pass


class NotNilpotent(NilcatError):
    pass


class ShapeMismatch(NilcatError):
    pass


class NotIntertwining(NilcatError):
    pass


class NotComposable(NilcatError):
    pass


class FieldMismatch(NilcatError):
    pass


def is_nilpotent(endo: Mat) -> bool:
    """``endo ** n == 0`` for n the side length, by repeated squaring."""
    n = endo.rows
    p = endo
    k = 1
    while k < n and not p.is_zero():
        p = p @ p
        k *= 2
    return p.is_zero()


@dataclass(frozen=True)
class NilObject:
    """A pair (X, x): the space K^dim with a nilpotent endomorphism ``endo``."""

    dim: int
    endo: Mat

    def __post_init__(self):
        if self.endo.rows != self.dim or self.endo.cols != self.dim:
            raise NotSquare(f"endomorphism of shape {self.endo.shape} on a space of dim {self.dim}")
        if not is_nilpotent(self.endo):
            raise NotNilpotent("endomorphism is not nilpotent")

    @property
    def field(self) -> Field:
        return self.endo.field

    def __repr__(self):
        return f"NilObject(dim={self.dim}, endo={self.endo!r})"


@dataclass(frozen=True)
class NilMorphism:
    """f: (X, x) -> (Y, y) with ``y @ f == f @ x``."""

    src: NilObject
    dst: NilObject
    mat: Mat

    def __post_init__(self):
        if self.src.field != self.dst.field or self.mat.field != self.src.field:
            raise FieldMismatch("morphism data over different fields")
        if self.mat.shape != (self.dst.dim, self.src.dim):
            raise ShapeMismatch(
                f"matrix {self.mat.shape} does not map dim {self.src.dim} to dim {self.dst.dim}")
        if self.dst.endo @ self.mat != self.mat @ self.src.endo:
            raise NotIntertwining("y @ f != f @ x")

    @property
    def field(self) -> Field:
        return self.mat.field

    def __matmul__(self, other: NilMorphism) -> NilMorphism:
        return compose(self, other)

    def __add__(self, other: NilMorphism) -> NilMorphism:
        if (self.src, self.dst) != (other.src, other.dst):
            raise NotComposable("can only add parallel morphisms")
        return NilMorphism(self.src, self.dst, self.mat + other.mat)

    def is_zero(self) -> bool:
        return self.mat.is_zero()


@dataclass(frozen=True)
class JordanType:
    """Weakly decreasing block sizes of a nilpotent operator."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"Jordan type parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Jordan type parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> JordanType:
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def mk_object(dim: int, endo: Mat) -> NilObject:
    return NilObject(dim, endo)


def mk_morphism(src: NilObject, dst: NilObject, mat: Mat) -> NilMorphism:
    return NilMorphism(src, dst, mat)


def zero_object(field: Field = QQ) -> NilObject:
    return NilObject(0, Mat.zeros(0, 0, field))


def shift_matrix(p: int, field: Field = QQ) -> Mat:
    """J_p: ones on the superdiagonal, so J_p e_{i+1} = e_i."""
    z, o = field.zero, field.one
    return Mat(p, p, [o if j == i + 1 else z for i in range(p) for j in range(p)], field)


def jordan_block(p: int, field: Field = QQ) -> NilObject:
    if p < 1:
        raise ValueError("Jordan blocks have size >= 1; use zero_object() for the zero object")
    return NilObject(p, shift_matrix(p, field))


def canonical_object(jtype: JordanType | Sequence[int], field: Field = QQ) -> NilObject:
    """Block-diagonal J_{p_1} + ... + J_{p_s} with weakly decreasing blocks."""
    if not isinstance(jtype, JordanType):
        jtype = JordanType.of(jtype)
    if not jtype.parts:
        return zero_object(field)
    return NilObject(jtype.size, block_diag([shift_matrix(p, field) for p in jtype.parts], field))


def identity(a: NilObject) -> NilMorphism:
    return NilMorphism(a, a, Mat.identity(a.dim, a.field))


def zero_morphism(src: NilObject, dst: NilObject) -> NilMorphism:
    return NilMorphism(src, dst, Mat.zeros(dst.dim, src.dim, src.field))


def compose(g: NilMorphism, f: NilMorphism) -> NilMorphism:
    """g after f."""
    if f.dst != g.src:
        raise NotComposable("target of f is not the source of g")
    return NilMorphism(f.src, g.dst, g.mat @ f.mat)


@dataclass(frozen=True)
class DirectSum:
    obj: NilObject
    inject_a: NilMorphism
    inject_b: NilMorphism
    project_a: NilMorphism
    project_b: NilMorphism

    def __iter__(self):
        return iter((self.obj, self.inject_a, self.inject_b, self.project_a, self.project_b))


def direct_sum(a: NilObject, b: NilObject) -> DirectSum:
    if a.field != b.field:
        raise FieldMismatch("direct sum of objects over different fields")
    f = a.field
    s = NilObject(a.dim + b.dim, block_diag([a.endo, b.endo], f))
    ia = vstack([Mat.identity(a.dim, f), Mat.zeros(b.dim, a.dim, f)])
    ib = vstack([Mat.zeros(a.dim, b.dim, f), Mat.identity(b.dim, f)])
    return DirectSum(
        s,
        NilMorphism(a, s, ia),
        NilMorphism(b, s, ib),
        NilMorphism(s, a, ia.T),
        NilMorphism(s, b, ib.T),
    )


def direct_sum_many(objs: Sequence[NilObject], field: Field = QQ) -> NilObject:
    if objs:
        field = objs[0].field
    if any(o.field != field for o in objs):
        raise FieldMismatch("direct sum of objects over different fields")
    return NilObject(sum(o.dim for o in objs), block_diag([o.endo for o in objs], field))


def copair(f_a: NilMorphism, f_b: NilMorphism) -> NilMorphism:
    """The map u out of a (+) b with u e_a = f_a and u e_b = f_b."""
    if f_a.dst != f_b.dst:
        raise NotComposable("copairing needs a common target")
    s = direct_sum(f_a.src, f_b.src).obj
    return NilMorphism(s, f_a.dst, hstack([f_a.mat, f_b.mat]))


def is_isomorphism(f: NilMorphism) -> tuple[bool, Optional[NilMorphism]]:
    if not f.mat.is_square():
        return False, None
    inv = inverse(f.mat)
    if inv is None:
        return False, None
    return True, NilMorphism(f.dst, f.src, inv)


def conjugate(a: NilObject, c: Mat) -> tuple[NilObject, NilMorphism]:
    """(X, c x c^-1) together with the isomorphism c: (X, x) -> (X, c x c^-1)."""
    cinv = inverse(c)
    if cinv is None:
        raise ValueError("conjugating matrix is singular")
    b = NilObject(a.dim, c @ a.endo @ cinv)
    return b, NilMorphism(a, b, c)


def nilindex(a: NilObject) -> int:
    """Least n >= 0 with endo ** n == 0."""
    if a.dim == 0:
        return 0
    p = a.endo
    n = 1
    while not p.is_zero():
        p = p @ a.endo
        n += 1
    return n


def rank_sequence(a: NilObject) -> list[int]:
    """rank(x^0), rank(x^1), ... up to and including the first zero."""
    out = [a.dim]
    p = Mat.identity(a.dim, a.field)
    while out[-1]:
        p = p @ a.endo
        out.append(rank(p))
    return out
