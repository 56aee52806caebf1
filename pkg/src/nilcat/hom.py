"""Hom spaces in Nil(V) as nullspaces of the Kronecker intertwiner system."""

from __future__ import annotations

from typing import Sequence

from .core import FieldMismatch, JordanType, NilMorphism, NilObject, jordan_block
from .field import QQ, Field
from .linalg import DimensionMismatch, Mat, hstack, kron, nullspace_basis, rank, solve_matrix, unvec


def intertwiner_matrix(src_endo: Mat, dst_endo: Mat) -> Mat:
    """Coefficient matrix of ``dst_endo @ f - f @ src_endo == 0`` acting on vec(f).

    Works for arbitrary (not necessarily nilpotent) endomorphisms.
    """
    if src_endo.field != dst_endo.field:
        raise FieldMismatch("intertwiner system over different fields")
    f = src_endo.field
    n, m = src_endo.rows, dst_endo.rows
    return kron(src_endo.T, Mat.identity(m, f)) - kron(Mat.identity(n, f), dst_endo)


def intertwiner_system(src: NilObject, dst: NilObject) -> Mat:
    return intertwiner_matrix(src.endo, dst.endo)


def intertwiner_solutions(src_endo: Mat, dst_endo: Mat) -> list[Mat]:
    """Canonical basis of {f : dst_endo f = f src_endo} as matrices."""
    n, m = src_endo.rows, dst_endo.rows
    return [unvec(v, m, n) for v in nullspace_basis(intertwiner_matrix(src_endo, dst_endo))]


class HomSpace:
    """Hom((X, x), (Y, y)) with a fixed basis and coordinate maps.

    The basis is the canonical nullspace basis of the intertwiner system, so
    every instance built from equal objects carries the same coordinates.
    """

    def __init__(self, src: NilObject, dst: NilObject):
        if src.field != dst.field:
            raise FieldMismatch("hom space between objects over different fields")
        self.src = src
        self.dst = dst
        self.field = src.field
        self.basis_mats = intertwiner_solutions(src.endo, dst.endo)
        self._vecs = (hstack([b.vec() for b in self.basis_mats]) if self.basis_mats
                      else Mat.zeros(src.dim * dst.dim, 0, self.field))

    @property
    def dim(self) -> int:
        return len(self.basis_mats)

    @property
    def basis(self) -> list[NilMorphism]:
        return [NilMorphism(self.src, self.dst, b) for b in self.basis_mats]

    def coords(self, mat: Mat) -> Mat:
        """Coordinate column of an intertwiner in this basis."""
        if mat.shape != (self.dst.dim, self.src.dim):
            raise DimensionMismatch(f"{mat.shape} is not a map from dim {self.src.dim} to {self.dst.dim}")
        c = solve_matrix(self._vecs, mat.vec())
        if c is None:
            raise ValueError("matrix does not lie in this hom space")
        return c

    def element(self, coords: Mat) -> Mat:
        """Matrix with the given coordinates."""
        if coords.shape != (self.dim, 1):
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {coords.shape}")
        return unvec(self._vecs @ coords, self.dst.dim, self.src.dim)

    def matrix_of(self, fn, target: "HomSpace") -> Mat:
        """Matrix of a linear map ``fn`` from this space into ``target``."""
        cols = [target.coords(fn(b)) for b in self.basis_mats]
        if not cols:
            return Mat.zeros(target.dim, 0, self.field)
        return hstack(cols)


def hom_basis(src: NilObject, dst: NilObject) -> list[NilMorphism]:
    return HomSpace(src, dst).basis


def hom_dim(src: NilObject, dst: NilObject) -> int:
    m = intertwiner_system(src, dst)
    return m.cols - rank(m)


def jordan_hom_dim(t_src: JordanType | Sequence[int], t_dst: JordanType | Sequence[int]) -> int:
    """Sum of min(p_i, q_j) over all pairs of blocks."""
    return sum(min(p, q) for p in t_src for q in t_dst)


def shifted_jordan_basis(p: int, q: int, field: Field = QQ) -> list[NilMorphism]:
    """Basis f_1, ..., f_m of Hom(J_p, J_q), m = min(p, q), with J_q f_i = f_{i+1}.

    f_1 is the corner identity: the top-left I_p block when p <= q, the
    right-hand I_q block when p > q.  J_q f_m == 0.
    """
    if p < 1 or q < 1:
        raise ValueError("block sizes must be positive")
    a, b = jordan_block(p, field), jordan_block(q, field)
    m = min(p, q)
    one, zero = field.one, field.zero
    off = 0 if p <= q else p - q
    first = Mat(q, p, [one if (j - off == i and i < m) else zero
                       for i in range(q) for j in range(p)], field)
    out = [NilMorphism(a, b, first)]
    for _ in range(m - 1):
        out.append(NilMorphism(a, b, b.endo @ out[-1].mat))
    return out
