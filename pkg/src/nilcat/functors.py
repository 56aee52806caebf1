"""The Tensor and HOM endofunctors of Nil(V) and their self-adjunctions.

Tensor by (B, b), b invertible:  (X, x) -> (X (x) B, x (x) b),  f -> f (x) 1_B.
HOM from (A, a):  (X, x) -> (Hom((A, a), (X, x)), theta_x),  f -> f o -.

theta_x is composition with x on the left, theta_x(f) = x f.  For an
intertwiner f this equals f a, the only product of f with an endomorphism
that is defined when dim A != dim X.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .core import (
    NilcatError,
    NilMorphism,
    NilObject,
    compose,
    jordan_block,
    nilindex,
)
from .field import QQ, Field
from .hom import HomSpace, jordan_hom_dim, shifted_jordan_basis
from .jordan import is_indecomposable, jordan_basis, jordan_type
from .linalg import Mat, commutation_matrix, hstack, inverse, kron, rank, vstack


class NotInvertible(NilcatError):
    pass


class NotIndecomposable(NilcatError):
    pass


class DegenerateGenerator(NilcatError):
    pass


@dataclass(frozen=True)
class TensorParam:
    """The fixed pair (B, b) with b invertible; ``space_dim`` is dim B."""

    b: Mat

    def __post_init__(self):
        if not self.b.is_square() or self.b.rows < 1:
            raise NotInvertible("b must be a non-empty square matrix")
        if rank(self.b) != self.b.rows:
            raise NotInvertible("b must be invertible")

    @classmethod
    def identity(cls, d: int, field: Field = QQ) -> TensorParam:
        return cls(Mat.identity(d, field))

    @property
    def space_dim(self) -> int:
        return self.b.rows

    @property
    def field(self) -> Field:
        return self.b.field


@dataclass(frozen=True)
class HomFunctorParam:
    """The fixed object (A, a) of HOM((A, a), -)."""

    a_obj: NilObject

    @property
    def s(self) -> int:
        return nilindex(self.a_obj)

    @property
    def r(self) -> int:
        return self.a_obj.dim

    @property
    def field(self) -> Field:
        return self.a_obj.field


# -- Tensor ------------------------------------------------------------------

def tensor_obj(x: NilObject, t: TensorParam) -> NilObject:
    return NilObject(x.dim * t.space_dim, kron(x.endo, t.b))


def tensor_mor(f: NilMorphism, t: TensorParam) -> NilMorphism:
    return NilMorphism(tensor_obj(f.src, t), tensor_obj(f.dst, t),
                       kron(f.mat, Mat.identity(t.space_dim, t.field)))


def _dual_twist(y: NilObject, t: TensorParam) -> NilObject:
    # (Y (x) B, y (x) b^-T): the object the block re-stacking lands in
    return NilObject(y.dim * t.space_dim, kron(y.endo, inverse(t.b).T))


@lru_cache(maxsize=256)
def _twist_iso(y: NilObject, t: TensorParam) -> Mat:
    """Isomorphism (Y (x) B, y (x) b^-T) -> (Y (x) B, y (x) b) through Jordan bases.

    Both sides have d copies of the Jordan type of y, so their canonical
    forms coincide.  For b = 1 this is the identity.
    """
    src = _dual_twist(y, t)
    dst = tensor_obj(y, t)
    if src == dst:
        return Mat.identity(dst.dim, t.field)
    return inverse(jordan_basis(dst).mat) @ jordan_basis(src).mat


def tensor_adjunction(g: NilMorphism, x: NilObject, t: TensorParam) -> NilMorphism:
    """phi_{x,y}: Hom(x (x) (B, b), y) -> Hom(x, y (x) (B, b)).

    g splits into its d components g_k = g(- (x) e_k); these are stacked into
    a map x -> (+)_d y, which is then carried into y (x) (B, b) by a fixed
    isomorphism depending only on y.  The stacking step is natural in x.
    """
    d = t.space_dim
    if g.src != tensor_obj(x, t):
        raise NilcatError("g does not start at x (x) (B, b)")
    y = g.dst
    q, p = y.dim, x.dim
    blocks = [g.mat.submatrix(range(q), range(k, p * d, d)) for k in range(d)]
    stacked = vstack(blocks)
    perm = commutation_matrix(d, q, t.field)
    return NilMorphism(x, tensor_obj(y, t), _twist_iso(y, t) @ perm @ stacked)


def tensor_adjunction_inverse(h: NilMorphism, y: NilObject, t: TensorParam) -> NilMorphism:
    """Inverse of :func:`tensor_adjunction`."""
    d = t.space_dim
    if h.dst != tensor_obj(y, t):
        raise NilcatError("h does not end at y (x) (B, b)")
    x = h.src
    q, p = y.dim, x.dim
    perm = commutation_matrix(d, q, t.field)
    stacked = perm.T @ inverse(_twist_iso(y, t)) @ h.mat
    cols = [[None] * (p * d) for _ in range(q)]
    for k in range(d):
        for i in range(p):
            for j in range(q):
                cols[j][i * d + k] = stacked[k * q + j, i]
    g = Mat(q, p * d, [e for row in cols for e in row], t.field)
    return NilMorphism(tensor_obj(x, t), y, g)


def tensor_adjunction_matrix(x: NilObject, y: NilObject, t: TensorParam) -> Mat:
    """Matrix of phi_{x,y} in the canonical bases of the two Hom spaces."""
    left = HomSpace(tensor_obj(x, t), y)
    right = HomSpace(x, tensor_obj(y, t))
    return left.matrix_of(lambda m: tensor_adjunction(NilMorphism(left.src, y, m), x, t).mat, right)


# -- HOM ---------------------------------------------------------------------

def homf_space(x: NilObject, h: HomFunctorParam) -> HomSpace:
    return HomSpace(h.a_obj, x)


def homf_obj(x: NilObject, h: HomFunctorParam) -> tuple[NilObject, list[NilMorphism]]:
    """(Hom((A, a), (X, x)), theta_x) in the canonical basis of the hom space."""
    space = homf_space(x, h)
    theta = space.matrix_of(lambda m: x.endo @ m, space)
    return NilObject(space.dim, theta), space.basis


def homf_mor(f: NilMorphism, h: HomFunctorParam) -> NilMorphism:
    """g -> f o g, expressed in the canonical bases."""
    src_space = homf_space(f.src, h)
    dst_space = homf_space(f.dst, h)
    mat = src_space.matrix_of(lambda m: f.mat @ m, dst_space)
    return NilMorphism(homf_obj(f.src, h)[0], homf_obj(f.dst, h)[0], mat)


def jordan_hom_object(p: int, q: int, field: Field = QQ) -> tuple[NilObject, NilMorphism]:
    """HOM((K^p, J_p), (K^q, J_q)) and an isomorphism onto (K^m, J_m), m = min(p, q).

    The shifted basis element f_i goes to e_{m+1-i}; with the superdiagonal
    block convention this is what makes f theta == J_m f.
    """
    if p < 1 or q < 1:
        raise ValueError("block sizes must be positive")
    h = HomFunctorParam(jordan_block(p, field))
    target = jordan_block(q, field)
    obj, _ = homf_obj(target, h)
    space = homf_space(target, h)
    m = min(p, q)
    chain = shifted_jordan_basis(p, q, field)
    coords = hstack([space.coords(f.mat) for f in chain])
    reverse = Mat(m, m, [field.one if i + j == m - 1 else field.zero
                         for i in range(m) for j in range(m)], field)
    iso = reverse @ inverse(coords)
    return obj, NilMorphism(obj, jordan_block(m, field), iso)


def cyclic_generator(a: NilObject) -> Mat:
    """First standard basis vector outside ker(a^(s-1)), s the nilindex."""
    s = nilindex(a)
    if s == 0:
        raise DegenerateGenerator("the zero object has no cyclic generator")
    top = a.endo ** (s - 1)
    for j in range(a.dim):
        beta = Mat.unit(a.dim, j, a.field)
        if not (top @ beta).is_zero():
            orbit = [beta]
            for _ in range(s - 1):
                orbit.append(a.endo @ orbit[-1])
            if rank(hstack(orbit)) != a.dim:
                raise DegenerateGenerator("object is not cyclic")
            return beta
    raise DegenerateGenerator("no vector survives a^(s-1)")


def _evaluations(space: HomSpace, beta: Mat) -> Mat:
    # column k is B_k(beta) for the k-th basis map B_k
    return Mat.from_columns([b @ beta for b in space.basis_mats], space.dst.dim, space.field)


def _hom_phi(g_mat: Mat, x: NilObject, y: NilObject, h: HomFunctorParam, beta: Mat) -> Mat:
    # h(alpha) = g(alpha)(beta);  phi(g)(rho) = h(rho(beta))
    hmap = _evaluations(homf_space(y, h), beta) @ g_mat
    return hmap @ _evaluations(homf_space(x, h), beta)


def hom_adjunction(g: NilMorphism, y: NilObject, h: HomFunctorParam) -> NilMorphism:
    """phi: Hom(x, HOM((A, a), y)) -> Hom(HOM((A, a), x), y) for Jordan blocks A, x, y."""
    x = g.src
    for name, obj in (("A", h.a_obj), ("x", x), ("y", y)):
        if obj.dim == 0 or not is_indecomposable(obj):
            raise NotIndecomposable(f"{name} is not a single Jordan block")
    hom_y = homf_obj(y, h)[0]
    if g.dst != hom_y:
        raise NilcatError("g does not land in HOM((A, a), y)")
    beta = cyclic_generator(h.a_obj)
    return NilMorphism(homf_obj(x, h)[0], y, _hom_phi(g.mat, x, y, h, beta))


def hom_adjunction_matrix(x: NilObject, y: NilObject, h: HomFunctorParam) -> Mat:
    left = HomSpace(x, homf_obj(y, h)[0])
    right = HomSpace(homf_obj(x, h)[0], y)
    return left.matrix_of(lambda m: hom_adjunction(NilMorphism(x, left.dst, m), y, h).mat, right)


# -- naturality ----------------------------------------------------------------

@dataclass
class NaturalityReport:
    kind: str
    cases: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"kind": self.kind, "cases": self.cases, "passes": self.cases - len(self.failures),
                "failures": self.failures}


FunctorParam = Union[TensorParam, HomFunctorParam]


def naturality_paths(kind: str, param: FunctorParam, y: NilObject, f: NilMorphism) -> tuple[Mat, Mat]:
    """The two composite linear maps around the square for f: X' -> X.

    Both are matrices from the canonical basis of the top-left Hom space into
    that of the bottom-right one.
    """
    xp, x = f.src, f.dst
    if kind == "tensor":
        t = param
        top_left = HomSpace(tensor_obj(x, t), y)
        bottom_right = HomSpace(xp, tensor_obj(y, t))
        ff = tensor_mor(f, t)

        def down_then_across(m):
            g = NilMorphism(top_left.src, y, m)
            return tensor_adjunction(compose(g, ff), xp, t).mat

        def across_then_down(m):
            g = NilMorphism(top_left.src, y, m)
            return tensor_adjunction(g, x, t).mat @ f.mat
    elif kind == "hom":
        h = param
        hom_y = homf_obj(y, h)[0]
        top_left = HomSpace(x, hom_y)
        bottom_right = HomSpace(homf_obj(xp, h)[0], y)
        hf = homf_mor(f, h)

        def down_then_across(m):
            return hom_adjunction(NilMorphism(xp, hom_y, m @ f.mat), y, h).mat

        def across_then_down(m):
            return hom_adjunction(NilMorphism(x, hom_y, m), y, h).mat @ hf.mat
    else:
        raise ValueError(f"unknown functor kind {kind!r}")
    return (top_left.matrix_of(down_then_across, bottom_right),
            top_left.matrix_of(across_then_down, bottom_right))


def check_naturality(kind: str, param: FunctorParam, y: NilObject,
                     probes: Iterable[NilMorphism]) -> NaturalityReport:
    report = NaturalityReport(kind)
    for idx, f in enumerate(probes):
        report.cases += 1
        left, right = naturality_paths(kind, param, y, f)
        if left != right:
            report.failures.append({"case": idx, "probe": f, "y": y})
    return report


# -- eta over plain objects ------------------------------------------------------

def _plain(n: int, field: Field) -> NilObject:
    return NilObject(n, Mat.zeros(n, n, field))


@dataclass
class EtaReport:
    kind: str
    size: int
    cases: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["iso"] and c["natural"] for c in self.cases)

    def to_json(self) -> dict:
        return {"kind": self.kind, "size": self.size, "passed": self.passed, "cases": self.cases}


def eta_matrix(kind: str, size: int, a_dim: int, field: Field = QQ) -> Mat:
    """eta_A: Hom(F(K), A) -> F(A) in coordinates, for A = (K^a_dim, 0).

    ``kind`` "tensor" is F = - (x) K^size, "hom" is F = Hom(K^size, -).
    eta = psi o phi with psi(g) = g(1).
    """
    k = _plain(1, field)
    a = _plain(a_dim, field)
    if kind == "tensor":
        t = TensorParam.identity(size, field)
        space = HomSpace(tensor_obj(k, t), a)

        def eta(m):
            phi_g = tensor_adjunction(NilMorphism(space.src, a, m), k, t)
            return phi_g.mat  # a column: its value at 1

        return _columns(space, eta, field, a_dim * size)
    if kind == "hom":
        h = HomFunctorParam(_plain(size, field))
        fk = homf_obj(k, h)[0]
        fk_space = homf_space(k, h)
        fa_space = homf_space(a, h)
        space = HomSpace(fk, a)

        def eta(m):
            # phi(G)(1) is the map K^size -> A sending e_j to G(e_j^T)
            cols = [m @ fk_space.coords(Mat(1, size, [field.one if i == j else field.zero
                                                       for i in range(size)], field))
                    for j in range(size)]
            return fa_space.coords(Mat.from_columns(cols, a_dim, field))

        return _columns(space, eta, field, fa_space.dim)
    raise ValueError(f"unknown functor kind {kind!r}")


def _columns(space: HomSpace, fn, field: Field, nrows: int) -> Mat:
    return Mat.from_columns([fn(b) for b in space.basis_mats], nrows, field) \
        if space.basis_mats else Mat.zeros(nrows, 0, field)


def _functor_on_plain(kind: str, size: int, f: Mat, field: Field) -> Mat:
    """F(f) for a plain map f: (K^n, 0) -> (K^m, 0), in the coordinates of F(A)."""
    if kind == "tensor":
        return kron(f, Mat.identity(size, field))
    h = HomFunctorParam(_plain(size, field))
    return homf_mor(NilMorphism(_plain(f.cols, field), _plain(f.rows, field), f), h).mat


def _precompose_matrix(kind: str, size: int, f: Mat, field: Field) -> Mat:
    """delta = Hom(F(K), f) in the canonical bases."""
    k = _plain(1, field)
    fk = tensor_obj(k, TensorParam.identity(size, field)) if kind == "tensor" \
        else homf_obj(k, HomFunctorParam(_plain(size, field)))[0]
    src = HomSpace(fk, _plain(f.cols, field))
    dst = HomSpace(fk, _plain(f.rows, field))
    return src.matrix_of(lambda m: f @ m, dst)


def eta_plain(kind: str, size: int, probe_dims: Sequence[int], probe_maps: Sequence[Mat],
              field: Field = QQ) -> EtaReport:
    """Check that eta is an isomorphism on every probe object and natural along
    every probe map (a plain matrix between two probe dimensions)."""
    report = EtaReport(kind, size)
    for n in probe_dims:
        e = eta_matrix(kind, size, n, field)
        report.cases.append({"object_dim": n, "hom_dim": e.cols, "target_dim": e.rows,
                             "iso": e.is_square() and rank(e) == e.rows, "natural": True})
    for f in probe_maps:
        lhs = _functor_on_plain(kind, size, f, field) @ eta_matrix(kind, size, f.cols, field)
        rhs = eta_matrix(kind, size, f.rows, field) @ _precompose_matrix(kind, size, f, field)
        report.cases.append({"map_shape": [f.rows, f.cols], "iso": True, "natural": lhs == rhs})
    return report


# -- dimension divergence ----------------------------------------------------------

@dataclass
class DivergenceReport:
    a_type: list
    d: int
    rows: list
    divergence_at: int | None

    def to_json(self) -> dict:
        return {"a_jordan_type": self.a_type, "d": self.d, "rows": self.rows,
                "divergence_at": self.divergence_at}

    def to_text(self) -> str:
        lines = [f"HOM from type {self.a_type} vs tensor with d={self.d}",
                 f"{'dim X':>6} {'tensor':>7} {'HOM':>5}"]
        for r in self.rows:
            flag = "  <- diverges" if r["dim_x"] == self.divergence_at else ""
            lines.append(f"{r['dim_x']:>6} {r['tensor_dim']:>7} {r['hom_dim']:>5}{flag}")
        return "\n".join(lines)


def divergence_report(a_param: HomFunctorParam, t: TensorParam | int, max_dim: int) -> DivergenceReport:
    """Dimensions of X (x) B and HOM((A, a), X) over Jordan blocks X of dim 1..max_dim.

    dim(X (x) B) grows by exactly d per step.  ``divergence_at`` is the first
    dim X >= 2 at which the HOM dimension does not grow by d, i.e. where the
    two dimension functions stop differing by a constant.
    """
    d = t if isinstance(t, int) else t.space_dim
    a_type = list(jordan_type(a_param.a_obj).parts)
    field = a_param.field
    rows = []
    for n in range(1, max_dim + 1):
        formula = jordan_hom_dim(a_type, [n])
        computed = homf_space(jordan_block(n, field), a_param).dim
        if formula != computed:
            raise ArithmeticError(f"HOM dimension {computed} disagrees with sum of mins {formula}")
        rows.append({"dim_x": n, "tensor_dim": d * n, "hom_dim": formula,
                     "equal": d * n == formula})
    divergence = None
    for prev, cur in zip(rows, rows[1:]):
        if cur["hom_dim"] - prev["hom_dim"] != d:
            divergence = cur["dim_x"]
            break
    return DivergenceReport(a_type, d, rows, divergence)
