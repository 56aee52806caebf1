"""Executable counterexamples and structural facts about Nil(V).

* double_embedding / has_retraction: a monomorphism out of every nonzero
  object that does not split, so no nonzero object is injective.  The dual
  epimorphism (transposed construction) has no section, so none is projective.
* hom_vanishing_check: no nonzero maps between (K^m, 1) and a nilpotent object.
* enumerate_simples, g_class: (K, 0) is the only simple object and the
  Grothendieck class of an object is its dimension.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .abelian import NotExact, is_short_exact
from .core import (
    JordanType,
    NilcatError,
    NilMorphism,
    NilObject,
    canonical_object,
    direct_sum,
)
from .field import QQ, Field
from .hom import intertwiner_matrix
from .jordan import is_simple
from .linalg import Mat, hstack, kron, nullspace_basis, rank, solve, unvec, vstack


class NotMonic(NilcatError):
    pass


class NotEpic(NilcatError):
    pass


def _twisted_double(x: NilObject) -> NilObject:
    f = x.field
    y = vstack([hstack([x.endo, Mat.identity(x.dim, f)]),
                hstack([Mat.zeros(x.dim, x.dim, f), x.endo])])
    return NilObject(2 * x.dim, y)


def double_embedding(x: NilObject) -> tuple[NilMorphism, NilObject]:
    """f = (1, 0)^T: (X, x) -> (X (+) X, [[x, 1], [0, x]])."""
    if x.dim == 0:
        raise NilcatError("the zero object is injective; no witness needed")
    target = _twisted_double(x)
    f = vstack([Mat.identity(x.dim, x.field), Mat.zeros(x.dim, x.dim, x.field)])
    return NilMorphism(x, target, f), target


def double_projection(x: NilObject) -> tuple[NilMorphism, NilObject]:
    """The dual witness g = (0, 1): (X (+) X, [[x, 1], [0, x]]) -> (X, x)."""
    if x.dim == 0:
        raise NilcatError("the zero object is projective; no witness needed")
    source = _twisted_double(x)
    g = hstack([Mat.zeros(x.dim, x.dim, x.field), Mat.identity(x.dim, x.field)])
    return NilMorphism(source, x, g), source


def has_retraction(f: NilMorphism) -> Optional[NilMorphism]:
    """A morphism r with r f == 1, found by solving the linear system exactly."""
    if rank(f.mat) != f.src.dim:
        raise NotMonic("only monomorphisms can have retractions")
    fld = f.field
    n, m = f.src.dim, f.dst.dim
    # unknown r is n x m; vec(r f) = kron(f^T, I_n) vec(r)
    system = vstack([kron(f.mat.T, Mat.identity(n, fld)),
                     intertwiner_matrix(f.dst.endo, f.src.endo)])
    rhs = vstack([Mat.identity(n, fld).vec(), Mat.zeros(n * m, 1, fld)])
    sol = solve(system, rhs)
    if sol is None:
        return None
    return NilMorphism(f.dst, f.src, unvec(sol[0], n, m))


def has_section(g: NilMorphism) -> Optional[NilMorphism]:
    """A morphism s with g s == 1 (the transpose of the retraction problem)."""
    if rank(g.mat) != g.dst.dim:
        raise NotEpic("only epimorphisms can have sections")
    fld = g.field
    n, m = g.dst.dim, g.src.dim
    # unknown s is m x n; vec(g s) = kron(I_n, g) vec(s)
    system = vstack([kron(Mat.identity(n, fld), g.mat),
                     intertwiner_matrix(g.dst.endo, g.src.endo)])
    rhs = vstack([Mat.identity(n, fld).vec(), Mat.zeros(m * n, 1, fld)])
    sol = solve(system, rhs)
    if sol is None:
        return None
    return NilMorphism(g.dst, g.src, unvec(sol[0], m, n))


def trace_obstruction(x: NilObject) -> bool:
    """True when tr(xz - zx) = 0 != tr(1_X) rules out a retraction of the double embedding.

    This needs dim X to be nonzero in the field: it always holds over Q and
    fails over F_p when p divides dim X.
    """
    return x.dim > 0 and x.field(x.dim) != 0


def hom_vanishing_check(y: NilObject, m: int) -> bool:
    """Hom((K^m, 1), (Y, y)) and Hom((Y, y), (K^m, 1)) are both zero."""
    one = Mat.identity(m, y.field)
    forward = nullspace_basis(intertwiner_matrix(one, y.endo))
    backward = nullspace_basis(intertwiner_matrix(y.endo, one))
    return not forward and not backward


def g_class(x: NilObject) -> int:
    """Multiplicity of the simple object (K, 0) in a composition series."""
    return x.dim


def ses_additivity_check(f: NilMorphism, g: NilMorphism) -> bool:
    if not is_short_exact(f, g):
        raise NotExact("not a short exact sequence")
    return g_class(f.dst) == g_class(f.src) + g_class(g.dst)


def partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def proper_subobject_witness(a: NilObject) -> Optional[NilMorphism]:
    """A monomorphism from a nonzero object that is not an isomorphism, if one exists.

    Uses (Ker x, 0) when x != 0 and the first coordinate line otherwise.
    """
    if a.dim <= 1:
        return None
    fld = a.field
    if not a.endo.is_zero():
        k = hstack(nullspace_basis(a.endo))
    else:
        k = Mat.unit(a.dim, 0, fld)
    sub = NilObject(k.cols, Mat.zeros(k.cols, k.cols, fld))
    return NilMorphism(sub, a, k)


def enumerate_simples(max_dim: int, field: Field = QQ) -> list[NilObject]:
    """Every simple object among the canonical objects of dimension 1..max_dim."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    return [obj for n in range(1, max_dim + 1) for parts in partitions(n)
            if is_simple(obj := canonical_object(JordanType(parts), field))]


def simples_report(max_dim: int, field: Field = QQ) -> list[dict]:
    """One row per Jordan type up to max_dim, with a witness subobject for each non-simple."""
    rows = []
    for n in range(1, max_dim + 1):
        for parts in partitions(n):
            obj = canonical_object(JordanType(parts), field)
            w = proper_subobject_witness(obj)
            rows.append({"jordan_type": list(parts), "simple": is_simple(obj), "witness": w})
    return rows


def split_sequence(a: NilObject, b: NilObject) -> tuple[NilMorphism, NilMorphism]:
    s = direct_sum(a, b)
    return s.inject_a, s.project_b

