"""Jordan decomposition of nilpotent operators into indecomposable blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    JordanType,
    NilMorphism,
    NilObject,
    canonical_object,
    nilindex,
    rank_sequence,
)
from .linalg import Mat, hstack, inverse, nullspace_basis, rank


def jordan_type(a: NilObject) -> JordanType:
    """Partition with #{parts >= k} = rank(x^(k-1)) - rank(x^k)."""
    ranks = rank_sequence(a)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for k, cnt in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        parts.extend([k] * (cnt - nxt))
    return JordanType.of(parts)


def _chain_matrix(a: NilObject) -> Mat:
    """Columns form a basis in which ``a.endo`` is the canonical block form.

    Chains are built top-down: at level k every candidate from the canonical
    basis of ker(x^k) is kept when it is independent of ker(x^(k-1)) plus the
    level-k members of longer chains already chosen.  A top v of length k
    contributes the columns x^(k-1) v, ..., x v, v.
    """
    f = a.field
    n = a.dim
    s = nilindex(a)
    x = a.endo
    powers = [Mat.identity(n, f)]
    for _ in range(s):
        powers.append(powers[-1] @ x)
    tops: list[tuple[int, Mat]] = []
    for k in range(s, 0, -1):
        span = nullspace_basis(powers[k - 1])
        # level-k vectors of longer chains: x^(j-k) v for tops v of length j
        span += [powers[j - k] @ v for j, v in tops]
        base_rank = rank(hstack(span)) if span else 0
        for cand in nullspace_basis(powers[k]):
            trial = span + [cand]
            r = rank(hstack(trial))
            if r > base_rank:
                span = trial
                base_rank = r
                tops.append((k, cand))
    cols = []
    for k, v in tops:
        cols.extend(powers[i] @ v for i in range(k - 1, -1, -1))
    if not cols:
        return Mat.zeros(0, 0, f)
    return hstack(cols)


def jordan_basis(a: NilObject) -> NilMorphism:
    """Isomorphism phi: (X, x) -> canonical form, phi x phi^-1 == canonical endo."""
    p = _chain_matrix(a)
    target = canonical_object(jordan_type(a), a.field)
    phi = inverse(p)
    if phi is None:
        raise ArithmeticError("Jordan chains failed to span the space")
    return NilMorphism(a, target, phi)


@dataclass(frozen=True)
class Summand:
    obj: NilObject
    injection: NilMorphism
    projection: NilMorphism

    def __iter__(self):
        return iter((self.obj, self.injection, self.projection))


def decompose(a: NilObject) -> list[Summand]:
    """Indecomposable summands (K^p, J_p) with their biproduct structure maps."""
    phi = jordan_basis(a)
    phi_inv = inverse(phi.mat)
    out = []
    start = 0
    for p in jordan_type(a).parts:
        block = canonical_object([p], a.field)
        idx = list(range(start, start + p))
        inj = phi_inv.submatrix(range(a.dim), idx)
        proj = phi.mat.submatrix(idx, range(a.dim))
        out.append(Summand(block, NilMorphism(block, a, inj), NilMorphism(a, block, proj)))
        start += p
    return out


def is_indecomposable(a: NilObject) -> bool:
    return len(jordan_type(a).parts) == 1


def is_simple(a: NilObject) -> bool:
    return a.dim == 1
