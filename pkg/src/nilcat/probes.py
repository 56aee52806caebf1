"""Seeded random objects, morphisms and extensions for the property checks.

All randomness comes from :class:`random.Random` (Mersenne Twister) seeded
with the caller's integer, and every draw below uses only ``randrange``,
``randint`` and ``choice``, so a seed fixes every probe.  Rational entries
are drawn from the integers -3..3, prime-field entries uniformly.
"""

from __future__ import annotations

import random

from .abelian import Extension
from .core import JordanType, NilMorphism, NilObject, canonical_object, conjugate
from .field import Field, PrimeField
from .hom import HomSpace
from .linalg import Mat, hstack, inverse, rank, vstack


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_scalar(r: random.Random, field: Field):
    if isinstance(field, PrimeField):
        return field(r.randrange(field.p))
    return field(r.randint(-3, 3))


def random_matrix(r: random.Random, rows: int, cols: int, field: Field) -> Mat:
    return Mat(rows, cols, [random_scalar(r, field) for _ in range(rows * cols)], field)


def random_invertible(r: random.Random, n: int, field: Field) -> Mat:
    """Product of 3n random elementary row operations and a random unit diagonal."""
    m = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for i in range(n):
        c = random_scalar(r, field)
        while c == 0:
            c = random_scalar(r, field)
        m[i] = [c * v for v in m[i]]
    for _ in range(3 * n):
        if n < 2:
            break
        i, j = r.sample(range(n), 2)
        c = random_scalar(r, field)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    out = Mat.from_rows(m, field, cols=n)
    assert rank(out) == n
    return out


def random_partition(r: random.Random, max_blocks: int, max_size: int) -> JordanType:
    k = r.randint(1, max_blocks)
    return JordanType.of([r.randint(1, max_size) for _ in range(k)])


def random_partition_of_dim(r: random.Random, max_dim: int, allow_zero: bool = False) -> JordanType:
    n = r.randint(0 if allow_zero else 1, max_dim)
    parts = []
    while n:
        p = r.randint(1, n)
        parts.append(p)
        n -= p
    return JordanType.of(parts)


def random_object(r: random.Random, max_dim: int, field: Field, allow_zero: bool = False) -> NilObject:
    """A random conjugate of a random canonical object."""
    base = canonical_object(random_partition_of_dim(r, max_dim, allow_zero), field)
    if base.dim == 0:
        return base
    return conjugate(base, random_invertible(r, base.dim, field))[0]


def random_morphism(r: random.Random, src: NilObject, dst: NilObject) -> NilMorphism:
    """Random combination of the canonical basis of Hom(src, dst)."""
    space = HomSpace(src, dst)
    if space.dim == 0:
        return NilMorphism(src, dst, Mat.zeros(dst.dim, src.dim, src.field))
    coords = Mat(space.dim, 1, [random_scalar(r, src.field) for _ in range(space.dim)], src.field)
    return NilMorphism(src, dst, space.element(coords))


def random_extension(r: random.Random, sub: NilObject, quot: NilObject) -> Extension:
    """[[x, c], [0, z]] for random c, conjugated by a random invertible matrix."""
    f = sub.field
    n = sub.dim + quot.dim
    c = random_matrix(r, sub.dim, quot.dim, f)
    y = vstack([hstack([sub.endo, c]),
                hstack([Mat.zeros(quot.dim, sub.dim, f), quot.endo])])
    p = random_invertible(r, n, f)
    pinv = inverse(p)
    inc = p @ vstack([Mat.identity(sub.dim, f), Mat.zeros(quot.dim, sub.dim, f)])
    proj = hstack([Mat.zeros(quot.dim, sub.dim, f), Mat.identity(quot.dim, f)]) @ pinv
    return Extension(sub, p @ y @ pinv, quot, inc, proj)
