"""Named check suites behind ``nilcat check``.

Each suite returns a plain dict ``{suite, cases, passes, failures}``; every
failure carries the matrices needed to re-run it.  A suite's random probes
are drawn from one :class:`random.Random` seeded with ``seed``, in case order.
"""

from __future__ import annotations

from typing import Callable

from .abelian import (
    check_extension,
    cokernel,
    extension_nilindex_check,
    factor_through_cokernel,
    factor_through_kernel,
    image_factorization,
    is_epic,
    is_monic,
    is_short_exact,
    kernel,
)
from .core import JordanType, NilcatError, NilMorphism, NilObject, canonical_object, conjugate, is_nilpotent
from .diagnostics import (
    double_embedding,
    double_projection,
    enumerate_simples,
    has_retraction,
    has_section,
    hom_vanishing_check,
    partitions,
    ses_additivity_check,
    simples_report,
)
from .field import QQ, Field
from .functors import (
    HomFunctorParam,
    TensorParam,
    eta_plain,
    hom_adjunction_matrix,
    homf_obj,
    naturality_paths,
    tensor_adjunction_matrix,
    tensor_obj,
)
from .hom import HomSpace, hom_dim, jordan_hom_dim
from .jordan import jordan_type
from .linalg import rank
from .probes import (
    random_extension,
    random_invertible,
    random_matrix,
    random_morphism,
    random_object,
    random_partition,
    rng,
)


class Suite:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: list[dict] = []

    def record(self, ok: bool, **witness) -> None:
        if not ok:
            self.failures.append({"case": self.cases, **witness})
        self.cases += 1

    def report(self) -> dict:
        return {"suite": self.name, "cases": self.cases,
                "passes": self.cases - len(self.failures), "failures": self.failures}


def all_types(max_dim: int):
    for n in range(1, max_dim + 1):
        for parts in partitions(n):
            yield JordanType(parts)


def noprojinj(max_dim: int, seed: int, field: Field = QQ) -> dict:
    """Every nonzero object has a non-split mono out of it and a non-split epi onto it."""
    suite = Suite("noprojinj")
    for jt in all_types(max_dim):
        x = canonical_object(jt, field)
        f, _ = double_embedding(x)
        r = has_retraction(f) if is_monic(f) else None
        suite.record(is_monic(f) and r is None, jordan_type=jt, side="injective",
                     morphism=f, retraction=r)
        g, _ = double_projection(x)
        s = has_section(g) if is_epic(g) else None
        suite.record(is_epic(g) and s is None, jordan_type=jt, side="projective",
                     morphism=g, section=s)
    return suite.report()


def vanishing(max_dim: int, seed: int, field: Field = QQ) -> dict:
    """No nonzero maps between (K^m, 1) and a random conjugate of each Jordan type, m <= 3."""
    r = rng(seed)
    suite = Suite("vanishing")
    for jt in all_types(max_dim):
        y, _ = conjugate(canonical_object(jt, field), random_invertible(r, jt.size, field))
        for m in range(1, 4):
            suite.record(hom_vanishing_check(y, m), object=y, m=m)
    return suite.report()


def simples(max_dim: int, seed: int, field: Field = QQ) -> dict:
    """(K, 0) is the only simple object, and every other candidate has a witness."""
    suite = Suite("simples")
    found = enumerate_simples(max_dim, field)
    suite.record(len(found) == 1 and found[0].dim == 1 and found[0].endo.is_zero(),
                 simples=found)
    for row in simples_report(max_dim, field):
        w = row["witness"]
        if row["simple"]:
            suite.record(w is None, jordan_type=row["jordan_type"], witness=w)
            continue
        ok = (w is not None and w.src.dim > 0 and w.src.dim < w.dst.dim and is_monic(w))
        suite.record(ok, jordan_type=row["jordan_type"], witness=w)
    return suite.report()


def _ses_from_extension(ext) -> tuple[NilMorphism, NilMorphism]:
    mid = NilObject(ext.mid_endo.rows, ext.mid_endo)
    return NilMorphism(ext.sub, mid, ext.inc), NilMorphism(mid, ext.quot, ext.proj)


def grothendieck(max_dim: int, seed: int, field: Field = QQ, count: int = 30) -> dict:
    """g_class is additive on random short exact sequences with middle dimension <= max_dim."""
    r = rng(seed)
    suite = Suite("grothendieck")
    for _ in range(count):
        n = r.randint(2, max(2, max_dim))
        k = r.randint(1, n - 1)
        ext = random_extension(r, random_object(r, k, field), random_object(r, n - k, field))
        try:
            f, g = _ses_from_extension(ext)
            ok = ses_additivity_check(f, g)
        except NilcatError:
            ok = False
        suite.record(ok, sub=ext.sub, mid_endo=ext.mid_endo, quot=ext.quot,
                     inc=ext.inc, proj=ext.proj)
    return suite.report()


def homdim(max_dim: int, seed: int, field: Field = QQ, count: int = 50) -> dict:
    """Brute-force Hom dimension against the sum of pairwise block minima."""
    r = rng(seed)
    suite = Suite("homdim")
    size = max(1, max_dim)
    for _ in range(count):
        s, t = random_partition(r, 4, size), random_partition(r, 4, size)
        got = hom_dim(canonical_object(s, field), canonical_object(t, field))
        want = jordan_hom_dim(s, t)
        suite.record(got == want, src=s, dst=t, computed=got, expected=want)
    return suite.report()


def abelian_case(f: NilMorphism, r) -> bool:
    """Kernel and cokernel of f satisfy their universal properties."""
    k_obj, k = kernel(f)
    c_obj, c = cokernel(f)
    if not ((f.mat @ k.mat).is_zero() and (c.mat @ f.mat).is_zero()):
        return False
    if not (is_monic(k) and is_epic(c)):
        return False
    if not (is_nilpotent(k_obj.endo) and is_nilpotent(c_obj.endo)):
        return False
    img = image_factorization(f)
    if img.mono.mat @ img.epi.mat != f.mat:
        return False
    if k_obj.dim + img.obj.dim != f.src.dim:
        return False
    # a map killed by f factors through the kernel uniquely (k is monic)
    w = random_object(r, 3, f.field)
    h = k @ random_morphism(r, w, k_obj)
    u = factor_through_kernel(k, h)
    if k.mat @ u.mat != h.mat:
        return False
    # a map killing f factors through the cokernel uniquely (c is epic)
    v = random_object(r, 3, f.field)
    e = random_morphism(r, c_obj, v) @ c
    u2 = factor_through_cokernel(c, e)
    if u2.mat @ c.mat != e.mat:
        return False
    return is_short_exact(k, NilMorphism(f.src, img.obj, img.epi.mat)) or f.src.dim == 0


def abelian(max_dim: int, seed: int, field: Field = QQ, count: int = 100) -> dict:
    r = rng(seed)
    suite = Suite("abelian")
    for _ in range(count):
        x = random_object(r, max_dim, field)
        y = random_object(r, max_dim, field)
        f = random_morphism(r, x, y)
        try:
            ok = abelian_case(f, r)
        except (NilcatError, ValueError, AssertionError):
            ok = False
        suite.record(ok, morphism=f)
    return suite.report()


def thickness(max_dim: int, seed: int, field: Field = QQ, count: int = 50) -> dict:
    """The middle of a random extension of nilpotent objects is nilpotent."""
    r = rng(seed)
    suite = Suite("thickness")
    for _ in range(count):
        n = r.randint(2, max(2, max_dim))
        k = r.randint(1, n - 1)
        ext = random_extension(r, random_object(r, k, field), random_object(r, n - k, field))
        check_extension(ext)
        cert = extension_nilindex_check(ext)
        suite.record(cert.ok, certificate=cert.to_json(), sub=ext.sub, mid_endo=ext.mid_endo,
                     quot=ext.quot, inc=ext.inc, proj=ext.proj)
    return suite.report()


def adjoint_tensor(probe_dims: int, seed: int, field: Field = QQ,
                   per_size: int = 10, squares: int = 20) -> dict:
    """Tensor by (B, b) for d <= 3: Jordan type, bijectivity of phi, naturality in x."""
    r = rng(seed)
    suite = Suite("adjoint-tensor")
    for d in range(1, 4):
        for _ in range(per_size):
            t = TensorParam(random_invertible(r, d, field))
            x = random_object(r, probe_dims, field)
            y = random_object(r, probe_dims, field)
            jt_ok = list(jordan_type(tensor_obj(x, t)).parts) == sorted(
                [p for p in jordan_type(x).parts for _ in range(d)], reverse=True)
            phi = tensor_adjunction_matrix(x, y, t)
            bij = phi.is_square() and rank(phi) == phi.rows
            suite.record(jt_ok and bij, check="type+bijective", b=t.b, x=x, y=y, phi=phi)
    for _ in range(squares):
        t = TensorParam(random_invertible(r, r.randint(1, 3), field))
        xp = random_object(r, probe_dims, field)
        x = random_object(r, probe_dims, field)
        y = random_object(r, probe_dims, field)
        f = random_morphism(r, xp, x)
        left, right = naturality_paths("tensor", t, y, f)
        suite.record(left == right, check="naturality", b=t.b, y=y, probe=f)
    return suite.report()


def adjoint_hom(probe_dims: int, seed: int, field: Field = QQ, squares: int = 20) -> dict:
    """HOM from a Jordan block over all block triples: dimensions, bijectivity, naturality."""
    r = rng(seed)
    suite = Suite("adjoint-hom")
    n = probe_dims
    for a in range(1, n + 1):
        h = HomFunctorParam(canonical_object([a], field))
        for p in range(1, n + 1):
            x = canonical_object([p], field)
            for q in range(1, n + 1):
                y = canonical_object([q], field)
                want = min(a, p, q)
                dims = (HomSpace(x, homf_obj(y, h)[0]).dim, HomSpace(homf_obj(x, h)[0], y).dim)
                phi = hom_adjunction_matrix(x, y, h)
                bij = phi.is_square() and rank(phi) == phi.rows
                suite.record(dims == (want, want) and bij, check="dims+bijective",
                             triple=[a, p, q], dims=list(dims), expected=want,
                             phi_rank=rank(phi), phi=phi)
    for _ in range(squares):
        h = HomFunctorParam(canonical_object([r.randint(1, n)], field))
        xp = canonical_object([r.randint(1, n)], field)
        x = canonical_object([r.randint(1, n)], field)
        y = canonical_object([r.randint(1, n)], field)
        f = random_morphism(r, xp, x)
        left, right = naturality_paths("hom", h, y, f)
        suite.record(left == right, check="naturality", a=h.a_obj, y=y, probe=f)
    return suite.report()


def eta(max_dim: int, seed: int, field: Field = QQ, probes: int = 10) -> dict:
    """eta_A is an isomorphism and natural over plain objects, for both functors, size <= 3."""
    r = rng(seed)
    suite = Suite("eta")
    dims = list(range(0, max_dim + 1))
    for kind in ("tensor", "hom"):
        for size in range(1, 4):
            maps = [random_matrix(r, r.choice(dims[1:]), r.choice(dims[1:]), field)
                    for _ in range(probes)]
            rep = eta_plain(kind, size, dims, maps, field)
            for c in rep.cases:
                suite.record(c["iso"] and c["natural"], kind=kind, size=size, **c)
    return suite.report()


SUITES: dict[str, Callable[..., dict]] = {
    "noprojinj": noprojinj,
    "vanishing": vanishing,
    "simples": simples,
    "grothendieck": grothendieck,
    "homdim": homdim,
    "abelian": abelian,
    "thickness": thickness,
    "adjoint-tensor": adjoint_tensor,
    "adjoint-hom": adjoint_hom,
    "eta": eta,
}


def run_suite(name: str, max_dim: int, seed: int, field: Field = QQ) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](max_dim, seed, field)

