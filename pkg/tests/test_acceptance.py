"""Acceptance criteria, all checked in exact arithmetic.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary, or directly with ``python3 tests/test_acceptance.py``.
"""

import subprocess
import sys

from nilcat import checks
from nilcat.core import jordan_block, shift_matrix
from nilcat.field import GF, QQ
from nilcat.functors import HomFunctorParam, divergence_report, jordan_hom_object
from nilcat.hom import hom_dim
from nilcat.linalg import Mat, kron, rank

SEED = 7
RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2} {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def suite_detail(report: dict) -> str:
    return f"{report['passes']}/{report['cases']} cases"


def test_01_hom_dimension_law():
    bad = [(p, q) for p in range(1, 7) for q in range(1, 7)
           if hom_dim(jordan_block(p), jordan_block(q)) != min(p, q)]
    record(1, "hom_dim(J_p, J_q) = min(p, q) for p, q <= 6", not bad, f"mismatches {bad}" if bad else "36 pairs")


def test_02_rank_identity():
    bad = []
    for p in range(1, 7):
        for q in range(1, 7):
            m = kron(shift_matrix(q).T, Mat.identity(p)) - kron(Mat.identity(q), shift_matrix(p))
            if rank(m) != p * q - min(p, q):
                bad.append((p, q))
    record(2, "rank of the Kronecker system = pq - min(p, q)", not bad, f"mismatches {bad}" if bad else "36 pairs")


def test_03_sum_formula():
    rep = checks.homdim(5, SEED, QQ, count=50)
    record(3, "brute-force hom_dim = sum of min(p_i, q_j) on 50 random pairs",
           not rep["failures"], suite_detail(rep))


def test_04_abelian_structure():
    reps = [checks.abelian(5, SEED, f, count=100) for f in (QQ, GF(7))]
    ok = all(not r["failures"] for r in reps)
    record(4, "kernels, cokernels, images over Q and F_7", ok,
           ", ".join(f"{f}: {suite_detail(r)}" for f, r in zip(("Q", "F7"), reps)))


def test_05_thickness():
    rep = checks.thickness(5, SEED, QQ, count=50)
    record(5, "middle of random extensions is nilpotent, y^(2t) = 0, additive bound",
           not rep["failures"], suite_detail(rep))


def test_06_hom_object_of_blocks():
    bad = []
    for p in range(1, 7):
        for q in range(1, 7):
            obj, iso = jordan_hom_object(p, q)
            m = min(p, q)
            ok = (iso.dst == jordan_block(m) and rank(iso.mat) == m
                  and iso.mat @ obj.endo == jordan_block(m).endo @ iso.mat)
            if not ok:
                bad.append((p, q))
    record(6, "HOM(J_p, J_q) is isomorphic to J_min(p,q)", not bad,
           f"mismatches {bad}" if bad else "36 pairs")


def test_07_tensor_self_adjunction():
    rep = checks.adjoint_tensor(4, SEED, QQ, per_size=10, squares=20)
    record(7, "tensor by (B, b): Jordan type, bijective phi, 20 natural squares",
           not rep["failures"], suite_detail(rep))


def test_08_hom_self_adjunction():
    rep = checks.adjoint_hom(5, SEED, QQ, squares=20)
    fails = rep["failures"]
    dims_bad = [f["triple"] for f in fails if f.get("check") == "dims+bijective"
                and f["dims"] != [f["expected"]] * 2]
    bij_bad = [f["triple"] for f in fails if f.get("check") == "dims+bijective"]
    nat_bad = [f["case"] for f in fails if f.get("check") == "naturality"]
    detail = (f"{suite_detail(rep)}; dimension failures {len(dims_bad)}, "
              f"non-bijective triples {len(bij_bad)}, naturality failures {len(nat_bad)}")
    record(8, "HOM from a Jordan block: dimensions, bijective phi, 20 natural squares",
           not fails, detail)


def test_09_no_injectives_or_projectives():
    rep = checks.noprojinj(4, SEED, QQ)
    record(9, "double embedding never splits, nor its dual, for dim <= 4",
           not rep["failures"], suite_detail(rep))


def test_10_simples_and_grothendieck():
    simple = checks.simples(3, SEED, QQ)
    groth = checks.grothendieck(5, SEED, QQ, count=30)
    ok = not simple["failures"] and not groth["failures"]
    record(10, "(K, 0) is the only simple; g_class additive on 30 sequences", ok,
           f"simples {suite_detail(simple)}, grothendieck {suite_detail(groth)}")


def test_11_divergence_table():
    rep = divergence_report(HomFunctorParam(jordan_block(2)), 2, 4)
    tensor = [r["tensor_dim"] for r in rep.rows]
    hom = [r["hom_dim"] for r in rep.rows]
    ok = tensor == [2, 4, 6, 8] and hom == [1, 2, 2, 2] and rep.divergence_at == 2
    record(11, "divergence table for (K^2, J_2), d = 2", ok,
           f"tensor {tensor}, HOM {hom}, divergence at {rep.divergence_at}")


def test_12_eta():
    rep = checks.eta(4, SEED, QQ, probes=10)
    record(12, "eta is a natural isomorphism over plain objects", not rep["failures"], suite_detail(rep))


def test_13_cli_determinism():
    differing = []
    for suite in sorted(checks.SUITES):
        cmd = [sys.executable, "-m", "nilcat", "check", "--suite", suite, "--seed", str(SEED)]
        first = subprocess.run(cmd, capture_output=True).stdout
        second = subprocess.run(cmd, capture_output=True).stdout
        if first != second or not first:
            differing.append(suite)
    record(13, "nilcat check output is byte-identical across runs", not differing,
           f"differing {differing}" if differing else f"{len(checks.SUITES)} suites")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
