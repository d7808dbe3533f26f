"""Acceptance criteria, one test per criterion.

Each criterion returns a list of (check name, passed) pairs. The test fails
if any check fails; a summary line per criterion is printed at the end of
the pytest run (see conftest.py) and by running this file directly.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

import pytest

from nfold import free
from nfold.categories import get_category
from nfold.kernels import nat_enum_max
from nfold.operad import (
    check_composition,
    closed_form_nat,
    minimal_nat,
    minimal_young,
    operad_B,
    operad_C,
    operad_D,
    random_valid_seeds,
    round_formula,
    tensor_operads,
    verify_all_pairs,
    verify_operad,
)
from nfold.order import nat_category
from nfold.seq import FinSeq, check_sort_triangle, random_seq
from nfold.young import (
    Young,
    Young3,
    check_matrixsort,
    check_minmax,
    conjugate,
    hstack,
    hstack_rows,
    matrix_lex_compare,
    matrixsort_sides,
    random_young,
    random_young3,
    vstack,
    xstack,
    young_partitions,
    young_predecessor,
    ystack,
    zstack,
)

RESULTS: dict = {}

SEEDS5 = {
    (0, 1): [0, 1, 1, 2, 2, 3, 3],
    (0, 0, 1): [0, 0, 1, 1, 1, 2, 2, 2, 3],
    (0, 2): [0, 2, 2, 4, 4, 6, 6],
    (0, 0, 2): [0, 0, 2, 2, 2, 4, 4, 4, 6, 6, 6],
    (0, 1, 2, 4, 8): [0, 1, 2, 4, 8, 8, 9, 10, 12, 16, 16, 17, 18, 20, 24],
}


def _record(num, title, checks, budget, elapsed):
    over = elapsed > budget
    checks = list(checks) + [(f"time {elapsed:.3f}s <= {budget}s", not over)]
    ok = all(passed for _, passed in checks)
    failed = [name for name, passed in checks if not passed]
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}"
    if failed:
        line += " -- failed: " + "; ".join(failed)
    RESULTS[num] = line
    return ok, failed


def _timed(fn):
    t = time.perf_counter()
    checks = fn()
    return checks, time.perf_counter() - t


# --------------------------------------------------------------------------


def criterion_1():
    cat = get_category("seq-nat")
    A, B, C, D = FinSeq([0, 1, 2]), FinSeq([1, 1]), FinSeq([2, 1, 3]), FinSeq([0, 2])
    expected = {
        (1, 2): ([2, 1, 3, 0, 2], [2, 1, 3, 1, 1]),
        (2, 3): ([1, 2, 2, 2, 3, 3], [1, 2, 2, 4, 1, 3]),
        (1, 3): ([2, 3, 3], [3, 2, 3]),
    }
    checks = []
    for (p, q), (lhs, rhs) in expected.items():
        got = cat.interchange(p, q, A, B, C, D)
        checks.append((f"η^{p}{q} lhs", list(got[0]) == lhs))
        checks.append((f"η^{p}{q} rhs", list(got[1]) == rhs))
    return checks


def criterion_2():
    checks = []
    for seeds, prefix in SEEDS5.items():
        got = minimal_nat(seeds, len(prefix)).terms[1:]
        checks.append((f"prefix {seeds}", list(got) == prefix))
    for seeds in SEEDS5:
        dp = minimal_nat(seeds, 16).terms
        enum = minimal_nat(seeds, 16, method="enum").terms
        # independent oracle: recompute each n > l from the dp prefix
        oracle = all(
            max(0, nat_enum_max(list(dp[:n]) + [0], n)) == dp[n] for n in range(len(seeds) + 1, 17)
        )
        checks.append((f"dp == enum n<=16 {seeds}", dp == enum and oracle))
    for seeds in SEEDS5:
        dp = minimal_nat(seeds, 500).terms
        checks.append(
            (f"dp == closed form n<=500 {seeds}", all(dp[n] == closed_form_nat(seeds, n) for n in range(1, 501)))
        )
    rng = random.Random(20240611)
    mismatched = []
    for _ in range(50):
        seeds = random_valid_seeds(rng, max_len=5)
        dp = minimal_nat(seeds, 60).terms
        if any(dp[n] != closed_form_nat(seeds, n) for n in range(1, 61)):
            mismatched.append(tuple(seeds))
    checks.append((f"dp == closed form on 50 random seeds ({len(mismatched)} mismatch, e.g. {mismatched[:2]})", not mismatched))
    return checks


def criterion_3():
    checks = []
    box = minimal_young(Young([1]), 14)
    checks.append(("C_□(n) == round_formula(n), 2<=n<=14", all(box[n] == round_formula(n) for n in range(2, 15))))
    rng = random.Random(7)
    ok = True
    for _ in range(20):
        q = rng.randint(1, 4)
        B = Young(list(young_partitions(q))[rng.randrange(sum(1 for _ in young_partitions(q)))])
        C = minimal_young(B, 12)
        ok &= all(C[n].blocks == q * (n - 1) for n in range(1, 13))
    checks.append(("blocks(C_B(n)) == q(n-1) for 20 seeds", ok))
    return checks


def criterion_4():
    checks = []
    B = operad_B(6)
    v = verify_operad(B, 2, 3, 6)
    comp = v.witness["composition"] if v.witness else None
    checks.append(("B fails γ^23 up to 6", not v.ok))
    lhs, rhs, holds = check_composition(B, 2, 3, (1, 3, 2))
    checks.append(("(1,3,2) is a counterexample with lhs (1,1,2,1) > rhs (1,1,1,1,1)",
                   not holds and list(lhs) == [1, 1, 2, 1] and list(rhs) == [1, 1, 1, 1, 1]))
    checks.append((f"first witness is (k=3, (1,3,2)); enumeration gives k={len(comp or ())}, {comp}",
                   comp == (1, 3, 2)))
    D = operad_D(8)
    vd = verify_operad(D, 1, 2, 8)
    checks.append(("D fails γ^12 at deterministic witness (k=2, (3,1))",
                   not vd.ok and vd.witness["composition"] == (3, 1)
                   and list(vd.witness["lhs"]) == [1, 1, 2] and list(vd.witness["rhs"]) == [1, 1, 1, 3]))
    checks.append(("C is a 3-fold operad up to 8", verify_all_pairs(operad_C(8), 3, 8).ok))
    BC = tensor_operads(operad_B(8), operad_C(8), 1, 2)
    checks.append(("B ⊗'_1 C passes γ^12", verify_operad(BC, 1, 2).ok))
    return checks


def criterion_5():
    A = Young3([[4, 3, 1, 1], [4, 2, 1, 1], [3, 2, 1], [1, 1, 1]])
    B = Young3([[3, 1], [2, 1], [1, 1]])
    checks = [
        ("zstack", zstack(A, B) == Young3([[4, 3, 1, 1], [4, 2, 1, 1], [3, 2, 1], [3, 1, 1], [2, 1], [1, 1], [1, 1]])),
        ("ystack", ystack(A, B) == Young3([[4, 3, 3, 1, 1, 1], [4, 2, 2, 1, 1, 1], [3, 2, 1, 1, 1], [1, 1, 1]])),
        ("xstack", xstack(A, B) == Young3([[7, 4, 1, 1], [6, 3, 1, 1], [4, 3, 1], [1, 1, 1]])),
    ]
    M = [[3, 3, 2, 9], [1, 1, 0, 9], [0, 0, 0, 9], [2, 0, 0, 5], [1, 0, 0, 0]]
    left, right = matrixsort_sides(M)
    checks.append(("matrixsort left", Young3(left) == Young3([[9, 3, 3, 2], [9, 2, 1], [9, 1], [5], [1]])))
    checks.append(("matrixsort right", Young3(right) == Young3([[9, 3, 3, 2], [9, 2, 1], [9, 1], [5, 1]])))
    checks.append(("left < right", matrix_lex_compare(left, right) < 0))
    return checks


def _interchange_all(cat, rng, trials):
    """All p < q interchangers on random quadruples; returns failing pairs."""
    bad = set()
    for _ in range(trials):
        a, b, c, d = (cat.sample(rng) for _ in range(4))
        for p in range(1, cat.n + 1):
            for q in range(p + 1, cat.n + 1):
                if not cat.check_interchange(p, q, a, b, c, d):
                    bad.add((p, q))
    return sorted(bad)


def criterion_6():
    rng = random.Random(11)
    N = 10_000
    checks = []
    checks.append(("sort triangle", all(check_sort_triangle(random_seq(rng), random_seq(rng)) for _ in range(N))))
    ok = True
    for n in range(0, 4):
        lists = list(itertools.product(range(4), repeat=n))
        perms = list(itertools.permutations(range(n)))
        for a in lists:
            for b in lists:
                for s in perms:
                    for t in perms:
                        ok &= check_minmax(a, b, s, t)
    checks.append(("minmax exhaustive", ok))
    ok = all(
        check_matrixsort([list(e[0:3]), list(e[3:6]), list(e[6:9])])
        for e in itertools.product(range(3), repeat=9)
    )
    ok &= all(check_matrixsort([[rng.randint(0, 5) for _ in range(4)] for _ in range(4)]) for _ in range(N))
    checks.append(("matrixsort exhaustive 3x3 <= 2 plus random 4x4", ok))
    for name, dim in [("nat", None), ("seq", None), ("seq-nat", None), ("young2", None),
                      ("young3", None), ("youngN", 3)]:
        cat = get_category(name, dim)
        bad = _interchange_all(cat, rng, N if name != "youngN" else 2000)
        checks.append((f"interchange {cat.name} (failing pairs {bad})", not bad))
    ok = True
    for _ in range(N):
        a, b = random_young(rng), random_young(rng)
        ok &= hstack(a, b).blocks == vstack(a, b).blocks == a.blocks + b.blocks
        x, y = random_young3(rng), random_young3(rng)
        ok &= all(f(x, y).blocks == x.blocks + y.blocks for f in (zstack, ystack, xstack))
    checks.append(("block count conservation", ok))
    ok = True
    for _ in range(N):
        a, b = random_young(rng), random_young(rng)
        ok &= conjugate(hstack(a, b)) == vstack(conjugate(a), conjugate(b))
        ok &= hstack(a, b) == hstack_rows(a, b)
    checks.append(("conjugation duality and hstack dual construction", ok))
    return checks


def criterion_7():
    checks = []
    ok = True
    for n in range(2, 5):
        for p in range(1, n + 1):
            for q in range(p + 1, n + 1):
                src, tgt = free.interchange_shape(p, q)
                ok &= free.morphism_exists(src, tgt) and not free.morphism_exists(tgt, src)
    checks.append(("η^pq shapes, n<=4", ok))
    rng = random.Random(3)
    agree, counts = True, set()
    names = [chr(ord("a") + i) for i in range(8)]
    for _ in range(1000):
        syms = names[: rng.randint(2, 8)]
        e = free.random_linear(rng, syms, 4)
        f = free.random_linear(rng, syms, 4)
        agree &= free.pair_shapes(e, syms) == free.pair_shapes_reference(e, syms)
        counts.add(free.hom_count(e, f))
    checks.append(("fast path == restrict reference on 1000 expressions", agree))
    checks.append(("hom_count in {0,1}", counts <= {0, 1}))
    return checks


def _smaller_young(a):
    prev = young_predecessor(a)
    return prev if prev is not None else Young(a[:-1])


def criterion_8():
    checks = []
    nat = nat_category()
    ok = True
    for seeds in SEEDS5:
        C = minimal_nat(seeds, 12)
        for n in range(len(seeds) + 1, 13):
            if C[n] == 0:
                continue
            ok &= not verify_operad(C.replace(n, C[n] - 1), 1, 2).ok
            ok &= not verify_operad(C.replace(n, C[n] - 1), 1, 2, fast=False).ok
    checks.append(("minimal_nat lowered terms rejected", ok))
    assert nat.n == 2
    ok = True
    for B in (Young([1]), Young([2]), Young([1, 1]), Young([2, 1])):
        C = minimal_young(B, 12)
        for n in range(3, 13):
            low = C.replace(n, _smaller_young(C[n]))
            ok &= not verify_operad(low, 2, 3).ok
    checks.append(("minimal_young lowered terms rejected", ok))
    return checks


CRITERIA = [
    (1, "Seq(ℕ,+) interchange vectors", criterion_1, 0.001),
    (2, "minimal ℕ operads, dp/enum/closed form", criterion_2, 5),
    (3, "Young minimal operads", criterion_3, 30),
    (4, "sharpness counterexamples", criterion_4, 1),
    (5, "3-D Young vectors and matrix sort", criterion_5, 0.001),
    (6, "lemma property suites", criterion_6, 60),
    (7, "coherence decisions", criterion_7, 5),
    (8, "minimality", criterion_8, 30),
]


@pytest.mark.acceptance
@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, budget):
    if budget <= 1:
        fn()  # warm caches so the timed run measures the computation
    checks, elapsed = _timed(fn)
    ok, failed = _record(num, title, checks, budget, elapsed)
    print(RESULTS[num])
    assert ok, RESULTS[num]


if __name__ == "__main__":
    bad = 0
    for num, title, fn, budget in CRITERIA:
        if budget <= 1:
            fn()
        checks, elapsed = _timed(fn)
        ok, _ = _record(num, title, checks, budget, elapsed)
        print(RESULTS[num])
        bad += not ok
    sys.exit(1 if bad else 0)
