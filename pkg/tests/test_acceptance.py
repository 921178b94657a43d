"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import itertools
import random
import time

from goodpoly.constructions import span_subgroup
from goodpoly.gf import make_field
from goodpoly.goodness import gamma, infer_group_order
from goodpoly.lrc import (Codeword, build_code, encode, erasure_decode,
                          local_repair, min_distance_bruteforce)
from goodpoly.polyring import Poly
from goodpoly.suites import (suite_dickson_theorem, suite_factor_divisibility,
                             suite_oracle_equivalence, suite_prop1_corollary,
                             suite_squares_lemma)
from goodpoly.theorems import linearized_power_bounds


def _report(num, label, ok, elapsed, budget):
    within = elapsed < budget
    verdict = "PASS" if (ok and within) else "FAIL"
    print(f"ACCEPTANCE {num} {label}: {verdict} "
          f"({elapsed:.1f}s of {budget:.0f}s budget)")
    assert ok, f"criterion {num} ({label}) failed"
    assert within, f"criterion {num} ({label}) exceeded {budget}s: {elapsed:.1f}s"


def test_acceptance_1_reference_example_exactness():
    t0 = time.monotonic()
    F64 = make_field(2, 6)
    f = Poly(F64, [0, 1, 0, 0, 1]) ** 3        # (T^4 - T)^3 in characteristic 2
    g = gamma(f)
    _, candidates = infer_group_order(f)
    ok = g == 5 and 12 in candidates
    _report(1, "q=64 degree-12 family member has 5 full fibers, order 12 inferred",
            ok, time.monotonic() - t0, 1.0)


def test_acceptance_2_subgroup_power_family_attains_bound():
    t0 = time.monotonic()
    records = list(suite_prop1_corollary(qmax=1024, max_n=16))
    ok = len(records) >= 50 and all(r["pass"] for r in records)
    _report(2, f"floor(q/n) attained on {len(records)} generated instances",
            ok, time.monotonic() - t0, 30.0)


def test_acceptance_3_dickson_gamma_formula_exact():
    t0 = time.monotonic()
    failures = 0
    total = 0
    for rec in suite_dickson_theorem(qmax=499, nmax=12):
        total += 1
        if not rec["pass"]:
            failures += 1
    ok = failures == 0 and total > 0
    _report(3, f"closed-form Dickson fiber count exact on {total} instances",
            ok, time.monotonic() - t0, 300.0)


def test_acceptance_4_divisibility_witnesses():
    t0 = time.monotonic()
    records = list(suite_factor_divisibility(trials=100, seed=0))
    f19 = [r for r in records if r["params"].get("check") == "c0-witness-lcm"]
    remark = [r for r in records if "check" not in r["params"]]
    ok = (len(f19) == 1 and f19[0]["pass"]
          and all(r["pass"] for r in records)
          and len(remark) == 100)
    _report(4, "F_19 lcm witness 6 and 100 Dickson shifts factor in degrees {1,2}",
            ok, time.monotonic() - t0, 60.0)


def test_acceptance_5_square_count_oracle_equivalence():
    t0 = time.monotonic()
    records = list(suite_squares_lemma(qmax=199))
    ok = len(records) > 0 and all(r["pass"] for r in records)
    _report(5, f"square-shift closed form equals brute count on {len(records)} (q, c)",
            ok, time.monotonic() - t0, 60.0)


def test_acceptance_6_linearized_square_example():
    t0 = time.monotonic()
    F64 = make_field(2, 6)
    ok = True
    for c in (1, 37, 63):
        B = span_subgroup(F64, (c,))
        rep = linearized_power_bounds(3, B)
        ok &= rep.j == 2 and rep.upper_bound == 2 and rep.split_exists
        from goodpoly.constructions import linearized_power
        f = linearized_power(3, B)
        _, candidates = infer_group_order(f)
        ok &= 12 in candidates
    _report(6, "q=64 two-element subgroup cube: j=2, bound 2, split, order 12",
            ok, time.monotonic() - t0, 30.0)


def test_acceptance_7_lrc_optimality_at_desk_scale():
    t0 = time.monotonic()
    code = build_code(Poly(make_field(13), [0, 0, 0, 1]), k=6)
    ok = code.N == 12 and code.r == 2

    d = min_distance_bruteforce(code)
    ok &= d == 5 == code.N - code.k - (code.k + code.r - 1) // code.r + 2

    rng = random.Random(0)
    msg = tuple(rng.randrange(13) for _ in range(6))
    clean = encode(code, msg).symbols
    for pos in range(code.N):
        damaged = Codeword(clean)
        damaged.symbols[pos] = None
        ok &= local_repair(code, damaged) == clean[pos]
        ok &= damaged.reads == 2

    for size in range(1, 5):
        for pattern in itertools.combinations(range(code.N), size):
            word = Codeword(clean)
            for pos in pattern:
                word.symbols[pos] = None
            if erasure_decode(code, word) != msg:
                ok = False
                break

    _report(7, "N=12 k=6 r=2 code: distance 5, 2-read repair, <=4 erasures decode",
            ok, time.monotonic() - t0, 120.0)


def test_acceptance_8_oracle_equivalence_corpus():
    t0 = time.monotonic()
    records = list(suite_oracle_equivalence(recompose_trials=10 ** 4, seed=0))
    kinds = {r["params"]["kind"] for r in records}
    gamma_corpus = [r for r in records if r["params"]["kind"] == "gamma"]
    qs = {r["params"]["q"] for r in gamma_corpus}
    ok = (all(r["pass"] for r in records)
          and kinds == {"gamma", "factor-recompose", "dickson-forms"}
          and qs == {5, 7, 8, 9, 11, 13})
    _report(8, "gamma oracle corpus, 10^4 factor recompositions, Dickson forms",
            ok, time.monotonic() - t0, 120.0)
