"""Exhaustive verification sweeps, shared by the CLI and the test suite.

Each suite yields one record per instance:
    {"suite": ..., "params": {...}, "expected": ..., "actual": ..., "pass": bool}
Sweeps are deterministic; the GOODPOLY_THREADS environment variable (or an
explicit workers argument) turns the coarse per-field tasks into a process
pool, with results emitted in canonical order either way.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor

from .constructions import (dickson, dickson_shifted, dickson_sum_formula,
                            span_subgroup, subgroup_power_polynomial)
from .gf import is_prime, make_field
from .goodness import gamma, gamma_oracle
from .polyring import Poly, factor
from .theorems import (dickson_gamma_closed_form, galois_index_lower_bound,
                       linearized_power_bounds, square_shift_count)

EVEN_Q_SWEEP = (8, 16, 32, 64, 128)


def worker_count(explicit=None) -> int:
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get("GOODPOLY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _run_tasks(fn, tasks, workers):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, tasks, chunksize=1))


def _prime_powers(limit: int, *, odd_only: bool = False) -> list[tuple[int, int]]:
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        if odd_only and p == 2:
            continue
        m = 1
        while p ** m <= limit:
            out.append((p, m))
            m += 1
    out.sort(key=lambda pm: pm[0] ** pm[1])
    return out


# ---------------------------------------------------------------------------
# dickson-theorem: closed-form fiber count vs brute force, all parameters
# ---------------------------------------------------------------------------

def _dickson_task(args):
    p, m, nmax = args
    field = make_field(p, m)
    q = field.q
    records = []
    for n in range(3, nmax + 1):
        if n >= q or math.gcd(n, q) != 1:
            continue
        for a in range(1, q):
            f = dickson_shifted(field, n, a)
            actual = gamma(f)
            if q % 2 == 1:
                expected = dickson_gamma_closed_form(q, n, field.quadratic_character(a))
            else:
                expected = dickson_gamma_closed_form(q, n)
            records.append({
                "suite": "dickson-theorem",
                "params": {"q": q, "n": n, "a": a},
                "expected": expected,
                "actual": actual,
                "pass": expected == actual,
            })
    return records


def suite_dickson_theorem(qmax: int = 499, nmax: int = 12, workers=None):
    """Closed-form fiber counts for shifted Dickson polynomials, exhaustively.

    Odd prime powers up to qmax plus the even sweep fields; every n in
    [3, nmax] coprime to q (both the +-1 mod n branches and the zero case)
    and every a in F_q^*.
    """
    tasks = [(p, m, nmax) for p, m in _prime_powers(qmax, odd_only=True)]
    tasks += [(2, m, nmax) for m in range(1, 8)
              if 2 ** m in EVEN_Q_SWEEP and 2 ** m <= qmax]
    for records in _run_tasks(_dickson_task, tasks, worker_count(workers)):
        yield from records


# ---------------------------------------------------------------------------
# prop1-corollary: generated subgroup-power family attains floor(q/n)
# ---------------------------------------------------------------------------

def _prop1_task(args):
    p, m, max_n = args
    field = make_field(p, m)
    q = field.q
    records = []
    groups = [((), 0)]  # (basis, l)
    for l in range(1, m + 1):
        if m % l:
            continue
        # the subfield of size p^l, spanned by powers of its generator
        sub_gen = field.pow(field.generator, (q - 1) // (p ** l - 1)) if p ** l > 2 else 1
        basis = tuple(field.pow(sub_gen, i) for i in range(l))
        groups.append((basis, l))
        # a scaled copy: still stable under any root of unity inside F_{p^l}
        u = field.generator
        if u not in span_subgroup(field, basis).members:
            scaled = tuple(field.mul(u, b) for b in basis)
            groups.append((scaled, l))
    alphas = [0, 1 % q, field.generator]
    for basis, l in groups:
        pl = p ** l
        group = span_subgroup(field, basis)
        for k in range(1, max_n + 1):
            n = k * pl
            if n < 2 or n >= q or n > max_n:
                continue
            if (q - 1) % k or (pl - 1) % k:
                continue
            seen = set()
            for alpha in alphas:
                if alpha in seen:
                    continue
                seen.add(alpha)
                f = subgroup_power_polynomial(k, group, alpha)
                actual = gamma(f)
                records.append({
                    "suite": "prop1-corollary",
                    "params": {"q": q, "n": n, "k": k, "l": l, "alpha": alpha,
                               "basis": ";".join(str(b) for b in basis)},
                    "expected": q // n,
                    "actual": actual,
                    "pass": actual == q // n,
                })
    return records


def suite_prop1_corollary(qmax: int = 1024, max_n: int = 16, workers=None):
    """The generated family (h + c)^k - c^k attains the floor(q/n) bound."""
    tasks = []
    for p in (2, 3, 5):
        m = 1
        while p ** m <= qmax:
            tasks.append((p, m, max_n))
            m += 1
    for records in _run_tasks(_prop1_task, tasks, worker_count(workers)):
        yield from records


# ---------------------------------------------------------------------------
# factor-divisibility: the F_19 lcm witness plus the Dickson degree remark
# ---------------------------------------------------------------------------

def reference_f19_poly() -> Poly:
    field = make_field(19)
    x = Poly.x(field)
    f = x * (x * x + Poly.one(field))
    g = Poly(field, [1, 2, 0, 1])  # T^3 + 2T + 1
    return f * g


def suite_factor_divisibility(trials: int = 100, seed: int = 0):
    """lcm lower bound on the F_19 reference product, then random Dickson
    value shifts whose irreducible factors must all have degree 1 or 2."""
    f = reference_f19_poly()
    bound, witnesses = galois_index_lower_bound(f, seed)
    w0 = next(w for w in witnesses if w.c == 0)
    yield {
        "suite": "factor-divisibility",
        "params": {"q": 19, "poly": f.to_string(), "check": "c0-witness-lcm"},
        "expected": 6,
        "actual": w0.lcm_degrees,
        "pass": w0.lcm_degrees == 6,
    }
    yield {
        "suite": "factor-divisibility",
        "params": {"q": 19, "poly": f.to_string(), "check": "bound-divisible-by-6"},
        "expected": "multiple of 6",
        "actual": bound,
        "pass": bound % 6 == 0,
    }
    rng = random.Random(seed)
    pool = [(p, m) for p, m in _prime_powers(343) if p ** m >= 7]
    for t in range(trials):
        while True:
            n = rng.choice((3, 5, 7, 9, 11))
            p, m = rng.choice(pool)
            q = p ** m
            if n < q and math.gcd(n, q) == 1 and q % n in (1, n - 1):
                break
        field = make_field(p, m)
        a = rng.randrange(1, q)
        f = dickson(field, n, a)
        c = f.evaluate(rng.randrange(q))
        fac = factor(f.minus_constant(c), seed + t)
        degs = sorted({g.degree for g, _ in fac.factors})
        yield {
            "suite": "factor-divisibility",
            "params": {"q": q, "n": n, "a": a, "c": c},
            "expected": "factor degrees within {1,2}",
            "actual": f"factor degrees {degs}",
            "pass": all(d in (1, 2) for d in degs),
        }


# ---------------------------------------------------------------------------
# squares-lemma: closed form equals brute count for every (q, c)
# ---------------------------------------------------------------------------

def _squares_task(args):
    p, m = args
    field = make_field(p, m)
    q = field.q
    records = []
    for c in range(1, q):
        expected = square_shift_count(field, c, "closed_form")
        actual = square_shift_count(field, c, "brute")
        records.append({
            "suite": "squares-lemma",
            "params": {"q": q, "c": c},
            "expected": expected,
            "actual": actual,
            "pass": expected == actual,
        })
    return records


def suite_squares_lemma(qmax: int = 199, workers=None):
    """Count of b with b^2 + c a nonzero square: closed form vs exhaustion."""
    tasks = _prime_powers(qmax, odd_only=True)
    for records in _run_tasks(_squares_task, tasks, worker_count(workers)):
        yield from records


# ---------------------------------------------------------------------------
# linearized-bounds: structure constants of annihilator powers
# ---------------------------------------------------------------------------

def suite_linearized_bounds(seed: int = 0):
    """Two-element subgroups over F_64 (j = 2, bound 2, split exists) and
    subfield subgroups where the j lower bound is achieved."""
    f64 = make_field(2, 6)
    for c in range(1, f64.q):
        group = span_subgroup(f64, (c,))
        rep = linearized_power_bounds(3, group)
        got = (rep.j, rep.upper_bound, rep.split_exists)
        yield {
            "suite": "linearized-bounds",
            "params": {"q": 64, "k": 3, "basis": str(c)},
            "expected": [2, 2, True],
            "actual": list(got),
            "pass": got == (2, 2, True),
        }
    subfield_cases = [(2, 6, 2, 3), (2, 6, 3, 7), (3, 4, 2, 4), (3, 4, 2, 8),
                      (5, 2, 1, 2), (5, 2, 1, 4), (2, 4, 2, 3), (3, 2, 1, 2)]
    for p, m, l, k in subfield_cases:
        field = make_field(p, m)
        q = field.q
        if (q - 1) % k or (p ** l - 1) % k:
            continue
        sub_gen = field.pow(field.generator, (q - 1) // (p ** l - 1)) if p ** l > 2 else 1
        basis = tuple(field.pow(sub_gen, i) for i in range(l))
        rep = linearized_power_bounds(k, span_subgroup(field, basis))
        d = rep.d
        expected_j = d // math.gcd(d, l)
        ok = rep.j == expected_j and expected_j <= rep.j <= d
        yield {
            "suite": "linearized-bounds",
            "params": {"q": q, "k": k, "l": l, "subfield": True},
            "expected": expected_j,
            "actual": rep.j,
            "pass": ok,
        }


# ---------------------------------------------------------------------------
# oracle-equivalence: gamma vs gamma_oracle, factor recomposition, Dickson forms
# ---------------------------------------------------------------------------

def _oracle_task(args):
    p, m, max_deg = args
    field = make_field(p, m)
    q = field.q
    records = []
    for deg in range(1, max_deg + 1):
        mism = 0
        count = 0
        for enc in range(q ** (deg - 1)):
            cs = [0]
            t = enc
            for _ in range(deg - 1):
                cs.append(t % q)
                t //= q
            cs.append(1)
            f = Poly._make(field, cs)
            count += 1
            if gamma(f) != gamma_oracle(f):
                mism += 1
        records.append({
            "suite": "oracle-equivalence",
            "params": {"kind": "gamma", "q": q, "deg": deg, "count": count},
            "expected": 0,
            "actual": mism,
            "pass": mism == 0,
        })
    return records


def suite_oracle_equivalence(recompose_trials: int = 10 ** 4, seed: int = 0,
                             workers=None):
    """gamma == gamma_oracle on the exhaustive small corpus; factorizations
    recompose exactly; Dickson recurrence == lifted sum formula."""
    tasks = [(q, 1, 4) for q in (5, 7, 11, 13)] + [(2, 3, 4), (3, 2, 4)]
    for records in _run_tasks(_oracle_task, tasks, worker_count(workers)):
        yield from records

    rng = random.Random(seed)
    pool = [make_field(p, m) for p, m in ((5, 1), (7, 1), (13, 1), (2, 3),
                                          (3, 2), (2, 4), (5, 2), (3, 3))]
    bad = 0
    for t in range(recompose_trials):
        field = pool[t % len(pool)]
        deg = rng.randrange(1, 9)
        cs = [rng.randrange(field.q) for _ in range(deg)]
        cs.append(rng.randrange(1, field.q))
        f = Poly._make(field, cs)
        if factor(f, seed=t).product() != f:
            bad += 1
    yield {
        "suite": "oracle-equivalence",
        "params": {"kind": "factor-recompose", "trials": recompose_trials},
        "expected": 0,
        "actual": bad,
        "pass": bad == 0,
    }

    for q, m in ((5, 1), (7, 1), (13, 1), (3, 2)):
        field = make_field(q, m)
        mism = 0
        for n in range(1, 21):
            for a in range(field.q):
                if dickson(field, n, a) != dickson_sum_formula(field, n, a):
                    mism += 1
        yield {
            "suite": "oracle-equivalence",
            "params": {"kind": "dickson-forms", "q": field.q, "nmax": 20},
            "expected": 0,
            "actual": mism,
            "pass": mism == 0,
        }


SUITES = {
    "dickson-theorem": suite_dickson_theorem,
    "prop1-corollary": suite_prop1_corollary,
    "factor-divisibility": suite_factor_divisibility,
    "squares-lemma": suite_squares_lemma,
    "linearized-bounds": suite_linearized_bounds,
    "oracle-equivalence": suite_oracle_equivalence,
}


def run_suite(name: str, *, qmax=None, trials=None, seed: int = 0, workers=None):
    """Dispatch one named suite with its relevant knobs applied."""
    if name == "dickson-theorem":
        return suite_dickson_theorem(qmax=qmax or 499, workers=workers)
    if name == "prop1-corollary":
        return suite_prop1_corollary(qmax=qmax or 1024, workers=workers)
    if name == "factor-divisibility":
        return suite_factor_divisibility(trials=trials or 100, seed=seed)
    if name == "squares-lemma":
        return suite_squares_lemma(qmax=qmax or 199, workers=workers)
    if name == "linearized-bounds":
        return suite_linearized_bounds(seed=seed)
    if name == "oracle-equivalence":
        return suite_oracle_equivalence(recompose_trials=trials or 10 ** 4,
                                        seed=seed, workers=workers)
    raise KeyError(name)
