"""Fiber census of a polynomial map on F_q and what it reveals.

gamma(f) counts the values c for which f(T) - c splits into deg(f)
distinct linear factors; because deg(f) < q this equals the number of
fibers of full size deg(f), so a single O(q) histogram suffices.  The
much slower gcd-based route is kept as gamma_oracle for cross-checks.
The full-size fibers feed the LRC construction, and the observed gamma
constrains the degree of the splitting field of f(T) - t over F_q(t)
through q/gamma up to a sqrt(q)-relative slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .gf import FieldSpec
from .polyring import Poly, count_distinct_roots_in_field

_NP_TABLE_CAP = 1024


def _np_context(field):
    """Cached numpy acceleration tables for one field, or None."""
    if getattr(field, "_np_ctx_done", False):
        return field._np_ctx
    ctx = None
    if field.prime_degree == 1:
        ctx = ("prime",)
    elif isinstance(field, FieldSpec) and field.q <= _NP_TABLE_CAP:
        q, p, m = field.q, field.p, field.m
        field.mul(1, 1)  # force exp/log build
        exp_np = np.array(field._exp, dtype=np.int64)
        log_np = np.array(field._log, dtype=np.int64)
        mul_t = np.zeros((q, q), dtype=np.int32)
        la = log_np[1:]
        mul_t[1:, 1:] = exp_np[(la[:, None] + la[None, :]) % (q - 1)]
        if p == 2:
            ctx = ("ext2", mul_t)
        else:
            digits = np.empty((q, m), dtype=np.int64)
            t = np.arange(q, dtype=np.int64)
            for i in range(m):
                digits[:, i] = t % p
                t //= p
            powers = p ** np.arange(m, dtype=np.int64)
            add_t = np.empty((q, q), dtype=np.int32)
            for i0 in range(0, q, 128):
                blk = (digits[i0:i0 + 128, None, :] + digits[None, :, :]) % p
                add_t[i0:i0 + 128] = blk @ powers
            ctx = ("extodd", mul_t, add_t)
    field._np_ctx = ctx
    field._np_ctx_done = True
    return ctx


def _check_domain(f: Poly) -> int:
    n = f.degree
    if n < 1 or n >= f.field.q:
        raise PreconditionError("need 1 <= deg(f) < q")
    return n


def _histogram_python(f: Poly) -> dict[int, int]:
    """Reference histogram: a plain evaluation loop over all of F_q."""
    _check_domain(f)
    field = f.field
    add, mul = field.add, field.mul
    rev = f.coeffs[::-1]
    counts: dict[int, int] = {}
    for x in range(field.q):
        acc = 0
        for c in rev:
            acc = add(mul(acc, x), c)
        counts[acc] = counts.get(acc, 0) + 1
    return counts


def value_histogram(f: Poly) -> dict[int, int]:
    """c -> |preimage of c| over all attained values; counts sum to q."""
    _check_domain(f)
    field = f.field
    q = field.q
    ctx = _np_context(field)
    if ctx is None:
        return _histogram_python(f)
    cs = f.coeffs
    xs = np.arange(q, dtype=np.int64)
    acc = np.full(q, cs[-1], dtype=np.int64)
    if ctx[0] == "prime":
        for c in cs[-2::-1]:
            acc = (acc * xs + c) % q
    elif ctx[0] == "ext2":
        mul_t = ctx[1]
        for c in cs[-2::-1]:
            acc = mul_t[acc, xs] ^ c
    else:
        mul_t, add_t = ctx[1], ctx[2]
        for c in cs[-2::-1]:
            acc = add_t[mul_t[acc, xs], c]
    counts = np.bincount(acc, minlength=q)
    return {int(v): int(counts[v]) for v in np.flatnonzero(counts)}


def _stuck_in_pth_powers(f: Poly) -> bool:
    # every monomial exponent divisible by p: no shift of f is separable
    p = f.field.p
    return all(i % p == 0 for i, c in enumerate(f.coeffs) if c and i)


def gamma(f: Poly) -> int:
    """Number of c in F_q for which f(T) - c has deg(f) distinct roots in F_q."""
    n = _check_domain(f)
    if _stuck_in_pth_powers(f):
        return 0
    return sum(1 for v in value_histogram(f).values() if v == n)


def gamma_oracle(f: Poly) -> int:
    """Same count via deg gcd(f - c, T^q - T) per value; cross-check only."""
    n = _check_domain(f)
    if _stuck_in_pth_powers(f):
        return 0
    count = 0
    for c in range(f.field.q):
        if count_distinct_roots_in_field(f.minus_constant(c)) == n:
            count += 1
    return count


def fibers(f: Poly) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """The full-size fibers (c, members), sorted by the encoding of c."""
    n = _check_domain(f)
    field = f.field
    add, mul = field.add, field.mul
    rev = f.coeffs[::-1]
    pre: dict[int, list[int]] = {}
    for x in range(field.q):
        acc = 0
        for c in rev:
            acc = add(mul(acc, x), c)
        pre.setdefault(acc, []).append(x)
    out = [(c, tuple(mem)) for c, mem in pre.items() if len(mem) == n]
    out.sort()
    return tuple(out)


def infer_group_order(f: Poly, slack: float = 8.0) -> tuple[tuple[float, float], tuple[int, ...]]:
    """Candidate degrees of the splitting field of f(T) - t over F_q(t).

    The observed gamma pins q/order up to a relative error slack/sqrt(q);
    every multiple of n dividing n! inside that window is reported, so an
    ambiguous window yields several candidates rather than a forced guess.
    """
    g = gamma(f)
    if g <= 0:
        raise PreconditionError("order inference needs at least one full fiber")
    q = f.field.q
    n = f.degree
    center = q / g
    rel = slack / math.sqrt(q)
    lo = center * (1.0 - rel)
    hi = center * (1.0 + rel)
    nfact = math.factorial(n)
    cands = []
    o = n * max(1, math.ceil(lo / n - 1e-9))
    while o <= hi + 1e-9:
        if nfact % o == 0:
            cands.append(o)
        o += n
    return (lo, hi), tuple(cands)


@dataclass(frozen=True)
class GoodnessReport:
    q: int
    n: int
    gamma: int
    bound: int
    fibers: tuple
    inferred_orders: tuple
    constant_field_is_base: str  # "yes" or "unknown"

    def to_dict(self, include_fibers: bool = True) -> dict:
        d = {"q": self.q, "n": self.n, "gamma": self.gamma, "bound": self.bound}
        if include_fibers:
            d["fibers"] = [{"c": c, "members": list(mem)} for c, mem in self.fibers]
        d["inferred_orders"] = list(self.inferred_orders)
        d["constant_field_is_base"] = self.constant_field_is_base
        return d


def goodness_report(f: Poly, slack: float = 8.0) -> GoodnessReport:
    """Bundle gamma, the floor(q/n) bound, full fibers and order candidates.

    A positive gamma exhibits a completely split fiber, which forces the
    constant field of the splitting field to be F_q itself; gamma = 0 is
    ambiguous, hence "unknown" rather than "no".
    """
    n = _check_domain(f)
    q = f.field.q
    g = gamma(f)
    fib = fibers(f)
    if g > 0:
        _, orders = infer_group_order(f, slack)
        flag = "yes"
    else:
        orders = ()
        flag = "unknown"
    return GoodnessReport(q=q, n=n, gamma=g, bound=q // n, fibers=fib,
                          inferred_orders=orders, constant_field_is_base=flag)
