"""Machine-checkable consequences of the splitting-field structure.

Everything here is computable from factorizations and modular arithmetic:
divisibility witnesses that lower-bound the relative degree of the
splitting field over F_q(x), a feasibility test q^m = 1 (mod n) for that
degree, the exact fiber-count formula for shifted Dickson polynomials,
the count of b with b^2 + c a nonzero square, and the bounds attached to
powers of linearized polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .constructions import AdditiveSubgroup, annihilator, omega_stabilizes
from .errors import PreconditionError
from .gf import FieldSpec
from .polyring import Poly, factor


@dataclass(frozen=True)
class DivisibilityWitness:
    """Factorization shape of f(T) - c and what it divides.

    Whenever f(T) - c has a root in F_q, every irreducible factor degree
    divides the splitting-field degree over F_q(x); whenever it also has a
    simple factor, so does every multiplicity.
    """
    c: int
    factor_degrees: tuple
    multiplicities: tuple
    has_simple_factor: bool
    has_root: bool
    lcm_degrees: int
    lcm_multiplicities: int


def galois_index_lower_bound(f: Poly, seed: int = 0,
                             scan_cap: int = 1 << 14) -> tuple[int, tuple]:
    """A provable lower bound on [M : F_q(x)] from factorization witnesses.

    Scans every attained value c (all of F_q when q <= scan_cap, else the
    values of f on a fixed deterministic sample), factors f(T) - c and
    accumulates the lcm of the admissible degrees and multiplicities.
    """
    if not f.is_monic or f.constant_term != 0:
        raise PreconditionError("expected a normalized polynomial: monic with f(0) = 0")
    field = f.field
    q = field.q
    xs = range(q) if q <= scan_cap else range(1024)
    image = sorted({f.evaluate(x) for x in xs})
    witnesses = []
    bound = 1
    for c in image:
        fac = factor(f.minus_constant(c), seed)
        degs = tuple(sorted(g.degree for g, _ in fac.factors))
        mults = tuple(sorted(e for _, e in fac.factors))
        has_root = any(g.degree == 1 for g, _ in fac.factors)
        has_simple = any(e == 1 for e in mults)
        ld = lcm(*degs) if has_root else 1
        lm = lcm(*mults) if has_simple else 1
        witnesses.append(DivisibilityWitness(
            c=c, factor_degrees=degs, multiplicities=mults,
            has_simple_factor=has_simple, has_root=has_root,
            lcm_degrees=ld, lcm_multiplicities=lm))
        bound = lcm(bound, ld, lm)
    return bound, tuple(witnesses)


def extension_feasibility(n: int, q: int, m: int) -> bool:
    """Whether q^m = 1 (mod n); m can only be the splitting-field degree if so.

    Used contrapositively to rule out small splitting fields when gcd(n, q) = 1.
    """
    if n < 1 or q < 2 or m < 1:
        raise PreconditionError("need n >= 1, q >= 2, m >= 1")
    if gcd(n, q) != 1:
        raise PreconditionError(f"gcd({n}, {q}) != 1")
    return pow(q, m, n) == 1 % n


def dickson_gamma_closed_form(q: int, n: int, eta_a: int | None = None) -> int:
    """Exact fiber count for D_n(T, a) - D_n(0, a), a != 0, gcd(n, q) = 1, n > 2.

    eta_a is the quadratic character of a and must be +-1 when q is odd;
    it is irrelevant when q is even.  Zero whenever q is not +-1 mod n
    (the constant field of the splitting field then exceeds F_q).
    """
    if not isinstance(n, int) or n <= 2:
        raise PreconditionError("n must be an integer > 2")
    if q < 2 or gcd(n, q) != 1:
        raise PreconditionError(f"need gcd(n, q) = 1, got n = {n}, q = {q}")
    qn = q % n
    if qn != 1 and qn != n - 1:
        return 0
    if q % 2 == 1:
        if eta_a not in (-1, 1):
            raise PreconditionError("eta_a must be +1 or -1 for odd q")
        if qn == 1 and eta_a == 1:
            return (q - 3) // (2 * n)
        if qn == n - 1 and eta_a == -1:
            return (q + 1) // (2 * n)
    return q // (2 * n)


def square_shift_count(field: FieldSpec, c: int, mode: str = "closed_form") -> int:
    """Number of b in F_q with b^2 + c a square in F_q^* (q odd, c != 0).

    closed_form: (q-3)/2 when -c is itself a nonzero square, else (q-1)/2.
    brute: direct count, kept as the oracle.
    """
    if field.p == 2:
        raise PreconditionError("defined for odd q only")
    c = field._check(c)
    if c == 0:
        raise PreconditionError("c must be nonzero")
    q = field.q
    if mode == "closed_form":
        return (q - 3) // 2 if field.quadratic_character(field.neg(c)) == 1 else (q - 1) // 2
    if mode == "brute":
        count = 0
        for b in range(q):
            t = field.add(field.mul(b, b), c)
            if t != 0 and field.quadratic_character(t) == 1:
                count += 1
        return count
    raise PreconditionError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class LinearizedBoundsReport:
    """Structure constants for f = h^k, h the annihilator of a subgroup B.

    j is the degree of the k-th root of unity over the largest subfield
    stabilizing B; d is the order of p mod k.  The splitting-field degree
    over F_q(x) is at most p^(l(j-1)), and a completely split value exists
    iff some u0 * F_{p^d} sits inside the image of h and p^(l+d) <= q.
    """
    k: int
    l: int
    p: int
    j: int
    d: int
    upper_bound: int
    split_exists: bool


def _order_mod(a: int, k: int) -> int:
    if k == 1:
        return 1
    d = 1
    t = a % k
    while t != 1:
        t = (t * a) % k
        d += 1
    return d


def stabilizer_subfield_degree(group: AdditiveSubgroup) -> int:
    """Largest e such that the subgroup is a vector space over F_{p^e}."""
    field = group.field
    l = len(group.basis)
    if l == 0:
        return field.m
    for e in sorted((e for e in range(1, gcd(l, field.m) + 1)
                     if l % e == 0 and field.m % e == 0), reverse=True):
        if e == 1:
            return 1
        sub_gen = field.pow(field.generator, (field.q - 1) // (field.p ** e - 1))
        if omega_stabilizes(group, sub_gen):
            return e
    return 1


def linearized_power_bounds(k: int, group: AdditiveSubgroup) -> LinearizedBoundsReport:
    """Evaluate the bounds attached to f = annihilator(B)^k."""
    field = group.field
    p, q = field.p, field.q
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("k must be a positive integer")
    if (q - 1) % k:
        raise PreconditionError(f"q = {q} is not 1 mod k = {k}")
    l = len(group.basis)
    d = _order_mod(p, k)
    e = stabilizer_subfield_degree(group)
    j = d // gcd(d, e)
    upper = p ** (l * (j - 1))

    # image of the annihilator is an F_p-subspace of dimension m - l
    h = annihilator(group)
    image = {h.evaluate(x) for x in range(q)}
    assert field.m % d == 0, "the k-th roots of unity must generate a subfield of F_q"
    sub_gen = field.pow(field.generator, (q - 1) // (p ** d - 1)) if d > 1 else 1
    basis_d = [field.pow(sub_gen, i) for i in range(d)]
    split = False
    if p ** (l + d) <= q:
        for u0 in image:
            if u0 and all(field.mul(u0, b) in image for b in basis_d):
                split = True
                break
    return LinearizedBoundsReport(k=k, l=l, p=p, j=j, d=d,
                                  upper_bound=upper, split_exists=split)
