"""Generators for the polynomial families with small splitting fields.

Covers annihilators of additive subgroups, k-th powers of such annihilators
shifted the right way ((h + c)^k - c^k, the "prop1" family descriptor),
Dickson polynomials of the first kind, and monic normalization.  Dickson
polynomials are computed by the three-term recurrence, which is safe in any
characteristic; the closed binomial sum is kept as an oracle, evaluated by
lifting the integer weights to Z before reducing mod p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import FormatError, PreconditionError
from .gf import FieldSpec
from .polyring import Poly


@dataclass(frozen=True)
class AdditiveSubgroup:
    """An additive subgroup of F_q, spanned by F_p-independent basis elements."""
    field: FieldSpec
    basis: tuple
    members: tuple


def _fp_rank(rows: list[list[int]], p: int) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(v - c * w) % p for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def span_subgroup(field: FieldSpec, basis) -> AdditiveSubgroup:
    """Enumerate the F_p-span of independent basis elements."""
    basis = tuple(field._check(b) for b in basis)
    if basis:
        rows = [list(field.coords(b)) for b in basis]
        if _fp_rank(rows, field.p) < len(basis):
            raise PreconditionError("basis elements are F_p-dependent")
    members = set()
    add, mul = field.add, field.mul
    for scalars in itertools.product(range(field.p), repeat=len(basis)):
        acc = 0
        for s, b in zip(scalars, basis):
            acc = add(acc, mul(b, s))
        members.add(acc)
    return AdditiveSubgroup(field=field, basis=basis, members=tuple(sorted(members)))


def annihilator(group: AdditiveSubgroup) -> Poly:
    """The monic polynomial vanishing exactly on the subgroup.

    Always F_p-linearized: only exponents that are powers of p survive.
    """
    field = group.field
    f = Poly.one(field)
    x = Poly.x(field)
    for b in group.members:
        f = f * (x - Poly.constant(field, b))
    return f


def omega_stabilizes(group: AdditiveSubgroup, omega: int) -> bool:
    """True iff scaling the subgroup by omega permutes it."""
    field = group.field
    field._check(omega)
    members = set(group.members)
    return {field.mul(omega, b) for b in members} == members


def subgroup_power_polynomial(k: int, group: AdditiveSubgroup, alpha: int = 0) -> Poly:
    """(h(T) + c)^k - c^k with h the subgroup annihilator and c = h(alpha).

    Requires k | q - 1 and k | |B| - 1, and the subgroup must be stable
    under the primitive k-th root of unity g^((q-1)/k).  These are exactly
    the polynomials whose map on F_q attains the floor(q/n) bound, n = deg.
    """
    field = group.field
    q = field.q
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("k must be a positive integer")
    if (q - 1) % k:
        raise PreconditionError(f"q = {q} is not 1 mod k = {k}")
    if (len(group.members) - 1) % k:
        raise PreconditionError(f"|B| = {len(group.members)} is not 1 mod k = {k}")
    omega = field.pow(field.generator, (q - 1) // k)
    if not omega_stabilizes(group, omega):
        raise PreconditionError("subgroup is not stable under the primitive k-th root of unity")
    alpha = field._check(alpha)
    h = annihilator(group)
    c = h.evaluate(alpha)
    f = h.minus_constant(field.neg(c)) ** k  # (h + c)^k
    return f.minus_constant(field.pow(c, k))


def linearized_power(k: int, group: AdditiveSubgroup) -> Poly:
    """The k-th power of the subgroup annihilator, degree k * |B|."""
    field = group.field
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("k must be a positive integer")
    if (field.q - 1) % k:
        raise PreconditionError(f"q = {field.q} is not 1 mod k = {k}")
    return annihilator(group) ** k


def dickson(field, n: int, a: int) -> Poly:
    """Dickson polynomial of the first kind of degree n with parameter a.

    Uses D_0 = 2, D_1 = T, D_n = T*D_{n-1} - a*D_{n-2}; no binomial
    coefficients, so no characteristic pitfalls.
    """
    if not isinstance(n, int) or n < 1:
        raise PreconditionError("degree must be a positive integer")
    field._check(a)
    x = Poly.x(field)
    prev = Poly.constant(field, 2 % field.p)
    cur = x
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev.scale(a)
    return cur


def dickson_sum_formula(field, n: int, a: int) -> Poly:
    """Direct-sum oracle: weights computed exactly in Z, then reduced mod p."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError("degree must be a positive integer")
    field._check(a)
    cs = [0] * (n + 1)
    for i in range(n // 2 + 1):
        w = comb(n - i, i) + (comb(n - i - 1, i - 1) if i else 0)  # n/(n-i) * C(n-i, i)
        term = field.mul(w % field.p, field.pow(field.neg(a), i))
        cs[n - 2 * i] = term
    return Poly(field, cs)


def dickson_shifted(field, n: int, a: int) -> Poly:
    """Dickson polynomial with its constant term removed: monic, f(0) = 0."""
    d = dickson(field, n, a)
    return d.minus_constant(d.constant_term)


def normalize(f: Poly) -> tuple[Poly, tuple[int, int]]:
    """Return lc(f)^-1 * (f - f(0)) and the (scale, shift) that was removed.

    Both transforms permute values and fibers, so the fiber census is
    unchanged.
    """
    if f.degree < 1:
        raise PreconditionError("normalization needs a non-constant polynomial")
    scale = f.lc
    shift = f.constant_term
    g = f.minus_constant(shift)
    if scale != 1:
        g = g.scale(f.field.inv(scale))
    return g, (scale, shift)


# ---------------------------------------------------------------------------
# CLI family descriptors
# ---------------------------------------------------------------------------

def parse_descriptor(text: str) -> tuple[str, dict[str, str]]:
    """Split "kind:key=val,key=val" into its pieces."""
    if ":" in text:
        kind, rest = text.split(":", 1)
    else:
        kind, rest = text, ""
    params: dict[str, str] = {}
    if rest.strip():
        for part in rest.split(","):
            if "=" not in part:
                raise FormatError(f"bad descriptor parameter {part!r}")
            key, val = part.split("=", 1)
            params[key.strip()] = val.strip()
    return kind.strip(), params


def _int_param(params: dict[str, str], key: str, default=None) -> int:
    if key not in params:
        if default is None:
            raise FormatError(f"descriptor is missing required parameter {key!r}")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise FormatError(f"parameter {key!r} must be an integer, got {params[key]!r}")


def _parse_basis(params: dict[str, str]) -> tuple[int, ...]:
    text = params.get("basis", "")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(";"))
    except ValueError:
        raise FormatError(f"bad basis list {text!r}")


def family_members(field: FieldSpec, descriptor: str):
    """Yield (label, poly) for each member of a family descriptor.

    Descriptors: "monomial:n=4", "dickson:n=5[,a=3]" (no a sweeps F_q^*),
    "prop1:k=3,basis=1;2[,alpha=0]", "linpow:k=3,basis=9", and for search
    "exhaustive:max-degree=D[,min-degree=d]" over monic f with f(0) = 0.
    """
    kind, params = parse_descriptor(descriptor)
    if kind == "monomial":
        n = _int_param(params, "n")
        if n < 1:
            raise PreconditionError("monomial degree must be positive")
        yield f"monomial:n={n}", Poly._make(field, [0] * n + [1])
    elif kind == "dickson":
        n = _int_param(params, "n")
        if "a" in params:
            avals = [_int_param(params, "a")]
        else:
            avals = list(range(1, field.q))
        for a in avals:
            yield f"dickson:n={n},a={a}", dickson_shifted(field, n, a)
    elif kind == "prop1":
        k = _int_param(params, "k")
        alpha = _int_param(params, "alpha", 0)
        group = span_subgroup(field, _parse_basis(params))
        basis_txt = ";".join(str(b) for b in group.basis)
        yield (f"prop1:k={k},basis={basis_txt},alpha={alpha}",
               subgroup_power_polynomial(k, group, alpha))
    elif kind == "linpow":
        k = _int_param(params, "k")
        group = span_subgroup(field, _parse_basis(params))
        basis_txt = ";".join(str(b) for b in group.basis)
        yield f"linpow:k={k},basis={basis_txt}", linearized_power(k, group)
    elif kind == "exhaustive":
        dmax = _int_param(params, "max-degree")
        dmin = _int_param(params, "min-degree", dmax)
        if dmin < 1:
            raise PreconditionError("min-degree must be >= 1")
        q = field.q
        for deg in range(dmin, dmax + 1):
            for enc in range(q ** (deg - 1)):
                cs = [0]
                t = enc
                for _ in range(deg - 1):
                    cs.append(t % q)
                    t //= q
                cs.append(1)
                f = Poly._make(field, cs)
                yield f.to_string(), f
    else:
        raise FormatError(f"unknown family kind {kind!r}")
