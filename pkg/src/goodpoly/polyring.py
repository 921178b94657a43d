"""Dense univariate polynomials over a finite field.

Coefficients are stored as canonical integer encodings, constant term
first, with no trailing zeros; the zero polynomial has an empty tuple.
Complete factorization runs squarefree decomposition, then distinct-degree
splitting, then randomized equal-degree splitting, and is reproducible for
a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import FormatError, PreconditionError
from .gf import Field


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = []
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < field.q:
                raise PreconditionError(
                    f"coefficients must be canonical integers in [0, {field.q}), got {c!r}")
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _make(cls, field: Field, cs: list[int]) -> "Poly":
        # trusted coefficients, trimmed in place
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._make(field, [])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls.constant(field, 1)

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._make(field, [0, 1])

    @classmethod
    def constant(cls, field: Field, c: int) -> "Poly":
        field._check(c)
        return cls._make(field, [c])

    @classmethod
    def from_string(cls, field: Field, text: str) -> "Poly":
        """Parse the comma-separated encoding form, e.g. "0,0,0,1" for T^3."""
        try:
            cs = [int(t) for t in text.split(",")] if text.strip() else []
        except ValueError:
            raise FormatError(f"bad polynomial text {text!r}")
        return cls(field, cs)

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # -- basic structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def encoding(self) -> int:
        """Base-q integer of the coefficient sequence; a total order on polys."""
        e = 0
        for c in reversed(self.coeffs):
            e = e * self.field.q + c
        return e

    def _same_field(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or self.field != other.field:
            raise PreconditionError("polynomials belong to different fields")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Poly)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.to_string()!r} over {self.field})"

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = add(cs[i], c)
        return Poly._make(self.field, cs)

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly._make(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        field = self.field
        add, mul = field.add, field.mul
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        cs[i + j] = add(cs[i + j], mul(x, y))
        return Poly._make(self.field, cs)

    def scale(self, c: int) -> "Poly":
        mul = self.field.mul
        return Poly._make(self.field, [mul(v, c) for v in self.coeffs])

    def minus_constant(self, c: int) -> "Poly":
        """self - c for a field element c."""
        cs = list(self.coeffs) if self.coeffs else [0]
        cs[0] = self.field.sub(cs[0], c)
        return Poly._make(self.field, cs)

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise PreconditionError("polynomial powers take non-negative integer exponents")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        dg = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < dg:
            return Poly.zero(field), self
        inv_lc = field.inv(other.coeffs[-1])
        quot = [0] * (len(rem) - dg)
        sub, mul = field.sub, field.mul
        for top in range(len(rem) - 1, dg - 1, -1):
            c = rem[top]
            if c:
                qc = mul(c, inv_lc)
                quot[top - dg] = qc
                off = top - dg
                for i in range(dg):
                    rem[off + i] = sub(rem[off + i], mul(qc, other.coeffs[i]))
                rem[top] = 0
        return Poly._make(field, quot), Poly._make(field, rem[:dg])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -- maps ---------------------------------------------------------------

    def evaluate(self, a: int) -> int:
        field = self.field
        field._check(a)
        add, mul = field.add, field.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, a), c)
        return acc

    def derivative(self) -> "Poly":
        field = self.field
        p = field.p
        mul = field.mul
        cs = [mul(self.coeffs[i], i % p) for i in range(1, len(self.coeffs))]
        return Poly._make(field, cs)

    def compose(self, g: "Poly") -> "Poly":
        """self(g(T)), Horner over polynomials."""
        self._same_field(g)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly.constant(self.field, c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._same_field(g)
    if f.is_zero and g.is_zero:
        raise PreconditionError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.field) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def frobenius_power(f: Poly, j: int = 1) -> Poly:
    """The residue T^(q^j) mod f, by repeated q-th powering."""
    if f.degree < 1:
        raise PreconditionError("modulus must be non-constant")
    if j < 1:
        raise PreconditionError("j must be >= 1")
    h = Poly.x(f.field) % f
    for _ in range(j):
        h = _powmod(h, f.field.q, f)
    return h


def count_distinct_roots_in_field(f: Poly) -> int:
    """deg gcd(f, T^q - T), without ever materializing T^q."""
    if f.is_zero:
        raise PreconditionError("the zero polynomial vanishes everywhere")
    if f.degree == 0:
        return 0
    diff = frobenius_power(f, 1) - (Poly.x(f.field) % f)
    if diff.is_zero:
        return f.degree
    return poly_gcd(f, diff).degree


# ---------------------------------------------------------------------------
# Factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple  # ((Poly, multiplicity), ...) sorted by (degree, encoding)

    def product(self) -> Poly:
        field = self.factors[0][0].field
        acc = Poly.constant(field, self.unit)
        for g, e in self.factors:
            acc = acc * g ** e
        return acc


def _pth_root_poly(f: Poly) -> Poly:
    # f with zero derivative: every exponent is a multiple of p
    field = f.field
    p = field.p
    root_exp = p ** (field.prime_degree - 1)
    cs = [field.pow(f.coeffs[i], root_exp) for i in range(0, len(f.coeffs), p)]
    return Poly._make(field, cs)


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    # f monic non-constant -> [(monic squarefree, multiplicity), ...]
    p = f.field.p
    df = f.derivative()
    if df.is_zero:
        return [(g, e * p) for g, e in _squarefree_parts(_pth_root_poly(f))]
    out = []
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        out.extend((g, e * p) for g, e in _squarefree_parts(_pth_root_poly(c)))
    return out


def _distinct_degree(u: Poly) -> list[tuple[Poly, int]]:
    # u monic squarefree -> [(product of all irreducible factors of degree d, d)]
    field = u.field
    q = field.q
    out = []
    h = Poly.x(field) % u
    d = 0
    while u.degree > 0 and u.degree >= 2 * (d + 1):
        d += 1
        h = _powmod(h, q, u)
        g = poly_gcd(u, h - (Poly.x(field) % u))
        if g.degree > 0:
            out.append((g, d))
            u = u // g
            h = h % u
    if u.degree > 0:
        out.append((u, u.degree))
    return out


def _equal_degree_split(u: Poly, d: int, rng: random.Random) -> Poly:
    field = u.field
    q = field.q
    for _ in range(64):
        a = Poly._make(field, [rng.randrange(q) for _ in range(u.degree)])
        if a.degree < 1:
            continue
        g = poly_gcd(u, a)
        if 0 < g.degree < u.degree:
            return g
        if field.p == 2:
            # splitter from the sum of Frobenius powers down to F_2
            steps = field.prime_degree * d
            t = a % u
            acc = t
            for _ in range(steps - 1):
                t = _powmod(t, 2, u)
                acc = acc + t
            g = poly_gcd(u, acc)
        else:
            b = _powmod(a, (q ** d - 1) // 2, u)
            g = poly_gcd(u, b - Poly.one(field))
        if 0 < g.degree < u.degree:
            return g
    raise RuntimeError("equal-degree splitting failed after 64 attempts")


def _equal_degree(u: Poly, d: int, rng: random.Random) -> list[Poly]:
    if u.degree == d:
        return [u]
    g = _equal_degree_split(u, d, rng)
    return _equal_degree(g, d, rng) + _equal_degree(u // g, d, rng)


def factor(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles with multiplicities.

    Deterministic for a fixed seed; the sorted output is in fact identical
    across seeds because the factor set itself is unique.
    """
    if f.degree < 1:
        raise PreconditionError("cannot factor a constant polynomial")
    rng = random.Random(seed)
    unit = f.lc
    pairs = []
    for sq, mult in _squarefree_parts(f.monic()):
        for prod, d in _distinct_degree(sq):
            for irr in _equal_degree(prod, d, rng):
                pairs.append((irr, mult))
    pairs.sort(key=lambda t: (t[0].degree, t[0].encoding()))
    return Factorization(unit=unit, factors=tuple(pairs))


def roots_in_field(f: Poly, seed: int = 0) -> tuple[tuple[int, int], ...]:
    """All roots in F_q with multiplicities, sorted by encoding."""
    fac = factor(f, seed)
    neg = f.field.neg
    out = [(neg(g.coeffs[0]), e) for g, e in fac.factors if g.degree == 1]
    out.sort()
    return tuple(out)
