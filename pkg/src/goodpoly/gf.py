"""Exact arithmetic in small finite fields F_{p^m}.

An element of F_{p^m} is identified with its canonical integer encoding
enc(a) = sum(c_i * p**i), where (c_0, ..., c_{m-1}) are its polynomial-basis
coordinates, constant term first.  All kernel operations (add, mul, inv,
pow, ...) act directly on these integers, which keeps hot loops cheap;
FieldElement is a thin operator-aware wrapper that also carries its owning
field so that cross-field mistakes are caught.

Fields are immutable after construction (internal lookup tables are filled
lazily but never change observable behaviour) and safe to share freely
between workers.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional, Sequence

from .errors import FormatError, PreconditionError

# exp/log tables are only built for fields up to this cardinality
_EXP_TABLE_CAP = 1 << 14


def is_prime(n: int) -> bool:
    """Trial-division primality check; inputs here are always small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense F_p[T] helpers (plain coefficient lists, constant term first).  Used
# for modulus validation and the deterministic default-modulus search, i.e.
# before any FieldSpec exists.
# ---------------------------------------------------------------------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f must be monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            off = len(a) - 1 - df
            for i in range(df):
                a[off + i] = (a[off + i] - c * f[i]) % p
        a.pop()
    return _fp_trim(a)


def _fp_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _fp_mod(a, f, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), f, p)
        base = _fp_mod(_fp_mul(base, base, p), f, p)
        e >>= 1
    return result


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _fp_mod(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _fp_minus_x(a: Sequence[int], p: int) -> list[int]:
    out = list(a)
    while len(out) < 2:
        out.append(0)
    out[1] = (out[1] - 1) % p
    return _fp_trim(out)


def _fp_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p, constant term first."""
    m = len(f) - 1
    if m <= 0:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    powers = {}
    t = [0, 1]
    for j in range(1, m + 1):
        t = _fp_powmod(t, p, f, p)
        powers[j] = t
    if _fp_minus_x(powers[m], p):
        return False
    for ell in _prime_factors(m):
        g = _fp_gcd(f, _fp_minus_x(powers[m // ell], p), p)
        if len(g) - 1 != 0:
            return False
    return True


_MIN_IRREDUCIBLE_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def _min_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The monic irreducible of degree m over F_p whose non-leading
    coefficients have the smallest base-p encoding."""
    key = (p, m)
    cached = _MIN_IRREDUCIBLE_CACHE.get(key)
    if cached is not None:
        return cached
    if m == 1:
        result = (0, 1)
    else:
        enc = 0
        while True:
            coeffs = []
            t = enc
            for _ in range(m):
                coeffs.append(t % p)
                t //= p
            if t == 0 and _fp_is_irreducible(coeffs + [1], p):
                result = tuple(coeffs + [1])
                break
            enc += 1
    _MIN_IRREDUCIBLE_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# Field kernel
# ---------------------------------------------------------------------------

class Field:
    """Shared kernel for F_q and its quadratic extension.

    Subclasses provide p, q, prime_degree and the raw add/neg/mul; this base
    supplies exp/log acceleration, powers, inversion, generator search, the
    quadratic character and the absolute trace.
    """

    p: int
    q: int
    prime_degree: int
    _wants_tables = True

    def _init_tables(self) -> None:
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        self._generator: Optional[int] = None

    # -- element access -----------------------------------------------------

    def _check(self, a: int) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise PreconditionError(
                f"element encoding must be an integer in [0, {self.q}), got {a!r}")
        return a

    def element(self, enc: int) -> "FieldElement":
        return FieldElement(self, self._check(enc))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> range:
        return range(self.q)

    # -- raw arithmetic supplied by subclasses --------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def _raw_mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    # -- derived kernel -------------------------------------------------------

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _tables_ready(self) -> bool:
        if self._exp is not None:
            return True
        if self._wants_tables and self.q <= _EXP_TABLE_CAP:
            self._build_tables()
            return True
        return False

    def _build_tables(self) -> None:
        g = self.generator
        q = self.q
        exp = [0] * (q - 1)
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, g)
        self._exp = exp
        self._log = log

    def mul(self, a: int, b: int) -> int:
        if self._tables_ready():
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of the zero element")
        if self._tables_ready():
            return self._exp[-self._log[a] % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._tables_ready():
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._raw_pow(a, e)

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    @property
    def generator(self) -> int:
        """Encoding-minimal generator of the multiplicative group."""
        if self._generator is None:
            q = self.q
            if q == 2:
                self._generator = 1
            else:
                checks = [(q - 1) // r for r in _prime_factors(q - 1)]
                g = 2
                while True:
                    if all(self._raw_pow(g, e) != 1 for e in checks):
                        break
                    g += 1
                self._generator = g
        return self._generator

    def quadratic_character(self, a: int) -> int:
        """+1 on nonzero squares, -1 on non-squares, 0 at zero; odd q only."""
        if self.p == 2:
            raise PreconditionError("quadratic character is undefined in characteristic 2")
        a = self._check(a)
        if a == 0:
            return 0
        if self._tables_ready():
            return 1 if self._log[a] % 2 == 0 else -1
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def absolute_trace(self, a: int) -> int:
        """Trace down to the prime subfield, returned as a residue mod p."""
        a = self._check(a)
        p = self.p
        t = a
        s = a
        for _ in range(self.prime_degree - 1):
            t = self.pow(t, p)
            s = self.add(s, t)
        assert s < p, "trace landed outside the prime subfield"
        return s


class FieldSpec(Field):
    """The field F_{p^m} with a fixed monic irreducible modulus over F_p."""

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.prime_degree = m
        self.modulus = tuple(modulus)
        self._wants_tables = m > 1
        self._init_tables()
        self._quad_ext: Optional["QuadraticExtension"] = None
        # coordinates of T^j mod modulus for j = m .. 2m-2, used by _raw_mul
        red: list[tuple[int, ...]] = []
        if m > 1:
            row = [(-self.modulus[i]) % p for i in range(m)]
            red.append(tuple(row))
            for _ in range(m, 2 * m - 2):
                c = row[m - 1]
                row = [0] + row[:-1]
                if c:
                    base = red[0]
                    row = [(row[i] + c * base[i]) % p for i in range(m)]
                red.append(tuple(row))
        self._red = red

    # -- coordinates ----------------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        t = a
        for _ in range(self.m):
            out.append(t % p)
            t //= p
        return tuple(out)

    def from_coords(self, cs: Sequence[int]) -> int:
        if len(cs) != self.m:
            raise PreconditionError(f"expected {self.m} coordinates, got {len(cs)}")
        enc = 0
        mult = 1
        for c in cs:
            if not 0 <= c < self.p:
                raise PreconditionError(f"coordinate {c} out of range [0, {self.p})")
            enc += c * mult
            mult *= self.p
        return enc

    # -- raw arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        s = 0
        mult = 1
        while a or b:
            s += ((a % p) + (b % p)) % p * mult
            a //= p
            b //= p
            mult *= p
        return s

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return (-a) % p
        if p == 2:
            return a
        s = 0
        mult = 1
        while a:
            s += (-a % p) % p * mult
            a //= p
            mult *= p
        return s

    def _raw_mul(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a * b) % p
        if a == 0 or b == 0:
            return 0
        m = self.m
        ca = self.coords(a)
        cb = self.coords(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        for jj in range(2 * m - 2, m - 1, -1):
            c = prod[jj]
            if c:
                row = self._red[jj - m]
                for i in range(m):
                    prod[i] = (prod[i] + c * row[i]) % p
        enc = 0
        mult = 1
        for i in range(m):
            enc += prod[i] * mult
            mult *= p
        return enc

    # -- identity / formatting ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldSpec)
                and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.p, self.m, self.modulus))

    def modulus_encoding(self) -> int:
        enc = 0
        for c in reversed(self.modulus):
            enc = enc * self.p + c
        return enc

    def spec_string(self) -> str:
        base = str(self.p) if self.m == 1 else f"{self.p}^{self.m}"
        if self.modulus != _min_irreducible(self.p, self.m):
            base += f":0x{self.modulus_encoding():X}"
        return base

    def __str__(self) -> str:
        return self.spec_string()

    def __repr__(self) -> str:
        return f"FieldSpec({self.spec_string()!r})"


class QuadraticExtension(Field):
    """F_{q^2} as a degree-2 tower over a FieldSpec.

    An element a0 + a1*Y is encoded as enc(a0) + enc(a1)*q, i.e. base-q
    digits over the base field's own encoding.
    """

    def __init__(self, base: FieldSpec):
        self.base = base
        self.p = base.p
        self.q = base.q ** 2
        self.prime_degree = 2 * base.prime_degree
        self.modulus = self._find_modulus(base)  # (v, u, 1): Y^2 + u*Y + v
        self._wants_tables = True
        self._init_tables()

    @staticmethod
    def _find_modulus(base: FieldSpec) -> tuple[int, int, int]:
        bq = base.q
        for t in range(bq * bq):
            v = t % bq
            u = t // bq
            for x in range(bq):
                if base.add(base.add(base.mul(x, x), base.mul(u, x)), v) == 0:
                    break
            else:
                return (v, u, 1)
        raise AssertionError("no irreducible quadratic over the base field")

    def parts(self, a: int) -> tuple[int, int]:
        bq = self.base.q
        return a % bq, a // bq

    def embed(self, x: int) -> int:
        """Embedding of the base field: identical encodings by construction."""
        self.base._check(x)
        return x

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        bq = self.base.q
        badd = self.base.add
        return badd(a % bq, b % bq) + badd(a // bq, b // bq) * bq

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        bq = self.base.q
        bneg = self.base.neg
        return bneg(a % bq) + bneg(a // bq) * bq

    def _raw_mul(self, a: int, b: int) -> int:
        base = self.base
        bq = base.q
        a0, a1 = a % bq, a // bq
        b0, b1 = b % bq, b // bq
        v, u, _ = self.modulus
        m0 = base.mul(a0, b0)
        m2 = base.mul(a1, b1)
        m1 = base.add(base.mul(a0, b1), base.mul(a1, b0))
        c0 = base.sub(m0, base.mul(v, m2))
        c1 = base.sub(m1, base.mul(u, m2))
        return c0 + c1 * bq

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuadraticExtension)
                and self.base == other.base and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash(("QuadraticExtension", self.base, self.modulus))

    def __str__(self) -> str:
        return f"({self.base})^2"

    def __repr__(self) -> str:
        return f"QuadraticExtension({self.base!r})"


def quadratic_extension(field: FieldSpec) -> QuadraticExtension:
    """The quadratic extension of `field`, cached per field instance."""
    if field._quad_ext is None:
        field._quad_ext = QuadraticExtension(field)
    return field._quad_ext


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An element of a specific field; wraps a canonical integer encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field: Field, enc: int):
        field._check(enc)
        self.field = field
        self.enc = enc

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or self.field != other.field:
            raise PreconditionError("operands belong to different fields")

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.enc)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.add(self.enc, other.enc))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.sub(self.enc, other.enc))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.mul(self.enc, other.enc))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.div(self.enc, other.enc))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.enc))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.enc, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.enc))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.enc == other.enc)

    def __hash__(self) -> int:
        return hash((self.field, self.enc))

    def __int__(self) -> int:
        return self.enc

    def __repr__(self) -> str:
        return f"FieldElement({self.enc}, {self.field})"


class RootOfUnity(NamedTuple):
    element: FieldElement
    in_extension: bool


def nth_root_of_unity(field: FieldSpec, n: int) -> RootOfUnity:
    """A primitive n-th root of unity in F_q or, failing that, in F_{q^2}.

    Deterministic: always a power of the encoding-minimal generator.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if math.gcd(n, field.q) != 1:
        raise PreconditionError(f"gcd({n}, {field.q}) != 1")
    if n == 1:
        return RootOfUnity(FieldElement(field, 1 % field.q), False)
    if (field.q - 1) % n == 0:
        w = field.pow(field.generator, (field.q - 1) // n)
        return RootOfUnity(FieldElement(field, w), False)
    if (field.q * field.q - 1) % n == 0:
        ext = quadratic_extension(field)
        w = ext.pow(ext.generator, (ext.q - 1) // n)
        return RootOfUnity(FieldElement(ext, w), True)
    raise PreconditionError(
        f"no primitive {n}-th root of unity in F_{field.q} or F_{field.q ** 2}")


# ---------------------------------------------------------------------------
# Construction and text I/O
# ---------------------------------------------------------------------------

_FIELD_CACHE: dict[tuple, FieldSpec] = {}


def make_field(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Construct (or fetch the cached) F_{p^m}.

    When `modulus` is omitted the encoding-minimal monic irreducible of
    degree m over F_p is selected, so independent runs agree on the field.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise PreconditionError(f"characteristic must be prime, got {p!r}")
    if not isinstance(m, int) or m < 1:
        raise PreconditionError(f"extension degree must be a positive integer, got {m!r}")
    if modulus is None:
        mod = _min_irreducible(p, m)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise PreconditionError("modulus must be monic of degree m")
        if not _fp_is_irreducible(list(mod), p):
            raise PreconditionError("modulus is reducible over F_p")
    key = (p, m, mod)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FieldSpec(p, m, mod)
        _FIELD_CACHE[key] = field
    return field


def parse_field_spec(text: str) -> FieldSpec:
    """Parse "p", "p^m" or "p^m:0xHH" (hex = modulus encoding, all coefficients)."""
    s = text.strip()
    mod_enc = None
    if ":" in s:
        s, hexpart = s.split(":", 1)
        try:
            mod_enc = int(hexpart, 16)
        except ValueError:
            raise FormatError(f"bad modulus encoding in field spec {text!r}")
    try:
        if "^" in s:
            ps, ms = s.split("^", 1)
            p, m = int(ps), int(ms)
        else:
            p, m = int(s), 1
    except ValueError:
        raise FormatError(f"bad field spec {text!r}")
    modulus = None
    if mod_enc is not None:
        if p < 2:
            raise FormatError(f"bad field spec {text!r}")
        digits = []
        t = mod_enc
        while t:
            digits.append(t % p)
            t //= p
        if len(digits) != m + 1:
            raise FormatError(
                f"modulus encoding in {text!r} has degree {len(digits) - 1}, expected {m}")
        modulus = digits
    return make_field(p, m, modulus)
