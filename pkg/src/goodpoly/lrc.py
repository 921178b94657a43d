"""Evaluation codes with locality built on full fibers of a polynomial.

The code evaluates g(x) = sum a_ij x^i f(x)^j (0 <= i < r, 0 <= j < k/r)
at the points of m disjoint fibers of f, each of size r + 1 = deg(f).
Because f is constant on a fiber, g restricted to a repair group is a
polynomial of degree < r, so any erased symbol is recovered from the r
surviving symbols of its group by interpolation.  Erasure decoding solves
the evaluation system over the surviving positions, and a brute-force
minimum-distance scan audits optimality at desk scale.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

import numpy as np

from .errors import FormatError, PreconditionError, ResourceLimitError
from .goodness import fibers
from .polyring import Poly


class LrcCode:
    """Immutable description of one code: field, groups, basis, point rows."""

    __slots__ = ("field", "f", "r", "k", "groups", "group_values",
                 "points", "N", "point_rows")

    def __init__(self, field, f, r, k, groups, group_values, points, point_rows):
        self.field = field
        self.f = f
        self.r = r
        self.k = k
        self.groups = groups
        self.group_values = group_values
        self.points = points
        self.N = len(points)
        self.point_rows = point_rows

    def group_of(self, pos: int) -> int:
        return pos // (self.r + 1)

    def group_positions(self, gi: int) -> range:
        return range(gi * (self.r + 1), (gi + 1) * (self.r + 1))

    def to_dict(self) -> dict:
        return {
            "field": str(self.field),
            "poly": self.f.to_string(),
            "q": self.field.q,
            "r": self.r,
            "k": self.k,
            "N": self.N,
            "groups": [{"c": c, "members": list(g)}
                       for c, g in zip(self.group_values, self.groups)],
        }


def build_code(f: Poly, k: int, m: Optional[int] = None) -> LrcCode:
    """Assemble a code from the first m full fibers of f (default: all).

    Locality is r = deg(f) - 1; requires r | k and at least k/r fibers.
    """
    field = f.field
    n = f.degree
    if n < 2:
        raise PreconditionError("need deg(f) >= 2 for locality >= 1")
    r = n - 1
    if not isinstance(k, int) or k < 1:
        raise PreconditionError("dimension k must be a positive integer")
    if k % r:
        raise PreconditionError(f"locality r = {r} must divide k = {k}")
    fib = fibers(f)
    need = k // r
    if len(fib) < max(need, 1):
        raise PreconditionError(
            f"not enough full fibers: need {max(need, 1)}, found {len(fib)}")
    if m is None:
        m = len(fib)
    if not need <= m <= len(fib):
        raise PreconditionError(f"group count must be in [{need}, {len(fib)}]")
    chosen = fib[:m]
    N = m * n
    if k >= N:
        raise PreconditionError(f"dimension k = {k} must be below length N = {N}")
    groups = tuple(members for _, members in chosen)
    group_values = tuple(c for c, _ in chosen)
    points = tuple(x for members in groups for x in members)
    # basis monomial (i, j) -> x^i f(x)^j, message index j*r + i
    mul, powf = field.mul, field.pow
    point_rows = []
    for x in points:
        fx = f.evaluate(x)
        row = []
        fj = 1
        for _ in range(k // r):
            xi = 1
            for _ in range(r):
                row.append(mul(xi, fj))
                xi = mul(xi, x)
            fj = mul(fj, fx)
        point_rows.append(tuple(row))
    code = LrcCode(field, f, r, k, groups, group_values, points, tuple(point_rows))
    assert (k // r - 1) * (r + 1) + r - 1 < N
    return code


class Codeword:
    """Symbols of one codeword; None marks an erasure.

    Reads through read() are counted, which lets tests pin down exactly how
    many symbols a repair touches.
    """

    def __init__(self, symbols: Sequence[Optional[int]]):
        self.symbols = list(symbols)
        self.reads = 0

    def read(self, pos: int) -> Optional[int]:
        self.reads += 1
        return self.symbols[pos]

    def erased_positions(self) -> list[int]:
        return [i for i, s in enumerate(self.symbols) if s is None]

    @classmethod
    def from_string(cls, field, text: str) -> "Codeword":
        symbols: list[Optional[int]] = []
        for tok in text.split(","):
            tok = tok.strip()
            if tok == "_":
                symbols.append(None)
            else:
                try:
                    val = int(tok)
                except ValueError:
                    raise FormatError(f"bad codeword symbol {tok!r}")
                symbols.append(field._check(val))
        return cls(symbols)

    def to_string(self) -> str:
        return ",".join("_" if s is None else str(s) for s in self.symbols)


def encode(code: LrcCode, message: Sequence[int]) -> Codeword:
    """Evaluate the message polynomial at every code point."""
    if len(message) != code.k:
        raise PreconditionError(f"message must have length k = {code.k}")
    field = code.field
    msg = [field._check(v) for v in message]
    add, mul = field.add, field.mul
    out = []
    for row in code.point_rows:
        acc = 0
        for coef, val in zip(row, msg):
            if val:
                acc = add(acc, mul(coef, val))
        out.append(acc)
    return Codeword(out)


def _interpolate_at(field, pairs, x0: int) -> int:
    # Lagrange evaluation at x0 of the poly through (x_j, y_j)
    add, sub, mul, div = field.add, field.sub, field.mul, field.div
    acc = 0
    for j, (xj, yj) in enumerate(pairs):
        num, den = 1, 1
        for i, (xi, _) in enumerate(pairs):
            if i != j:
                num = mul(num, sub(x0, xi))
                den = mul(den, sub(xj, xi))
        acc = add(acc, mul(yj, div(num, den)))
    return acc


def _repair_position(code: LrcCode, word: Codeword, pos: int) -> int:
    gi = code.group_of(pos)
    pairs = []
    for p2 in code.group_positions(gi):
        if p2 == pos:
            continue
        s = word.read(p2)
        if s is None:
            raise PreconditionError("repair group has a second erasure")
        pairs.append((code.points[p2], s))
    return _interpolate_at(code.field, pairs, code.points[pos])


def local_repair(code: LrcCode, word: Codeword) -> int:
    """Recover the unique erased symbol by reading its r group mates."""
    erased = word.erased_positions()
    if len(erased) != 1:
        raise PreconditionError(f"expected exactly one erasure, found {len(erased)}")
    return _repair_position(code, word, erased[0])


def erasure_decode(code: LrcCode, word: Codeword) -> Optional[tuple[int, ...]]:
    """Recover the message, or None when the survivors have rank < k.

    Groups with a single erasure are repaired locally first; the remaining
    survivors then feed a dense linear solve over the basis monomials.
    """
    if len(word.symbols) != code.N:
        raise PreconditionError(f"codeword must have length N = {code.N}")
    field = code.field
    symbols = list(word.symbols)
    for gi in range(len(code.groups)):
        missing = [p for p in code.group_positions(gi) if symbols[p] is None]
        if len(missing) == 1:
            pos = missing[0]
            pairs = [(code.points[p], symbols[p])
                     for p in code.group_positions(gi) if p != pos]
            symbols[pos] = _interpolate_at(field, pairs, code.points[pos])
    rows = []
    rhs = []
    for pos, s in enumerate(symbols):
        if s is not None:
            rows.append(list(code.point_rows[pos]))
            rhs.append(s)
    return _solve_full_rank(field, rows, rhs, code.k)


def _solve_full_rank(field, rows, rhs, k) -> Optional[tuple[int, ...]]:
    aug = [row[:] + [y] for row, y in zip(rows, rhs)]
    rank = 0
    for col in range(k):
        piv = None
        for r2 in range(rank, len(aug)):
            if aug[r2][col] != 0:
                piv = r2
                break
        if piv is None:
            return None
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = field.inv(aug[rank][col])
        aug[rank] = [field.mul(inv, v) for v in aug[rank]]
        for r2 in range(len(aug)):
            if r2 != rank and aug[r2][col] != 0:
                c = aug[r2][col]
                aug[r2] = [field.sub(v, field.mul(c, w))
                           for v, w in zip(aug[r2], aug[rank])]
        rank += 1
    return tuple(aug[i][k] for i in range(k))


def min_distance_bruteforce(code: LrcCode, guard: int = 10 ** 8) -> int:
    """Minimum Hamming weight over all nonzero messages, by exhaustion."""
    field = code.field
    q = field.q
    total = q ** code.k
    if total > guard:
        raise ResourceLimitError(f"q^k = {total} exceeds the scan guard {guard}")
    if field.prime_degree == 1:
        return _min_distance_prime(code, total)
    best = code.N
    for msg in itertools.product(range(q), repeat=code.k):
        if not any(msg):
            continue
        w = sum(1 for s in encode(code, msg).symbols if s)
        if w < best:
            best = w
    return best


def _min_distance_prime(code: LrcCode, total: int) -> int:
    p = code.field.q
    G = np.array(code.point_rows, dtype=np.int64)  # N x k
    GT = G.T.copy()
    k = code.k
    best = code.N
    chunk = 1 << 16
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((len(idx), k), dtype=np.int64)
        t = idx.copy()
        for i in range(k):
            digits[:, i] = t % p
            t //= p
        vals = digits @ GT % p
        w = int(np.count_nonzero(vals, axis=1).min())
        if w < best:
            best = w
    return best
