import pytest

from goodpoly.errors import FormatError, PreconditionError
from goodpoly.gf import (FieldElement, _fp_is_irreducible, make_field,
                         nth_root_of_unity, parse_field_spec,
                         quadratic_extension)


def brute_min_irreducible(p, m):
    """Oracle: enumerate all monic degree-m polynomials, test by root search
    (m <= 3) and return the encoding-minimal irreducible."""
    assert m <= 3
    best = None
    for enc in range(p ** m):
        coeffs = []
        t = enc
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        if m == 1 or all(
                sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p
                for x in range(p)):
            # degree 2 and 3 are irreducible iff rootless
            best = tuple(coeffs)
            break
    return best


def test_prime_field_construction():
    F = make_field(3)
    assert F.q == 3 and F.m == 1 and F.modulus == (0, 1)


def test_default_modulus_f9_matches_enumeration_oracle():
    assert make_field(3, 2).modulus == brute_min_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 3), (5, 2), (7, 2)])
def test_default_modulus_matches_enumeration_oracle(p, m):
    assert make_field(p, m).modulus == brute_min_irreducible(p, m)


def test_default_modulus_f64_is_irreducible_and_minimal():
    F = make_field(2, 6)
    assert F.modulus == (1, 1, 0, 0, 0, 0, 1)  # T^6 + T + 1
    assert _fp_is_irreducible(list(F.modulus), 2)
    # nothing smaller is irreducible
    for enc in range(3):  # encodings 0,1,2 of the non-leading part
        cand = [enc % 2, (enc // 2) % 2, 0, 0, 0, 0, 1]
        assert not _fp_is_irreducible(cand, 2)


def test_make_field_rejects_bad_input():
    with pytest.raises(PreconditionError):
        make_field(4)
    with pytest.raises(PreconditionError):
        make_field(3, 0)
    with pytest.raises(PreconditionError):
        make_field(2, 2, modulus=(0, 0, 1))  # T^2, reducible
    with pytest.raises(PreconditionError):
        make_field(2, 2, modulus=(1, 1))  # wrong degree


def test_field_arith_examples():
    F5 = make_field(5)
    assert F5.mul(2, 3) == 1
    F9 = make_field(3, 2)  # modulus T^2 + 1
    t = F9.from_coords((0, 1))
    assert F9.mul(t, t) == 2  # T*T = -1 = 2
    F7 = make_field(7)
    assert F7.inv(3) == 5


def test_field_element_operators_and_mixed_fields():
    F7 = make_field(7)
    a, b = F7.element(3), F7.element(5)
    assert int(a * b) == 1
    assert int(a + b) == 1
    assert int(a - b) == 5
    assert int(-a) == 4
    assert int(a ** 6) == 1
    assert int(a / b) == int(a * b.inverse())
    with pytest.raises(ZeroDivisionError):
        F7.zero.inverse()
    F11 = make_field(11)
    with pytest.raises(PreconditionError):
        a + F11.element(1)
    with pytest.raises(PreconditionError):
        F7.element(7)


def test_pow_handles_large_and_negative_exponents():
    F = make_field(2, 6)
    g = F.generator
    assert F.pow(g, F.q - 1) == 1
    assert F.pow(g, 10 ** 9) == F.pow(g, 10 ** 9 % (F.q - 1))
    assert F.mul(F.pow(g, -3), F.pow(g, 3)) == 1


def test_quadratic_character_examples():
    F7 = make_field(7)
    assert F7.quadratic_character(2) == 1   # 2^3 = 8 = 1
    assert F7.quadratic_character(3) == -1  # 3^3 = 27 = -1
    assert F7.quadratic_character(0) == 0
    with pytest.raises(PreconditionError):
        make_field(2, 4).quadratic_character(3)


@pytest.mark.parametrize("p,m", [(3, 2), (7, 1), (3, 5), (499, 1), (7, 3), (19, 2)])
def test_quadratic_character_multiplicative(p, m):
    F = make_field(p, m)
    eta = [F.quadratic_character(a) for a in range(F.q)]
    for a in range(1, F.q):
        for b in range(1, F.q):
            assert eta[F.mul(a, b)] == eta[a] * eta[b]


def test_absolute_trace_examples():
    F7 = make_field(7)
    assert all(F7.absolute_trace(a) == a for a in range(7))
    F4 = make_field(2, 2)
    omega = F4.from_coords((0, 1))
    assert F4.absolute_trace(omega) == 1
    assert F4.absolute_trace(1) == 0


@pytest.mark.parametrize("p,m", [(2, 8), (3, 4), (5, 3), (7, 2)])
def test_absolute_trace_linear(p, m):
    F = make_field(p, m)
    tr = [F.absolute_trace(a) for a in range(F.q)]
    for a in range(F.q):
        for b in range(F.q):
            assert tr[F.add(a, b)] == (tr[a] + tr[b]) % p


@pytest.mark.parametrize("p,m", [(2, 12), (3, 6), (5, 4), (7, 3), (13, 2)])
def test_frobenius_fixes_field(p, m):
    F = make_field(p, m)
    for a in range(F.q):
        assert F.pow(a, F.q) == a


def test_encoding_round_trip_exhaustive_up_to_2_16():
    for p, m in ((2, 16), (3, 4), (5, 2), (251, 1)):
        F = make_field(p, m)
        for enc in range(F.q):
            cs = F.coords(enc)
            assert len(cs) == m and all(0 <= c < p for c in cs)
            assert F.from_coords(cs) == enc


def test_nth_root_of_unity_examples():
    F7 = make_field(7)
    r = nth_root_of_unity(F7, 3)
    assert not r.in_extension and int(r.element) in (2, 4)
    r4 = nth_root_of_unity(F7, 4)
    assert r4.in_extension and r4.element.field.q == 49
    assert nth_root_of_unity(F7, 1).element == F7.one
    with pytest.raises(PreconditionError):
        nth_root_of_unity(F7, 7)   # gcd(7, 7) != 1
    with pytest.raises(PreconditionError):
        nth_root_of_unity(F7, 9)   # 9 divides neither 6 nor 48


@pytest.mark.parametrize("p,m,n", [(7, 1, 3), (7, 1, 4), (2, 6, 9), (3, 2, 5),
                                   (5, 1, 12), (13, 1, 7), (2, 4, 17)])
def test_root_of_unity_has_exact_order(p, m, n):
    F = make_field(p, m)
    r = nth_root_of_unity(F, n)
    fld = r.element.field
    w = int(r.element)
    assert fld.pow(w, n) == 1
    for d in range(1, n):
        if n % d == 0:
            assert fld.pow(w, d) != 1


def test_quadratic_extension_embedding_respects_arithmetic():
    F = make_field(2, 6)
    E = quadratic_extension(F)
    assert E.q == F.q ** 2
    for a in (3, 17, 40):
        for b in (5, 63, 1):
            assert E.embed(F.mul(a, b)) == E.mul(E.embed(a), E.embed(b))
            assert E.embed(F.add(a, b)) == E.add(E.embed(a), E.embed(b))
    # extension elements satisfy x^(q^2) = x
    for x in (1, 100, 4095):
        assert E.pow(x, E.q) == x


def test_field_spec_strings_round_trip():
    assert parse_field_spec("13") is make_field(13)
    assert parse_field_spec("2^6") is make_field(2, 6)
    F = make_field(2, 6)
    assert F.spec_string() == "2^6"
    custom = make_field(2, 3, modulus=(1, 0, 1, 1))  # T^3 + T^2 + 1, not the default
    assert ":0x" in custom.spec_string()
    assert parse_field_spec(custom.spec_string()) is custom
    with pytest.raises(FormatError):
        parse_field_spec("abc")
    with pytest.raises(FormatError):
        parse_field_spec("2^3:0xZZ")


def test_element_io_as_canonical_integers():
    F = make_field(3, 2)
    e = FieldElement(F, 7)
    assert int(e) == 7 and e.coords == (1, 2)
