import pytest

from arcgraphs.gf import (
    _is_irreducible,
    factorize,
    is_prime,
    make_field,
    prime_power,
    smallest_primitive_root,
)


def test_make_field_modulus_is_lex_smallest():
    # x^2 + 1 over F_3: the scan oracle below confirms nothing smaller works
    F9 = make_field(3, 2)
    assert F9.modulus == (1, 0, 1)
    for code in range(3):  # all (c0, c1) preceding (1, 0)
        c0, c1 = code % 3, code // 3
        if (c0, c1) >= (1, 0):
            break
        assert not _is_irreducible((c0, c1, 1), 3)


def test_make_field_degree_one():
    F2 = make_field(2, 1)
    assert F2.modulus == (0, 1)  # modulus x
    assert F2.size == 2


def test_make_field_f49():
    # -1 is a non-square mod 7, so x^2 + 1 is irreducible and first in scan
    F = make_field(7, 2)
    assert F.modulus == (1, 0, 1)
    squares = {pow(x, 2, 7) for x in range(7)}
    assert 6 not in squares


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError, match="not prime"):
        make_field(6, 2)


def test_basic_arithmetic_in_f9():
    F = make_field(3, 2)
    x = F.from_int(3)  # the residue of the indeterminate
    assert (x * x).to_int() == 2  # x^2 = -1 = 2
    assert F.one().inv() == F.one()
    for v in F.elements():
        if not v.is_zero():
            assert v ** (F.size - 1) == F.one()
            assert v * v.inv() == F.one()
    with pytest.raises(ZeroDivisionError):
        F.zero().inv()


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (5, 2), (3, 3), (2, 5)])
def test_field_axioms_exhaustive(p, d):
    F = make_field(p, d)
    elems = list(F.elements())
    assert len(elems) == p ** d
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems[:: max(1, len(elems) // 8)]:
                assert (a + b) + c == a + (b + c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,d", [(2, 6), (11, 2), (7, 3), (2, 10)])
def test_field_axioms_larger_fields(p, d):
    # inverses on the full enumeration; associativity on strided triples
    F = make_field(p, d)
    elems = list(F.elements())
    for v in elems:
        if not v.is_zero():
            assert v * v.inv() == F.one()
    stride = max(1, len(elems) // 17)
    sample = elems[::stride]
    for a in sample:
        for b in sample:
            assert (a * b) * sample[3] == a * (b * sample[3])
            assert a * (b + sample[5]) == a * b + a * sample[5]


def test_frobenius_is_an_automorphism():
    for p, d in ((3, 2), (2, 4), (5, 2)):
        F = make_field(p, d)
        elems = list(F.elements())
        for a in elems:
            for b in elems:
                assert F.frobenius(a, 1) + F.frobenius(b, 1) == F.frobenius(a + b, 1)
                assert F.frobenius(a, 1) * F.frobenius(b, 1) == F.frobenius(a * b, 1)


def test_frobenius_fixes_prime_subfield():
    F = make_field(3, 2)
    for v in range(3):
        assert F.frobenius(F.from_int(v), 1) == F.from_int(v)


def test_frobenius_power_map_in_f9():
    # x^3 = -x since x^2 = -1
    F = make_field(3, 2)
    x = F.from_int(3)
    assert F.frobenius(x, 1) == F.from_int(6)  # 2x
    for v in F.elements():
        assert F.frobenius(F.frobenius(v, 1), 1) == v


def test_primitive_element_examples():
    F3 = make_field(3, 1)
    assert F3.primitive_element().to_int() == 2
    F9 = make_field(3, 2)
    w = F9.primitive_element()
    assert w.to_int() == 4  # 1 + x; x itself only has order 4
    assert F9.from_int(3).multiplicative_order() == 4
    assert w.multiplicative_order() == 8


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (5, 2), (2, 10), (31, 1)])
def test_primitive_element_generates(p, d):
    F = make_field(p, d)
    w = F.primitive_element()
    seen = set()
    x = F.one()
    for _ in range(F.size - 1):
        seen.add(x)
        x = x * w
    assert len(seen) == F.size - 1
    for ell in factorize(F.size - 1):
        assert w ** ((F.size - 1) // ell) != F.one()


def test_encoding_round_trip():
    F = make_field(3, 2)
    assert F.from_int(0) == F.zero()
    assert F.from_int(1) == F.one()
    assert F.from_int(3).coeffs == (0, 1)
    for v in range(9):
        assert F.from_int(v).to_int() == v


def test_prime_power_and_primes():
    assert prime_power(27) == (3, 3)
    assert prime_power(121) == (11, 2)
    with pytest.raises(ValueError):
        prime_power(12)
    assert is_prime(2) and is_prime(97) and not is_prime(91)
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_smallest_primitive_root():
    assert smallest_primitive_root(11) == 2
    assert smallest_primitive_root(7) == 3
    assert smallest_primitive_root(59) == 2


def test_descriptor_shape():
    d = make_field(3, 2).descriptor()
    assert d == {"p": 3, "degree": 2, "modulus": [1, 0, 1], "primitive_element": 4}


def test_field_equality_and_element_hash():
    F = make_field(3, 2)
    G = make_field(3, 2)
    assert F == G
    assert F.from_int(5) == G.from_int(5)
    assert len({F.from_int(5), G.from_int(5)}) == 1
    assert F != make_field(3, 1)
