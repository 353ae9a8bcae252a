"""Explicit finite fields F_{p^d} as polynomial residues.

The modulus is always the lexicographically smallest monic irreducible
polynomial of its degree (coefficients compared low degree first), so every
field here is bit-reproducible.  Elements are little-endian coefficient
tuples; the canonical integer encoding of (c0, c1, ...) is sum(ci * p^i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization by trial division, as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomial helpers over F_p: dense little-endian coefficient tuples --

def _poly_trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    return _poly_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                       for i in range(n)])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m must be monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        coef = a[-1]
        if coef:
            shift = len(a) - 1 - dm
            for i in range(dm):
                a[shift + i] = (a[shift + i] - coef * m[i]) % p
        a.pop()
    return _poly_trim(a)


def _poly_powmod(a, e, m, p):
    result = (1,)
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = tuple(a), tuple(b)
    while b:
        # make b monic before reducing
        inv = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
        bm = tuple((c * inv) % p for c in b)
        a, b = b, _poly_mod(a, bm, p)
    return a


def _is_irreducible(m: tuple, p: int) -> bool:
    """Test irreducibility of a monic polynomial m over F_p."""
    d = len(m) - 1
    if d == 1:
        return True
    if d <= 3:
        # degree 2 or 3 is reducible iff it has a root
        return all(
            sum(c * pow(x, i, p) for i, c in enumerate(m)) % p != 0 for x in range(p)
        )
    x = (0, 1)
    # x^(p^d) == x mod m, and gcd(x^(p^(d/l)) - x, m) = 1 for prime l | d
    if _poly_powmod(x, p ** d, m, p) != x:
        return False
    for ell in factorize(d):
        power = _poly_powmod(x, p ** (d // ell), m, p)
        diff = _poly_add(power, tuple((-c) % p for c in x), p)
        if len(_poly_gcd(diff, m, p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FieldElement:
    """An element of a FiniteField: reduced little-endian coefficients."""

    field: "FiniteField"
    coeffs: tuple

    def _check(self, other: "FieldElement"):
        if other.field is not self.field and other.field != self.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        F = self.field
        prod = _poly_mul(self.coeffs, other.coeffs, F.p)
        red = _poly_mod(prod, F.modulus, F.p)
        return FieldElement(F, red + (0,) * (F.degree - len(red)))

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # Lagrange: v^(p^d - 2)
        return self ** (self.field.size - 2)

    def __pow__(self, e: int) -> "FieldElement":
        F = self.field
        if e < 0:
            return self.inv() ** (-e)
        result = F.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_int(self) -> int:
        val = 0
        for c in reversed(self.coeffs):
            val = val * self.field.p + c
        return val

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n = self.field.size - 1
        order = n
        for ell in factorize(n):
            while order % ell == 0 and (self ** (order // ell)) == self.field.one():
                order //= ell
        return order

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __repr__(self):
        return f"FieldElement({self.to_int()} of F_{self.field.size})"


@dataclass(frozen=True)
class FiniteField:
    """F_{p^d} = F_p[x] / (modulus), modulus monic irreducible of degree d."""

    p: int
    degree: int
    modulus: tuple  # little-endian, length degree + 1, leading coefficient 1

    @property
    def size(self) -> int:
        return self.p ** self.degree

    def element(self, coeffs) -> FieldElement:
        c = tuple(int(v) % self.p for v in coeffs)
        if len(c) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients")
        return FieldElement(self, c)

    def from_int(self, value: int) -> FieldElement:
        if not 0 <= value < self.size:
            raise ValueError(f"encoding {value} outside [0, {self.size})")
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(value % self.p)
            value //= self.p
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.degree)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.degree - 1))

    def elements(self):
        """All elements in canonical encoding order: 0, 1, ..., p^d - 1."""
        for v in range(self.size):
            yield self.from_int(v)

    def frobenius(self, v: FieldElement, e: int = 1) -> FieldElement:
        """The power map v -> v^(p^e)."""
        return v ** (self.p ** e)

    def primitive_element(self) -> FieldElement:
        """First element in encoding order of multiplicative order p^d - 1."""
        n = self.size - 1
        primes = list(factorize(n))
        for v in range(1, self.size):
            elt = self.from_int(v)
            if all((elt ** (n // ell)) != self.one() for ell in primes):
                return elt
        raise RuntimeError("no primitive element found; field is corrupt")

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "degree": self.degree,
            "modulus": list(self.modulus),
            "primitive_element": self.primitive_element().to_int(),
        }

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.degree, self.modulus) == (other.p, other.degree, other.modulus)

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))


def make_field(p: int, d: int) -> FiniteField:
    """Construct F_{p^d} with the lex-smallest monic irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be positive")
    # scan monic polynomials x^d + c_{d-1} x^{d-1} + ... + c_0, coefficient
    # tuples (c_0, ..., c_{d-1}) in ascending lex order, low degree first
    for code in range(p ** d):
        coeffs = []
        v = code
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        m = tuple(coeffs) + (1,)
        if _is_irreducible(m, p):
            return FiniteField(p, d, m)
    raise RuntimeError("no irreducible polynomial found; unreachable for prime p")


def prime_power(q: int) -> tuple:
    """Factor q as (p, f) with p prime and q = p^f, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, f),) = fac.items()
    return p, f


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n (a coprime to n)."""
    if math.gcd(a, n) != 1:
        raise ValueError("element not invertible")
    phi_like = n - 1 if is_prime(n) else _euler_phi(n)
    order = phi_like
    for ell in factorize(phi_like):
        while order % ell == 0 and pow(a, order // ell, n) == 1:
            order //= ell
    return order


def _euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root modulo a prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    primes = list(factorize(p - 1))
    for c in range(2, p):
        if all(pow(c, (p - 1) // ell, p) != 1 for ell in primes):
            return c
    raise RuntimeError("unreachable: every prime has a primitive root")
