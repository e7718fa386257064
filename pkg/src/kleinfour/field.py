"""Arithmetic in binary fields GF(2^m).

Field elements are plain ints holding coefficient bit-vectors: bit i is the
coefficient of a^i, where `a` is the residue of the generator modulo the
field's defining polynomial.  Zero and one are the ints 0 and 1 in every
field.  A BinaryField carries degree and modulus and does all arithmetic on
raw ints; Felt wraps an int together with its field for the public API.

The canonical GF(4) modulus is a^2+a+1, so the cube root of unity used by
the witness constructions prints as `a`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

MAX_DEGREE = 24  # desk-scale bound: no field larger than GF(2^24)


# ---------------------------------------------------------------------------
# GF(2)[x] on ints: bit i of p is the coefficient of x^i.

def _deg2(p):
    return p.bit_length() - 1


def _mul2(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _mod2(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = _deg2(b)
    da = _deg2(a)
    while da >= db:
        a ^= b << (da - db)
        da = _deg2(a)
    return a


def _gcd2(a, b):
    while b:
        a, b = b, _mod2(a, b)
    return a


def _sqr_mod2(a, m):
    # square by bit spreading, then reduce
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << (2 * i)
        a >>= 1
        i += 1
    return _mod2(r, m)


def _sqrt2(p):
    # square root of a GF(2) polynomial all of whose exponents are even
    r = 0
    i = 0
    while p:
        if p & 1:
            r |= 1 << (i >> 1)
        p >>= 1
        i += 1
    return r


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible2(p):
    """Rabin irreducibility test for a GF(2) polynomial given as an int."""
    n = _deg2(p)
    if n <= 0:
        return False
    if n == 1:
        return True
    # x^(2^i) mod p for i = 0..n
    x = 0b10
    powers = [x]
    h = x
    for _ in range(n):
        h = _sqr_mod2(h, p)
        powers.append(h)
    if powers[n] != x:
        return False
    for r in _prime_divisors(n):
        if _gcd2(powers[n // r] ^ x, p) != 1:
            return False
    return True


def _irreducible_factor2(p):
    """Some monic irreducible factor of p, or None if p is irreducible."""
    if p == 0:
        raise ValueError("zero polynomial")
    if _deg2(p) <= 0:
        return None
    if _is_irreducible2(p):
        return None
    if p & 1 == 0:
        return 0b10  # divisible by x
    # derivative zero means p is a perfect square
    deriv = 0
    q = p >> 1
    i = 1
    while q:
        if (q & 1) and (i & 1):
            deriv |= 1 << (i - 1)
        q >>= 1
        i += 1
    if deriv == 0:
        root = _sqrt2(p)
        f = _irreducible_factor2(root)
        return root if f is None else f
    # trial division by irreducibles of ascending degree
    for d in range(1, _deg2(p) // 2 + 1):
        for cand in range((1 << d) | 1, 1 << (d + 1), 2):
            if _is_irreducible2(cand) and _mod2(p, cand) == 0:
                return cand
    return None


def _poly2_text(p, var="a"):
    if p == 0:
        return "0"
    terms = []
    for i in range(_deg2(p), -1, -1):
        if (p >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{i}")
    return "+".join(terms)


@functools.lru_cache(maxsize=None)
def default_modulus(m):
    """Smallest irreducible degree-m modulus, by integer encoding."""
    if not 1 <= m <= MAX_DEGREE:
        raise ValueError(f"field degree must be in 1..{MAX_DEGREE}, got {m}")
    if m == 1:
        return 0b10
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        if _is_irreducible2(cand):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryField:
    """GF(2^m) given by an irreducible monic modulus over GF(2).

    Two fields are interchangeable only if degree and modulus are
    bit-identical.  All element-level methods take and return raw ints.
    """

    degree: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.degree <= MAX_DEGREE:
            raise ValueError(
                f"field degree must be in 1..{MAX_DEGREE}, got {self.degree}")
        if _deg2(self.modulus) != self.degree:
            raise ValueError(
                f"modulus {_poly2_text(self.modulus)} has degree "
                f"{_deg2(self.modulus)}, expected {self.degree}")
        factor = _irreducible_factor2(self.modulus)
        if factor is not None:
            raise ValueError(
                f"modulus {_poly2_text(self.modulus)} is reducible: "
                f"divisible by {_poly2_text(factor)}")

    @classmethod
    def default(cls, m):
        return cls(m, default_modulus(m))

    @property
    def order(self):
        return 1 << self.degree

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        r = 0
        top = 1 << self.degree
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return r

    def sqr(self, a):
        return self.mul(a, a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if a == 1:
            return 1
        # extended Euclid on bit polynomials, top-bit elimination
        t0, t1 = 0, 1
        r0, r1 = self.modulus, a
        while r1:
            shift = _deg2(r0) - _deg2(r1)
            r0 ^= r1 << shift
            t0 ^= t1 << shift
            if r0 < r1:
                r0, r1 = r1, r0
                t0, t1 = t1, t0
        assert r0 == 1
        return _mod2(t0, self.modulus)

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.sqr(a)
            e >>= 1
        return r

    def trace(self, a):
        """Absolute trace down to GF(2): sum of a^(2^i), an int in {0,1}."""
        acc = a
        t = a
        for _ in range(self.degree - 1):
            t = self.sqr(t)
            acc ^= t
        assert acc in (0, 1)
        return acc

    def sqrt(self, a):
        """The unique square root: a^(2^(m-1))."""
        for _ in range(self.degree - 1):
            a = self.sqr(a)
        return a

    @functools.lru_cache(maxsize=None)
    def trace_one_element(self):
        """Smallest element (by bit encoding) with trace 1."""
        for v in range(1, self.order):
            if self.trace(v) == 1:
                return v
        raise AssertionError("unreachable: trace is onto GF(2)")

    def all_bits(self):
        return range(self.order)

    def elem(self, bits):
        if not 0 <= bits < self.order:
            raise ValueError(f"element bits {bits} out of range for GF(2^{self.degree})")
        return Felt(self, bits)

    def elements(self):
        for v in range(self.order):
            yield Felt(self, v)

    @property
    def zero(self):
        return Felt(self, 0)

    @property
    def one(self):
        return Felt(self, 1)

    @property
    def gen(self):
        if self.degree == 1:
            return Felt(self, 1)
        return Felt(self, 2)

    def format_elt(self, bits):
        return _poly2_text(bits, "a")

    def parse_elt(self, text):
        """Parse an element like '0', '1', 'a', 'a+1', 'a^2+a'."""
        bits = 0
        for term in text.replace(" ", "").split("+"):
            if term == "0":
                continue
            if term == "1":
                bits ^= 1
            elif term == "a":
                bits ^= 2
            elif term.startswith("a^"):
                try:
                    i = int(term[2:])
                except ValueError:
                    raise ValueError(f"bad element term {term!r}") from None
                if not 1 <= i < self.degree:
                    raise ValueError(f"term {term!r} out of range for GF(2^{self.degree})")
                bits ^= 1 << i
            else:
                raise ValueError(f"bad element term {term!r}")
        if bits >= self.order:
            raise ValueError(f"element {text!r} out of range for GF(2^{self.degree})")
        return bits

    def __str__(self):
        return f"GF({self.order})"

    def __repr__(self):
        return f"BinaryField({self.degree}, 0b{self.modulus:b})"

    def to_json(self):
        return {"degree": self.degree, "modulus": self.modulus,
                "text": _poly2_text(self.modulus)}


GF2 = BinaryField.default(1)
GF4 = BinaryField.default(2)


@dataclass(frozen=True)
class Felt:
    """A field element: bit-vector plus its field."""

    field: BinaryField
    bits: int

    def _check(self, other):
        if not isinstance(other, Felt):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.mul(self.bits, other.bits))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.mul(self.bits, self.field.inv(other.bits)))

    def __pow__(self, e):
        return Felt(self.field, self.field.pow(self.bits, e))

    def inv(self):
        return Felt(self.field, self.field.inv(self.bits))

    def trace(self):
        return self.field.trace(self.bits)

    def sqrt(self):
        return Felt(self.field, self.field.sqrt(self.bits))

    def __bool__(self):
        return bool(self.bits)

    def __str__(self):
        return _poly2_text(self.bits, "a")

    def __repr__(self):
        return f"Felt({self.field}, {self})"
