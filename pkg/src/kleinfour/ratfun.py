"""Rational functions over GF(2^m), with their pole structure on P^1.

A RatFun is a reduced fraction num/den with monic denominator and
gcd(num, den) = 1.  Places of the projective line are the closed points:
either the degree-1 place at infinity or a monic irreducible polynomial; a
finite place of degree d stands for d conjugate geometric points.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly as P
from .poly import Poly


@dataclass(frozen=True)
class Place:
    """A closed point of P^1: None for infinity, else a monic irreducible."""

    poly: Poly | None = None

    @property
    def is_infinity(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        if self.poly is None:
            return (0, ())
        return (1,) + self.poly.sort_key()

    def __str__(self):
        return "infinity" if self.poly is None else str(self.poly)

    def __repr__(self):
        return f"Place({self})"


INFINITY = Place(None)


@dataclass(frozen=True)
class PoleDivisor:
    """Distinct places with positive pole orders, sorted."""

    entries: tuple  # of (Place, order)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def places(self):
        return {pl for (pl, _) in self.entries}

    def geometric_count(self):
        """Number of geometric poles: sum of place degrees."""
        return sum(pl.degree for (pl, _) in self.entries)

    def __str__(self):
        if not self.entries:
            return "(none)"
        return ", ".join(f"{pl}^{n}" if n > 1 else str(pl)
                         for (pl, n) in self.entries)


class RatFun:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num, den):
        if not isinstance(num, Poly) or not isinstance(den, Poly):
            raise TypeError("RatFun takes two Poly arguments")
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if not den.coeffs:
            raise ZeroDivisionError("zero denominator")
        g = P.gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        if den.lc != 1:
            c = den.field.inv(den.lc)
            num = num.scale(c)
            den = den.scale(c)
        object.__setattr__(self, "field", num.field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly.one(p.field))

    @classmethod
    def zero(cls, field):
        return cls(Poly.zero(field), Poly.one(field))

    @classmethod
    def x_power(cls, field, k):
        """x^k as a rational function (k may be negative)."""
        if k >= 0:
            return cls(Poly.monomial(field, k), Poly.one(field))
        return cls(Poly.one(field), Poly.monomial(field, -k))

    @classmethod
    def pole_at(cls, place_poly, order, c=1):
        """c / place^order for a monic polynomial place."""
        num = Poly.const(place_poly.field, c)
        den = Poly.one(place_poly.field)
        for _ in range(order):
            den = den * place_poly
        return cls(num, den)

    @property
    def is_zero(self):
        return not self.num.coeffs

    @property
    def is_constant(self):
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_bits(self):
        assert self.is_constant
        return self.num.coeff(0)

    def __add__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("rational functions over different fields")
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    def scale(self, c):
        return RatFun(self.num.scale(c), self.den)

    def __eq__(self, other):
        return (isinstance(other, RatFun) and self.field == other.field
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.field, self.num.coeffs, self.den.coeffs))

    def key(self):
        return (self.num.coeffs, self.den.coeffs)

    def pole_divisor(self):
        """Finite poles from the factored denominator, plus infinity."""
        entries = []
        if not self.is_zero and self.num.degree > self.den.degree:
            entries.append((INFINITY, self.num.degree - self.den.degree))
        if self.den.degree > 0:
            for (q, e) in P.factor(self.den):
                entries.append((Place(q), e))
        entries.sort(key=lambda t: t[0].sort_key())
        return PoleDivisor(tuple(entries))

    def infinity_value(self):
        """Value at infinity as raw bits, or None if infinity is a pole."""
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            return None
        if dn < dd:
            return 0
        return self.field.mul(self.num.lc, self.field.inv(self.den.lc))

    def mobius(self, a, b, c, d):
        """Substitute x -> (a*x + b)/(c*x + d); coefficients are raw bits."""
        F = self.field
        det = F.mul(a, d) ^ F.mul(b, c)
        if det == 0:
            raise ValueError("singular coordinate change")
        lin_num = Poly.make(F, (b, a))
        lin_den = Poly.make(F, (d, c))
        n = max(self.num.degree, self.den.degree, 0)
        pn = [Poly.one(F)]
        pd = [Poly.one(F)]
        for _ in range(n):
            pn.append(pn[-1] * lin_num)
            pd.append(pd[-1] * lin_den)

        def subst(p):
            out = Poly.zero(F)
            for i, cf in enumerate(p.coeffs):
                if cf:
                    out = out + (pn[i] * pd[n - i]).scale(cf)
            return out

        new_num = subst(self.num)
        new_den = subst(self.den)
        if not new_den.coeffs:
            raise ZeroDivisionError("coordinate change maps denominator to zero")
        return RatFun(new_num, new_den)

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFun({self})"

    def to_json(self):
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs),
                "text": str(self)}


# ---------------------------------------------------------------------------
# Text grammar.  A rational function is a sum of fraction terms; each term is
# a polynomial, optionally divided by a parenthesized polynomial or a bare
# monomial: "x^3 + 1/x", "(x^2+x) / (x^2+x+1)", "a*x + (a+1)*x^2".

def _parse_poly(field, text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")") and _balanced(text[1:-1]):
        text = text[1:-1].strip()
    terms = _split_top(text, "+")
    p = Poly.zero(field)
    for term in terms:
        p = p + _parse_term(field, term.strip())
    return p


def _balanced(s):
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def _split_top(s, sep):
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_term(field, term):
    if not term:
        raise ValueError("empty term in polynomial")
    coeff = 1
    if "*" in term:
        ctext, _, mtext = term.partition("*")
        ctext = ctext.strip()
        if ctext.startswith("(") and ctext.endswith(")"):
            ctext = ctext[1:-1]
        coeff = field.parse_elt(ctext)
        term = mtext.strip()
    if term.startswith("x"):
        if term == "x":
            k = 1
        elif term.startswith("x^"):
            k = int(term[2:])
            if k < 0:
                raise ValueError("negative exponent in polynomial")
        else:
            raise ValueError(f"bad monomial {term!r}")
        return Poly.monomial(field, k, coeff)
    # bare constant, possibly multiplied into coeff already
    if term.startswith("(") and term.endswith(")"):
        term = term[1:-1].strip()
    bits = field.parse_elt(term)
    return Poly.const(field, field.mul(coeff, bits) if coeff != 1 else bits)


def parse_ratfun(field, text):
    """Parse the sum-of-fractions grammar into a RatFun."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational function")
    total = RatFun.zero(field)
    for part in _split_top(text, "+"):
        part = part.strip()
        pieces = _split_top(part, "/")
        if len(pieces) == 1:
            total = total + RatFun.from_poly(_parse_poly(field, part))
        elif len(pieces) == 2:
            num = _parse_poly(field, pieces[0])
            den = _parse_poly(field, pieces[1])
            if not den.coeffs:
                raise ZeroDivisionError("zero denominator in input")
            total = total + RatFun(num, den)
        else:
            raise ValueError(f"too many '/' in term {part!r}")
    return total


# ---------------------------------------------------------------------------
# Partial fractions, used by the standard-form reduction.

def principal_parts(f):
    """Polynomial part and per-place principal parts of f.

    Returns (poly_part, parts) where parts maps each monic irreducible
    divisor q of the denominator to the list [r_1, ..., r_e] with
    f = poly_part + sum over places of sum_i r_i / q^i and deg r_i < deg q.
    """
    F = f.field
    poly_part, rem = divmod(f.num, f.den)
    parts = {}
    for (q, e) in P.factor(f.den):
        qe = q
        for _ in range(e - 1):
            qe = qe * q
        cof = f.den // qe
        c = (rem * P.invmod(cof, qe)) % qe
        digits = []
        for _ in range(e):
            c, r = divmod(c, q)
            digits.append(r)  # digits[j] = coefficient of q^j
        rs = [digits[e - i] for i in range(1, e + 1)]  # r_i = digit e-i
        parts[q] = rs
    return poly_part, parts


def assemble(field, poly_part, parts):
    """Inverse of principal_parts: rebuild the rational function."""
    f = RatFun.from_poly(poly_part)
    for q, rs in parts.items():
        qi = Poly.one(field)
        for i, r in enumerate(rs, start=1):
            qi = qi * q
            if r.coeffs:
                f = f + RatFun(r, qi)
    return f
