"""Independent verification by brute-force point counting.

Counts are taken over extensions of the curve's own coefficient field
GF(q), q = 2^m: count_points(c, n) is the number of points of the smooth
model over GF(q^n).  The total evaluation field GF(2^(m*n)) is capped at
2^24 elements.

For a quotient curve, counts N_1..N_g determine the L-polynomial through
Newton's identities plus the functional equation, and the 2-rank is read
off as the degree of L mod 2.  For a whole cover the product decomposition
of the Jacobian is checked through the exact count identity
N_X = N_1 + N_2 + N_3 - 2(q^n + 1), with N_X counted directly on the fibre
product, never through the quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .ascurve import ASCurve
from .field import MAX_DEGREE, BinaryField
from .klein4 import KleinFourCover
from .poly import field_embedding


class InconsistentCounts(ValueError):
    """Point counts contradict the claimed genus."""


def _extension(base, n):
    bits = base.degree * n
    if bits > MAX_DEGREE:
        raise ValueError(
            f"counting over GF(2^{bits}) exceeds the 2^{MAX_DEGREE} cap")
    if n == 1:
        return base, (lambda v: v)
    ext = BinaryField.default(bits)
    return ext, field_embedding(base, ext)


def _trace_mask(fld):
    mask = 0
    for i in range(fld.degree):
        if fld.trace(1 << i):
            mask |= 1 << i
    return mask


def _mapped_coeffs(p, embed):
    return [embed(c) for c in p.coeffs]


def _eval(coeffs, x, mul):
    acc = 0
    for c in reversed(coeffs):
        acc = mul(acc, x) ^ c
    return acc


def count_points(curve, n):
    """Points of the smooth model of an ASCurve over GF(q^n).

    Ramified points (over poles of f) contribute 1; elsewhere x contributes
    2 or 0 according to the absolute trace of f(x).  The point over x = oo
    is included via degree comparison.
    """
    if not isinstance(curve, ASCurve):
        raise TypeError("count_points takes an ASCurve")
    ext, embed = _extension(curve.field, n)
    tmask = _trace_mask(ext)
    mul = ext.mul
    inv = ext.inv
    num = _mapped_coeffs(curve.f.num, embed)
    den = _mapped_coeffs(curve.f.den, embed)
    total = 0
    for x in range(ext.order):
        d = _eval(den, x, mul)
        if d == 0:
            total += 1
            continue
        v = mul(_eval(num, x, mul), inv(d))
        if (v & tmask).bit_count() & 1 == 0:
            total += 2
    at_inf = curve.f.infinity_value()
    if at_inf is None:
        total += 1
    elif (embed(at_inf) & tmask).bit_count() & 1 == 0:
        total += 2
    return total


def count_points_cover(cover, n):
    """Points of the smooth model of the cover over GF(q^n), directly.

    At an unramified x the fibre is the product of the two Artin-Schreier
    fibres.  Over a pole, either exactly one of the three functions is
    regular there and its trace decides a fibre of size 2 or 0, or all
    three have poles and the fibre is a single point.  A pole of exactly
    one function cannot occur since f3 = f1 + f2.
    """
    if not isinstance(cover, KleinFourCover):
        raise TypeError("count_points_cover takes a KleinFourCover")
    ext, embed = _extension(cover.field, n)
    tmask = _trace_mask(ext)
    mul = ext.mul
    inv = ext.inv
    fns = [( _mapped_coeffs(f.num, embed), _mapped_coeffs(f.den, embed))
           for f in (cover.f1, cover.f2, cover.f3)]

    def local(values):
        # values: list of f_i(x) or None for a pole, in order f1, f2, f3
        regular = [i for i, v in enumerate(values) if v is not None]
        if len(regular) == 3:
            c = 1
            for i in (0, 1):
                c *= 2 if (values[i] & tmask).bit_count() & 1 == 0 else 0
            return c
        if len(regular) == 1:
            v = values[regular[0]]
            return 2 if (v & tmask).bit_count() & 1 == 0 else 0
        if len(regular) == 0:
            return 1
        raise AssertionError(
            "a place supporting exactly one pole contradicts f3 = f1+f2")

    total = 0
    for x in range(ext.order):
        values = []
        for (nc, dc) in fns:
            d = _eval(dc, x, mul)
            if d == 0:
                values.append(None)
            else:
                values.append(mul(_eval(nc, x, mul), inv(d)))
        total += local(values)
    inf_values = []
    for f in (cover.f1, cover.f2, cover.f3):
        v = f.infinity_value()
        inf_values.append(None if v is None else embed(v))
    total += local(inf_values)
    return total


def weil_ok(counts, genus, q):
    """|N_n - (q^n + 1)| <= 2 g q^(n/2), checked in exact arithmetic."""
    for n, N in enumerate(counts, start=1):
        if (N - q**n - 1) ** 2 > 4 * genus * genus * q**n:
            return False
    return True


@dataclass(frozen=True)
class LPoly:
    """Numerator of the zeta function: integer coefficients b_0..b_2g."""

    coeffs: tuple
    q: int

    @property
    def genus(self):
        return (len(self.coeffs) - 1) // 2

    def two_rank(self):
        """Degree of L mod 2."""
        deg = 0
        for i, b in enumerate(self.coeffs):
            if b % 2:
                deg = i
        return deg

    def power_sums(self, upto):
        """Frobenius power sums p_1..p_upto implied by the coefficients."""
        ps = []
        for k in range(1, upto + 1):
            s = -k * (self.coeffs[k] if k < len(self.coeffs) else 0)
            for j in range(1, k):
                b = self.coeffs[k - j] if k - j < len(self.coeffs) else 0
                s -= ps[j - 1] * b
            ps.append(s)
        return ps

    def predicted_counts(self, upto):
        return [self.q**n + 1 - p
                for n, p in enumerate(self.power_sums(upto), start=1)]

    def __str__(self):
        terms = []
        for i, b in enumerate(self.coeffs):
            if b == 0:
                continue
            if i == 0:
                terms.append(str(b))
            elif i == 1:
                terms.append(f"{b}*T" if b != 1 else "T")
            else:
                terms.append(f"{b}*T^{i}" if b != 1 else f"T^{i}")
        return " + ".join(terms) if terms else "0"


def lpoly_from_counts(counts, genus, q=2):
    """Recover L from N_1..N_g (extra counts are consistency-checked).

    Newton's identities give b_1..b_g; the functional equation
    b_{2g-i} = q^(g-i) b_i completes the upper half.  Raises
    InconsistentCounts when a coefficient fails to be integral, a count
    violates the Weil bound for the claimed genus, or a count beyond N_g
    disagrees with the completed polynomial.
    """
    counts = list(counts)
    if len(counts) < genus:
        raise ValueError(f"need at least {genus} counts, got {len(counts)}")
    if not weil_ok(counts, genus, q):
        raise InconsistentCounts(
            f"counts {counts} violate the Weil bound for genus {genus}")
    ps = [q**n + 1 - N for n, N in enumerate(counts, start=1)]
    b = [1]
    for k in range(1, genus + 1):
        s = 0
        for j in range(1, k + 1):
            s += ps[j - 1] * b[k - j]
        if s % k:
            raise InconsistentCounts(
                f"coefficient b_{k} = {-s}/{k} is not integral")
        b.append(-s // k)
    for i in range(genus - 1, -1, -1):
        b.append(q ** (genus - i) * b[i])
    L = LPoly(tuple(b), q)
    if len(counts) > genus:
        predicted = L.predicted_counts(len(counts))
        for n in range(genus, len(counts)):
            if predicted[n] != counts[n]:
                raise InconsistentCounts(
                    f"N_{n+1} = {counts[n]} but the completed L-polynomial "
                    f"predicts {predicted[n]}")
    return L


def two_rank_from_lpoly(L):
    return L.two_rank()


@dataclass
class Report:
    """Outcome of comparing formula invariants against the count oracle."""

    target: str
    formula: dict
    oracle: dict
    identity_checks: list = dfield(default_factory=list)
    status: str = "confirmed"
    truncated: bool = False
    detail: str = ""

    @property
    def confirmed(self):
        return self.status == "confirmed"

    def to_json(self):
        return {"target": self.target, "formula": self.formula,
                "oracle": self.oracle,
                "identity_checks": self.identity_checks,
                "status": self.status, "truncated": self.truncated,
                "detail": self.detail}


def _verify_curve(curve, depth, max_bits):
    g, sigma = curve.invariants
    q = curve.field.order
    report = Report(target=str(curve),
                    formula={"genus": g, "two_rank": sigma},
                    oracle={})
    depth = max(depth, g)
    max_n = max_bits // curve.field.degree
    if depth > max_n:
        depth = max_n
        report.truncated = True
    if depth < g:
        report.status = "mismatch"
        report.detail = (f"cannot recover a genus-{g} L-polynomial within "
                         f"the 2^{max_bits} evaluation cap")
        return report
    counts = [count_points(curve, n) for n in range(1, depth + 1)]
    report.oracle["counts"] = counts
    try:
        L = lpoly_from_counts(counts, g, q)
    except InconsistentCounts as e:
        report.status = "mismatch"
        report.oracle["genus_consistent"] = False
        report.detail = str(e)
        return report
    report.oracle["genus_consistent"] = True
    report.oracle["lpoly"] = list(L.coeffs)
    report.oracle["two_rank"] = L.two_rank()
    if L.two_rank() != sigma:
        report.status = "mismatch"
        report.detail = (f"2-rank from L mod 2 is {L.two_rank()}, "
                         f"formula says {sigma}")
    return report


def _verify_cover(cover, depth, max_bits):
    g, sigma = cover.invariants
    report = Report(target=str(cover),
                    formula={"genus": g, "two_rank": sigma},
                    oracle={"quotients": []})
    q = cover.field.order
    ok = True
    for sub in cover.quotients:
        subreport = _verify_curve(sub, depth, max_bits)
        report.oracle["quotients"].append(subreport.to_json())
        ok = ok and subreport.confirmed
        report.truncated = report.truncated or subreport.truncated
    max_n = min(depth, max_bits // cover.field.degree)
    if max_n < depth:
        report.truncated = True
    for n in range(1, max_n + 1):
        lhs = count_points_cover(cover, n)
        rhs = (sum(count_points(sub, n) for sub in cover.quotients)
               - 2 * (q**n + 1))
        report.identity_checks.append(
            {"n": n, "direct": lhs, "from_quotients": rhs, "ok": lhs == rhs})
        ok = ok and lhs == rhs
    if not ok:
        report.status = "mismatch"
        if not report.detail:
            report.detail = "a quotient or the count identity failed"
    return report


def verify(target, depth=None, max_bits=MAX_DEGREE):
    """Count-based check of an ASCurve or KleinFourCover.

    depth defaults to (claimed genus + 1) extensions per quotient, enough
    to pin the L-polynomial and exercise the functional-equation check.
    max_bits bounds the total evaluation field; reports that hit it come
    back flagged as truncated.
    """
    max_bits = min(max_bits, MAX_DEGREE)
    if isinstance(target, ASCurve):
        if depth is None:
            depth = target.genus + 1
        return _verify_curve(target, depth, max_bits)
    if isinstance(target, KleinFourCover):
        if depth is None:
            depth = max(sub.genus for sub in target.quotients) + 1
        return _verify_cover(target, depth, max_bits)
    raise TypeError("verify takes an ASCurve or a KleinFourCover")
