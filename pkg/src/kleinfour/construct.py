"""Explicit witnesses for every realizable (genus, 2-rank, type) cell.

Each small 2-rank has its own scheme of defining pairs built from monomial
poles at 0, 1, infinity (and, when a fourth rational point is needed, the
generator of GF(4)); 2-ranks of 6 and above reduce by 3 through the
induction f1 -> f1 + x, f2 -> f2 + a*x, which raises every quotient genus
by 1 and the 2-rank by 3.  Every witness is checked against its target
invariants before it is returned; a failure raises InternalMismatch and
means a bug, not bad input.

The recipes returned alongside the covers record which scheme fired and
with what parameters, nested through induction steps, so a derivation can
be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .field import GF2, GF4, BinaryField
from .klein4 import KleinFourCover, Partition
from .poly import Poly, factor, field_embedding, monic_irreducibles
from .ratfun import RatFun, Place
from .realize import realizable


class NotRealizable(ValueError):
    """Asked to construct an impossible cell; carries the verdict."""

    def __init__(self, g, sigma, p, verdict):
        super().__init__(
            f"no cover exists for (g={g}, sigma={sigma}, type={p}): "
            f"{verdict.citation}")
        self.verdict = verdict


class InternalMismatch(RuntimeError):
    """A constructed witness missed its target invariants (a bug)."""


@dataclass(frozen=True)
class Recipe:
    """Derivation record: scheme tag, integer parameters, nested base."""

    lemma: str
    params: dict = dfield(default_factory=dict)
    base: "Recipe | None" = None

    def to_json(self):
        out = {"lemma": self.lemma, "params": dict(self.params)}
        if self.base is not None:
            out["base"] = self.base.to_json()
        return out

    def tags(self):
        t = [self.lemma]
        if self.base is not None:
            t.extend(self.base.tags())
        return t


# -- small builders ---------------------------------------------------------

def _xk(F, k, c=1):
    """c * x^k as a RatFun."""
    return RatFun.from_poly(Poly.monomial(F, k, c))


def _inv_xk(F, k, c=1):
    """c / x^k."""
    return RatFun(Poly.const(F, c), Poly.monomial(F, k))


def _inv_pk(place_poly, k, c=1):
    """c / place^k for a monic linear-or-higher place polynomial."""
    return RatFun.pole_at(place_poly, k, c)


def _x_plus(F, cbits):
    return Poly.make(F, (cbits, 1))


def _alpha(F):
    """Image of the GF(4) generator in F (degree must be even)."""
    return field_embedding(GF4, F)(2)


def lift_cover(cover, target):
    """Re-express a cover over a larger field."""
    emb = field_embedding(cover.field, target)
    def lift(f):
        return RatFun(f.num.map_field(target, emb),
                      f.den.map_field(target, emb))
    return KleinFourCover(lift(cover.f1), lift(cover.f2))


# -- pole packs (hyperelliptic building blocks) -----------------------------

def _fill_degrees(places, budget):
    # first-fit with backtracking over the ascending place list
    if budget == 0:
        return []
    for i, pl in enumerate(places):
        d = pl.degree
        if d > budget:
            continue
        rest = _fill_degrees(places[i + 1:], budget - d)
        if rest is not None:
            return [pl] + rest
    return None


def make_hyperelliptic(h, s, avoid=frozenset(), at_infinity=True, field=GF2):
    """A reduced f with genus h, 2-rank s, and controlled pole locations.

    One rational point carries a pole of order 2(h-s)+1 (at infinity when
    requested) and a squarefree pack of total degree s supplies the s
    remaining geometric simple poles.  No pole lands on a place in avoid;
    the field grows (doubling its degree) when it runs out of room.
    """
    if not 0 <= s <= h:
        raise ValueError(f"need 0 <= 2-rank <= genus, got ({h}, {s})")
    avoid = frozenset(avoid)
    while True:
        f = _try_hyperelliptic(h, s, avoid, at_infinity, field)
        if f is not None:
            return f
        bigger = BinaryField.default(field.degree * 2)
        emb = field_embedding(field, bigger)
        lifted = set()
        for pl in avoid:
            if pl.poly is None:
                lifted.add(pl)
                continue
            mapped = pl.poly.map_field(bigger, emb)
            for (q, _) in factor(mapped):
                lifted.add(Place(q))
        avoid = frozenset(lifted)
        field = bigger


def _try_hyperelliptic(h, s, avoid, at_infinity, field):
    big_order = 2 * (h - s) + 1
    avoid_polys = {pl.poly for pl in avoid if pl.poly is not None}
    if at_infinity:
        f = _xk(field, big_order)
        used = set()
    else:
        big_pt = None
        for c in range(field.order):
            if _x_plus(field, c) not in avoid_polys:
                big_pt = _x_plus(field, c)
                break
        if big_pt is None:
            return None
        f = _inv_pk(big_pt, big_order)
        used = {big_pt}
    if s:
        pool = []
        for q in monic_irreducibles(field, s):
            if q in avoid_polys or q in used:
                continue
            pool.append(Place(q))
            if sum(pl.degree for pl in pool) >= s + 2 * s:
                break
        chosen = _fill_degrees(pool, s)
        if chosen is None:
            return None
        for pl in chosen:
            f = f + _inv_pk(pl.poly, 1)
    return f


# -- the per-rank schemes ----------------------------------------------------

def construct_sigma0(p):
    """2-rank 0: all three quotients get a single pole at infinity."""
    g1, g2, g3 = p.entries
    if g1 != g2:
        raise NotRealizable(p.g, 0, p, realizable(p.g, 0, p))
    a = 2 * g1 + 1
    if g3 == g1:
        F = GF4
        f1 = _xk(F, a)
        f2 = _xk(F, a, 2)
        recipe = Recipe("S0", {"a": a})
    else:
        F = GF2
        c = 2 * g3 + 1
        f1 = _xk(F, a)
        f2 = _xk(F, a) + _xk(F, c)
        recipe = Recipe("S0", {"a": a, "c": c})
    return KleinFourCover(f1, f2), recipe


def _construct_sigma1(p):
    """2-rank 1: two single-pole quotients at distinct points."""
    _, p2, p3 = p.entries
    a = 2 * p2 + 1
    b = 2 * p3 + 1
    F = GF2
    return (KleinFourCover(_xk(F, a), _inv_xk(F, b)),
            Recipe("S1", {"a": a, "b": b}))


def _construct_sigma2(p):
    """2-rank 2: poles at 0 and infinity with a shared 1/x^b tail."""
    g1, g2, g3 = p.entries
    a = 2 * g3 + 1
    b = 2 * (g1 - g3) - 1
    c = 2 * (g2 + g3 - g1) + 1
    F = GF4
    f1 = _xk(F, a) + _inv_xk(F, b)
    f2 = _xk(F, c, 2) + _inv_xk(F, b)
    return KleinFourCover(f1, f2), Recipe("S2", {"a": a, "b": b, "c": c})


def _construct_sigma3(p):
    g = p.g
    g1, g2, g3 = p.entries
    if 2 * g1 == g + 1:
        # unbalanced, g odd: single shared point at infinity cancels
        a = 2 * g2 - 1
        b = 2 * g3 + 1
        F = GF2
        f1 = _xk(F, a) + _inv_pk(_x_plus(F, 1), 1)
        f2 = _inv_xk(F, b)
        return KleinFourCover(f1, f2), Recipe("S3a", {"a": a, "b": b})
    # two shared places (0 and infinity) with partial cancellation at both
    s = 2 * g2 - 1
    t = 2 * (g2 + g3 - g1) - 1
    m = 2 * (g1 - g2) + 1
    F = GF4
    f1 = _xk(F, s) + _inv_xk(F, m)
    f2 = _xk(F, s) + _xk(F, t, 2) + _inv_xk(F, 1, 2)
    return KleinFourCover(f1, f2), Recipe("S3b", {"a": s, "b": m, "c": t})


def _construct_sigma4(p):
    g = p.g
    g1, g2, g3 = p.entries
    if g1 > g2:
        a = 2 * g2 - 1
        b = 2 * (g1 - g2) - 1
        c = 2 * (g2 + g3 - g1) + 1
        if a > c:
            F = GF2
            f1 = _xk(F, a) + _inv_xk(F, b) + _inv_pk(_x_plus(F, 1), 1)
            f3 = _xk(F, c) + _inv_xk(F, b)
            return (KleinFourCover(f1, f1 + f3),
                    Recipe("S4a", {"a": a, "b": b, "c": c}))
        # a == c makes f1 + f3 drop its infinity pole; share the top
        # monomial with distinct leading coefficients instead
        F = GF4
        top = 2 * (g2 + g3 - g1) + 1
        u = 2 * (g1 - g3) - 1
        v = 2 * (g1 - g2) - 1
        f1 = _xk(F, top) + _inv_xk(F, u) + _inv_pk(_x_plus(F, 1), v)
        f2 = _xk(F, top, 2) + _inv_xk(F, u)
        return (KleinFourCover(f1, f2),
                Recipe("S4a", {"a": top, "b": u, "c": v, "variant": 1}))
    if g3 >= 2:
        a = 2 * g1 - 1
        b = 2 * g3 - 3
        F = GF2
        f1 = _xk(F, a) + _inv_xk(F, 1)
        f3 = _xk(F, b) + _inv_xk(F, 1) + _inv_pk(_x_plus(F, 1), 1)
        return KleinFourCover(f1, f1 + f3), Recipe("S4b", {"a": a, "b": b})
    if g3 == 0:
        # {g/2, g/2, 0}, g even
        F = GF4
        f1 = _xk(F, g - 3) + _inv_xk(F, 1) + _inv_pk(_x_plus(F, 1), 1)
        f2 = _xk(F, 1, 2)
        return KleinFourCover(f1, f2), Recipe("S4c", {"a": g - 3})
    # {(g-1)/2, (g-1)/2, 1}, g odd >= 7; the second function must be a
    # cubic, not linear, to keep its quotient at genus 1
    F = GF4
    f1 = _xk(F, g - 4) + _inv_xk(F, 1) + _inv_pk(_x_plus(F, 1), 1)
    f2 = _xk(F, 3, 2)
    return (KleinFourCover(f1, f2),
            Recipe("S4d", {"a": g - 4, "c": 3, "corrected": 1}))


def _construct_sigma5(g, p, for_induction=False):
    g1, g2, g3 = p.entries
    if 2 * g1 == g + 1:
        if for_induction:
            return _lean_unb_odd(g, 5, p)
        return construct_unbalanced_odd(g, 5, p)
    if p.is_totally_balanced:
        a = g1
        if a % 2 == 1:
            F = GF4
            f1 = _xk(F, a) + _inv_xk(F, a)
            f2 = (_xk(F, a) + _inv_pk(_x_plus(F, 1), a - 2)
                  + _inv_pk(_x_plus(F, 2), 1))
            return KleinFourCover(f1, f2), Recipe("S5bal", {"a": a})
        # even a: partial cancellation at two points, all over GF(2)
        F = GF2
        f1 = (_xk(F, 1) + _inv_xk(F, a - 1)
              + _inv_pk(_x_plus(F, 1), a - 1))
        f2 = (_xk(F, 1) + _inv_xk(F, a - 3)
              + _inv_pk(_x_plus(F, 1), a + 1))
        return (KleinFourCover(f1, f2),
                Recipe("S5bal", {"a": a, "variant": 1}))
    phat = Partition(g1 - 1, g2 - 1, g3 - 1)
    base_cover, base_recipe = _construct_sigma2(phat)
    cover, params = _inducted(base_cover)
    return cover, Recipe("S5gen", params, base=base_recipe)


# -- the unbalanced families and the (g-1)/2 family --------------------------

def construct_unbalanced_even(g, sigma):
    """Type {g/2, g/2, 0}: a hyperelliptic quotient plus a linear twist."""
    if g % 2 or sigma % 2 or not 0 <= sigma <= g:
        raise ValueError(f"need even g and even 0 <= sigma <= g, "
                         f"got ({g}, {sigma})")
    k = sigma // 2
    f1 = make_hyperelliptic(g // 2, k, at_infinity=True)
    F = f1.field
    if 2 * (g // 2 - k) + 1 >= 3:
        f2 = _xk(F, 1)
    else:
        if F.degree % 2:
            bigger = BinaryField.default(F.degree * 2)
            emb = field_embedding(F, bigger)
            f1 = RatFun(f1.num.map_field(bigger, emb),
                        f1.den.map_field(bigger, emb))
            F = bigger
        f2 = _xk(F, 1, _alpha(F))
    return KleinFourCover(f1, f2), Recipe("UNB_EVEN", {"k1": k})


def construct_unbalanced_odd(g, sigma, p):
    """Unbalanced odd type: two hyperelliptic quotients with disjoint poles.

    The function without the infinity pole is built first so its rational
    anchor point is always available; the other one then backtracks onto
    higher-degree places when the rational points are spent.
    """
    if g % 2 == 0 or sigma % 2 == 0:
        raise ValueError(f"need odd g and odd sigma, got ({g}, {sigma})")
    if p.g != g or 2 * p.entries[0] != g + 1:
        raise ValueError(f"type {p} does not contain (g+1)/2 for g={g}")
    _, ga, gb = p.entries
    k = (sigma - 1) // 2
    ka = min(ga, k)
    kb = k - ka
    if kb > gb:
        raise ValueError(f"2-rank {sigma} does not split over type {p}")
    f2 = make_hyperelliptic(gb, kb, at_infinity=False)
    f1 = make_hyperelliptic(ga, ka, avoid=f2.pole_divisor().places(),
                            at_infinity=True, field=f2.field)
    if f1.field != f2.field:
        emb = field_embedding(f2.field, f1.field)
        f2 = RatFun(f2.num.map_field(f1.field, emb),
                    f2.den.map_field(f1.field, emb))
    return (KleinFourCover(f1, f2),
            Recipe("UNB_ODD", {"k1": ka, "k2": kb}))


def construct_half_minus(g, sigma, p):
    """Type containing (g-1)/2, even 2-rank: cubic poles at infinity plus
    disjoint proper-fraction pole packs."""
    if g % 2 == 0 or sigma % 2:
        raise ValueError(f"need odd g and even sigma, got ({g}, {sigma})")
    if sigma == 0 or sigma > g - 3:
        raise ValueError(
            f"this family only reaches even 2-ranks 2..{g - 3}, not {sigma}")
    if p.g != g or 2 * p.entries[0] != g - 1:
        raise ValueError(f"type {p} does not contain (g-1)/2 for g={g}")
    _, ga, gb = p.entries
    if gb < 1:
        raise ValueError(f"type {p} needs two positive companion genera")
    k = sigma // 2
    split = None
    for ka in range(min(ga - 1, k), -1, -1):
        kb = k - ka
        if kb < 0 or kb > max(gb - 1, 0):
            continue
        if (ka == 0 and ga != 1) or (kb == 0 and gb != 1):
            continue
        split = (ka, kb)
        break
    if split is None:
        raise ValueError(f"2-rank {sigma} does not split over type {p}")
    ka, kb = split
    F = GF4
    if ka == 0:
        h1 = RatFun.zero(F)
    else:
        h1 = make_hyperelliptic(ga - 2, ka - 1, at_infinity=False, field=F)
    if kb == 0:
        h2 = RatFun.zero(h1.field)
    else:
        h2 = make_hyperelliptic(gb - 2, kb - 1,
                                avoid=h1.pole_divisor().places(),
                                at_infinity=False, field=h1.field)
    F = h2.field
    if h1.field != F:
        emb = field_embedding(h1.field, F)
        h1 = RatFun(h1.num.map_field(F, emb), h1.den.map_field(F, emb))
    f1 = _xk(F, 3) + h1
    f2 = _xk(F, 3, _alpha(F)) + h2
    return (KleinFourCover(f1, f2),
            Recipe("HALF_MINUS", {"k1": ka, "k2": kb}))


# -- lean builders for induction bases ---------------------------------------
#
# Each induction step spends one rational point of the projective line (the
# new pole at infinity), and GF(4) has only five.  Covers destined for
# induction are therefore built over GF(4) with their poles packed into
# places of degree 2 and 3, which do not split under the lift and leave
# rational points free for the coordinate changes.

def _lean_pack(h, s, avoid=frozenset(), field=GF4):
    """Genus-h, 2-rank-s pole pack with no infinity pole, frugal with
    rational points."""
    avoid_polys = {pl.poly for pl in avoid if pl.poly is not None}
    nonrational = []
    rational = [q for c in range(field.order)
                if (q := _x_plus(field, c)) not in avoid_polys]
    for q in monic_irreducibles(field, max(s + 1, 2)):
        if q.degree == 1 or q in avoid_polys:
            continue
        nonrational.append(Place(q))
        if sum(pl.degree for pl in nonrational) >= 3 * (s + 2):
            break
    pool = nonrational + [Place(q) for q in rational]
    if h > s:
        assert rational, "no rational anchor available for the deep pole"
        f = _inv_pk(rational[0], 2 * (h - s) + 1)
        pool = [pl for pl in pool if pl.poly != rational[0]]
        budget = s
    else:
        f = None
        budget = s + 1
    chosen = _fill_degrees(pool, budget)
    assert chosen is not None, "pole pack does not fit in the field"
    for pl in chosen:
        term = _inv_pk(pl.poly, 1)
        f = term if f is None else f + term
    return f


def _lean_unb_odd(g, sigma, p):
    """Unbalanced odd cells rebuilt over GF(4) for induction."""
    _, ga, gb = p.entries
    k = (sigma - 1) // 2
    ka = min(ga, k)
    kb = k - ka
    f2 = _lean_pack(ga, ka)
    f3 = _lean_pack(gb, kb, avoid=f2.pole_divisor().places())
    return (KleinFourCover(f2, f3),
            Recipe("UNB_ODD", {"k1": ka, "k2": kb, "variant": 1}))


def _lean_unb_even(g, sigma):
    """{g/2, g/2, 0} cells rebuilt over GF(4) for induction.

    The genus-0 quotient reuses one simple rational part of the big pack
    with a twisted coefficient, so the third quotient keeps the same pole
    shape as the first.
    """
    k = sigma // 2
    h = g // 2
    F = GF4
    pack = _lean_pack(h - 1, k - 1, avoid={Place(_x_plus(F, 0))})
    f1 = pack + _inv_pk(_x_plus(F, 0), 1)
    f2 = _inv_pk(_x_plus(F, 0), 1, _alpha(F))
    return (KleinFourCover(f1, f2),
            Recipe("UNB_EVEN", {"k1": k, "variant": 1}))


# -- normalization and induction ---------------------------------------------

def normalize_infinity(cover):
    """Mobius-move so that no defining function has a pole at infinity.

    Substitutes x -> beta + 1/x for the smallest field point beta that is
    a pole of none of the three functions, extending the base field when
    every point is taken.  Returns (cover, beta_bits); invariants and type
    are untouched.
    """
    has_inf = any(f.num.degree > f.den.degree
                  for f in (cover.f1, cover.f2, cover.f3))
    if not has_inf:
        return cover, None
    work = cover
    while True:
        F = work.field
        dens = (work.f1.den, work.f2.den, work.f3.den)
        beta = None
        for b in range(F.order):
            if all(d.eval_at(b) != 0 for d in dens):
                beta = b
                break
        if beta is not None:
            f1 = work.f1.mobius(beta, 1, 1, 0)
            f2 = work.f2.mobius(beta, 1, 1, 0)
            return KleinFourCover(f1, f2), beta
        work = lift_cover(work, BinaryField.default(F.degree * 2))


def induct_step(cover):
    """From (g, sigma, {g1,g2,g3}) to (g+3, sigma+3, {g1+1,g2+1,g3+1}).

    Adds x, a*x and (a+1)*x to the three defining functions; each quotient
    picks up one more simple pole at infinity.  The cover must have no
    pole at infinity already and must live over a field containing GF(4).
    """
    if cover.field.degree % 2:
        raise ValueError("induction needs the GF(4) generator; lift first")
    for f in (cover.f1, cover.f2, cover.f3):
        if f.num.degree > f.den.degree:
            raise ValueError(
                "a defining function has a pole at infinity; apply "
                "normalize_infinity first")
    F = cover.field
    alpha = _alpha(F)
    return KleinFourCover(cover.f1 + _xk(F, 1),
                          cover.f2 + _xk(F, 1, alpha))


def _inducted(base_cover):
    """Lift, normalize, and induct; returns (cover, recipe params)."""
    work = base_cover
    if work.field.degree % 2:
        work = lift_cover(work, BinaryField.default(work.field.degree * 2))
    params = {}
    work, beta = normalize_infinity(work)
    if beta is not None:
        params["n0"] = beta
    return induct_step(work), params


# -- the dispatcher -----------------------------------------------------------

def construct(g, sigma, p):
    """Witness cover plus recipe for any realizable (g, sigma, p).

    Raises NotRealizable on impossible cells and InternalMismatch if a
    produced witness misses its target (which would be a bug).
    """
    verdict = realizable(g, sigma, p)
    if not verdict.exists:
        raise NotRealizable(g, sigma, p, verdict)
    cover, recipe = _dispatch(g, sigma, p)
    got = (cover.invariants, cover.type)
    if got != ((g, sigma), p):
        raise InternalMismatch(
            f"scheme {recipe.lemma} produced invariants {got[0]} and type "
            f"{got[1]} instead of ({g}, {sigma}) and {p}")
    return cover, recipe


def _dispatch(g, sigma, p, for_induction=False):
    if sigma == 0:
        return construct_sigma0(p)
    if sigma == 1:
        return _construct_sigma1(p)
    if sigma == 2:
        return _construct_sigma2(p)
    if sigma == 3:
        if for_induction and any(2 * e == g + 1 for e in p):
            return _lean_unb_odd(g, 3, p)
        return _construct_sigma3(p)
    if sigma == 4:
        return _construct_sigma4(p)
    if sigma == 5:
        return _construct_sigma5(g, p, for_induction)
    g1, g2, g3 = p.entries
    if 2 * g1 == g + 1:
        if for_induction:
            return _lean_unb_odd(g, sigma, p)
        return construct_unbalanced_odd(g, sigma, p)
    if g3 == 0:
        if for_induction:
            return _lean_unb_even(g, sigma)
        return construct_unbalanced_even(g, sigma)
    if 2 * g1 == g - 1 and sigma % 2 == 0:
        return construct_half_minus(g, sigma, p)
    phat = Partition(g1 - 1, g2 - 1, g3 - 1)
    base_cover, base_recipe = _dispatch(g - 3, sigma - 3, phat,
                                        for_induction=True)
    cover, params = _inducted(base_cover)
    return cover, Recipe("INDUCT", params, base=base_recipe)
