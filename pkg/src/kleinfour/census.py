"""Exhaustive enumeration of small covers as an empirical soundness check.

Every coprime pair (f1, f2) of rational functions with numerator and
denominator degrees up to a bound is tried; valid covers are deduplicated
as unordered reduced triples and tabulated by (genus, 2-rank, type).  A
cover landing in a cell the decision procedure declares impossible would
disprove the classification; the run asserts that never happens.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ascurve import DegenerateCover, reduce_standard
from .klein4 import InvalidCover, KleinFourCover
from .poly import Poly
from .ratfun import RatFun
from .realize import realizable

MAX_CENSUS_DEGREE = 6


class CensusViolation(AssertionError):
    """A concrete cover exists in a cell declared impossible."""


@dataclass
class CensusCell:
    g: int
    sigma: int
    type: tuple
    witness_count: int
    example: KleinFourCover

    def to_json(self):
        return {"g": self.g, "sigma": self.sigma, "type": list(self.type),
                "witness_count": self.witness_count,
                "example": {"f1": str(self.example.f1),
                            "f2": str(self.example.f2)}}


def _all_polys(field, max_deg):
    order = field.order
    for deg in range(max_deg + 1):
        for enc in range(order ** deg):
            cs = []
            v = enc
            for _ in range(deg):
                cs.append(v % order)
                v //= order
            yield cs


def enumerate_functions(field, max_deg):
    """Normalized nonzero rational functions, num and den degrees <= bound."""
    out = []
    seen = set()
    monic_dens = []
    for cs in _all_polys(field, max_deg):
        monic_dens.append(Poly.make(field, cs + [1]))
    for den in monic_dens:
        for cs in _all_polys(field, max_deg + 1):
            num = Poly.make(field, cs)
            if not num.coeffs:
                continue
            f = RatFun(num, den)
            if f.num != num or f.den != den:
                continue  # not in lowest terms; the reduced pair shows up too
            key = f.key()
            if key in seen:
                continue
            seen.add(key)
            out.append(f)
    return out


def run_census(field, max_deg):
    """Census cells sorted by (g, sigma, type); raises CensusViolation if a
    cover contradicts the realizability decision."""
    if max_deg > MAX_CENSUS_DEGREE:
        raise ValueError(f"census degree bound is {MAX_CENSUS_DEGREE}")
    functions = []
    reduced_ok = {}
    for f in enumerate_functions(field, max_deg):
        r = reduce_standard(f)
        if not r.is_constant:
            functions.append(f)
            reduced_ok[f.key()] = r
    cells = {}
    seen_covers = set()
    n = len(functions)
    for i in range(n):
        f1 = functions[i]
        r1 = reduced_ok[f1.key()]
        for j in range(i + 1, n):
            f2 = functions[j]
            try:
                cover = KleinFourCover(r1, reduced_ok[f2.key()])
            except (InvalidCover, DegenerateCover):
                continue
            ck = cover.key()
            if ck in seen_covers:
                continue
            seen_covers.add(ck)
            g, sigma = cover.invariants
            cell_key = (g, sigma, cover.type.entries)
            cell = cells.get(cell_key)
            if cell is None:
                verdict = realizable(g, sigma, cover.type)
                if not verdict.exists:
                    raise CensusViolation(
                        f"cover ({cover.f1}, {cover.f2}) lands in the "
                        f"impossible cell (g={g}, sigma={sigma}, "
                        f"type={cover.type}): {verdict.citation}")
                cells[cell_key] = CensusCell(g, sigma, cover.type.entries,
                                             1, cover)
            else:
                cell.witness_count += 1
    return [cells[k] for k in sorted(cells)]
