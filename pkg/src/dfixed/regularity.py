"""Castelnuovo-Mumford regularity of principal d-fixed ideals.

Four routes: the closed formula (a maximum of per-block terms), the
sequential-chain socle computation, the minimal stable truncation, and
(externally) the Koszul Betti oracle.  The formula is the fast path;
the others exist to check it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import MonomialIdeal
from .principal import (
    PrincipalInput,
    is_borel_type,
    min_stable_truncation,
    principal_ideal,
    sequential_chain,
)


@dataclass(frozen=True)
class Corner:
    """A candidate extremal position: homological index, row (internal
    degree minus homological index), the socle dimension backing it, and
    whether it survives domination by the other candidates."""

    position: int
    row: int
    beta: int
    survives: bool


@dataclass(frozen=True)
class RegularityReport:
    value: int
    method: str
    d_values: tuple[int, ...] = ()
    corners: tuple[Corner, ...] = ()

    def to_record(self) -> dict:
        return {
            "method": self.method,
            "value": self.value,
            "d_values": list(self.d_values),
            "corners": [
                {
                    "position": c.position,
                    "row": c.row,
                    "beta": c.beta,
                    "survives": c.survives,
                }
                for c in self.corners
            ],
        }


def reg_formula(inp: PrincipalInput) -> RegularityReport:
    """Closed-form regularity: the maximum of the per-block terms D_q,
    plus the plain exponent of any leading x1 block (which factors out
    of the ideal as a monomial)."""
    if inp.index(inp.r) != inp.n:
        raise ValueError("the last block must sit at the last variable")
    extra = 0
    core = inp
    if inp.index(1) == 1:
        extra = inp.exponent(1)
        if inp.r == 1:
            return RegularityReport(value=extra, method="formula")
        core = inp.drop_first_block()
    d_values = tuple(core.reg_term(q) for q in range(1, core.r + 1))
    return RegularityReport(
        value=extra + max(d_values), method="formula", d_values=d_values
    )


def reg_bound(inp: PrincipalInput) -> int:
    """The n * deg(u) upper bound; checked against the formula value."""
    bound = inp.n * sum(alpha for _, alpha in inp.blocks)
    assert bound >= reg_formula(inp).value
    return bound


def _top_quotient_degree(
    small: MonomialIdeal, large: MonomialIdeal, bound: int, margin: int
) -> tuple[int, int]:
    """Top degree where large/small is nonzero, with its dimension there.

    Grows the two ideals' member slices degree by degree and compares
    their sizes, stopping early once ``margin`` consecutive empty
    degrees follow a witness.  Returns (-1, 0) when the quotient
    vanishes everywhere in range.
    """
    n = small.n
    small_by_deg: dict[int, list] = {}
    for g in small.exponent_rows:
        small_by_deg.setdefault(sum(g), []).append(g)
    large_by_deg: dict[int, list] = {}
    for g in large.exponent_rows:
        large_by_deg.setdefault(sum(g), []).append(g)

    def grow(prev, fresh):
        cur = {
            w[:i] + (w[i] + 1,) + w[i + 1 :] for w in prev for i in range(n)
        }
        cur.update(fresh)
        return cur

    top, dim_top, misses = -1, 0, 0
    small_slice: set = set()
    large_slice: set = set()
    for e in range(bound + 1):
        small_slice = grow(small_slice, small_by_deg.get(e, ()))
        large_slice = grow(large_slice, large_by_deg.get(e, ()))
        diff = len(large_slice) - len(small_slice)
        if diff > 0:
            top, dim_top, misses = e, diff, 0
        elif top >= 0:
            misses += 1
            if misses >= margin:
                break
    return top, dim_top


def reg_sequential(ideal: MonomialIdeal) -> RegularityReport:
    """Regularity as 1 plus the top socle-bearing degree along the
    sequential chain; valid for Borel-type ideals, where each chain
    quotient has finite length."""
    if not ideal.is_proper:
        raise ValueError("regularity needs a proper nonzero ideal")
    if not is_borel_type(ideal):
        raise ValueError("the sequential route needs a Borel-type ideal")
    chain = sequential_chain(ideal)
    bound = ideal.n * ideal.degree
    tops = []
    for restricted, saturated in chain.quotients:
        top, _ = _top_quotient_degree(restricted, saturated, bound, ideal.n)
        if top >= 0:
            tops.append(top)
    if not tops:
        raise AssertionError("every chain quotient vanished")
    return RegularityReport(
        value=max(tops) + 1,
        method="sequential",
        d_values=tuple(t + 1 for t in reversed(tops)),
    )


def reg_stability(ideal: MonomialIdeal) -> int:
    """Least degree whose truncation is stable.

    Equals the regularity for principal ideals generated by a pure
    power; for anything else it is only an upper bound on regularity.
    """
    return min_stable_truncation(ideal)


def corners(inp: PrincipalInput) -> tuple[Corner, ...]:
    """Candidate extremal positions from the sequential chain.

    One candidate per chain step: position = pivot variable, row = top
    degree of the step's saturation quotient, beta = its dimension
    there.  A candidate survives unless an earlier step (larger pivot)
    reaches at least the same row; the Betti oracle arbitrates actual
    extremality.
    """
    if inp.index(inp.r) != inp.n:
        raise ValueError("the last block must sit at the last variable")
    ideal = principal_ideal(inp)
    chain = sequential_chain(ideal)
    bound = ideal.n * ideal.degree
    raw = []
    for pivot, (restricted, saturated) in zip(chain.pivots, chain.quotients):
        top, dim_top = _top_quotient_degree(restricted, saturated, bound, inp.n)
        raw.append((pivot, top, dim_top))
    out = []
    best_row = -1
    for pivot, row, beta in raw:
        out.append(
            Corner(position=pivot, row=row, beta=beta, survives=row > best_row)
        )
        best_row = max(best_row, row)
    return tuple(out)


def reg_report_formula(inp: PrincipalInput) -> RegularityReport:
    """Formula report enriched with the corner candidates."""
    base = reg_formula(inp)
    return RegularityReport(
        value=base.value,
        method=base.method,
        d_values=base.d_values,
        corners=corners(inp),
    )
