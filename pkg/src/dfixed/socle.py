"""Socle of the quotient by a principal d-fixed ideal.

Two routes are provided: closed-form component ideals indexed by
(block-subset, digit-position) pairs, and a brute-force degreewise
enumeration of the monomials annihilated by every variable.  The two
must agree; the enumeration is the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .ideals import Monomial, MonomialIdeal, compositions, prefix_frobenius
from .principal import PrincipalInput, principal_ideal, sequential_chain


@dataclass(frozen=True)
class IndexPair:
    """A socle component label: blocks lam_1 < ... < lam_a = r (1-based)
    paired with strictly increasing digit positions t_1 < ... < t_a, each
    position carrying a nonzero digit of its block."""

    lam: tuple[int, ...]
    t: tuple[int, ...]

    def __str__(self):
        lam = ",".join(str(x) for x in self.lam)
        t = ",".join(str(x) for x in self.t)
        return f"(({lam}),({t}))"


@dataclass(frozen=True)
class SocleComponent:
    pair: IndexPair
    ideal: MonomialIdeal
    degree: int


@dataclass(frozen=True)
class SocleReport:
    """Socle description: component ideals, nonzero degrees with
    dimensions, and the top degree."""

    components: tuple[SocleComponent, ...]
    degrees: tuple[tuple[int, int], ...]
    max_degree: int
    witness: MonomialIdeal

    def degree_map(self) -> dict[int, int]:
        return dict(self.degrees)

    def to_record(self) -> dict:
        return {
            "components": [
                {
                    "lambda": list(c.pair.lam),
                    "t": list(c.pair.t),
                    "degree": c.degree,
                    "generators": [str(g) for g in c.ideal.gens],
                }
                for c in self.components
            ],
            "degrees": [{"degree": e, "dimension": h} for e, h in self.degrees],
            "max_degree": self.max_degree,
        }


def enumerate_pairs(inp: PrincipalInput) -> list[IndexPair]:
    """All component labels, depth-first: size ascending, then lexicographic."""
    if inp.index(inp.r) != inp.n:
        raise ValueError("the last block must sit at the last variable")
    r = inp.r
    nonzero = {q: [t for t, a in enumerate(inp.digits(q)) if a > 0] for q in range(1, r + 1)}
    pairs: list[IndexPair] = []
    for a in range(1, r + 1):
        for lam in _increasing_tuples(a, 1, r):
            if lam[-1] != r:
                continue
            for t in _pair_positions(lam, nonzero):
                pairs.append(IndexPair(lam=lam, t=t))
    return pairs


def _increasing_tuples(a, lo, hi):
    if a == 0:
        yield ()
        return
    for first in range(lo, hi - a + 2):
        for rest in _increasing_tuples(a - 1, first + 1, hi):
            yield (first,) + rest


def _pair_positions(lam, nonzero):
    def walk(nu, floor):
        if nu == len(lam):
            yield ()
            return
        for t in nonzero[lam[nu]]:
            if t < floor:
                continue
            for rest in walk(nu + 1, t + 1):
                yield (t,) + rest

    yield from walk(0, 0)


def component_ideal(inp: PrincipalInput, pair: IndexPair) -> MonomialIdeal:
    """The component ideal attached to one (blocks, positions) label.

    The product of one squarefree-run factor per chosen block (the run of
    variables between consecutive chosen block indices, raised to
    d_{t} - 1) with the bracket-power factors of the blocks between and
    at the chosen positions.
    """
    d, n = inp.d, inp.n
    a = len(pair.lam)
    exps = [0] * n
    prev_index = 0
    for e in range(a):
        hi = inp.index(pair.lam[e])
        step = d[pair.t[e]] - 1
        for k in range(prev_index + 1, hi + 1):
            exps[k - 1] += step
        prev_index = hi
    ideal = MonomialIdeal(n, [Monomial(exps)])
    for nu in range(a):
        lam_nu = pair.lam[nu]
        t_nu = pair.t[nu]
        i_lam = inp.index(lam_nu)
        row = inp.digits(lam_nu)
        if nu + 1 < a:
            ideal = ideal * prefix_frobenius(i_lam, d[pair.t[nu + 1]], n)
        for j in range(t_nu + 1, len(d)):
            if row[j]:
                ideal = ideal * prefix_frobenius(i_lam, d[j], n) ** row[j]
        if row[t_nu] > 1:
            ideal = ideal * prefix_frobenius(i_lam, d[t_nu], n) ** (row[t_nu] - 1)
        lam_prev = pair.lam[nu - 1] if nu > 0 else 0
        for q in range(lam_prev + 1, lam_nu):
            i_q = inp.index(q)
            row_q = inp.digits(q)
            for j in range(t_nu, len(d)):
                if row_q[j]:
                    ideal = ideal * prefix_frobenius(i_q, d[j], n) ** row_q[j]
    return ideal


def component_degree(inp: PrincipalInput, pair: IndexPair) -> int:
    """Common degree of the component's generators, in closed form."""
    a = len(pair.lam)
    weight = 0
    for nu in range(a):
        lam_prev = pair.lam[nu - 1] if nu > 0 else 0
        t_nu = pair.t[nu]
        for q in range(lam_prev + 1, pair.lam[nu] + 1):
            row = inp.digits(q)
            weight += sum(row[j] * inp.d[j] for j in range(t_nu, len(row)))
    shift = 0
    prev_i = 0
    for nu in range(a):
        i_nu = inp.index(pair.lam[nu])
        shift += (i_nu - prev_i) * (inp.d[pair.t[nu]] - 1)
        prev_i = i_nu
    return weight + shift - inp.d[pair.t[0]]


def socle_max_degree(inp: PrincipalInput) -> int:
    """Top degree with nonzero socle."""
    s_r = inp.top_digit(inp.r)
    return inp.digit_weight(inp.r, s_r) + (inp.n - 1) * (inp.d[s_r] - 1) - 1


def socle_ideal_single(inp: PrincipalInput) -> SocleReport:
    """Socle for a single pure-power block at the last variable.

    Dimensions come in closed form: products of simplex binomials, with
    same-degree components merged by summation (which can only happen in
    two variables).
    """
    if inp.r != 1:
        raise ValueError("single-block socle needs exactly one block")
    if inp.index(1) != inp.n:
        raise ValueError("the block must sit at the last variable")
    if inp.n < 2:
        raise ValueError("socle formulas need at least two variables")
    n, d = inp.n, inp.d
    row = inp.digits(1)
    components = []
    dims: dict[int, int] = {}
    for t, a_t in enumerate(row):
        if a_t == 0:
            continue
        pair = IndexPair(lam=(1,), t=(t,))
        ideal = component_ideal(inp, pair)
        e_t = inp.digit_weight(1, t) + (n - 1) * (d[t] - 1) - 1
        h_t = comb(n + a_t - 2, n - 1)
        for j in range(t + 1, len(row)):
            h_t *= comb(n + row[j] - 1, n - 1)
        components.append(SocleComponent(pair=pair, ideal=ideal, degree=e_t))
        dims[e_t] = dims.get(e_t, 0) + h_t
    witness = MonomialIdeal(n, [g for c in components for g in c.ideal.gens])
    return SocleReport(
        components=tuple(components),
        degrees=tuple(sorted(dims.items())),
        max_degree=socle_max_degree(inp),
        witness=witness,
    )


def socle_ideal_general(inp: PrincipalInput) -> SocleReport:
    """Socle via the full component expansion, any number of blocks.

    Degrees come from the closed formula per component; dimensions are
    counted degreewise as monomials inside the component sum but outside
    the ideal (no closed dimension formula exists beyond one block).
    """
    if inp.index(inp.r) != inp.n:
        raise ValueError("the last block must sit at the last variable")
    if inp.index(1) < 2:
        raise ValueError(
            "blocks at x1 must be factored out before the socle formulas apply"
        )
    if inp.n < 2:
        raise ValueError("socle formulas need at least two variables")
    ideal = principal_ideal(inp)
    components = []
    for pair in enumerate_pairs(inp):
        components.append(
            SocleComponent(
                pair=pair,
                ideal=component_ideal(inp, pair),
                degree=component_degree(inp, pair),
            )
        )
    witness = MonomialIdeal(
        inp.n, [g for c in components for g in c.ideal.gens]
    )
    dims: dict[int, int] = {}
    for e in sorted({c.degree for c in components}):
        count = 0
        for w in compositions(e, inp.n):
            if witness.contains_exponents(w) and not ideal.contains_exponents(w):
                count += 1
        if count:
            dims[e] = count
    return SocleReport(
        components=tuple(components),
        degrees=tuple(sorted(dims.items())),
        max_degree=socle_max_degree(inp),
        witness=witness,
    )


def socle_report(inp: PrincipalInput) -> SocleReport:
    """Dispatch to the single-block closed form when it applies."""
    if inp.r == 1:
        return socle_ideal_single(inp)
    return socle_ideal_general(inp)


def socle_direct(
    ideal: MonomialIdeal, degree_lo: int, degree_hi: int
) -> list[tuple[int, int, tuple[Monomial, ...]]]:
    """Brute-force socle: monomials outside the ideal that every variable
    pushes inside, listed per degree with their bases.

    Degrees e with e + 1 below the least generator degree cannot carry
    socle and are skipped without enumeration.
    """
    if degree_lo > degree_hi:
        raise ValueError("empty degree range")
    n = ideal.n
    if ideal.is_zero:
        return []
    members = ideal.member_table(degree_hi + 1)
    out = []
    for e in range(degree_lo, degree_hi + 1):
        if e + 1 < ideal.min_degree:
            continue
        inside, above = members[e], members[e + 1]
        basis = []
        for w in compositions(e, n):
            if w in inside:
                continue
            if all(
                w[:i] + (w[i] + 1,) + w[i + 1 :] in above for i in range(n)
            ):
                basis.append(Monomial(w))
        if basis:
            out.append((e, len(basis), tuple(basis)))
    return out


def socle_containment_check(inp: PrincipalInput) -> bool:
    """Whether every socle witness already lies in the first saturation step."""
    if inp.index(inp.r) != inp.n:
        raise ValueError("the last block must sit at the last variable")
    ideal = principal_ideal(inp)
    if inp.r == 1:
        return True
    first_step = sequential_chain(ideal).ideals[1]
    full = prefix_frobenius(inp.n, 1, inp.n)
    return first_step.contains_ideal(ideal.colon(full))
