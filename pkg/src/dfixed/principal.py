"""Principal d-fixed ideals: product construction, closure oracle, predicates.

A monomial ideal is d-fixed (for a divisor chain d) when it is closed
under the exchanges u -> u * x_j^t / x_i^t for j < i and every t
digitwise below the exponent of x_i in u.  The smallest d-fixed ideal
containing a monomial has an explicit product form built from prefix
power ideals (x_1^d, ..., x_q^d); the closure fixpoint computed here is
the independent route to the same ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dseq import DSequence, decompose, sub_values
from .ideals import Monomial, MonomialIdeal, prefix_frobenius, variable


@dataclass(frozen=True)
class PrincipalInput:
    """A target monomial as blocks (variable index, positive exponent).

    Block indices are 1-based and strictly increasing; the digit matrix
    of the exponents along ``d`` drives every closed formula downstream.
    """

    d: DSequence
    n: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("at least one block is required")
        prev = 0
        for i, alpha in self.blocks:
            if not prev < i <= self.n:
                raise ValueError(
                    f"block indices must strictly increase within 1..{self.n}"
                )
            if alpha <= 0:
                raise ValueError(f"block exponent must be positive, got {alpha}")
            prev = i

    @classmethod
    def from_monomial(cls, u: Monomial, d: DSequence) -> "PrincipalInput":
        blocks = tuple(
            (i, e) for i, e in enumerate(u.exponents, start=1) if e > 0
        )
        return cls(d=d, n=u.n, blocks=blocks)

    @property
    def r(self) -> int:
        return len(self.blocks)

    def monomial(self) -> Monomial:
        exps = [0] * self.n
        for i, alpha in self.blocks:
            exps[i - 1] = alpha
        return Monomial(exps)

    def index(self, q: int) -> int:
        """Variable index i_q of block q (blocks numbered 1..r)."""
        return self.blocks[q - 1][0]

    def exponent(self, q: int) -> int:
        return self.blocks[q - 1][1]

    def digits(self, q: int) -> tuple[int, ...]:
        """Digit expansion of block q's exponent along d."""
        return decompose(self.exponent(q), self.d)

    def top_digit(self, q: int) -> int:
        """s_q: position of the highest nonzero digit of block q."""
        row = self.digits(q)
        return max(t for t, a in enumerate(row) if a > 0)

    def digit_weight(self, q: int, t: int) -> int:
        """d_qt: sum of digit * entry over blocks up to q and positions >= t."""
        total = 0
        for e in range(1, q + 1):
            row = self.digits(e)
            total += sum(row[j] * self.d[j] for j in range(t, len(row)))
        return total

    def reg_term(self, q: int) -> int:
        """D_q, the block's contribution to the regularity maximum."""
        s_q = self.top_digit(q)
        return self.digit_weight(q, s_q) + (self.index(q) - 1) * (self.d[s_q] - 1)

    def drop_first_block(self) -> "PrincipalInput":
        if self.r < 2:
            raise ValueError("cannot drop the only block")
        return PrincipalInput(d=self.d, n=self.n, blocks=self.blocks[1:])


def principal_ideal(inp: PrincipalInput) -> MonomialIdeal:
    """Product form of the smallest d-fixed ideal containing the monomial.

    Multiplies (x_1^{d_t}, ..., x_{i_q}^{d_t})^{digit} over every block q
    and digit position t, minimalizing after each factor.
    """
    result = MonomialIdeal.unit(inp.n)
    for q in range(1, inp.r + 1):
        i_q = inp.index(q)
        for t, a_qt in enumerate(inp.digits(q)):
            if a_qt == 0:
                continue
            result = result * prefix_frobenius(i_q, inp.d[t], inp.n) ** a_qt
    return result


def _exchanges(exps: tuple[int, ...], d: DSequence):
    """All single exchanges of a monomial, as raw exponent tuples."""
    for i in range(len(exps) - 1, 0, -1):
        e_i = exps[i]
        if e_i == 0:
            continue
        for t in sub_values(e_i, d):
            if t == 0:
                continue
            for j in range(i):
                moved = list(exps)
                moved[i] -= t
                moved[j] += t
                yield tuple(moved)


def closure(gens, d: DSequence, n: int | None = None) -> MonomialIdeal:
    """Smallest d-fixed ideal containing the given monomials.

    Fixpoint of generator-level exchanges with minimalization between
    rounds.  Exchanges preserve degree, so the worklist is processed in
    degree order and terminates.  Checking minimal generators suffices:
    an exchange on a multiple g*y splits into exchanges on g and on y by
    the additive splitting property of the digitwise order, and the g
    part already lands in the ideal.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    if n is None:
        n = gens[0].n
    current = MonomialIdeal(n, gens)
    while True:
        fresh: set[tuple[int, ...]] = set()
        pending = sorted(current.exponent_rows, key=lambda e: (sum(e), e))
        for exps in pending:
            for moved in _exchanges(exps, d):
                if moved not in fresh and not current.contains_exponents(moved):
                    fresh.add(moved)
        if not fresh:
            return current
        current = MonomialIdeal(
            n, list(current.gens) + [Monomial(e) for e in fresh]
        )


def is_dfixed(ideal: MonomialIdeal, d: DSequence) -> bool:
    """Whether the ideal is closed under digitwise exchanges.

    Generator checking suffices, by the same splitting argument as in
    :func:`closure`.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no generators to check")
    for exps in ideal.exponent_rows:
        for moved in _exchanges(exps, d):
            if not ideal.contains_exponents(moved):
                return False
    return True


def is_stable(ideal: MonomialIdeal) -> bool:
    """Whether x_i * g / x_max(g) stays inside for every generator g, i < max.

    Generator checking suffices for stability: for a multiple g*y with
    top variable in y the exchange divides out of y, and otherwise it
    reduces to the generator's own exchange.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no generators to check")
    for exps in ideal.exponent_rows:
        m = 0
        for i in range(len(exps) - 1, -1, -1):
            if exps[i] > 0:
                m = i
                break
        for i in range(m):
            moved = list(exps)
            moved[m] -= 1
            moved[i] += 1
            if not ideal.contains_exponents(tuple(moved)):
                return False
    return True


def is_borel_type(ideal: MonomialIdeal) -> bool:
    """Whether saturating by x_j matches saturating by (x_1, ..., x_j) for all j."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no generators to check")
    n = ideal.n
    for j in range(1, n + 1):
        by_var = ideal.saturate(MonomialIdeal(n, [variable(j, n)]))
        by_prefix = ideal.saturate(prefix_frobenius(j, 1, n))
        if by_var != by_prefix:
            return False
    return True


@dataclass(frozen=True)
class SequentialChain:
    """The saturation chain of an ideal and its per-step quotient data.

    ``ideals`` runs from the input up to the unit ideal; step ``k``
    saturates by the pivot variable (the largest index occurring among
    generators).  ``quotients`` holds, per step, the generators viewed in
    the pivot-sized subring together with their full saturation there.
    """

    ideals: tuple[MonomialIdeal, ...]
    pivots: tuple[int, ...]
    quotients: tuple[tuple[MonomialIdeal, MonomialIdeal], ...]

    @property
    def length(self) -> int:
        return len(self.pivots)


def sequential_chain(ideal: MonomialIdeal) -> SequentialChain:
    if not ideal.is_proper:
        raise ValueError("the sequential chain needs a proper nonzero ideal")
    ideals = [ideal]
    pivots = []
    quotients = []
    current = ideal
    while not current.is_unit:
        pivot = current.max_var()
        restricted = current.restrict(pivot)
        saturated = restricted.saturate(prefix_frobenius(pivot, 1, pivot))
        pivots.append(pivot)
        quotients.append((restricted, saturated))
        current = current.saturate(
            MonomialIdeal(ideal.n, [variable(pivot, ideal.n)])
        )
        ideals.append(current)
        if len(pivots) > ideal.n:
            raise AssertionError("sequential chain failed to terminate")
    return SequentialChain(
        ideals=tuple(ideals), pivots=tuple(pivots), quotients=tuple(quotients)
    )


def min_stable_truncation(ideal: MonomialIdeal) -> int:
    """Least e at or above the generation degree with a stable truncation.

    Capped at n * degree, which covers every ideal whose regularity obeys
    the n * degree bound; ideals such as (x2) have no stable truncation at
    all, and the cap turns that into an error instead of a hang.
    """
    if not ideal.is_proper:
        raise ValueError("stability scan needs a proper nonzero ideal")
    cap = ideal.n * ideal.degree
    for e in range(ideal.degree, cap + 1):
        if is_stable(ideal.truncate(e)):
            return e
    raise ValueError(f"no stable truncation up to degree {cap}")
