"""Shared corpora and a session-wide cache for Betti tables."""

from __future__ import annotations

import pytest

from dfixed import (
    DSequence,
    PrincipalInput,
    betti_table,
    principal_ideal,
    reg_formula,
    variable,
)

# The divisor chains every sweep runs over; the last is a prime-power
# chain, the p-Borel special case.
D_CHAINS = [(1, 2, 4, 12), (1, 2, 4, 8, 16), (1, 3, 9)]

MAX_ALPHA = 25

# Pure powers x_n^alpha for the regularity and socle sweeps.
PURE_POWER_CORPUS = [
    (chain, n, alpha)
    for chain in D_CHAINS
    for n in (2, 3)
    for alpha in range(1, MAX_ALPHA + 1)
]

MULTI_BLOCK_TEXTS = ["x2^9*x3^16", "x2^16*x3^9", "x2^5*x3^5"]

# (chain, alpha) pairs, n = 3, whose Betti tables the acceptance suite
# computes at both primes; alpha tops out at 21.
BETTI_SUBSAMPLE = [
    ((1, 2, 4, 12), 1),
    ((1, 2, 4, 12), 5),
    ((1, 2, 4, 12), 9),
    ((1, 2, 4, 12), 13),
    ((1, 2, 4, 12), 16),
    ((1, 2, 4, 12), 21),
    ((1, 2, 4, 8, 16), 7),
    ((1, 2, 4, 8, 16), 16),
    ((1, 2, 4, 8, 16), 21),
    ((1, 3, 9), 10),
    ((1, 3, 9), 21),
]


def pure_power_ideal(chain, n, alpha):
    d = DSequence(chain)
    inp = PrincipalInput.from_monomial(variable(n, n, alpha), d)
    return inp, principal_ideal(inp)


@pytest.fixture(scope="session")
def betti_cache():
    """Memoize (chain, n, alpha, characteristic) -> BettiTable."""
    cache = {}

    def get(chain, alpha, characteristic, n=3):
        key = (tuple(chain), n, alpha, characteristic)
        if key not in cache:
            inp, ideal = pure_power_ideal(chain, n, alpha)
            cache[key] = betti_table(
                ideal,
                characteristic=characteristic,
                reg_bound=reg_formula(inp).value,
            )
        return cache[key]

    return get
