"""Divisor chains and digitwise integer arithmetic.

A divisor chain is a strictly increasing sequence of positive integers
1 = d_0 | d_1 | ... | d_s in which each entry divides the next.  Every
nonnegative integer then has a unique digit expansion a = sum(a_t * d_t)
with 0 <= a_t < d_{t+1}/d_t for t < s (the top digit is unbounded), which
induces a digitwise partial order on the nonnegative integers.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_VALUE = 2**31 - 1


def _check_value(a: int, what: str = "value") -> int:
    a = int(a)
    if a < 0:
        raise ValueError(f"{what} must be nonnegative, got {a}")
    if a > MAX_VALUE:
        raise ValueError(f"{what} {a} exceeds the 2^31-1 cap")
    return a


def check_loose(entries: Sequence[int]) -> tuple[int, ...]:
    """Validate a loose chain: starts at 1 and strictly increases.

    Divisibility is deliberately not required; loose chains exist to
    demonstrate how digit expansions lose uniqueness without it.
    """
    entries = tuple(int(e) for e in entries)
    if not entries:
        raise ValueError("empty sequence")
    if entries[0] != 1:
        raise ValueError(f"entry 0 must be 1, got {entries[0]}")
    for t in range(1, len(entries)):
        _check_value(entries[t], f"entry {t}")
        if entries[t] <= entries[t - 1]:
            raise ValueError(
                f"entry {t} breaks strict increase: {entries[t]} <= {entries[t - 1]}"
            )
    return entries


class DSequence:
    """A divisor chain d_0 | d_1 | ... | d_s with d_0 = 1.

    Immutable; construction validates all three invariants (leading 1,
    strict increase, divisibility) and reports the first violation with
    its index.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int]):
        entries = check_loose(tuple(entries))
        for t in range(1, len(entries)):
            if entries[t] % entries[t - 1] != 0:
                raise ValueError(
                    f"entry {t} breaks divisibility: "
                    f"{entries[t - 1]} does not divide {entries[t]}"
                )
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DSequence is immutable")

    @classmethod
    def parse(cls, text: str) -> "DSequence":
        """Parse a comma-separated chain such as ``"1,2,4,12"``."""
        try:
            parts = [int(p) for p in text.split(",") if p.strip() != ""]
        except ValueError:
            raise ValueError(f"cannot parse d-sequence from {text!r}") from None
        return cls(parts)

    @property
    def s(self) -> int:
        """Index of the last entry."""
        return len(self.entries) - 1

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, t):
        return self.entries[t]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, DSequence) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)

    def __repr__(self):
        return f"DSequence({list(self.entries)})"


def validate(entries: Sequence[int]) -> DSequence:
    """Promote a candidate chain to a DSequence or raise ValueError."""
    return DSequence(entries)


def decompose(a: int, d: DSequence) -> tuple[int, ...]:
    """Digit expansion of ``a`` along the chain ``d``.

    Greedy from the top: the last digit is the quotient by d_s, then each
    lower digit is the quotient of the remainder by its entry.
    """
    a = _check_value(a)
    digits = [0] * len(d)
    rest = a
    for t in range(d.s, -1, -1):
        digits[t], rest = divmod(rest, d[t])
    assert rest == 0
    for t in range(d.s):
        assert digits[t] * d[t] < d[t + 1]
    return tuple(digits)


def compose(digits: Sequence[int], d: DSequence) -> int:
    """Inverse of :func:`decompose`: sum of digit * entry."""
    if len(digits) != len(d):
        raise ValueError(f"expected {len(d)} digits, got {len(digits)}")
    total = 0
    for a_t, d_t in zip(digits, d):
        total += _check_value(a_t, "digit") * d_t
    return _check_value(total, "composed value")


def leq_d(a: int, b: int, d: DSequence) -> bool:
    """Digitwise partial order: every digit of ``a`` at most that of ``b``."""
    da = decompose(a, d)
    db = decompose(b, d)
    return all(x <= y for x, y in zip(da, db))


def sub_values(b: int, d: DSequence) -> list[int]:
    """All integers digitwise below ``b``, in increasing order.

    The count is the product of (digit + 1) over the digits of ``b``.
    """
    digits = decompose(b, d)
    values = [0]
    for t, b_t in enumerate(digits):
        if b_t == 0:
            continue
        values = [v + a_t * d[t] for v in values for a_t in range(b_t + 1)]
    return sorted(values)


def split(a: int, b_prime: int, b_second: int, d: DSequence) -> tuple[int, int]:
    """Split ``a`` digitwise below ``b_prime + b_second`` into two parts.

    Returns (a', a'') with a' + a'' = a, a' digitwise below b_prime and
    a'' digitwise below b_second.  Such a pair always exists when the
    precondition a <= b' + b'' holds digitwise; found by searching the
    (small) set of values below b_prime.
    """
    b_prime = _check_value(b_prime, "b_prime")
    b_second = _check_value(b_second, "b_second")
    if not leq_d(a, b_prime + b_second, d):
        raise ValueError(
            f"{a} is not digitwise below {b_prime} + {b_second} over d={d}"
        )
    for a_prime in sub_values(b_prime, d):
        rest = a - a_prime
        if rest >= 0 and leq_d(rest, b_second, d):
            return a_prime, rest
    raise AssertionError(
        f"no digitwise split of {a} across ({b_prime}, {b_second}); "
        "this contradicts the splitting property"
    )


def all_representations(a: int, entries: Sequence[int]) -> list[tuple[int, ...]]:
    """All digit expansions of ``a`` over a loose chain.

    Enumerates every digit tuple with a_t * d_t < d_{t+1} for t < s (top
    digit unbounded) summing to ``a``.  Over a genuine divisor chain the
    result is a single tuple; a chain that violates divisibility admits
    integers with several expansions.
    """
    a = _check_value(a)
    entries = check_loose(entries)
    s = len(entries) - 1
    bounds = []
    for t in range(s):
        bounds.append((entries[t + 1] - 1) // entries[t])
    bounds.append(a // entries[s])

    found: list[tuple[int, ...]] = []
    digits = [0] * len(entries)

    def walk(t: int, rest: int) -> None:
        if t == len(entries):
            if rest == 0:
                found.append(tuple(digits))
            return
        top = min(bounds[t], rest // entries[t])
        for a_t in range(top + 1):
            digits[t] = a_t
            walk(t + 1, rest - a_t * entries[t])
        digits[t] = 0

    walk(0, a)
    return found
