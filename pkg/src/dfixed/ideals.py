"""Monomials and monomial ideals with minimal-generator arithmetic.

Everything is exact and deterministic: ideals always store a minimal
generating set in canonical order (degree, then lexicographic on
exponent vectors), so equal ideals compare and serialize identically.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

import numpy as np

from .dseq import MAX_VALUE

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class Monomial:
    """A monomial in a fixed number of variables, stored as exponents.

    Variables are 1-based (x1, x2, ...) to match the usual notation;
    ``exponents[i-1]`` is the exponent of x_i.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        total = 0
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            total += e
        if total > MAX_VALUE:
            raise ValueError(f"degree {total} exceeds the 2^31-1 cap")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def nu(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exponents[i - 1]

    def max_var(self) -> int:
        """Largest index i with x_i dividing the monomial (1-based)."""
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i] > 0:
                return i + 1
        raise ValueError("the unit monomial has no maximal variable")

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_ambient(self.n, other.n)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(a, b) for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def sort_key(self):
        return (self.degree, self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return f"Monomial({list(self.exponents)})"


def variable(i: int, n: int, power: int = 1) -> Monomial:
    """The monomial x_i^power in n variables."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    exps = [0] * n
    exps[i - 1] = power
    return Monomial(exps)


def format_monomial(m: Monomial) -> str:
    """Render as ``x1^2*x3`` style text; the unit monomial is ``1``."""
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x<k>^<e>`` factors joined by ``*``; ``1`` is the unit."""
    text = text.strip()
    if text == "1":
        return Monomial([0] * n)
    exps = [0] * n
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        e = int(match.group(2)) if match.group(2) else 1
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} out of range for n={n}")
        exps[i - 1] += e
    return Monomial(exps)


def parse_generator_lines(lines: Iterable[str]) -> tuple[int, list[Monomial]]:
    """Read a generator listing: ``n=<int>`` first, one monomial per line.

    Lines starting with ``#`` (and blank lines) are ignored.
    """
    n = None
    gens: list[Monomial] = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ValueError("generator listing must declare n=<int> first")
            n = int(line[2:])
            if n < 1:
                raise ValueError(f"ambient variable count must be >= 1, got {n}")
            continue
        gens.append(parse_monomial(line, n))
    if n is None:
        raise ValueError("generator listing is empty")
    return n, gens


def _same_ambient(n1: int, n2: int) -> None:
    if n1 != n2:
        raise ValueError(f"mixed ambient variable counts: {n1} vs {n2}")


def _pure_variables(ideal: "MonomialIdeal") -> list[int] | None:
    """Variable indices when every generator is a plain x_i, else None."""
    out = []
    for e in ideal.exponent_rows:
        if sum(e) != 1:
            return None
        out.append(e.index(1) + 1)
    return out


def _minimal_exponents(exps: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # Dedupe, then sweep by increasing degree: a tuple survives unless a
    # kept tuple (necessarily of smaller or equal degree) divides it.
    unique = sorted(set(exps), key=lambda e: (sum(e), e))
    if len(unique) > 64:
        return _minimal_rows(np.array(unique, dtype=np.int64))
    kept: list[tuple[int, ...]] = []
    for cand in unique:
        for g in kept:
            if all(a <= b for a, b in zip(g, cand)):
                break
        else:
            kept.append(cand)
    return kept


def _minimal_rows(arr: np.ndarray) -> list[tuple[int, ...]]:
    # Rows must be unique and sorted by (degree, lex); each survivor kills
    # every later row it divides in one vectorized pass.
    m = arr.shape[0]
    alive = np.ones(m, dtype=bool)
    kept: list[tuple[int, ...]] = []
    for i in range(m):
        if not alive[i]:
            continue
        row = arr[i]
        kept.append(tuple(int(x) for x in row))
        if i + 1 < m:
            alive[i + 1 :] &= ~np.all(arr[i + 1 :] >= row, axis=1)
    return kept


def _sorted_unique_rows(arr: np.ndarray) -> np.ndarray:
    arr = np.unique(arr, axis=0)
    keys = tuple(arr[:, k] for k in range(arr.shape[1] - 1, -1, -1))
    order = np.lexsort(keys + (arr.sum(axis=1),))
    return arr[order]


class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by the
    unit monomial.  Equality is equality of minimal generator sets.
    """

    __slots__ = ("n", "gens", "_exps", "_genset", "_min_degree")

    def __init__(self, n: int, monomials: Iterable[Monomial] = ()):
        mons = list(monomials)
        for m in mons:
            _same_ambient(n, m.n)
        exps = _minimal_exponents(m.exponents for m in mons)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(Monomial(e) for e in exps))
        object.__setattr__(self, "_exps", exps)
        object.__setattr__(self, "_genset", frozenset(exps))
        object.__setattr__(
            self, "_min_degree", min((sum(e) for e in exps), default=None)
        )

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _from_rows(cls, n: int, rows: np.ndarray) -> "MonomialIdeal":
        # Trusted path for vectorized arithmetic: minimalize an exponent
        # matrix directly, bypassing per-monomial object churn.
        if rows.size == 0:
            return cls(n)
        exps = _minimal_rows(_sorted_unique_rows(rows))
        ideal = cls.__new__(cls)
        object.__setattr__(ideal, "n", n)
        object.__setattr__(ideal, "gens", tuple(Monomial(e) for e in exps))
        object.__setattr__(ideal, "_exps", exps)
        object.__setattr__(ideal, "_genset", frozenset(exps))
        object.__setattr__(
            ideal, "_min_degree", min((sum(e) for e in exps), default=None)
        )
        return ideal

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [Monomial([0] * n)])

    @property
    def exponent_rows(self) -> list[tuple[int, ...]]:
        """Minimal generators as raw exponent tuples, canonical order."""
        return self._exps

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self._min_degree == 0

    @property
    def is_proper(self) -> bool:
        return not (self.is_zero or self.is_unit)

    @property
    def degree(self) -> int:
        """Largest degree of a minimal generator."""
        if self.is_zero:
            raise ValueError("the zero ideal has no generator degree")
        return max(m.degree for m in self.gens)

    @property
    def min_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero ideal has no generator degree")
        return self._min_degree

    def max_var(self) -> int:
        """Largest variable index occurring in any generator."""
        if self.is_zero or self.is_unit:
            raise ValueError("no variables occur in this ideal's generators")
        best = 0
        for e in self._exps:
            for i in range(len(e) - 1, best - 1, -1):
                if e[i] > 0:
                    best = max(best, i + 1)
                    break
        return best

    def contains_exponents(self, w: tuple[int, ...]) -> bool:
        if w in self._genset:
            return True
        deg = sum(w)
        if self._min_degree is None or deg < self._min_degree:
            return False
        for g in self._exps:
            if sum(g) > deg:
                break
            ok = True
            for a, b in zip(g, w):
                if a > b:
                    ok = False
                    break
            if ok:
                return True
        return False

    def __contains__(self, w: Monomial) -> bool:
        _same_ambient(self.n, w.n)
        return self.contains_exponents(w.exponents)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        _same_ambient(self.n, other.n)
        return all(self.contains_exponents(e) for e in other._exps)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self._exps == other._exps
        )

    def __hash__(self):
        return hash((self.n, tuple(self._exps)))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_ambient(self.n, other.n)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        a = np.array(self._exps, dtype=np.int64)
        b = np.array(other._exps, dtype=np.int64)
        products = (a[:, None, :] + b[None, :, :]).reshape(-1, self.n)
        return MonomialIdeal._from_rows(self.n, products)

    def __pow__(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative ideal power")
        result = MonomialIdeal.unit(self.n)
        for _ in range(k):
            result = result * self
        return result

    def colon(self, other) -> "MonomialIdeal":
        """Colon ideal (self : other); ``other`` is a Monomial or ideal."""
        if isinstance(other, Monomial):
            _same_ambient(self.n, other.n)
            if self.is_zero:
                return self
            a = np.array(self._exps, dtype=np.int64)
            f = np.array(other.exponents, dtype=np.int64)
            return MonomialIdeal._from_rows(self.n, np.maximum(a - f, 0))
        _same_ambient(self.n, other.n)
        if other.is_zero:
            raise ValueError("colon by the zero ideal")
        result = None
        for f in other.gens:
            piece = self.colon(f)
            result = piece if result is None else result.intersect(piece)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_ambient(self.n, other.n)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        a = np.array(self._exps, dtype=np.int64)
        b = np.array(other._exps, dtype=np.int64)
        lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, self.n)
        return MonomialIdeal._from_rows(self.n, lcms)

    def saturate(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Iterated colon (self : other^infinity), computed to a fixpoint.

        When every generator of ``other`` is a single variable the
        fixpoint is reached directly: saturating by x_i strips x_i from
        every generator, and saturating by several variables intersects
        the single-variable saturations (no other monomial prime
        contains them all).  The generic loop covers everything else.
        """
        _same_ambient(self.n, other.n)
        if other.is_zero:
            raise ValueError("saturation by the zero ideal")
        if self.is_zero:
            return self
        variables = _pure_variables(other)
        if variables is not None:
            result = None
            for i in variables:
                stripped = self._strip_variable(i)
                result = (
                    stripped if result is None else result.intersect(stripped)
                )
            return result
        current = self
        while True:
            nxt = current.colon(other)
            if nxt == current:
                return current
            current = nxt

    def _strip_variable(self, i: int) -> "MonomialIdeal":
        a = np.array(self._exps, dtype=np.int64)
        a[:, i - 1] = 0
        return MonomialIdeal._from_rows(self.n, a)

    def truncate(self, e: int) -> "MonomialIdeal":
        """The ideal generated by all members of degree at least ``e``.

        Its minimal generators are the degree-e monomials of the ideal
        together with the original generators of larger degree; neither
        group can divide into the other, so no extra minimalization pass
        is needed.
        """
        if e < 0:
            raise ValueError("truncation degree must be nonnegative")
        if self.is_zero or self._min_degree >= e:
            return self
        at_e: set[tuple[int, ...]] = set()
        keep: list[tuple[int, ...]] = []
        for g in self._exps:
            gap = e - sum(g)
            if gap <= 0:
                keep.append(g)
            else:
                for pad in compositions(gap, self.n):
                    at_e.add(tuple(a + b for a, b in zip(g, pad)))
        mons = [Monomial(t) for t in at_e] + [Monomial(t) for t in keep]
        return MonomialIdeal(self.n, mons)

    def standard_monomials(self, deg: int) -> list[Monomial]:
        """Degree-``deg`` monomials outside the ideal, in canonical order."""
        return [
            Monomial(e)
            for e in compositions(deg, self.n)
            if not self.contains_exponents(e)
        ]

    def member_table(self, max_degree: int) -> list[set[tuple[int, ...]]]:
        """Member monomials sliced by degree, for degrees 0..max_degree.

        Built bottom-up: a monomial belongs to the ideal exactly when it
        is a generator or one of its single-variable quotients belongs,
        so each slice grows from the previous one by variable bumps.
        This turns repeated membership scanning into hash lookups.
        """
        by_degree: dict[int, list[tuple[int, ...]]] = {}
        for g in self._exps:
            by_degree.setdefault(sum(g), []).append(g)
        slices: list[set[tuple[int, ...]]] = []
        prev: set[tuple[int, ...]] = set()
        for e in range(max_degree + 1):
            cur = {
                w[:i] + (w[i] + 1,) + w[i + 1 :]
                for w in prev
                for i in range(self.n)
            }
            cur.update(by_degree.get(e, ()))
            slices.append(cur)
            prev = cur
        return slices

    def hilbert_series(self, max_degree: int) -> list[int]:
        """Quotient-ring dimensions per degree, for degrees 0..max_degree."""
        return [
            _count_compositions(e, self.n) - len(slice_)
            for e, slice_ in enumerate(self.member_table(max_degree))
        ]

    def hilbert_function(self, deg: int) -> int:
        """Dimension of the degree-``deg`` piece of the quotient ring."""
        if self.is_zero:
            return _count_compositions(deg, self.n)
        if self._min_degree > deg:
            return _count_compositions(deg, self.n)
        return sum(
            1 for e in compositions(deg, self.n) if not self.contains_exponents(e)
        )

    def restrict(self, m: int) -> "MonomialIdeal":
        """View in the subring of the first ``m`` variables.

        Only valid when no generator involves a variable beyond x_m, which
        is exactly the situation for sequential-chain quotient data.
        """
        for e in self._exps:
            if any(e[i] > 0 for i in range(m, len(e))):
                raise ValueError(f"a generator involves a variable beyond x{m}")
        return MonomialIdeal(m, (Monomial(e[:m]) for e in self._exps))

    def extend(self, n: int) -> "MonomialIdeal":
        """View in a larger polynomial ring with ``n`` variables."""
        if n < self.n:
            raise ValueError("extension must not drop variables")
        pad = (0,) * (n - self.n)
        return MonomialIdeal(n, (Monomial(e + pad) for e in self._exps))

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={[str(g) for g in self.gens]})"


def minimalize(monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Build the ideal generated by the given monomials."""
    mons = list(monomials)
    if not mons:
        raise ValueError("cannot infer the ambient variable count from no monomials")
    n = mons[0].n
    return MonomialIdeal(n, mons)


def member(ideal: MonomialIdeal, w: Monomial) -> bool:
    """Membership test: some minimal generator divides ``w``."""
    return w in ideal


def prefix_frobenius(q_index: int, d: int, n: int) -> MonomialIdeal:
    """The ideal (x_1^d, ..., x_q^d) inside n variables."""
    if not 1 <= q_index <= n:
        raise ValueError(f"prefix length {q_index} out of range 1..{n}")
    if d < 1:
        raise ValueError(f"bracket power must be positive, got {d}")
    return MonomialIdeal(n, (variable(i, n, d) for i in range(1, q_index + 1)))


def ideal_degree(ideal: MonomialIdeal) -> int:
    return ideal.degree


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of the given degree, ascending lexicographically."""
    if parts < 1:
        raise ValueError("need at least one variable")
    if total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def _count_compositions(total: int, parts: int) -> int:
    # C(total + parts - 1, parts - 1)
    num, den = 1, 1
    for k in range(1, parts):
        num *= total + k
        den *= k
    return num // den
