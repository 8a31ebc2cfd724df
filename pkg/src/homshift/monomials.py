"""Exact monomial and monomial-ideal arithmetic with canonical minimal generators.

Monomials are dense exponent vectors over a fixed number of variables.
Ideals always carry their unique minimal generating set, sorted in
descending lexicographic order with x1 > x2 > ... > xn, so ideal equality
is a plain comparison of generator lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class Monomial:
    """A monomial x1^e1 * ... * xn^en, stored as a tuple of exponents."""

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        """x_i in n variables (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside [1, {n}]")
        return cls(tuple(1 if k == i - 1 else 0 for k in range(n)))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        """The squarefree monomial x_F for F a subset of [n]."""
        sup = set(support)
        if any(not 1 <= i <= n for i in sup):
            raise ValueError(f"support {sorted(sup)} outside [1, {n}]")
        return cls(tuple(1 if k + 1 in sup else 0 for k in range(n)))

    @classmethod
    def uniform(cls, n: int, k: int) -> "Monomial":
        """(x1*...*xn)^k."""
        return cls((k,) * n)

    @property
    def n(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exps) if e > 0)

    def is_one(self) -> bool:
        return not any(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(tuple(a * k for a in self.exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if the quotient is not a monomial."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return f"Monomial({self.exps})"

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)


def _minimalize_tuples(n: int, tuples: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Minimal elements under divisibility, sorted in descending lex order."""
    distinct = set(tuples)
    if not distinct:
        return []
    degrees = {sum(t) for t in distinct}
    if len(degrees) == 1:
        # Equal-degree monomials never divide one another.
        return sorted(distinct, reverse=True)
    by_degree = sorted(distinct, key=sum)
    kept: list[tuple[int, ...]] = []
    for cand in by_degree:
        cd = sum(cand)
        divisible = False
        for k in kept:
            if sum(k) >= cd:
                break  # kept is degree-sorted; no later element can divide cand
            if all(a <= b for a, b in zip(k, cand)):
                divisible = True
                break
        if not divisible:
            kept.append(cand)
    return sorted(kept, reverse=True)


class MonomialIdeal:
    """A monomial ideal, held as its canonical minimal generating set.

    The zero ideal has no generators; the unit ideal has the single
    generator 1.  Construction minimalizes, so two ideals are equal
    exactly when their generator tuples coincide.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        tuples = []
        for g in gens:
            if g.n != n:
                raise ValueError(f"generator {g} has {g.n} variables, expected {n}")
            tuples.append(g.exps)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(
            self, "gens", tuple(Monomial(t) for t in _minimalize_tuples(n, tuples))
        )

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.one(n),))

    @classmethod
    def from_exponents(cls, n: int, rows: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(n, (Monomial(r) for r in rows))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def num_gens(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def is_contained_in(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.is_contained_in(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.n)
        prods = {
            tuple(a + b for a, b in zip(u.exps, v.exps))
            for u in self.gens
            for v in other.gens
        }
        return MonomialIdeal.from_exponents(self.n, prods)

    def scaled(self, m: Monomial) -> "MonomialIdeal":
        """The ideal m * I."""
        return MonomialIdeal(self.n, tuple(m * g for g in self.gens))

    def power(self, s: int) -> "MonomialIdeal":
        """I^s, with I^0 the unit ideal and I^s the zero ideal for s < 0."""
        if s < 0:
            return MonomialIdeal.zero(self.n)
        result = MonomialIdeal.unit(self.n)
        for _ in range(s):
            result = result * self
        return result

    def colon(self, m: Monomial) -> "MonomialIdeal":
        """The colon ideal (I : m), generated by u / gcd(u, m) over generators u."""
        if m.n != self.n:
            raise ValueError("ambient variable counts differ")
        return MonomialIdeal(self.n, tuple(g / g.gcd(m) for g in self.gens))

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g.exps) for g in self.gens]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        return cls.from_exponents(int(data["n"]), data["gens"])

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={[str(g) for g in self.gens]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimalize(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical minimal generating set of the ideal generated by ``gens``."""
    return MonomialIdeal(n, gens)


def maximal_ideal(n: int) -> MonomialIdeal:
    """The graded maximal ideal (x1, ..., xn)."""
    return MonomialIdeal(n, tuple(Monomial.variable(n, i) for i in range(1, n + 1)))


def squarefree_power_of_maximal(n: int, i: int) -> MonomialIdeal:
    """The ideal generated by all squarefree monomials x_F with |F| = i."""
    if i < 0 or i > n:
        raise ValueError(f"squarefree power index {i} outside [0, {n}]")
    if i == 0:
        return MonomialIdeal.unit(n)
    gens = (Monomial.from_support(n, F) for F in combinations(range(1, n + 1), i))
    return MonomialIdeal(n, tuple(gens))


@dataclass(frozen=True)
class VeroneseSpec:
    """Cap vector and degree cutting out an ideal of Veronese type."""

    caps: tuple[int, ...]
    degree: int

    def __post_init__(self):
        caps = tuple(int(c) for c in self.caps)
        object.__setattr__(self, "caps", caps)
        if any(c < 0 for c in caps):
            raise ValueError(f"negative cap in {caps}")
        if not 0 <= self.degree <= sum(caps):
            raise ValueError(
                f"degree {self.degree} outside [0, {sum(caps)}] for caps {caps}"
            )


def _capped_exponents(caps: Sequence[int], d: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors e <= caps with total degree d."""
    n = len(caps)

    def rec(idx: int, remaining: int, prefix: tuple[int, ...]):
        if idx == n:
            if remaining == 0:
                yield prefix
            return
        tail_room = sum(caps[idx + 1 :])
        lo = max(0, remaining - tail_room)
        hi = min(caps[idx], remaining)
        for e in range(lo, hi + 1):
            yield from rec(idx + 1, remaining - e, prefix + (e,))

    yield from rec(0, d, ())


def veronese_type(spec: VeroneseSpec) -> MonomialIdeal:
    """All monomials of total degree d with exponents capped componentwise."""
    n = len(spec.caps)
    return MonomialIdeal.from_exponents(n, _capped_exponents(spec.caps, spec.degree))


def _single_degree(ideal: MonomialIdeal) -> bool:
    return len({g.degree() for g in ideal.gens}) <= 1


def exchange_violation(ideal: MonomialIdeal, strong: bool = False) -> tuple | None:
    """A witness (u, v, i) or (u, v, i, j) violating the (strong) exchange property.

    Returns None when the property holds.  Only meaningful for ideals
    generated in a single degree.
    """
    gen_set = {g.exps for g in ideal.gens}
    n = ideal.n
    for u in ideal.gens:
        for v in ideal.gens:
            if u == v:
                continue
            for i in range(n):
                if u.exps[i] <= v.exps[i]:
                    continue
                swaps_in = []
                candidates = [j for j in range(n) if u.exps[j] < v.exps[j]]
                for j in candidates:
                    e = list(u.exps)
                    e[i] -= 1
                    e[j] += 1
                    swaps_in.append(tuple(e) in gen_set)
                if strong and not all(swaps_in):
                    j = candidates[swaps_in.index(False)]
                    return (u, v, i + 1, j + 1)
                if not strong and not any(swaps_in):
                    return (u, v, i + 1)
    return None


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Exhaustive check of the exchange property over all generator pairs."""
    if not _single_degree(ideal):
        return False
    return exchange_violation(ideal, strong=False) is None


def has_strong_exchange(ideal: MonomialIdeal) -> bool:
    """Exhaustive check of the strong exchange property."""
    if not _single_degree(ideal):
        return False
    return exchange_violation(ideal, strong=True) is None


def divide_out(ideal: MonomialIdeal) -> tuple[Monomial, MonomialIdeal]:
    """Split I = g * J with g the gcd of all generators and J of content 1."""
    if ideal.is_zero():
        raise ValueError("cannot divide content out of the zero ideal")
    content = ideal.gens[0]
    for g in ideal.gens[1:]:
        content = content.gcd(g)
    core = MonomialIdeal(ideal.n, tuple(g / content for g in ideal.gens))
    return content, core
