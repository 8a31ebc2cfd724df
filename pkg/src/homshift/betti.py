"""Brute-force multigraded Betti numbers via upper Koszul simplicial homology.

For a monomial ideal I and a multidegree a, the complex K^a(I) consists of
the subsets F of supp(a) with x^a / x_F in I, and

    beta_{i,a}(I) = rank of the (i-1)-st reduced homology of K^a(I).

Nonzero entries occur only at lcms of generator subsets, so scanning the
lcm lattice recovers every homological shift ideal and the projective
dimension without any reference to linear quotients.  Ranks are exact:
fraction-free integer elimination by default, or arithmetic modulo a
fixed large prime when a finite field is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import OracleCapError
from .monomials import Monomial, MonomialIdeal

DEFAULT_PRIME = 2**31 - 1

DEFAULT_GEN_CAP = 60
DEFAULT_LATTICE_CAP = 100_000


class SimplicialComplex:
    """An abstract simplicial complex on a subset of [n], stored by facets.

    The void complex (no faces at all) and the empty complex {the empty
    face} are distinct; both occur as upper Koszul complexes.
    """

    __slots__ = ("ground", "facets")

    def __init__(self, ground, facets):
        ground = tuple(sorted(set(ground)))
        cleaned = []
        fsets = sorted({frozenset(f) for f in facets}, key=lambda f: (len(f), sorted(f)))
        for f in fsets:
            if not f <= set(ground):
                raise ValueError(f"facet {sorted(f)} outside ground set {ground}")
            if any(f < g for g in fsets):
                continue
            cleaned.append(f)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "facets", tuple(cleaned))

    def is_void(self) -> bool:
        return not self.facets

    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces_by_dim(self) -> dict[int, list[tuple[int, ...]]]:
        """All faces grouped by dimension; the empty face has dimension -1."""
        if self.is_void():
            return {}
        faces: set[tuple[int, ...]] = set()
        for facet in self.facets:
            verts = sorted(facet)
            for k in range(len(verts) + 1):
                faces.update(combinations(verts, k))
        out: dict[int, list[tuple[int, ...]]] = {}
        for f in sorted(faces, key=lambda f: (len(f), f)):
            out.setdefault(len(f) - 1, []).append(f)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.ground == other.ground
            and set(self.facets) == set(other.facets)
        )

    def __repr__(self):
        return f"SimplicialComplex(ground={self.ground}, facets={[sorted(f) for f in self.facets]})"


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    m = len(mat)
    ncols = len(mat[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, m) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        for r in range(rank + 1, m):
            factor = mat[r][col]
            row = mat[r]
            top = mat[rank]
            for c in range(col, ncols):
                row[c] = (lead * row[c] - factor * top[c]) // prev
        prev = lead
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int = DEFAULT_PRIME) -> int:
    """Rank over the prime field F_p by Gaussian elimination."""
    mat = [[x % p for x in r] for r in rows]
    m = len(mat)
    ncols = len(mat[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, m) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(m):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _boundary_matrix(lower: list[tuple[int, ...]], upper: list[tuple[int, ...]]) -> list[list[int]]:
    """Matrix of the boundary map from dimension-d faces to dimension-(d-1) faces."""
    index = {f: i for i, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, face in enumerate(upper):
        sign = 1
        for t in range(len(face)):
            sub = face[:t] + face[t + 1 :]
            mat[index[sub]][j] = sign
            sign = -sign
    return mat


def reduced_homology_rank(c: SimplicialComplex, i: int, field: int = 0) -> int:
    """Dimension of the i-th reduced homology (field = 0 means rationals)."""
    if c.is_void():
        return 0
    faces = c.faces_by_dim()
    rank_fn = integer_rank if field == 0 else (lambda m: rank_mod_p(m, field))

    def boundary_rank(d: int) -> int:
        if d not in faces or (d - 1) not in faces:
            return 0
        return rank_fn(_boundary_matrix(faces[d - 1], faces[d]))

    if i < -1 or i not in faces:
        return 0
    return len(faces[i]) - boundary_rank(i) - boundary_rank(i + 1)


def upper_koszul(ideal: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """The complex of subsets F of supp(a) with x^a / x_F in the ideal.

    With T_u = {p in supp(a) : the generator u has full exponent a_p},
    each generator u dividing x^a contributes the facet supp(a) - T_u.
    """
    ground = a.support()
    facets = []
    for u in ideal.gens:
        if not u.divides(a):
            continue
        blocked = {p for p in ground if u.exps[p - 1] == a.exps[p - 1]}
        facets.append(frozenset(set(ground) - blocked))
    return SimplicialComplex(ground, facets)


def betti(ideal: MonomialIdeal, i: int, a: Monomial, field: int = 0) -> int:
    """The multigraded Betti number beta_{i,a} of the ideal."""
    if i < 0:
        return 0
    return reduced_homology_rank(upper_koszul(ideal, a), i - 1, field)


def lcm_lattice(
    ideal: MonomialIdeal,
    gen_cap: int = DEFAULT_GEN_CAP,
    size_cap: int = DEFAULT_LATTICE_CAP,
) -> list[Monomial]:
    """All joins of nonempty generator subsets, refusing oversized inputs."""
    gens = [g.exps for g in ideal.gens]
    if len(gens) > gen_cap:
        raise OracleCapError(
            f"{len(gens)} generators exceed the oracle cap of {gen_cap}"
        )
    lattice: set[tuple[int, ...]] = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                j = tuple(max(x, y) for x, y in zip(a, g))
                if j not in lattice:
                    new.add(j)
        lattice |= new
        if len(lattice) > size_cap:
            raise OracleCapError(
                f"lcm lattice exceeds the size cap of {size_cap}"
            )
        frontier = new
    return [Monomial(t) for t in sorted(lattice)]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of an ideal, keyed by (i, multidegree)."""

    n: int
    entries: dict

    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def degrees_at(self, i: int) -> list[tuple[int, ...]]:
        return sorted(a for j, a in self.entries if j == i)

    def total(self, i: int) -> int:
        return sum(b for (j, _), b in self.entries.items() if j == i)

    def to_dict(self, ideal: MonomialIdeal) -> dict:
        rows = [
            {"i": i, "deg": list(a), "beta": b}
            for (i, a), b in sorted(self.entries.items())
        ]
        return {"ideal": ideal.to_dict(), "entries": rows}


_TABLE_CACHE: dict = {}


def betti_table(
    ideal: MonomialIdeal,
    field: int = 0,
    gen_cap: int = DEFAULT_GEN_CAP,
    size_cap: int = DEFAULT_LATTICE_CAP,
) -> BettiTable:
    """The full Betti table over the lcm lattice, cached per ideal and field."""
    key = (ideal, field)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    entries: dict = {}
    for a in lcm_lattice(ideal, gen_cap, size_cap):
        complex_ = upper_koszul(ideal, a)
        faces = complex_.faces_by_dim()
        if not faces:
            continue
        rank_fn = integer_rank if field == 0 else (lambda m: rank_mod_p(m, field))
        ranks = {}
        dims = sorted(faces)
        for d in dims:
            if d - 1 in faces:
                ranks[d] = rank_fn(_boundary_matrix(faces[d - 1], faces[d]))
        for d in dims:
            h = len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if h > 0:
                entries[(d + 1, a.exps)] = h
    table = BettiTable(ideal.n, entries)
    _TABLE_CACHE[key] = table
    return table


def hs_oracle(ideal: MonomialIdeal, i: int, field: int = 0) -> MonomialIdeal:
    """The i-th homological shift ideal straight from Betti numbers."""
    if i < 0 or ideal.is_zero():
        return MonomialIdeal.zero(ideal.n)
    table = betti_table(ideal, field)
    return MonomialIdeal.from_exponents(ideal.n, table.degrees_at(i))


def pd_oracle(ideal: MonomialIdeal, field: int = 0) -> int:
    """Projective dimension as the largest i with a nonzero Betti number."""
    if ideal.is_zero():
        raise ValueError("projective dimension of the zero ideal is undefined")
    return betti_table(ideal, field).max_index()


def betti_monotonicity_check(J: MonomialIdeal, I: MonomialIdeal, field: int = 0) -> bool:
    """Whether beta_{i,a}(J) <= beta_{i,a}(I) over both lcm lattices, all i."""
    if J.n != I.n:
        raise ValueError("ambient variable counts differ")
    degrees = {a.exps for a in lcm_lattice(J)} | {a.exps for a in lcm_lattice(I)}
    top = max(pd_oracle(J, field), pd_oracle(I, field))
    for i in range(top + 1):
        for exps in degrees:
            a = Monomial(exps)
            if betti(J, i, a, field) > betti(I, i, a, field):
                return False
    return True
