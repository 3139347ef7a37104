"""Root systems of the simple types A-G in Bourbaki ordering.

Roots are dense integer coefficient vectors over the simple roots, stored
as tuples; membership tests are hash lookups on those tuples.  Root lists
are generated by closing the simple roots under the standard chain
construction (q = p - <beta, alpha_v> upward steps) rather than by
type-by-type formulas, and validated against the known root counts.

Bourbaki node numbering throughout: for B the long roots come first
(alpha_n is short), for C alpha_n is the long root, for D the fork is
{alpha_{n-1}, alpha_n} on alpha_{n-2}, for E the branch node alpha_2
attaches to alpha_4, for F4 alpha_1, alpha_2 are long, for G2 alpha_1 is
short.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

Root = Tuple[int, ...]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class RootDataError(ValueError):
    """Invalid simple type, or a root outside the system."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_BOUNDS:
            raise RootDataError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise RootDataError(f"rank {self.rank} invalid for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(st: SimpleType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix C with C[i][j] = <alpha_i, alpha_j^vee> (0-indexed)."""
    n = st.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    fam = st.family
    if fam in ("A", "B", "C"):
        for i in range(n - 2):
            edge(i, i + 1)
        if fam == "A":
            if n >= 2:
                edge(n - 2, n - 1)
        elif fam == "B":
            edge(n - 2, n - 1, -2, -1)  # alpha_n short
        else:
            edge(n - 2, n - 1, -1, -2)  # alpha_n long
    elif fam == "D":
        for i in range(n - 3):
            edge(i, i + 1)
        edge(n - 3, n - 2)
        edge(n - 3, n - 1)
    elif fam == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif fam == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)  # alpha_3, alpha_4 short
        edge(2, 3)
    else:  # G
        edge(0, 1, -1, -3)  # alpha_1 short
    return tuple(tuple(row) for row in c)


def length_squares(st: SimpleType) -> Tuple[int, ...]:
    """Normalized squared lengths of the simple roots (ratios are what matter)."""
    n = st.rank
    if st.family in ("A", "D", "E"):
        return (2,) * n
    if st.family == "B":
        return (2,) * (n - 1) + (1,)
    if st.family == "C":
        return (1,) * (n - 1) + (2,)
    if st.family == "F":
        return (2, 2, 1, 1)
    return (1, 3)  # G2


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: Tuple[Tuple[int, ...], ...]
    lengthsq: Tuple[int, ...]
    pos_roots: Tuple[Root, ...]   # sorted by (height, coeffs)
    roots: Tuple[Root, ...]       # all roots, sorted by (height, coeffs)
    index: Dict[Root, int] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def is_root(self, gamma: Sequence[int]) -> bool:
        return tuple(gamma) in self.index

    def root_index(self, gamma: Sequence[int]) -> int:
        try:
            return self.index[tuple(gamma)]
        except KeyError:
            raise RootDataError(f"{tuple(gamma)} is not a root of {self.type}")

    def simple_root(self, i: int) -> Root:
        """The simple root alpha_i, 1-indexed per Bourbaki."""
        if not 1 <= i <= self.rank:
            raise RootDataError(f"simple root index {i} out of range")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))


def _pairing(cartan: Sequence[Sequence[int]], gamma: Sequence[int], i: int) -> int:
    """<gamma, alpha_i^vee> = sum_j c_j C[j][i] (0-indexed i)."""
    return sum(cj * cartan[j][i] for j, cj in enumerate(gamma) if cj)


@lru_cache(maxsize=None)
def build_root_system(st: SimpleType) -> RootSystem:
    """Generate the full root system by upward chain closure from the base."""
    n = st.rank
    cartan = cartan_matrix(st)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known = set(simples)
    by_height: Dict[int, List[Root]] = {1: list(simples)}
    h = 1
    while by_height.get(h):
        nxt: List[Root] = []
        for beta in by_height[h]:
            for i in range(n):
                # p = chain length downward, q = p - <beta, alpha_i^vee> upward
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if cur[i] < 0 or tuple(cur) not in known:
                        break
                    p += 1
                if p - _pairing(cartan, beta, i) >= 1:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        nxt.append(t)
        h += 1
        if nxt:
            by_height[h] = nxt
    pos = sorted(known, key=lambda r: (sum(r), r))
    expected = _POSITIVE_COUNTS[st.family](n)
    if len(pos) != expected:
        raise RootDataError(
            f"generated {len(pos)} positive roots for {st}, expected {expected}")
    neg = [tuple(-c for c in r) for r in pos]
    allroots = sorted(pos + neg, key=lambda r: (sum(r), r))
    index = {r: k for k, r in enumerate(allroots)}
    return RootSystem(st, cartan, length_squares(st), tuple(pos),
                      tuple(allroots), index)


def height(rs: RootSystem, gamma: Sequence[int]) -> int:
    """Signed coefficient sum of a root."""
    g = tuple(gamma)
    if not rs.is_root(g):
        raise RootDataError(f"{g} is not a root of {rs.type}")
    return sum(g)


def highest_root(rs: RootSystem) -> Root:
    return rs.roots[-1]


def add_roots(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub_roots(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def negate(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def chain_p(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Largest p >= 0 with beta - p*alpha a root."""
    a, b = tuple(alpha), tuple(beta)
    if not (rs.is_root(a) and rs.is_root(b)):
        raise RootDataError("chain_p arguments must be roots")
    if b == a or b == negate(a):
        raise RootDataError("chain_p requires beta != +-alpha")
    p = 0
    cur = b
    while True:
        cur = sub_roots(cur, a)
        if not rs.is_root(cur):
            return p
        p += 1


def norm_sq_doubled(rs: RootSystem, gamma: Sequence[int]) -> int:
    """2*(gamma,gamma) in the normalization of length_squares."""
    # 2*(alpha_i, alpha_j) = C[i][j] * lengthsq[j]
    total = 0
    for i, ci in enumerate(gamma):
        if not ci:
            continue
        for j, cj in enumerate(gamma):
            if cj:
                total += ci * cj * rs.cartan[i][j] * rs.lengthsq[j]
    return total


def coroot_coeffs(rs: RootSystem, alpha: Sequence[int]) -> Tuple[int, ...]:
    """d with alpha^vee = sum_i d_i alpha_i^vee; always integral."""
    a = tuple(alpha)
    if not rs.is_root(a):
        raise RootDataError(f"{a} is not a root of {rs.type}")
    doubled = norm_sq_doubled(rs, a)
    out = []
    for i, ci in enumerate(a):
        num = ci * 2 * rs.lengthsq[i]
        if num % doubled:
            raise RootDataError(f"non-integral coroot coefficient for {a}")
        out.append(num // doubled)
    return tuple(out)


def _rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination on integer rows."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank_ = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank_, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        prow = rows[rank_]
        for r in range(len(rows)):
            if r != rank_ and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x * prow[col] - f * y for x, y in zip(rows[r], prow)]
        rank_ += 1
    return rank_


def is_subsystem_base(rs: RootSystem, base: Iterable[Sequence[int]]) -> bool:
    """Whether the given roots are linearly independent with no difference in Phi."""
    roots = [tuple(r) for r in base]
    for r in roots:
        if not rs.is_root(r):
            return False
    if _rational_rank(roots) != len(roots):
        return False
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            if rs.is_root(sub_roots(a, b)):
                return False
    return True
