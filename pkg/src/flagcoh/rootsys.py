"""Exact root-system arithmetic for the simple Lie types.

Conventions, fixed once for the whole package:

* Bourbaki node numbering for all families.  In particular the E-series
  branch node is node 2 (attached to node 4), B_l has the short root at
  node l, C_l has the long root at node l, F4 has long roots at nodes 1, 2
  and short roots at nodes 3, 4, and G2 has the short root at node 1.
* The Cartan matrix is a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i).
* The invariant form is normalized so long roots have squared length 2;
  the symmetrizer d_i = (alpha_i, alpha_i) / 2 then lies in {1, 1/2, 1/3}.
* Roots are stored by integer coordinates in the simple-root basis
  (``sr_coords``), weights by integer coordinates in the fundamental-weight
  basis (``fw_coords``).  The two bases are related by m = A n, that is
  m_j = sum_i a_ji n_i.

Everything is exact: integers and fractions only, no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence


class ConfigError(ValueError):
    """Invalid family/rank/node combination."""


class Family(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"

    def __str__(self) -> str:
        return self.value


# Inclusive rank bounds per family (D3 is allowed; C2 and D2 are not,
# they duplicate B2 and A1 x A1).
_RANK_BOUNDS = {
    Family.A: (1, None),
    Family.B: (2, None),
    Family.C: (3, None),
    Family.D: (3, None),
    Family.E: (6, 8),
    Family.F: (4, 4),
    Family.G: (2, 2),
}


@dataclass(frozen=True)
class LieType:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(str(self.family).upper()))
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ConfigError(f"rank {self.rank} out of bounds for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """Element of the root lattice; integer coefficients n_i over the simple roots."""

    sr_coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sr_coords", tuple(int(c) for c in self.sr_coords))

    @property
    def height(self) -> int:
        return sum(self.sr_coords)


@dataclass(frozen=True)
class Weight:
    """Element of the weight lattice; integer coefficients m_i over the fundamental weights."""

    fw_coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "fw_coords", tuple(int(c) for c in self.fw_coords))

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.fw_coords) != len(other.fw_coords):
            raise ValueError("weight length mismatch")
        return Weight(tuple(a + b for a, b in zip(self.fw_coords, other.fw_coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        if len(self.fw_coords) != len(other.fw_coords):
            raise ValueError("weight length mismatch")
        return Weight(tuple(a - b for a, b in zip(self.fw_coords, other.fw_coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fw_coords))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.fw_coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fw_coords)


def zero_weight(rank: int) -> Weight:
    return Weight((0,) * rank)


def fundamental_weight(rank: int, i: int) -> Weight:
    """lambda_i, 1-based; i = 0 gives the zero weight (lambda_0 := 0 convention)."""
    if i == 0:
        return zero_weight(rank)
    if not 1 <= i <= rank:
        raise ConfigError(f"node {i} out of range 1..{rank}")
    return Weight(tuple(1 if j == i - 1 else 0 for j in range(rank)))


def _diagram(t: LieType) -> tuple[list[Fraction], dict[tuple[int, int], Fraction]]:
    """Symmetrizer d_i and off-diagonal inner products (alpha_i, alpha_j), 0-based."""
    l = t.rank
    one, half, third = Fraction(1), Fraction(1, 2), Fraction(1, 3)
    d: list[Fraction]
    edges: dict[tuple[int, int], Fraction] = {}
    chain = [(i, i + 1) for i in range(l - 1)]
    if t.family is Family.A:
        d = [one] * l
        for e in chain:
            edges[e] = -one
    elif t.family is Family.B:
        d = [one] * (l - 1) + [half]
        for e in chain:
            edges[e] = -one
    elif t.family is Family.C:
        d = [half] * (l - 1) + [one]
        for e in chain[:-1]:
            edges[e] = -half
        edges[chain[-1]] = -one
    elif t.family is Family.D:
        d = [one] * l
        for e in chain[:-1]:
            edges[e] = -one
        edges[(l - 3, l - 1)] = -one
    elif t.family is Family.E:
        d = [one] * l
        for e in [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, l - 1)]:
            edges[e] = -one
    elif t.family is Family.F:
        d = [one, one, half, half]
        edges[(0, 1)] = -one
        edges[(1, 2)] = -one
        edges[(2, 3)] = -half
    else:  # G2
        d = [third, one]
        edges[(0, 1)] = -one
    return d, edges


def _cartan_matrix(t: LieType) -> tuple[tuple[tuple[int, ...], ...], tuple[Fraction, ...]]:
    d, edges = _diagram(t)
    l = t.rank
    s = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        s[i][i] = 2 * d[i]
    for (i, j), v in edges.items():
        s[i][j] = v
        s[j][i] = v
    rows = []
    for i in range(l):
        row = []
        for j in range(l):
            a = s[i][j] / d[i]
            assert a.denominator == 1
            row.append(int(a))
        rows.append(tuple(row))
    cartan = tuple(rows)
    for i in range(l):
        assert cartan[i][i] == 2
        for j in range(l):
            if i != j:
                assert cartan[i][j] in (0, -1, -2, -3)
            assert d[i] * cartan[i][j] == d[j] * cartan[j][i]
    return cartan, tuple(d)


def _invert(rows: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a small integer matrix by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _positive_root_closure(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Enumerate positive roots from the simple ones by root-string closure.

    For a root beta and a simple root alpha_i, the alpha_i-string through
    beta runs from beta - p alpha_i to beta + q alpha_i with
    p - q = <beta, alpha_i^vee>, so beta + alpha_i is a root iff
    p - <beta, alpha_i^vee> > 0.  Processing by height guarantees the
    downward part of every string is already known.
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - sum(cartan[i][j] * beta[j] for j in range(rank))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up_t = tuple(up)
                    if up_t not in found:
                        found.add(up_t)
                        nxt.append(up_t)
        frontier = nxt
    return sorted(found, key=lambda n: (sum(n), n))


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data with precomputed pairing tables.

    ``coroots[k]`` holds the integer coordinates c_j of the k-th positive
    root's coroot over the simple coroots, so the copairing of a weight m
    with that root is the plain integer dot product sum_j m_j c_j.
    """

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]
    weyl_vector: Weight
    inverse_cartan: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    root_fw: tuple[tuple[int, ...], ...] = field(repr=False)
    coroots: tuple[tuple[int, ...], ...] = field(repr=False)
    half_lengths: tuple[Fraction, ...] = field(repr=False)
    root_index: dict[tuple[int, ...], int] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __hash__(self) -> int:
        return hash((self.lie_type,))


def build_root_system(t: LieType) -> RootSystem:
    cartan, d = _cartan_matrix(t)
    rank = t.rank
    coords = _positive_root_closure(cartan)
    roots = tuple(Root(n) for n in coords)
    fw_list = []
    coroot_list = []
    dalpha_list = []
    for n in coords:
        m = tuple(sum(cartan[j][i] * n[i] for i in range(rank)) for j in range(rank))
        length_sq = sum(m[j] * n[j] * d[j] for j in range(rank))
        dalpha = length_sq / 2
        coroot = []
        for j in range(rank):
            c = n[j] * d[j] / dalpha
            assert c.denominator == 1  # coroot coordinates are integers
            coroot.append(int(c))
        fw_list.append(m)
        coroot_list.append(tuple(coroot))
        dalpha_list.append(dalpha)
    return RootSystem(
        lie_type=t,
        cartan=cartan,
        symmetrizer=d,
        positive_roots=roots,
        weyl_vector=Weight((1,) * rank),
        inverse_cartan=_invert(cartan),
        root_fw=tuple(fw_list),
        coroots=tuple(coroot_list),
        half_lengths=tuple(dalpha_list),
        root_index={n: k for k, n in enumerate(coords)},
    )


_CACHE: dict[LieType, RootSystem] = {}


def root_system(family: Family | str, rank: int) -> RootSystem:
    """Cached constructor; root systems are immutable so sharing is safe."""
    t = LieType(family if isinstance(family, Family) else Family(str(family).upper()), rank)
    rs = _CACHE.get(t)
    if rs is None:
        rs = _CACHE[t] = build_root_system(t)
    return rs


def _check_len(rs: RootSystem, coords: Sequence[int]) -> None:
    if len(coords) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(coords)}")


def pairing(rs: RootSystem, w: Weight, r: Root) -> Fraction:
    """Invariant form (w, alpha) = sum_j n_j m_j d_j."""
    _check_len(rs, w.fw_coords)
    _check_len(rs, r.sr_coords)
    return sum(
        (Fraction(m * n) * d for m, n, d in zip(w.fw_coords, r.sr_coords, rs.symmetrizer)),
        Fraction(0),
    )


def copairing(rs: RootSystem, w: Weight, r: Root) -> int:
    """<w, alpha> = 2 (w, alpha) / (alpha, alpha), an integer on the weight lattice."""
    _check_len(rs, w.fw_coords)
    _check_len(rs, r.sr_coords)
    idx = rs.root_index.get(r.sr_coords)
    if idx is not None:
        return sum(m * c for m, c in zip(w.fw_coords, rs.coroots[idx]))
    length_sq = pairing(rs, root_to_weight_coords(rs, r), r)
    if length_sq == 0:
        raise ValueError("copairing undefined for the zero vector")
    val = 2 * pairing(rs, w, r) / length_sq
    assert val.denominator == 1  # integral on integer fw coordinates
    return int(val)


def root_to_weight_coords(rs: RootSystem, r: Root) -> Weight:
    """m = A n, with m_j = sum_i a_ji n_i."""
    _check_len(rs, r.sr_coords)
    n = r.sr_coords
    return Weight(tuple(sum(rs.cartan[j][i] * n[i] for i in range(rs.rank)) for j in range(rs.rank)))


def weight_to_root_coords(rs: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    """Exact rational coordinates of w in the simple-root basis (A^-1 m)."""
    _check_len(rs, w.fw_coords)
    m = w.fw_coords
    return tuple(
        sum((rs.inverse_cartan[i][j] * m[j] for j in range(rs.rank)), Fraction(0))
        for i in range(rs.rank)
    )


def simple_reflection(rs: RootSystem, i: int, w: Weight) -> Weight:
    """sigma_i(w) = w - <w, alpha_i^vee> alpha_i, with i 1-based."""
    if not 1 <= i <= rs.rank:
        raise ConfigError(f"node {i} out of range 1..{rs.rank}")
    _check_len(rs, w.fw_coords)
    k = i - 1
    m = w.fw_coords
    c = m[k]
    return Weight(tuple(m[j] - c * rs.cartan[j][k] for j in range(rs.rank)))


def simple_root(rs: RootSystem, i: int) -> Root:
    """alpha_i, 1-based."""
    if not 1 <= i <= rs.rank:
        raise ConfigError(f"node {i} out of range 1..{rs.rank}")
    return Root(tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))


def all_lie_types(max_rank: int) -> list[LieType]:
    """Every valid LieType with rank <= max_rank, ordered by (family, rank)."""
    out: list[LieType] = []
    for fam in Family:
        lo, hi = _RANK_BOUNDS[fam]
        top = max_rank if hi is None else min(hi, max_rank)
        for l in range(lo, top + 1):
            out.append(LieType(fam, l))
    return out
