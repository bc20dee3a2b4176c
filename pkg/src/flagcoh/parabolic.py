"""Picard-rank-one parabolic data for a pair (g, alpha_r).

Deleting node r from the Dynkin diagram of g defines a maximal parabolic
subgroup P and a homogeneous variety Y = G/P with Pic(Y) generated by the
ample line bundle O(1) attached to lambda_r.  This module computes the
induced structures in exact arithmetic:

* the partition of the positive roots by the coefficient n_r of alpha_r
  (Levi part n_r = 0, nilradical n_r > 0) and the grading of the
  nilradical by that coefficient;
* dim Y and the Fano index k(Y), read off from the sum of the nilradical
  roots, which is a multiple of lambda_r exactly;
* the embedded table of lowest weights of the graded pieces of the
  cotangent module, instantiated per pair and validated against the root
  system before use;
* h^0(Y, Omega^1_Y(a)) for a >= 1 as the sum of the Borel-Weil-Bott
  dimensions of the graded pieces;
* sigma(d) = (dim Y + 1) d - 2 k(Y) and the static lookup of the pairs
  (d, a) where the duality pairing of the pseudo-Jacobi ring fails to be
  injective or surjective.

Pairs omitted from the embedded table because they are isomorphic to a
listed pair (for instance (D_l, node l) versus (D_l, node l-1)) are
refused with an error naming the canonical form; remapping silently would
hide node-numbering mistakes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Optional

from .bwb import bwb_cohomology
from .rootsys import (
    ConfigError,
    Family,
    LieType,
    Root,
    RootSystem,
    Weight,
    all_lie_types,
    fundamental_weight,
    root_system,
    root_to_weight_coords,
    simple_root,
    zero_weight,
)

__all__ = [
    "KonnoEntry",
    "MacaulayStatus",
    "ParabolicData",
    "UnsupportedPairError",
    "h0_twisted_cotangent",
    "konno_lowest_weights",
    "konno_pairs",
    "konno_table_rows",
    "macaulay_exceptions",
    "parabolic_data",
    "sigma",
]


class UnsupportedPairError(LookupError):
    """Raised for pairs (g, alpha_r) omitted from the lowest-weight table."""


class MacaulayStatus(Enum):
    """Outcome of the duality-pairing exception lookup for a pair (d, a)."""

    NO_EXCEPTION = "no-exception"
    INJECTIVITY_FAILS = "injectivity-fails"
    SURJECTIVITY_FAILS = "surjectivity-fails"


@dataclass(frozen=True)
class ParabolicData:
    """Root-theoretic data of Y = G/P for the maximal parabolic at ``node``.

    ``phi1`` holds the positive roots of the Levi factor (coefficient of
    alpha_r equal to zero); ``phi_n_plus`` the roots of the nilradical,
    grouped by that coefficient in ``levels``.  ``dim_y`` is the number of
    nilradical roots and ``fano_index`` the integer k with K_Y = O(-k).
    """

    lie_type: LieType
    node: int
    phi1: tuple[Root, ...]
    phi_n_plus: tuple[Root, ...]
    levels: dict[int, tuple[Root, ...]] = field(repr=False)
    dim_y: int
    fano_index: int
    root_system: RootSystem = field(repr=False, compare=False)

    def __hash__(self) -> int:
        return hash((self.lie_type, self.node))

    @property
    def depth(self) -> int:
        """Largest grading level, i.e. the coefficient n_r of the highest root."""
        return max(self.levels)

    def to_json_dict(self) -> dict:
        return {
            "family": self.lie_type.family.value,
            "rank": self.lie_type.rank,
            "node": self.node,
            "dim_y": self.dim_y,
            "k": self.fano_index,
            "levels": {
                str(i): [list(r.sr_coords) for r in self.levels[i]]
                for i in sorted(self.levels)
            },
        }


@dataclass(frozen=True)
class KonnoEntry:
    """Instantiated table row: lowest weights of the graded cotangent pieces.

    ``weights[i]`` is the lowest weight of the piece at ``levels[i]``; the
    levels are exactly 1..depth in increasing order, one weight per level.
    """

    pair: tuple[LieType, int]
    weights: tuple[Weight, ...]
    levels: tuple[int, ...]


def parabolic_data(rs: RootSystem, r: int) -> ParabolicData:
    """Partition the positive roots at node ``r`` and extract dim Y and k(Y)."""
    rank = rs.rank
    if not 1 <= r <= rank:
        raise ConfigError(f"node {r} out of range 1..{rank}")
    phi1: list[Root] = []
    nilrad: list[Root] = []
    levels: dict[int, list[Root]] = {}
    for root in rs.positive_roots:
        n_r = root.sr_coords[r - 1]
        if n_r == 0:
            phi1.append(root)
        else:
            nilrad.append(root)
            levels.setdefault(n_r, []).append(root)
    assert len(phi1) + len(nilrad) == len(rs.positive_roots)
    canonical = [0] * rank
    for root in nilrad:
        m = rs.root_fw[rs.root_index[root.sr_coords]]
        for j in range(rank):
            canonical[j] += m[j]
    for j in range(rank):
        if j != r - 1:
            assert canonical[j] == 0, (
                f"sum of nilradical roots is not a multiple of lambda_{r}: "
                f"coordinate {j + 1} is {canonical[j]}"
            )
    k = canonical[r - 1]
    assert k > 0
    return ParabolicData(
        lie_type=rs.lie_type,
        node=r,
        phi1=tuple(phi1),
        phi_n_plus=tuple(nilrad),
        levels={i: tuple(v) for i, v in sorted(levels.items())},
        dim_y=len(nilrad),
        fano_index=k,
        root_system=rs,
    )


_TERM_RE = re.compile(r"([+-]?)(?:(\d+)\*)?(alpha|lambda)\[(r(?:-[12])?|\d+)\]")


def _instantiate(expr: str, rs: RootSystem, r: int) -> Weight:
    """Evaluate a symbolic weight expression at node ``r`` (lambda_0 = 0)."""
    text = expr.replace(" ", "")
    total = zero_weight(rs.rank)
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None:
            raise AssertionError(f"malformed weight expression {expr!r}")
        sign_s, coeff_s, kind, idx_s = m.groups()
        if idx_s == "r":
            idx = r
        elif idx_s == "r-1":
            idx = r - 1
        elif idx_s == "r-2":
            idx = r - 2
        else:
            idx = int(idx_s)
        if kind == "lambda":
            w = fundamental_weight(rs.rank, idx)
        else:
            w = root_to_weight_coords(rs, simple_root(rs, idx))
        coeff = int(coeff_s) if coeff_s else 1
        if sign_s == "-":
            coeff = -coeff
        total = total + coeff * w
        pos = m.end()
    return total


_TABLE_ROWS: Optional[list[dict]] = None


def konno_table_rows() -> list[dict]:
    """Raw rows of the embedded lowest-weight table (parsed once, cached)."""
    global _TABLE_ROWS
    if _TABLE_ROWS is None:
        text = resources.files("flagcoh").joinpath("data/konno_table.json").read_text()
        payload = json.loads(text)
        assert payload["version"] == 1
        _TABLE_ROWS = payload["rows"]
    return _TABLE_ROWS


def _resolve_node_expr(value, rank: int) -> int:
    if isinstance(value, int):
        return value
    if value == "l":
        return rank
    if value == "l-1":
        return rank - 1
    if value == "l-2":
        return rank - 2
    raise AssertionError(f"bad node bound {value!r} in embedded table")


def _find_row(t: LieType, r: int) -> Optional[dict]:
    for row in konno_table_rows():
        if row["family"] != t.family.value:
            continue
        if t.rank < row["min_rank"]:
            continue
        if "max_rank" in row and t.rank > row["max_rank"]:
            continue
        lo = _resolve_node_expr(row["node_min"], t.rank)
        hi = _resolve_node_expr(row["node_max"], t.rank)
        if lo <= r <= hi:
            return row
    return None


def _canonical_form(t: LieType, r: int) -> Optional[tuple[str, int, int]]:
    """The listed pair isomorphic to an omitted (t, r), as (family, rank, node)."""
    f, l = t.family, t.rank
    if f is Family.B and r == l:
        return ("D", l + 1, l)
    if f is Family.C and r == 1:
        return ("A", 2 * l - 1, 1)
    if f is Family.D and r == l:
        return ("D", l, l - 1)
    if f is Family.E and l == 6 and r == 5:
        return ("E", 6, 3)
    if f is Family.E and l == 6 and r == 6:
        return ("E", 6, 1)
    if f is Family.G and r == 1:
        return ("B", 3, 1)
    return None


def konno_lowest_weights(pd: ParabolicData) -> KonnoEntry:
    """Instantiate and validate the table row for ``pd``.

    Every instantiated weight must be a positive root of the nilradical,
    its coefficient at the marked node is its grading level, and the
    levels must cover 1..depth exactly once.  Raises UnsupportedPairError
    for pairs the table omits in favour of an isomorphic listed pair.
    """
    t, r = pd.lie_type, pd.node
    row = _find_row(t, r)
    if row is None:
        name = f"{t.family.value}{t.rank}"
        target = _canonical_form(t, r)
        if target is not None:
            tf, tl, tr = target
            raise UnsupportedPairError(
                f"pair ({name}, node {r}) is not in the lowest-weight table; "
                f"it is isomorphic to the listed pair ({tf}{tl}, node {tr})"
            )
        raise UnsupportedPairError(
            f"pair ({name}, node {r}) is not in the lowest-weight table"
        )
    rs = pd.root_system
    lam_r = fundamental_weight(rs.rank, r)
    by_level: dict[int, Weight] = {}
    for expr in row["weights"]:
        w = _instantiate(expr, rs, r)
        # The lowest weight of a graded piece of the nilradical is itself a
        # root: check it against the enumerated root set.
        coords = _weight_to_int_root_coords(rs, w)
        idx = rs.root_index.get(tuple(coords))
        assert idx is not None, f"{expr!r} at ({t.family.value}{t.rank}, {r}) is not a positive root"
        level = coords[r - 1]
        assert level >= 1, f"{expr!r} lies in the Levi part, not the nilradical"
        assert level not in by_level, f"two table weights share level {level}"
        # Shape check: the weight has coefficient 1 or 2 at the marked node
        # and c*lambda_r - w is dominant and vanishes there, the form the
        # twisted classification relies on.
        c = w.fw_coords[r - 1]
        assert c in (1, 2), f"{expr!r} has unexpected node coefficient {c}"
        prime = c * lam_r - w
        assert prime.is_dominant() and prime.fw_coords[r - 1] == 0
        by_level[level] = w
    depth = pd.depth
    assert sorted(by_level) == list(range(1, depth + 1)), (
        f"table levels {sorted(by_level)} do not cover 1..{depth} "
        f"for ({t.family.value}{t.rank}, node {r})"
    )
    levels = tuple(range(1, depth + 1))
    return KonnoEntry(
        pair=(t, r),
        weights=tuple(by_level[i] for i in levels),
        levels=levels,
    )


def _weight_to_int_root_coords(rs: RootSystem, w: Weight) -> list[int]:
    out: list[int] = []
    for i in range(rs.rank):
        value = sum(rs.inverse_cartan[i][j] * w.fw_coords[j] for j in range(rs.rank))
        assert value.denominator == 1, "table weight is not in the root lattice"
        out.append(int(value))
    return out


def h0_twisted_cotangent(pd: ParabolicData, a: int) -> tuple[int, tuple[tuple[int, Optional[Weight], int], ...]]:
    """h^0(Y, Omega^1_Y(a)) with its per-level breakdown, for a >= 1.

    For each graded piece with lowest weight w the sections of the twisted
    piece are the Borel-Weil-Bott cohomology of the weight a*lambda_r - w;
    pieces whose shifted weight is singular contribute 0 and are reported
    with a ``None`` representative.  A piece concentrated in positive
    degree would contradict the classification of these twists and is an
    internal error.
    """
    if a < 1:
        raise ValueError(f"twist a must be >= 1, got {a}")
    entry = konno_lowest_weights(pd)
    rs = pd.root_system
    lam_r = fundamental_weight(rs.rank, pd.node)
    pieces: list[tuple[int, Optional[Weight], int]] = []
    total = 0
    for level, w in zip(entry.levels, entry.weights):
        table = bwb_cohomology(rs, a * lam_r - w)
        if table.vanishes:
            pieces.append((level, None, 0))
            continue
        assert table.degree == 0, (
            f"piece at level {level} concentrated in degree {table.degree}; "
            "twisted cotangent pieces never sit in positive degree"
        )
        pieces.append((level, table.dominant_weight, table.dimension))
        total += table.dimension
    return total, tuple(pieces)


def sigma(pd: ParabolicData, d: int) -> int:
    """sigma = (N + 1) d - 2 k(Y) with N = dim Y, for hypersurface degree d >= 3."""
    if d < 3:
        raise ValueError(f"hypersurface degree d must be >= 3, got {d}")
    return (pd.dim_y + 1) * d - 2 * pd.fano_index


def _is_quadric(pd: ParabolicData) -> bool:
    f = pd.lie_type.family
    return pd.node == 1 and f in (Family.B, Family.D)


def macaulay_exceptions(pd: ParabolicData, d: int, a: int) -> MacaulayStatus:
    """Look up (Y, d, a) in the static exception table of the duality pairing.

    The generic statement is that multiplication into degree sigma induces
    a pairing R_a x R_{sigma-a} -> R_sigma which is injective on the left
    factor and surjective onto the dual; the finitely many exceptions are
    recorded here verbatim.  Surjectivity fails only for the
    three-dimensional quadric with (d, a) = (3, 3), and that case is
    reported as such rather than as its simultaneous injectivity failure.
    Queries with d < 3 are outside the standing degree hypothesis and
    report NO_EXCEPTION.
    """
    if d < 3:
        return MacaulayStatus.NO_EXCEPTION
    f, l, r = pd.lie_type.family, pd.lie_type.rank, pd.node
    if f is Family.B and l == 2 and r == 1 and (d, a) == (3, 3):
        return MacaulayStatus.SURJECTIVITY_FAILS
    if _is_quadric(pd):
        if a == d - 2 or (d, a) in ((3, 2), (3, 3), (4, 4)):
            return MacaulayStatus.INJECTIVITY_FAILS
    if (f, l, r) in ((Family.A, 5, 2), (Family.E, 6, 1)):
        if (d, a) == (3, 3):
            return MacaulayStatus.INJECTIVITY_FAILS
    if (f, l, r) in ((Family.C, 3, 2), (Family.F, 4, 4)):
        if a == d - 1 or (d, a) == (3, 3):
            return MacaulayStatus.INJECTIVITY_FAILS
    if f is Family.C and l >= 4 and r == 2:
        if a == d - 1:
            return MacaulayStatus.INJECTIVITY_FAILS
    return MacaulayStatus.NO_EXCEPTION


def konno_pairs(max_rank: int) -> list[ParabolicData]:
    """All pairs with a table row, for every type up to ``max_rank``.

    Pairs the table omits as isomorphic duplicates are skipped, so each
    isomorphism class appears exactly once.
    """
    out: list[ParabolicData] = []
    for t in all_lie_types(max_rank):
        rs = root_system(t.family, t.rank)
        for r in range(1, t.rank + 1):
            pd = parabolic_data(rs, r)
            try:
                konno_lowest_weights(pd)
            except UnsupportedPairError:
                continue
            out.append(pd)
    return out
