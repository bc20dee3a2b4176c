"""Tests for the parabolic data, the embedded lowest-weight table, h0 sums,
and the sigma / duality-exception lookups.

The independent oracle here is the Lie-theoretic characterization of the
lowest weight of each graded piece: the unique level-i root beta such that
beta - alpha_j is not a root for every Levi node j.  The embedded table is
compared against that computation for every supported pair.
"""

from __future__ import annotations

import pytest

from flagcoh.bwb import weyl_dim
from flagcoh.parabolic import (
    MacaulayStatus,
    UnsupportedPairError,
    h0_twisted_cotangent,
    konno_lowest_weights,
    konno_pairs,
    konno_table_rows,
    macaulay_exceptions,
    parabolic_data,
    sigma,
)
from flagcoh.rootsys import (
    ConfigError,
    all_lie_types,
    fundamental_weight,
    root_system,
)

from oracles import binomial, epsilon_weyl_dim


def pd_of(family: str, rank: int, node: int):
    return parabolic_data(root_system(family, rank), node)


def all_pairs(max_rank: int = 8):
    for t in all_lie_types(max_rank):
        rs = root_system(t.family, t.rank)
        for r in range(1, t.rank + 1):
            yield parabolic_data(rs, r)


# ---------------------------------------------------------------------------
# partition, dim Y, Fano index


def test_node_out_of_range() -> None:
    rs = root_system("A", 3)
    with pytest.raises(ConfigError):
        parabolic_data(rs, 0)
    with pytest.raises(ConfigError):
        parabolic_data(rs, 4)


def test_partition_and_purity_all_pairs() -> None:
    for pd in all_pairs(8):
        rs = pd.root_system
        assert len(pd.phi1) + len(pd.phi_n_plus) == len(rs.positive_roots)
        assert pd.dim_y == len(pd.phi_n_plus)
        assert sum(len(v) for v in pd.levels.values()) == pd.dim_y
        assert all(root.sr_coords[pd.node - 1] == 0 for root in pd.phi1)
        for level, roots in pd.levels.items():
            assert level >= 1
            assert all(root.sr_coords[pd.node - 1] == level for root in roots)
        assert pd.fano_index >= 1
        # Fano index bound, with equality exactly for projective space.
        assert pd.fano_index <= pd.dim_y + 1


def test_grassmannian_dim() -> None:
    for l, r in [(4, 2), (5, 2), (5, 3), (7, 4), (1, 1), (8, 8)]:
        assert pd_of("A", l, r).dim_y == r * (l + 1 - r)


def test_classical_dim_closed_forms() -> None:
    for l in range(2, 9):
        for r in range(1, l + 1):
            assert pd_of("B", l, r).dim_y == r * (4 * l - 3 * r + 1) // 2
    for l in range(3, 9):
        for r in range(1, l + 1):
            # 2r(l-r) + r(r+1)/2, also valid at the endpoints r = 1, l
            assert pd_of("C", l, r).dim_y == 2 * r * (l - r) + r * (r + 1) // 2
    for l in range(4, 9):
        for r in range(1, l - 1):
            assert pd_of("D", l, r).dim_y == 2 * r * (l - r) + r * (r - 1) // 2
        for r in (l - 1, l):
            assert pd_of("D", l, r).dim_y == binomial(l, 2)


def test_exceptional_dims_frozen() -> None:
    assert [pd_of("E", 6, r).dim_y for r in range(1, 7)] == [16, 21, 25, 29, 25, 16]
    assert [pd_of("E", 7, r).dim_y for r in range(1, 8)] == [33, 42, 47, 53, 50, 42, 27]
    assert [pd_of("E", 8, r).dim_y for r in range(1, 9)] == [78, 92, 98, 106, 104, 97, 83, 57]
    assert [pd_of("F", 4, r).dim_y for r in range(1, 5)] == [15, 20, 20, 15]
    assert [pd_of("G", 2, r).dim_y for r in range(1, 3)] == [5, 5]


def test_fano_index_spot_values() -> None:
    # projective spaces and Grassmannians: k = l + 1
    for l in range(1, 9):
        for r in range(1, l + 1):
            assert pd_of("A", l, r).fano_index == l + 1
    # quadrics: k = N
    for l in range(2, 9):
        assert pd_of("B", l, 1).fano_index == 2 * l - 1
    for l in range(3, 9):
        assert pd_of("D", l, 1).fano_index == 2 * l - 2
    # Lagrangian Grassmannian LG(l): k = l + 1
    for l in range(3, 9):
        assert pd_of("C", l, l).fano_index == l + 1
    # spinor varieties: k = 2l - 2
    for l in range(4, 9):
        assert pd_of("D", l, l - 1).fano_index == 2 * l - 2
    assert pd_of("F", 4, 4).fano_index == 11
    assert pd_of("E", 7, 7).fano_index == 18
    assert pd_of("E", 6, 1).fano_index == 12
    assert pd_of("G", 2, 2).fano_index == 3


def test_json_round_shape() -> None:
    pd = pd_of("F", 4, 4)
    d = pd.to_json_dict()
    assert d["family"] == "F" and d["rank"] == 4 and d["node"] == 4
    assert d["dim_y"] == 15 and d["k"] == 11
    assert set(d["levels"]) == {"1", "2"}
    assert all(
        isinstance(c, int) for roots in d["levels"].values() for r in roots for c in r
    )
    assert sum(len(v) for v in d["levels"].values()) == 15


# ---------------------------------------------------------------------------
# the embedded lowest-weight table


def lowest_weights_by_levi_action(rs, r):
    """Independent recomputation: level-i roots killed by every Levi lowering."""
    pos = {root.sr_coords for root in rs.positive_roots}
    out: dict[int, list[tuple[int, ...]]] = {}
    for root in rs.positive_roots:
        n = root.sr_coords
        level = n[r - 1]
        if level == 0:
            continue
        lowest = True
        for j in range(rs.rank):
            if j == r - 1:
                continue
            down = tuple(n[k] - (1 if k == j else 0) for k in range(rs.rank))
            if down in pos:
                lowest = False
                break
        if lowest:
            out.setdefault(level, []).append(rs.root_fw[rs.root_index[n]])
    return out


def test_table_matches_levi_lowest_weights_everywhere() -> None:
    """Every embedded entry equals the computed lowest weight of its piece."""
    checked = 0
    for pd in all_pairs(8):
        try:
            entry = konno_lowest_weights(pd)
        except UnsupportedPairError:
            continue
        checked += 1
        truth = lowest_weights_by_levi_action(pd.root_system, pd.node)
        # each graded piece is irreducible: exactly one lowest weight
        assert {lv: len(v) for lv, v in truth.items()} == {lv: 1 for lv in truth}
        assert set(entry.levels) == set(truth)
        for level, w in zip(entry.levels, entry.weights):
            assert w.fw_coords == truth[level][0]
    assert checked == 142


def test_table_levels_cover_grading() -> None:
    for pd in all_pairs(8):
        try:
            entry = konno_lowest_weights(pd)
        except UnsupportedPairError:
            continue
        assert entry.levels == tuple(range(1, pd.depth + 1))
        assert len(entry.weights) == pd.depth


def test_lambda_zero_convention_at_node_two() -> None:
    # the second-level entry lambda_r - lambda_{r-2} degenerates to lambda_2
    for family, l in [("B", 4), ("B", 6), ("D", 5), ("D", 6)]:
        pd = pd_of(family, l, 2)
        entry = konno_lowest_weights(pd)
        assert entry.weights[1] == fundamental_weight(l, 2)


def test_supported_pair_count_rank_8() -> None:
    pairs = konno_pairs(8)
    assert len(pairs) == 142
    seen = {(pd.lie_type.family.value, pd.lie_type.rank, pd.node) for pd in pairs}
    assert len(seen) == 142
    for family, l, r in [("B", 3, 3), ("C", 4, 1), ("D", 4, 4), ("E", 6, 5), ("E", 6, 6), ("G", 2, 1)]:
        assert (family, l, r) not in seen


@pytest.mark.parametrize(
    "family,l,r,canonical",
    [
        ("B", 3, 3, "(D4, node 3)"),
        ("B", 2, 2, "(D3, node 2)"),
        ("C", 4, 1, "(A7, node 1)"),
        ("D", 5, 5, "(D5, node 4)"),
        ("E", 6, 5, "(E6, node 3)"),
        ("E", 6, 6, "(E6, node 1)"),
        ("G", 2, 1, "(B3, node 1)"),
    ],
)
def test_unsupported_pairs_name_canonical_form(family, l, r, canonical) -> None:
    with pytest.raises(UnsupportedPairError) as err:
        konno_lowest_weights(pd_of(family, l, r))
    assert canonical in str(err.value)


def test_grading_depth_frozen_values() -> None:
    # depth equals the marked coefficient of the highest root
    assert pd_of("G", 2, 2).depth == 2  # fixes the arrow convention
    assert pd_of("G", 2, 1).depth == 3
    assert [pd_of("F", 4, r).depth for r in range(1, 5)] == [2, 3, 4, 2]
    assert [pd_of("E", 6, r).depth for r in range(1, 7)] == [1, 2, 2, 3, 2, 1]
    assert [pd_of("E", 7, r).depth for r in range(1, 8)] == [2, 2, 3, 4, 3, 2, 1]
    assert [pd_of("E", 8, r).depth for r in range(1, 9)] == [2, 3, 4, 6, 5, 4, 3, 2]
    for l in range(2, 8):
        assert pd_of("A", l, 2).depth == 1
        assert pd_of("B", l, 1).depth == 1
    for l in range(4, 8):
        assert pd_of("C", l, 2).depth == 2
        assert pd_of("D", l, 2).depth == 2


def test_table_rows_raw_access() -> None:
    rows = konno_table_rows()
    assert all({"family", "min_rank", "node_min", "node_max", "weights"} <= set(r) for r in rows)
    assert any(r["family"] == "G" for r in rows)


# ---------------------------------------------------------------------------
# twisted cotangent sections


def test_h0_f4_node4_breakdown() -> None:
    pd = pd_of("F", 4, 4)
    total, pieces = h0_twisted_cotangent(pd, 2)
    assert total == 325
    assert [(level, dim) for level, _, dim in pieces] == [(1, 273), (2, 52)]
    assert pieces[0][1] == fundamental_weight(4, 3)
    assert pieces[1][1] == fundamental_weight(4, 1)
    assert total > pd.dim_y == 15


def test_h0_quadrics_binomial() -> None:
    # h0(Omega^1(2)) on Q^N equals binomial(N + 2, 2)
    for l in range(2, 11):
        pd = pd_of("B", l, 1)
        n = 2 * l - 1
        assert h0_twisted_cotangent(pd, 2)[0] == binomial(n + 2, 2)
        assert h0_twisted_cotangent(pd, 1)[0] == 0
    for l in range(3, 11):
        pd = pd_of("D", l, 1)
        n = 2 * l - 2
        assert h0_twisted_cotangent(pd, 2)[0] == binomial(n + 2, 2)
        assert h0_twisted_cotangent(pd, 1)[0] == 0


def test_h0_orthogonal_grassmannians_twist_one() -> None:
    for l in range(3, 11):
        for r in range(2, l):
            assert h0_twisted_cotangent(pd_of("B", l, r), 1)[0] == binomial(2 * l + 1, r - 2)
    for l in range(4, 11):
        for r in range(2, l - 1):
            assert h0_twisted_cotangent(pd_of("D", l, r), 1)[0] == binomial(2 * l, r - 2)


def test_h0_lagrangian_grassmannian() -> None:
    # (C_l, node l), a = 2: the single piece shifts to 2*lambda_{l-1}
    for l in range(3, 9):
        pd = pd_of("C", l, l)
        total, pieces = h0_twisted_cotangent(pd, 2)
        lam = tuple(2 if j == l - 2 else 0 for j in range(l))
        assert pieces[0][1] is not None and pieces[0][1].fw_coords == lam
        assert total == weyl_dim(pd.root_system, pieces[0][1])
        assert total > pd.dim_y == l * (l + 1) // 2
    # cross-check the l = 3 value against the epsilon-coordinate oracle
    assert h0_twisted_cotangent(pd_of("C", 3, 3), 2)[0] == epsilon_weyl_dim("C", 3, (0, 2, 0)) == 90


def test_h0_g2_adjoint() -> None:
    pd = pd_of("G", 2, 2)
    assert h0_twisted_cotangent(pd, 1)[0] == 1  # the contact form
    total, pieces = h0_twisted_cotangent(pd, 2)
    assert total == 91
    assert [(level, dim) for level, _, dim in pieces] == [(1, 77), (2, 14)]


def test_h0_adjoint_varieties_twist_one() -> None:
    # adjoint varieties carry exactly a one-dimensional space of twisted
    # 1-forms at a = 1 (the contact structure); the piece sits at top level
    for family, l, r in [("F", 4, 1), ("E", 7, 1), ("E", 8, 8), ("G", 2, 2)]:
        total, pieces = h0_twisted_cotangent(pd_of(family, l, r), 1)
        assert total == 1
        assert pieces[-1][2] == 1


def test_h0_lemma_conformance() -> None:
    """At a = 1 the pieces with node coefficient 2 vanish and those with
    coefficient 1 survive; at a >= 2 nothing vanishes."""
    for pd in konno_pairs(6):
        entry = konno_lowest_weights(pd)
        r = pd.node
        total1, pieces1 = h0_twisted_cotangent(pd, 1)
        for w, (level, mu, dim) in zip(entry.weights, pieces1):
            c = w.fw_coords[r - 1]
            assert c in (1, 2)
            if c == 2:
                assert mu is None and dim == 0
            else:
                assert mu is not None and dim >= 1
        for a in (2, 3):
            total, pieces = h0_twisted_cotangent(pd, a)
            assert all(dim >= 1 for _, _, dim in pieces)
            assert total == sum(dim for _, _, dim in pieces)


def test_h0_rejects_bad_twist() -> None:
    pd = pd_of("A", 3, 1)
    with pytest.raises(ValueError):
        h0_twisted_cotangent(pd, 0)
    with pytest.raises(ValueError):
        h0_twisted_cotangent(pd, -2)


def test_h0_unsupported_pair_propagates() -> None:
    with pytest.raises(UnsupportedPairError):
        h0_twisted_cotangent(pd_of("G", 2, 1), 2)


# ---------------------------------------------------------------------------
# sigma and the duality-pairing exceptions


def test_sigma_spot_values() -> None:
    assert sigma(pd_of("B", 2, 1), 3) == 6
    for d in range(3, 8):
        assert sigma(pd_of("F", 4, 4), d) == 16 * d - 22
        for l in range(1, 7):
            assert sigma(pd_of("A", l, 1), d) == (l + 1) * (d - 2)
    assert sigma(pd_of("D", 3, 2), 3) == 4


def test_sigma_rejects_low_degree() -> None:
    pd = pd_of("B", 2, 1)
    with pytest.raises(ValueError):
        sigma(pd, 2)
    with pytest.raises(ValueError):
        sigma(pd, 0)


def test_sigma_positive_whenever_bound_holds() -> None:
    for pd in all_pairs(8):
        if pd.dim_y >= 2:
            assert sigma(pd, 3) > 0


def test_macaulay_q3_surjectivity_precedence() -> None:
    q3 = pd_of("B", 2, 1)
    assert macaulay_exceptions(q3, 3, 3) is MacaulayStatus.SURJECTIVITY_FAILS
    assert macaulay_exceptions(q3, 3, 2) is MacaulayStatus.INJECTIVITY_FAILS
    assert macaulay_exceptions(q3, 3, 1) is MacaulayStatus.INJECTIVITY_FAILS  # (d, d-2)
    assert macaulay_exceptions(q3, 4, 4) is MacaulayStatus.INJECTIVITY_FAILS
    assert macaulay_exceptions(q3, 5, 2) is MacaulayStatus.NO_EXCEPTION


def test_macaulay_quadric_family() -> None:
    for pd in (pd_of("B", 4, 1), pd_of("D", 5, 1)):
        for d in range(3, 9):
            assert macaulay_exceptions(pd, d, d - 2) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 3, 2) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 3, 3) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 4, 4) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 5, 4) is MacaulayStatus.NO_EXCEPTION


def test_macaulay_isotropic_rows() -> None:
    for pd in (pd_of("C", 3, 2), pd_of("F", 4, 4)):
        for d in range(3, 9):
            assert macaulay_exceptions(pd, d, d - 1) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 3, 3) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 4, 2) is MacaulayStatus.NO_EXCEPTION
    for l in (4, 6):
        pd = pd_of("C", l, 2)
        for d in range(3, 9):
            assert macaulay_exceptions(pd, d, d - 1) is MacaulayStatus.INJECTIVITY_FAILS
        # unlike C3, (3,3) = (d, d) is not listed for higher rank
        assert macaulay_exceptions(pd, 4, 4) is MacaulayStatus.NO_EXCEPTION


def test_macaulay_veronese_rows() -> None:
    for pd in (pd_of("A", 5, 2), pd_of("E", 6, 1)):
        assert macaulay_exceptions(pd, 3, 3) is MacaulayStatus.INJECTIVITY_FAILS
        assert macaulay_exceptions(pd, 4, 3) is MacaulayStatus.NO_EXCEPTION
        assert macaulay_exceptions(pd, 3, 2) is MacaulayStatus.NO_EXCEPTION


def test_macaulay_generic_no_exception() -> None:
    assert macaulay_exceptions(pd_of("A", 4, 2), 4, 2) is MacaulayStatus.NO_EXCEPTION
    assert macaulay_exceptions(pd_of("E", 8, 4), 3, 3) is MacaulayStatus.NO_EXCEPTION
    assert macaulay_exceptions(pd_of("G", 2, 2), 5, 4) is MacaulayStatus.NO_EXCEPTION
    # below the standing degree hypothesis nothing is reported
    assert macaulay_exceptions(pd_of("B", 4, 1), 2, 0) is MacaulayStatus.NO_EXCEPTION
