"""Verification sweeps over the supported pairs (g, alpha_r).

Two sweeps are provided.  ``check_theorem_lungo`` computes
h^0(Y, Omega^1_Y(2)) for every supported pair with dim Y >= 3 up to a rank
cap and checks h0 >= dim Y, together with golden subcases where the value
has a closed form (quadric binomial, the restricted-product equality on
Lagrangian Grassmannians, the exact value 325 for (F4, node 4)).
``check_lemma_studiopesi`` replays the classification of the twisted
lowest weights: for twist a = 1 the pieces with node coefficient 2 must be
singular and those with coefficient 1 regular of index 0; for a >= 2
everything is regular of index 0.

Failures never raise: each case carries a passed flag, its witness
breakdown, and annotations; reports are deterministic (fixed ordering, no
timestamps) so identical runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import __version__
from .bwb import classify_cotangent_twist_weights, partial_weyl_product
from .parabolic import (
    ParabolicData,
    h0_twisted_cotangent,
    konno_lowest_weights,
    konno_pairs,
)
from .rootsys import Family, fundamental_weight

__all__ = [
    "CaseResult",
    "Report",
    "check_lemma_studiopesi",
    "check_theorem_lungo",
    "emit_report",
]

# Pairs excluded from the degree-3 statement of the main theorem: the
# three-dimensional quadric and the three-dimensional spinor variety.
_DEGREE_THREE_EXCEPTIONS = {("B", 2, 1), ("D", 3, 2)}


@dataclass(frozen=True)
class CaseResult:
    """One sweep case; ``witness`` holds the per-level evidence dicts."""

    family: str
    rank: int
    node: int
    twist: int
    h0: int
    dim_y: int
    passed: bool
    witness: tuple[dict, ...] = ()
    annotations: tuple[str, ...] = ()

    def sort_key(self) -> tuple[str, int, int, int]:
        return (self.family, self.rank, self.node, self.twist)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "node": self.node,
            "twist": self.twist,
            "h0": str(self.h0),
            "dim_y": self.dim_y,
            "passed": self.passed,
            "witness": [dict(w) for w in self.witness],
            "annotations": list(self.annotations),
        }


@dataclass(frozen=True)
class Report:
    """Sweep output: parameters, ordered cases, and summary counts."""

    sweep: str
    version: str
    params: dict = field(repr=False)
    cases: tuple[CaseResult, ...] = ()

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.cases if c.passed)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json_dict(self) -> dict:
        return {
            "sweep": self.sweep,
            "version": self.version,
            "params": dict(self.params),
            "cases": [c.to_json_dict() for c in self.cases],
            "summary": self.summary,
        }


def _run_cases(
    inputs: Sequence,
    worker: Callable,
    jobs: int,
) -> list[CaseResult]:
    if jobs > 1 and len(inputs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, inputs))
    else:
        results = [worker(item) for item in inputs]
    results.sort(key=CaseResult.sort_key)
    return results


def _base_annotations(pd: ParabolicData) -> list[str]:
    key = (pd.lie_type.family.value, pd.lie_type.rank, pd.node)
    return ["degree-3 exception"] if key in _DEGREE_THREE_EXCEPTIONS else []


def _golden_checks(pd: ParabolicData, total: int, pieces) -> tuple[bool, list[str]]:
    """Closed-form subcases of the twist-2 sweep; returns (ok, annotations)."""
    f, l, r = pd.lie_type.family, pd.lie_type.rank, pd.node
    rs = pd.root_system
    notes: list[str] = []
    ok = True
    if r == 1 and f in (Family.B, Family.D):
        n = pd.dim_y
        expected = (n + 2) * (n + 1) // 2
        notes.append("golden: quadric binomial")
        if total != expected:
            ok = False
            notes.append(f"golden value mismatch: h0 {total} != {expected}")
    elif f is Family.C and r == l:
        # The proof bounds h0 from below by the Weyl product restricted to
        # the Levi roots, which equals dim Y = l(l+1)/2 exactly.
        lam = 2 * fundamental_weight(l, l - 1)
        levi = [root for root in rs.positive_roots if root.sr_coords[l - 1] == 0]
        restricted = partial_weyl_product(rs, lam, levi)
        notes.append("golden: restricted product equality")
        if restricted != pd.dim_y or pd.dim_y != l * (l + 1) // 2:
            ok = False
            notes.append(f"golden value mismatch: restricted product {restricted} != {pd.dim_y}")
    elif (f, l, r) == (Family.F, 4, 4):
        notes.append("golden: exact value 325")
        if total != 325 or [d for _, _, d in pieces] != [273, 52]:
            ok = False
            notes.append(f"golden value mismatch: h0 {total}, breakdown {[d for _, _, d in pieces]}")
    return ok, notes


def _lungo_case(pd: ParabolicData) -> CaseResult:
    t = pd.lie_type
    annotations = _base_annotations(pd)
    try:
        total, pieces = h0_twisted_cotangent(pd, 2)
        witness = tuple(
            {
                "level": level,
                "fw_coords": list(mu.fw_coords) if mu is not None else None,
                "dim": str(dim),
            }
            for level, mu, dim in pieces
        )
        golden_ok, notes = _golden_checks(pd, total, pieces)
        annotations.extend(notes)
        passed = total >= pd.dim_y and golden_ok
    except Exception as exc:  # failures become report entries, never aborts
        total, witness, passed = 0, (), False
        annotations.append(f"error: {exc}")
    return CaseResult(
        family=t.family.value,
        rank=t.rank,
        node=pd.node,
        twist=2,
        h0=total,
        dim_y=pd.dim_y,
        passed=passed,
        witness=witness,
        annotations=tuple(annotations),
    )


def check_theorem_lungo(max_rank: int = 8, jobs: int = 1) -> Report:
    """Twist-2 section sweep: h0(Y, Omega^1_Y(2)) >= dim Y over all pairs.

    Covers every supported pair with rank <= max_rank and dim Y >= 3;
    equality counts as a pass.  Golden subcases additionally pin the exact
    values where a closed form exists.
    """
    if max_rank < 2:
        raise ValueError(f"max_rank must be >= 2, got {max_rank}")
    pairs = [pd for pd in konno_pairs(max_rank) if pd.dim_y >= 3]
    cases = _run_cases(pairs, _lungo_case, jobs)
    return Report(
        sweep="lungo",
        version=__version__,
        params={"max_rank": max_rank, "twist": 2, "min_dim_y": 3},
        cases=tuple(cases),
    )


def _classification_label(index: Optional[int]) -> str:
    return "singular" if index is None else f"regular:{index}"


def _studiopesi_case(item: tuple[ParabolicData, int]) -> CaseResult:
    pd, a = item
    t = pd.lie_type
    r = pd.node
    rs = pd.root_system
    annotations = _base_annotations(pd)
    try:
        entry = konno_lowest_weights(pd)
        lam_r = fundamental_weight(rs.rank, r)
        witness = []
        mismatches = 0
        total = 0
        for level, w in zip(entry.levels, entry.weights):
            c = w.fw_coords[r - 1]
            if c == 1:
                expected = "regular:0"
            else:
                expected = "singular" if a == 1 else "regular:0"
            cls = classify_cotangent_twist_weights(rs, r, a, a * lam_r - w)
            actual = _classification_label(cls.index)
            if actual != expected:
                mismatches += 1
            witness.append(
                {
                    "level": level,
                    "fw_coords": list(w.fw_coords),
                    "expected": expected,
                    "actual": actual,
                }
            )
        total, _pieces = h0_twisted_cotangent(pd, a)
        passed = mismatches == 0
        if mismatches:
            annotations.append(f"{mismatches} classification mismatches")
    except Exception as exc:
        total, witness, passed = 0, [], False
        annotations.append(f"error: {exc}")
    return CaseResult(
        family=t.family.value,
        rank=t.rank,
        node=r,
        twist=a,
        h0=total,
        dim_y=pd.dim_y,
        passed=passed,
        witness=tuple(witness),
        annotations=tuple(annotations),
    )


def check_lemma_studiopesi(
    max_rank: int = 8,
    twists: Sequence[int] = (1, 2, 3),
    jobs: int = 1,
) -> Report:
    """Classification sweep over every supported pair and listed twist.

    For each table weight the predicted class (singular exactly when the
    node coefficient is 2 and a = 1, regular of index 0 otherwise) is
    compared against the computed one; a case passes when every weight
    matches.
    """
    if max_rank < 2:
        raise ValueError(f"max_rank must be >= 2, got {max_rank}")
    twists = sorted(set(int(a) for a in twists))
    if not twists:
        raise ValueError("twists must be nonempty")
    if twists[0] < 1:
        raise ValueError(f"twists must all be >= 1, got {twists[0]}")
    inputs = [(pd, a) for pd in konno_pairs(max_rank) for a in twists]
    cases = _run_cases(inputs, _studiopesi_case, jobs)
    return Report(
        sweep="studiopesi",
        version=__version__,
        params={"max_rank": max_rank, "twists": list(twists)},
        cases=tuple(cases),
    )


_CSV_HEADER = ["family", "rank", "node", "twist", "h0", "dim_y", "passed", "annotations"]


def emit_report(report: Report, fmt: str = "json") -> bytes:
    """Serialize a report as canonical JSON or CSV bytes (deterministic)."""
    if fmt == "json":
        return (json.dumps(report.to_json_dict(), indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_HEADER)
        for c in report.cases:
            writer.writerow(
                [
                    c.family,
                    c.rank,
                    c.node,
                    c.twist,
                    str(c.h0),
                    c.dim_y,
                    "true" if c.passed else "false",
                    "; ".join(c.annotations),
                ]
            )
        return buf.getvalue().encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
