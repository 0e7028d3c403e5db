"""Canned audit sweeps shared by the CLI and the acceptance tests.

Each suite aggregates per-instance checks into one report per relation family
so a full run reads as one verdict line per identity.
"""

from __future__ import annotations

from typing import Dict, List, Sequence

from .errors import OddTwoJNotClosedError
from .operators import RelationSpec, check_relation, numeric_relation_report
from .reports import AlgebraReport, CheckMode, Verdict, Witness
from .scalars import check_cross_identity, check_pair_identities
from .single_mode import (
    audit_single_mode,
    build_single_mode,
    single_mode_relation_specs,
    truncation_defect_report,
)
from .two_mode import audit_two_mode, build_two_mode, two_mode_relation_specs
from .realizations import audit_realizations
from .spin import (
    audit_condensed_forms,
    audit_hp,
    audit_so_nu3,
    audit_su_nu2,
    build_hp_rep,
    build_js_spin_rep,
    build_so_nu3,
    condensed_relation_specs,
    extract_js_block,
    hp_relation_specs,
    reference_matrix_reports,
    so_nu3_condensed_specs,
    so_nu3_relation_specs,
    su_nu2_relation_specs,
)


def aggregate(relation_id: str, reports: Sequence[AlgebraReport]) -> AlgebraReport:
    """Fold instance reports into one: first failure wins, caveats survive."""
    worst = max((r.max_residual for r in reports), default=0.0)
    for report in reports:
        if report.verdict is Verdict.FAIL:
            return AlgebraReport(
                relation_id, report.mode, worst, Verdict.FAIL,
                caveat=report.caveat, witness=report.witness,
            )
    caveats = [r.caveat for r in reports if r.caveat]
    modes = {r.mode for r in reports}
    mode = CheckMode.EXACT if modes <= {CheckMode.EXACT} else (
        CheckMode.NUMERIC if modes == {CheckMode.NUMERIC} else CheckMode.MIXED
    )
    if caveats:
        return AlgebraReport(
            relation_id, mode, worst if mode is not CheckMode.EXACT else 0.0,
            Verdict.PASS_WITH_CAVEAT, caveat=caveats[0],
        )
    return AlgebraReport(
        relation_id, mode, worst if mode is not CheckMode.EXACT else 0.0, Verdict.PASS
    )


def _group_by_suffix(per_instance: List[List[AlgebraReport]], label: str) -> List[AlgebraReport]:
    """Aggregate parallel report lists that share relation ids positionwise."""
    if not per_instance:
        return []
    grouped: Dict[str, List[AlgebraReport]] = {}
    order: List[str] = []
    for reports in per_instance:
        for report in reports:
            if report.relation_id not in grouped:
                grouped[report.relation_id] = []
                order.append(report.relation_id)
            grouped[report.relation_id].append(report)
    return [aggregate(f"{rid} {label}", grouped[rid]) for rid in order]


def number_suite(max_n: int = 50) -> List[AlgebraReport]:
    pair = [check_pair_identities(n) for n in range(max_n + 1)]
    cross = [
        check_cross_identity(m, n) for m in range(max_n + 1) for n in range(max_n + 1)
    ]
    return [
        aggregate(f"numbers: [n]+[n+1] = 2n+1+2nu and [n+2]-[n] = 2 (n <= {max_n})", pair),
        aggregate(
            f"numbers: [m][n+1]-[n][m+1] closed and piecewise forms agree (m,n <= {max_n})",
            cross,
        ),
    ]


def single_mode_suite(min_dim: int = 2, max_dim: int = 25) -> List[AlgebraReport]:
    per_dim = []
    defects = []
    for dim in range(min_dim, max_dim + 1):
        s = build_single_mode(dim)
        per_dim.append(audit_single_mode(s))
        defects.append(truncation_defect_report(s))
    out = _group_by_suffix(per_dim, f"(dims {min_dim}..{max_dim})")
    out.append(
        aggregate(
            f"[a,adag] unmasked fails only at the top row with defect -[dim] (dims {min_dim}..{max_dim})",
            defects,
        )
    )
    return out


def realization_suite(max_n: int = 15) -> List[AlgebraReport]:
    return audit_realizations(max_n)


def two_mode_suite(d1: int = 10, d2: int = 10) -> List[AlgebraReport]:
    return audit_two_mode(build_two_mode(d1, d2))


def two_mode_sweep(max_dim: int = 10) -> List[AlgebraReport]:
    per_pair = [
        audit_two_mode(build_two_mode(d1, d2))
        for d1 in range(2, max_dim + 1)
        for d2 in range(2, max_dim + 1)
    ]
    return _group_by_suffix(per_pair, f"(d1,d2 in 2..{max_dim})")


def spin_suite(max_two_j: int = 8) -> List[AlgebraReport]:
    per_j = [audit_su_nu2(build_js_spin_rep(two_j)) for two_j in range(1, max_two_j + 1)]
    out = _group_by_suffix(per_j, f"(two_j 1..{max_two_j})")
    odd = [audit_condensed_forms(build_js_spin_rep(j)) for j in range(1, max_two_j + 1, 2)]
    even = [audit_condensed_forms(build_js_spin_rep(j)) for j in range(2, max_two_j + 1, 2)]
    out.extend(_group_by_suffix(odd, f"(odd two_j <= {max_two_j})"))
    out.extend(_group_by_suffix(even, f"(even two_j <= {max_two_j})"))
    return out


def block_extraction_suite(max_two_j: int = 8, d1: int = 10, d2: int = 10) -> List[AlgebraReport]:
    ambient = build_two_mode(d1, d2)
    reports = []
    for two_j in range(1, min(max_two_j, d1 - 1, d2 - 1) + 1):
        extracted = extract_js_block(ambient, two_j)
        closed = build_js_spin_rep(two_j)
        for name in ("j_plus", "j_minus", "j0", "p_op", "k_op", "q_op", "r_j"):
            reports.append(
                check_relation(
                    f"block {name} (two_j={two_j})",
                    getattr(extracted, name),
                    getattr(closed, name),
                )
            )
    return [
        aggregate(
            f"two-mode block extraction equals the closed-form rep (two_j <= {max_two_j})",
            reports,
        )
    ]


def hp_suite(even_two_j: Sequence[int] = (2, 4, 6, 8), odd_two_j: Sequence[int] = (1, 3)) -> List[AlgebraReport]:
    per_j = [audit_hp(build_hp_rep(two_j)) for two_j in even_two_j]
    out = _group_by_suffix(per_j, f"(even two_j in {tuple(even_two_j)})")
    refusals = []
    for two_j in odd_two_j:
        try:
            build_hp_rep(two_j)
        except OddTwoJNotClosedError as err:
            refusals.append(
                AlgebraReport(
                    f"HP refuses odd two_j={two_j} with leakage {err.leakage}",
                    CheckMode.EXACT,
                    0.0,
                    Verdict.PASS,
                )
            )
        else:
            refusals.append(
                AlgebraReport(
                    f"HP refuses odd two_j={two_j}",
                    CheckMode.EXACT,
                    float("nan"),
                    Verdict.FAIL,
                    witness=Witness(-1, -1, "OddTwoJNotClosed raised", "no error raised"),
                )
            )
    return out + refusals


def so3_suite(max_two_j: int = 6) -> List[AlgebraReport]:
    per_j = [audit_so_nu3(build_so_nu3(two_j)) for two_j in range(1, max_two_j + 1)]
    # odd and even parities carry different condensed ids, so group as a whole
    return _group_by_suffix(per_j, f"(two_j 1..{max_two_j})")


def reference_suite() -> List[AlgebraReport]:
    return reference_matrix_reports()


def numeric_suite(max_two_j: int = 8, dims=(10, 10), single_dim: int = 12) -> List[AlgebraReport]:
    """Grid-sampled residual checks mirroring the exact audits."""
    specs: List[RelationSpec] = []
    specs.extend(single_mode_relation_specs(build_single_mode(single_dim)))
    specs.extend(two_mode_relation_specs(build_two_mode(*dims)))
    for two_j in sorted({max(1, max_two_j - 1), max_two_j}):
        rep = build_js_spin_rep(two_j)
        specs.extend(su_nu2_relation_specs(rep))
        specs.extend(condensed_relation_specs(rep))
        so3 = build_so_nu3(two_j)
        specs.extend(so_nu3_relation_specs(so3))
        specs.extend(so_nu3_condensed_specs(so3))
    even = max_two_j if max_two_j % 2 == 0 else max_two_j - 1
    if even >= 2:
        specs.extend(hp_relation_specs(build_hp_rep(even)))
    return [numeric_relation_report(spec) for spec in specs]


def verify_all(
    max_two_j: int = 8,
    dims=(10, 10),
    max_n: int = 15,
    max_number: int = 50,
    max_single_dim: int = 25,
) -> Dict[str, List[AlgebraReport]]:
    """Every audited relation family, grouped by section, deterministic order."""
    return {
        "deformed-numbers": number_suite(max_number),
        "single-mode": single_mode_suite(2, max_single_dim),
        "coordinate-realizations": realization_suite(max_n),
        "two-mode": two_mode_suite(*dims),
        "su_nu2": spin_suite(max_two_j),
        "block-extraction": block_extraction_suite(max_two_j, *dims),
        "reference-matrices": reference_suite(),
        "holstein-primakoff": hp_suite(
            tuple(j for j in range(2, max_two_j + 1, 2)), (1, 3)
        ),
        "so_nu3": so3_suite(min(max_two_j, 6)),
        "numeric-grid": numeric_suite(max_two_j, dims),
    }
