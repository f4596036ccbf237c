"""Published example expansions, checked against the formulas and the oracle.

Printed terms are written as digit strings of composition parts
("1422" is e_{(1,4,2,2)}); all parts in these examples are single digits.
Comparison is at partition level since e_I-expansions are not unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .compositions import Partition
from .expansions import kkp_eI, kpc_eI, pkp_eI
from .graphs import Graph, hat, kkp, kpc, pkp
from .oracle import csf_oracle
from .providers import CsfFn
from .reductions import kpc_via_kpg
from .report_schema import CheckReport, residual_terms
from .symfunc import SymFuncE, is_e_positive


@dataclass(frozen=True)
class Golden:
    name: str
    printed: tuple[tuple[str, int], ...]
    build: Callable[[], Graph]
    formulas: tuple[tuple[str, Callable[[], SymFuncE]], ...] = ()

    def printed_sf(self) -> SymFuncE:
        coeffs: dict[Partition, Fraction] = {}
        for label, coeff in self.printed:
            part = Partition.of(int(ch) for ch in label)
            coeffs[part] = coeffs.get(part, Fraction(0)) + coeff
        degree = next(iter(coeffs)).size
        return SymFuncE(degree, coeffs)


KPC_424 = Golden(
    name="kpc:a=4,b=2,c=4",
    printed=(
        ("1422", 18), ("144", 162), ("162", 30), ("18", 126), ("252", 48), ("27", 132),
        ("342", 54), ("36", 54), ("45", 288), ("54", 270), ("9", 162),
    ),
    build=lambda: kpc(4, 2, 4),
    formulas=(
        ("kpc_eI", lambda: kpc_eI(4, 2, 4).flatten()),
        ("kpg_reduce", lambda: kpc_via_kpg(4, 2, 4)),
    ),
)

PKP_214 = Golden(
    name="pkp:g=2,h=1,m=4",
    printed=(("142", 24), ("151", 16), ("16", 24), ("421", 2), ("43", 6), ("52", 48), ("61", 30), ("7", 42)),
    build=lambda: pkp(2, 1, 4),
    formulas=(("pkp_eI", lambda: pkp_eI(2, 1, 4).flatten()),),
)

KKP_153 = Golden(
    name="kkp:a=1,b=5,c=3",
    printed=(
        ("126", 48), ("162", 720), ("171", 1152), ("18", 1680), ("27", 192),
        ("36", 144), ("72", 1008), ("81", 1536), ("9", 2160),
    ),
    build=lambda: kkp(1, 5, 3),
    formulas=(("kkp_eI", lambda: kkp_eI(1, 5, 3).flatten()),),
)

NONADJACENT_HAT = Golden(
    name="hat:g=1,m=4,h=1,adjacent=false",
    printed=(
        ("6", 18), ("51", 22), ("42", -2), ("411", 6), ("33", 9), ("321", 4), ("222", -2), ("2211", 1),
    ),
    build=lambda: hat(1, 4, 1, adjacent=False),
)

GOLDENS = (KPC_424, PKP_214, KKP_153, NONADJACENT_HAT)

KKP_LABEL_NOTE = (
    "printed label K_7^(01)(K_3,K_1) is the (a,b,c)=(1,6,3) graph of order 10, "
    "but the printed terms have degree 9 and match (a,b,c)=(1,5,3), K_6^(01)(K_3,K_1)"
)


def check_golden(golden: Golden, *, csf: CsfFn = csf_oracle) -> list[CheckReport]:
    graph = golden.build()
    printed = golden.printed_sf()
    oracle_value = csf(graph)
    reports = [
        CheckReport(
            check=f"golden:{golden.name}:oracle",
            passed=oracle_value == printed,
            graph=graph.to_json(),
            residual_terms=residual_terms(oracle_value, printed),
        )
    ]
    for label, formula in golden.formulas:
        value = formula()
        reports.append(
            CheckReport(
                check=f"golden:{golden.name}:{label}",
                passed=value == printed,
                residual_terms=residual_terms(value, printed),
            )
        )
    if golden is NONADJACENT_HAT:
        verdict = is_e_positive(oracle_value)
        witness = None if verdict.witness is None else [list(verdict.witness[0].parts), str(verdict.witness[1])]
        reports.append(
            CheckReport(
                check=f"golden:{golden.name}:witness",
                passed=not verdict.positive and witness == [[4, 2], "-2"],
                params={"witness": witness},
            )
        )
    if golden is KKP_153:
        labelled = kkp(1, 6, 3)
        labelled_value = csf(labelled)
        reports.append(
            CheckReport(
                check=f"golden:{golden.name}:label",
                passed=labelled_value != printed and oracle_value == printed,
                graph=labelled.to_json(),
                params={"labelled_order": labelled.n, "printed_degree": printed.degree},
                note=KKP_LABEL_NOTE,
            )
        )
    return reports


def check_goldens(*, csf: CsfFn = csf_oracle) -> list[CheckReport]:
    return [report for golden in GOLDENS for report in check_golden(golden, csf=csf)]
