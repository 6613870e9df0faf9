"""Exhaustive sweep comparing the runner formulas against the diagram reading."""

from dataclasses import dataclass
from typing import Iterable

from .abacus import from_core_and_quotient, is_p_core, p_core, p_quotient
from .bisequence import diagonal_bisequence, is_symmetric_p_core
from .errors import BadModulus, NonPositivePart
from .formula import delta_general
from .partitions import Partition, delta_of, enumerate_partitions


@dataclass(frozen=True)
class Failure:
    n: int
    partition: tuple[int, ...]
    p: int
    check: str
    detail: str


@dataclass
class VerifyReport:
    n_max: int
    moduli: tuple[int, ...]
    cells: int = 0
    failures: int = 0
    first_failure: Failure | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _cell_problems(la: Partition, p: int) -> list[tuple[str, str]]:
    problems = []
    core = p_core(la, p)
    quotient = p_quotient(la, p)
    rebuilt = from_core_and_quotient(core, quotient, p)
    if rebuilt != la:
        problems.append(("roundtrip", f"rebuilt {rebuilt} from core {core} and quotient"))
    if core.weight + p * sum(c.weight for c in quotient) != la.weight:
        problems.append(("weight", f"core {core.weight} + {p}*quotient != {la.weight}"))
    formula = delta_general(core, quotient, p)
    oracle = delta_of(la)
    if formula != oracle:
        problems.append(("delta", f"formula {formula.lengths} vs diagram {oracle.lengths}"))
    if is_symmetric_p_core(diagonal_bisequence(la), p) != is_p_core(la, p):
        problems.append(("core-criterion", "residue test disagrees with direct hook check"))
    return problems


def run_verify(n_max: int, moduli: Iterable[int]) -> VerifyReport:
    """Check every self-conjugate partition of every n <= n_max against each modulus.

    Per (partition, p) cell: core/quotient roundtrip, the weight identity,
    formula delta == diagram delta, and the p-core residue criterion against
    the direct hook check. Deterministic iteration order: n ascending,
    enumeration order, p ascending.
    """
    if n_max < 0:
        raise NonPositivePart(f"n_max must be >= 0, got {n_max}")
    moduli = tuple(sorted(set(int(p) for p in moduli)))
    if not moduli:
        raise BadModulus("need at least one modulus")
    for p in moduli:
        if p < 2:
            raise BadModulus(f"p must be >= 2, got {p}")
    report = VerifyReport(n_max=n_max, moduli=moduli)
    for n in range(n_max + 1):
        for la in enumerate_partitions(n, symmetric_only=True):
            for p in moduli:
                report.cells += 1
                for check, detail in _cell_problems(la, p):
                    report.failures += 1
                    if report.first_failure is None:
                        report.first_failure = Failure(n, la.parts, p, check, detail)
    return report
