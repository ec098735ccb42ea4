"""Parameter sweeps over the six free structure constants.

Each grid point is completed through :func:`jacobi_complete` and pushed
through classification and curvature. Points with no Jacobi completion
are skipped and counted rather than aborting the sweep.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateDenominatorError, ParameterError
from .exact import format_rational, parse_rational
from .lie_algebra import StructureConstants, jacobi_complete
from .report import analyze

__all__ = [
    "SWEEP_HEADER",
    "SWEEP_PARAMETERS",
    "SweepResult",
    "SweepRow",
    "parse_range",
    "run_sweep",
]

# order matches the positional arguments of jacobi_complete
SWEEP_PARAMETERS = ("C01^0", "C02^0", "C12^1", "C12^2", "C01^1", "C02^2")
SWEEP_HEADER = SWEEP_PARAMETERS + ("class", "tau", "flat", "einstein_kind")


def parse_range(spec: str, step: Fraction | None = None) -> tuple[Fraction, ...]:
    """Values of one sweep axis.

    ``"1/2"`` is a single value, ``"-1,0,1"`` an explicit list and
    ``"lo:hi"`` the closed range from ``lo`` to ``hi`` in increments of
    ``step``.
    """
    spec = spec.strip()
    if not spec:
        raise ParameterError("empty range")
    if ":" in spec:
        lo_text, _, hi_text = spec.partition(":")
        lo, hi = parse_rational(lo_text), parse_rational(hi_text)
        if step is None or step <= 0:
            raise ParameterError(f"range {spec!r} needs a positive step")
        if hi < lo:
            raise ParameterError(f"empty range {spec!r}")
        count = int((hi - lo) // step) + 1
        return tuple(lo + n * step for n in range(count))
    values = tuple(parse_rational(v) for v in spec.split(",") if v.strip())
    if not values:
        raise ParameterError(f"empty range {spec!r}")
    return tuple(sorted(set(values)))


@dataclass(frozen=True)
class SweepRow:
    params: tuple[Fraction, ...]
    constants: StructureConstants
    label: str
    tau: Fraction
    flat: bool
    einstein_kind: str
    para_sasakian: bool

    def csv_fields(self) -> list[str]:
        return [format_rational(p) for p in self.params] + [
            self.label,
            format_rational(self.tau),
            "true" if self.flat else "false",
            self.einstein_kind,
        ]

    def to_json(self) -> dict:
        return {
            "params": dict(zip(SWEEP_PARAMETERS, (format_rational(p) for p in self.params))),
            "constants": self.constants.to_json(),
            "class": self.label,
            "tau": format_rational(self.tau),
            "flat": self.flat,
            "einstein_kind": self.einstein_kind,
            "para_sasakian": self.para_sasakian,
        }


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    skipped: tuple[tuple[Fraction, ...], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(SWEEP_HEADER)
        for row in self.rows:
            writer.writerow(row.csv_fields())
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "header": list(SWEEP_HEADER),
            "rows": [r.to_json() for r in self.rows],
            "skipped": len(self.skipped),
        }


def run_sweep(
    axes: Sequence[Sequence[Fraction]],
    free: tuple[Fraction, Fraction, Fraction] = (Fraction(0),) * 3,
) -> SweepResult:
    """Evaluate every point of the product grid, in lexicographic order.

    ``free`` supplies ``C_12^0, C_02^1, C_01^2`` wherever the Jacobi
    identity leaves them undetermined (a 0/0 quotient).
    """
    if len(axes) != len(SWEEP_PARAMETERS):
        raise ParameterError(f"a sweep needs {len(SWEEP_PARAMETERS)} axes, got {len(axes)}")
    for name, axis in zip(SWEEP_PARAMETERS, axes):
        if not axis:
            raise ParameterError(f"empty range for {name}")
    rows, skipped = [], []
    for point in itertools.product(*(sorted(set(a)) for a in axes)):
        try:
            s = jacobi_complete(*point, free=free)
        except DegenerateDenominatorError:
            skipped.append(point)
            continue
        report = analyze(s)
        rows.append(
            SweepRow(
                params=point,
                constants=s,
                label=report.decomposition.label,
                tau=report.curvature.tau,
                flat=report.curvature.flat,
                einstein_kind=report.einstein.kind,
                para_sasakian=report.flags["para_sasakian"],
            )
        )
    return SweepResult(tuple(rows), tuple(skipped))
