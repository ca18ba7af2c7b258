"""Parameter sweeps and strategy-region maps over (weights, delta) space.

A sweep fixes a full scenario and varies one or two of alpha, beta, gamma,
delta over inclusive, evenly spaced grids. Each cell records both creator
utilities, their gap, and the chosen (best-response) strategy. Cells can be
emitted as CSV or, for two-axis sweeps, as a deterministic SVG region map.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import BinaryIO

import numpy as np

from .core import (
    AlgorithmWeights,
    CreatorParams,
    GameTable,
    InvalidScenarioError,
    Strategy,
    creator_utility,
)
from .response import Exact, ResponseRule, best_response, switching_delta

SWEEPABLE_PARAMS = ("alpha", "beta", "gamma", "delta")

COLLABORATION_COLOR = "#4f9d69"
BEEFING_COLOR = "#c0504d"


class MalformedLatticeError(ValueError):
    """Cells do not form the complete 2-axis lattice an operation needs."""


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: `steps` evenly spaced values over [lo, hi],
    endpoints included (steps = 1 means the single value lo)."""

    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self) -> None:
        if self.name not in SWEEPABLE_PARAMS:
            raise InvalidScenarioError(
                f"axis name must be one of {SWEEPABLE_PARAMS}, got {self.name!r}"
            )
        lo, hi = float(self.lo), float(self.hi)
        if not (lo <= hi):
            raise InvalidScenarioError(f"axis range must have lo <= hi, got [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not isinstance(self.steps, int) or self.steps < 1:
            raise InvalidScenarioError(f"steps must be an integer >= 1, got {self.steps!r}")

    def values(self) -> list[float]:
        return [float(v) for v in np.linspace(self.lo, self.hi, self.steps)]


@dataclass(frozen=True)
class SweepSpec:
    """Axes plus the fixed scenario supplying every non-swept value."""

    axis1: SweepAxis
    axis2: SweepAxis | None
    weights: AlgorithmWeights
    creator: CreatorParams
    table: GameTable
    rule: ResponseRule = Exact()

    def __post_init__(self) -> None:
        if self.axis2 is not None and self.axis2.name == self.axis1.name:
            raise InvalidScenarioError(f"axis1 and axis2 both sweep {self.axis1.name!r}")


@dataclass(frozen=True)
class SweepCell:
    """One lattice point: swept values, both utilities, gap, and the choice."""

    param_values: dict[str, float]
    utilities: dict[Strategy, float]
    chosen: Strategy
    gap: float


def _with_overrides(
    weights: AlgorithmWeights, creator: CreatorParams, overrides: dict[str, float]
) -> tuple[AlgorithmWeights, CreatorParams]:
    weight_overrides = {k: v for k, v in overrides.items() if k != "delta"}
    if weight_overrides:
        weights = dataclasses.replace(weights, **weight_overrides)
    if "delta" in overrides:
        creator = dataclasses.replace(creator, delta=overrides["delta"])
    return weights, creator


def run_sweep(spec: SweepSpec) -> list[SweepCell]:
    """Evaluate every lattice point, axis1 outer and axis2 inner, both ascending."""
    axis2_values: list[float | None] = list(spec.axis2.values()) if spec.axis2 else [None]
    cells: list[SweepCell] = []
    for v1 in spec.axis1.values():
        for v2 in axis2_values:
            overrides = {spec.axis1.name: v1}
            if spec.axis2 is not None:
                overrides[spec.axis2.name] = v2
            weights, creator = _with_overrides(spec.weights, spec.creator, overrides)
            utilities = {s: creator_utility(weights, creator, spec.table.profiles[s]) for s in Strategy}
            gap = utilities[Strategy.BEEFING] - utilities[Strategy.COLLABORATION]
            cells.append(
                SweepCell(
                    param_values=overrides,
                    utilities=utilities,
                    chosen=best_response(weights, creator, spec.table),
                    gap=gap,
                )
            )
    return cells


def region_boundary(spec: SweepSpec) -> float | None:
    """The switching delta of the fixed scenario, or None when it is
    undefined or falls outside the swept range. Requires a pure delta sweep."""
    if spec.axis1.name != "delta" or spec.axis2 is not None:
        raise InvalidScenarioError("region_boundary needs axis1 = delta and no axis2")
    boundary = switching_delta(spec.weights, spec.creator.model, spec.table)
    if boundary is None or not (spec.axis1.lo <= boundary <= spec.axis1.hi):
        return None
    return boundary


def _fmt(value: float) -> str:
    """9 significant digits, no trailing zeros (exact for all golden values)."""
    return format(float(value), ".9g")


def emit_csv(cells: list[SweepCell], sink: BinaryIO) -> None:
    """Write a header row then one row per cell.

    Columns: the swept parameter names (sorted), then u_collab, u_beef,
    gap, chosen. Reals use 9 significant digits; chosen is the strategy
    name; rows end with LF.
    """
    if not cells:
        raise InvalidScenarioError("no cells to emit")
    names = sorted(cells[0].param_values)
    lines = [",".join(names + ["u_collab", "u_beef", "gap", "chosen"])]
    for cell in cells:
        row = [_fmt(cell.param_values[name]) for name in names]
        row.append(_fmt(cell.utilities[Strategy.COLLABORATION]))
        row.append(_fmt(cell.utilities[Strategy.BEEFING]))
        row.append(_fmt(cell.gap))
        row.append(cell.chosen.value)
        lines.append(",".join(row))
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))


def emit_region_svg(cells: list[SweepCell], sink: BinaryIO) -> None:
    """Write a standalone SVG region map for a complete 2-axis lattice.

    One filled rectangle per cell, colored by the chosen strategy
    (collaboration green, beefing red); axes are labeled with the parameter
    names and their ranges. Output is byte-deterministic for identical
    input. Grid dimensions are inferred from the distinct values along each
    axis; a count mismatch raises MalformedLatticeError.
    """
    if not cells:
        raise MalformedLatticeError("no cells")
    names = list(cells[0].param_values)
    if len(names) != 2:
        raise MalformedLatticeError(f"cells must come from a 2-axis sweep, got axes {names}")
    name1, name2 = names
    values1 = sorted({cell.param_values[name1] for cell in cells})
    values2 = sorted({cell.param_values[name2] for cell in cells})
    if len(cells) != len(values1) * len(values2):
        raise MalformedLatticeError(
            f"{len(cells)} cells cannot tile a {len(values1)}x{len(values2)} lattice"
        )
    index1 = {v: i for i, v in enumerate(values1)}
    index2 = {v: i for i, v in enumerate(values2)}

    width, height = 640, 480
    left, right, top, bottom = 90.0, 620.0, 30.0, 420.0
    cell_w = (right - left) / len(values1)
    cell_h = (bottom - top) / len(values2)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for cell in cells:
        i = index1[cell.param_values[name1]]
        j = index2[cell.param_values[name2]]
        x = left + i * cell_w
        y = bottom - (j + 1) * cell_h  # axis2 ascends upward
        color = BEEFING_COLOR if cell.chosen is Strategy.BEEFING else COLLABORATION_COLOR
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{cell_w:.2f}" height="{cell_h:.2f}" '
            f'fill="{color}"/>'
        )
    mid_x = (left + right) / 2.0
    mid_y = (top + bottom) / 2.0
    parts.append(
        f'<text x="{mid_x:.2f}" y="{height - 14}" text-anchor="middle" font-size="14" '
        f'font-family="sans-serif">{name1}: {_fmt(values1[0])} to {_fmt(values1[-1])}</text>'
    )
    parts.append(
        f'<text x="20" y="{mid_y:.2f}" text-anchor="middle" font-size="14" '
        f'font-family="sans-serif" transform="rotate(-90 20 {mid_y:.2f})">'
        f"{name2}: {_fmt(values2[0])} to {_fmt(values2[-1])}</text>"
    )
    parts.append("</svg>")
    sink.write(("\n".join(parts) + "\n").encode("utf-8"))
