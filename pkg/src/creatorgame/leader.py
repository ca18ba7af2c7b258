"""Leader side: the platform's engagement objective and the weight search.

The platform's payoff is the share-weighted engagement value of the
population's responses; drama risk never enters it. The raw argmax over
weights is unbounded (the objective is linear in the weights), so the
search runs over a compact domain: by default the unit simplex
alpha + beta + gamma = 1, which is enough because best responses are
invariant to rescaling all of (alpha, beta, gamma, delta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .core import (
    AlgorithmWeights,
    CreatorParams,
    GameTable,
    InvalidScenarioError,
    Strategy,
    UtilityModel,
    _checked,
    creator_utility,
)
from .population import Population, StrategyShares, population_shares
from .response import ResponseRule

# Later grid points must beat the incumbent by more than this to win.
LEADER_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SimplexDomain:
    """Weights with alpha + beta + gamma = total, subdivided `resolution`
    times per axis: all (i, j, k)*total/resolution with i + j + k = resolution."""

    total: float = 1.0
    resolution: int = 100

    def __post_init__(self) -> None:
        object.__setattr__(self, "total", _checked("total", self.total))
        if self.total <= 0.0:
            raise InvalidScenarioError(f"total must be > 0, got {self.total!r}")
        if not isinstance(self.resolution, int) or self.resolution < 1:
            raise InvalidScenarioError(f"resolution must be an integer >= 1, got {self.resolution!r}")


@dataclass(frozen=True)
class BoxDomain:
    """Independent axis ranges [0, *_max], each subdivided `resolution` times."""

    alpha_max: float
    beta_max: float
    gamma_max: float
    resolution: int = 100

    def __post_init__(self) -> None:
        for name in ("alpha_max", "beta_max", "gamma_max"):
            value = _checked(name, getattr(self, name))
            if value <= 0.0:
                raise InvalidScenarioError(f"{name} must be > 0, got {value!r}")
            object.__setattr__(self, name, value)
        if not isinstance(self.resolution, int) or self.resolution < 1:
            raise InvalidScenarioError(f"resolution must be an integer >= 1, got {self.resolution!r}")


WeightDomain = Union[SimplexDomain, BoxDomain]


@dataclass(frozen=True)
class EquilibriumResult:
    """Optimal weights with everything they induce.

    creator_utilities holds the population-mean utility of each strategy at
    the optimal weights (for a single creator, just that creator's
    utilities).
    """

    weights: AlgorithmWeights
    shares: StrategyShares
    leader_value: float
    creator_utilities: dict[Strategy, float]
    grid_points_evaluated: int


def algorithm_utility(weights: AlgorithmWeights, shares: StrategyShares, table: GameTable) -> float:
    """Share-weighted engagement value. Drama risk does not enter."""
    total = 0.0
    for s in Strategy:
        p = table.profiles[s]
        total += shares.share[s] * (
            weights.alpha * p.clicks + weights.beta * p.watch_time + weights.gamma * p.shares
        )
    if not math.isfinite(total):
        raise InvalidScenarioError(f"leader value is non-finite ({total!r})")
    return total


def enumerate_domain(domain: WeightDomain) -> list[AlgorithmWeights]:
    """All grid points of the domain in lexicographic (i, j, k) index order,
    with (i, j, k) indexing (alpha, beta, gamma)."""
    n = domain.resolution
    points: list[AlgorithmWeights] = []
    if isinstance(domain, SimplexDomain):
        for i in range(n + 1):
            for j in range(n - i + 1):
                k = n - i - j
                points.append(
                    AlgorithmWeights(i * domain.total / n, j * domain.total / n, k * domain.total / n)
                )
    elif isinstance(domain, BoxDomain):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    points.append(
                        AlgorithmWeights(
                            i * domain.alpha_max / n,
                            j * domain.beta_max / n,
                            k * domain.gamma_max / n,
                        )
                    )
    else:
        raise TypeError(f"unknown weight domain: {domain!r}")
    return points


def stackelberg_solve(
    domain: WeightDomain,
    pop: Population,
    rule: ResponseRule,
    table: GameTable,
    tie_tol: float = LEADER_TIE_TOLERANCE,
) -> EquilibriumResult:
    """Exhaustive grid search anticipating the population's response.

    At every grid point the population's shares are computed and scored
    with algorithm_utility; the best point wins. Ties in leader value
    (within tie_tol) keep the earliest point in enumeration order, so the
    result is independent of evaluation parallelism.
    """
    points = enumerate_domain(domain)
    if not points:
        raise InvalidScenarioError("weight domain produced no grid points")

    best_weights: AlgorithmWeights | None = None
    best_shares: StrategyShares | None = None
    best_value = -math.inf
    for weights in points:
        shares = population_shares(pop, rule, weights, table)
        value = algorithm_utility(weights, shares, table)
        if best_weights is None or value > best_value + tie_tol:
            best_weights, best_shares, best_value = weights, shares, value

    assert best_weights is not None and best_shares is not None
    utilities = {
        s: sum(creator_utility(best_weights, m, table.profiles[s]) for m in pop.members)
        / len(pop.members)
        for s in Strategy
    }
    return EquilibriumResult(
        weights=best_weights,
        shares=best_shares,
        leader_value=best_value,
        creator_utilities=utilities,
        grid_points_evaluated=len(points),
    )


def delta_sensitivity(
    domain: WeightDomain,
    deltas: list[float],
    model: UtilityModel,
    rule: ResponseRule,
    table: GameTable,
) -> list[tuple[float, EquilibriumResult]]:
    """stackelberg_solve for a single creator at each delta, in input order."""
    if not deltas:
        raise InvalidScenarioError("deltas must be non-empty")
    results: list[tuple[float, EquilibriumResult]] = []
    for delta in deltas:
        try:
            pop = Population((CreatorParams(delta=delta, model=model),))
            result = stackelberg_solve(domain, pop, rule, table)
        except InvalidScenarioError as exc:
            raise InvalidScenarioError(f"delta={delta!r}: {exc}") from exc
        results.append((float(delta), result))
    return results
