"""
Heterogeneous populations and strategy shares
=============================================

Creators differ in how much sponsor pressure they feel. With deltas spread
over a grid, the population splits at the switching threshold: everyone
below it beefs, everyone at or above it collaborates. Stochastic rules
smooth that hard edge.
"""

from creatorgame import (
    AlgorithmWeights,
    DEFAULT_TABLE,
    Exact,
    Quantal,
    Strategy,
    UtilityModel,
    make_delta_grid_population,
    population_shares,
    switching_delta,
)

weights = AlgorithmWeights(2.5, 0.5, 2.0)
pop = make_delta_grid_population(0.0, 5.0, 101)
threshold = switching_delta(weights, UtilityModel.LINEAR, DEFAULT_TABLE)
print(f"population: 101 creators, delta 0.0 .. 5.0; switching delta = {threshold:.4f}")

shares = population_shares(pop, Exact(), weights, DEFAULT_TABLE)
below = sum(1 for m in pop.members if m.delta < threshold)
print(f"\nexact rule: share(beef) = {shares.share[Strategy.BEEFING]:.6f}"
      f"  (= {below}/101 members below the threshold)")

print("\nquantal rule smooths the partition:")
for lam in (0.2, 1.0, 5.0):
    shares = population_shares(pop, Quantal(lam), weights, DEFAULT_TABLE)
    print(f"  lam={lam:3.1f}: share(beef) = {shares.share[Strategy.BEEFING]:.6f}")

# Sharper platform emphasis on watch time empties the beefing region.
for beta in (0.5, 1.0, 1.5, 2.0):
    w = AlgorithmWeights(2.5, beta, 2.0)
    shares = population_shares(pop, Exact(), w, DEFAULT_TABLE)
    print(f"beta={beta:3.1f}: share(beef) = {shares.share[Strategy.BEEFING]:.4f}")
