"""
The platform's move: solving for optimal weights
================================================

The leader anticipates best responses and grid-searches its weight domain
(default: the unit simplex, since responses are scale-invariant). With the
default metrics, watch time is the efficient frontier whenever creators
collaborate, so pure beta wins across a wide range of sponsor pressure.
"""

from creatorgame import (
    CreatorParams,
    DEFAULT_TABLE,
    Exact,
    Population,
    SimplexDomain,
    Strategy,
    UtilityModel,
    delta_sensitivity,
    make_delta_grid_population,
    stackelberg_solve,
)

domain = SimplexDomain(total=1.0, resolution=50)

print("single creator, rising sponsor sensitivity:")
results = delta_sensitivity(domain, [0.0, 1.0, 2.5, 5.0], UtilityModel.LINEAR, Exact(), DEFAULT_TABLE)
for delta, eq in results:
    w = eq.weights
    print(
        f"  delta={delta:3.1f}: weights=({w.alpha:.2f}, {w.beta:.2f}, {w.gamma:.2f})"
        f"  value={eq.leader_value:.4f}"
        f"  share(beef)={eq.shares.share[Strategy.BEEFING]:.2f}"
    )

print("\nheterogeneous population (delta grid 0..5, 101 creators):")
pop = make_delta_grid_population(0.0, 5.0, 101)
eq = stackelberg_solve(domain, pop, Exact(), DEFAULT_TABLE)
print(f"  optimal weights: ({eq.weights.alpha:.2f}, {eq.weights.beta:.2f}, {eq.weights.gamma:.2f})")
print(f"  leader value:    {eq.leader_value:.4f}")
print(f"  shares:          collab {eq.shares.share[Strategy.COLLABORATION]:.3f}, "
      f"beef {eq.shares.share[Strategy.BEEFING]:.3f}")
print(f"  grid points:     {eq.grid_points_evaluated}")

# A drama-free table flips the calculus: if beefing carried no risk and
# more of every metric, the platform would happily point everyone at it.
from creatorgame import EngagementProfile, GameTable

juiced = GameTable(
    {
        Strategy.COLLABORATION: EngagementProfile(2.0, 5.0, 3.0, 0.0),
        Strategy.BEEFING: EngagementProfile(6.0, 6.0, 5.0, 0.0),
    }
)
eq = stackelberg_solve(domain, Population((CreatorParams(3.0),)), Exact(), juiced)
print(f"\nrisk-free dominant beefing: weights=({eq.weights.alpha:.2f}, {eq.weights.beta:.2f}, "
      f"{eq.weights.gamma:.2f}), value={eq.leader_value:.4f}, "
      f"share(beef)={eq.shares.share[Strategy.BEEFING]:.0f}")
