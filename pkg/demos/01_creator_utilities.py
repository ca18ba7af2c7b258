"""
Creator utilities under different ranking priorities
====================================================

Three weight settings, one creator, both utility models. Watch how the
platform's emphasis (watch time vs. clicks/shares) and the sponsor
sensitivity delta move the payoffs of collaboration and beefing.
"""

from creatorgame import (
    AlgorithmWeights,
    CreatorParams,
    DEFAULT_TABLE,
    Strategy,
    UtilityModel,
    creator_utility,
    utility_gap,
)

settings = [
    ("watch-time heavy, delta=1.0", AlgorithmWeights(1.0, 2.0, 1.5), CreatorParams(1.0)),
    ("watch-time heavy, delta=2.5", AlgorithmWeights(1.0, 2.0, 1.5), CreatorParams(2.5)),
    ("clicks/shares heavy, delta=1.0", AlgorithmWeights(2.5, 0.5, 2.0), CreatorParams(1.0)),
]

print("metrics in play:")
for s in Strategy:
    p = DEFAULT_TABLE.profiles[s]
    print(f"  {s.value:13s} clicks={p.clicks} watch={p.watch_time} shares={p.shares} risk={p.drama_risk}")
print()

for label, weights, creator in settings:
    u = {s: creator_utility(weights, creator, DEFAULT_TABLE.profiles[s]) for s in Strategy}
    gap = utility_gap(weights, creator, DEFAULT_TABLE)
    print(f"{label}")
    print(f"  U(Collaboration) = {u[Strategy.COLLABORATION]:.4g}")
    print(f"  U(Beefing)       = {u[Strategy.BEEFING]:.4g}")
    print(f"  gap (beef - collab) = {gap:+.4g}\n")

# The nonlinear model damps clicks and watch time (log / sqrt) and squares
# the drama penalty, so beefing loses its shine much faster as delta grows.
print("nonlinear model, unit weights, rising delta:")
unit = AlgorithmWeights(1.0, 1.0, 1.0)
for delta in (0.0, 0.5, 1.0, 2.0):
    creator = CreatorParams(delta, UtilityModel.NONLINEAR)
    u_beef = creator_utility(unit, creator, DEFAULT_TABLE.profiles[Strategy.BEEFING])
    u_collab = creator_utility(unit, creator, DEFAULT_TABLE.profiles[Strategy.COLLABORATION])
    print(f"  delta={delta:.1f}: U(collab)={u_collab:+.4f}  U(beef)={u_beef:+.4f}")
