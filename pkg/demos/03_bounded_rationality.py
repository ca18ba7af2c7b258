"""
Bounded rationality: quantal and satisficing responses
======================================================

Real creators do not compute exact argmaxes. The quantal rule softens the
choice into probabilities that sharpen as the rationality parameter grows;
the satisficing rule takes the first strategy that clears an aspiration
level, checking the brand-safe option first.
"""

from creatorgame import (
    AlgorithmWeights,
    CreatorParams,
    DEFAULT_TABLE,
    Quantal,
    Satisficing,
    Strategy,
    creator_utility,
    respond,
)

weights = AlgorithmWeights(1.0, 2.0, 1.5)
creator = CreatorParams(1.0)
# utilities here: collaboration 16.5, beefing 12.0

print("quantal response, rising rationality:")
for lam in (0.0, 0.1, 0.3, 1.0, 3.0, 10.0):
    dist = respond(Quantal(lam), weights, creator, DEFAULT_TABLE)
    print(
        f"  lam={lam:5.1f}: P(collab)={dist.prob[Strategy.COLLABORATION]:.6f}"
        f"  P(beef)={dist.prob[Strategy.BEEFING]:.6f}"
    )

print("\nsatisficing at different aspiration levels:")
u = {s: creator_utility(weights, creator, DEFAULT_TABLE.profiles[s]) for s in Strategy}
print(f"  (utilities: collab {u[Strategy.COLLABORATION]}, beef {u[Strategy.BEEFING]})")
for aspiration in (10.0, 13.0, 16.6, 20.0):
    dist = respond(Satisficing(aspiration), weights, creator, DEFAULT_TABLE)
    pick = max(dist.prob, key=dist.prob.get)
    print(f"  aspiration={aspiration:5.1f}: picks {pick.value}")

# On a clicks/shares-heavy platform a low aspiration makes a satisficer
# collaborate even though beefing scores strictly higher.
viral = AlgorithmWeights(2.5, 0.5, 2.0)
dist = respond(Satisficing(13.0), viral, creator, DEFAULT_TABLE)
pick = max(dist.prob, key=dist.prob.get)
print(f"\nviral weights, aspiration 13.0 (collab=13.5 qualifies first): picks {pick.value}")
