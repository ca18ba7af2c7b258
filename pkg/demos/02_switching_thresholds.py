"""
Where does a creator stop beefing?
==================================

For fixed weights, the utility gap is affine and strictly decreasing in the
sponsor sensitivity delta, so there is (at most) one switching point. The
analytic threshold from switching_delta agrees with a brute-force scan.
"""

import numpy as np

from creatorgame import (
    AlgorithmWeights,
    CreatorParams,
    DEFAULT_TABLE,
    UtilityModel,
    best_response,
    switching_delta,
)

weights = AlgorithmWeights(2.5, 0.5, 2.0)  # clicks/shares heavy
threshold = switching_delta(weights, UtilityModel.LINEAR, DEFAULT_TABLE)
print(f"analytic switching delta: {threshold:.6f}  (= 8/3)")

print("\nscan over delta:")
for delta in np.linspace(0.0, 4.0, 9):
    chosen = best_response(weights, CreatorParams(float(delta)), DEFAULT_TABLE)
    marker = "<-- switch happens before here" if 0 < delta - threshold < 0.5 else ""
    print(f"  delta={delta:4.1f}: {chosen.value:13s} {marker}")

# When the platform is watch-time heavy the gap is negative already at
# delta = 0; the threshold comes out negative, meaning beefing never pays.
watch_heavy = AlgorithmWeights(1.0, 2.0, 1.5)
threshold = switching_delta(watch_heavy, UtilityModel.LINEAR, DEFAULT_TABLE)
print(f"\nwatch-time heavy weights: switching delta = {threshold:.2f} (< 0: beefing never preferred)")

# The nonlinear model squares the risk, shrinking the threshold.
nl = switching_delta(weights, UtilityModel.NONLINEAR, DEFAULT_TABLE)
print(f"same clicks/shares-heavy weights, nonlinear model: threshold = {nl:.4f}")
