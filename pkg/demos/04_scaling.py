# Runtime growth of the two statistics; writes scaling.png next to this file.
from pathlib import Path

import numpy as np
from matplotlib import pyplot as plt

from kstest2d.bench import run_bench

sizes = [100, 200, 400, 800]
report = run_bench(["ff", "peacock"], sizes, replicates=3, seed=0)
print(report.to_csv())

for test in ("ff", "peacock"):
    t = np.array([report.mean(test, n) for n in sizes])
    slope = np.polyfit(np.log(sizes), np.log(t), 1)[0]
    print(f"{test}: log-log slope {slope:.2f}")
    plt.loglog(sizes, t, "o-", label=f"{test} (slope {slope:.1f})")

plt.xlabel("n per sample")
plt.ylabel("mean seconds")
plt.legend()
plt.savefig(Path(__file__).with_name("scaling.png"))
