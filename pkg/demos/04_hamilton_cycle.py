"""
Streaming and checking the Hamilton cycle
=========================================
"""

import itertools
import time

from middlelevels import HamiltonStream, check_stream, cycle_length, generate

print(list(generate(2)))

for n in range(1, 9):
    report = check_stream(n, generate(n))
    print(report.lines()[0])

# the stream holds no history; throughput on a larger instance
n = 11
stream = HamiltonStream(n)
t0 = time.perf_counter()
for _ in itertools.islice(stream, 1_000_000):
    pass
print(f"n={n}: {cycle_length(n)} vertices, first million in {time.perf_counter() - t0:.2f}s")
