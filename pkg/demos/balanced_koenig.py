"""Balanced signed graphs need Delta or Delta+1 colors.

Delta colors suffice exactly when some matching covers every vertex of
maximum degree (trivially so when Delta is even). A cubic graph without a
perfect matching is the smallest kind of witness that Delta+1 is needed.
"""
import random

from signedcolor import chromatic_index, koenig_color, koenig_is_delta
from signedcolor.generators import complete, cubic_without_perfect_matching, random_balanced

K4 = complete(4)
r = koenig_color(K4)
print("K4:", r.colors, "colors;", r.trace[0])
print("   0_1 class:", sorted(r.coloring.color_class(1, True)))

cubic = cubic_without_perfect_matching()
exact, M = koenig_is_delta(cubic)
r = koenig_color(cubic)
print(f"cubic, 10 vertices: covering matching exists={exact}; koenig used {r.colors}; "
      f"oracle chi={chromatic_index(cubic).chi}")

# a quick census: odd maximum degree is where the covering matching matters
rng = random.Random(0)
tally = {"Delta even": 0, "Delta odd, covered": 0, "Delta odd, not covered": 0}
for _ in range(500):
    G = random_balanced(rng, 6, 10)
    if not G.edges:
        continue
    delta = max(G.degree(v) for v in G.vertices)
    exact, _ = koenig_is_delta(G)
    if delta % 2 == 0:
        tally["Delta even"] += 1
    else:
        tally["Delta odd, covered" if exact else "Delta odd, not covered"] += 1
print("random balanced graphs:", tally)
