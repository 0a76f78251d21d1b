"""Fat triangles: the floor(3*Delta/2) bound is attained.

Three vertices, every pair joined by r parallel negative edges. Under the
all-negative signature a coloring is the same thing as a classical edge
coloring, and every two edges of a fat triangle meet, so all 3r edges need
distinct colors.
"""
from signedcolor import chromatic_index, chromatic_upper_bound, shannon_color
from signedcolor.formats import dumps, result_to_dict
from signedcolor.generators import fat_triangle

for r in (1, 2):
    G = fat_triangle(r)
    report = chromatic_index(G)  # exhaustive; fine at 6 edges
    result = shannon_color(G)
    print(f"r={r}: Delta={2 * r}  bound={chromatic_upper_bound(G)}  "
          f"oracle chi={report.chi} (chi0={report.chi0}, chi1={report.chi1})  "
          f"shannon used {result.colors} colors from {result.palette}")

# the pipeline records which branch of the construction fired
G = fat_triangle(2)
result = shannon_color(G)
for line in result.trace:
    print("  ", line)

# half-edge colors of the r=1 case, as the CLI would print them
print(dumps(result_to_dict(fat_triangle(1), shannon_color(fat_triangle(1))))[:400], "...")
