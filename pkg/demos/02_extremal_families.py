"""Build the scenes with many overlaps and check their counts.

Two interleaved combs give floor(n/2) * floor(m/2) overlaps.  When one
polygon must be convex the best possible count is much smaller, and the
convex family meets it exactly.
"""
from polyoverlap import convex_pair, convex_value, count_components, saw_pair, special_pair

print("interleaved combs")
for n, m in [(4, 4), (6, 5), (8, 8), (12, 9)]:
    got = count_components(saw_pair(n, m))
    print(f"  n={n:2d} m={m:2d}: {got:3d} overlaps (floor product {(n // 2) * (m // 2)})")

print("convex partner")
for n, m in [(5, 3), (7, 5), (9, 5), (12, 4)]:
    got = count_components(convex_pair(n, m))
    print(f"  n={n:2d} m={m:2d}: {got:3d} overlaps (optimum {convex_value(n, m)})")

print("small fixed scenes")
for kind in ("special53", "special44", "special55"):
    s = special_pair(kind)
    print(f"  {kind}: n={s.n} m={s.m}, {count_components(s)} overlaps")
