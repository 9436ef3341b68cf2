"""Look for scenes with many overlaps and draw the best one.

Random sampling rarely finds more than a couple of overlaps, which is why
the explicit constructions matter.  Hill climbing from a construction can
only keep or raise its count.  Every scene visited is checked against the
upper bounds; a violation would stop the search.
"""
import sys
from pathlib import Path

from polyoverlap import convex_pair, hill_climb, random_search, render_svg

res = random_search(6, 5, trials=2000, seed=3)
print(f"random search n=6 m=5: best {res.best_count} overlaps in {res.trials} trials")

climb = hill_climb(convex_pair(7, 4), budget=300, seed=3, convex_q=True)
print(f"hill climb from convex n=7 m=4: best {climb.best_count}")

out = Path(sys.argv[1] if len(sys.argv) > 1 else "best.svg")
out.write_text(render_svg(res.best_scene))
print("drew", out)
