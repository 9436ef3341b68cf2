"""Turn a degenerate scene into one in general position.

Two unit squares sharing a side violate general position in several ways.
The engine refuses them; the perturbation routine slides side lines by
small dyadic amounts until every violation is gone, never losing an
overlap, and writes a certificate that can be checked independently.
"""
from polyoverlap import DegenerateSceneError, Scene, count_components, resolve_degeneracies, verify_certificate

P = [(0, 0), (2, 0), (2, 2), (0, 2)]
Q_corner = [(2, 1), (4, 0), (4, 3)]
Q_side = [(2, 0), (4, 0), (4, 2), (2, 2)]

for label, q in (("corner on a side", Q_corner), ("shared side", Q_side)):
    try:
        count_components(Scene.from_points(P, q))
        print(f"{label}: already in general position?")
    except DegenerateSceneError as exc:
        print(f"{label}: refused with {len(exc.violations)} violation(s)")
        for v in exc.violations[:3]:
            print("   ", v.describe())
    cert = resolve_degeneracies(P, q)
    print(f"  {len(cert.steps)} step(s):", ", ".join(f"{d.polygon}{d.side} by {d.offset}" for d in cert.steps))
    print(f"  open overlaps before {cert.count_before}, after {cert.count_after}")
    print(f"  certificate verified: {verify_certificate(cert)}")
