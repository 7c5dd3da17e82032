"""A labeled rectangle: a product of two orbifold spheres.  The torus K has rank
two, so products carry two equivariant parameters."""

from pathlib import Path

from inertia import gamma_group, hcr_presentation, load_input, poincare_series_q
from inertia.checks import run_checks

D, P = load_input((Path(__file__).parent / "inputs" / "rectangle.txt").read_text())
G = gamma_group(D, P)
print(f"K has rank {D.k_rank}, weights {D.weights}")
print(f"{len(G.box)} finite stabilizers generate {len(G)} elements")
H, ker = hcr_presentation(D, P, G)
print("generators:", ", ".join(f"{n} (deg {d})" for n, d in zip(H.names, H.degrees)))
print("kernel:", ", ".join(ker.render()))
print("Betti numbers:", {str(d): n for d, n in poincare_series_q(D, P, G).items()})
for r in run_checks(D, P, G, 12):
    print(f"  {r.name}: {r.passed} passed, {r.failed} failed")
