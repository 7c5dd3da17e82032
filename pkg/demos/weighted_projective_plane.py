"""Walk through P(1,2,3): twisted sectors, the twisted product, its
obstruction-bundle form, and the Chen-Ruan ring."""

from inertia import (
    circle_action_data,
    circle_simplex,
    gamma_group,
    hcr_presentation,
    nh_presentation,
    poincare_series_q,
    res_monomial,
    smile_structure_constant,
    star_structure_constant,
)
from inertia.inertial_ring import smile_factors
from inertia.sectors import element_name

weights = (1, 2, 3)
D = circle_action_data(weights)
P = circle_simplex(weights)
G = gamma_group(D, P)

print(f"S^1 acting on C^3 with weights {weights}; Gamma has {len(G)} elements\n")
print("g      logweights         2*age  box  res(y_g)")
for s in G.gamma:
    a = "(" + ", ".join(str(x) for x in s.g.a) + ")"
    print(f"{element_name(D, s.g):6} {a:18} {str(2 * s.age):6} {'yes' if s.in_box else 'no':4} {res_monomial(D, s.g).render(['u'])}")

def times(c, y):
    c = c.render(["u"])
    return c if y == "1" else y if c == "1" else f"{c}*{y}"


R = nh_presentation(D, G)
name = {g: R.render(p) for g, p in R.sector_images.items()}
print("\nProducts, computed twice:")
for i, s in enumerate(G.twisted):
    for t in G.twisted[i:]:
        gh, c = star_structure_constant(D, s.g, t.g)
        eps, f = smile_factors(D, s.g, t.g)
        assert smile_structure_constant(D, s.g, t.g) == (gh, c)
        print(f"  {name[s.g]} * {name[t.g]} = {times(c, name[gh])}    (obstruction {eps.render(['u'])}, normal {f.render(['u'])})")

H, ker = hcr_presentation(D, P, G)
print("\nKirwan kernel:", ", ".join(ker.render()))
print("Chen-Ruan ring:", H.describe())
series = poincare_series_q(D, P, G)
print("Betti numbers by degree:", {str(d): n for d, n in series.items()})
