"""Integral Chen-Ruan groups of two circle quotients with torsion, and the
matching rational Betti numbers from the h-vector."""

from inertia import circle_action_data, circle_simplex, gamma_group, graded_groups_z, poincare_series_q
from inertia.kirwan import display_degrees

for weights in [(1, 2, 1), (1, 1, 3)]:
    D = circle_action_data(weights)
    P = circle_simplex(weights)
    G = gamma_group(D, P)
    Z = graded_groups_z(D, P, G, 12)
    Q = poincare_series_q(D, P, G, 12)
    print(f"weights {weights}")
    for d in display_degrees(Z, 12):
        print(f"  degree {str(d):5} {Z.describe(d):12} rank over Q: {Q.get(d, 0)}")
    print()
