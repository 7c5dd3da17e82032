"""Finite stabilizers of the maximal torus on flag manifolds: special classes
from the affine Dynkin diagram and the group they generate."""

import sys

from inertia import gamma_flag, root_system_data, special_classes

for name in sys.argv[1:] or ["G2", "B2", "A2"]:
    R = root_system_data(name)
    T = special_classes(R)
    print(f"{R.name}: marks {R.marks}, |W| = {R.weyl_order}")
    for c in T.entries:
        x = ", ".join(str(v) for v in c.alcove_vertex)
        print(f"  vertex {c.vertex}: x = ({x}), order {c.adjoint_order}, centralizer {c.centralizer_name} ({c.centralizer_type}), {c.component_count} component(s)")
    F = gamma_flag(R, T)
    print(f"  generated group {F.describe()} of order {F.order}, {F.stabilizer_count} finite stabilizers\n")
