"""Inertial cohomology, Chen-Ruan cohomology of toric orbifold quotients, and
finite stabilizers on flag manifolds, computed exactly."""

from .delzant import CircleAction, DelzantData, circle_action_data, circle_simplex, delzant_lift, load_input
from .errors import InputError, UnsupportedError
from .exact_algebra import (
    GradedAbelianGroup,
    IntegerMatrix,
    cokernel_structure,
    graded_slice_group,
    lattice_coset_reps,
    smith_normal_form,
)
from .flag import gamma_flag, root_system_data, special_classes
from .inertial_ring import (
    RingPresentation,
    StructureConstants,
    WeightMonomial,
    nary_star_exponents,
    nh_presentation,
    res_monomial,
    smile_structure_constant,
    star_exponents,
    star_structure_constant,
    structure_constants,
)
from .kirwan import (
    KernelIdeal,
    StanleyReisnerPresentation,
    graded_groups_z,
    hcr_presentation,
    kirwan_kernel_generators,
    poincare_series_q,
    stanley_reisner,
)
from .polytope import Face, Facet, LabeledPolytope, enumerate_faces, face_from_facets, h_vector, make_polytope
from .sectors import GammaTable, LogweightVector, SectorData, enumerate_box, gamma_group, sector_data, stabilizer_of_face

__version__ = "0.1.0"
