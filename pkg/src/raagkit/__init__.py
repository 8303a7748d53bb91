"""Exact computations in right-angled Artin groups, their cube complexes and special cube complexes."""
from .errors import (
    CapExceeded,
    ComplexError,
    GraphError,
    HorizonInsufficient,
    MalformedInput,
    MapError,
    NonGeodesicRay,
    NotNPC,
    NotSpecial,
    PreconditionError,
    RaagError,
    WordError,
)
from .complex import CubeComplex, Edge
from .graph import DefiningGraph, link, load_graph, maximal_cliques, salvetti_complex
from .words import (
    GroupElement,
    Letter,
    ball,
    geodesic_length,
    in_standard_subgroup,
    invert,
    multiply,
    normal_form,
    parse_word,
    support,
)
from .gates import GatePair, StandardCoset, coset_distance, gate_pair, gate_point, grid_check, psi_apply
from .geometry import (
    Hyperplane,
    contact_graph_ball,
    distance,
    dual_hyperplanes,
    hyperplane_of_edge,
    hyperplanes_contact,
    hyperplanes_cross,
    make_hyperplane,
    median,
    separates,
    side,
)
from .invariants import (
    ClassifyingInvariant,
    SymbolSeq,
    act,
    carrier_coset,
    classifying_invariant,
    decide_Fn,
    decide_orbit_equiv,
    tail_equivalent,
)
from .rays import (
    PeriodicRay,
    infinite_label_classes,
    label_spectrum,
    order_consistency_check,
    ray_vertex,
    roller_adjacent,
    separating_hyperplanes,
)
from .special import (
    CombinatorialMap,
    check_special,
    convexity_probe,
    crossing_graph,
    develop_path,
    immersed_hyperplanes,
    pi1_embedding,
    pi1_presentation,
    salvetti_local_isometry,
    verify_local_isometry,
)
from .hyperbolic import delta_estimate, fiber_sample, gromov_boundary_equal, gromov_product

__version__ = "0.1.0"
