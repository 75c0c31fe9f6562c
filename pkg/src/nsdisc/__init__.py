"""Neighbourhood-sequence distances, digital discs on the square grid, and
the octagons that best approximate a Euclidean circle."""

from .approx import (
    ApproximationMethod,
    ApproximationResult,
    best_sequence,
    canonical_sequence,
    coefficient_table,
    ideal_sidelength,
    sweep_series,
)
from .ns_core import (
    DigitalDisc,
    NeighbourhoodSequence,
    Point,
    distance_map,
    generate_disc,
    is_j_neighbour,
    is_valid_path,
    ns_distance,
    ns_distance_bfs,
    sequence_element,
)
from .octagon import (
    DescriptorKind,
    OctagonDescriptor,
    describe,
    invert_sidelength,
    isoperimetric_ratio,
    kappa_of_c,
    limit_frequency,
    optimal_c,
)

__version__ = "0.1.0"
