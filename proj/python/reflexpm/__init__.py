"""Discrete polymatroids, lattice sublattices and reflexive independence polytopes.

Inputs and outputs are plain JSON-shaped values, e.g. a set family
``{"d": 2, "sets": [[], [2], [1, 2]]}`` or a rank function
``{"d": 2, "values": [0, 3, 2, 3]}`` indexed by subset bitmask.
"""

from ._core import (
    CapabilityError,
    Error,
    InputError,
    InternalError,
    VerificationError,
    classify,
    enumerate_sublattices,
    facet_family,
    find_transversal,
    independence_hrep,
    is_discrete_polymatroid,
    is_reflexive_direct,
    is_reflexive_lemma,
    is_sublattice,
    lattice_closure,
    points_of_rank,
    rank_from_sublattice,
    rank_of_points,
    sublattice_audit,
    sweep,
    transversal_rank,
    validate_rank,
    verify,
    vertices,
)

__all__ = [
    "CapabilityError",
    "Error",
    "InputError",
    "InternalError",
    "VerificationError",
    "classify",
    "enumerate_sublattices",
    "facet_family",
    "find_transversal",
    "independence_hrep",
    "is_discrete_polymatroid",
    "is_reflexive_direct",
    "is_reflexive_lemma",
    "is_sublattice",
    "lattice_closure",
    "points_of_rank",
    "rank_from_sublattice",
    "rank_of_points",
    "sublattice_audit",
    "sweep",
    "transversal_rank",
    "validate_rank",
    "verify",
    "vertices",
]
