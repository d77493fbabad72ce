"""Combinatorial self-similarities of finite semimetric spaces."""
from .classifier import (
    Classification,
    classify,
    cs_equals_sym_structural,
    has_equilateral_triangle,
    is_discrete,
    is_rectangle_type,
    is_strongly_rigid,
    is_weakly_rigid,
    theorem_crosscheck,
    three_point_subspaces_all_isometric,
)
from .errors import *  # noqa: F401,F403
from .generators import (
    PatternId,
    discrete_space,
    enumerate_patterns,
    pseudolinear,
    random_space,
    rectangle_example,
    space_from_pattern,
    strongly_rigid_space,
)
from .perm import (
    PermGroup,
    Permutation,
    all_permutations,
    compose,
    group_from_elements,
    inverse,
    is_symmetric_group,
)
from .similarity import (
    SimilarityWitness,
    ValueBijection,
    are_combinatorially_similar,
    induced_value_map,
    is_isometry,
    is_weak_similarity,
    self_isometry_group,
    self_similarity_group,
)
from .space import (
    EqualityPattern,
    SemimetricSpace,
    equality_pattern,
    parse_space,
    pattern_fingerprint,
    serialize_space,
    subspace,
    value_set,
)

__version__ = "0.1.0"
