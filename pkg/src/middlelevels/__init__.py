"""Hamilton cycles in the middle levels of odd-dimensional hypercubes.

The cycle is built from a cycle factor indexed by plane trees, whose
cycles are joined by local 6-cycle gluings chosen along star reductions.
"""

from .bits import (
    MiddleLevelsInstance,
    Triple,
    dyck_decompose,
    dyck_words,
    is_dyck,
    rotate_right,
    triple_decode,
    triple_encode,
    weight,
)
from .factor import FactorCycle, cycle_of, enumerate_classes, f_inverse, f_map
from .gluing import (
    GluingCycle,
    GluingPlan,
    PlanError,
    ReductionTrace,
    build_gluing_plan,
    choose_center,
    gluing_cycle,
    load_plan,
    overrides_of,
    reduce_to_star,
    save_plan,
)
from .hamilton import HamiltonStream, cycle_length, generate, successor
from .tree import (
    OrderedTree,
    canonical_of,
    dyck_from_tree,
    is_pullable,
    pull,
    rotate_labeled,
    rotate_word,
    rotate_word_inverse,
    rotation_period,
    tree_from_dyck,
)
from .verify import brute_force_hamilton, check_all_lemmas, check_stream

__version__ = "0.1.0"
