"""Link patterns, the Temperley-Lieb action and the Catalan generating tree."""

from .counting import catalan, count_by_exposure, count_by_interaction, histogram
from .dyck import DyckPath, last_descent_length, peaks
from .family import Family
from .patterns import (
    ArcDiagram,
    LinkPattern,
    delete_strand,
    exposure,
    insert_strand,
    linearize,
    make_link_pattern,
    rotate,
)
from .perms import Perm123
from .stats import convert, interaction
from .temperley_lieb import apply_generator, apply_word, check_relations, preimages
from .tree import (
    children,
    child_rank,
    iterate_level,
    label,
    m_op,
    node_at,
    parent,
    path_code,
    tree_root,
)

__version__ = "0.1.0"
