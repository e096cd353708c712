"""Breaking points in posets of subgroups of small finite groups."""

from .catalog import corpus, fingerprint, make
from .group import GroupTable, Permutation, SubgroupSet, validate_table
from .posets import analyze, breaking_points, conjugacy_classes_of_cyclic, cyclic_subgroups
from .presentation import parse_presentation, todd_coxeter
from .verify import check_group, run_corpus, search_cbar

__all__ = [
    "GroupTable",
    "Permutation",
    "SubgroupSet",
    "analyze",
    "breaking_points",
    "check_group",
    "conjugacy_classes_of_cyclic",
    "corpus",
    "cyclic_subgroups",
    "fingerprint",
    "make",
    "parse_presentation",
    "run_corpus",
    "search_cbar",
    "todd_coxeter",
    "validate_table",
]
