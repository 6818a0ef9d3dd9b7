"""Finite groups with exactly three involutions, all conjugate."""

from .classification import (Case1, Case2, Case3, NotPyramidal, PyramidalReport, classify,
                             involutions, is_3_pyramidal_definition, lemma21_predicates)
from .families import (load_reference, make_homocyclic_case3, make_s3_times_h,
                       make_suzuki64_case2, resolve)
from .kernel import Group, closure_from_generators, element_order, order_statistics

__version__ = "0.1.0"
