"""Tautological Hopf algebras of 0-cycles in d-folds.

Exact rational computer algebra for the separated and non-separated
generator families, their coproduct/antipode/primitive-basis structure,
enumerative theories evaluated against them, and the invariant generating
series built from Chern data.
"""

from .rational import Rational, format_rational, parse_rational
from .series import MultiSeries, macmahon_series
from .combinat import (canonical_partition, num_orderings, pad_partition,
                       partitions_of, strip_partition)
from .symfunc import (ChernData, chern_data_from_classes,
                      monomial_to_elementary, parse_chern_arg)
from .hopf import (ContextMismatchError, HopfElement, TensorElement,
                   element_from_obj, element_pretty, element_to_obj,
                   sep_to_nonsep, tensor, tensor_from_obj, tensor_pretty,
                   tensor_to_obj, vertical_element)
from .axioms import random_element, run_axiom_suite
from .theories import (CapError, Theory, ck_theory, coarse_curve_theory,
                       dt_vertex_theory, ek_theory, eval_theory,
                       inertial_theory, mult_class_theory, table_theory,
                       theory_exp, theory_from_spec, theory_log)
from .genfun import (GammaReport, IDENTITY_NAMES, IdentityReport,
                     PoleCancellationError, chern_class_integral,
                     curve_series, gamma_integral_series,
                     nonsep_vertical_series, paired_primitive_series,
                     verify_identity, vertical_series)

__version__ = "0.1.0"

__all__ = [
    "Rational", "format_rational", "parse_rational",
    "MultiSeries", "macmahon_series",
    "canonical_partition", "num_orderings", "pad_partition",
    "partitions_of", "strip_partition",
    "ChernData", "chern_data_from_classes", "monomial_to_elementary",
    "parse_chern_arg",
    "ContextMismatchError", "HopfElement", "TensorElement",
    "element_from_obj", "element_pretty", "element_to_obj",
    "sep_to_nonsep", "tensor", "tensor_from_obj", "tensor_pretty",
    "tensor_to_obj", "vertical_element",
    "random_element", "run_axiom_suite",
    "CapError", "Theory", "ck_theory", "coarse_curve_theory",
    "dt_vertex_theory", "ek_theory", "eval_theory", "inertial_theory",
    "mult_class_theory", "table_theory", "theory_exp", "theory_from_spec",
    "theory_log",
    "GammaReport", "IDENTITY_NAMES", "IdentityReport",
    "PoleCancellationError", "chern_class_integral", "curve_series",
    "gamma_integral_series", "nonsep_vertical_series",
    "paired_primitive_series", "verify_identity", "vertical_series",
    "__version__",
]
