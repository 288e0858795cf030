"""pathalg: rewriting, completion and bimodule resolutions over path
algebras.

The pipeline: describe a quiver and a reduction system (or raw ideal
generators plus a monomial order), complete it until every overlap
resolves, enumerate its ambiguities, and build and verify the projective
bimodule resolution those ambiguities index.  See the README for the CLI
and the module map.
"""

__version__ = "0.1.0"

from .ambiguities import Ambiguity, AmbiguityEnumerator
from .completion import (CompletionResult, DiamondReport, Overlap,
                         check_diamond, complete, complete_generators,
                         overlaps, resolve_overlap)
from .errors import PathAlgError
from .fields import Field, Scalar
from .order import WeightedDeglex, minimal_tips, reaches, tip
from .quiver import Path, PathPoly, Quiver, concat, divisors
from .resolution import Resolution, koszul_report, splitting_map, trace_map
from .rewrite import (LEFTMOST, RIGHTMOST, BasicReduction, ReductionSystem,
                      ReductionTrace, apply_basic)
from .tensor import (FREE, REDUCED, TensorElt, bardzell_map, include,
                     project, project_monomial, skoldberg_map, unit_tensor)

__all__ = [
    "Ambiguity", "AmbiguityEnumerator", "BasicReduction",
    "CompletionResult", "DiamondReport", "Field", "FREE", "LEFTMOST",
    "Overlap", "Path", "PathAlgError", "PathPoly", "Quiver", "REDUCED",
    "ReductionSystem", "ReductionTrace", "Resolution", "RIGHTMOST",
    "Scalar", "TensorElt", "WeightedDeglex", "apply_basic", "bardzell_map",
    "check_diamond", "complete", "complete_generators", "concat",
    "divisors", "include", "koszul_report", "minimal_tips", "overlaps",
    "project", "project_monomial", "reaches", "resolve_overlap",
    "skoldberg_map", "splitting_map", "tip", "trace_map", "unit_tensor",
]
