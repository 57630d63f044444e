"""State-sum invariants of closed triangulated 4-manifolds."""

from .fixtures import (FIXTURES, boundary_delta5, cp2_nine, fixture,
                       refined_delta5, s2_x_s2)
from .invariant import (ContractionLimitError, StateSumError,
                        check_signature, crane_yetter)
from .pachner import PachnerError, pachner_move
from .triangulation import (DuplicateVertexError, HandleCounts,
                            MalformedLineError, NonManifoldError,
                            Triangulation4, TriangulationError,
                            dump_triangulation, handle_counts,
                            load_triangulation)

__all__ = [
    "Triangulation4", "HandleCounts", "TriangulationError",
    "MalformedLineError", "DuplicateVertexError", "NonManifoldError",
    "load_triangulation", "dump_triangulation", "handle_counts",
    "PachnerError", "pachner_move",
    "StateSumError", "ContractionLimitError", "crane_yetter",
    "check_signature",
    "FIXTURES", "fixture", "boundary_delta5", "refined_delta5",
    "cp2_nine", "s2_x_s2",
]
