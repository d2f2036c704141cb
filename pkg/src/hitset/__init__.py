"""Online hitting set for points against translated unit disks and
regular unit k-gons (k >= 4), with the matching adversarial lower-bound
game, an exact offline optimum and the set-cover dualization."""

from . import _kernels
from .adversary import (AdversaryInstance, EngineResponder,
                        FirstPointResponder, GameTranscript, build_instance,
                        play)
from .dual import DualInstance, dualize, incidence_matrix
from .extreme import (ExtremeStructure, build_extreme_structure,
                      direction_angle, in_strict_cell, is_extreme)
from .geometry import (PlacedObject, Point, Shape, boundary_components,
                       contains, convex_distance, polygon_params, reflect,
                       support_radius)
from .offline import (SetSystem, exact_min_hitting_set, greedy_hitting_set,
                      to_set_system)
from .online import (HittingState, ProcessResult, is_stabbed, new_state,
                     process, solution)
from .ranking import Ranking, max_color_in_interval, ruler_ranking, verify_ranking
from .tiling import (Cone, Grid, SuperSquare, build_grid, cone_of, quad_of,
                     quadrant_centers, tile_of, tiles_intersected)

__version__ = "0.1.0"


def backend_name() -> str:
    """Which kernel backend is active: "compiled" or "pure"."""
    return _kernels.BACKEND
