"""Taxicab distance mean functions and their use in geometric and discrete tomography."""

from taxitomo.geometry import (
    InvalidInput,
    Polygon,
    SeededRng,
    Triangulation,
    point_in_polygon,
    polygon_area,
    sample_uniform,
    triangulate,
)
from taxitomo.distmean import (
    PiecewiseLinearProfile,
    coordinate_xray,
    cumulative_area,
    distmean_eval,
    distmean_gradient,
)
from taxitomo.bisection import (
    BisectionRun,
    StepSchedule,
    bisect_exact,
    bisect_stochastic,
    sign_step,
)
from taxitomo.discrete import (
    BinaryMatrix,
    FlowNetwork,
    SumVectors,
    apply_switching_chain,
    brute_force_solutions,
    build_network,
    discrete_distance_sum,
    discrete_xrays,
    distance_sum_matrix,
    distance_sum_via_xrays,
    find_switching_chain,
    lav_fill,
    max_flow,
    mirsky_feasible,
    one_sided_partials,
    reconstruct,
)
from taxitomo.gridrecon import (
    ControlGrid,
    GridSet,
    StepXRay,
    bounding_box,
    greedy_reconstruct,
    gridset_distmean,
    is_connected,
    is_hv_convex,
    target_values,
)

__version__ = "0.1.0"
