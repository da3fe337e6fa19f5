"""Sub-Riemannian geometry of the first Heisenberg group under the Koranyi
metric: curvature invariants, exact expansion oracles, and numerical
small-ball measures on curves and surfaces."""

from .core import (
    ORIGIN,
    FrameCoords,
    HPoint,
    contact_form,
    dilate,
    frame_decompose,
    group_inv,
    group_mul,
    j_apply,
    koranyi_dist,
    koranyi_norm,
    rotate,
)
from .jets import Jet, revert, solve_norm_equation, symbol_weight, weighted_degree
from .curves import (
    CurveJet,
    PlanarJet,
    classify_degree,
    curve_from_speed_curvature,
    horizontal_expansion_coeff,
    horizontal_lift,
    horizontal_point_density,
    load_curve,
    measure_series,
    nonhorizontal_expansion_coeff,
    planar_curvature,
    speed_identity_residuals,
    speed_ode_residuals,
    vertical_completion,
)
from .surfaces import (
    CharacteristicPointError,
    GraphSurface,
    PolynomialSurface,
    e1_of_imaginary_curvature,
    graph_quintic_quantity,
    imaginary_curvature,
    load_surface,
    mean_curvature,
    normalize_at_point,
    paraboloid_surface,
    pde_residual,
    quadric_M,
    quadric_flat_test,
    quadric_surface,
    surface_expansion_beta1,
)
from .koranyi import (
    ball_integral,
    gamma_fn,
    monomial_ball_integral,
    nu_K,
    omega_h,
    polar_identity_check,
    sphere_integral,
)
from .measure import (
    FitResult,
    MeasureSample,
    curve_ball_measure,
    density_ratio,
    fit_expansion,
    radius_ladder,
    surface_ball_measure,
    xgraph_ball_measure,
)

__version__ = "0.1.0"
