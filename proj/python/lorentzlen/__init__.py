"""Verification toolkit for Lorentzian pre-length spaces."""

from ._lorentzlen import (  # noqa: F401
    Space,
    __version__,
    build_exemplar,
    check,
    check_TC,
    check_curvature_bound,
    check_extension,
    check_size_bounds,
    compute_T,
    cross_check_inextendibility,
    detect_branching,
    find_maximal_curve,
    is_geodesic,
    load_space,
    realize_triangle,
    save_space,
    singularity_sweep,
    sprinkle,
    tau_length,
    tau_model,
)
