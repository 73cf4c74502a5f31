"""Delsarte linear-programming bounds for spherical two-distance sets."""

from ._core import (
    CandidateBound,
    DomainError,
    KSlice,
    Q,
    TableRow,
    __version__,
    admissible_interval,
    b_k,
    best_bound,
    build_candidate,
    delsarte_check,
    from_gegenbauer,
    g_upper,
    gegenbauer_eval,
    gegenbauer_poly,
    gram_check,
    independence_rank,
    k_max,
    lambda_params,
    lambda_set,
    omega_hat,
    omega_hat_nk,
    phi,
    profile,
    rho,
    solve_slice,
    table,
    to_gegenbauer,
    verify_two_distance,
)

__all__ = [
    "CandidateBound",
    "DomainError",
    "KSlice",
    "Q",
    "TableRow",
    "__version__",
    "admissible_interval",
    "b_k",
    "best_bound",
    "build_candidate",
    "delsarte_check",
    "from_gegenbauer",
    "g_upper",
    "gegenbauer_eval",
    "gegenbauer_poly",
    "gram_check",
    "independence_rank",
    "k_max",
    "lambda_params",
    "lambda_set",
    "omega_hat",
    "omega_hat_nk",
    "phi",
    "profile",
    "rho",
    "solve_slice",
    "table",
    "to_gegenbauer",
    "verify_two_distance",
]
