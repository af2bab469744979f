from grassvol._core import (
    all_check_ids,
    character,
    chart_count,
    chart_point,
    circle_loop,
    clock_shift,
    cnot,
    det_lambda,
    diagonalize_shift_error,
    direct_controlled,
    f1_from_repeated_cnot,
    f_matrix,
    flag_descriptor,
    flag_volume,
    gate_count_table,
    grassmann_volume,
    grover_reflections,
    holonomy,
    in_kernel,
    latitude_loop,
    mc_volume,
    projective_volume_quadrature,
    repeated_cnot,
    run_checks,
    special_projection,
    spectral_decompose,
    spectral_type,
    sphere_volume,
    synthesize_cccu,
    synthesize_ccu,
    unitary_root,
    unitary_volume,
    vandermonde_w,
    volume_density,
    walsh_power,
)

__all__ = [
    "all_check_ids",
    "character",
    "chart_count",
    "chart_point",
    "circle_loop",
    "clock_shift",
    "cnot",
    "det_lambda",
    "diagonalize_shift_error",
    "direct_controlled",
    "f1_from_repeated_cnot",
    "f_matrix",
    "flag_descriptor",
    "flag_volume",
    "gate_count_table",
    "grassmann_volume",
    "grover_reflections",
    "holonomy",
    "in_kernel",
    "latitude_loop",
    "mc_volume",
    "projective_volume_quadrature",
    "repeated_cnot",
    "run_checks",
    "special_projection",
    "spectral_decompose",
    "spectral_type",
    "sphere_volume",
    "synthesize_cccu",
    "synthesize_ccu",
    "unitary_root",
    "unitary_volume",
    "vandermonde_w",
    "volume_density",
    "walsh_power",
]
