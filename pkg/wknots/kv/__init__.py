from .solver import (  # noqa: F401
    KV1Result,
    KVError,
    KVInfeasibleError,
    KVSolution,
    duflo_even_part,
    kernel_dimension,
    solve_kv1,
    solve_kv_full,
)
from .verify import KVCheck, KVReport, verify_kv  # noqa: F401
