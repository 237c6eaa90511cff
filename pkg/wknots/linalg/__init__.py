from .sparse import (  # noqa: F401
    DimensionMismatchError,
    LinalgError,
    PrimeField,
    RankIndeterminateError,
    RationalField,
    RowReducer,
    SparseMatrix,
    quotient_dim,
    rank,
    rank_of_rows,
    solve_in_span,
    solve_linear_system,
    sparsest_point,
)
