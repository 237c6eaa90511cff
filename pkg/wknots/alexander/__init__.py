from .laurent import AlexanderError, LaurentPoly, bareiss_det, parse_laurent  # noqa: F401
from .matrices import (  # noqa: F401
    AlexanderSeries,
    CrossingMatrices,
    alexander_from_matrix,
    alexander_poly,
    alexander_series,
    crossing_matrices,
)
from .series import PowerSeries, PowerSeriesMatrix, SeriesError  # noqa: F401
