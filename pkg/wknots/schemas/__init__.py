from .algebra import CombinationModel, KVSolutionModel, WheelsPolynomialModel, check_rational  # noqa: F401
from .reports import (  # noqa: F401
    AlexanderCheckModel,
    AlexanderPartModel,
    BraidRelationReportModel,
    DimensionRowModel,
    KVCheckModel,
    KVReportModel,
    RelationCheckModel,
)
