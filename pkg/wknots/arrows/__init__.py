from .coproduct import coproduct, milnor_moore_dimensions, primitive_dimension  # noqa: F401
from .diagrams import (  # noqa: F401
    CIRCLE,
    LONG_LINE,
    ArrowCalculusError,
    ArrowCombination,
    EnumerationCapError,
    Skeleton,
    SkeletonMismatchError,
    SpaceKind,
    UnsupportedSpaceError,
    close_to_circle,
    concat,
    d_l,
    d_r,
    enumerate_diagrams,
    format_tokens,
    parse_tokens,
)
from .jacobi import (  # noqa: F401
    JacobiBuilder,
    JacobiDiagram,
    STUEliminationError,
    as_relation,
    ihx_relation,
    stu_eliminate,
    tree_jacobi,
    wheel_jacobi,
)
from .quotient import ArrowQuotient, NotInSpanError, get_quotient, graded_dimension, in_relation_span  # noqa: F401
from .relations import relation_vectors  # noqa: F401
from .weights import (  # noqa: F401
    LieAlgebraData,
    LieAlgebraError,
    UIgElement,
    two_dim_algebra,
    weight_system,
)
from .wheels import WheelsPolynomial, d_a_element, wheel_element, wheels_coordinates  # noqa: F401
