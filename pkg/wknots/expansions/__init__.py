from .alexander_check import (  # noqa: F401
    AlexanderCheckReport,
    PartResult,
    check_alexander_theorem,
    euler_operator,
    predicted_wheels,
    reduce_wheels,
    wheels_exp,
)
from .braid_log import (  # noqa: F401
    BraidInvariantLog,
    RelationCheck,
    RelationReport,
    arrow_derivation,
    braid_z_log,
    check_action_relations,
    check_relations,
    first_difference,
)
from .braid_z import (  # noqa: F401
    BraidInvariantDiagrammatic,
    StrandIndexError,
    braid_product,
    braid_z_diagrammatic,
    delete,
    equal_in_quotient,
    insert,
    is_group_like as braid_is_group_like,
    theta,
    unzip,
)
from .knot_z import (  # noqa: F401
    ExpansionError,
    TruncatedKnotInvariant,
    is_group_like,
    knot_z,
    knot_z_wheels,
    reservoir_key,
)
