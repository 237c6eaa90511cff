from .cyclic import TrElement, delta_tilde, min_rotation  # noqa: F401
from .lie import (  # noqa: F401
    LieElement,
    assoc_embed,
    bch,
    bch_in,
    dynkin_projection,
    from_assoc,
    lie_bracket,
    lie_evaluate,
    lie_exp,
    lie_log,
    lyndon_basis,
    lyndon_words,
)
from .semidirect import (  # noqa: F401
    SemidirectElement,
    j_exp,
    l_split,
    semidirect_bch,
    semidirect_bracket,
    tder_bch,
    u_split,
)
from .tder import (  # noqa: F401
    TDerElement,
    apply_assoc,
    beta,
    div,
    exp_act_tr,
    exp_derivation_action,
    swap_strands,
    tder_act_tr,
    tder_apply,
    tder_bracket,
)
from .words import AssocElement, ATSpaceError, TruncationMismatchError, assoc_exp, assoc_log  # noqa: F401
