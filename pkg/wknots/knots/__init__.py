from .braids import (  # noqa: F401
    BraidError,
    BraidRelation,
    BraidWord,
    Letter,
    StrandMismatchError,
    braid_compose,
    braid_invert,
    compose_perms,
    delete_strand,
    identity_perm,
    insert_strand,
    invert_perm,
    skeleton_perm,
    uc_nonrelations,
    unzip_strand,
    wb_relations,
    word,
)
from .free_group import FreeWord, FreeWordError, braid_act  # noqa: F401
from .gauss import Endpoint, GaussCodeError, GaussDiagram, KnotObjectError, parse_gauss_code, self_linking  # noqa: F401
from .moves import MOVE_KINDS, Move, MoveError, apply_move, find_moves  # noqa: F401
