# tests/test_expansions.py
from fractions import Fraction

import pytest

from wknots.arrows import LONG_LINE, ArrowCombination, SpaceKind, get_quotient
from wknots.at import u_split
from wknots.expansions import (
    ExpansionError,
    StrandIndexError,
    arrow_derivation,
    braid_is_group_like,
    braid_z_diagrammatic,
    braid_z_log,
    check_action_relations,
    check_alexander_theorem,
    check_relations,
    delete,
    equal_in_quotient,
    first_difference,
    insert,
    is_group_like,
    knot_z,
    knot_z_wheels,
    reservoir_key,
    theta,
    unzip,
)
from wknots.knots import (
    BraidWord,
    Move,
    apply_move,
    braid_invert,
    delete_strand,
    find_moves,
    insert_strand,
    parse_gauss_code,
    self_linking,
    unzip_strand,
    word,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
EIGHT_SEVENTEEN = "U1- O2- U3- O4- U5+ O6+ U2- O3- U7+ O8+ U4- O1- U6+ O7+ U8+ O5+"

BRAIDS = [
    ("p1", "m2", "v1"),
    ("p1", "p2"),
    ("m1", "v2", "p1", "p2"),
]


def equal_in_sw(a: ArrowCombination, b: ArrowCombination, degree: int) -> bool:
    diff = a - b
    return all(get_quotient(LONG_LINE, SpaceKind.SW, m).contains(diff) for m in range(degree + 1))


# -------------------------------
# Knots
# -------------------------------


def test_empty_diagram_gives_unit():
    z = knot_z(parse_gauss_code(""), 3)
    assert z.value == ArrowCombination.unit(LONG_LINE, 3)
    assert knot_z_wheels(parse_gauss_code(""), 3).terms == {(): 1}


def test_kink_degree_one():
    z = knot_z(parse_gauss_code("O1+ U1+"), 1)
    assert z.value.terms == {(): 1, (1, -1): 1}
    assert z.self_linking == 1


def test_reservoir_coefficients():
    k = parse_gauss_code("O1- U1-")
    z = knot_z(k, 3)
    assert z.value.terms[reservoir_key(k, (2,))] == Fraction(1, 2)
    assert z.value.terms[reservoir_key(k, (3,))] == Fraction(-1, 6)


def test_reservoir_copies_are_nested():
    k = parse_gauss_code("O1+ U1+")
    assert reservoir_key(k, (2,)) == (1, 2, -2, -1)


def test_degree_guards(restore_settings):
    with pytest.raises(ExpansionError):
        knot_z(parse_gauss_code(TREFOIL), -1)
    restore_settings.max_knot_degree = 2
    with pytest.raises(ExpansionError):
        knot_z(parse_gauss_code(TREFOIL), 3)
    with pytest.raises(ExpansionError):
        knot_z(parse_gauss_code(TREFOIL), 2, semivirtual=[4])


def test_r2_pair_is_trivial_in_the_quotient():
    z = knot_z(parse_gauss_code("O1+ O2- U1+ U2-"), 3)
    assert equal_in_sw(z.value, ArrowCombination.unit(LONG_LINE, 3), 3)


def test_invariance_under_moves():
    k = apply_move(parse_gauss_code(TREFOIL), Move("R2-insert", (0, 3)))
    base = knot_z(k, 2).value
    moves = find_moves(k, "OC") + find_moves(k, "R2-delete")
    assert moves
    for m in moves:
        assert equal_in_sw(knot_z(apply_move(k, m), 2).value, base, 2), m


def test_invariance_under_r3():
    k = parse_gauss_code("O1+ O2+ U1+ O3+ U2+ U3+")
    base = knot_z(k, 2).value
    for m in find_moves(k, "R3"):
        assert equal_in_sw(knot_z(apply_move(k, m), 2).value, base, 2)


def test_semivirtual_lowest_term():
    k = parse_gauss_code(TREFOIL)
    z = knot_z(k, 3, semivirtual=[1, 2])
    assert not z.graded_part(0)
    assert not z.graded_part(1)
    assert z.graded_part(2).terms == {reservoir_key(k, (1, 1, 0)): 1}


def test_corpus_is_group_like(corpus):
    for name, entry in corpus.items():
        assert is_group_like(knot_z(entry.diagram, 3)), name


def test_sum_of_two_parts_is_not_group_like():
    z = knot_z(parse_gauss_code(TREFOIL), 2)
    broken = type(z)(z.degree, z.value + z.value.graded_part(2), z.self_linking)
    assert not is_group_like(broken)


def test_wheels_degree_one_is_self_linking(corpus):
    for name, entry in corpus.items():
        w = knot_z_wheels(entry.diagram, 2)
        assert w.coefficient((1,)) == self_linking(entry.diagram), name


# -------------------------------
# Alexander theorem
# -------------------------------


def test_alexander_check_empty():
    report = check_alexander_theorem(parse_gauss_code(""), 3)
    assert report.passed
    assert report.polynomial == "1"


def test_alexander_check_trefoil_degree_three():
    report = check_alexander_theorem(parse_gauss_code(TREFOIL), 3, euler=True)
    assert report.part("wheels").passed
    assert report.part("reduced").passed
    assert report.part("euler").passed


def test_alexander_check_non_symmetric_polynomial():
    # A = 2X^-1 - X^-2 has no symmetric unit multiple
    report = check_alexander_theorem(parse_gauss_code("O1+ U2- U1+ O2-"), 3, euler=True)
    assert report.passed


@pytest.mark.slow
def test_alexander_check_trefoil_degree_four():
    assert check_alexander_theorem(parse_gauss_code(TREFOIL), 4).passed


def test_alexander_check_eight_seventeen():
    report = check_alexander_theorem(parse_gauss_code(EIGHT_SEVENTEEN), 3)
    assert report.passed
    assert report.self_linking == self_linking(parse_gauss_code(EIGHT_SEVENTEEN))


@pytest.mark.slow
def test_alexander_check_corpus(corpus):
    for name, entry in corpus.items():
        assert check_alexander_theorem(entry.diagram, 3, euler=True).passed, name


# -------------------------------
# Diagrammatic braid expansion
# -------------------------------


def test_identity_braid():
    z = braid_z_diagrammatic(BraidWord.identity(2), 2)
    assert z.perm == (1, 2)
    assert z.pure.terms == {(): 1}


def test_single_crossing_reservoir():
    z = braid_z_diagrammatic(word(2, "p1"), 2)
    a = (1, 2)
    assert z.pure.terms == {(): 1, (a,): 1, (a, a): Fraction(1, 2)}
    assert z.perm == (2, 1)


def test_inverse_crossing_uses_reverse_arrow():
    z = braid_z_diagrammatic(word(2, "m1"), 1)
    assert z.pure.terms == {(): 1, ((2, 1),): -1}


def test_product_matches_concatenation():
    x = braid_z_diagrammatic(word(3, "p1", "v2"), 3)
    y = braid_z_diagrammatic(word(3, "m1", "p2"), 3)
    assert x * y == braid_z_diagrammatic(word(3, "p1", "v2", "m1", "p2"), 3)


@pytest.mark.parametrize("letters", BRAIDS)
def test_theta_is_inversion(letters):
    b = word(3, *letters)
    assert theta(braid_z_diagrammatic(b, 3)) == braid_z_diagrammatic(braid_invert(b), 3)


@pytest.mark.parametrize("letters", BRAIDS)
def test_delete_commutes_with_z(letters):
    b = word(3, *letters)
    z = braid_z_diagrammatic(b, 3)
    for k in (1, 2, 3):
        assert delete(z, k) == braid_z_diagrammatic(delete_strand(b, k), 3), k


@pytest.mark.parametrize("letters", BRAIDS)
def test_insert_commutes_with_z(letters):
    b = word(3, *letters)
    z = braid_z_diagrammatic(b, 3)
    for k in (1, 4):
        assert insert(z, k) == braid_z_diagrammatic(insert_strand(b, k), 3), k


@pytest.mark.parametrize("letters", BRAIDS)
def test_braid_expansion_is_group_like(letters):
    assert braid_is_group_like(braid_z_diagrammatic(word(3, *letters), 3))


def test_strand_index_errors():
    z = braid_z_diagrammatic(word(2, "p1"), 2)
    with pytest.raises(StrandIndexError):
        delete(z, 3)
    with pytest.raises(StrandIndexError):
        unzip(z, 0)
    with pytest.raises(StrandIndexError):
        insert(z, 4)


def test_unzip_does_not_commute_with_z():
    b = word(2, "p1")
    lhs = unzip(braid_z_diagrammatic(b, 2), 1)
    rhs = braid_z_diagrammatic(unzip_strand(b, 1), 2)
    assert lhs.perm == rhs.perm == (2, 3, 1)
    assert equal_in_quotient(lhs, rhs, degree=1)
    assert not equal_in_quotient(lhs, rhs, degree=2)


# -------------------------------
# Semidirect braid expansion
# -------------------------------


def test_identity_braid_log():
    assert not braid_z_log(BraidWord.identity(3), 3).log


def test_repeated_arrow():
    inv = braid_z_log(word(2, "p1", "v1", "p1", "v1"), 2)
    assert inv.perm == (1, 2)
    assert inv.log == u_split(arrow_derivation(2, 2, 1, 2)).scale(2)


def test_square_of_a_crossing_uses_both_arrows():
    # the second crossing has strand 2 on top
    inv = braid_z_log(word(2, "p1", "p1"), 2)
    a12 = u_split(arrow_derivation(2, 2, 1, 2))
    a21 = u_split(arrow_derivation(2, 2, 2, 1))
    assert inv.perm == (1, 2)
    assert inv.log.graded_part(1) == (a12 + a21).graded_part(1)


def test_r3_words_agree():
    lhs = braid_z_log(word(3, "p1", "p2", "p1"), 4)
    rhs = braid_z_log(word(3, "p2", "p1", "p2"), 4)
    assert first_difference(lhs, rhs) is None


def test_splits_agree_on_arrows():
    b = word(3, "p1", "m2", "p1", "v2")
    assert braid_z_log(b, 3, split="l").log == braid_z_log(b, 3).log


def test_unknown_split():
    with pytest.raises(ExpansionError):
        braid_z_log(word(2, "p1"), 2, split="x")


def test_pure_braids_are_separated():
    words = [
        ("p1", "v1"),
        ("v1", "p1"),
        ("p1", "p1"),
        ("p2", "p2"),
        ("v1", "p2", "p2", "v1"),
    ]
    logs = [braid_z_log(word(3, *w), 3) for w in words]
    for i in range(len(logs)):
        for j in range(i + 1, len(logs)):
            assert first_difference(logs[i], logs[j]) is not None, (words[i], words[j])


def test_permutation_difference():
    diff = first_difference(braid_z_log(word(2, "p1"), 2), braid_z_log(word(2, "p1", "p1"), 2))
    assert diff == "permutation"


# -------------------------------
# Relation catalogues
# -------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_action_relations(n):
    report = check_action_relations(n)
    assert report.passed
    for c in report.checks:
        assert c.holds == (not c.name.startswith("UC"))


@pytest.mark.parametrize("n", [2, 3])
def test_log_relations(n):
    report = check_relations(n, 3)
    assert report.passed
    if n == 3:
        uc = report.check("UC 1")
        assert not uc.holds
        assert uc.witness is not None


@pytest.mark.slow
def test_log_relations_four_strands_degree_six():
    assert check_relations(4, 6).passed


def test_relation_checks_need_two_strands():
    with pytest.raises(ExpansionError):
        check_relations(1, 2)
    with pytest.raises(ExpansionError):
        check_action_relations(1)
