# tests/test_knots.py
import pytest

from wknots.knots import (
    BraidError,
    BraidWord,
    FreeWord,
    FreeWordError,
    GaussCodeError,
    GaussDiagram,
    Move,
    MoveError,
    StrandMismatchError,
    apply_move,
    braid_act,
    braid_invert,
    compose_perms,
    delete_strand,
    find_moves,
    identity_perm,
    insert_strand,
    parse_gauss_code,
    self_linking,
    skeleton_perm,
    uc_nonrelations,
    unzip_strand,
    wb_relations,
    word,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


# -------------------------------
# Gauss codes
# -------------------------------


def test_parse_empty_and_kink():
    assert parse_gauss_code("").n_crossings == 0
    kink = parse_gauss_code("O1+ U1+")
    assert kink.n_crossings == 1
    assert self_linking(kink) == 1


def test_parse_trefoil_round_trip():
    k = parse_gauss_code(TREFOIL)
    assert len(k) == 6
    assert k.to_code() == TREFOIL
    assert self_linking(k) == 3
    assert k.positions()[1] == (0, 3)


def test_crossing_ids_are_renumbered_by_first_appearance():
    k = parse_gauss_code("U7- O3+ O7- U3+")
    assert k.to_code() == "U1- O2+ O1- U2+"
    assert k.signs() == [-1, 1]


def test_comments_are_ignored():
    k = parse_gauss_code("# a kink\nO1- U1-  # trailing\n")
    assert self_linking(k) == -1


@pytest.mark.parametrize(
    "text, position",
    [
        ("O1+ X2+", 1),
        ("O1+ U1+ O1+", 2),
        ("O1+ O1+", 1),
        ("O1+ U1-", 1),
        ("O0+ U0+", 0),
    ],
)
def test_malformed_codes_report_position(text, position):
    with pytest.raises(GaussCodeError) as err:
        parse_gauss_code(text)
    assert err.value.position == position


def test_missing_partner_rejected():
    with pytest.raises(GaussCodeError):
        parse_gauss_code("O1+ U2+ U1+")


# -------------------------------
# Moves
# -------------------------------


def test_r2_insert_on_empty_then_delete():
    empty = GaussDiagram(0)
    k = apply_move(empty, Move("R2-insert", (0, 0)))
    assert k.to_code() == "O1+ O2- U1+ U2-"
    assert self_linking(k) == 0
    deletes = find_moves(k, "R2-delete")
    assert deletes
    assert apply_move(k, deletes[0]) == empty


@pytest.mark.parametrize("antiparallel", [False, True])
def test_r2_insert_delete_round_trip_on_trefoil(antiparallel):
    k = parse_gauss_code(TREFOIL)
    grown = apply_move(k, Move("R2-insert", (1, 4), sign=-1, antiparallel=antiparallel))
    assert grown.n_crossings == 5
    assert self_linking(grown) == self_linking(k)
    assert any(apply_move(grown, m) == k for m in find_moves(grown, "R2-delete"))


def test_r2_delete_rejects_same_signs():
    k = parse_gauss_code("O1+ O2+ U1+ U2+")
    with pytest.raises(MoveError):
        apply_move(k, Move("R2-delete", (0, 2)))


def test_oc_swaps_adjacent_overs():
    k = parse_gauss_code("O1+ O2- U1+ U2-")
    out = apply_move(k, Move("OC", (0,)))
    assert out.to_code() == "O1- O2+ U2+ U1-"
    assert self_linking(out) == self_linking(k)


def test_oc_rejects_under_endpoints():
    k = parse_gauss_code(TREFOIL)
    with pytest.raises(MoveError):
        apply_move(k, Move("OC", (0,)))


def test_r3_moves_preserve_self_linking():
    k = parse_gauss_code("O1+ O2+ U1+ O3+ U2+ U3+")
    moves = find_moves(k, "R3")
    assert moves
    for m in moves:
        out = apply_move(k, m)
        assert out.n_crossings == 3
        assert self_linking(out) == self_linking(k)
        assert out != k


def test_r1s_spin_relocates_and_returns():
    k = parse_gauss_code("O1+ U1+ O2- U3+ O3+ U2-")
    right = apply_move(k, Move("R1s-spin", (0, 1)))
    assert right.n_crossings == 3
    assert right.to_code().startswith("O1-")
    back = [m for m in find_moves(right, "R1s-spin") if m.sites[1] == -1]
    assert any(apply_move(right, m) == k for m in back)


def test_r1s_spin_needs_a_kink():
    with pytest.raises(MoveError):
        apply_move(parse_gauss_code(TREFOIL), Move("R1s-spin", (0, 1)))


@pytest.mark.parametrize("kind", ["VR1", "VR2", "VR3", "M"])
def test_virtual_moves_are_identities(kind):
    k = parse_gauss_code(TREFOIL)
    assert apply_move(k, Move(kind)) == k


def test_move_validation():
    with pytest.raises(MoveError):
        Move("R4")
    with pytest.raises(MoveError):
        Move("R3", (0, 2))
    with pytest.raises(MoveError):
        Move("R2-insert", (0, 0), sign=2)


# -------------------------------
# Braids
# -------------------------------


def test_parse_braid_words():
    b = BraidWord.parse(3, "p1 m2 v1")
    assert str(b) == "p1 m2 v1"
    assert BraidWord.parse(3, "p1m2v1") == b
    assert str(BraidWord.identity(2)) == "1"
    with pytest.raises(BraidError):
        BraidWord.parse(2, "p2")
    with pytest.raises(BraidError):
        BraidWord.parse(2, "q1")


def test_skeleton_perm_examples():
    assert skeleton_perm(word(2, "p1")) == (2, 1)
    cycle = skeleton_perm(word(3, "v1", "v2"))
    assert sorted(cycle) == [1, 2, 3]
    assert all(cycle[i] != i + 1 for i in range(3))


def test_braid_times_inverse_is_pure(rng):
    kinds = "vpm"
    for _ in range(20):
        b = BraidWord(4, tuple((rng.choice(kinds), rng.randint(1, 3)) for _ in range(rng.randint(0, 6))))
        assert skeleton_perm(b * braid_invert(b)) == identity_perm(4)


def test_skeleton_perm_is_a_homomorphism(rng):
    for _ in range(20):
        a = BraidWord(4, tuple((rng.choice("vpm"), rng.randint(1, 3)) for _ in range(4)))
        b = BraidWord(4, tuple((rng.choice("vpm"), rng.randint(1, 3)) for _ in range(3)))
        assert skeleton_perm(a * b) == compose_perms(skeleton_perm(a), skeleton_perm(b))


def test_compose_rejects_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        word(2, "p1") * word(3, "p1")


def test_delete_strand():
    assert delete_strand(word(3, "p1", "p2"), 1) == BraidWord.identity(2)
    assert delete_strand(word(3, "p1", "p2"), 3) == word(2, "p1")
    with pytest.raises(BraidError):
        delete_strand(word(1), 1)


def test_unzip_strand_doubles_crossings():
    b = unzip_strand(word(2, "p1"), 1)
    assert b == word(3, "p2", "p1")
    assert unzip_strand(word(2, "p1"), 2) == word(3, "p1", "p2")
    assert skeleton_perm(b) == (2, 3, 1)


def test_insert_strand():
    assert insert_strand(word(2, "p1"), 3) == word(3, "p1")
    assert insert_strand(word(2, "p1"), 1) == word(3, "p2")
    assert insert_strand(word(2, "p1"), 2) == word(3, "v1", "p2", "v1")
    with pytest.raises(BraidError):
        insert_strand(word(2, "p1"), 4)


# -------------------------------
# Action on the free group
# -------------------------------


def test_free_word_parse_and_reduce():
    w = FreeWord.parse(3, "x1 x2 x2^-1 x3")
    assert str(w) == "x1 x3"
    assert str(FreeWord.parse(2, "1")) == "1"
    with pytest.raises(FreeWordError):
        FreeWord(2, (1, -1))
    with pytest.raises(FreeWordError):
        FreeWord.parse(2, "x3")


def test_braid_act_on_generators():
    x1, x2 = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
    assert str(braid_act(x1, word(2, "p1"))) == "x2"
    assert str(braid_act(x2, word(2, "p1"))) == "x2 x1 x2^-1"
    assert braid_act(x1, word(2, "v1")) == x2


def test_braid_act_axiom(rng):
    for _ in range(10):
        b = BraidWord(3, tuple((rng.choice("vpm"), rng.randint(1, 2)) for _ in range(5)))
        w = FreeWord.make(3, [rng.choice([1, 2, 3, -1, -2, -3]) for _ in range(4)])
        assert braid_act(w, b * braid_invert(b)) == w


@pytest.mark.parametrize("n", [2, 3, 4])
def test_action_respects_defining_relations(n):
    for rel in wb_relations(n):
        for i in range(1, n + 1):
            x = FreeWord.generator(n, i)
            assert braid_act(x, rel.lhs) == braid_act(x, rel.rhs), rel.name


@pytest.mark.parametrize("n", [3, 4])
def test_undercrossings_do_not_commute(n):
    for rel in uc_nonrelations(n):
        assert any(
            braid_act(FreeWord.generator(n, i), rel.lhs) != braid_act(FreeWord.generator(n, i), rel.rhs)
            for i in range(1, n + 1)
        ), rel.name


def test_act_rejects_mismatched_generators():
    with pytest.raises(StrandMismatchError):
        braid_act(FreeWord.generator(3, 1), word(2, "p1"))
