# tests/test_at.py
from __future__ import annotations

from fractions import Fraction

import pytest

from wknots.at import (
    AssocElement,
    ATSpaceError,
    LieElement,
    SemidirectElement,
    TDerElement,
    TrElement,
    TruncationMismatchError,
    apply_assoc,
    assoc_exp,
    assoc_log,
    bch,
    beta,
    delta_tilde,
    div,
    dynkin_projection,
    exp_act_tr,
    from_assoc,
    j_exp,
    l_split,
    lie_bracket,
    lie_exp,
    lie_log,
    lyndon_basis,
    min_rotation,
    semidirect_bch,
    semidirect_bracket,
    swap_strands,
    tder_act_tr,
    tder_apply,
    tder_bch,
    tder_bracket,
    u_split,
)
from wknots.at.lie import bracketing_string, is_lyndon, lyndon_words, standard_factorization
from wknots.at.words import format_word, parse_word


COEFS = (-2, -1, 1, 2)


def x(n, degree, i):
    return LieElement.generator(n, degree, i)


def random_lie(rng, n, degree, lo=1, terms=3):
    words = [w for w in lyndon_words(n, degree) if len(w) >= lo]
    return LieElement(n, degree, {rng.choice(words): rng.choice(COEFS) for _ in range(terms)})


def random_tder(rng, n, degree, lo=2):
    return TDerElement(n, degree, [random_lie(rng, n, degree, lo=lo, terms=2) for _ in range(n)])


def random_tr(rng, n, degree):
    words = list(lyndon_words(n, degree))
    return TrElement(n, degree, {rng.choice(words): rng.choice(COEFS) for _ in range(3)})


# -------------------------------
# Associative words
# -------------------------------


def test_word_format_and_parse():
    assert format_word((1, 2, 1)) == "x1 x2 x1"
    assert format_word(()) == "1"
    assert parse_word("x1 x2") == (1, 2)
    assert parse_word("1") == ()
    with pytest.raises(ATSpaceError):
        parse_word("y1")


def test_assoc_products_truncate():
    a = AssocElement.generator(2, 2, 1)
    b = AssocElement.generator(2, 2, 2)
    assert a * b * a == AssocElement.zero(2, 2)
    assert a.commutator(b).terms == {(1, 2): 1, (2, 1): -1}


def test_assoc_exp_log_inverse():
    a = AssocElement(2, 4, {(1,): 1, (1, 2): Fraction(1, 2), (2, 2, 1): -3})
    assert assoc_log(assoc_exp(a)) == a


def test_assoc_exp_log_reject_bad_constants():
    with pytest.raises(ATSpaceError):
        assoc_exp(AssocElement.one(2, 3))
    with pytest.raises(ATSpaceError):
        assoc_log(AssocElement.generator(2, 3, 1))


def test_shape_mismatch():
    with pytest.raises(TruncationMismatchError):
        AssocElement.generator(2, 3, 1) + AssocElement.generator(3, 3, 1)


# -------------------------------
# Lyndon basis and Lie elements
# -------------------------------


def test_lyndon_words():
    assert is_lyndon((1, 1, 2))
    assert not is_lyndon((2, 1))
    assert not is_lyndon((1, 2, 1, 2))
    assert [len(lyndon_basis(2, d)) for d in range(1, 6)] == [2, 1, 2, 3, 6]
    assert len(lyndon_basis(3, 2)) == 3


def test_standard_factorization_and_bracketing():
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert bracketing_string((1, 1, 2)) == "[x1,[x1,x2]]"
    assert bracketing_string((1, 2, 2)) == "[[x1,x2],x2]"


def test_non_lyndon_key_rejected():
    with pytest.raises(ATSpaceError):
        LieElement(2, 3, {(2, 1): 1})


def test_brackets():
    x1, x2 = x(2, 3, 1), x(2, 3, 2)
    assert not lie_bracket(x1, x1)
    assert lie_bracket(x1, x2) == LieElement(2, 3, {(1, 2): 1})
    assert lie_bracket(x2, x1) == LieElement(2, 3, {(1, 2): -1})
    assert lie_bracket(x1, lie_bracket(x1, x2)) == LieElement(2, 3, {(1, 1, 2): 1})


def test_from_assoc_rejects_non_lie():
    with pytest.raises(ATSpaceError):
        from_assoc(AssocElement.word(2, 3, (1, 2)))


def test_lie_jacobi(rng):
    for _ in range(3):
        a, b, c = (random_lie(rng, 3, 4) for _ in range(3))
        total = (
            lie_bracket(a, lie_bracket(b, c))
            + lie_bracket(b, lie_bracket(c, a))
            + lie_bracket(c, lie_bracket(a, b))
        )
        assert not total


def test_dynkin_projection_recovers_lie_elements(rng):
    for _ in range(3):
        a = random_lie(rng, 3, 4)
        assert dynkin_projection(a.to_assoc()) == a


# -------------------------------
# BCH
# -------------------------------


def test_bch_low_degree():
    z = bch(x(2, 3, 1), x(2, 3, 2))
    assert z.coeffs == {
        (1,): 1,
        (2,): 1,
        (1, 2): Fraction(1, 2),
        (1, 1, 2): Fraction(1, 12),
        (1, 2, 2): Fraction(1, 12),
    }


def test_bch_degree_four_term():
    # the only degree-4 term is -[x2,[x1,[x1,x2]]]/24
    z = bch(x(2, 4, 1), x(2, 4, 2)).graded_part(4)
    assert z == LieElement(2, 4, {(1, 1, 2, 2): Fraction(1, 24)})


def test_bch_identities(rng):
    a = random_lie(rng, 2, 4)
    zero = LieElement.zero(2, 4)
    assert bch(a, zero) == a
    assert bch(zero, a) == a
    assert not bch(a, -a)


def test_bch_matches_group_product():
    a, b = x(2, 4, 1), lie_bracket(x(2, 4, 1), x(2, 4, 2)) + x(2, 4, 2)
    assert bch(a, b) == lie_log(lie_exp(a) * lie_exp(b))


def test_bch_associative(rng):
    a, b, c = (random_lie(rng, 2, 4) for _ in range(3))
    assert bch(bch(a, b), c) == bch(a, bch(b, c))


# -------------------------------
# Cyclic words
# -------------------------------


def test_min_rotation_keys():
    assert min_rotation((2, 1, 1)) == (1, 1, 2)
    t = TrElement(2, 3, {(2, 1): 1, (1, 2): 2})
    assert t.terms == {(1, 2): 3}
    assert t.coefficient((2, 1)) == 3


def test_tr_rejects_empty_word():
    with pytest.raises(ATSpaceError):
        TrElement(1, 3, {(): 1})


def test_trace_kills_commutators():
    a = AssocElement(2, 4, {(1, 2): 1, (2, 2, 1): 3})
    b = AssocElement(2, 4, {(1,): 2, (2, 1): -1})
    assert not TrElement.trace(a.commutator(b))


def test_power_coefficients():
    t = TrElement.power(1, 4, 1, 2, Fraction(1, 3)) + TrElement.power(1, 4, 1, 4, -1)
    assert t.power_coefficients() == {2: Fraction(1, 3), 4: -1}
    with pytest.raises(ATSpaceError):
        TrElement(2, 2, {(1, 2): 1}).power_coefficients()


def test_tr_dict_round_trip():
    t = TrElement(2, 3, {(1, 2): Fraction(-1, 2), (1, 1, 2): 3})
    assert TrElement.from_dict(2, 3, t.to_dict()) == t


def test_delta_tilde():
    assert not delta_tilde(TrElement.zero(1, 4))
    # linear terms pass through: tr of every bracket is zero
    assert not delta_tilde(TrElement.power(1, 4, 1, 1))
    square = delta_tilde(TrElement.power(1, 4, 1, 2))
    assert square.graded_part(2) == TrElement(2, 4, {(1, 2): -2})
    with pytest.raises(ATSpaceError):
        delta_tilde(TrElement.power(2, 4, 1, 2))


# -------------------------------
# Tangential derivations
# -------------------------------


def test_tder_component_indexing():
    D = TDerElement.single(2, 3, 2, x(2, 3, 1))
    assert D[2] == x(2, 3, 1)
    assert not D[1]
    assert swap_strands(D)[1] == x(2, 3, 2)
    with pytest.raises(TruncationMismatchError):
        swap_strands(TDerElement.zero(3, 3))


def test_tder_action_on_generators():
    D = TDerElement.single(2, 3, 2, x(2, 3, 1))
    assert not tder_apply(D, x(2, 3, 1))
    assert tder_apply(D, x(2, 3, 2)) == LieElement(2, 3, {(1, 2): -1})


def test_beta():
    D = TDerElement.single(2, 3, 2, x(2, 3, 1))
    out = beta(D)
    assert out.degree == 4
    assert out == LieElement(2, 4, {(1, 2): -1})


def test_tder_bracket_antisymmetric(rng):
    D = random_tder(rng, 2, 4, lo=1)
    E = random_tder(rng, 2, 4, lo=1)
    assert not tder_bracket(D, D)
    assert tder_bracket(D, E) == -tder_bracket(E, D)


def test_tder_bracket_is_commutator_of_derivations(rng):
    D = random_tder(rng, 2, 4, lo=1)
    E = random_tder(rng, 2, 4, lo=1)
    DE = tder_bracket(D, E)
    for i in (1, 2):
        xi = AssocElement.generator(2, 4, i)
        lhs = apply_assoc(DE, xi)
        rhs = apply_assoc(D, apply_assoc(E, xi)) - apply_assoc(E, apply_assoc(D, xi))
        assert lhs == rhs


def test_tder_leibniz(rng):
    D = random_tder(rng, 2, 4, lo=1)
    a, b = random_lie(rng, 2, 4), random_lie(rng, 2, 4)
    lhs = tder_apply(D, lie_bracket(a, b))
    rhs = lie_bracket(tder_apply(D, a), b) + lie_bracket(a, tder_apply(D, b))
    assert lhs == rhs


def test_tder_jacobi(rng):
    D, E, F = (random_tder(rng, 2, 5, lo=1) for _ in range(3))
    total = (
        tder_bracket(tder_bracket(D, E), F)
        + tder_bracket(tder_bracket(E, F), D)
        + tder_bracket(tder_bracket(F, D), E)
    )
    assert not total


def test_tr_action_is_a_representation(rng):
    D, E = random_tder(rng, 2, 4, lo=1), random_tder(rng, 2, 4, lo=1)
    w = random_tr(rng, 2, 4)
    lhs = tder_act_tr(tder_bracket(D, E), w)
    rhs = tder_act_tr(D, tder_act_tr(E, w)) - tder_act_tr(E, tder_act_tr(D, w))
    assert lhs == rhs


def test_div():
    assert not div(TDerElement.zero(2, 4))
    assert not div(TDerElement.single(2, 4, 2, x(2, 4, 1)))
    D = TDerElement.single(2, 4, 2, lie_bracket(x(2, 4, 2), x(2, 4, 1)))
    assert div(D) == TrElement(2, 4, {(1, 2): -1})


def test_div_is_a_cocycle(rng):
    D, E = random_tder(rng, 2, 5), random_tder(rng, 2, 5)
    lhs = div(tder_bracket(D, E))
    rhs = tder_act_tr(D, div(E)) - tder_act_tr(E, div(D))
    assert lhs == rhs


# -------------------------------
# tr semidirect tder and j
# -------------------------------


def test_semidirect_pure_tr_brackets_vanish(rng):
    p = SemidirectElement(random_tr(rng, 2, 4), TDerElement.zero(2, 4))
    q = SemidirectElement(random_tr(rng, 2, 4), TDerElement.zero(2, 4))
    assert not semidirect_bracket(p, q)


def test_semidirect_jacobi(rng):
    p, q, r = (SemidirectElement(random_tr(rng, 2, 4), random_tder(rng, 2, 4, lo=1)) for _ in range(3))
    total = (
        semidirect_bracket(semidirect_bracket(p, q), r)
        + semidirect_bracket(semidirect_bracket(q, r), p)
        + semidirect_bracket(semidirect_bracket(r, p), q)
    )
    assert not total


def test_splittings_differ_by_div(rng):
    D = random_tder(rng, 2, 4)
    diff = l_split(D) - u_split(D)
    assert diff.w == div(D)
    assert not diff.D


def test_j_of_zero():
    assert not j_exp(TDerElement.zero(2, 4))


def test_j_starts_with_div(rng):
    D = random_tder(rng, 2, 4)
    lo = D.min_degree()
    assert j_exp(D).graded_part(lo) == div(D).graded_part(lo)


def test_j_methods_agree(rng):
    for _ in range(2):
        D = random_tder(rng, 2, 4)
        assert j_exp(D, method="series") == j_exp(D, method="semidirect")


def test_j_unknown_method():
    with pytest.raises(ATSpaceError):
        j_exp(TDerElement.single(2, 3, 1, x(2, 3, 2)), method="integral")


def test_j_cocycle(rng):
    D, E = random_tder(rng, 2, 4), random_tder(rng, 2, 4)
    lhs = j_exp(tder_bch(D, E))
    rhs = j_exp(D) + exp_act_tr(D, j_exp(E))
    assert lhs == rhs


def test_semidirect_bch_projects_to_tder_bch(rng):
    p = SemidirectElement(random_tr(rng, 2, 4), random_tder(rng, 2, 4))
    q = SemidirectElement(random_tr(rng, 2, 4), random_tder(rng, 2, 4))
    assert semidirect_bch(p, q).D == tder_bch(p.D, q.D)
