import random

import pytest

from diagcat import (
    IDENTITY_REGISTRY,
    Identity,
    Word,
    canonical_form,
    check_identity,
    evaluate,
    extreme_rep,
    holds_in_M,
    holds_in_N,
    identity_by_name,
    monoid_A21,
    monoid_M,
    monoid_N,
    normal_form,
    parse_identity,
    parse_iword,
    parse_word,
    sort_step,
    sort_to_normal,
    zimin,
)
from diagcat.errors import (
    EmptyWord,
    MissingLetter,
    NoInvolution,
    NotInteriorFactor,
    ParseError,
)
from diagcat.identities import star_mix_words, zimin_sorted_pair
from diagcat.sampling import random_word


def test_parse_and_render():
    w = parse_word("x3yxytz4xyz")
    assert str(w) == "x3yxytz4xyz"
    assert len(w) == 14
    with pytest.raises(ParseError):
        parse_word("x0y")
    assert str(parse_word("")) == "1"


def test_involutory_parsing():
    w = parse_iword("xx*x")
    assert w.symbols == (("x", False), ("x", True), ("x", False))


def test_zimin_words():
    assert str(zimin(1)) == "a"
    assert str(zimin(2)) == "aba"
    assert str(zimin(3)) == "abacaba"
    assert len(zimin(5)) == 31


def test_worked_decomposition():
    w = parse_word("x3yxytz4xyz")
    rep = extreme_rep(w)
    assert str(rep.e) == "xytzxyz"
    assert [str(b) for b in rep.blocks] == ["x2", "xy", "1", "z3", "1", "1"]
    assert rep.reassemble() == w
    assert normal_form(w) == w


def test_extreme_rep_of_empty_word():
    with pytest.raises(EmptyWord):
        extreme_rep(Word())


def test_one_variable_criterion_spot_values():
    assert not holds_in_M(parse_word("xy"), parse_word("yx"))
    for name in ("interior-swap-nested", "interior-swap-crossed"):
        ident = identity_by_name(name)
        assert holds_in_M(ident.lhs, ident.rhs)
        assert holds_in_N(ident.lhs, ident.rhs)


def test_parity_criterion_spot_values():
    assert holds_in_N(parse_word("x3yx"), parse_word("xyx3"))
    assert not holds_in_M(parse_word("x3yx"), parse_word("xyx3"))
    assert not holds_in_N(parse_word("x3yx"), parse_word("x2yx2"))
    assert not holds_in_N(parse_word("x"), parse_word("x3"))


def test_count_criterion_implies_parity_criterion():
    rng = random.Random(0)
    hits = 0
    while hits < 50:
        u = random_word(rng, max_len=5)
        v = Word(tuple(rng.sample(u.letters, len(u.letters))))
        if holds_in_M(u, v):
            hits += 1
            assert holds_in_N(u, v)


def test_deleting_a_letter_preserves_validity():
    ident = identity_by_name("interior-swap-nested")
    for gone in "tuvw":
        u = Word(tuple(ch for ch in ident.lhs.letters if ch != gone))
        v = Word(tuple(ch for ch in ident.rhs.letters if ch != gone))
        assert holds_in_M(u, v)


def test_sort_step_contract():
    # the middle block of xy.yx.xy is descending and can be swapped
    w = parse_word("xyyxxy")
    with pytest.raises(NotInteriorFactor):
        sort_step(w, 0)  # extreme occurrence, not interior
    stepped = sort_step(w, 2)
    assert stepped.word == parse_word("xyxyxy")
    diff = [i for i in range(len(w)) if w.letters[i] != stepped.word.letters[i]]
    assert diff == [2, 3]  # one adjacent transposition
    sorted_w, steps = sort_to_normal(w)
    assert sorted_w == parse_word("xyxyxy") == normal_form(w)
    assert steps == 1


def test_sorting_terminates_on_random_words():
    rng = random.Random(1)
    for _ in range(500):
        w = random_word(rng)
        result, _ = sort_to_normal(w)
        assert result == normal_form(w)
        assert sorted(result.letters) == sorted(w.letters)


def test_canonical_form_reorders_up_to_parity():
    w = parse_word("x3yxytz4xyz")
    c = canonical_form(w)
    assert holds_in_N(w, c)
    assert canonical_form(c) == c
    assert str(c) == "x3yxytz2xyz3"


def test_evaluate_and_errors():
    m = monoid_A21()
    aba = parse_word("aba")
    x, y = m.elements[2], m.elements[3]
    assert evaluate(aba, {"a": x, "b": y}, m) == m.mul(m.mul(x, y), x)
    with pytest.raises(MissingLetter):
        evaluate(aba, {"a": x}, m)
    rees_word = parse_iword("xx*")
    from diagcat.identities import Monoid

    bare = Monoid(name="bare", mul=lambda p, q: p, one=0, elements=(0,))
    with pytest.raises(NoInvolution):
        evaluate(rees_word, {"x": 0}, bare)


def test_check_identity_verdicts_are_deterministic():
    v = check_identity(IDENTITY_REGISTRY["commutation"], monoid_A21())
    assert v.status == "fails"
    assert sorted(v.witness) == ["x", "y"]
    assert {str(w) for w in v.witness.values()} == {"(0,0)", "(0,1)"}
    again = check_identity(IDENTITY_REGISTRY["commutation"], monoid_A21())
    assert again == v


def test_check_identity_exhausts_small_monoids():
    ident = parse_identity("xy=xy")
    v = check_identity(ident, monoid_A21())
    assert v.status == "holds" and "exhausted" in v.evidence


def test_check_identity_unknown_on_infinite_pool():
    v = check_identity(IDENTITY_REGISTRY["zimin3-shuffle"], monoid_M(), budget=500)
    assert v.status in ("unknown", "fails")
    # the one-variable criterion rejects this shuffle, so M must not satisfy it
    ident = IDENTITY_REGISTRY["zimin3-shuffle"]
    assert not holds_in_M(ident.lhs, ident.rhs)


def test_star_sandwich_fails_on_the_band():
    v = check_identity(IDENTITY_REGISTRY["star-sandwich"], monoid_A21())
    assert v.status == "fails"


def test_zimin_sorted_pair_shape():
    pair = zimin_sorted_pair(2)
    assert str(pair.lhs) == "aba" and str(pair.rhs) == "a2b"
    assert isinstance(pair, Identity)


def test_star_mix_words_enumeration():
    assert [str(w) for w in star_mix_words(3)] == ["xx*x"]
    assert len(star_mix_words(6)) == 4


def test_registry_contents():
    for name in (
        "interior-swap-nested",
        "interior-swap-crossed",
        "cube-transport",
        "zimin3-shuffle",
        "commutation",
        "star-sandwich",
    ):
        assert name in IDENTITY_REGISTRY
    with pytest.raises(ParseError):
        identity_by_name("no-such-identity")
