import pytest
from hypothesis import given, settings, strategies as st

from ccgcomment.categories import (
    Atom,
    Backward,
    CategorySyntaxError,
    Forward,
    format_category,
    parse_category,
    unifies,
)


@pytest.mark.parametrize("text,expected", [
    ("VP/NP", Forward(Atom("VP"), Atom("NP"))),
    ("NP", Atom("NP")),
    (r"(S\NP)/NP", Forward(Backward(Atom("S"), Atom("NP")), Atom("NP"))),
    (r"S\NP/NP", Forward(Backward(Atom("S"), Atom("NP")), Atom("NP"))),
    ("S[imp]", Atom("S", "imp")),
    ("NP/(N/N)", Forward(Atom("NP"), Forward(Atom("N"), Atom("N")))),
    ("PP[for]/NP", Forward(Atom("PP", "for"), Atom("NP"))),
])
def test_parse_category(text, expected):
    assert parse_category(text) == expected


def test_slashes_are_left_associative():
    assert parse_category("A/B/C") == Forward(Forward(Atom("A"), Atom("B")), Atom("C"))
    assert parse_category(r"A\B/C") == Forward(Backward(Atom("A"), Atom("B")), Atom("C"))


def test_parse_category_error_positions():
    with pytest.raises(CategorySyntaxError) as err:
        parse_category("VP/")
    assert err.value.position == 3
    with pytest.raises(CategorySyntaxError):
        parse_category("(VP/NP")
    with pytest.raises(CategorySyntaxError):
        parse_category("S[x")
    with pytest.raises(CategorySyntaxError):
        parse_category("S NP")


def test_cross_check_by_print_and_reparse():
    cat = parse_category(r"(S\NP)/NP")
    assert parse_category(format_category(cat)) == cat
    assert format_category(cat) == r"S\NP/NP"


def test_feature_unification_one_sided():
    s = Atom("S")
    s_imp = Atom("S", "imp")
    s_ger = Atom("S", "ger")
    assert unifies(s, s_imp) and unifies(s_imp, s)
    assert unifies(s_imp, s_imp)
    assert not unifies(s_imp, s_ger)
    assert not unifies(Atom("NP"), Atom("N"))


def test_functor_unification_recurses():
    a = parse_category("S[imp]/NP")
    b = parse_category("S/NP")
    c = parse_category("S[ger]/NP")
    assert unifies(a, b)
    assert not unifies(a, c)
    assert not unifies(a, parse_category(r"S[imp]\NP"))


atoms = st.one_of(
    st.builds(Atom, st.sampled_from(["S", "NP", "N", "PP", "VP"])),
    st.builds(Atom, st.sampled_from(["S", "PP"]), st.sampled_from(["imp", "ger", "for"])),
)


def categories(max_depth=5):
    return st.recursive(
        atoms,
        lambda inner: st.one_of(st.builds(Forward, inner, inner),
                                st.builds(Backward, inner, inner)),
        max_leaves=2 ** max_depth,
    )


@settings(max_examples=300, deadline=None)
@given(categories())
def test_print_parse_identity(cat):
    assert parse_category(format_category(cat)) == cat
