"""Arrow-kernel tests: validation, identities, composition, profiles, opposite."""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from arrowcat import fixtures as fx
from arrowcat.core import (
    ObjlessCategory,
    infer_identities,
    validate_objectless,
)
from arrowcat.errors import (
    InvalidCategoryError,
    MalformedNameError,
    NameNotFoundError,
    NotAnIdentityError,
)
from arrowcat.generators import gen_random

from conftest import brute_identities, brute_neutral

random_categories = st.integers(min_value=0, max_value=10_000).map(
    lambda seed: gen_random(seed, 16)
)

Z2_TABLE = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}


def test_one_morphism_category_validates():
    report = validate_objectless(["e"], {("e", "e"): "e"})
    assert report.ok and report.violations == ()


def test_z2_validates():
    assert validate_objectless(["e", "s"], Z2_TABLE).ok


def test_missing_identity_reported():
    # s composes only with itself and s.s = e, so no neutral partner exists for s.
    report = validate_objectless(["e", "s"], {("e", "e"): "e", ("s", "s"): "e"})
    assert not report.ok
    assert any(
        v.kind == "identity-missing" and v.witnesses[0] == "s" for v in report.violations
    )


def test_functionality_violation_from_conflicting_triples():
    triples = [("e", "e", "e"), ("e", "e", "s"), ("s", "s", "e"), ("e", "s", "s"), ("s", "e", "s")]
    report = validate_objectless(["e", "s"], triples)
    assert any(v.kind == "functionality" for v in report.violations)


def test_associativity_inequality_reported():
    # Total one-object table with a.(a.b) = b but (a.a).b = a.
    table = {
        ("e", "e"): "e", ("e", "a"): "a", ("e", "b"): "b",
        ("a", "e"): "a", ("b", "e"): "b",
        ("a", "a"): "b", ("a", "b"): "b", ("b", "a"): "b", ("b", "b"): "a",
    }
    report = validate_objectless(["e", "a", "b"], table)
    assert not report.ok
    assert any(v.kind == "associativity-equal" for v in report.violations)


def test_associativity_existence_reported():
    # b.a and g.b defined but g.(b.a) missing from the table.
    table = {
        ("i", "i"): "i", ("a", "i"): "a", ("i", "a"): "a",
        ("a", "a"): "i", ("b", "i"): "b", ("i", "b"): "b",
        ("b", "a"): "b",
        # (b, b), (a, b) omitted although cod/dom line up
    }
    report = validate_objectless(["i", "a", "b"], table)
    assert not report.ok
    assert any(v.kind == "associativity-existence" for v in report.violations)


def test_undeclared_name_raises():
    with pytest.raises(NameNotFoundError):
        validate_objectless(["e"], {("e", "ghost"): "e"})


def test_malformed_name_raises():
    with pytest.raises(MalformedNameError):
        validate_objectless(["1e"], {("1e", "1e"): "1e"})


def test_build_rejects_invalid():
    with pytest.raises(InvalidCategoryError) as exc:
        ObjlessCategory.build(["e", "s"], {("e", "e"): "e", ("s", "s"): "e"})
    assert not exc.value.report.ok


def test_morphism_cap():
    from arrowcat.errors import CapacityError

    names = [f"m{i}" for i in range(4097)]
    with pytest.raises(CapacityError):
        validate_objectless(names, {})


def test_infer_identities_z2():
    assert infer_identities(["e", "s"], Z2_TABLE) == {"e"}


def test_infer_identities_two_chain():
    cat = fx.two_chain()
    assert cat.identities == {"i0", "i1"}


def test_dom_cod_two_chain():
    cat = fx.two_chain()
    assert cat.dom_id("a") == "i0"
    assert cat.cod_id("a") == "i1"
    for ident in cat.identities:
        assert cat.dom_id(ident) == ident == cat.cod_id(ident)


def test_dom_cod_z2():
    cat = fx.z2()
    assert cat.dom_id("s") == "e" == cat.cod_id("s")


def test_compose():
    tc = fx.two_chain()
    assert tc.compose("a", "i0") == "a"
    assert tc.compose("i0", "a") is None  # cod(a) = i1 != i0
    assert fx.z2().compose("s", "s") == "e"
    with pytest.raises(NameNotFoundError):
        tc.compose("a", "ghost")


def test_hom_classes():
    tc = fx.two_chain()
    assert tc.hom_class("i0", "i1") == {"a"}
    assert tc.hom_class("i1", "i0") == frozenset()
    assert "i0" in tc.hom_class("i0", "i0")
    with pytest.raises(NotAnIdentityError):
        tc.hom_class("a", "i0")


def test_composition_profile():
    tc = fx.two_chain()
    p0 = tc.composition_profile("i0")
    assert p0.right_partners == {"i0", "a"}
    assert p0.left_partners == {"i0"}
    p1 = tc.composition_profile("i1")
    assert p1.right_partners == {"i1"}
    assert p1.left_partners == {"i1", "a"}
    one = fx.one()
    profile = one.composition_profile("star")
    assert profile.right_partners == profile.left_partners == {"star"}


def test_discernible():
    tc = fx.two_chain()
    assert tc.discernible("i0", "i1")
    assert not tc.discernible("i0", "i0")
    fd = fx.finset_dup()
    assert fd.discernible("id_n1", "id_n1b")


def test_opposite_two_chain():
    op = fx.two_chain().opposite()
    assert op.dom_id("a") == "i1"
    assert op.cod_id("a") == "i0"


def test_opposite_commutative_monoid_is_identity():
    z2 = fx.z2()
    assert z2.opposite() == z2


@pytest.mark.parametrize("name", sorted(fx.fixture_pool()))
def test_opposite_involution(name, pool):
    cat = pool[name]
    assert cat.opposite().opposite() == cat


@pytest.mark.parametrize("name", sorted(fx.fixture_pool()))
def test_identities_match_bruteforce(name, pool):
    cat = pool[name]
    assert cat.identities == brute_identities(cat)


@pytest.mark.parametrize("name", sorted(fx.fixture_pool()))
def test_hom_classes_partition(name, pool):
    cat = pool[name]
    seen = []
    for a in cat.identities:
        for b in cat.identities:
            seen.extend(cat.hom_class(a, b))
    assert sorted(seen) == sorted(cat.morphisms)


@settings(max_examples=40, deadline=None)
@given(random_categories)
def test_lemma_unique_identities(cat):
    # Exactly one neutral partner on each side of every morphism.
    neutral = brute_neutral(cat.morphisms, cat.table)
    for m in cat.morphisms:
        assert len([i for i in neutral if (m, i) in cat.table]) == 1
        assert len([i for i in neutral if (i, m) in cat.table]) == 1


@settings(max_examples=40, deadline=None)
@given(random_categories)
def test_identity_pair_composition_iff_equal(cat):
    for i in cat.identities:
        for j in cat.identities:
            assert (((i, j) in cat.table) == (i == j))


@settings(max_examples=40, deadline=None)
@given(random_categories)
def test_lemma_composition_criterion(cat):
    for b in cat.morphisms:
        for a in cat.morphisms:
            defined = (b, a) in cat.table
            assert defined == (cat.cod_id(a) == cat.dom_id(b))
            if defined:
                r = cat.table[(b, a)]
                assert cat.dom_id(r) == cat.dom_id(a)
                assert cat.cod_id(r) == cat.cod_id(b)


@settings(max_examples=40, deadline=None)
@given(random_categories)
def test_distinct_identities_always_discernible(cat):
    idents = sorted(cat.identities)
    for i in idents:
        for j in idents:
            assert cat.discernible(i, j) == (i != j)


@settings(max_examples=30, deadline=None)
@given(random_categories)
def test_opposite_is_valid_and_involutive(cat):
    op = cat.opposite()
    assert validate_objectless(op.morphisms, op.table).ok
    assert op.opposite() == cat
    for m in cat.morphisms:
        assert op.dom_id(m) == cat.cod_id(m)
        assert op.cod_id(m) == cat.dom_id(m)
