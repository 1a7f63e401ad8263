"""Parser, serializer, diagnostics corpus, and generator contracts."""
from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from arrowcat import fixtures as fx
from arrowcat.catspec import (
    CatspecDocument,
    CatspecError,
    functor_decl,
    objless_decl,
    parse,
    serialize,
    standard_decl,
)
from arrowcat.core import validate_objectless
from arrowcat.errors import GeneratorError, InvalidCategoryError
from arrowcat.functors import functor_identity
from arrowcat.generators import (
    Poset,
    gen_cyclic,
    gen_discrete,
    gen_finset,
    gen_monoid,
    gen_poset,
    gen_random,
    gen_walking_iso,
)
from arrowcat.standard import validate_standard

FIXTURES = Path(__file__).parent / "fixtures"


def test_parse_two_chain_block():
    doc = parse("""
objless TwoChain {
  arrows: i0, i1, a;
  compose: i0 . i0 = i0;
  compose: i1 . i1 = i1;
  compose: a . i0 = a;
  compose: i1 . a = a;
}
""")
    assert sorted(doc.categories) == ["TwoChain"]
    cat = doc.objectless("TwoChain")
    assert len(cat.morphisms) == 3
    assert cat.identities == {"i0", "i1"}


def test_empty_input_gives_empty_document():
    doc = parse("")
    assert doc == CatspecDocument()
    assert serialize(doc) == ""


def test_undeclared_compose_name_is_diagnosed():
    with pytest.raises(CatspecError) as exc:
        parse("objless A {\n  arrows: a, b;\n  compose: b . a = c;\n}\n")
    diag = exc.value.diagnostics[0]
    assert diag.kind == "unknown-name"
    assert diag.span.line == 3


def test_standard_block_completes_identities():
    doc = parse("""
category C {
  objects: A, B;
  arrow f: A -> B;
}
""")
    std = doc.standard("C")
    assert std.id_of == {"A": "id_A", "B": "id_B"}
    assert std.table[("f", "id_A")] == "f"
    assert std.table[("id_B", "f")] == "f"
    assert validate_standard(std).ok


def test_standard_block_custom_identity_names():
    doc = parse("""
category C {
  objects: A;
  id A = unit;
}
""")
    std = doc.standard("C")
    assert std.id_of == {"A": "unit"}
    out = serialize(doc)
    assert "id A = unit;" in out
    assert parse(out) == doc


def test_nonneutral_identity_entry_survives_parse():
    # The parser must hand bad identity compositions to the validator, not fix them.
    doc = parse("""
category C {
  objects: A, B;
  arrow f: A -> B;
  compose: f . id_A = id_A;
}
""")
    report = doc.category_report("C")
    assert not report.ok
    assert any(v.kind in ("identity-nonneutral", "typing") for v in report.violations)
    with pytest.raises(InvalidCategoryError):
        doc.objectless("C")


def test_contravariant_keyword_both_spellings():
    for header in ("functor F: A -> A contravariant {",
                   "functor F: A -> A [contravariant] {"):
        doc = parse(
            "objless A {\n  arrows: x;\n  compose: x . x = x;\n}\n"
            + header + "\n  map x -> x;\n}\n"
        )
        assert doc.functors["F"].variance == "contravariant"


def test_parse_never_partially_succeeds():
    text = "objless Good {\n  arrows: x;\n  compose: x . x = x;\n}\nobjless Bad {\n  arrows: 9z;\n}\n"
    with pytest.raises(CatspecError):
        parse(text)


@pytest.mark.parametrize("fixture", sorted(FIXTURES.glob("*.cat")))
def test_fixture_files_parse_and_roundtrip(fixture):
    doc = parse(fixture.read_text())
    out = serialize(doc)
    assert parse(out) == doc
    assert serialize(parse(out)) == out


def test_roundtrip_programmatic_document():
    doc = CatspecDocument()
    doc.categories["Z2"] = objless_decl("Z2", fx.z2())
    doc.categories["F2"] = standard_decl("F2", fx.finset2_std())
    doc.functors["IdZ2"] = functor_decl("IdZ2", "Z2", "Z2", functor_identity(fx.z2()))
    assert parse(serialize(doc)) == doc


MALFORMED_EXPECTATIONS = [
    ("bad_name_digit.cat", "lex", 2),
    ("conflicting_compose.cat", "conflicting-composition", 4),
    ("duplicate_arrow.cat", "duplicate-name", 2),
    ("duplicate_category.cat", "duplicate-name", 6),
    ("duplicate_map.cat", "duplicate-name", 8),
    ("missing_brace.cat", "syntax", 4),
    ("missing_semicolon.cat", "missing-terminator", 4),
    ("nat_wiring.cat", "wiring", 19),
    ("unexpected_char.cat", "lex", 2),
    ("unknown_arrow_object.cat", "unknown-name", 3),
    ("unknown_category_ref.cat", "unknown-name", 6),
    ("unknown_component_key.cat", "unknown-name", 11),
    ("unknown_compose_name.cat", "unknown-name", 3),
    ("unknown_statement.cat", "syntax", 3),
]


@pytest.mark.parametrize("name,kind,line", MALFORMED_EXPECTATIONS)
def test_malformed_corpus(name, kind, line):
    text = (FIXTURES / "malformed" / name).read_text()
    with pytest.raises(CatspecError) as exc:
        parse(text)
    first = exc.value.diagnostics[0]
    assert first.kind == kind
    assert first.span.line == line


# ---------------------------------------------------------------------------
# Generators


def test_gen_poset_two_chain():
    cat = gen_poset(Poset.chain(["i0", "i1"]))
    assert cat.identities == {"i0", "i1"}
    assert len(cat.morphisms) == 3


def test_gen_poset_rejects_non_poset():
    with pytest.raises(GeneratorError):
        Poset(elements=("a", "b"), leq=frozenset({("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")}))


def test_gen_monoid_z2():
    cat = gen_monoid({("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"})
    assert cat == fx.z2()


def test_gen_monoid_rejects_non_associative():
    table = {
        ("e", "e"): "e", ("e", "a"): "a", ("e", "b"): "b",
        ("a", "e"): "a", ("b", "e"): "b",
        ("a", "a"): "b", ("a", "b"): "b", ("b", "a"): "b", ("b", "b"): "a",
    }
    with pytest.raises(GeneratorError):
        gen_monoid(table)


def test_gen_finset_counts():
    std = gen_finset(2, dup=(1,))
    assert len(std.objects) == 4
    assert len(std.arrows) == 18
    assert validate_standard(std).ok
    skeletal = gen_finset(2)
    assert len(skeletal.arrows) == 11


def test_gen_discrete_and_walking_iso():
    assert len(gen_discrete(1).morphisms) == 1
    wi = gen_walking_iso()
    assert validate_objectless(wi.morphisms, wi.table).ok
    assert len(wi.identities) == 2


def test_gen_cyclic_is_group():
    z4 = gen_cyclic(4)
    assert len(z4.identities) == 1
    assert len(z4.morphisms) == 4


def test_gen_random_deterministic():
    assert gen_random(0, 16) == gen_random(0, 16)
    assert gen_random(7, 16) == gen_random(7, 16)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_gen_random_always_valid_and_capped(seed):
    cat = gen_random(seed, 16)
    assert 1 <= len(cat.morphisms) <= 16
    assert validate_objectless(cat.morphisms, cat.table).ok
