"""The catspec text format: categories, functors, and natural transformations.

Line-oriented, `#` comments, `;` terminators.  Objectless blocks list their
full composition table (identities are inferred, never written down);
standard blocks may omit identity compositions, which the loader completes.
Parsing never partially succeeds: any diagnostic aborts with CatspecError.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .core import ObjlessCategory, is_wellformed_name, validate_objectless
from .errors import ArrowCatError, InvalidCategoryError, NameNotFoundError
from .functors import CONTRAVARIANT, COVARIANT, FunctorMap
from .equivalence import NatTransf
from .report import ValidationReport
from .standard import StdCategory, to_objectless, validate_standard

# Diagnostic kinds.
LEX = "lex"
SYNTAX = "syntax"
MISSING_TERMINATOR = "missing-terminator"
UNKNOWN_NAME = "unknown-name"
DUPLICATE_NAME = "duplicate-name"
CONFLICTING_COMPOSITION = "conflicting-composition"
WIRING = "wiring"


@dataclass(frozen=True)
class Span:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    span: Span

    def __str__(self) -> str:
        return f"{self.span}: {self.kind}: {self.message}"


class CatspecError(ArrowCatError):
    def __init__(self, diagnostics: Iterable[Diagnostic]):
        self.diagnostics = tuple(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class ObjlessDecl:
    name: str
    morphisms: tuple[str, ...]
    table: Mapping[tuple[str, str], str]

    def __post_init__(self):
        object.__setattr__(self, "morphisms", tuple(sorted(self.morphisms)))
        object.__setattr__(self, "table", MappingProxyType(dict(self.table)))


@dataclass(frozen=True)
class StandardDecl:
    name: str
    std: StdCategory


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    source: str
    target: str
    variance: str
    mapping: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "mapping", MappingProxyType(dict(self.mapping)))


@dataclass(frozen=True)
class NatDecl:
    name: str
    source: str
    target: str
    components: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "components", MappingProxyType(dict(self.components)))


CategoryDecl = ObjlessDecl | StandardDecl


@dataclass
class CatspecDocument:
    """One namespace of named categories, functors, and transformations."""

    categories: dict[str, CategoryDecl] = field(default_factory=dict)
    functors: dict[str, FunctorDecl] = field(default_factory=dict)
    nats: dict[str, NatDecl] = field(default_factory=dict)
    source_spans: dict[tuple[str, str], Span] = field(default_factory=dict, compare=False)

    def category_names(self) -> list[str]:
        return sorted(self.categories)

    def _category_decl(self, name: str) -> CategoryDecl:
        decl = self.categories.get(name)
        if decl is None:
            raise NameNotFoundError(f"no category named {name!r}")
        return decl

    def category_report(self, name: str) -> ValidationReport:
        decl = self._category_decl(name)
        if isinstance(decl, ObjlessDecl):
            return validate_objectless(decl.morphisms, decl.table)
        return validate_standard(decl.std)

    def objectless(self, name: str) -> ObjlessCategory:
        """The arrow-only view of a named category; raises on invalid data."""
        decl = self._category_decl(name)
        if isinstance(decl, ObjlessDecl):
            report = self.category_report(name)
            if not report.ok:
                raise InvalidCategoryError(report)
            return ObjlessCategory.build(decl.morphisms, decl.table)
        return to_objectless(decl.std)

    def standard(self, name: str) -> StdCategory:
        decl = self._category_decl(name)
        if isinstance(decl, StandardDecl):
            return decl.std
        raise NameNotFoundError(f"category {name!r} is not in standard form")

    def morphism_names(self, name: str) -> frozenset[str]:
        decl = self._category_decl(name)
        if isinstance(decl, ObjlessDecl):
            return frozenset(decl.morphisms)
        return frozenset(decl.std.arrows)

    def functor(self, name: str) -> FunctorMap:
        decl = self.functors.get(name)
        if decl is None:
            raise NameNotFoundError(f"no functor named {name!r}")
        return FunctorMap(
            source=self.objectless(decl.source),
            target=self.objectless(decl.target),
            mapping=decl.mapping,
            variance=decl.variance,
            name=name,
        )

    def nat(self, name: str) -> NatTransf:
        decl = self.nats.get(name)
        if decl is None:
            raise NameNotFoundError(f"no transformation named {name!r}")
        source = self.functor(decl.source)
        target = self.functor(decl.target)
        components = dict(decl.components)
        source_cat = self.functors[decl.source].source
        cat_decl = self.categories.get(source_cat)
        if isinstance(cat_decl, StandardDecl):
            # Components of standard-form categories are keyed by object name.
            components = {
                cat_decl.std.id_of.get(key, key): value
                for key, value in components.items()
            }
        return NatTransf(source=source, target=target, components=components, name=name)


# ---------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | punct | eof
    value: str
    span: Span


_PUNCT2 = ("->", "=>")
_PUNCT1 = "{}:;,.=[]"


def _lex(text: str) -> tuple[list[_Token], list[Diagnostic]]:
    tokens: list[_Token] = []
    diagnostics: list[Diagnostic] = []
    line, col, i = 1, 1, 0
    n = len(text)

    def bump(length: int):
        nonlocal line, col, i
        for _ in range(length):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            bump(1)
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                bump(1)
            continue
        span = Span(line, col)
        if text.startswith(_PUNCT2[0], i) or text.startswith(_PUNCT2[1], i):
            tokens.append(_Token("punct", text[i:i + 2], span))
            bump(2)
            continue
        if ch in _PUNCT1:
            tokens.append(_Token("punct", ch, span))
            bump(1)
            continue
        if ch.isalnum() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if not is_wellformed_name(word):
                diagnostics.append(Diagnostic(
                    LEX, f"malformed name {word!r} (names must not begin with a digit)", span,
                ))
            tokens.append(_Token("ident", word, span))
            bump(j - i)
            continue
        diagnostics.append(Diagnostic(LEX, f"unexpected character {ch!r}", span))
        bump(1)
    tokens.append(_Token("eof", "", Span(line, col)))
    return tokens, diagnostics


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens: list[_Token], diagnostics: list[Diagnostic]):
        self.tokens = tokens
        self.pos = 0
        self.diagnostics = diagnostics
        self.doc = CatspecDocument()

    # -- token helpers

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at_punct(self, value: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.value == value

    def error(self, kind: str, message: str, span: Span | None = None) -> None:
        self.diagnostics.append(Diagnostic(kind, message, span or self.peek().span))

    def expect_punct(self, value: str) -> bool:
        if self.at_punct(value):
            self.advance()
            return True
        self.error(SYNTAX, f"expected {value!r}, found {self.peek().value!r}")
        return False

    def expect_ident(self, what: str) -> _Token | None:
        tok = self.peek()
        if tok.kind == "ident":
            return self.advance()
        self.error(SYNTAX, f"expected {what}, found {tok.value!r}")
        return None

    def expect_terminator(self) -> None:
        if self.at_punct(";"):
            self.advance()
            return
        self.error(MISSING_TERMINATOR, f"missing ';' before {self.peek().value!r}")

    def sync_statement(self) -> None:
        while True:
            tok = self.peek()
            if tok.kind == "eof" or (tok.kind == "punct" and tok.value in ";}"):
                if tok.kind == "punct" and tok.value == ";":
                    self.advance()
                return
            self.advance()

    # -- entity bookkeeping

    def declare(self, kind: str, name: str, span: Span, table: dict) -> bool:
        if name in table:
            self.error(DUPLICATE_NAME, f"duplicate {kind} name {name!r}", span)
            return False
        self.doc.source_spans[(kind, name)] = span
        return True

    # -- grammar

    def parse(self) -> CatspecDocument:
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "ident" and tok.value == "objless":
                self.parse_objless()
            elif tok.kind == "ident" and tok.value == "category":
                self.parse_category()
            elif tok.kind == "ident" and tok.value == "functor":
                self.parse_functor()
            elif tok.kind == "ident" and tok.value == "nat":
                self.parse_nat()
            else:
                self.error(SYNTAX, f"expected a declaration keyword, found {tok.value!r}")
                self.advance()
        return self.doc

    def parse_name_list(self) -> list[_Token]:
        names = []
        tok = self.expect_ident("a name")
        if tok is not None:
            names.append(tok)
        while self.at_punct(","):
            self.advance()
            tok = self.expect_ident("a name")
            if tok is not None:
                names.append(tok)
        return names

    def parse_objless(self) -> None:
        self.advance()  # objless
        name_tok = self.expect_ident("a category name")
        if name_tok is None or not self.expect_punct("{"):
            self.sync_statement()
            return
        morphisms: dict[str, Span] = {}
        table: dict[tuple[str, str], str] = {}
        entries: list[tuple[str, str, str, Span]] = []
        while not self.at_punct("}") and self.peek().kind != "eof":
            head = self.peek()
            if head.kind == "ident" and head.value == "arrows":
                self.advance()
                self.expect_punct(":")
                for tok in self.parse_name_list():
                    if tok.value in morphisms:
                        self.error(DUPLICATE_NAME, f"duplicate arrow {tok.value!r}", tok.span)
                    else:
                        morphisms[tok.value] = tok.span
                self.expect_terminator()
            elif head.kind == "ident" and head.value == "compose":
                self.advance()
                self.expect_punct(":")
                after = self.expect_ident("a morphism name")
                ok = after is not None and self.expect_punct(".")
                before = self.expect_ident("a morphism name") if ok else None
                ok = before is not None and self.expect_punct("=")
                result = self.expect_ident("a morphism name") if ok else None
                if after and before and result:
                    entries.append((after.value, before.value, result.value, head.span))
                else:
                    self.sync_statement()
                    continue
                self.expect_terminator()
            else:
                self.error(SYNTAX, f"expected 'arrows' or 'compose', found {head.value!r}")
                self.advance()
                self.sync_statement()
        self.expect_punct("}")
        for after, before, result, span in entries:
            for part in (after, before, result):
                if part not in morphisms:
                    self.error(UNKNOWN_NAME, f"composition references undeclared arrow {part!r}", span)
            prior = table.get((after, before))
            if prior is not None and prior != result:
                self.error(
                    CONFLICTING_COMPOSITION,
                    f"{after}.{before} declared as both {prior!r} and {result!r}", span,
                )
            else:
                table[(after, before)] = result
        if self.declare("category", name_tok.value, name_tok.span, self.doc.categories):
            self.doc.categories[name_tok.value] = ObjlessDecl(
                name=name_tok.value, morphisms=tuple(morphisms), table=table,
            )

    def parse_category(self) -> None:
        self.advance()  # category
        name_tok = self.expect_ident("a category name")
        if name_tok is None or not self.expect_punct("{"):
            self.sync_statement()
            return
        objects: dict[str, Span] = {}
        arrows: dict[str, tuple[str, str]] = {}
        arrow_spans: dict[str, Span] = {}
        declared_ids: dict[str, str] = {}
        entries: list[tuple[str, str, str, Span]] = []
        while not self.at_punct("}") and self.peek().kind != "eof":
            head = self.peek()
            if head.kind == "ident" and head.value == "objects":
                self.advance()
                self.expect_punct(":")
                for tok in self.parse_name_list():
                    if tok.value in objects:
                        self.error(DUPLICATE_NAME, f"duplicate object {tok.value!r}", tok.span)
                    else:
                        objects[tok.value] = tok.span
                self.expect_terminator()
            elif head.kind == "ident" and head.value == "arrow":
                self.advance()
                arrow = self.expect_ident("an arrow name")
                ok = arrow is not None and self.expect_punct(":")
                dom = self.expect_ident("an object name") if ok else None
                ok = dom is not None and self.expect_punct("->")
                cod = self.expect_ident("an object name") if ok else None
                if arrow and dom and cod:
                    if arrow.value in arrows:
                        self.error(DUPLICATE_NAME, f"duplicate arrow {arrow.value!r}", arrow.span)
                    else:
                        arrows[arrow.value] = (dom.value, cod.value)
                        arrow_spans[arrow.value] = arrow.span
                else:
                    self.sync_statement()
                    continue
                self.expect_terminator()
            elif head.kind == "ident" and head.value == "id":
                self.advance()
                obj = self.expect_ident("an object name")
                ok = obj is not None and self.expect_punct("=")
                ident = self.expect_ident("an arrow name") if ok else None
                if obj and ident:
                    if obj.value in declared_ids:
                        self.error(DUPLICATE_NAME, f"object {obj.value!r} has two identity declarations", obj.span)
                    elif ident.value in arrows:
                        self.error(DUPLICATE_NAME, f"identity name {ident.value!r} already declared", ident.span)
                    else:
                        declared_ids[obj.value] = ident.value
                        arrows[ident.value] = (obj.value, obj.value)
                        arrow_spans[ident.value] = ident.span
                else:
                    self.sync_statement()
                    continue
                self.expect_terminator()
            elif head.kind == "ident" and head.value == "compose":
                self.advance()
                self.expect_punct(":")
                after = self.expect_ident("an arrow name")
                ok = after is not None and self.expect_punct(".")
                before = self.expect_ident("an arrow name") if ok else None
                ok = before is not None and self.expect_punct("=")
                result = self.expect_ident("an arrow name") if ok else None
                if after and before and result:
                    entries.append((after.value, before.value, result.value, head.span))
                else:
                    self.sync_statement()
                    continue
                self.expect_terminator()
            else:
                self.error(SYNTAX, f"expected 'objects', 'arrow', 'id', or 'compose', found {head.value!r}")
                self.advance()
                self.sync_statement()
        self.expect_punct("}")

        for obj in objects:
            if obj not in declared_ids:
                auto = f"id_{obj}"
                if auto in arrows:
                    self.error(
                        DUPLICATE_NAME,
                        f"auto identity name {auto!r} collides with a declared arrow; use 'id {obj} = ...;'",
                        objects[obj],
                    )
                else:
                    declared_ids[obj] = auto
                    arrows[auto] = (obj, obj)
        for arrow, (dom, cod) in sorted(arrows.items()):
            span = arrow_spans.get(arrow, name_tok.span)
            for obj in (dom, cod):
                if obj not in objects:
                    self.error(UNKNOWN_NAME, f"arrow {arrow!r} references undeclared object {obj!r}", span)
        for obj in declared_ids:
            if obj not in objects:
                self.error(UNKNOWN_NAME, f"identity declared for undeclared object {obj!r}", name_tok.span)

        table: dict[tuple[str, str], str] = {}
        for after, before, result, span in entries:
            for part in (after, before, result):
                if part not in arrows:
                    self.error(UNKNOWN_NAME, f"composition references undeclared arrow {part!r}", span)
            prior = table.get((after, before))
            if prior is not None and prior != result:
                self.error(
                    CONFLICTING_COMPOSITION,
                    f"{after}.{before} declared as both {prior!r} and {result!r}", span,
                )
            else:
                table[(after, before)] = result

        id_of = dict(declared_ids)
        for arrow, (dom, cod) in arrows.items():
            dom_id = id_of.get(dom)
            cod_id = id_of.get(cod)
            if dom_id is not None:
                table.setdefault((arrow, dom_id), arrow)
            if cod_id is not None:
                table.setdefault((cod_id, arrow), arrow)

        if self.declare("category", name_tok.value, name_tok.span, self.doc.categories):
            self.doc.categories[name_tok.value] = StandardDecl(
                name=name_tok.value,
                std=StdCategory.make(objects=objects, arrows=arrows, table=table, id_of=id_of),
            )

    def parse_functor(self) -> None:
        self.advance()  # functor
        name_tok = self.expect_ident("a functor name")
        ok = name_tok is not None and self.expect_punct(":")
        source = self.expect_ident("a category name") if ok else None
        ok = source is not None and self.expect_punct("->")
        target = self.expect_ident("a category name") if ok else None
        if name_tok is None or source is None or target is None:
            self.sync_statement()
            return
        variance = COVARIANT
        if self.peek().kind == "ident" and self.peek().value == "contravariant":
            self.advance()
            variance = CONTRAVARIANT
        elif self.at_punct("["):
            self.advance()
            tok = self.expect_ident("'contravariant'")
            if tok is not None and tok.value != "contravariant":
                self.error(SYNTAX, f"expected 'contravariant', found {tok.value!r}", tok.span)
            self.expect_punct("]")
            variance = CONTRAVARIANT
        if not self.expect_punct("{"):
            self.sync_statement()
            return
        mapping: dict[str, str] = {}
        pairs: list[tuple[str, str, Span]] = []
        while not self.at_punct("}") and self.peek().kind != "eof":
            head = self.peek()
            if head.kind == "ident" and head.value == "map":
                self.advance()
                key = self.expect_ident("a morphism name")
                ok = key is not None and self.expect_punct("->")
                value = self.expect_ident("a morphism name") if ok else None
                if key and value:
                    pairs.append((key.value, value.value, key.span))
                else:
                    self.sync_statement()
                    continue
                self.expect_terminator()
            else:
                self.error(SYNTAX, f"expected 'map', found {head.value!r}")
                self.advance()
                self.sync_statement()
        self.expect_punct("}")

        for cat, tok in ((source.value, source), (target.value, target)):
            if cat not in self.doc.categories:
                self.error(UNKNOWN_NAME, f"functor references unknown category {cat!r}", tok.span)
        src_names = self.doc.morphism_names(source.value) if source.value in self.doc.categories else frozenset()
        dst_names = self.doc.morphism_names(target.value) if target.value in self.doc.categories else frozenset()
        for key, value, span in pairs:
            if key in mapping:
                self.error(DUPLICATE_NAME, f"morphism {key!r} mapped twice", span)
                continue
            if source.value in self.doc.categories and key not in src_names:
                self.error(UNKNOWN_NAME, f"map key {key!r} is not a morphism of {source.value}", span)
            if target.value in self.doc.categories and value not in dst_names:
                self.error(UNKNOWN_NAME, f"map value {value!r} is not a morphism of {target.value}", span)
            mapping[key] = value

        if self.declare("functor", name_tok.value, name_tok.span, self.doc.functors):
            self.doc.functors[name_tok.value] = FunctorDecl(
                name=name_tok.value, source=source.value, target=target.value,
                variance=variance, mapping=mapping,
            )

    def parse_nat(self) -> None:
        self.advance()  # nat
        name_tok = self.expect_ident("a transformation name")
        ok = name_tok is not None and self.expect_punct(":")
        source = self.expect_ident("a functor name") if ok else None
        ok = source is not None and self.expect_punct("=>")
        target = self.expect_ident("a functor name") if ok else None
        if name_tok is None or source is None or target is None or not self.expect_punct("{"):
            self.sync_statement()
            return
        components: dict[str, str] = {}
        triples: list[tuple[str, str, Span]] = []
        while not self.at_punct("}") and self.peek().kind != "eof":
            head = self.peek()
            if head.kind == "ident" and head.value == "component":
                self.advance()
                key = self.expect_ident("an identity or object name")
                ok = key is not None and self.expect_punct(":")
                value = self.expect_ident("a morphism name") if ok else None
                if key and value:
                    triples.append((key.value, value.value, key.span))
                else:
                    self.sync_statement()
                    continue
                self.expect_terminator()
            else:
                self.error(SYNTAX, f"expected 'component', found {head.value!r}")
                self.advance()
                self.sync_statement()
        self.expect_punct("}")

        source_decl = self.doc.functors.get(source.value)
        target_decl = self.doc.functors.get(target.value)
        for fun, tok in ((source.value, source), (target.value, target)):
            if fun not in self.doc.functors:
                self.error(UNKNOWN_NAME, f"transformation references unknown functor {fun!r}", tok.span)
        if source_decl is not None and target_decl is not None:
            if (source_decl.source, source_decl.target) != (target_decl.source, target_decl.target):
                self.error(
                    WIRING,
                    f"functors {source.value} and {target.value} do not share source and target",
                    name_tok.span,
                )

        key_names: frozenset[str] = frozenset()
        value_names: frozenset[str] = frozenset()
        if source_decl is not None and source_decl.source in self.doc.categories:
            cat_decl = self.doc.categories[source_decl.source]
            if isinstance(cat_decl, StandardDecl):
                key_names = frozenset(cat_decl.std.objects)
            else:
                key_names = frozenset(cat_decl.morphisms)
        if source_decl is not None and source_decl.target in self.doc.categories:
            value_names = self.doc.morphism_names(source_decl.target)

        for key, value, span in triples:
            if key in components:
                self.error(DUPLICATE_NAME, f"component at {key!r} declared twice", span)
                continue
            if key_names and key not in key_names:
                self.error(UNKNOWN_NAME, f"component key {key!r} not found in the source category", span)
            if value_names and value not in value_names:
                self.error(UNKNOWN_NAME, f"component value {value!r} not found in the target category", span)
            components[key] = value

        if self.declare("nat", name_tok.value, name_tok.span, self.doc.nats):
            self.doc.nats[name_tok.value] = NatDecl(
                name=name_tok.value, source=source.value, target=target.value,
                components=components,
            )


def parse(text: str) -> CatspecDocument:
    """Parse catspec text; raises CatspecError carrying all diagnostics."""
    tokens, diagnostics = _lex(text)
    parser = _Parser(tokens, diagnostics)
    doc = parser.parse()
    if parser.diagnostics:
        raise CatspecError(parser.diagnostics)
    return doc


# ---------------------------------------------------------------------------
# Serializer


def _is_forced_identity_entry(std: StdCategory, after: str, before: str, result: str) -> bool:
    ids = set(std.id_of.values())
    return (before in ids and result == after) or (after in ids and result == before)


def serialize(doc: CatspecDocument) -> str:
    """Canonical text: entities sorted by name, arrows and compositions sorted."""
    chunks: list[str] = []
    for name in sorted(doc.categories):
        decl = doc.categories[name]
        if isinstance(decl, ObjlessDecl):
            lines = [f"objless {name} {{"]
            lines.append(f"  arrows: {', '.join(sorted(decl.morphisms))};")
            for (after, before), result in sorted(decl.table.items()):
                lines.append(f"  compose: {after} . {before} = {result};")
            lines.append("}")
        else:
            std = decl.std
            ids = set(std.id_of.values())
            lines = [f"category {name} {{"]
            lines.append(f"  objects: {', '.join(sorted(std.objects))};")
            for arrow, (dom, cod) in sorted(std.arrows.items()):
                if arrow not in ids:
                    lines.append(f"  arrow {arrow}: {dom} -> {cod};")
            for obj in sorted(std.objects):
                ident = std.id_of.get(obj)
                if ident is not None and ident != f"id_{obj}":
                    lines.append(f"  id {obj} = {ident};")
            for (after, before), result in sorted(std.table.items()):
                if not _is_forced_identity_entry(std, after, before, result):
                    lines.append(f"  compose: {after} . {before} = {result};")
            lines.append("}")
        chunks.append("\n".join(lines))
    for name in sorted(doc.functors):
        decl = doc.functors[name]
        variance = " contravariant" if decl.variance == CONTRAVARIANT else ""
        lines = [f"functor {name}: {decl.source} -> {decl.target}{variance} {{"]
        for key, value in sorted(decl.mapping.items()):
            lines.append(f"  map {key} -> {value};")
        lines.append("}")
        chunks.append("\n".join(lines))
    for name in sorted(doc.nats):
        decl = doc.nats[name]
        lines = [f"nat {name}: {decl.source} => {decl.target} {{"]
        for key, value in sorted(decl.components.items()):
            lines.append(f"  component {key}: {value};")
        lines.append("}")
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + ("\n" if chunks else "")


# ---------------------------------------------------------------------------
# Programmatic document construction


def objless_decl(name: str, cat: ObjlessCategory) -> ObjlessDecl:
    return ObjlessDecl(name=name, morphisms=tuple(cat.morphisms), table=dict(cat.table))


def standard_decl(name: str, std: StdCategory) -> StandardDecl:
    return StandardDecl(name=name, std=std)


def functor_decl(name: str, source: str, target: str, f: FunctorMap) -> FunctorDecl:
    return FunctorDecl(
        name=name, source=source, target=target,
        variance=f.variance, mapping=dict(f.mapping),
    )


def nat_decl(name: str, source: str, target: str, nat: NatTransf) -> NatDecl:
    return NatDecl(name=name, source=source, target=target, components=dict(nat.components))
