import pytest
from hypothesis import given
from hypothesis import strategies as st

from ontomatch import (
    Entity,
    EntityKind,
    Ontology,
    display_name,
    entities_by_kind,
    normalize_label,
    parse_native,
    parse_rdfxml,
)
from ontomatch.errors import DanglingEdge, DuplicateIri, MalformedXml, MissingOntologyUri, ParseError
from ontomatch.ontology import load_ontology, local_name_of

RDF_HEAD = (
    '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#" '
    'xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#" '
    'xmlns:owl="http://www.w3.org/2002/07/owl#" '
    'xml:base="http://oaei.ontologymatching.org/2011/benchmarks/101/onto.rdf">'
)
BASE = "http://oaei.ontologymatching.org/2011/benchmarks/101/onto.rdf"


def _edges_resolve(onto):
    iris = {e.iri for e in onto.entities}
    edges = onto.subsumption | onto.instance_of | onto.property_attachment
    return all(a in iris and b in iris for a, b in edges)


def test_rdfxml_single_labelled_class():
    doc = f"""<?xml version="1.0"?>
{RDF_HEAD}
  <owl:Class rdf:about="#Journal">
    <rdfs:label>journal</rdfs:label>
  </owl:Class>
</rdf:RDF>"""
    onto = parse_rdfxml(doc.encode())
    assert len(onto.entities) == 1
    (e,) = onto.entities
    assert e.kind is EntityKind.CLASS
    assert e.local_name == "Journal"
    assert e.labels == ("journal",)
    assert e.iri == BASE + "#Journal"


def test_rdfxml_empty_root():
    onto = parse_rdfxml(f"{RDF_HEAD}</rdf:RDF>".encode())
    assert onto.entities == ()
    assert not (onto.subsumption or onto.instance_of or onto.property_attachment)
    assert onto.uri == BASE


def test_rdfxml_subclass_edge():
    doc = f"""{RDF_HEAD}
  <owl:Class rdf:about="#Periodical"/>
  <owl:Class rdf:about="#Journal"><rdfs:subClassOf rdf:resource="#Periodical"/></owl:Class>
</rdf:RDF>"""
    onto = parse_rdfxml(doc.encode())
    assert onto.subsumption == {(BASE + "#Journal", BASE + "#Periodical")}
    assert onto.is_subconcept(BASE + "#Journal")
    assert not onto.is_subconcept(BASE + "#Periodical")


def test_rdfxml_edge_to_undeclared_class_is_skipped():
    doc = f"""{RDF_HEAD}
  <owl:Class rdf:about="#Journal"><rdfs:subClassOf rdf:resource="http://www.w3.org/2002/07/owl#Thing"/></owl:Class>
</rdf:RDF>"""
    onto = parse_rdfxml(doc.encode())
    assert onto.subsumption == frozenset()


def test_rdfxml_errors():
    with pytest.raises(MalformedXml):
        parse_rdfxml(b"<rdf:RDF><owl:Class></rdf:RDF>")
    bare = (
        '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#" '
        'xmlns:owl="http://www.w3.org/2002/07/owl#"><owl:Class rdf:about="#A"/></rdf:RDF>'
    )
    with pytest.raises(MissingOntologyUri):
        parse_rdfxml(bare.encode())
    onto = parse_rdfxml(bare.encode(), base="http://ex.org/o")
    assert onto.entities[0].iri == "http://ex.org/o#A"


def test_rdfxml_kinds_and_instances(data_dir):
    onto = load_ontology(data_dir / "bibliography.rdf")
    kinds = {e.local_name: e.kind for e in onto.entities}
    assert kinds == {
        "Publication": EntityKind.CLASS,
        "Periodical": EntityKind.CLASS,
        "Journal": EntityKind.CLASS,
        "hasAuthor": EntityKind.PROPERTY,
        "hasTitle": EntityKind.PROPERTY,
        "nature": EntityKind.INSTANCE,
        "lancet": EntityKind.INSTANCE,
    }
    b = "http://example.org/biblio#"
    assert onto.instance_of == {(b + "nature", b + "Journal"), (b + "lancet", b + "Journal")}
    assert onto.property_attachment == {(b + "hasAuthor", b + "Publication"), (b + "hasTitle", b + "Publication")}
    assert _edges_resolve(onto)


def test_rdfxml_and_native_fixtures_agree(data_dir):
    assert load_ontology(data_dir / "bibliography.rdf") == load_ontology(data_dir / "bibliography.onto")


def test_native_car_vehicle():
    onto = parse_native("class Car\nclass Vehicle\nisa Car Vehicle", base="http://ex.org/v")
    assert [e.local_name for e in onto.entities] == ["Car", "Vehicle"]
    assert all(e.kind is EntityKind.CLASS for e in onto.entities)
    assert onto.subsumption == {("http://ex.org/v#Car", "http://ex.org/v#Vehicle")}


def test_native_empty_needs_base():
    with pytest.raises(MissingOntologyUri):
        parse_native("")
    assert parse_native("", base="http://ex.org/e").entities == ()
    assert parse_native("base http://ex.org/e\n").uri == "http://ex.org/e"


def test_native_dangling_edge():
    with pytest.raises(DanglingEdge):
        parse_native("class A\nisa A B")


def test_native_wrong_kind_edge():
    with pytest.raises(DanglingEdge):
        parse_native("class A\nprop p\nisa A p", base="http://ex.org/x")


def test_native_duplicate_and_syntax_errors():
    with pytest.raises(DuplicateIri) as exc:
        parse_native("base http://x.org/\nclass A\nclass A")
    assert exc.value.lineno == 3
    with pytest.raises(ParseError) as exc:
        parse_native("base http://x.org/\nclass A\nfrobnicate A")
    assert exc.value.lineno == 3


def test_native_labels_comments_and_iris():
    text = """
# comment line
base http://ex.org/onto#   # trailing comment keeps the '#' in the IRI
class Pizza label "Pizza pie"  # labelled
class http://other.org/Food
isa Pizza http://other.org/Food
prop hasTopping domain Pizza
inst margherita of Pizza
"""
    onto = parse_native(text)
    assert onto.uri == "http://ex.org/onto#"
    pizza = onto.entity("http://ex.org/onto#Pizza")
    assert pizza.labels == ("Pizza pie",)
    assert onto.entity("http://other.org/Food").local_name == "Food"
    assert onto.instance_of == {("http://ex.org/onto#margherita", "http://ex.org/onto#Pizza")}


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("hasAuthor", "has author"),
        ("pizza", "pizza"),
        ("Communicable_Diseases", "communicable diseases"),
        ("  foo--bar..baz  ", "foo bar baz"),
        ("HTTPServer", "http server"),
        ("has_title", "has title"),
    ],
)
def test_normalize_label(raw, expected):
    assert normalize_label(raw) == expected


@given(st.text())
def test_normalize_label_idempotent(s):
    once = normalize_label(s)
    assert normalize_label(once) == once


@pytest.mark.parametrize(
    "local, labels, expected",
    [("Journal", (), "journal"), ("C42", ("Periodical",), "periodical"), ("hasTitle", (), "has title")],
)
def test_display_name(local, labels, expected):
    e = Entity(f"http://ex.org/o#{local}", EntityKind.CLASS, labels)
    assert display_name(e) == expected


def test_local_name_extraction():
    assert local_name_of("http://ex.org/o#Journal") == "Journal"
    assert local_name_of("http://ex.org/o/Journal") == "Journal"
    assert local_name_of("http://ex.org/o/Journal/") == "Journal"


def test_entities_by_kind():
    onto = parse_native("class A\nclass B\nclass C\nprop p", base="http://ex.org/k")
    assert [e.local_name for e in entities_by_kind(onto, EntityKind.CLASS)] == ["A", "B", "C"]
    assert len(entities_by_kind(onto, EntityKind.PROPERTY)) == 1
    assert entities_by_kind(Ontology("http://ex.org/e"), EntityKind.INSTANCE) == []


names = st.lists(st.from_regex(r"[A-Za-z][A-Za-z0-9]{0,6}", fullmatch=True), unique=True, max_size=12)


@given(names, st.data())
def test_native_kinds_partition_entities(names, data):
    lines = []
    classes = []
    for name in names:
        kind = data.draw(st.sampled_from(["class", "prop", "inst"]))
        if kind == "inst" and not classes:
            kind = "class"
        if kind == "class":
            classes.append(name)
            lines.append(f"class {name}")
        elif kind == "prop":
            lines.append(f"prop {name}")
        else:
            lines.append(f"inst {name} of {data.draw(st.sampled_from(classes))}")
    onto = parse_native("\n".join(lines), base="http://ex.org/p")
    groups = [entities_by_kind(onto, k) for k in EntityKind]
    flat = [e.iri for g in groups for e in g]
    assert sorted(flat) == sorted(e.iri for e in onto.entities)
    assert len(flat) == len(set(flat)) == len(names)
    assert _edges_resolve(onto)
