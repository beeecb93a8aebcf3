import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ontomatch import (
    Alignment,
    Assignment,
    EntityKind,
    MetricId,
    ScoreMatrix,
    assemble_alignment,
    parse_alignment,
    serialize_alignment,
)
from ontomatch.errors import MalformedXml, MissingField

B101 = "http://oaei.ontologymatching.org/2011/benchmarks/101/onto.rdf"
MEASURE_TAG = '<measure rdf:datatype="http://www.w3.org/2001/XMLSchema#float">'


def _block(rows, cols, cells, pairs):
    m = ScoreMatrix(tuple(rows), tuple(cols), np.array(cells, dtype=float), EntityKind.CLASS, MetricId.LEVENSHTEIN)
    return m, Assignment(tuple(pairs), 0.0)


def test_assemble_periodical_journal():
    block = _block([B101 + "#Periodical"], [B101 + "#Journal"], [[0.7]], [(0, 0)])
    a = assemble_alignment([block], B101, B101)
    (cell,) = a.cells
    assert (cell.id, cell.entity1, cell.entity2, cell.measure, cell.relation) == (
        1, B101 + "#Periodical", B101 + "#Journal", 0.7, "=")


def test_assemble_empty():
    a = assemble_alignment([], "http://a", "http://b")
    assert a.cells == ()
    text = serialize_alignment(a)
    assert "<map>" not in text
    for tag in ("<xml>yes</xml>", "<level>0</level>", "<type>11</type>", "<onto1>http://a</onto1>", "<uri2>http://b</uri2>"):
        assert tag in text


def test_assemble_two_blocks_sorted_ids():
    b1 = _block(["http://a#z", "http://a#b"], ["http://b#1", "http://b#2"], [[0.9, 0], [0, 0.8]], [(0, 0), (1, 1)])
    b2 = _block(["http://a#m"], ["http://b#3"], [[0.6]], [(0, 0)])
    a = assemble_alignment([b1, b2], "http://a", "http://b")
    assert [(c.id, c.entity1) for c in a.cells] == [(1, "http://a#b"), (2, "http://a#m"), (3, "http://a#z")]
    assert [c.measure for c in a.cells] == [0.8, 0.6, 0.9]


def test_serialize_exact_cell():
    a = Alignment.from_pairs(B101, B101, [(B101 + "#type", B101 + "#type", 1.0)])
    text = serialize_alignment(a)
    assert MEASURE_TAG + "1.0</measure>" in text
    assert "<relation>=</relation>" in text
    assert serialize_alignment(a) == text


def test_parse_figure2(data_dir):
    a = parse_alignment((data_dir / "figure2.rdf").read_bytes())
    got = {(c.entity1.rsplit("#")[1], c.entity2.rsplit("#")[1], c.measure, c.relation) for c in a.cells}
    assert got == {("type", "type", 1.0, "="), ("Periodical", "Journal", 0.7, "=")}
    assert (a.level, a.type_code) == ("0", "11")


def test_parse_nested_ontology_header(data_dir):
    a = parse_alignment((data_dir / "conf_reference.rdf").read_bytes())
    assert a.onto1 == "http://example.org/conf-a#"
    assert len(a.cells) == 20


def test_parse_header_only_and_errors():
    header = serialize_alignment(Alignment("http://a", "http://b"))
    assert parse_alignment(header).cells == ()
    broken = serialize_alignment(Alignment.from_pairs("http://a", "http://b", [("http://a#x", "http://b#y", 0.5)]))
    with pytest.raises(MissingField):
        parse_alignment(broken.replace("<relation>=</relation>", ""))
    with pytest.raises(MalformedXml):
        parse_alignment("<rdf:RDF><Alignment>")


iris = st.from_regex(r"http://ex\.org/[a-z]{1,3}#[A-Za-z0-9_&<>\"']{1,6}", fullmatch=True)
triples = st.lists(st.tuples(iris, iris, st.floats(0, 1, allow_nan=False)), max_size=15, unique_by=lambda t: t[:2])


@given(triples, iris, iris)
def test_roundtrip(cells, o1, o2):
    a = Alignment.from_pairs(o1, o2, cells)
    text = serialize_alignment(a)
    assert parse_alignment(text) == a
    assert text.count("<entity1 ") == text.count("<entity2 ") == text.count("<measure ") == len(cells)
    assert text.count("<relation>") == len(cells)
