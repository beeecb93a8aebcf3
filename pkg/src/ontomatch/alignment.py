"""Correspondences and the RDF alignment file format."""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .errors import MalformedXml, MissingField, ParseError

ALIGN_NS = "http://knowledgeweb.semanticweb.org/heterogeneity/alignment"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD_FLOAT = "http://www.w3.org/2001/XMLSchema#float"


@dataclass(frozen=True)
class Correspondence:
    id: int
    entity1: str
    entity2: str
    measure: float
    relation: str = "="

    def __post_init__(self):
        if not 0.0 <= self.measure <= 1.0:
            raise ValueError(f"measure {self.measure} outside [0, 1]")


@dataclass(frozen=True)
class Alignment:
    onto1: str
    onto2: str
    cells: tuple[Correspondence, ...] = ()
    level: str = "0"
    type_code: str = "11"

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        seen = set()
        for c in self.cells:
            key = (c.entity1, c.entity2)
            if key in seen:
                raise ValueError(f"duplicate correspondence {key}")
            seen.add(key)

    @classmethod
    def from_pairs(cls, onto1, onto2, triples, relation="="):
        """Build from ``(entity1, entity2, measure)`` triples, sorted and numbered from 1."""
        ordered = sorted(triples, key=lambda t: (t[0], t[1]))
        cells = tuple(Correspondence(i, e1, e2, float(m), relation) for i, (e1, e2, m) in enumerate(ordered, start=1))
        return cls(onto1, onto2, cells)

    def pairs(self):
        return {(c.entity1, c.entity2) for c in self.cells}


def assemble_alignment(blocks, onto1, onto2):
    """Turn ``(ScoreMatrix, Assignment)`` blocks into one alignment."""
    triples = []
    for matrix, assignment in blocks:
        for r, c in assignment.pairs:
            triples.append((matrix.rows[r], matrix.cols[c], float(matrix.cells[r, c])))
    return Alignment.from_pairs(onto1, onto2, triples)


def _measure_text(x):
    # repr keeps a decimal digit ("1.0") and round-trips exactly
    return repr(float(x))


def serialize_alignment(a):
    out = [
        '<?xml version="1.0" encoding="utf-8"?>',
        f'<rdf:RDF xmlns="{ALIGN_NS}" xmlns:rdf="{RDF_NS}" xmlns:xsd="http://www.w3.org/2001/XMLSchema#">',
        "<Alignment>",
        "  <xml>yes</xml>",
        f"  <level>{escape(a.level)}</level>",
        f"  <type>{escape(a.type_code)}</type>",
        f"  <onto1>{escape(a.onto1)}</onto1>",
        f"  <onto2>{escape(a.onto2)}</onto2>",
        f"  <uri1>{escape(a.onto1)}</uri1>",
        f"  <uri2>{escape(a.onto2)}</uri2>",
    ]
    for c in sorted(a.cells, key=lambda c: (c.entity1, c.entity2)):
        out += [
            "  <map>",
            "    <Cell>",
            f"      <entity1 rdf:resource={quoteattr(c.entity1)}/>",
            f"      <entity2 rdf:resource={quoteattr(c.entity2)}/>",
            f'      <measure rdf:datatype="{XSD_FLOAT}">{_measure_text(c.measure)}</measure>',
            f"      <relation>{escape(c.relation)}</relation>",
            "    </Cell>",
            "  </map>",
        ]
    out += ["</Alignment>", "</rdf:RDF>", ""]
    return "\n".join(out)


def _local(tag):
    return tag.rsplit("}", 1)[-1]


def _child(node, name):
    for ch in node:
        if _local(ch.tag) == name:
            return ch
    return None


def _ontology_uri(node):
    if node is None:
        return ""
    if node.text and node.text.strip():
        return node.text.strip()
    # OAEI files often nest <Ontology rdf:about="...">
    for ch in node.iter():
        about = ch.get(f"{{{RDF_NS}}}about")
        if about:
            return about
    return ""


def parse_alignment(text):
    """Read an alignment document; namespaces are matched by local name only."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from exc
    align = root if _local(root.tag) == "Alignment" else next((n for n in root.iter() if _local(n.tag) == "Alignment"), None)
    if align is None:
        raise MissingField("no Alignment element")

    def text_of(name, default):
        node = _child(align, name)
        return node.text.strip() if node is not None and node.text else default

    onto1 = _ontology_uri(_child(align, "onto1")) or text_of("uri1", "")
    onto2 = _ontology_uri(_child(align, "onto2")) or text_of("uri2", "")

    triples = []
    relations = []
    for cell in align.iter():
        if _local(cell.tag) != "Cell":
            continue
        fields = {}
        for name in ("entity1", "entity2", "measure", "relation"):
            node = _child(cell, name)
            if node is None:
                raise MissingField(f"Cell lacks <{name}>")
            fields[name] = node
        e1 = fields["entity1"].get(f"{{{RDF_NS}}}resource")
        e2 = fields["entity2"].get(f"{{{RDF_NS}}}resource")
        if not e1 or not e2:
            raise MissingField("Cell entity lacks rdf:resource")
        try:
            measure = float((fields["measure"].text or "").strip())
        except ValueError as exc:
            raise ParseError(f"bad measure {fields['measure'].text!r}") from exc
        triples.append((e1, e2, measure))
        relations.append((fields["relation"].text or "").strip())

    order = sorted(range(len(triples)), key=lambda k: triples[k][:2])
    cells = tuple(
        Correspondence(i, *triples[k], relation=relations[k]) for i, k in enumerate(order, start=1)
    )
    try:
        return Alignment(
            onto1,
            onto2,
            cells,
            level=text_of("level", "0"),
            type_code=text_of("type", "11"),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def read_alignment(path):
    with open(path, "rb") as fh:
        return parse_alignment(fh.read())
