"""In-memory ontology graph and its two readers (RDF/XML subset, native lines)."""
from __future__ import annotations

import enum
import re
import shlex
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from urllib.parse import urljoin

from .errors import DanglingEdge, DuplicateIri, MalformedXml, MissingOntologyUri, ParseError

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XML_BASE = "{http://www.w3.org/XML/1998/namespace}base"


class EntityKind(enum.Enum):
    CLASS = "Class"
    PROPERTY = "Property"
    INSTANCE = "Instance"


@dataclass(frozen=True)
class Entity:
    iri: str
    kind: EntityKind
    labels: tuple[str, ...] = ()
    local_name: str = ""

    def __post_init__(self):
        if not self.iri:
            raise ValueError("entity IRI must be non-empty")
        if not self.local_name:
            object.__setattr__(self, "local_name", local_name_of(self.iri))
        if not self.local_name:
            raise ValueError(f"cannot derive a local name from {self.iri!r}")
        object.__setattr__(self, "labels", tuple(self.labels))


@dataclass(frozen=True)
class Ontology:
    uri: str
    entities: tuple[Entity, ...] = ()
    subsumption: frozenset[tuple[str, str]] = field(default_factory=frozenset)
    instance_of: frozenset[tuple[str, str]] = field(default_factory=frozenset)
    property_attachment: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "entities", tuple(self.entities))
        for name in ("subsumption", "instance_of", "property_attachment"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        self._check()

    def _check(self):
        kinds = {}
        for e in self.entities:
            if e.iri in kinds:
                raise DuplicateIri(f"duplicate IRI {e.iri}")
            kinds[e.iri] = e.kind
        expected = (
            ("subsumption", EntityKind.CLASS, EntityKind.CLASS),
            ("instance_of", EntityKind.INSTANCE, EntityKind.CLASS),
            ("property_attachment", EntityKind.PROPERTY, EntityKind.CLASS),
        )
        for name, head_kind, tail_kind in expected:
            for head, tail in getattr(self, name):
                if kinds.get(head) is not head_kind or kinds.get(tail) is not tail_kind:
                    raise DanglingEdge(f"{name} edge ({head}, {tail}) does not join {head_kind.value}->{tail_kind.value}")

    def entity(self, iri):
        for e in self.entities:
            if e.iri == iri:
                return e
        raise KeyError(iri)

    def is_subconcept(self, iri):
        return any(child == iri for child, _ in self.subsumption)


def local_name_of(iri):
    if "#" in iri:
        frag = iri.rsplit("#", 1)[1]
        if frag:
            return frag
        iri = iri.rsplit("#", 1)[0]
    return iri.rstrip("/").rsplit("/", 1)[-1]


_CAMEL = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")
_SEPARATORS = re.compile(r"[_\-.]")


def normalize_label(raw):
    """Lowercase, split camelCase and ``_ - .`` into words, collapse spaces.

    >>> normalize_label("hasAuthor")
    'has author'
    >>> normalize_label("Communicable_Diseases")
    'communicable diseases'
    """
    s = _CAMEL.sub(" ", raw)
    s = _SEPARATORS.sub(" ", s)
    return " ".join(s.lower().split())


def display_name(entity):
    return normalize_label(entity.labels[0] if entity.labels else entity.local_name)


def entities_by_kind(ontology, kind):
    return [e for e in ontology.entities if e.kind is kind]


class _Builder:
    """Accumulates declarations in source order, then validates edges once."""

    def __init__(self):
        self.order = []
        self.kinds = {}
        self.labels = {}
        self.edges = {"subsumption": [], "instance_of": [], "property_attachment": []}

    def declare(self, iri, kind, label=None, strict=False, lineno=None):
        if iri in self.kinds:
            if strict:
                raise DuplicateIri(f"{iri} declared twice", lineno)
        else:
            self.order.append(iri)
            self.kinds[iri] = kind
            self.labels[iri] = []
        if label is not None and label not in self.labels[iri]:
            self.labels[iri].append(label)

    def build(self, uri, drop_dangling):
        edges = {}
        required = {
            "subsumption": (EntityKind.CLASS, EntityKind.CLASS),
            "instance_of": (EntityKind.INSTANCE, EntityKind.CLASS),
            "property_attachment": (EntityKind.PROPERTY, EntityKind.CLASS),
        }
        for name, pairs in self.edges.items():
            head_kind, tail_kind = required[name]
            kept = set()
            for head, tail, lineno in pairs:
                ok = self.kinds.get(head) is head_kind and self.kinds.get(tail) is tail_kind
                if ok:
                    kept.add((head, tail))
                elif not drop_dangling:
                    raise DanglingEdge(f"{name} edge references undeclared or mistyped entity ({head}, {tail})", lineno)
            edges[name] = frozenset(kept)
        entities = tuple(Entity(iri, self.kinds[iri], tuple(self.labels[iri])) for iri in self.order)
        return Ontology(uri, entities, **edges)


# ---------------------------------------------------------------------------
# RDF/XML

_PROPERTY_TAGS = {f"{{{OWL}}}ObjectProperty", f"{{{OWL}}}DatatypeProperty"}
_KIND_BY_TYPE = {
    f"{OWL}Class": EntityKind.CLASS,
    f"{RDFS}Class": EntityKind.CLASS,
    f"{OWL}ObjectProperty": EntityKind.PROPERTY,
    f"{OWL}DatatypeProperty": EntityKind.PROPERTY,
    f"{OWL}NamedIndividual": EntityKind.INSTANCE,
}


def parse_rdfxml(document, base=None):
    """Read the supported OWL-in-RDF/XML subset.

    ``base`` overrides any ``xml:base`` found in the document. Constructs
    outside the subset, and edges whose endpoints are not declared, are
    skipped.
    """
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from exc

    if base is None:
        base = root.get(XML_BASE)
    if base is None:
        onto = root.find(f"{{{OWL}}}Ontology")
        if onto is not None and onto.get(f"{{{RDF}}}about"):
            base = onto.get(f"{{{RDF}}}about")
    if not base:
        raise MissingOntologyUri("no xml:base, owl:Ontology IRI, or override available")

    def resolve(node):
        about = node.get(f"{{{RDF}}}about")
        if about is not None:
            return urljoin(base, about) if about else None
        ident = node.get(f"{{{RDF}}}ID")
        if ident:
            return base.rstrip("#") + "#" + ident
        return None

    def resource(node):
        ref = node.get(f"{{{RDF}}}resource")
        return urljoin(base, ref) if ref else None

    b = _Builder()
    # instance typings are resolved after all classes are known
    typings = []
    for node in root:
        if node.tag == f"{{{OWL}}}Class":
            kind = EntityKind.CLASS
        elif node.tag in _PROPERTY_TAGS:
            kind = EntityKind.PROPERTY
        elif node.tag == f"{{{OWL}}}NamedIndividual":
            kind = EntityKind.INSTANCE
        elif node.tag == f"{{{RDF}}}Description":
            kind = None
        else:
            continue
        iri = resolve(node)
        if iri is None:
            continue
        types = [resource(t) for t in node.findall(f"{{{RDF}}}type")]
        if kind is None:
            declared = [_KIND_BY_TYPE[t] for t in types if t in _KIND_BY_TYPE]
            if declared:
                kind = declared[0]
            elif types:
                kind = EntityKind.INSTANCE
            else:
                continue
        labels = [(lab.text or "").strip() for lab in node.findall(f"{{{RDFS}}}label")]
        b.declare(iri, kind)
        for lab in labels:
            if lab:
                b.declare(iri, kind, lab)
        for sub in node.findall(f"{{{RDFS}}}subClassOf"):
            parent = resource(sub)
            if parent:
                b.edges["subsumption"].append((iri, parent, None))
        for dom in node.findall(f"{{{RDFS}}}domain"):
            cls = resource(dom)
            if cls:
                b.edges["property_attachment"].append((iri, cls, None))
        if kind is EntityKind.INSTANCE:
            typings.extend((iri, t) for t in types if t and t not in _KIND_BY_TYPE)
    for inst, cls in typings:
        b.edges["instance_of"].append((inst, cls, None))
    return b.build(base, drop_dangling=True)


# ---------------------------------------------------------------------------
# native line format


def _strip_comment(line):
    quoted = False
    for i, ch in enumerate(line):
        if ch == '"':
            quoted = not quoted
        elif ch == "#" and not quoted and (i == 0 or line[i - 1].isspace()):
            return line[:i]
    return line


def _expand(base, name):
    if "://" in name:
        return name
    return base + name if base.endswith(("#", "/")) else base + "#" + name


def parse_native(text, base=None):
    """Read the one-declaration-per-line fixture format.

    Grammar::

        base <iri>
        class <name> [label "<text>"]
        prop <name> [domain <class>]
        inst <name> of <class>
        isa <child> <parent>

    ``base`` (the argument) overrides a ``base`` line.
    """
    decls = []
    edges = []
    file_base = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).strip()
        if not body:
            continue
        try:
            tok = shlex.split(body)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
        head, args = tok[0], tok[1:]
        if head == "base" and len(args) == 1:
            file_base = args[0]
        elif head == "class" and len(args) in (1, 3) and (len(args) == 1 or args[1] == "label"):
            decls.append((args[0], EntityKind.CLASS, args[2] if len(args) == 3 else None, lineno))
        elif head == "prop" and len(args) in (1, 3) and (len(args) == 1 or args[1] == "domain"):
            decls.append((args[0], EntityKind.PROPERTY, None, lineno))
            if len(args) == 3:
                edges.append(("property_attachment", args[0], args[2], lineno))
        elif head == "inst" and len(args) == 3 and args[1] == "of":
            decls.append((args[0], EntityKind.INSTANCE, None, lineno))
            edges.append(("instance_of", args[0], args[2], lineno))
        elif head == "isa" and len(args) == 2:
            edges.append(("subsumption", args[0], args[1], lineno))
        else:
            raise ParseError(f"cannot parse {body!r}", lineno)
        if head in ("class", "prop", "inst"):
            if args[0] in seen:
                raise DuplicateIri(f"{args[0]} declared twice", lineno)
            seen.add(args[0])

    for name, head, tail, lineno in edges:
        for end in (head, tail):
            if end not in seen:
                raise DanglingEdge(f"{name} edge references undeclared entity {end!r}", lineno)

    base = base or file_base
    if not base:
        raise MissingOntologyUri("no 'base' line and no override given")

    b = _Builder()
    for name, kind, label, lineno in decls:
        b.declare(_expand(base, name), kind, label, strict=True, lineno=lineno)
    for name, head, tail, lineno in edges:
        b.edges[name].append((_expand(base, head), _expand(base, tail), lineno))
    return b.build(base, drop_dangling=False)


def load_ontology(path, base=None):
    """Read an ontology file, sniffing RDF/XML versus the native format."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data.lstrip()[:1] == b"<":
        return parse_rdfxml(data, base=base)
    return parse_native(data.decode("utf-8"), base=base)
