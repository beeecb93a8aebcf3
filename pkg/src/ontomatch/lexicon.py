"""File-backed synonym/hypernym resource used as the semantic fallback."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from importlib import resources

from .errors import CyclicHierarchy, ParseError, UnknownSynset
from .ontology import normalize_label

SYNONYM_SCORE = 0.9
HYPERNYM_SCORE = 0.7

_SYN = re.compile(r"^syn\s+(\S+?)\s*:\s*(.*)$")
_HYPER = re.compile(r"^hyper\s+(\S+)\s*<\s*(\S+)$")


@dataclass(frozen=True)
class LexicalResource:
    synsets: tuple[frozenset[str], ...] = ()
    hypernym_edges: frozenset[tuple[int, int]] = frozenset()
    synset_ids: tuple[str, ...] = ()
    lemma_index: dict[str, frozenset[int]] = field(default_factory=dict, compare=False)
    # ancestors[i]: synsets reachable from i through one or more hypernym edges
    ancestors: tuple[frozenset[int], ...] = field(default=(), compare=False)

    def __len__(self):
        return len(self.synsets)

    def synsets_of(self, lemma):
        return self.lemma_index.get(lemma, frozenset())


def load_lexicon(text):
    """Parse ``syn <id>: a, b`` and ``hyper <child> < <parent>`` lines."""
    ids = {}
    synsets = []
    raw_edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _SYN.match(line):
            sid = m.group(1)
            if sid in ids:
                raise ParseError(f"synset {sid!r} declared twice", lineno)
            lemmas = [normalize_label(x) for x in m.group(2).split(",")]
            if not all(lemmas):
                raise ParseError(f"empty lemma in synset {sid!r}", lineno)
            ids[sid] = len(synsets)
            synsets.append(frozenset(lemmas))
        elif m := _HYPER.match(line):
            child, parent = m.groups()
            if child == parent:
                raise CyclicHierarchy(f"self-loop on {child!r}", lineno)
            raw_edges.append((child, parent, lineno))
        else:
            raise ParseError(f"cannot parse {line!r}", lineno)

    edges = set()
    for child, parent, lineno in raw_edges:
        for sid in (child, parent):
            if sid not in ids:
                raise UnknownSynset(f"undeclared synset {sid!r}", lineno)
        edges.add((ids[child], ids[parent]))

    parents = {i: set() for i in range(len(synsets))}
    for c, p in edges:
        parents[c].add(p)
    try:
        order = list(TopologicalSorter(parents).static_order())
    except CycleError as exc:
        names = [k for k, v in ids.items() if v in set(exc.args[1])]
        raise CyclicHierarchy(f"hypernym cycle through {sorted(names)}") from exc
    # static_order yields parents before children
    ancestors = [frozenset()] * len(synsets)
    for node in order:
        acc = set()
        for p in parents[node]:
            acc.add(p)
            acc |= ancestors[p]
        ancestors[node] = frozenset(acc)

    index = {}
    for i, lemmas in enumerate(synsets):
        for lemma in lemmas:
            index.setdefault(lemma, set()).add(i)
    by_pos = sorted(ids, key=ids.get)
    return LexicalResource(
        synsets=tuple(synsets),
        hypernym_edges=frozenset(edges),
        synset_ids=tuple(by_pos),
        lemma_index={k: frozenset(v) for k, v in index.items()},
        ancestors=tuple(ancestors),
    )


def load_lexicon_file(path):
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh.read())


def fixture_lexicon():
    """The small bundled lexicon covering the worked examples."""
    text = resources.files("ontomatch.data").joinpath("fixture_lexicon.txt").read_text(encoding="utf-8")
    return load_lexicon(text)


def are_synonyms(r, a, b):
    return not r.synsets_of(a).isdisjoint(r.synsets_of(b))


def _reaches(r, src, dst):
    return any(not r.ancestors[s].isdisjoint(dst) for s in src)


def is_hypernym_related(r, a, b):
    sa, sb = r.synsets_of(a), r.synsets_of(b)
    if not sa or not sb:
        return False
    return _reaches(r, sa, sb) or _reaches(r, sb, sa)


def semantic_score(r, a, b):
    if r is None:
        return 0.0
    if are_synonyms(r, a, b):
        return SYNONYM_SCORE
    if is_hypernym_related(r, a, b):
        return HYPERNYM_SCORE
    return 0.0
