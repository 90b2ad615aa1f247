"""Domain model: chunks, feature structures, subcategorization frames,
the semantic label ontology and the feature similarity measure.

Everything in this module is immutable after construction, so instances
can be shared freely between concurrent sentence analyses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

POS_TAGS = ("NP", "PP", "VP", "SE")
NUMBERS = ("sg", "pl")
GENDERS = ("m", "f")
PERSONS = (1, 2, 3)

ONTOLOGY_ROOT = "Top"

#: Lexicon entries under this lemma apply to every NP/PP chunk (nominal
#: modifier frames), instead of being looked up by head lemma.
WILDCARD_LEMMA = "*"


@dataclass(frozen=True)
class FeatureStructure:
    """Attribute-value description of one chunk.

    ``head`` is the meaning-bearing lemma of the chunk and ``handle`` the
    preposition that signals its relation to a governor (empty when there
    is none).  ``num``, ``gen`` and ``per`` are agreement features where
    ``None`` means unspecified.  ``sem`` holds one or more ontology labels;
    ``{"Top"}`` is the uninformative default.
    """

    head: str
    handle: str = ""
    pos: str = "NP"
    num: str | None = None
    gen: str | None = None
    per: int | None = None
    sem: frozenset = frozenset({ONTOLOGY_ROOT})

    def __post_init__(self):
        if not self.head:
            raise ValueError("chunk head must be a non-empty lemma")
        if self.pos not in POS_TAGS:
            raise ValueError(f"unknown pos {self.pos!r}, expected one of {POS_TAGS}")
        if self.pos == "SE" and self.head != "se":
            raise ValueError("SE chunks must have head 'se'")
        if self.pos == "PP" and not self.handle:
            raise ValueError("PP chunks need a preposition handle")
        if self.num is not None and self.num not in NUMBERS:
            raise ValueError(f"bad number {self.num!r}")
        if self.gen is not None and self.gen not in GENDERS:
            raise ValueError(f"bad gender {self.gen!r}")
        if self.per is not None and self.per not in PERSONS:
            raise ValueError(f"bad person {self.per!r}")
        object.__setattr__(self, "sem", frozenset(self.sem))
        if not self.sem:
            raise ValueError("sem must contain at least one label")
        for label in self.sem:
            if not isinstance(label, str) or not label:
                raise ValueError("semantic labels must be non-empty strings")


@dataclass(frozen=True)
class Chunk:
    """One shallow-parsed phrase: an id, its features and a token span.

    ``span`` is the half-open interval [start, end) of token positions.
    """

    id: int
    fs: FeatureStructure
    span: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "span", (int(self.span[0]), int(self.span[1])))
        start, end = self.span
        if start < 0 or end <= start:
            raise ValueError(f"bad span {self.span} for chunk {self.id}")

    @property
    def start(self) -> int:
        return self.span[0]


@dataclass(frozen=True)
class Sentence:
    """A sentence as a token count plus its ordered, disjoint chunks."""

    id: str
    token_count: int
    chunks: tuple[Chunk, ...]

    def __post_init__(self):
        object.__setattr__(self, "chunks", tuple(self.chunks))
        if self.token_count < 1:
            raise ValueError("token_count must be positive")
        ids = [c.id for c in self.chunks]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate chunk ids in sentence {self.id!r}")
        if ids != sorted(ids):
            raise ValueError(f"chunks of sentence {self.id!r} must be ordered by id")
        prev_end = 0
        for c in self.chunks:
            if c.span[0] < prev_end:
                raise ValueError(
                    f"chunk {c.id} of sentence {self.id!r} overlaps its predecessor"
                )
            prev_end = c.span[1]
        if self.chunks and self.token_count < max(c.span[1] for c in self.chunks):
            raise ValueError(
                f"token_count {self.token_count} smaller than the last chunk end"
            )

    def chunk(self, chunk_id: int) -> Chunk:
        for c in self.chunks:
            if c.id == chunk_id:
                return c
        raise KeyError(f"no chunk {chunk_id} in sentence {self.id!r}")


@dataclass(frozen=True)
class RoleSpec:
    """One role slot of a subcategorization frame.

    ``synt`` is the required chunk category, ``preps`` the admissible
    handle prepositions (PP slots only; empty means the slot is not a PP
    slot), ``comp`` the role name, ``sem`` the required semantic label,
    ``agree`` whether the filler must agree with the governor in number
    and gender, and ``optional`` whether the slot may stay unfilled.
    """

    synt: str
    preps: frozenset
    comp: str
    sem: str
    agree: bool
    optional: bool

    def __post_init__(self):
        if self.synt not in ("NP", "PP", "SE"):
            raise ValueError(f"role slots cannot require category {self.synt!r}")
        object.__setattr__(self, "preps", frozenset(self.preps))
        if self.synt == "PP" and not self.preps:
            raise ValueError(f"PP slot {self.comp!r} needs at least one preposition")
        if self.synt in ("NP", "SE") and self.preps:
            raise ValueError(f"{self.synt} slot {self.comp!r} cannot take prepositions")
        if not self.comp:
            raise ValueError("role name must be non-empty")

    def admits(self, chunk: Chunk) -> bool:
        """Hard filter: category match, and handle match for PP slots.

        Semantics and agreement are deliberately not checked here; they
        feed the soft similarity weight instead.
        """
        if chunk.fs.pos != self.synt:
            return False
        if self.synt == "PP" and chunk.fs.handle not in self.preps:
            return False
        return True


@dataclass(frozen=True)
class SubcatModel:
    """A named frame for a lemma: an ordered list of role slots."""

    lemma: str
    name: str
    roles: tuple[RoleSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "roles", tuple(self.roles))
        if not self.roles:
            raise ValueError(f"model {self.lemma}/{self.name} has no roles")
        names = [r.comp for r in self.roles]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate role names in model {self.lemma}/{self.name}")

    def role(self, comp: str) -> RoleSpec:
        for r in self.roles:
            if r.comp == comp:
                return r
        raise KeyError(f"model {self.lemma}/{self.name} has no role {comp!r}")


@dataclass(frozen=True)
class Lexicon:
    """All subcategorization models, looked up by head lemma."""

    models: tuple[SubcatModel, ...]

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(self.models))
        keys = [(m.lemma, m.name) for m in self.models]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate (lemma, model name) pair in lexicon")

    def verb_models(self, lemma: str) -> tuple[SubcatModel, ...]:
        return tuple(m for m in self.models if m.lemma == lemma)

    def noun_models(self) -> tuple[SubcatModel, ...]:
        """Frames applied to every NP/PP chunk (wildcard lemma entries)."""
        return tuple(m for m in self.models if m.lemma == WILDCARD_LEMMA)


class Ontology:
    """Tree of semantic labels rooted at ``Top``.

    Built from child -> parent links; ``Top`` itself never appears as a
    child.  Lookup of an unknown label is an error rather than a miss, so
    typos in lexicons and sentence files surface early.
    """

    root = ONTOLOGY_ROOT

    def __init__(self, parent: Mapping[str, str]):
        self._parent = dict(parent)
        if self.root in self._parent:
            raise ValueError("the root label cannot have a parent")
        self._labels = {self.root} | set(self._parent) | set(self._parent.values())
        for label in self._parent:
            seen = set()
            node = label
            while node != self.root:
                if node in seen:
                    raise ValueError(f"cycle in ontology at label {node!r}")
                seen.add(node)
                if node not in self._parent:
                    raise ValueError(f"label {node!r} is not connected to the root")
                node = self._parent[node]

    @property
    def labels(self) -> frozenset:
        return frozenset(self._labels)

    def __contains__(self, label: str) -> bool:
        return label in self._labels

    def _check(self, label: str):
        if label not in self._labels:
            raise ValueError(f"unknown semantic label {label!r}")

    def subsumes(self, general: str, specific: str) -> bool:
        """True iff ``general`` lies on the path from ``specific`` up to
        the root, the label itself included."""
        self._check(general)
        self._check(specific)
        node = specific
        while True:
            if node == general:
                return True
            if node == self.root:
                return False
            node = self._parent[node]


def similarity(fs: FeatureStructure, spec: RoleSpec,
               governor: FeatureStructure, onto: Ontology) -> float:
    """Goodness of fit between a candidate filler and a role slot.

    Exactly three features are compared and each mismatch costs 2/3:

    * semantics: mismatch iff no label of ``fs.sem`` is subsumed by the
      slot's required label;
    * gender and number: checked only for agreeing slots, and only when
      the feature is specified on both the filler and the governor.

    Unspecified features always count as matches, so the result is one of
    1, 1/3, -1/3 and -1.
    """
    mismatches = 0
    if not any(onto.subsumes(spec.sem, label) for label in fs.sem):
        mismatches += 1
    if spec.agree:
        if fs.gen is not None and governor.gen is not None and fs.gen != governor.gen:
            mismatches += 1
        if fs.num is not None and governor.num is not None and fs.num != governor.num:
            mismatches += 1
    return (3 - 2 * mismatches) / 3.0
