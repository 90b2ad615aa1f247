"""Compile a sentence plus knowledge bases into a labelling problem.

Candidate generation applies the hard unary filters (category and
preposition); semantic and agreement fit is left to the soft similarity
weights.  Constraint families:

subcategorization
  role-uniqueness, model-support, model-inconsistence, role-support,
  role-inconsistence, pp-attachment
structural
  top-uniqueness, top-existence, no-cycles, none-support
statistical
  stat-mi (head-handle mutual information), stat-cosine (head-head
  context cosine)
"""

from __future__ import annotations

from dataclasses import dataclass

from .clp import (
    KIND_MODEL,
    KIND_ROLE,
    NONE,
    TOP,
    ClpProblem,
    Constraint,
    Literal,
    RoleRef,
    Variable,
)
from .model import Lexicon, Ontology, Sentence, SubcatModel, similarity
from .stats import CooccurrenceStore


@dataclass(frozen=True)
class CompilerConfig:
    stat_enabled: bool = True
    #: Mutual information is divided by this and clamped to [-1, 1].
    stat_scale: float = 5.0
    top_existence_weight: float = 1.0
    pp_distance_norm: str = "sentence_length"

    def __post_init__(self):
        if self.stat_scale <= 0:
            raise ValueError("stat_scale must be positive")
        if self.pp_distance_norm != "sentence_length":
            raise ValueError(
                f"unsupported pp_distance_norm {self.pp_distance_norm!r}"
            )


@dataclass(frozen=True)
class CandidateSet:
    """Per-chunk model candidates (surviving frames) and role candidates
    (concrete slots in other chunks' frames).  Null labels are appended
    when the variables are built."""

    models: dict
    roles: dict

    def model_labels(self, chunk_id: int) -> tuple:
        return tuple(m.name for m in self.models[chunk_id]) + (NONE,)

    def role_labels(self, chunk_id: int) -> tuple:
        return self.roles[chunk_id] + (TOP,)


def _chunk_models(chunk, lexicon: Lexicon) -> tuple[SubcatModel, ...]:
    if chunk.fs.pos == "VP":
        return lexicon.verb_models(chunk.fs.head)
    if chunk.fs.pos in ("NP", "PP"):
        return lexicon.noun_models()
    return ()


def generate_candidates(sentence: Sentence, lexicon: Lexicon,
                        onto: Ontology) -> CandidateSet:
    """Filtered candidate labels for every chunk.

    A frame survives only if each of its compulsory slots has at least
    one admissible filler among the other chunks.  A role candidate
    (slot, governor, frame) is kept iff the chunk passes the slot's hard
    filter and the frame survived for the governor.
    """
    for chunk in sentence.chunks:
        for label in chunk.fs.sem:
            if label not in onto:
                raise ValueError(
                    f"chunk {chunk.id} of sentence {sentence.id!r} uses "
                    f"unknown semantic label {label!r}"
                )

    models = {}
    for chunk in sentence.chunks:
        surviving = []
        for model in _chunk_models(chunk, lexicon):
            feasible = all(
                any(spec.admits(other)
                    for other in sentence.chunks if other.id != chunk.id)
                for spec in model.roles if not spec.optional
            )
            if feasible:
                surviving.append(model)
        models[chunk.id] = tuple(surviving)

    roles = {}
    for chunk in sentence.chunks:
        candidates = []
        for governor in sentence.chunks:
            if governor.id == chunk.id:
                continue
            for model in models[governor.id]:
                for spec in model.roles:
                    if spec.admits(chunk):
                        candidates.append(
                            RoleRef(spec.comp, governor.id, model.name)
                        )
        roles[chunk.id] = tuple(candidates)

    return CandidateSet(models=models, roles=roles)


def _variable_ids(sentence: Sentence) -> tuple[dict, dict]:
    model_var = {}
    role_var = {}
    for position, chunk in enumerate(sentence.chunks):
        model_var[chunk.id] = 2 * position
        role_var[chunk.id] = 2 * position + 1
    return model_var, role_var


def _fillers(candidates: CandidateSet, ref: RoleRef, sentence: Sentence):
    """Chunk ids whose role candidates include the given slot."""
    return [
        c.id for c in sentence.chunks
        if ref in candidates.roles.get(c.id, ())
    ]


def compile_subcat(sentence: Sentence, candidates: CandidateSet,
                   lexicon: Lexicon, onto: Ontology) -> list:
    """Constraints derived from the subcategorization frames."""
    model_var, role_var = _variable_ids(sentence)
    constraints = []

    # Role uniqueness: two chunks must not fill the same slot.
    for governor in sentence.chunks:
        for model in candidates.models[governor.id]:
            for spec in model.roles:
                ref = RoleRef(spec.comp, governor.id, model.name)
                fillers = _fillers(candidates, ref, sentence)
                for target in fillers:
                    for other in fillers:
                        if other == target:
                            continue
                        constraints.append(Constraint(
                            role_var[target], ref, -1.0,
                            (Literal(role_var[other], ref),),
                            tag="role-uniqueness",
                        ))

    # Model support: any filled slot supports the frame it belongs to,
    # weighted by how well the filler fits the slot.  Model inconsistence:
    # a frame is penalized while a compulsory slot has no chosen filler.
    for governor in sentence.chunks:
        for model in candidates.models[governor.id]:
            for spec in model.roles:
                ref = RoleRef(spec.comp, governor.id, model.name)
                fillers = _fillers(candidates, ref, sentence)
                for filler in fillers:
                    fit = similarity(
                        sentence.chunk(filler).fs, spec, governor.fs, onto
                    )
                    constraints.append(Constraint(
                        model_var[governor.id], model.name, fit,
                        (Literal(role_var[filler], ref),),
                        tag="model-support",
                    ))
                if not spec.optional:
                    context = tuple(
                        Literal(role_var[filler], ref, negated=True)
                        for filler in fillers
                    )
                    constraints.append(Constraint(
                        model_var[governor.id], model.name, -1.0, context,
                        tag="model-inconsistence",
                    ))

    # Role support / inconsistence: a role assignment stands or falls
    # with its governor's frame.  Support is weighted by similarity.
    for chunk in sentence.chunks:
        for ref in candidates.roles[chunk.id]:
            governor = sentence.chunk(ref.governor)
            model = next(
                m for m in candidates.models[ref.governor] if m.name == ref.model
            )
            spec = model.role(ref.role)
            weight = similarity(chunk.fs, spec, governor.fs, onto)
            constraints.append(Constraint(
                role_var[chunk.id], ref, weight,
                (Literal(model_var[ref.governor], ref.model),),
                tag="role-support",
            ))
            constraints.append(Constraint(
                role_var[chunk.id], ref, -1.0,
                (Literal(model_var[ref.governor], ref.model, negated=True),),
                tag="role-inconsistence",
            ))

    # Local PP attachment: prepositional phrases prefer near governors.
    for chunk in sentence.chunks:
        if chunk.fs.pos != "PP":
            continue
        for ref in candidates.roles[chunk.id]:
            governor = sentence.chunk(ref.governor)
            distance = abs(chunk.start - governor.start)
            constraints.append(Constraint(
                role_var[chunk.id], ref,
                -distance / sentence.token_count,
                tag="pp-attachment",
            ))

    return constraints


def compile_structural(sentence: Sentence, candidates: CandidateSet,
                       config: CompilerConfig | None = None) -> list:
    """Constraints forcing a tree-like solution."""
    config = config or CompilerConfig()
    model_var, role_var = _variable_ids(sentence)
    constraints = []
    chunks = sentence.chunks

    # TOP uniqueness and existence.
    for target in chunks:
        for other in chunks:
            if other.id == target.id:
                continue
            constraints.append(Constraint(
                role_var[target.id], TOP, -1.0,
                (Literal(role_var[other.id], TOP),),
                tag="top-uniqueness",
            ))
    for target in chunks:
        constraints.append(Constraint(
            role_var[target.id], TOP, config.top_existence_weight,
            tag="top-existence",
        ))

    # No direct cycles: chunks must not fill roles in each other's frames.
    for first in chunks:
        for second in chunks:
            if second.id == first.id:
                continue
            for ref_first in candidates.roles[first.id]:
                if ref_first.governor != second.id:
                    continue
                for ref_second in candidates.roles[second.id]:
                    if ref_second.governor != first.id:
                        continue
                    constraints.append(Constraint(
                        role_var[first.id], ref_first, -1.0,
                        (Literal(role_var[second.id], ref_second),),
                        tag="no-cycles",
                    ))

    # NONE support: using no frame is compatible with nothing filling any
    # of the chunk's slots.  Without it NONE could never compete.
    for target in chunks:
        context = []
        for other in chunks:
            for ref in candidates.roles[other.id]:
                if ref.governor == target.id:
                    context.append(Literal(role_var[other.id], ref, negated=True))
        constraints.append(Constraint(
            model_var[target.id], NONE, 1.0, tuple(context),
            tag="none-support",
        ))

    return constraints


def compile_statistical(sentence: Sentence, candidates: CandidateSet,
                        store: CooccurrenceStore,
                        config: CompilerConfig | None = None) -> list:
    """Lexical attraction constraints; zero-weight ones are dropped."""
    config = config or CompilerConfig()
    if not config.stat_enabled:
        return []
    _, role_var = _variable_ids(sentence)
    constraints = []
    for chunk in sentence.chunks:
        for ref in candidates.roles[chunk.id]:
            governor = sentence.chunk(ref.governor)
            if chunk.fs.handle:
                raw = store.mutual_information(governor.fs.head, chunk.fs.handle)
                weight = max(-1.0, min(1.0, raw / config.stat_scale))
                if weight != 0.0:
                    constraints.append(Constraint(
                        role_var[chunk.id], ref, weight, tag="stat-mi",
                    ))
            weight = store.cosine(governor.fs.head, chunk.fs.head)
            if weight != 0.0:
                constraints.append(Constraint(
                    role_var[chunk.id], ref, weight, tag="stat-cosine",
                ))
    return constraints


@dataclass(frozen=True)
class CompiledProblem:
    problem: ClpProblem
    candidates: CandidateSet
    model_var: dict
    role_var: dict


def build_problem(sentence: Sentence, lexicon: Lexicon, onto: Ontology,
                  store: CooccurrenceStore | None = None,
                  config: CompilerConfig | None = None) -> CompiledProblem:
    """Generate candidates and assemble the full labelling problem."""
    config = config or CompilerConfig()
    candidates = generate_candidates(sentence, lexicon, onto)
    model_var, role_var = _variable_ids(sentence)

    variables = []
    for chunk in sentence.chunks:
        variables.append(Variable(
            model_var[chunk.id], KIND_MODEL, chunk.id,
            candidates.model_labels(chunk.id),
        ))
        variables.append(Variable(
            role_var[chunk.id], KIND_ROLE, chunk.id,
            candidates.role_labels(chunk.id),
        ))

    constraints = compile_subcat(sentence, candidates, lexicon, onto)
    constraints += compile_structural(sentence, candidates, config)
    if store is not None and config.stat_enabled:
        constraints += compile_statistical(sentence, candidates, store, config)

    problem = ClpProblem(variables, constraints)
    return CompiledProblem(problem, candidates, model_var, role_var)
