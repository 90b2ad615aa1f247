"""End-to-end sentence analysis: compile, solve, read out, assemble.

The assembled structure is a forest: chunks that selected a frame become
instances with their role fills; chunks playing no role and using no
frame are standalone.  Structurally inconsistent readouts (several top
chunks, unfilled compulsory slots, direct cycles, orphaned or colliding
fills) are reported as warnings and the structure is emitted as-is.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .clp import (
    NONE,
    TOP,
    RoleRef,
    SolveResult,
    SolverConfig,
    null_biased_state,
    readout,
    solve,
)
from .compile import CompiledProblem, CompilerConfig, build_problem
from .model import Lexicon, Ontology, Sentence
from .stats import CooccurrenceStore

#: Initial probability share of the null labels relative to a content
#: label.  Null analyses are fallbacks; seeding them below parity keeps
#: mutually supporting content labels alive long enough to lock in.
NULL_PRIOR = 0.05


@dataclass
class ModelInstance:
    governor: int
    model: str
    fills: dict = field(default_factory=dict)


@dataclass
class CaseRoleStructure:
    sentence_id: str
    instances: list
    standalone: list
    warnings: list


def assemble(sentence: Sentence, compiled: CompiledProblem,
             assignment: dict) -> CaseRoleStructure:
    """Turn a hard assignment into a case-role forest.

    A role fill attaches only when the governor actually chose the frame
    the role belongs to; otherwise the dependent is reported standalone
    with a warning.  Warnings never suppress output.
    """
    model_of = {c.id: assignment[compiled.model_var[c.id]] for c in sentence.chunks}
    role_of = {c.id: assignment[compiled.role_var[c.id]] for c in sentence.chunks}

    warnings = []
    instances = {
        c.id: ModelInstance(governor=c.id, model=model_of[c.id])
        for c in sentence.chunks if model_of[c.id] != NONE
    }

    standalone = []
    for chunk in sentence.chunks:
        role = role_of[chunk.id]
        if role == TOP:
            if model_of[chunk.id] == NONE:
                standalone.append(chunk.id)
            continue
        assert isinstance(role, RoleRef)
        if model_of[role.governor] != role.model:
            warnings.append(
                f"chunk {chunk.id} plays {role} but chunk {role.governor} "
                f"selected model {model_of[role.governor]}; left standalone"
            )
            standalone.append(chunk.id)
            continue
        fills = instances[role.governor].fills
        if role.role in fills:
            warnings.append(
                f"role {role} filled by chunks {fills[role.role]} and "
                f"{chunk.id}; keeping the first, chunk {chunk.id} standalone"
            )
            standalone.append(chunk.id)
            continue
        fills[role.role] = chunk.id

    tops = [c.id for c in sentence.chunks if role_of[c.id] == TOP]
    if len(tops) > 1:
        warnings.append(f"multiple top chunks: {tops}")

    for instance in instances.values():
        model = next(
            m for m in compiled.candidates.models[instance.governor]
            if m.name == instance.model
        )
        for spec in model.roles:
            if not spec.optional and spec.comp not in instance.fills:
                warnings.append(
                    f"compulsory role {spec.comp} of chunk "
                    f"{instance.governor} model {instance.model} is unfilled"
                )

    for chunk in sentence.chunks:
        first = role_of[chunk.id]
        if not isinstance(first, RoleRef):
            continue
        second = role_of[first.governor]
        if isinstance(second, RoleRef) and second.governor == chunk.id \
                and first.governor > chunk.id:
            warnings.append(
                f"direct cycle between chunks {chunk.id} and {first.governor}"
            )

    ordered = [instances[c.id] for c in sentence.chunks if c.id in instances]
    return CaseRoleStructure(
        sentence_id=sentence.id,
        instances=ordered,
        standalone=standalone,
        warnings=warnings,
    )


@dataclass
class AnalysisResult:
    structure: CaseRoleStructure
    compiled: CompiledProblem
    solve_result: SolveResult
    assignment: dict


def analyze_sentence(sentence: Sentence, lexicon: Lexicon, onto: Ontology,
                     store: CooccurrenceStore | None = None,
                     compiler_config: CompilerConfig | None = None,
                     solver_config: SolverConfig | None = None,
                     on_iteration=None) -> AnalysisResult:
    """Full pipeline for one sentence."""
    compiled = build_problem(sentence, lexicon, onto, store=store,
                             config=compiler_config)
    result = solve(
        compiled.problem,
        solver_config,
        on_iteration=on_iteration,
        initial=null_biased_state(compiled.problem, NULL_PRIOR),
    )
    assignment = readout(compiled.problem, result.state)
    structure = assemble(sentence, compiled, assignment)
    return AnalysisResult(structure, compiled, result, assignment)
