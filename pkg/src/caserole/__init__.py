"""caserole: case-role analysis of chunked sentences.

Sentences arrive as chunks with feature structures.  Subcategorization
frames, structural wellformedness and lexical attraction statistics are
compiled into a weighted-constraint labelling problem with one model and
one role variable per chunk; relaxation labelling picks the most
consistent assignment, which is assembled into a case-role forest.
"""

from .clp import (
    NONE,
    TOP,
    ClpProblem,
    Constraint,
    Literal,
    RoleRef,
    SolveResult,
    SolverConfig,
    SolverError,
    Variable,
    brute_force,
    dump_problem,
    iterate,
    null_biased_state,
    readout,
    score_assignment,
    solve,
    support,
    uniform_state,
    validate_state,
)
from .compile import (
    CandidateSet,
    CompiledProblem,
    CompilerConfig,
    build_problem,
    compile_statistical,
    compile_structural,
    compile_subcat,
    generate_candidates,
)
from .evaluation import (
    ModelScore,
    RoleCounts,
    ScoreReport,
    SentenceAnnotation,
    render_report,
    score_models,
    score_roles,
)
from .model import (
    Chunk,
    FeatureStructure,
    Lexicon,
    Ontology,
    RoleSpec,
    Sentence,
    SubcatModel,
    similarity,
)
from .pipeline import (
    AnalysisResult,
    CaseRoleStructure,
    ModelInstance,
    analyze_sentence,
    assemble,
)
from .stats import CooccurrenceStore, load_counts, parse_counts

__version__ = "0.1.0"

__all__ = [
    "AnalysisResult",
    "CandidateSet",
    "CaseRoleStructure",
    "Chunk",
    "ClpProblem",
    "CompiledProblem",
    "CompilerConfig",
    "Constraint",
    "CooccurrenceStore",
    "FeatureStructure",
    "Lexicon",
    "Literal",
    "ModelInstance",
    "ModelScore",
    "NONE",
    "Ontology",
    "RoleCounts",
    "RoleRef",
    "RoleSpec",
    "ScoreReport",
    "Sentence",
    "SentenceAnnotation",
    "SolveResult",
    "SolverConfig",
    "SolverError",
    "SubcatModel",
    "TOP",
    "Variable",
    "analyze_sentence",
    "assemble",
    "brute_force",
    "build_problem",
    "compile_statistical",
    "compile_structural",
    "compile_subcat",
    "dump_problem",
    "generate_candidates",
    "iterate",
    "load_counts",
    "null_biased_state",
    "parse_counts",
    "readout",
    "render_report",
    "score_assignment",
    "score_models",
    "score_roles",
    "similarity",
    "solve",
    "support",
    "uniform_state",
    "validate_state",
]
