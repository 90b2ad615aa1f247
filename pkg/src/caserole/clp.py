"""Generic weighted-constraint labelling problems and their solvers.

A problem is a set of variables, each with an ordered candidate label
list, plus weighted constraints.  A constraint supports (positive weight)
or penalizes (negative weight) one target assignment, gated by a
conjunction of possibly negated context literals.

Two solvers are provided: iterative relaxation labelling over one
probability distribution per variable, and an exhaustive search used as
an independent oracle in tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

import numpy as np

#: Null label of model variables: the chunk instantiates no frame.
NONE = "NONE"
#: Null label of role variables: the chunk plays no role in any other chunk.
TOP = "TOP"

KIND_MODEL = "model"
KIND_ROLE = "role"


class RoleRef(NamedTuple):
    """A concrete role slot: role name, governor chunk id, governor model."""

    role: str
    governor: int
    model: str

    def __str__(self) -> str:
        return f"{self.role}/{self.governor}/{self.model}"


Label = Union[str, RoleRef]


def format_label(label: Label) -> str:
    return str(label)


@dataclass(frozen=True)
class Variable:
    id: int
    kind: str
    owner: int
    labels: tuple[Label, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.kind not in (KIND_MODEL, KIND_ROLE):
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if not self.labels:
            raise ValueError(f"variable {self.id} has no candidate labels")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"variable {self.id} has duplicate labels")
        if self.kind == KIND_MODEL and NONE not in self.labels:
            raise ValueError(f"model variable {self.id} must offer {NONE}")
        if self.kind == KIND_ROLE and TOP not in self.labels:
            raise ValueError(f"role variable {self.id} must offer {TOP}")
        for label in self.labels:
            if isinstance(label, RoleRef) and label.governor == self.owner:
                raise ValueError(
                    f"variable {self.id}: role label {label} points at its own chunk"
                )


@dataclass(frozen=True)
class Literal:
    """A (variable, label) assignment, possibly negated, used as context."""

    var: int
    label: Label
    negated: bool = False


@dataclass(frozen=True)
class Constraint:
    """Weighted compatibility statement for one target assignment."""

    target_var: int
    target_label: Label
    weight: float
    context: tuple[Literal, ...] = ()
    tag: str = ""

    def __post_init__(self):
        object.__setattr__(self, "context", tuple(self.context))
        object.__setattr__(self, "weight", float(self.weight))
        if not math.isfinite(self.weight):
            raise ValueError("constraint weight must be finite")


class ClpProblem:
    """Immutable bundle of variables and constraints, with lookup caches."""

    def __init__(self, variables, constraints):
        self.variables = tuple(variables)
        self.constraints = tuple(constraints)
        self._by_id = {}
        for v in self.variables:
            if v.id in self._by_id:
                raise ValueError(f"duplicate variable id {v.id}")
            self._by_id[v.id] = v
        self._index = {
            v.id: {label: i for i, label in enumerate(v.labels)}
            for v in self.variables
        }
        for c in self.constraints:
            self._check_ref(c.target_var, c.target_label)
            for lit in c.context:
                if lit.var == c.target_var:
                    raise ValueError(
                        "constraint context may not mention its own target variable"
                    )
                self._check_ref(lit.var, lit.label)
        targets = {}
        weight_sum = {v.id: 0.0 for v in self.variables}
        for c in self.constraints:
            targets.setdefault((c.target_var, c.target_label), []).append(c)
            weight_sum[c.target_var] += abs(c.weight)
        self._targets = {key: tuple(cs) for key, cs in targets.items()}
        # Single problem-wide support normalizer (the largest per-variable
        # total absolute weight, at least 1).  Using one denominator for
        # all variables keeps update speeds comparable, so lightly
        # constrained variables cannot outrun the evidence carried by
        # heavily constrained ones.
        self._denominator = max(
            [1.0] + [total for total in weight_sum.values()]
        )

    def _check_ref(self, var: int, label: Label):
        if var not in self._by_id:
            raise ValueError(f"constraint references unknown variable {var}")
        if label not in self._index[var]:
            raise ValueError(
                f"label {format_label(label)} is not a candidate of variable {var}"
            )

    def variable(self, var_id: int) -> Variable:
        return self._by_id[var_id]

    def label_index(self, var_id: int, label: Label) -> int:
        return self._index[var_id][label]

    def constraints_on(self, var_id: int, label: Label):
        return self._targets.get((var_id, label), ())

    @property
    def normalizer(self) -> float:
        return self._denominator


#: Probability state: one distribution (numpy array over the candidate
#: list) per variable id.
State = dict


class SolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    max_iterations: int = 500
    epsilon: float = 1e-4

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")


class SolveResult(NamedTuple):
    state: State
    iterations: int
    converged: bool


def uniform_state(problem: ClpProblem) -> State:
    return {
        v.id: np.full(len(v.labels), 1.0 / len(v.labels))
        for v in problem.variables
    }


def null_biased_state(problem: ClpProblem, null_weight: float = 0.05) -> State:
    """Informed prior: the null labels (NONE/TOP) start with a reduced
    share, since they are fallback analyses rather than real candidates.
    Content labels keep equal shares."""
    if not 0.0 < null_weight <= 1.0:
        raise ValueError("null_weight must be in (0, 1]")
    state: State = {}
    for v in problem.variables:
        weights = np.array([
            null_weight if label in (NONE, TOP) else 1.0
            for label in v.labels
        ])
        state[v.id] = weights / weights.sum()
    return state


def validate_state(problem: ClpProblem, state: State, tol: float = 1e-9):
    """Raise unless every distribution is non-negative and sums to one."""
    for v in problem.variables:
        dist = state[v.id]
        if len(dist) != len(v.labels):
            raise ValueError(f"state of variable {v.id} has the wrong arity")
        if np.any(dist < 0):
            raise ValueError(f"negative probability on variable {v.id}")
        if abs(float(dist.sum()) - 1.0) > tol:
            raise ValueError(f"distribution of variable {v.id} does not sum to 1")


def _literal_probability(problem: ClpProblem, state: State, lit: Literal) -> float:
    p = state[lit.var][problem.label_index(lit.var, lit.label)]
    return 1.0 - p if lit.negated else p


def support(problem: ClpProblem, state: State, var: int, label: Label) -> float:
    """Raw support: sum over constraints targeting (var, label) of the
    weight times the probability of the context conjunction."""
    total = 0.0
    for c in problem.constraints_on(var, label):
        product = 1.0
        for lit in c.context:
            product *= _literal_probability(problem, state, lit)
        total += c.weight * product
    return total


def iterate(problem: ClpProblem, state: State) -> tuple[State, float]:
    """One synchronous relaxation step.

    Raw supports are scaled by the problem-wide normalizer, which bounds
    them to [-1, 1], so the multiplicative update factor 1 + support
    stays non-negative.  Returns the new state and the largest absolute
    per-label probability change.
    """
    new_state: State = {}
    max_delta = 0.0
    for v in problem.variables:
        dist = state[v.id]
        raw = np.array(
            [support(problem, state, v.id, label) for label in v.labels]
        )
        factors = 1.0 + np.clip(raw / problem.normalizer, -1.0, 1.0)
        weighted = dist * factors
        z = float(weighted.sum())
        if z <= 0.0:
            raise SolverError(
                f"all probability mass of variable {v.id} was annihilated"
            )
        updated = weighted / z
        delta = float(np.max(np.abs(updated - dist)))
        max_delta = max(max_delta, delta)
        new_state[v.id] = updated
    return new_state, max_delta


def solve(problem: ClpProblem, config: SolverConfig | None = None,
          on_iteration: Callable[[int, State, float], None] | None = None,
          initial: State | None = None) -> SolveResult:
    """Run relaxation until the largest probability change drops below
    epsilon or the iteration cap is hit.  Starts from the uniform state
    unless an explicit initial state is given."""
    config = config or SolverConfig()
    state = uniform_state(problem) if initial is None else dict(initial)
    if not problem.variables:
        return SolveResult(state, 0, True)
    for iteration in range(1, config.max_iterations + 1):
        state, max_delta = iterate(problem, state)
        if on_iteration is not None:
            on_iteration(iteration, state, max_delta)
        if max_delta < config.epsilon:
            return SolveResult(state, iteration, True)
    return SolveResult(state, config.max_iterations, False)


def readout(problem: ClpProblem, state: State) -> dict:
    """Most probable label per variable; ties go to the earliest candidate."""
    return {
        v.id: v.labels[int(np.argmax(state[v.id]))]
        for v in problem.variables
    }


def score_assignment(problem: ClpProblem, assignment: dict) -> float:
    """Total weight of constraints whose target and full context hold."""
    total = 0.0
    for c in problem.constraints:
        if assignment[c.target_var] != c.target_label:
            continue
        if all((assignment[lit.var] == lit.label) != lit.negated
               for lit in c.context):
            total += c.weight
    return total


def brute_force(problem: ClpProblem, cap: int = 10_000_000) -> tuple[dict, float]:
    """Exhaustively score every complete assignment and return the best.

    Ties are broken lexicographically: variables in id order, labels in
    candidate order.  Refuses to enumerate more than ``cap`` assignments.
    """
    variables = sorted(problem.variables, key=lambda v: v.id)
    sizes = [len(v.labels) for v in variables]
    total = math.prod(sizes)
    if total > cap:
        raise ValueError(
            f"assignment space of size {total} exceeds the cap of {cap}"
        )
    compiled = []
    position = {v.id: i for i, v in enumerate(variables)}
    for c in problem.constraints:
        tpos = position[c.target_var]
        tidx = problem.label_index(c.target_var, c.target_label)
        ctx = tuple(
            (position[lit.var],
             problem.label_index(lit.var, lit.label),
             lit.negated)
            for lit in c.context
        )
        compiled.append((tpos, tidx, ctx, c.weight))

    best_combo = None
    best_score = -math.inf
    for combo in itertools.product(*[range(n) for n in sizes]):
        score = 0.0
        for tpos, tidx, ctx, weight in compiled:
            if combo[tpos] != tidx:
                continue
            if all((combo[pos] == idx) != neg for pos, idx, neg in ctx):
                score += weight
        if score > best_score:
            best_score = score
            best_combo = combo
    assignment = {
        v.id: v.labels[best_combo[i]] for i, v in enumerate(variables)
    }
    return assignment, (0.0 if best_score == -math.inf else best_score)


def dump_problem(problem: ClpProblem) -> str:
    """Plain-text dump: one VAR line per variable, one CON line per
    constraint, in deterministic order."""
    lines = []
    for v in sorted(problem.variables, key=lambda v: v.id):
        labels = " ".join(format_label(label) for label in v.labels)
        lines.append(f"VAR {v.id} {v.kind} {v.owner} {labels}")
    for c in problem.constraints:
        parts = [f"CON {c.weight} TARGET {c.target_var}={format_label(c.target_label)}"]
        if c.context:
            ctx = " ".join(
                ("¬" if lit.negated else "") + f"{lit.var}={format_label(lit.label)}"
                for lit in c.context
            )
            parts.append(f"CTX {ctx}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")
