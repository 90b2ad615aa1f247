"""Deterministic random-problem generator for solver-vs-oracle checks.

Problems mirror the shape the compiler produces: every variable gets a
unary anchor constraint, and pairwise couplings are instantiated in both
directions (one directed constraint per target), the way the compiler
expands its symmetric families.  Weights come from a small fixed set.
"""

from __future__ import annotations

import random

from caserole.clp import (
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

WEIGHTS = (-1.0, -0.5, 0.5, 1.0)


def random_problem(rng: random.Random, max_vars: int = 6, max_labels: int = 4,
                   max_constraints: int = 15, max_pairs: int = 2,
                   anchors: int = 2) -> ClpProblem:
    """One random problem within the given bounds."""
    n = rng.randint(2, max_vars)
    variables = []
    for i in range(n):
        k = rng.randint(2, max_labels)
        if rng.random() < 0.5:
            labels = tuple(f"m{j}" for j in range(k - 1)) + (NONE,)
            kind = KIND_MODEL
        else:
            governor = (i + 1) % n
            labels = tuple(
                RoleRef(f"r{j}", governor, "m0") for j in range(k - 1)
            ) + (TOP,)
            kind = KIND_ROLE
        variables.append(Variable(i, kind, i, labels))

    constraints = []
    for _ in range(anchors):
        for v in variables:
            if len(constraints) >= max_constraints:
                break
            constraints.append(
                Constraint(v.id, rng.choice(v.labels), rng.choice(WEIGHTS))
            )
    budget = max(0, (max_constraints - len(constraints)) // 2)
    pairs = rng.randint(0, min(max_pairs, budget)) if budget else 0
    for _ in range(pairs):
        first = rng.randrange(n)
        first_label = rng.choice(variables[first].labels)
        second = rng.choice([j for j in range(n) if j != first])
        second_label = rng.choice(variables[second].labels)
        weight = rng.choice(WEIGHTS)
        constraints.append(Constraint(
            first, first_label, weight, (Literal(second, second_label),),
        ))
        constraints.append(Constraint(
            second, second_label, weight, (Literal(first, first_label),),
        ))
    return ClpProblem(variables, constraints)


def suite(seed: int, count: int, **kwargs) -> list:
    rng = random.Random(seed)
    return [random_problem(rng, **kwargs) for _ in range(count)]
