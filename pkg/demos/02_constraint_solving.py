"""
Weighted-constraint labelling and relaxation
============================================

A labelling problem assigns one label per variable.  Weighted
constraints say how compatible an assignment is with a context of other
assignments; relaxation labelling turns that into coupled probability
updates.  An exhaustive search over all complete assignments serves as
the oracle to compare against.
"""

from caserole import (
    NONE,
    ClpProblem,
    Constraint,
    Literal,
    Variable,
    brute_force,
    dump_problem,
    readout,
    score_assignment,
    solve,
)

# Two variables, three labels each (the last label is the null fallback
# every model variable carries).  Think of them as two words picking a
# reading each.
first = Variable(0, "model", 0, ("sun", "star", NONE))
second = Variable(1, "model", 1, ("shine", "fame", NONE))

constraints = [
    # unary preferences
    Constraint(0, "sun", 0.5),
    Constraint(1, "fame", 0.4),
    # a strong pact: star/fame reinforce each other
    Constraint(0, "star", 1.0, (Literal(1, "fame"),)),
    Constraint(1, "fame", 1.0, (Literal(0, "star"),)),
    # sun and fame clash
    Constraint(0, "sun", -1.0, (Literal(1, "fame"),)),
    Constraint(1, "fame", -1.0, (Literal(0, "sun"),)),
]

problem = ClpProblem([first, second], constraints)
print(dump_problem(problem))

result = solve(problem)
print(f"converged after {result.iterations} iterations")
for variable in problem.variables:
    cells = ", ".join(
        f"{label}={prob:.3f}"
        for label, prob in zip(variable.labels, result.state[variable.id])
    )
    print(f"  variable {variable.id}: {cells}")

chosen = readout(problem, result.state)
print("relaxation picks:", chosen)
print("its score:       ", score_assignment(problem, chosen))

# The oracle enumerates all 9 assignments.
exact, best = brute_force(problem)
print("oracle picks:    ", exact)
print("oracle score:    ", best)
