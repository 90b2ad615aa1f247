"""
Analyzing a chunked sentence end to end
=======================================

The sample sentence "Este año en el congreso del partido se habló de
las pensiones" arrives as six chunks.  The analyzer generates candidate
frames and roles for each chunk, compiles them into a weighted
constraint problem and reads the most consistent assignment back out as
a case-role forest.
"""

from pathlib import Path

from caserole import analyze_sentence, generate_candidates
from caserole.io import load_lexicon, load_ontology, load_sentences
from caserole.stats import load_counts

DATA = Path(__file__).resolve().parent.parent / "data"

lexicon = load_lexicon(DATA / "lexicon.json")
onto = load_ontology(DATA / "ontology.tsv")
store = load_counts(DATA / "counts.txt")
sentence = load_sentences(DATA / "sentences.json")[0]

heads = {c.id: c.fs.head for c in sentence.chunks}
print("chunks:", ", ".join(f"{c.id}:{heads[c.id]}" for c in sentence.chunks))

# Candidate generation applies the hard category/preposition filters.
candidates = generate_candidates(sentence, lexicon, onto)
for chunk in sentence.chunks:
    models = ", ".join(candidates.model_labels(chunk.id))
    roles = ", ".join(str(r) for r in candidates.role_labels(chunk.id))
    print(f"  {heads[chunk.id]:9s} models: {models:28s} roles: {roles}")

# Full analysis: compile, relax, read out, assemble.
result = analyze_sentence(sentence, lexicon, onto, store=store)
problem = result.compiled.problem
print(f"\n{len(problem.variables)} variables, "
      f"{len(problem.constraints)} constraints, "
      f"converged after {result.solve_result.iterations} iterations")

structure = result.structure
for instance in structure.instances:
    fills = ", ".join(
        f"{role}={heads[dep]}" for role, dep in sorted(instance.fills.items())
    )
    print(f"  {heads[instance.governor]} uses {instance.model}: {fills}")
print("  standalone:", ", ".join(heads[cid] for cid in structure.standalone))
for warning in structure.warnings:
    print("  note:", warning)
