"""
Scoring predictions against a gold standard
===========================================

Model identification is scored with precision and recall; role filling
with the slot-filling measures derived from correct, incorrect, missing
and spurious counts.
"""

from caserole import SentenceAnnotation, render_report, score_models, score_roles

gold = [
    SentenceAnnotation(
        "s1",
        verb_models={4: "impersonal"},
        fills=((3, "se", 4), (5, "entity", 4), (2, "modif", 1)),
    ),
]

# A prediction that got the frame right, one fill right, one fill with
# the wrong role, missed one fill and invented another.
predicted = [
    SentenceAnnotation(
        "s1",
        verb_models={4: "impersonal"},
        fills=((3, "se", 4), (5, "destination", 4), (0, "modif", 1)),
    ),
]

models = score_models(gold, predicted)
roles = score_roles(gold, predicted)
print(render_report(models, roles))

# The counts behind the percentages.
c = roles.counts
print(f"cor={c.cor} inc={c.inc} mis={c.mis} spu={c.spu} "
      f"pos={c.pos} act={c.act}")

# A perfect prediction scores 100% on every defined measure.
print()
print(render_report(score_models(gold, gold), score_roles(gold, gold)))
