"""
Feature structures, the label ontology and role-slot similarity
===============================================================

Chunks carry attribute-value feature structures; role slots state what
a filler should look like.  Similarity compares the two, feature by
feature, and is the soft counterpart of the hard category/preposition
filters.
"""

from caserole import FeatureStructure, Ontology, RoleSpec, similarity

# A small label tree: every label hangs below the root "Top".
onto = Ontology({
    "Human": "Top",
    "Group": "Top",
    "Time": "Top",
    "Event": "Top",
    "Communication": "Event",
})

print("Top subsumes Human:        ", onto.subsumes("Top", "Human"))
print("Event subsumes Communication:", onto.subsumes("Event", "Communication"))
print("Human subsumes Time:       ", onto.subsumes("Human", "Time"))

# Two chunks from a chunked sentence: a temporal NP and the verb.
year = FeatureStructure(head="año", pos="NP", num="sg", gen="m",
                        sem=frozenset({"Time"}))
verb = FeatureStructure(head="hablar", pos="VP", num="sg", per=3,
                        sem=frozenset({"Communication"}))

# A subject-like slot: an NP that should denote a Human and agree with
# the verb in number and gender.
subject_slot = RoleSpec(synt="NP", preps=frozenset(), comp="starter",
                        sem="Human", agree=True, optional=True)

# The year is the right category but the wrong sort of thing: exactly
# one of the three checked features (semantics, gender, number)
# mismatches, so the similarity drops from 1 to 1/3.
print("\nsimilarity(año, starter slot):",
      similarity(year, subject_slot, verb, onto))

# A prepositional slot with no semantic or agreement demands accepts a
# pension-denoting PP perfectly.
pension = FeatureStructure(head="pensión", handle="de", pos="PP", num="pl")
about_slot = RoleSpec(synt="PP", preps=frozenset({"de", "sobre"}),
                      comp="entity", sem="Top", agree=False, optional=True)
print("similarity(pensión, entity slot):",
      similarity(pension, about_slot, verb, onto))

# The hard filter is separate: it only checks category and preposition.
from caserole import Chunk

pension_chunk = Chunk(0, pension, (9, 11))
location = Chunk(1, FeatureStructure(head="congreso", handle="en", pos="PP"),
                 (2, 5))
print("\nentity slot admits 'de las pensiones':", about_slot.admits(pension_chunk))
print("entity slot admits 'en el congreso': ", about_slot.admits(location))
