"""
Lexical attraction from cooccurrence counts
===========================================

Two measures estimate how likely a syntactic relation is.  Mutual
information over head-preposition pairs captures which prepositions a
head attracts; a context-vector cosine over head-head pairs captures
distributional relatedness of two heads.
"""

from pathlib import Path

from caserole.stats import load_counts, parse_counts

DATA = Path(__file__).resolve().parent.parent / "data"

store = load_counts(DATA / "counts.txt")
print(f"{store.ha_total} head-handle pair tokens, "
      f"{store.hh_total} head-head pair tokens\n")

# Positive mutual information: the pair occurs more than chance.
for head, handle in [("hablar", "de"), ("congreso", "de"), ("año", "de")]:
    print(f"MI({head}, {handle}) = "
          f"{store.mutual_information(head, handle):+.4f}")

# Cosine over shared cooccurrence contexts.
print()
for a, b in [("hablar", "pensión"), ("congreso", "partido"),
             ("hablar", "partido")]:
    print(f"cos({a}, {b}) = {store.cosine(a, b):.4f}")

# Unseen events yield 0 instead of blowing up; downstream code drops
# zero-weight constraints entirely.
print("\nMI(unseen pair): ", store.mutual_information("hablar", "hasta"))
print("cos(unseen head):", store.cosine("hablar", "asteroide"))

# Counts files are plain text and duplicates accumulate.
tiny = parse_counts([
    "# a tiny counts file",
    "HA congreso de 4",
    "HA congreso de 1",
])
print("\nmerged duplicate count:", tiny.ha_count("congreso", "de"))
